// Copyright 2026 The qjw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qjw/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qjw {

#ifdef QJW_BUILD_AVX2
const KernelTable* avx2_kernels_impl();

static bool cpu_has_avx2_fma() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
  return cpu_has_avx2_fma() ? avx2_kernels_impl() : nullptr;
}
#else
const KernelTable* avx2_kernels() { return nullptr; }
#endif

static const KernelTable* select() {
  const char* env = std::getenv("QJW_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

const KernelTable& kernels() {
  static const KernelTable* active = select();
  return *active;
}

std::string kernel_backend_name() { return kernels().name; }

}  // namespace qjw

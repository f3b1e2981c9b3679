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

#ifndef QJW_EIG_HPP
#define QJW_EIG_HPP

#include <vector>

#include "qjw/matrix.hpp"

namespace qjw {

struct EigResult {
  std::vector<double> values;  // descending
  Mat vectors;                 // columns are eigenvectors, ordering matches
};

// Eigendecomposition of a Hermitian matrix: a = V diag(values) V^dagger.
// Eigenvalues come back descending; degenerate groups are ordered by the
// first differing eigenvector component, lexicographic on (re, im), after
// each column's phase is fixed (largest-magnitude entry made real positive).
EigResult hermitian_eig(const Mat& a);

// Eigenvalues only, descending.
std::vector<double> hermitian_eigvals(const Mat& a);

double min_eigenvalue(const Mat& a);
bool is_psd(const Mat& a, double tol = 1e-9);

struct SvdResult {
  std::vector<double> singular_values;  // descending
  Mat u;                                // left singular vectors in columns
  Mat vt;                               // right singular vectors in rows
};

SvdResult svd(const Mat& a);

// Eigendecomposition of a real symmetric matrix stored as Mat with zero
// imaginary parts; values descending.
EigResult symmetric_eig(const Mat& a);

}  // namespace qjw

#endif

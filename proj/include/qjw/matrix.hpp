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

#ifndef QJW_MATRIX_HPP
#define QJW_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qjw/kernels.hpp"

namespace qjw {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Dense complex matrix, row-major. The arena for everything: states,
// effects, design elements, unitaries, embedded Jordan algebra elements.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cplx a);
  Mat operator+(const Mat& o) const { Mat r = *this; r += o; return r; }
  Mat operator-(const Mat& o) const { Mat r = *this; r -= o; return r; }
  Mat operator*(cplx a) const { Mat r = *this; r *= a; return r; }
  Mat operator-() const { return *this * cplx(-1.0); }

  Mat adjoint() const;
  Mat transpose() const;
  Mat conj() const;

  cplx trace() const;
  double norm_fro() const { return std::sqrt(kernels().nrm2sq(size(), data())); }
  double max_abs() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

inline Mat operator*(cplx a, const Mat& m) { return m * a; }

// C = A * B through the dispatched gemm kernel.
Mat matmul(const Mat& a, const Mat& b);
// C += A * B
void matmul_acc(const Mat& a, const Mat& b, Mat& c);
Mat operator*(const Mat& a, const Mat& b);

// Tr(a^dagger b), the Hilbert-Schmidt inner product.
cplx hs_inner(const Mat& a, const Mat& b);

Mat kron(const Mat& a, const Mat& b);

// a . b = (ab + ba)/2
Mat jordan_product(const Mat& a, const Mat& b);

bool is_hermitian(const Mat& a, double tol_scale = 1e-10);
void require_hermitian(const Mat& a, const std::string& who);

double distance_max(const Mat& a, const Mat& b);

// Direct sum of square complex matrices. Used wherever the ambient
// *-algebra is a sum of matrix blocks (universal representations and their
// tensor products); operations act blockwise so big composites never touch
// the zero off-diagonal blocks.
struct BlockShape {
  std::vector<std::size_t> sizes;  // block edge lengths
  bool operator==(const BlockShape& o) const { return sizes == o.sizes; }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto s : sizes) t += s;
    return t;
  }
  // complex dimension of the *-algebra: sum of squares
  std::size_t algebra_dim() const {
    std::size_t t = 0;
    for (auto s : sizes) t += s * s;
    return t;
  }
  std::string str() const;
};

class BlockMat {
 public:
  BlockMat() = default;
  explicit BlockMat(const BlockShape& shape) : shape_(shape) {
    for (auto s : shape.sizes) blocks_.emplace_back(s, s);
  }
  BlockMat(const BlockShape& shape, std::vector<Mat> blocks)
      : shape_(shape), blocks_(std::move(blocks)) {}

  static BlockMat identity(const BlockShape& shape) {
    BlockMat m(shape);
    for (std::size_t i = 0; i < m.blocks_.size(); ++i)
      m.blocks_[i] = Mat::identity(shape.sizes[i]);
    return m;
  }

  // Single dense block, shape {n}.
  static BlockMat dense(Mat m) {
    require(m.square(), "BlockMat::dense: block must be square");
    BlockShape s{{m.rows()}};
    std::vector<Mat> b;
    b.push_back(std::move(m));
    return BlockMat(s, std::move(b));
  }

  const BlockShape& shape() const { return shape_; }
  std::size_t nblocks() const { return blocks_.size(); }
  Mat& block(std::size_t i) { return blocks_[i]; }
  const Mat& block(std::size_t i) const { return blocks_[i]; }

  BlockMat& operator+=(const BlockMat& o);
  BlockMat& operator-=(const BlockMat& o);
  BlockMat& operator*=(cplx a);
  BlockMat operator+(const BlockMat& o) const { BlockMat r = *this; r += o; return r; }
  BlockMat operator-(const BlockMat& o) const { BlockMat r = *this; r -= o; return r; }
  BlockMat operator*(cplx a) const { BlockMat r = *this; r *= a; return r; }
  BlockMat operator-() const { return *this * cplx(-1.0); }

  BlockMat adjoint() const;
  BlockMat transpose() const;
  BlockMat conj() const;
  cplx trace() const;
  double norm_fro() const;

  // Dense embedding (block diagonal); for eigensolves and reports.
  Mat to_dense() const;

 private:
  BlockShape shape_;
  std::vector<Mat> blocks_;
};

BlockMat matmul(const BlockMat& a, const BlockMat& b);
BlockMat operator*(const BlockMat& a, const BlockMat& b);
cplx hs_inner(const BlockMat& a, const BlockMat& b);
BlockMat jordan_product(const BlockMat& a, const BlockMat& b);
bool is_hermitian(const BlockMat& a, double tol_scale = 1e-10);

// Tensor product of block direct sums: block (i, j) pairs ordered with the
// left factor index fastest-varying last, i.e. result block index = i * nb + j.
BlockShape kron_shape(const BlockShape& a, const BlockShape& b);
BlockMat kron(const BlockMat& a, const BlockMat& b);

// Direct sum concatenation.
BlockShape oplus(const BlockShape& a, const BlockShape& b);
BlockMat oplus(const BlockMat& a, const BlockMat& b);

}  // namespace qjw

#endif

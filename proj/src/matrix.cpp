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

#include "qjw/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qjw {

Mat& Mat::operator+=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat::operator+=: shape mismatch");
  kernels().caxpy(size(), 1.0, o.data(), data());
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "Mat::operator-=: shape mismatch");
  kernels().caxpy(size(), -1.0, o.data(), data());
  return *this;
}

Mat& Mat::operator*=(cplx a) {
  for (auto& v : data_) v *= a;
  return *this;
}

Mat Mat::adjoint() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat Mat::conj() const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < size(); ++i) r.data()[i] = std::conj(data_[i]);
  return r;
}

cplx Mat::trace() const {
  require(square(), "Mat::trace: not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
  Mat c(a.rows(), b.cols());
  kernels().cgemm_acc(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

void matmul_acc(const Mat& a, const Mat& b, Mat& c) {
  require(a.cols() == b.rows() && c.rows() == a.rows() && c.cols() == b.cols(),
          "matmul_acc: dimension mismatch");
  kernels().cgemm_acc(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
}

Mat operator*(const Mat& a, const Mat& b) { return matmul(a, b); }

cplx hs_inner(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "hs_inner: shape mismatch");
  return kernels().cdotc(a.size(), a.data(), b.data());
}

Mat kron(const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        cplx* crow = &c(i * b.rows() + k, j * b.cols());
        const cplx* brow = &b(k, 0);
        kernels().caxpy(b.cols(), aij, brow, crow);
      }
    }
  return c;
}

Mat jordan_product(const Mat& a, const Mat& b) {
  require(a.square() && b.square() && a.rows() == b.rows(),
          "jordan_product: dimension mismatch");
  Mat c(a.rows(), a.cols());
  kernels().cgemm_acc(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  kernels().cgemm_acc(b.rows(), b.cols(), a.cols(), b.data(), a.data(), c.data());
  c *= 0.5;
  return c;
}

bool is_hermitian(const Mat& a, double tol_scale) {
  if (!a.square()) return false;
  const double tol = tol_scale * std::max(1.0, a.norm_fro());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

void require_hermitian(const Mat& a, const std::string& who) {
  require(is_hermitian(a), who + ": input not Hermitian");
}

double distance_max(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "distance_max: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

std::string BlockShape::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) os << " + ";
    os << "M" << sizes[i] << "(C)";
  }
  return os.str();
}

BlockMat& BlockMat::operator+=(const BlockMat& o) {
  require(shape_ == o.shape_, "BlockMat::operator+=: shape mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += o.blocks_[i];
  return *this;
}

BlockMat& BlockMat::operator-=(const BlockMat& o) {
  require(shape_ == o.shape_, "BlockMat::operator-=: shape mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= o.blocks_[i];
  return *this;
}

BlockMat& BlockMat::operator*=(cplx a) {
  for (auto& b : blocks_) b *= a;
  return *this;
}

BlockMat BlockMat::adjoint() const {
  BlockMat r(shape_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i].adjoint();
  return r;
}

BlockMat BlockMat::transpose() const {
  BlockMat r(shape_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i].transpose();
  return r;
}

BlockMat BlockMat::conj() const {
  BlockMat r(shape_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] = blocks_[i].conj();
  return r;
}

cplx BlockMat::trace() const {
  cplx t = 0.0;
  for (const auto& b : blocks_) t += b.trace();
  return t;
}

double BlockMat::norm_fro() const {
  double s = 0.0;
  for (const auto& b : blocks_) {
    const double f = b.norm_fro();
    s += f * f;
  }
  return std::sqrt(s);
}

Mat BlockMat::to_dense() const {
  const std::size_t n = shape_.total_dim();
  Mat d(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) d(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return d;
}

BlockMat matmul(const BlockMat& a, const BlockMat& b) {
  require(a.shape() == b.shape(), "BlockMat matmul: shape mismatch");
  BlockMat c(a.shape());
  for (std::size_t i = 0; i < a.nblocks(); ++i)
    matmul_acc(a.block(i), b.block(i), c.block(i));
  return c;
}

BlockMat operator*(const BlockMat& a, const BlockMat& b) { return matmul(a, b); }

cplx hs_inner(const BlockMat& a, const BlockMat& b) {
  require(a.shape() == b.shape(), "BlockMat hs_inner: shape mismatch");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.nblocks(); ++i) t += hs_inner(a.block(i), b.block(i));
  return t;
}

BlockMat jordan_product(const BlockMat& a, const BlockMat& b) {
  require(a.shape() == b.shape(), "BlockMat jordan_product: shape mismatch");
  BlockMat c(a.shape());
  for (std::size_t i = 0; i < a.nblocks(); ++i)
    c.block(i) = jordan_product(a.block(i), b.block(i));
  return c;
}

bool is_hermitian(const BlockMat& a, double tol_scale) {
  for (std::size_t i = 0; i < a.nblocks(); ++i)
    if (!is_hermitian(a.block(i), tol_scale)) return false;
  return true;
}

BlockShape kron_shape(const BlockShape& a, const BlockShape& b) {
  BlockShape s;
  for (auto sa : a.sizes)
    for (auto sb : b.sizes) s.sizes.push_back(sa * sb);
  return s;
}

BlockMat kron(const BlockMat& a, const BlockMat& b) {
  BlockShape s = kron_shape(a.shape(), b.shape());
  std::vector<Mat> blocks;
  blocks.reserve(s.sizes.size());
  for (std::size_t i = 0; i < a.nblocks(); ++i)
    for (std::size_t j = 0; j < b.nblocks(); ++j)
      blocks.push_back(kron(a.block(i), b.block(j)));
  return BlockMat(s, std::move(blocks));
}

BlockShape oplus(const BlockShape& a, const BlockShape& b) {
  BlockShape s = a;
  s.sizes.insert(s.sizes.end(), b.sizes.begin(), b.sizes.end());
  return s;
}

BlockMat oplus(const BlockMat& a, const BlockMat& b) {
  BlockShape s = oplus(a.shape(), b.shape());
  std::vector<Mat> blocks;
  for (std::size_t i = 0; i < a.nblocks(); ++i) blocks.push_back(a.block(i));
  for (std::size_t i = 0; i < b.nblocks(); ++i) blocks.push_back(b.block(i));
  return BlockMat(s, std::move(blocks));
}

}  // namespace qjw

// Copyright 2026 The raygeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "raygeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "raygeo/error.hpp"

namespace raygeo {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                    std::to_string(b) + ")");
  }
}

}  // namespace

void Tolerance::validate() const {
  if (!(eps_abs > 0.0) || !(eps_rel > 0.0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
}

Vec Vec::basis(std::size_t dim, std::size_t index) {
  Vec e(dim);
  e[index] = 1.0;
  return e;
}

Vec& Vec::operator+=(const Vec& other) {
  require_same_dim(dim(), other.dim(), "vector addition");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  require_same_dim(dim(), other.dim(), "vector subtraction");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vec& Vec::operator*=(Cplx c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not equal rows*cols");
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::from_columns(std::span<const Vec> cols) {
  if (cols.empty()) return {};
  Mat m(cols.front().dim(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same_dim(cols[c].dim(), m.rows(), "from_columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::adjoint() const {
  Mat m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Mat Mat::operator*(const Mat& other) const {
  require_same_dim(cols_, other.rows_, "matrix product");
  Mat m(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Cplx a = (*this)(r, k);
      for (std::size_t c = 0; c < other.cols_; ++c) m(r, c) += a * other(k, c);
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  require_same_dim(cols_, v.dim(), "matrix-vector product");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Cplx acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Mat& Mat::operator*=(Cplx c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

Mat& Mat::operator+=(const Mat& other) {
  require_same_dim(rows_, other.rows_, "matrix addition");
  require_same_dim(cols_, other.cols_, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  require_same_dim(rows_, other.rows_, "matrix subtraction");
  require_same_dim(cols_, other.cols_, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

Cplx inner(const Vec& u, const Vec& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Cplx acc = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * std::conj(v[i]);
  return acc;
}

double norm(const Vec& u) {
  // Scaled accumulation avoids overflow/underflow for extreme entries.
  double scale = 0.0;
  for (const auto& e : u) scale = std::max({scale, std::abs(e.real()), std::abs(e.imag())});
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (const auto& e : u) acc += std::norm(e / scale);
  return scale * std::sqrt(acc);
}

double carg(Cplx c, const Tolerance& tol) {
  if (std::abs(c) <= tol.eps_abs) {
    throw Error(ErrorKind::ZeroArgument, "argument of a (numerically) zero complex number");
  }
  return wrap_angle(std::arg(c));
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(a, two_pi);  // in [-pi, pi]
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

double circular_distance(double a, double b) {
  const double d = std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
  return std::min(d, 2.0 * std::numbers::pi - d);
}

double mixed_residual(double a, double b, const Tolerance& tol) {
  return std::abs(a - b) / std::max(std::abs(b), tol.eps_abs / tol.eps_rel);
}

std::vector<Vec> orthonormalize(std::span<const Vec> vs, const Tolerance& tol) {
  std::vector<Vec> basis;
  for (const auto& v : vs) {
    if (!basis.empty()) require_same_dim(v.dim(), basis.front().dim(), "orthonormalize");
    Vec w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) w -= inner(w, b) * b;
    }
    const double n = norm(w);
    if (n <= tol.eps_abs) continue;
    w *= 1.0 / n;
    basis.push_back(std::move(w));
  }
  return basis;
}

Vec kron(const Vec& u, const Vec& v) {
  Vec out(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = u[i] * v[j];
  return out;
}

}  // namespace raygeo

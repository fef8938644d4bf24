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

#pragma once

// Complex linear algebra substrate: vectors, matrices, inner products and
// Gram-Schmidt orthonormalization over C^d.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace raygeo {

using Cplx = std::complex<double>;

/// Absolute / relative comparison thresholds. Values expected near 0 or 1 are
/// compared with `eps_abs`; everything else with `eps_rel`.
struct Tolerance {
  double eps_abs = 1e-10;
  double eps_rel = 1e-9;

  /// Throws std::invalid_argument unless both are strictly positive.
  void validate() const;
};

class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t dim) : entries_(dim) {}
  Vec(std::initializer_list<Cplx> entries) : entries_(entries) {}
  explicit Vec(std::vector<Cplx> entries) : entries_(std::move(entries)) {}

  static Vec basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  Cplx& operator[](std::size_t i) { return entries_[i]; }
  const Cplx& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::span<const Cplx> entries() const noexcept { return entries_; }

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(Cplx c);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Cplx c, Vec v) { return v *= c; }
  friend Vec operator*(Vec v, Cplx c) { return v *= c; }

private:
  std::vector<Cplx> entries_;
};

/// Dense row-major complex matrix.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Cplx> entries);

  static Mat identity(std::size_t n);
  /// Matrix whose columns are `cols` (all of equal dimension).
  static Mat from_columns(std::span<const Vec> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Cplx> entries() const noexcept { return entries_; }

  Vec column(std::size_t c) const;
  Mat adjoint() const;
  Mat operator*(const Mat& other) const;
  Vec operator*(const Vec& v) const;
  Mat& operator*=(Cplx c);
  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);

  /// Largest entry modulus.
  double max_abs() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cplx> entries_;
};

/// Sum_i u_i * conj(v_i): linear in `u`, conjugate-linear in `v`.
Cplx inner(const Vec& u, const Vec& v);
double norm(const Vec& u);

/// Complex argument in (-pi, pi]. Throws ZeroArgument when |c| <= eps_abs.
double carg(Cplx c, const Tolerance& tol = {});

/// Reduces an angle to its representative in (-pi, pi].
double wrap_angle(double a);
/// min(|d|, 2pi - |d|) for d = a - b taken mod 2pi.
double circular_distance(double a, double b);

/// |a - b| measured relative to max(|b|, eps_abs / eps_rel); a value below
/// eps_rel means "equal" under the mixed absolute/relative policy.
double mixed_residual(double a, double b, const Tolerance& tol = {});

/// Orthonormal basis of span(vs) by modified Gram-Schmidt with one
/// re-orthogonalization pass. Inputs whose residual norm falls to eps_abs or
/// below are dropped.
std::vector<Vec> orthonormalize(std::span<const Vec> vs, const Tolerance& tol = {});

/// Kronecker product, index i*dim(v) + j holds u_i * v_j.
Vec kron(const Vec& u, const Vec& v);

}  // namespace raygeo

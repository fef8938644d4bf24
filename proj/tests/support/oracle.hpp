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

// Independent reference computations for tests. These work on plain
// std::vector<std::complex<double>> and deliberately avoid the library's
// Gram-Schmidt, canonicalization and projection code paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "raygeo/linalg.hpp"

namespace oracle {

using C = std::complex<double>;
using V = std::vector<C>;
using M = std::vector<V>;  // row-major, M[r][c]

inline V to_v(const raygeo::Vec& v) { return V(v.begin(), v.end()); }

inline C dot(const V& u, const V& v) {
  C s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

inline double nrm(const V& u) { return std::sqrt(std::real(dot(u, u))); }

inline V scale(C c, V u) {
  for (auto& e : u) e *= c;
  return u;
}

inline V add(V u, const V& v) {
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
  return u;
}

inline V sub(V u, const V& v) {
  for (std::size_t i = 0; i < u.size(); ++i) u[i] -= v[i];
  return u;
}

/// Gauss-Jordan inverse with partial pivoting.
inline M inverse(M a) {
  const std::size_t n = a.size();
  M inv(n, V(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-14) throw std::runtime_error("oracle: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const C d = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const C f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

/// Orthogonal projector onto span(cols) for linearly independent cols,
/// as A (A^dagger A)^{-1} A^dagger.
inline M projector(const std::vector<V>& cols, std::size_t dim) {
  M p(dim, V(dim, 0.0));
  if (cols.empty()) return p;
  const std::size_t k = cols.size();
  M gram(k, V(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(cols[j], cols[i]);  // (A^dagger A)_{ij}
  }
  const M g = inverse(gram);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      C s = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) s += cols[i][r] * g[i][j] * std::conj(cols[j][c]);
      }
      p[r][c] = s;
    }
  }
  return p;
}

inline V apply(const M& m, const V& u) {
  V out(m.size(), 0.0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < u.size(); ++c) out[r] += m[r][c] * u[c];
  }
  return out;
}

/// Born ratio |P u|^2 / |u|^2.
inline double prob(const std::vector<V>& span, const V& u) {
  const V pu = oracle::apply(projector(span, u.size()), u);
  return std::pow(nrm(pu) / nrm(u), 2);
}

inline double p(const V& u, const V& v) { return std::norm(dot(u, v)) / (std::norm(nrm(u)) * std::norm(nrm(v))); }

/// theta as the argument of the product of the three inner products.
inline double theta(const V& u, const V& v, const V& w) { return std::arg(dot(u, v) * dot(v, w) * dot(w, u)); }

/// True when u and v span the same line.
inline bool same_line(const V& u, const V& v, double tol = 1e-9) {
  return std::abs(std::abs(dot(u, v)) - nrm(u) * nrm(v)) <= tol * nrm(u) * nrm(v);
}

/// Superposition vector with w rotated by e^{i arg <v, w0>}.
inline V superpose(const V& v, const V& w0, double r) {
  const V vu = scale(1.0 / nrm(v), v);
  const V wu = scale(1.0 / nrm(w0), w0);
  const V w = scale(std::polar(1.0, std::arg(dot(vu, wu))), wu);
  return add(scale(std::sqrt(r), vu), scale(std::sqrt(1.0 - r), w));
}

inline double circ(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * std::numbers::pi);
  return std::min(d, 2.0 * std::numbers::pi - d);
}

}  // namespace oracle

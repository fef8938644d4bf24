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

// States (rays) and propositions (closed subspaces) of C^d.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "raygeo/linalg.hpp"

namespace raygeo {

/// A one-dimensional subspace, stored as its canonical unit representative:
/// the first entry with modulus above eps_abs is real and positive.
class Ray {
public:
  /// Ray spanned by `v`. Throws ZeroVector when norm(v) <= eps_abs.
  static Ray from(const Vec& v, const Tolerance& tol = {});

  const Vec& rep() const noexcept { return rep_; }
  std::size_t dim() const noexcept { return rep_.dim(); }

private:
  explicit Ray(Vec rep) : rep_(std::move(rep)) {}
  Vec rep_;
};

/// Result of projecting the zero-dimensional subspace, or a ray orthogonal to
/// the target proposition.
struct ZeroRay {
  friend bool operator==(ZeroRay, ZeroRay) = default;
};

using RayOrZero = std::variant<ZeroRay, Ray>;

inline bool is_zero(const RayOrZero& r) { return std::holds_alternative<ZeroRay>(r); }

/// Distance between rays after optimal phase alignment of the representatives:
/// min over phases of |u - e^{i phi} v|. Zero iff the rays coincide.
double ray_distance(const Ray& x, const Ray& y);
bool same_ray(const Ray& x, const Ray& y, const Tolerance& tol = {});
bool same_ray(const RayOrZero& x, const RayOrZero& y, const Tolerance& tol = {});

/// A closed subspace held as an orthonormal basis. Rank 0 is the falsehood
/// {0}; rank == dim is the whole space.
class Subspace {
public:
  static Subspace span(std::span<const Vec> vs, std::size_t dim, const Tolerance& tol = {});
  static Subspace of(const Ray& x);
  static Subspace falsehood(std::size_t dim);
  static Subspace truth(std::size_t dim);

  const std::vector<Vec>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  /// Orthogonal projector sum_k b_k b_k^dagger.
  Mat projector() const;

private:
  Subspace(std::vector<Vec> basis, std::size_t dim) : basis_(std::move(basis)), dim_(dim) {}
  std::vector<Vec> basis_;
  std::size_t dim_ = 0;
};

Vec project_vec(const Subspace& a, const Vec& u);
RayOrZero project_ray(const Subspace& a, const Ray& x, const Tolerance& tol = {});
RayOrZero project_ray(const Subspace& a, const RayOrZero& x, const Tolerance& tol = {});

Subspace ortho_complement(const Subspace& a, const Tolerance& tol = {});
Subspace join(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// Intersection, computed as the complement of the join of complements.
Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

bool is_member(const Ray& x, const Subspace& a, const Tolerance& tol = {});
/// a is contained in b.
bool is_subset(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
bool same_subspace(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

bool is_orthogonal(const Subspace& a, const Subspace& b, const Tolerance& tol = {});
bool is_orthogonal(const Ray& x, const Subspace& a, const Tolerance& tol = {});
bool is_orthogonal(const Subspace& a, const Ray& x, const Tolerance& tol = {});
bool is_orthogonal(const Ray& x, const Ray& y, const Tolerance& tol = {});

/// Projector-level commutation test, cross-checked on `probes` pseudo-random
/// vectors (fixed internal seed).
bool commutes(const Subspace& a, const Subspace& b, int probes = 0, const Tolerance& tol = {});

}  // namespace raygeo

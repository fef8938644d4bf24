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

#include "raygeo/rays.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "raygeo/error.hpp"
#include "raygeo/random.hpp"

namespace raygeo {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": ambient dimensions differ (" + std::to_string(a) + " vs " +
                    std::to_string(b) + ")");
  }
}

}  // namespace

Ray Ray::from(const Vec& v, const Tolerance& tol) {
  const double n = norm(v);
  if (!(n > tol.eps_abs)) throw Error(ErrorKind::ZeroVector, "cannot form a ray from a zero vector");
  Vec u = (1.0 / n) * v;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const double m = std::abs(u[i]);
    if (m > tol.eps_abs) {
      u *= std::conj(u[i]) / m;
      u[i] = m;
      break;
    }
  }
  return Ray(std::move(u));
}

double ray_distance(const Ray& x, const Ray& y) {
  require_dim(x.dim(), y.dim(), "ray_distance");
  const Cplx c = inner(x.rep(), y.rep());
  const double m = std::abs(c);
  if (m == 0.0) return std::numbers::sqrt2;
  return norm(x.rep() - (c / m) * y.rep());
}

bool same_ray(const Ray& x, const Ray& y, const Tolerance& tol) {
  return ray_distance(x, y) <= tol.eps_abs;
}

bool same_ray(const RayOrZero& x, const RayOrZero& y, const Tolerance& tol) {
  if (is_zero(x) || is_zero(y)) return is_zero(x) && is_zero(y);
  return same_ray(std::get<Ray>(x), std::get<Ray>(y), tol);
}

Subspace Subspace::span(std::span<const Vec> vs, std::size_t dim, const Tolerance& tol) {
  for (const auto& v : vs) require_dim(v.dim(), dim, "Subspace::span");
  return Subspace(orthonormalize(vs, tol), dim);
}

Subspace Subspace::of(const Ray& x) { return Subspace({x.rep()}, x.dim()); }

Subspace Subspace::falsehood(std::size_t dim) { return Subspace({}, dim); }

Subspace Subspace::truth(std::size_t dim) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(Vec::basis(dim, i));
  return Subspace(std::move(basis), dim);
}

Mat Subspace::projector() const {
  Mat p(dim_, dim_);
  for (const auto& b : basis_)
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) p(r, c) += b[r] * std::conj(b[c]);
  return p;
}

Vec project_vec(const Subspace& a, const Vec& u) {
  require_dim(a.dim(), u.dim(), "project_vec");
  Vec out(u.dim());
  for (const auto& b : a.basis()) out += inner(u, b) * b;
  return out;
}

RayOrZero project_ray(const Subspace& a, const Ray& x, const Tolerance& tol) {
  const Vec w = project_vec(a, x.rep());
  if (norm(w) <= tol.eps_abs) return ZeroRay{};
  return Ray::from(w, tol);
}

RayOrZero project_ray(const Subspace& a, const RayOrZero& x, const Tolerance& tol) {
  if (is_zero(x)) return ZeroRay{};
  return project_ray(a, std::get<Ray>(x), tol);
}

Subspace ortho_complement(const Subspace& a, const Tolerance& tol) {
  const std::size_t d = a.dim();
  std::vector<Vec> frame = a.basis();
  std::vector<Vec> complement;
  // Extend with the standard basis vector of largest residual at each step;
  // the largest residual squared is at least (d - k) / d, so the extension is
  // always well conditioned.
  while (frame.size() < d) {
    Vec best;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < d; ++i) {
      Vec e = Vec::basis(d, i);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : frame) e -= inner(e, b) * b;
      const double n = norm(e);
      if (n > best_norm) {
        best_norm = n;
        best = std::move(e);
      }
    }
    if (best_norm <= tol.eps_abs) break;
    best *= 1.0 / best_norm;
    frame.push_back(best);
    complement.push_back(std::move(best));
  }
  return Subspace::span(complement, d, tol);
}

Subspace join(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_dim(a.dim(), b.dim(), "join");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(all, a.dim(), tol);
}

Subspace meet(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_dim(a.dim(), b.dim(), "meet");
  return ortho_complement(join(ortho_complement(a, tol), ortho_complement(b, tol), tol), tol);
}

bool is_member(const Ray& x, const Subspace& a, const Tolerance& tol) {
  return norm(project_vec(a, x.rep()) - x.rep()) <= tol.eps_abs;
}

bool is_subset(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_dim(a.dim(), b.dim(), "is_subset");
  for (const auto& v : a.basis()) {
    if (norm(project_vec(b, v) - v) > tol.eps_abs) return false;
  }
  return true;
}

bool same_subspace(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  return a.rank() == b.rank() && is_subset(a, b, tol);
}

bool is_orthogonal(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_dim(a.dim(), b.dim(), "is_orthogonal");
  for (const auto& u : a.basis())
    for (const auto& v : b.basis())
      if (std::abs(inner(u, v)) > tol.eps_abs) return false;
  return true;
}

bool is_orthogonal(const Ray& x, const Subspace& a, const Tolerance& tol) {
  return is_orthogonal(Subspace::of(x), a, tol);
}

bool is_orthogonal(const Subspace& a, const Ray& x, const Tolerance& tol) {
  return is_orthogonal(a, Subspace::of(x), tol);
}

bool is_orthogonal(const Ray& x, const Ray& y, const Tolerance& tol) {
  return is_orthogonal(Subspace::of(x), Subspace::of(y), tol);
}

bool commutes(const Subspace& a, const Subspace& b, int probes, const Tolerance& tol) {
  require_dim(a.dim(), b.dim(), "commutes");
  const Mat pa = a.projector();
  const Mat pb = b.projector();
  Mat diff = pa * pb;
  diff -= pb * pa;
  if (diff.max_abs() > tol.eps_abs) return false;
  Rng rng(0x5eedc0117e5ULL);
  for (int i = 0; i < probes; ++i) {
    const Vec u = random_ray(rng, a.dim()).rep();
    if (norm(project_vec(a, project_vec(b, u)) - project_vec(b, project_vec(a, u))) > tol.eps_abs) {
      return false;
    }
  }
  return true;
}

}  // namespace raygeo

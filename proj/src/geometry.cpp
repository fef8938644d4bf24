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

#include "raygeo/geometry.hpp"

#include <cmath>
#include <string>

#include "raygeo/error.hpp"

namespace raygeo {

namespace {

// Equality of projected rays as used by coplanarity: Zero only equals Zero,
// otherwise a_sim must exceed 1 - eps_abs.
bool projections_equal(const RayOrZero& a, const RayOrZero& b, const Tolerance& tol) {
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  return a_sim(std::get<Ray>(a), std::get<Ray>(b)) > 1.0 - tol.eps_abs;
}

}  // namespace

double a_sim(const Ray& x, const Ray& y) { return std::abs(inner(x.rep(), y.rep())); }

double p_sim(const Ray& x, const Ray& y) { return std::norm(inner(x.rep(), y.rep())); }

double p_prop(const Ray& x, const Subspace& a, const Tolerance& tol) {
  const RayOrZero image = project_ray(a, x, tol);
  if (is_zero(image)) return 0.0;
  return p_sim(x, std::get<Ray>(image));
}

double theta(const Ray& x, const Ray& y, const Ray& z, double angle_guard) {
  const Cplx xy = inner(x.rep(), y.rep());
  const Cplx yz = inner(y.rep(), z.rep());
  const Cplx zx = inner(z.rep(), x.rep());
  if (std::abs(xy) <= angle_guard) throw Error(ErrorKind::OrthogonalPair, "theta undefined: x and y are orthogonal", "x,y");
  if (std::abs(yz) <= angle_guard) throw Error(ErrorKind::OrthogonalPair, "theta undefined: y and z are orthogonal", "y,z");
  if (std::abs(zx) <= angle_guard) throw Error(ErrorKind::OrthogonalPair, "theta undefined: z and x are orthogonal", "z,x");
  return wrap_angle(std::arg(xy) + std::arg(yz) + std::arg(zx));
}

bool coplanar(const Ray& x, const Ray& y, const Ray& z, const Tolerance& tol) {
  if (same_ray(x, y, tol) || same_ray(y, z, tol) || same_ray(z, x, tol)) return true;
  const Subspace not_x = ortho_complement(Subspace::of(x), tol);
  const RayOrZero py = project_ray(not_x, y, tol);
  const RayOrZero pz = project_ray(not_x, z, tol);
  // A zero projection means y or z coincides with x numerically.
  if (is_zero(py) || is_zero(pz)) return true;
  return projections_equal(py, pz, tol);
}

Triple prime_triple(const Ray& x, const Ray& y, const Ray& z, const Tolerance& tol) {
  if (same_ray(x, y, tol) || same_ray(y, z, tol) || same_ray(z, x, tol)) {
    throw Error(ErrorKind::DegenerateTriple, "prime triple needs pairwise distinct states", "distinct");
  }
  if (is_orthogonal(x, y, tol) || is_orthogonal(y, z, tol) || is_orthogonal(z, x, tol)) {
    throw Error(ErrorKind::DegenerateTriple, "prime triple needs pairwise non-orthogonal states", "orthogonal");
  }
  if (!coplanar(x, y, z, tol)) {
    throw Error(ErrorKind::DegenerateTriple, "prime triple needs coplanar states", "coplanar");
  }
  auto prime = [&](const Ray& of, const Ray& source) {
    const RayOrZero img = project_ray(ortho_complement(Subspace::of(of), tol), source, tol);
    if (is_zero(img)) throw Error(ErrorKind::DegenerateTriple, "orthocomplement projection vanished", "distinct");
    return std::get<Ray>(img);
  };
  return Triple{prime(x, y), prime(y, z), prime(z, x)};
}

bool reciprocity_holds(const Ray& x, const Ray& y, const Ray& z, const Tolerance& tol) {
  if (same_ray(x, y, tol) || same_ray(y, z, tol) || same_ray(z, x, tol)) {
    throw Error(ErrorKind::DegenerateTriple, "reciprocity is stated for pairwise different states", "distinct");
  }
  const Subspace not_x = ortho_complement(Subspace::of(x), tol);
  const bool antecedent = projections_equal(project_ray(not_x, y, tol), project_ray(not_x, z, tol), tol);
  if (!antecedent) return true;
  const Subspace not_y = ortho_complement(Subspace::of(y), tol);
  return projections_equal(project_ray(not_y, z, tol), project_ray(not_y, x, tol), tol);
}

}  // namespace raygeo

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

#include "raygeo/superposition.hpp"

#include <cmath>
#include <string>

#include "raygeo/error.hpp"

namespace raygeo {

namespace {

void validate(const SuperpositionSpec& spec, const Tolerance& tol) {
  if (!(spec.r >= 0.0 && spec.r <= 1.0)) {
    throw Error(ErrorKind::InvalidWeight, "superposition weight r must lie in [0, 1], got " + std::to_string(spec.r));
  }
  if (spec.y.dim() != spec.z.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "superposition components live in different spaces");
  }
  if (a_sim(spec.y, spec.z) <= tol.eps_abs) {
    throw Error(ErrorKind::OrthogonalComponents,
                "orthogonal states cannot be superposed: a test for y distinguishes the two paths with certainty");
  }
}

}  // namespace

Vec align_phase(const Vec& v, const Vec& w0) {
  const Cplx c = inner(v, w0);
  const double m = std::abs(c);
  if (m == 0.0) throw Error(ErrorKind::OrthogonalComponents, "no phase makes an orthogonal vector's inner product positive");
  // <v, w0 c/|c|> = conj(c/|c|) c = |c|.
  Vec w = (c / m) * w0;
  return (1.0 / norm(w)) * w;
}

Ray superpose(const SuperpositionSpec& spec, const Tolerance& tol) {
  validate(spec, tol);
  if (spec.r == 1.0) return spec.y;
  if (spec.r == 0.0) return spec.z;
  const Vec& v = spec.y.rep();
  const Vec w = align_phase(v, spec.z.rep());
  return Ray::from(std::sqrt(spec.r) * v + std::sqrt(1.0 - spec.r) * w, tol);
}

double omega(double r, const Ray& y, const Ray& z, const Tolerance& tol) {
  validate({y, z, r}, tol);
  return 1.0 + 2.0 * std::sqrt(r * (1.0 - r) * p_sim(y, z));
}

double p_of_superposition_closed_form(const SuperpositionSpec& spec, const Ray& x, const Tolerance& tol) {
  const double w = omega(spec.r, spec.y, spec.z, tol);
  const double r = spec.r;
  const double pyx = p_sim(spec.y, x);
  const double pzx = p_sim(spec.z, x);
  double interference = 0.0;
  if (a_sim(x, spec.y) > tol.eps_abs && a_sim(x, spec.z) > tol.eps_abs) {
    interference = 2.0 * std::cos(theta(x, spec.y, spec.z)) * std::sqrt(r * (1.0 - r) * pyx * pzx);
  }
  return (r * pyx + (1.0 - r) * pzx + interference) / w;
}

double p_superposed_vs_component(const SuperpositionSpec& spec, const Tolerance& tol) {
  if (!(spec.r > 0.0)) throw Error(ErrorKind::InvalidWeight, "dominance over the component needs r > 0");
  if (same_ray(spec.y, spec.z, tol)) {
    throw Error(ErrorKind::PreconditionUnmet, "dominance over the component needs y != z", "y != z");
  }
  return p_sim(superpose(spec, tol), spec.y);
}

double p_to_component_closed_form(const SuperpositionSpec& spec, const Tolerance& tol) {
  const double w = omega(spec.r, spec.y, spec.z, tol);
  return 1.0 - (1.0 - spec.r) * (1.0 - p_sim(spec.y, spec.z)) / w;
}

double cos_theta_prime(const Ray& x, const Ray& x_perp, const Ray& y, const Ray& z, const Tolerance& tol) {
  const double pxy = p_sim(x, y);
  const double pxz = p_sim(x, z);
  const double qy = 1.0 - pxy;
  const double qz = 1.0 - pxz;
  if (qy <= tol.eps_abs || qz <= tol.eps_abs) {
    throw Error(ErrorKind::DegenerateTriple, "x coincides with y or z; the complement formula is singular", "denominator");
  }
  if (!is_orthogonal(x, x_perp, tol)) {
    throw Error(ErrorKind::PreconditionUnmet, "x_perp must be orthogonal to x", "x_perp");
  }
  return (std::sqrt(p_sim(y, z)) - std::cos(theta(x, y, z)) * std::sqrt(pxy * pxz)) / std::sqrt(qy * qz);
}

double theta_of_superposition(const SuperpositionSpec& spec, const Ray& x1, const Ray& x2, const Tolerance& tol) {
  return theta(superpose(spec, tol), x1, x2);
}

}  // namespace raygeo

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

// The superposition r*y + (1-r)*z of two non-orthogonal states and the
// closed forms describing its similarity to other states.

#include "raygeo/geometry.hpp"
#include "raygeo/rays.hpp"

namespace raygeo {

/// Names the superposition r*y + (1-r)*z. Validity (y not orthogonal to z,
/// r in [0,1]) is checked where it is used.
struct SuperpositionSpec {
  Ray y;
  Ray z;
  double r = 0.5;
};

/// Ray of sqrt(r) v + sqrt(1-r) w, where v is the representative of y and w
/// the unit vector of z with <v, w> real and positive. r = 1 and r = 0 return
/// y and z. Throws InvalidWeight for r outside [0,1] and OrthogonalComponents
/// when a_sim(y, z) <= eps_abs.
Ray superpose(const SuperpositionSpec& spec, const Tolerance& tol = {});

/// The unit vector of span{w0} whose inner product with `v` is real and
/// positive. Requires <v, w0> != 0.
Vec align_phase(const Vec& v, const Vec& w0);

/// 1 + 2 sqrt(r (1-r) p(y,z)), the squared norm of the unnormalized
/// superposition vector; lies in [1, 2].
double omega(double r, const Ray& y, const Ray& z, const Tolerance& tol = {});

/// p(r y + (1-r) z, x) from the interference formula
///   [r p(y,x) + (1-r) p(z,x) + 2 cos(theta(x,y,z)) sqrt(r(1-r) p(y,x) p(z,x))] / omega.
/// When x is orthogonal to y or z the interference term is zero and theta is
/// not evaluated.
double p_of_superposition_closed_form(const SuperpositionSpec& spec, const Ray& x,
                                      const Tolerance& tol = {});

/// p(superpose(spec), y). Requires r in (0,1] and y != z.
double p_superposed_vs_component(const SuperpositionSpec& spec, const Tolerance& tol = {});

/// 1 - (1-r)(1-p(y,z)) / omega(r,y,z): the similarity of a superposition to
/// its first component.
double p_to_component_closed_form(const SuperpositionSpec& spec, const Tolerance& tol = {});

/// cos(theta(x_perp, y, z)) for coplanar x, x_perp, y, z with x orthogonal to
/// x_perp:
///   (sqrt(p(y,z)) - cos(theta(x,y,z)) sqrt(p(x,y) p(x,z))) / sqrt((1-p(x,y))(1-p(x,z))).
/// Throws DegenerateTriple when a denominator factor is <= eps_abs.
double cos_theta_prime(const Ray& x, const Ray& x_perp, const Ray& y, const Ray& z,
                       const Tolerance& tol = {});

/// theta(superpose(spec), x1, x2), evaluated on the constructed ray.
double theta_of_superposition(const SuperpositionSpec& spec, const Ray& x1, const Ray& x2,
                              const Tolerance& tol = {});

}  // namespace raygeo

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

// Pairwise similarity p, triple phase theta, coplanarity and the planar
// orthocomplement triple.

#include "raygeo/rays.hpp"

namespace raygeo {

/// Pairwise moduli below this are treated as orthogonal by theta: arg() of a
/// near-zero inner product carries no information.
inline constexpr double kDefaultAngleGuard = 1e-8;

struct Triple {
  Ray x;
  Ray y;
  Ray z;
};

/// |<u, v>| for unit representatives; in [0, 1].
double a_sim(const Ray& x, const Ray& y);
/// a_sim squared: the transition probability between two states.
double p_sim(const Ray& x, const Ray& y);
/// Probability that proposition `a` is found true in state `x`:
/// 0 when x is orthogonal to a, otherwise p_sim(x, a(x)).
double p_prop(const Ray& x, const Subspace& a, const Tolerance& tol = {});

/// arg<u,v> + arg<v,w> + arg<w,u>, reduced to (-pi, pi]. Throws
/// OrthogonalPair (detail "x,y", "y,z" or "z,x") when a pairwise a_sim is at
/// or below `angle_guard`.
double theta(const Ray& x, const Ray& y, const Ray& z, double angle_guard = kDefaultAngleGuard);

bool coplanar(const Ray& x, const Ray& y, const Ray& z, const Tolerance& tol = {});

/// (x', y', z') = ((not x)(y), (not y)(z), (not z)(x)) for a coplanar,
/// pairwise distinct, pairwise non-orthogonal triple; DegenerateTriple
/// otherwise.
Triple prime_triple(const Ray& x, const Ray& y, const Ray& z, const Tolerance& tol = {});

/// Whether (not x)(y) = (not x)(z) implies (not y)(z) = (not y)(x) on this
/// instance. Rays must be pairwise distinct (DegenerateTriple otherwise).
bool reciprocity_holds(const Ray& x, const Ray& y, const Ray& z, const Tolerance& tol = {});

}  // namespace raygeo

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

#include <cmath>

#include "laws.hpp"
#include "raygeo/error.hpp"
#include "raygeo/superposition.hpp"

namespace raygeo::laws {

namespace {

using std::max;

/// Generic non-orthogonal pair (y, z) with a weight in [0, 1).
struct PairDraw {
  Ray y;
  Ray z;
  double r;
};

PairDraw draw_pair(TrialContext& c) {
  Sampler& s = c.sample;
  Ray y = s.ray();
  Ray z = s.ray();
  const double r = s.rng().uniform();
  c.record("spec", to_json(SuperpositionSpec{y, z, r}));
  return {std::move(y), std::move(z), r};
}

TrialResult superposition_exists(TrialContext& c) {
  Sampler& s = c.sample;
  const double r = s.rng().uniform(0.01, 0.99);
  if (s.flavor() == Flavor::ClassicalOrthogonal) {
    const auto rs = s.classical_rays(2);
    try {
      (void)superpose({rs[0], rs[1], r}, c.tol);
      return TrialResult::fail();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::OrthogonalComponents ? TrialResult::ok() : TrialResult::fail();
    }
  }
  const auto [y, z, unused] = draw_pair(c);
  if (near_orthogonal({{&y, &z}})) return TrialResult::skip();
  const Ray sup = superpose({y, z, r}, c.tol);
  const std::vector<Vec> yz{y.rep(), z.rep()};
  const double res = distance(project_ray(Subspace::span(yz, s.dim(), c.tol), sup, c.tol), sup);

  const Ray zp = orthogonal_ray(s, y);
  try {
    (void)superpose({y, zp, r}, c.tol);
    return TrialResult::fail(res);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OrthogonalComponents) return TrialResult::fail(res);
  }
  return TrialResult::ok(res);
}

TrialResult triviality(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray y = s.ray();
  const double r = s.rng().uniform();
  c.record("y", to_json(y));
  c.record("r", r);
  double res = ray_distance(superpose({y, y, r}, c.tol), y);
  res = max(res, ray_distance(superpose({y, y, 0.0}, c.tol), y));
  res = max(res, ray_distance(superpose({y, y, 1.0}, c.tol), y));
  return TrialResult::ok(res);
}

TrialResult coplanarity_principle(TrialContext& c) {
  const auto [y, z, r] = draw_pair(c);
  if (near_orthogonal({{&y, &z}})) return TrialResult::skip();
  const Ray sup = superpose({y, z, r}, c.tol);
  const bool ok = coplanar(sup, y, z, c.tol) && coplanar(y, sup, z, c.tol) && coplanar(z, y, sup, c.tol);
  return ok ? TrialResult::ok() : TrialResult::fail();
}

TrialResult superposition_definition(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [y, z, r] = draw_pair(c);
  if (near_orthogonal({{&y, &z}})) return TrialResult::skip();
  // Arbitrary representatives; w is rephased so that <v, w> is real and positive.
  const Vec v = with_phase(s, y);
  const Vec w0 = with_phase(s, z);
  const Cplx c0 = inner(w0, v);
  const Vec w = (std::conj(c0) / std::abs(c0)) * w0;
  const Cplx vw = inner(v, w);
  const Vec aligned = align_phase(v, w0);
  const Vec u = std::sqrt(r) * v + std::sqrt(1.0 - r) * w;

  double res = std::abs(vw.imag());
  res = max(res, norm(aligned - w));
  res = max(res, ray_distance(Ray::from(u, c.tol), superpose({y, z, r}, c.tol)));
  res = max(res, std::abs(norm(u) * norm(u) - omega(r, y, z, c.tol)));
  return vw.real() > 0.0 ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult superposition_commutes(TrialContext& c) {
  const auto [y, z, r] = draw_pair(c);
  if (near_orthogonal({{&y, &z}})) return TrialResult::skip();
  double res = ray_distance(superpose({y, z, 1.0}, c.tol), y);
  res = max(res, ray_distance(superpose({y, z, 0.0}, c.tol), z));
  res = max(res, ray_distance(superpose({y, z, r}, c.tol), superpose({z, y, 1.0 - r}, c.tol)));
  return TrialResult::ok(res);
}

TrialResult p_basis(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [y, z, r] = draw_pair(c);
  const Ray x = s.ray();
  c.record("x", to_json(x));
  if (near_orthogonal({{&y, &z}, {&x, &y}, {&x, &z}})) return TrialResult::skip();
  const SuperpositionSpec spec{y, z, r};
  const double closed = p_of_superposition_closed_form(spec, x, c.tol);
  const double direct = p_sim(x, superpose(spec, c.tol));
  return TrialResult::ok(mixed_residual(closed, direct, c.tol));
}

TrialResult prop1(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray y = s.ray();
  const Ray z = s.ray();
  const double r = 1.0 - s.rng().uniform();  // (0, 1]
  const SuperpositionSpec spec{y, z, r};
  c.record("spec", to_json(spec));
  if (near_orthogonal({{&y, &z}})) return TrialResult::skip();
  const double pyz = p_sim(y, z);
  if (1.0 - pyz < kSkipDenominator) return TrialResult::skip();

  const Ray sup = superpose(spec, c.tol);
  const double psy = p_sim(sup, y);
  const double res = mixed_residual(p_to_component_closed_form(spec, c.tol), psy, c.tol);
  const bool ok = coplanar(sup, y, z, c.tol) && circular_distance(theta(sup, y, z), 0.0) <= c.angle_tol &&
                  psy > pyz && std::abs(p_superposed_vs_component(spec, c.tol) - psy) <= c.tol.eps_abs;
  return ok ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult co_prime(TrialContext& c) {
  Sampler& s = c.sample;
  const auto f = s.frame();
  const Ray x = s.ray_in_plane(f[0], f[1]);
  const Cplx a = inner(x.rep(), f[0]);
  const Cplx b = inner(x.rep(), f[1]);
  const Ray xp = Ray::from(-std::conj(b) * f[0] + std::conj(a) * f[1], c.tol);
  const Ray y = s.ray_in_plane(f[0], f[1]);
  const Ray z = s.ray_in_plane(f[0], f[1]);
  c.record("rays", rays_json({&x, &xp, &y, &z}));
  if (near_orthogonal({{&x, &y}, {&x, &z}, {&y, &z}, {&xp, &y}, {&xp, &z}})) return TrialResult::skip();
  if ((1.0 - p_sim(x, y)) * (1.0 - p_sim(x, z)) < kSkipDenominator) return TrialResult::skip();
  return TrialResult::ok(std::abs(cos_theta_prime(x, xp, y, z, c.tol) - std::cos(theta(xp, y, z))));
}

TrialResult dominance_at_r_zero(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray y = s.ray();
  const Ray z = s.ray();
  c.record("spec", to_json(SuperpositionSpec{y, z, 0.0}));
  if (near_orthogonal({{&y, &z}})) return TrialResult::skip();
  const double pyz = p_sim(y, z);
  if (1.0 - pyz < kSkipDenominator) return TrialResult::skip();
  const double gap = p_sim(superpose({y, z, 0.0}, c.tol), y) - pyz;
  // The strict inequality is the target; at r = 0 it must degrade to equality.
  return gap > c.tol.eps_abs ? TrialResult::fail(std::abs(gap)) : TrialResult::ok(std::abs(gap));
}

}  // namespace

void add_superposition_laws(std::vector<Law>& out) {
  using enum Flavor;
  using enum ToleranceKind;
  out.push_back({"principle.superposition",
                 "Superpositions of non-orthogonal states exist and lie in their span; orthogonal states have none",
                 GenericComplex, Absolute, 0.0, 2, false, superposition_exists});
  out.push_back({"principle.triviality", "r y + (1 - r) y = y", GenericComplex, Absolute, 0.0, 2, false, triviality});
  out.push_back({"principle.coplanarity", "Every superposition is coplanar with its components", GenericComplex,
                 Absolute, 0.0, 2, false, coplanarity_principle});
  out.push_back({"definition.superposition",
                 "The superposition is the ray of sqrt(r) v + sqrt(1 - r) w with <v, w> real and positive, "
                 "independent of the chosen v, with squared norm omega",
                 GenericComplex, Absolute, 0.0, 2, false, superposition_definition});
  out.push_back({"lemma.superposition_commutes", "1 y + 0 z = y, 0 y + 1 z = z, r y + (1 - r) z = (1 - r) z + r y",
                 GenericComplex, Absolute, 0.0, 2, false, superposition_commutes});
  out.push_back({"lemma.p_basis",
                 "p(x, r y + (1 - r) z) = [r p(x,y) + (1-r) p(x,z) + 2 sqrt(r(1-r) p(x,y) p(x,z)) cos theta(x,y,z)] / omega",
                 GenericComplex, Relative, 0.0, 2, false, p_basis});
  out.push_back({"lemma.prop1",
                 "For r in (0, 1]: the superposition s is coplanar with y, z; theta(s, y, z) = 0; "
                 "p(s, y) = 1 - (1 - r)(1 - p(y, z)) / omega > p(y, z)",
                 GenericComplex, Relative, 0.0, 2, false, prop1});
  out.push_back({"corollary.co_prime",
                 "For coplanar x, y, z and x' orthogonal to x in their plane: cos theta(x', y, z) = "
                 "(sqrt p(y,z) - cos theta(x,y,z) sqrt(p(x,y) p(x,z))) / sqrt((1 - p(x,y))(1 - p(x,z)))",
                 Coplanar, Angle, 0.0, 2, false, co_prime});
  out.push_back({"counterexample.dominance_at_r_zero",
                 "Negative control: strict dominance p(s, y) > p(y, z) fails at r = 0, where s = z", GenericComplex,
                 Absolute, 0.0, 2, true, dominance_at_r_zero});
}

}  // namespace raygeo::laws

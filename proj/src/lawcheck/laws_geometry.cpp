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
#include <numbers>

#include "laws.hpp"
#include "raygeo/error.hpp"
#include "raygeo/superposition.hpp"

namespace raygeo::laws {

namespace {

using std::max;

TrialResult projection_basics(TrialContext& c) {
  Sampler& s = c.sample;
  auto [a, b] = s.nested_pair();
  const Ray x = s.ray();
  c.record("alpha", to_json(a));
  c.record("beta", to_json(b));
  c.record("x", to_json(x));

  const Mat p = a.projector();
  Mat idem = p * p;
  idem -= p;
  Mat herm = p.adjoint();
  herm -= p;
  double res = max(idem.max_abs(), herm.max_abs());

  const RayOrZero ax = project_ray(a, x, c.tol);
  res = max(res, distance(project_ray(a, ax, c.tol), ax));
  bool ok = true;
  if (a.rank() > 0) {
    const Ray y = s.ray_in(a);
    ok = ok && is_member(y, a, c.tol);
    res = max(res, distance(project_ray(a, y, c.tol), y));
  }
  if (a.rank() < s.dim()) ok = ok && !is_member(x, a, c.tol);
  ok = ok && same_subspace(ortho_complement(ortho_complement(a, c.tol), c.tol), a, c.tol);
  ok = ok && same_subspace(b, join(a, meet(ortho_complement(a, c.tol), b, c.tol), c.tol), c.tol);
  return ok ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult classical_principle(TrialContext& c) {
  Sampler& s = c.sample;
  const auto rs = s.classical_rays(3);
  const Ray& ei = rs[0];
  const Ray& ej = rs[1];
  c.record("rays", to_json(ei));
  double res = distance(project_ray(ortho_complement(Subspace::of(ei), c.tol), ej, c.tol), ej);
  bool ok = is_orthogonal(ei, ej, c.tol);
  const double r = s.rng().uniform(0.01, 0.99);
  try {
    (void)superpose({ei, ej, r}, c.tol);
    ok = false;
  } catch (const Error& e) {
    ok = ok && e.kind() == ErrorKind::OrthogonalComponents;
  }
  res = max(res, ray_distance(superpose({ei, ei, r}, c.tol), ei));
  if (rs.size() == 3) ok = ok && reciprocity_holds(rs[0], rs[1], rs[2], c.tol);
  return ok ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult reciprocity(TrialContext& c) {
  Sampler& s = c.sample;
  std::vector<Ray> t;
  const bool planar = s.flavor() == Flavor::Coplanar && c.trial % 2 == 0;
  if (s.flavor() == Flavor::ClassicalOrthogonal) {
    // No three pairwise different states exist in a two-state classical model.
    if (s.dim() < 3) return TrialResult::ok();
    t = s.classical_rays(3);
  } else if (planar) {
    t = s.coplanar_rays(3);
  } else {
    t = {s.ray(), s.ray(), s.ray()};
  }
  c.record("rays", rays_json({&t[0], &t[1], &t[2]}));
  if (ray_distance(t[0], t[1]) < kSkipModulus || ray_distance(t[1], t[2]) < kSkipModulus ||
      ray_distance(t[2], t[0]) < kSkipModulus) {
    return TrialResult::skip();
  }
  bool ok = reciprocity_holds(t[0], t[1], t[2], c.tol);
  if (planar) {
    const Subspace not_x = ortho_complement(Subspace::of(t[0]), c.tol);
    ok = ok && same_ray(project_ray(not_x, t[1], c.tol), project_ray(not_x, t[2], c.tol), c.tol);
  }
  return ok ? TrialResult::ok() : TrialResult::fail();
}

TrialResult coplanarity_definition(TrialContext& c) {
  Sampler& s = c.sample;
  const bool planar = s.flavor() == Flavor::Coplanar && c.trial % 2 == 0;
  const std::vector<Ray> t = planar ? s.coplanar_rays(3) : std::vector<Ray>{s.ray(), s.ray(), s.ray()};
  const Ray &x = t[0], &y = t[1], &z = t[2];
  c.record("rays", rays_json({&x, &y, &z}));
  const bool base = coplanar(x, y, z, c.tol);
  bool ok = base == coplanar(x, z, y, c.tol) && base == coplanar(y, x, z, c.tol) &&
            base == coplanar(y, z, x, c.tol) && base == coplanar(z, x, y, c.tol) && base == coplanar(z, y, x, c.tol);
  if (planar || s.dim() == 2) ok = ok && base;
  else ok = ok && !base;
  ok = ok && coplanar(x, x, z, c.tol);
  return ok ? TrialResult::ok() : TrialResult::fail();
}

TrialResult similarity_a(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray x = s.ray();
  const Ray y = s.ray();
  const Ray yp = orthogonal_ray(s, x);
  c.record("rays", rays_json({&x, &y, &yp}));
  const double a = a_sim(x, y);
  double res = std::abs(a_sim(x, x) - 1.0);
  res = max(res, std::abs(a - a_sim(y, x)));
  res = max(res, a_sim(x, yp));
  res = max(res, std::abs(std::abs(inner(with_phase(s, x), with_phase(s, y))) - a));
  res = max({res, -a, a - 1.0});
  return a < 1.0 - c.tol.eps_abs ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult projection_on_ray(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray x = s.ray();
  const Vec u = s.rng().uniform(0.1, 10.0) * random_vector(s.rng(), s.dim(), s.real_only());
  c.record("x", to_json(x));
  c.record("u", to_json(u));
  const Vec v = with_phase(s, x);
  const Vec proj = project_vec(Subspace::of(x), u);
  const double scale = max(1.0, norm(u));
  double res = norm(proj - inner(u, v) * v) / scale;
  res = max(res, std::abs(inner(u - proj, v)) / scale);
  return TrialResult::ok(res);
}

TrialResult similarity_p(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray x = s.ray();
  const Ray y = s.ray();
  const Ray yp = orthogonal_ray(s, x);
  c.record("rays", rays_json({&x, &y, &yp}));
  const double p = p_sim(x, y);
  const Vec u = with_phase(s, x);
  const Vec yu = project_vec(Subspace::of(y), u);
  const Cplx uyu = inner(u, yu);
  double res = std::abs(p - norm(yu) * norm(yu));
  res = max(res, std::abs(p - uyu.real()));
  res = max(res, std::abs(uyu.imag()));
  res = max(res, std::abs(p_sim(x, x) - 1.0));
  res = max(res, std::abs(p - p_sim(y, x)));
  res = max(res, p_sim(x, yp));
  res = max({res, -p, p - 1.0});
  return p < 1.0 - c.tol.eps_abs ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult p_chain(TrialContext& c) {
  Sampler& s = c.sample;
  const Subspace a = s.subspace();
  const Ray x = s.ray();
  const Ray y = s.ray_in(a);
  c.record("alpha", to_json(a));
  c.record("rays", rays_json({&x, &y}));
  const RayOrZero ax = project_ray(a, x, c.tol);
  if (is_zero(ax) || a_sim(x, std::get<Ray>(ax)) < kSkipModulus) return TrialResult::skip();
  return TrialResult::ok(std::abs(p_sim(x, y) - p_prop(x, a, c.tol) * p_sim(std::get<Ray>(ax), y)));
}

TrialResult projection_is_argmax(TrialContext& c) {
  constexpr int kProbes = 200;
  Sampler& s = c.sample;
  const Subspace a = s.subspace();
  const Ray x = s.ray();
  c.record("alpha", to_json(a));
  c.record("x", to_json(x));
  const RayOrZero axz = project_ray(a, x, c.tol);
  if (is_zero(axz) || a_sim(x, std::get<Ray>(axz)) < kSkipModulus) return TrialResult::skip();
  const Ray& ax = std::get<Ray>(axz);
  const double pmax = p_sim(x, ax);
  double res = std::abs(p_prop(x, a, c.tol) - pmax);
  for (int i = 0; i < kProbes; ++i) {
    const Ray y = s.ray_in(a);
    const double py = p_sim(x, y);
    res = max(res, py - pmax);
    if (ray_distance(y, ax) <= kSkipModulus) {
      res = max(res, std::abs(py - pmax));
    } else if (pmax - py <= 1e-12) {
      c.record("y", to_json(y));
      return TrialResult::fail(res);
    }
  }
  return TrialResult::ok(res);
}

TrialResult satisfaction(TrialContext& c) {
  Sampler& s = c.sample;
  const Subspace a = s.subspace();
  const Ray y = s.ray_in(a);
  const Ray x = s.ray();
  c.record("alpha", to_json(a));
  c.record("rays", rays_json({&y, &x}));
  const double py = p_prop(y, a, c.tol);
  const bool in_y = is_member(y, a, c.tol);
  const bool fixed_y = same_ray(project_ray(a, y, c.tol), RayOrZero{y}, c.tol);
  const bool one_y = std::abs(py - 1.0) <= c.tol.eps_abs;
  const bool in_x = is_member(x, a, c.tol);
  const bool fixed_x = same_ray(project_ray(a, x, c.tol), RayOrZero{x}, c.tol);
  const bool one_x = std::abs(p_prop(x, a, c.tol) - 1.0) <= c.tol.eps_abs;
  const bool ok = in_y && fixed_y && one_y && !in_x && !fixed_x && !one_x;
  return ok ? TrialResult::ok(std::abs(py - 1.0)) : TrialResult::fail(std::abs(py - 1.0));
}

TrialResult born(TrialContext& c) {
  Sampler& s = c.sample;
  const Subspace a = s.subspace();
  const Ray x = s.ray();
  c.record("alpha", to_json(a));
  c.record("x", to_json(x));
  const Vec u = (s.rng().uniform(0.1, 10.0) * s.rng().phase()) * x.rep();
  const double pu = norm(project_vec(a, u));
  return TrialResult::ok(std::abs(p_prop(x, a, c.tol) - pu * pu / (norm(u) * norm(u))));
}

TrialResult theta_definition(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray x = s.ray();
  const Ray y = s.ray();
  const Ray z = s.ray();
  c.record("rays", rays_json({&x, &y, &z}));
  if (near_orthogonal({{&x, &y}, {&y, &z}, {&z, &x}})) return TrialResult::skip();
  const double th = theta(x, y, z);
  const Vec u = with_phase(s, x), v = with_phase(s, y), w = with_phase(s, z);
  const double direct = std::arg(inner(u, v)) + std::arg(inner(v, w)) + std::arg(inner(w, u));
  double res = circular_distance(th, direct);
  res = max(res, circular_distance(theta(x, y, x), 0.0));
  if (s.real_only()) res = max(res, std::min(circular_distance(th, 0.0), circular_distance(th, std::numbers::pi)));

  // Entrywise-positive real representatives have positive inner products.
  auto positive = [&s] {
    Vec v(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) v[i] = std::abs(s.rng().normal()) + 1e-3;
    return Ray::from(v);
  };
  const Ray p1 = positive(), p2 = positive(), p3 = positive();
  res = max(res, circular_distance(theta(p1, p2, p3), 0.0));
  return TrialResult::ok(res);
}

TrialResult theta_cyclic(TrialContext& c) {
  Sampler& s = c.sample;
  const Ray x = s.ray(), y = s.ray(), z = s.ray(), w = s.ray();
  c.record("rays", rays_json({&x, &y, &z, &w}));
  if (near_orthogonal({{&x, &y}, {&y, &z}, {&z, &x}, {&x, &w}, {&y, &w}, {&z, &w}})) return TrialResult::skip();
  const double t = theta(x, y, z);
  double res = circular_distance(theta(y, z, x), t);
  res = max(res, circular_distance(theta(z, x, y), t));
  res = max(res, circular_distance(theta(x, z, y), -t));
  res = max(res, circular_distance(theta(x, y, w), t + theta(x, z, w) + theta(z, y, w)));
  return TrialResult::ok(res);
}

TrialResult theta_prime(TrialContext& c) {
  Sampler& s = c.sample;
  const auto t = s.coplanar_rays(3);
  const Ray &x = t[0], &y = t[1], &z = t[2];
  c.record("rays", rays_json({&x, &y, &z}));
  if (near_orthogonal({{&x, &y}, {&y, &z}, {&z, &x}})) return TrialResult::skip();
  if (1.0 - p_sim(x, y) < kSkipDenominator || 1.0 - p_sim(y, z) < kSkipDenominator ||
      1.0 - p_sim(z, x) < kSkipDenominator) {
    return TrialResult::skip();
  }
  const Triple pt = prime_triple(x, y, z, c.tol);
  const double res = circular_distance(theta(pt.x, pt.y, pt.z), -theta(x, y, z));
  const bool ok = is_orthogonal(pt.x, x, c.tol) && is_orthogonal(pt.y, y, c.tol) && is_orthogonal(pt.z, z, c.tol);
  return ok ? TrialResult::ok(res) : TrialResult::fail(res);
}

}  // namespace

void add_geometry_laws(std::vector<Law>& out) {
  using enum Flavor;
  using enum ToleranceKind;
  out.push_back({"background.projection",
                 "Projections are Hermitian idempotents; a(a(x)) = a(x); a(x) = x iff x in a; not not a = a; "
                 "b = a or (not a and b) whenever a is within b",
                 NestedPair, Absolute, 0.0, 2, false, projection_basics});
  out.push_back({"principle.classical",
                 "Distinct classical states are orthogonal, admit no superposition, and satisfy reciprocity vacuously",
                 ClassicalOrthogonal, Absolute, 0.0, 2, false, classical_principle});
  out.push_back({"principle.reciprocity",
                 "For pairwise different x, y, z: if (not x)(y) = (not x)(z) then (not y)(x) = (not y)(z)", Coplanar,
                 Absolute, 0.0, 2, false, reciprocity});
  out.push_back({"definition.coplanarity", "Coplanarity is invariant under permutations of the triple", Coplanar,
                 Absolute, 0.0, 2, false, coplanarity_definition});
  out.push_back({"lemma.a",
                 "a(x, y) lies in [0, 1], is symmetric, equals 1 only for x = y, vanishes for orthogonal rays and "
                 "does not depend on representatives",
                 GenericComplex, Absolute, 0.0, 2, false, similarity_a});
  out.push_back({"lemma.inner", "The projection of u onto the ray of unit v is <u, v> v", GenericComplex, Absolute,
                 0.0, 2, false, projection_on_ray});
  out.push_back({"lemma.p",
                 "p(x, y) = <u, y(u)> = |y(u)|^2 lies in [0, 1], is symmetric, and equals 1 only for x = y",
                 GenericComplex, Absolute, 0.0, 2, false, similarity_p});
  out.push_back({"theorem.p_chain", "For y in alpha: p(x, y) = p(x, alpha) p(alpha(x), y)", GenericComplex,
                 Absolute, 0.0, 2, false, p_chain});
  out.push_back({"corollary.max", "alpha(x) is the unique maximizer of p(x, y) over rays y in alpha",
                 GenericComplex, Absolute, 0.0, 2, false, projection_is_argmax});
  out.push_back({"corollary.satisfaction", "x in alpha iff alpha(x) = x iff p(x, alpha) = 1", GenericComplex,
                 Absolute, 0.0, 2, false, satisfaction});
  out.push_back({"lemma.born", "p(x, alpha) = |alpha(u)|^2 / |u|^2 for any nonzero representative u",
                 GenericComplex, Absolute, 0.0, 2, false, born});
  out.push_back({"definition.theta",
                 "theta(x, y, z) is independent of representatives, theta(x, y, x) = 0, and triples with positive "
                 "inner products have theta = 0",
                 GenericComplex, Angle, 0.0, 2, false, theta_definition});
  out.push_back({"lemma.theta_cyclic",
                 "theta is cyclic, antisymmetric under transposition, and satisfies "
                 "theta(x, y, w) = theta(x, y, z) + theta(x, z, w) + theta(z, y, w)",
                 GenericComplex, Angle, 0.0, 2, false, theta_cyclic});
  out.push_back({"lemma.theta_prime", "For coplanar x, y, z the orthocomplement triple has theta' = -theta", Coplanar,
                 Angle, 0.0, 2, false, theta_prime});
}

}  // namespace raygeo::laws

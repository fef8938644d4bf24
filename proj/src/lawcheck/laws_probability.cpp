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
#include "raygeo/probability.hpp"

namespace raygeo::laws {

namespace {

using std::max;

void record_pair(TrialContext& c, const Subspace& a, const Subspace& b, const Ray& x) {
  c.record("alpha", to_json(a));
  c.record("beta", to_json(b));
  c.record("x", to_json(x));
}

bool has_decomposition(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  const Subspace na = ortho_complement(a, tol);
  const Subspace nb = ortho_complement(b, tol);
  const Subspace g1 = meet(a, b, tol);
  const Subspace g2 = meet(a, nb, tol);
  const Subspace g3 = meet(na, b, tol);
  return same_subspace(a, join(g1, g2, tol), tol) && same_subspace(b, join(g1, g3, tol), tol);
}

std::pair<Subspace, Subspace> independent_pair(Sampler& s) {
  Subspace a = s.subspace();
  return {a, s.subspace()};
}

TrialResult commuting_iff_decomposable(TrialContext& c) {
  Sampler& s = c.sample;
  const bool constructed = c.trial % 2 == 0;
  const auto [a, b] = constructed ? s.pair() : independent_pair(s);
  c.record("alpha", to_json(a));
  c.record("beta", to_json(b));
  const bool comm = commutes(a, b, 0, c.tol);
  bool ok = comm == has_decomposition(a, b, c.tol);
  if (constructed && (s.flavor() == Flavor::CommutingPair || s.flavor() == Flavor::NestedPair)) ok = ok && comm;
  return ok ? TrialResult::ok() : TrialResult::fail();
}

TrialResult nested_and_orthogonal_commute(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [a, b] = c.trial % 2 == 0 ? s.nested_pair() : s.orthogonal_pair();
  c.record("alpha", to_json(a));
  c.record("beta", to_json(b));
  const bool ok = commutes(a, b, 0, c.tol) && has_decomposition(a, b, c.tol);
  return ok ? TrialResult::ok() : TrialResult::fail();
}

TrialResult complement_commutes(TrialContext& c) {
  Sampler& s = c.sample;
  const bool constructed = c.trial % 2 == 0;
  const auto [a, b] = constructed ? s.commuting_pair() : independent_pair(s);
  c.record("alpha", to_json(a));
  c.record("beta", to_json(b));
  const Subspace na = ortho_complement(a, c.tol);
  const bool comm = commutes(a, b, 0, c.tol);
  bool ok = comm == commutes(na, b, 0, c.tol) && comm == commutes(na, ortho_complement(b, c.tol), 0, c.tol);
  if (constructed) ok = ok && comm;
  return ok ? TrialResult::ok() : TrialResult::fail();
}

TrialResult ortho_additivity(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [a, b] = s.orthogonal_pair();
  const Ray x = s.ray();
  record_pair(c, a, b, x);
  return TrialResult::ok(check_ortho_additivity(x, a, b, c.tol));
}

TrialResult finite_additivity(TrialContext& c) {
  Sampler& s = c.sample;
  const auto parts = s.orthogonal_family(2 + c.trial % 3);
  const Ray x = s.ray();
  Json arr = Json::array();
  for (const auto& p : parts) arr.push_back(to_json(p));
  c.record("parts", arr);
  c.record("x", to_json(x));
  return TrialResult::ok(check_finite_additivity(x, parts, c.tol));
}

TrialResult complement(TrialContext& c) {
  Sampler& s = c.sample;
  const Subspace a = s.subspace(s.rng().index(s.dim() + 1));
  const Ray x = s.ray();
  c.record("alpha", to_json(a));
  c.record("x", to_json(x));
  return TrialResult::ok(check_complement(x, a, c.tol));
}

TrialResult zero_one(TrialContext& c) {
  Sampler& s = c.sample;
  const Subspace a = s.subspace(s.rng().index(s.dim() + 1));
  const Ray x = s.ray();
  c.record("alpha", to_json(a));
  c.record("x", to_json(x));
  const double p = p_prop(x, a, c.tol);
  double res = max({0.0, -p, p - 1.0});
  res = max(res, std::abs(p_prop(x, Subspace::falsehood(s.dim()), c.tol)));
  res = max(res, std::abs(p_prop(x, Subspace::truth(s.dim()), c.tol) - 1.0));
  return TrialResult::ok(res);
}

TrialResult inclusion_exclusion(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [a, b] = s.pair();
  const Ray x = s.ray();
  record_pair(c, a, b, x);
  return TrialResult::ok(check_inclusion_exclusion(x, a, b, c.tol));
}

TrialResult conjunction(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [a, b] = s.pair();
  const Ray x = s.ray();
  record_pair(c, a, b, x);
  return TrialResult::ok(check_chain_rule(x, a, b, c.tol));
}

TrialResult monotone(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [a, b] = s.nested_pair();
  const Ray x = s.ray();
  record_pair(c, a, b, x);
  const double res = max(0.0, p_prop(x, a, c.tol) - p_prop(x, b, c.tol));
  return check_monotone(x, a, b, c.tol) ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult total_probability(TrialContext& c) {
  Sampler& s = c.sample;
  const auto [a, b] = s.pair();
  const Ray x = s.ray();
  record_pair(c, a, b, x);
  return TrialResult::ok(total_probability_residual(x, a, b, c.tol));
}

TrialResult total_probability_counterexample(TrialContext& c) {
  Sampler& s = c.sample;
  const auto f = s.frame();
  const double th = s.rng().uniform(0.0, 2.0 * std::numbers::pi);
  const double ct = std::cos(th), st = std::sin(th);
  const Ray x = Ray::from(ct * f[0] + st * f[1], c.tol);
  const Subspace a = Subspace::span(std::vector<Vec>{f[0]}, s.dim(), c.tol);
  // Even trials take beta = x, odd trials the in-plane orthogonal ray.
  const Vec bvec = c.trial % 2 == 0 ? x.rep() : Vec(-st * f[0] + ct * f[1]);
  const Subspace b = Subspace::span(std::vector<Vec>{bvec}, s.dim(), c.tol);
  record_pair(c, a, b, x);
  c.record("theta", th);
  const double residual = total_probability_residual(x, a, b, c.tol);
  const double analytic = std::abs(1.0 - std::pow(ct, 4) - std::pow(st, 4));
  c.record("identity_residual", residual);
  c.record("analytic_residual", analytic);
  const double mismatch = std::abs(residual - analytic);
  return residual > c.tol.eps_abs ? TrialResult::ok(mismatch) : TrialResult::fail(mismatch);
}

TrialResult orthomodular_equality(TrialContext& c) {
  Sampler& s = c.sample;
  const Subspace a = s.subspace();
  const Ray x = s.ray();
  const Vec ax = project_vec(a, x.rep());
  std::vector<Vec> gen{ax, x.rep() - ax};
  const std::size_t extra = s.rng().index(s.dim() - 1);
  for (std::size_t i = 0; i < extra; ++i) gen.push_back(random_vector(s.rng(), s.dim(), s.real_only()));
  const Subspace b = Subspace::span(gen, s.dim(), c.tol);
  record_pair(c, a, b, x);
  const double res = max(std::abs(p_prop(x, b, c.tol) - 1.0), total_probability_residual(x, a, b, c.tol));
  return TrialResult::ok(res);
}

TrialResult local_commutation(TrialContext& c) {
  Sampler& s = c.sample;
  const auto e = s.frame();
  auto coeff = [&s] {
    const double m = s.rng().uniform(0.2, 1.2);
    return s.real_only() ? Cplx(s.rng().uniform() < 0.5 ? -m : m, 0.0) : m * s.rng().phase();
  };
  // alpha = span{e0, e1}; beta = span{e0, e2, f} with f mixing e1 and e3, so the
  // projectors do not commute, while x in span{e0, e2, e4} sees them commute.
  const Subspace a = Subspace::span(std::vector<Vec>{e[0], e[1]}, s.dim(), c.tol);
  const Vec f = coeff() * e[1] + coeff() * e[3];
  const Subspace b = Subspace::span(std::vector<Vec>{e[0], e[2], f}, s.dim(), c.tol);
  Vec xv = coeff() * e[0] + coeff() * e[2];
  if (s.dim() >= 5) xv += coeff() * e[4];
  const Ray x = Ray::from(xv, c.tol);
  record_pair(c, a, b, x);
  const double res = check_total_probability(x, a, b, c.tol);
  const bool ok = locally_commutes(x, a, b, c.tol) && !commutes(a, b, 0, c.tol);
  return ok ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult interference(TrialContext& c) {
  Sampler& s = c.sample;
  const Subspace a = s.subspace();
  const Subspace b = s.subspace();
  const Ray x = s.ray_in(a);
  record_pair(c, a, b, x);
  const RayOrZero bx = project_ray(b, x, c.tol);
  if (is_zero(bx) || a_sim(x, std::get<Ray>(bx)) < kSkipModulus) return TrialResult::skip();
  if (p_prop(std::get<Ray>(bx), a, c.tol) < kSkipModulus * kSkipModulus) return TrialResult::skip();
  const double margin = check_interference_inequality(x, a, b, c.tol);
  c.record("margin", margin);
  return TrialResult::ok(max(0.0, -margin));
}

TrialResult interference_corollary(TrialContext& c) {
  Sampler& s = c.sample;
  const bool constructed = c.trial % 2 == 0;
  const auto [a, b] = constructed ? s.commuting_pair(true) : independent_pair(s);
  const Ray x = s.ray_in(a);
  record_pair(c, a, b, x);
  const RayOrZero bx = project_ray(b, x, c.tol);
  if (is_zero(bx) || a_sim(x, std::get<Ray>(bx)) < kSkipModulus) return TrialResult::skip();
  const RayOrZero abx = project_ray(a, bx, c.tol);
  const bool antecedent = !is_zero(abx) && is_member(std::get<Ray>(abx), b, c.tol);
  const bool conclusion = is_member(std::get<Ray>(bx), a, c.tol);
  if (constructed && !antecedent) return TrialResult::fail();
  return !antecedent || conclusion ? TrialResult::ok() : TrialResult::fail();
}

}  // namespace

void add_probability_laws(std::vector<Law>& out) {
  using enum Flavor;
  using enum ToleranceKind;
  out.push_back({"lemma.commuting",
                 "alpha and beta commute iff alpha = g1 or g2 and beta = g1 or g3 for pairwise orthogonal g1, g2, g3",
                 CommutingPair, Absolute, 0.0, 2, false, commuting_iff_decomposable});
  out.push_back({"corollary.comm", "Nested propositions commute, and so do orthogonal ones", NestedPair, Absolute,
                 0.0, 2, false, nested_and_orthogonal_commute});
  out.push_back({"corollary.comm_neg", "alpha commutes with beta iff not alpha commutes with beta", CommutingPair,
                 Absolute, 0.0, 2, false, complement_commutes});
  out.push_back({"lemma.orthodisjunction", "For orthogonal alpha, beta: p(x, alpha or beta) = p(x, alpha) + p(x, beta)",
                 GenericComplex, Absolute, 0.0, 2, false, ortho_additivity});
  out.push_back({"corollary.orthodisjunction", "p is additive over k pairwise orthogonal propositions",
                 GenericComplex, Absolute, 0.0, 2, false, finite_additivity});
  out.push_back({"lemma.complement", "p(x, alpha) + p(x, not alpha) = 1", GenericComplex, Absolute, 0.0, 2, false,
                 complement});
  out.push_back({"lemma.zero_one", "0 <= p(x, alpha) <= 1, p(x, false) = 0, p(x, true) = 1", GenericComplex, Absolute,
                 0.0, 2, false, zero_one});
  out.push_back({"lemma.inclusion_exclusion",
                 "For commuting alpha, beta: p(x, alpha or beta) = p(x, alpha) + p(x, beta) - p(x, alpha and beta)",
                 CommutingPair, Absolute, 0.0, 2, false, inclusion_exclusion});
  out.push_back({"lemma.conjunction",
                 "For commuting alpha, beta: p(x, alpha and beta) = p(x, alpha) p(alpha(x), beta)", CommutingPair,
                 Absolute, 0.0, 2, false, conjunction});
  out.push_back({"corollary.monotone", "alpha within beta implies p(x, alpha) <= p(x, beta)", NestedPair, Absolute,
                 0.0, 2, false, monotone});
  out.push_back({"lemma.total_probability",
                 "For commuting alpha, beta: p(x, beta) = p(x, alpha) p(alpha(x), beta) + "
                 "p(x, not alpha) p((not alpha)(x), beta)",
                 CommutingPair, Absolute, 0.0, 2, false, total_probability});
  out.push_back({"counterexample.total_probability",
                 "Negative control: without commutation the total-probability identity fails, with residual "
                 "|1 - cos^4 t - sin^4 t| on the planar family alpha = axis, beta = x at angle t",
                 GenericComplex, Relative, 0.0, 2, true, total_probability_counterexample});
  out.push_back({"lemma.orthomodular_equality",
                 "If alpha(x) and (not alpha)(x) lie in beta, both sides of the total-probability identity are 1",
                 GenericComplex, Absolute, 0.0, 2, false, orthomodular_equality});
  out.push_back({"lemma.local_commutation",
                 "Total probability holds whenever alpha(beta(x)) = beta(alpha(x)), even for non-commuting alpha, beta",
                 GenericComplex, Absolute, 0.0, 4, false, local_commutation});
  out.push_back({"theorem.interference",
                 "For x in alpha: p(x, beta)(1 - p(beta(x), alpha))^2 <= p(beta(x), alpha)(1 - p(alpha(beta(x)), beta))",
                 GenericComplex, Fixed, 1e-12, 2, false, interference});
  out.push_back({"corollary.interference", "For x in alpha: alpha(beta(x)) in beta implies beta(x) in alpha",
                 GenericComplex, Absolute, 0.0, 2, false, interference_corollary});
}

}  // namespace raygeo::laws

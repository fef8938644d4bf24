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

#include <algorithm>
#include <cmath>

#include "laws.hpp"
#include "raygeo/morphisms.hpp"

namespace raygeo::laws {

namespace {

using std::max;

constexpr int kInnerTrials = 20;

std::size_t out_dim(const TrialContext& c) {
  return std::min<std::size_t>(c.sample.dim() + c.trial % 3, 32);
}

/// Even trials draw an isometry up to scale, odd trials a non-isometry; an
/// explicit flavor override pins one family.
bool wants_isometry(const TrialContext& c) {
  switch (c.sample.flavor()) {
    case Flavor::Isometry:
      return true;
    case Flavor::NonIsometry:
      return false;
    default:
      return c.trial % 2 == 0;
  }
}

Mat draw_map(TrialContext& c, bool isometric) {
  Sampler& s = c.sample;
  Mat m = isometric ? s.isometry(out_dim(c), s.dim()) : s.non_isometry(out_dim(c), s.dim());
  c.record("map", to_json(m));
  c.record("isometric", isometric);
  return m;
}

TrialResult regular_definition(TrialContext& c) {
  Sampler& s = c.sample;
  const bool iso = s.flavor() == Flavor::Isometry;
  const Mat m = draw_map(c, iso);
  const RegularMap f{LinearMap(m, c.tol)};
  Mat km = m;
  km *= s.rng().uniform(0.1, 10.0) * s.rng().phase();
  const RegularMap g{LinearMap(km, c.tol)};
  const Ray x = s.ray();
  const Ray y = s.ray();
  c.record("rays", rays_json({&x, &y}));
  const Ray fx = apply_ray(f, x, c.tol);
  double res = ray_distance(fx, apply_ray(g, x, c.tol));
  res = max(res, ray_distance(fx, Ray::from(m * with_phase(s, x), c.tol)));
  const bool injective = ray_distance(fx, apply_ray(f, y, c.tol)) > c.tol.eps_abs;
  return injective ? TrialResult::ok(res) : TrialResult::fail(res);
}

TrialResult isometry_preserves_inner(TrialContext& c) {
  Sampler& s = c.sample;
  const Mat u = random_isometry(s.rng(), out_dim(c), s.dim(), s.real_only());
  c.record("map", to_json(u));
  const Vec a = random_vector(s.rng(), s.dim(), s.real_only());
  const Vec b = random_vector(s.rng(), s.dim(), s.real_only());
  const double scale = max(1.0, norm(a) * norm(b));
  return TrialResult::ok(std::abs(inner(u * a, u * b) - inner(a, b)) / scale);
}

TrialResult preserving_is_isometry(TrialContext& c) {
  Sampler& s = c.sample;
  const Mat m = draw_map(c, wants_isometry(c));
  const RegularMap f{LinearMap(m, c.tol)};
  const SuperpositionVerdict verdict = preserves_superpositions(f, kInnerTrials, s.rng().next_u64(), c.tol);
  const std::optional<double> scale = isometry_scale(f, 8, c.tol);
  c.record("preserved", verdict.preserved);
  if (!verdict.preserved) {
    return !scale && verdict.witness ? TrialResult::ok() : TrialResult::fail();
  }
  if (!scale) return TrialResult::fail();
  double res = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Vec u = random_vector(s.rng(), s.dim(), s.real_only());
    res = max(res, std::abs(norm(m * u) - *scale * norm(u)) / (*scale * norm(u)));
  }
  return TrialResult::ok(res);
}

TrialResult isometry_preserves_superpositions(TrialContext& c) {
  Sampler& s = c.sample;
  const Mat m = draw_map(c, true);
  const RegularMap f{LinearMap(m, c.tol)};
  const std::uint64_t seed = s.rng().next_u64();
  const PThetaResiduals pt = check_preserves_p_theta(f, kInnerTrials, seed, c.tol);
  const SuperpositionVerdict verdict = preserves_superpositions(f, kInnerTrials, seed, c.tol);
  c.record("theta_residual", pt.theta);
  const bool ok = verdict.preserved && pt.theta <= c.angle_tol;
  return ok ? TrialResult::ok(pt.p) : TrialResult::fail(pt.p);
}

TrialResult characterization(TrialContext& c) {
  Sampler& s = c.sample;
  const Mat m = draw_map(c, wants_isometry(c));
  const RegularMap f{LinearMap(m, c.tol)};
  return check_char_morph(f, kInnerTrials, s.rng().next_u64(), c.tol) ? TrialResult::ok() : TrialResult::fail();
}

}  // namespace

void add_morphism_laws(std::vector<Law>& out) {
  using enum Flavor;
  using enum ToleranceKind;
  out.push_back({"definition.regular",
                 "An injective linear map induces a well-defined injective map on rays, unchanged by scalar multiples",
                 NonIsometry, Absolute, 0.0, 2, false, regular_definition});
  out.push_back({"theorem.isometry", "A norm-preserving linear map preserves inner products", Isometry, Absolute, 0.0,
                 2, false, isometry_preserves_inner});
  out.push_back({"lemma.regular", "A regular map that preserves superpositions is an isometry up to a positive scale",
                 GenericComplex, Relative, 0.0, 2, false, preserving_is_isometry});
  out.push_back({"lemma.unit_superp", "Isometries up to scale preserve p, theta and superpositions", Isometry,
                 Absolute, 0.0, 2, false, isometry_preserves_superpositions});
  out.push_back({"theorem.char_morph", "A regular map preserves superpositions iff it is an isometry up to scale",
                 GenericComplex, Absolute, 0.0, 2, false, characterization});
}

}  // namespace raygeo::laws

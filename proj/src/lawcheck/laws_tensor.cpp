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
#include "raygeo/tensor.hpp"

namespace raygeo::laws {

namespace {

TrialResult p_product(TrialContext& c) {
  Sampler& s = c.sample;
  Rng& rng = s.rng();
  const Ray x1 = random_ray(rng, 2, s.real_only()), y1 = random_ray(rng, 2, s.real_only());
  const Ray x2 = s.ray(), y2 = s.ray();
  c.record("rays", rays_json({&x1, &y1, &x2, &y2}));
  double res = check_p_product(x1, y1, x2, y2);
  const Vec u1 = random_vector(rng, 2, s.real_only()), v1 = random_vector(rng, 2, s.real_only());
  const Vec u2 = random_vector(rng, s.dim(), s.real_only()), v2 = random_vector(rng, s.dim(), s.real_only());
  const double scale = std::max(1.0, norm(u1) * norm(v1) * norm(u2) * norm(v2));
  res = std::max(res, std::abs(inner(kron(u1, u2), kron(v1, v2)) - inner(u1, v1) * inner(u2, v2)) / scale);
  return TrialResult::ok(res);
}

TrialResult theta_product(TrialContext& c) {
  Sampler& s = c.sample;
  Rng& rng = s.rng();
  const Ray x1 = random_ray(rng, 2, s.real_only()), y1 = random_ray(rng, 2, s.real_only()),
            z1 = random_ray(rng, 2, s.real_only());
  const Ray x2 = s.ray(), y2 = s.ray(), z2 = s.ray();
  c.record("rays", rays_json({&x1, &y1, &z1, &x2, &y2, &z2}));
  if (near_orthogonal({{&x1, &y1}, {&y1, &z1}, {&z1, &x1}, {&x2, &y2}, {&y2, &z2}, {&z2, &x2}})) {
    return TrialResult::skip();
  }
  return TrialResult::ok(check_theta_product(x1, y1, z1, x2, y2, z2));
}

}  // namespace

void add_tensor_laws(std::vector<Law>& out) {
  using enum Flavor;
  using enum ToleranceKind;
  out.push_back({"tensor.p_product", "p(x1 (x) x2, y1 (x) y2) = p(x1, y1) p(x2, y2) on C^2 (x) C^d", GenericComplex,
                 Absolute, 0.0, 2, false, p_product});
  out.push_back({"tensor.theta_product",
                 "theta of product triples on C^2 (x) C^d is the sum of the factor thetas, mod 2 pi", GenericComplex,
                 Absolute, 0.0, 2, false, theta_product});
}

}  // namespace raygeo::laws

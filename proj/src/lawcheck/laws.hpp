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

// Law families registered by law_registry(), plus helpers shared by their
// trial bodies.

#include <algorithm>
#include <cmath>
#include <vector>

#include "raygeo/geometry.hpp"
#include "raygeo/io.hpp"
#include "raygeo/lawcheck.hpp"

namespace raygeo::laws {

void add_geometry_laws(std::vector<Law>& out);
void add_superposition_laws(std::vector<Law>& out);
void add_probability_laws(std::vector<Law>& out);
void add_morphism_laws(std::vector<Law>& out);
void add_tensor_laws(std::vector<Law>& out);

/// True when any listed pair is too close to orthogonal for a stable check.
inline bool near_orthogonal(std::initializer_list<std::pair<const Ray*, const Ray*>> pairs) {
  return std::any_of(pairs.begin(), pairs.end(),
                     [](const auto& pr) { return a_sim(*pr.first, *pr.second) < kSkipModulus; });
}

/// Distance between projection results; a zero/nonzero mismatch counts as 1.
inline double distance(const RayOrZero& a, const RayOrZero& b) {
  if (is_zero(a) && is_zero(b)) return 0.0;
  if (is_zero(a) || is_zero(b)) return 1.0;
  return ray_distance(std::get<Ray>(a), std::get<Ray>(b));
}

inline Json rays_json(std::initializer_list<const Ray*> rs) {
  Json arr = Json::array();
  for (const Ray* r : rs) arr.push_back(to_json(*r));
  return arr;
}

/// Ray orthogonal to `x`, drawn at random.
inline Ray orthogonal_ray(Sampler& s, const Ray& x) {
  for (;;) {
    Vec w = random_vector(s.rng(), s.dim(), s.real_only());
    w -= inner(w, x.rep()) * x.rep();
    if (norm(w) > 1e-6) return Ray::from(w);
  }
}

inline Vec with_phase(Sampler& s, const Ray& x) { return s.rng().phase() * x.rep(); }

}  // namespace raygeo::laws

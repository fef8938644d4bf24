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

// Hand-rolled property-test generators on top of the library's seeded Rng.

#include <cstdint>
#include <string_view>
#include <vector>

#include "raygeo/random.hpp"
#include "raygeo/rays.hpp"

namespace gen {

inline constexpr std::uint64_t kSeed = 20261016;

/// Calls fn(rng, dim, case_index) for `cases` cases with dims cycling 2..8.
template <class Fn>
void for_all(std::string_view label, int cases, Fn&& fn) {
  for (int i = 0; i < cases; ++i) {
    raygeo::Rng rng = raygeo::Rng::substream(kSeed, label, static_cast<std::uint64_t>(i), 0);
    const std::size_t dim = 2 + static_cast<std::size_t>(i) % 7;
    fn(rng, dim, i);
  }
}

inline raygeo::Subspace subspace(raygeo::Rng& rng, std::size_t dim, std::size_t rank, bool real_only = false) {
  std::vector<raygeo::Vec> vs;
  for (std::size_t i = 0; i < rank; ++i) vs.push_back(raygeo::random_vector(rng, dim, real_only));
  return raygeo::Subspace::span(vs, dim);
}

/// Rank uniform in [1, dim - 1].
inline raygeo::Subspace proper_subspace(raygeo::Rng& rng, std::size_t dim) {
  return subspace(rng, dim, 1 + rng.index(dim - 1));
}

inline std::vector<raygeo::Vec> frame_prefix(raygeo::Rng& rng, std::size_t dim, std::size_t k) {
  auto f = raygeo::random_frame(rng, dim);
  f.resize(k);
  return f;
}

}  // namespace gen

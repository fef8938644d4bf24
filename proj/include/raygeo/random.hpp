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

// Seeded, reproducible sampling of vectors, rays and unitary frames.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Substreams are keyed with the SplitMix64 finalizer over
// (seed, FNV-1a(label), a, b). Uniform doubles take the top 53 bits; normals
// use the Box-Muller transform, so no library distribution is involved.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "raygeo/linalg.hpp"
#include "raygeo/rays.hpp"

namespace raygeo {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t splitmix64(std::uint64_t x);
  static std::uint64_t fnv1a(std::string_view s);
  /// Independent stream for (seed, label, a, b), e.g. (run seed, law id, dim, trial).
  static Rng substream(std::uint64_t seed, std::string_view label, std::uint64_t a,
                       std::uint64_t b);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Standard complex Gaussian (independent N(0, 1/2) parts).
  Cplx complex_normal();
  /// Uniform on the unit circle.
  Cplx phase();
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);

private:
  std::mt19937_64 engine_;
};

Vec random_vector(Rng& rng, std::size_t dim, bool real_only = false);
Ray random_ray(Rng& rng, std::size_t dim, bool real_only = false);
/// Orthonormal basis of C^dim (columns of a Haar-like unitary).
std::vector<Vec> random_frame(Rng& rng, std::size_t dim, bool real_only = false);
/// dim_out x dim_in matrix with orthonormal columns.
Mat random_isometry(Rng& rng, std::size_t dim_out, std::size_t dim_in, bool real_only = false);
/// Random unit vector of `a` (a must have positive rank).
Vec random_unit_in(Rng& rng, const Subspace& a);

}  // namespace raygeo

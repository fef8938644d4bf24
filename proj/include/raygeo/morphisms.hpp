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

// Ray maps induced by injective linear maps, isometry detection up to scale,
// and sampled verification that superpositions are preserved.

#include <cstdint>
#include <optional>

#include "raygeo/linalg.hpp"
#include "raygeo/rays.hpp"
#include "raygeo/superposition.hpp"

namespace raygeo {

/// Injective linear map C^dim_in -> C^dim_out (dim_out x dim_in matrix).
class LinearMap {
public:
  /// Throws NotInjective when the columns are numerically dependent.
  explicit LinearMap(Mat matrix, const Tolerance& tol = {});

  const Mat& matrix() const noexcept { return matrix_; }
  std::size_t dim_in() const noexcept { return matrix_.cols(); }
  std::size_t dim_out() const noexcept { return matrix_.rows(); }

private:
  Mat matrix_;
};

/// The ray map x -> m(x) induced by an injective linear map m.
class RegularMap {
public:
  explicit RegularMap(LinearMap m) : m_(std::move(m)) {}
  const LinearMap& underlying() const noexcept { return m_; }

private:
  LinearMap m_;
};

Ray apply_ray(const RegularMap& f, const Ray& x, const Tolerance& tol = {});

/// c > 0 with |m u| = c |u| for all u, or nullopt. Decided by m^dagger m = c^2 I
/// (relative tolerance eps_rel) and cross-checked on `probes` random vectors.
std::optional<double> isometry_scale(const RegularMap& f, int probes = 8, const Tolerance& tol = {});

struct SuperpositionVerdict {
  bool preserved = true;
  double worst_residual = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  /// First failing (y, z, r) by trial index.
  std::optional<SuperpositionSpec> witness;
};

/// Samples non-orthogonal (y, z) and r in [0,1] and compares
/// f(r y + (1-r) z) with r f(y) + (1-r) f(z) by ray distance (eps_abs).
SuperpositionVerdict preserves_superpositions(const RegularMap& f, int trials = 500, std::uint64_t seed = 42,
                                              const Tolerance& tol = {});

/// Whether the exact isometry test and the sampled superposition verdict agree.
bool check_char_morph(const RegularMap& f, int trials = 500, std::uint64_t seed = 42, const Tolerance& tol = {});

struct PThetaResiduals {
  double p = 0.0;
  double theta = 0.0;  ///< circular distance, radians
};

/// Worst |p(f x, f y) - p(x, y)| and theta deviation over sampled states.
/// Throws NotIsometry when isometry_scale fails.
PThetaResiduals check_preserves_p_theta(const RegularMap& f, int trials = 500, std::uint64_t seed = 42,
                                        const Tolerance& tol = {});

}  // namespace raygeo

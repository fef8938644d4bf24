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

// Registry of named mathematical laws, each checked over seeded random
// instances, with structured pass/fail reporting.
//
// A run is a pure function of (law id, GeneratorSpec): trial t in dimension d
// draws from Rng::substream(seed, law id, d, t), so reports are identical
// regardless of scheduling.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raygeo/io.hpp"
#include "raygeo/linalg.hpp"
#include "raygeo/random.hpp"
#include "raygeo/rays.hpp"

namespace raygeo {

enum class Flavor {
  GenericComplex,
  RealOnly,
  Coplanar,
  CommutingPair,
  NestedPair,
  ClassicalOrthogonal,
  Isometry,
  NonIsometry,
};

std::string_view to_string(Flavor f);
std::optional<Flavor> flavor_from_string(std::string_view s);

/// Trials with a required non-orthogonality below this modulus are skipped.
inline constexpr double kSkipModulus = 1e-6;
/// Trials with a closed-form denominator below this are skipped.
inline constexpr double kSkipDenominator = 1e-8;
/// Laws fail when more than this fraction of trials is skipped.
inline constexpr double kMaxSkipRate = 0.05;
/// Negative controls pass when their target identity fails on more than this
/// fraction of applicable trials.
inline constexpr double kNegativeControlRate = 0.9;

struct GeneratorSpec {
  std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
  std::size_t trials_per_dim = 1000;
  std::uint64_t seed = 42;
  /// Overrides every law's default instance flavor when set.
  std::optional<Flavor> flavor;
  Tolerance tol;
  double angle_tol = 1e-8;

  /// Throws std::invalid_argument: trials_per_dim >= 1, dims within [2, 32].
  void validate() const;
};

/// Draws the instance families the laws are checked on.
class Sampler {
public:
  Sampler(Rng& rng, std::size_t dim, Flavor flavor) : rng_(rng), dim_(dim), flavor_(flavor) {}

  Rng& rng() noexcept { return rng_; }
  std::size_t dim() const noexcept { return dim_; }
  Flavor flavor() const noexcept { return flavor_; }
  bool real_only() const noexcept { return flavor_ == Flavor::RealOnly; }

  Ray ray();
  Ray ray_in(const Subspace& a);
  /// Ray inside span{e, f} for orthonormal e, f.
  Ray ray_in_plane(const Vec& e, const Vec& f);
  std::vector<Vec> frame();
  Subspace subspace(std::size_t rank);
  /// Rank uniform in [1, dim-1].
  Subspace subspace();
  /// Built from one random frame: a = span(G1 u G2), b = span(G1 u G3) over a
  /// random partition of frame indices; `shared_nonempty` forces G1 != {}.
  std::pair<Subspace, Subspace> commuting_pair(bool shared_nonempty = false);
  /// first contained in second.
  std::pair<Subspace, Subspace> nested_pair();
  std::pair<Subspace, Subspace> orthogonal_pair();
  /// k nonempty pairwise orthogonal subspaces (k <= dim).
  std::vector<Subspace> orthogonal_family(std::size_t k);
  /// Pair following the flavor: commuting, nested, or independent.
  std::pair<Subspace, Subspace> pair();
  /// n rays inside one random 2-plane.
  std::vector<Ray> coplanar_rays(std::size_t n);
  /// k distinct standard-basis rays.
  std::vector<Ray> classical_rays(std::size_t k);
  /// c * (orthonormal columns), c uniform in [0.5, 3].
  Mat isometry(std::size_t dim_out, std::size_t dim_in);
  /// U diag(s) V^dagger with one singular value scaled by a factor in [1.1, 2].
  Mat non_isometry(std::size_t dim_out, std::size_t dim_in);

private:
  Rng& rng_;
  std::size_t dim_;
  Flavor flavor_;
};

enum class TrialStatus {
  Ok,    ///< law held (negative control: target identity failed as predicted)
  Fail,  ///< law violated (negative control: target identity held)
  Skip,  ///< near-degenerate instance, counted separately
};

struct TrialResult {
  TrialStatus status = TrialStatus::Ok;
  double residual = 0.0;

  static TrialResult ok(double residual = 0.0) { return {TrialStatus::Ok, residual}; }
  static TrialResult fail(double residual = 0.0) { return {TrialStatus::Fail, residual}; }
  static TrialResult skip() { return {TrialStatus::Skip, 0.0}; }
};

struct TrialContext {
  Sampler& sample;
  const Tolerance& tol;
  double angle_tol;
  std::uint64_t trial;
  /// Non-null only when a failing trial is replayed to build its counterexample.
  Json* capture;

  void record(const char* key, Json value) const {
    if (capture) (*capture)[key] = std::move(value);
  }
};

enum class ToleranceKind { Absolute, Relative, Angle, Fixed };

struct Law {
  std::string id;
  std::string statement;
  Flavor default_flavor = Flavor::GenericComplex;
  ToleranceKind tolerance_kind = ToleranceKind::Absolute;
  double fixed_tolerance = 0.0;  ///< used with ToleranceKind::Fixed
  std::size_t min_dim = 2;
  bool negative_control = false;
  std::function<TrialResult(TrialContext&)> trial;
};

struct LawReport {
  std::string law_id;
  std::string statement;
  bool negative_control = false;
  std::string flavor;
  std::size_t trials_run = 0;
  std::size_t trials_skipped = 0;
  std::size_t failures = 0;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  /// Negative controls: fraction of run trials where the target identity failed.
  std::optional<double> target_failure_rate;
  bool pass = false;
  std::optional<Json> counterexample;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims;
  double elapsed_ms = 0.0;

  double skip_rate() const;
};

const std::vector<Law>& law_registry();
const Law* find_law(std::string_view id);

/// Throws Error(UnknownLaw) for unregistered ids.
LawReport run_law(std::string_view id, const GeneratorSpec& gen);

/// Runs every registered law whose id matches one of `patterns` (shell glob;
/// empty = all), concurrently when `threads` != 1. Reports come back in
/// registry order.
std::vector<LawReport> run_all(const GeneratorSpec& gen, const std::vector<std::string>& patterns = {},
                               unsigned threads = 0);

bool aggregate_pass(const std::vector<LawReport>& reports);

bool glob_match(std::string_view pattern, std::string_view text);

/// elapsed_ms is wall-clock and only emitted when `include_timing` is set, so
/// that reports of identical runs are byte-identical.
Json to_json(const LawReport& r, bool include_timing = false);

/// A representative instance of `flavor` in dimension `dim`.
Json sample_instance(const GeneratorSpec& gen, Flavor flavor, std::size_t dim, std::uint64_t trial = 0);

}  // namespace raygeo

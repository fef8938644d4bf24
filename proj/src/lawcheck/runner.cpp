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

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "laws.hpp"
#include "raygeo/error.hpp"
#include "raygeo/lawcheck.hpp"

namespace raygeo {

void GeneratorSpec::validate() const {
  tol.validate();
  if (trials_per_dim == 0) throw std::invalid_argument("trials_per_dim must be at least 1");
  if (dims.empty()) throw std::invalid_argument("at least one dimension is required");
  for (auto d : dims) {
    if (d < 2 || d > 32) throw std::invalid_argument("dimensions must lie in [2, 32], got " + std::to_string(d));
  }
  if (!(angle_tol > 0.0)) throw std::invalid_argument("angle tolerance must be positive");
}

double LawReport::skip_rate() const {
  const std::size_t total = trials_run + trials_skipped;
  return total == 0 ? 0.0 : static_cast<double>(trials_skipped) / static_cast<double>(total);
}

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = [] {
    std::vector<Law> laws;
    laws::add_geometry_laws(laws);
    laws::add_superposition_laws(laws);
    laws::add_probability_laws(laws);
    laws::add_morphism_laws(laws);
    laws::add_tensor_laws(laws);
    return laws;
  }();
  return registry;
}

const Law* find_law(std::string_view id) {
  for (const auto& law : law_registry()) {
    if (law.id == id) return &law;
  }
  return nullptr;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  return fnmatch(std::string(pattern).c_str(), std::string(text).c_str(), 0) == 0;
}

namespace {

double law_tolerance(const Law& law, const GeneratorSpec& gen) {
  switch (law.tolerance_kind) {
    case ToleranceKind::Absolute:
      return gen.tol.eps_abs;
    case ToleranceKind::Relative:
      return gen.tol.eps_rel;
    case ToleranceKind::Angle:
      return gen.angle_tol;
    case ToleranceKind::Fixed:
      return law.fixed_tolerance;
  }
  return gen.tol.eps_abs;
}

struct Outcome {
  TrialResult result;
  std::string error;  ///< non-empty when the trial threw
};

Outcome run_trial(const Law& law, const GeneratorSpec& gen, Flavor flavor, std::size_t dim, std::uint64_t t,
                  Json* capture) {
  Rng rng = Rng::substream(gen.seed, law.id, dim, t);
  Sampler sampler(rng, dim, flavor);
  TrialContext ctx{sampler, gen.tol, gen.angle_tol, t, capture};
  try {
    return {law.trial(ctx), {}};
  } catch (const Error& e) {
    return {TrialResult::fail(), std::string(to_string(e.kind())) + ": " + e.what()};
  } catch (const std::exception& e) {
    return {TrialResult::fail(), e.what()};
  }
}

bool residual_out_of_bounds(double residual, double tolerance) {
  return !std::isfinite(residual) || residual > tolerance;
}

Json replay(const Law& law, const GeneratorSpec& gen, Flavor flavor, std::size_t dim, std::uint64_t t) {
  Json instance = Json::object();
  Outcome o = run_trial(law, gen, flavor, dim, t, &instance);
  Json ce = {{"dim", dim}, {"trial", t}, {"residual", o.result.residual}, {"instance", instance}};
  if (!o.error.empty()) ce["error"] = o.error;
  if (o.result.status == TrialStatus::Skip) ce["skipped"] = true;
  if (law.negative_control && o.result.status == TrialStatus::Fail) ce["target_identity"] = "held";
  return ce;
}

}  // namespace

LawReport run_law(std::string_view id, const GeneratorSpec& gen) {
  gen.validate();
  const Law* law = find_law(id);
  if (!law) throw Error(ErrorKind::UnknownLaw, "unknown law id", std::string(id));

  const auto start = std::chrono::steady_clock::now();
  const Flavor flavor = gen.flavor.value_or(law->default_flavor);
  LawReport rep;
  rep.law_id = law->id;
  rep.statement = law->statement;
  rep.negative_control = law->negative_control;
  rep.flavor = std::string(to_string(flavor));
  rep.tolerance = law_tolerance(*law, gen);
  rep.seed = gen.seed;

  std::size_t held = 0;
  std::optional<std::pair<std::size_t, std::uint64_t>> first_failure, first_held, first_skip;
  for (auto dim : gen.dims) {
    if (dim < law->min_dim) continue;
    rep.dims.push_back(dim);
    for (std::uint64_t t = 0; t < gen.trials_per_dim; ++t) {
      Outcome o = run_trial(*law, gen, flavor, dim, t, nullptr);
      if (o.result.status == TrialStatus::Skip) {
        ++rep.trials_skipped;
        if (!first_skip) first_skip = {dim, t};
        continue;
      }
      ++rep.trials_run;
      if (std::isfinite(o.result.residual)) rep.worst_residual = std::max(rep.worst_residual, o.result.residual);
      else rep.worst_residual = o.result.residual;

      bool failed = !o.error.empty() || residual_out_of_bounds(o.result.residual, rep.tolerance);
      if (law->negative_control) {
        if (o.error.empty() && o.result.status == TrialStatus::Fail) {
          ++held;
          if (!first_held) first_held = {dim, t};
        }
      } else {
        failed = failed || o.result.status == TrialStatus::Fail;
      }
      if (failed) {
        ++rep.failures;
        if (!first_failure) first_failure = {dim, t};
      }
    }
  }

  rep.pass = rep.failures == 0 && rep.skip_rate() < kMaxSkipRate;
  if (law->negative_control) {
    const double rate = rep.trials_run == 0
                            ? 0.0
                            : static_cast<double>(rep.trials_run - held) / static_cast<double>(rep.trials_run);
    rep.target_failure_rate = rate;
    rep.pass = rep.pass && rep.trials_run > 0 && rate > kNegativeControlRate;
    if (!first_failure && !rep.pass) first_failure = first_held;
  }
  // A law failing only on its skip rate still reports a concrete instance.
  if (!rep.pass && !first_failure) first_failure = first_skip;
  if (first_failure) rep.counterexample = replay(*law, gen, flavor, first_failure->first, first_failure->second);

  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<LawReport> run_all(const GeneratorSpec& gen, const std::vector<std::string>& patterns,
                               unsigned threads) {
  gen.validate();
  std::vector<const Law*> selected;
  for (const auto& law : law_registry()) {
    const bool match = patterns.empty() || std::any_of(patterns.begin(), patterns.end(), [&](const std::string& p) {
                         return glob_match(p, law.id);
                       });
    if (match) selected.push_back(&law);
  }

  std::vector<LawReport> reports(selected.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(selected.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> errored{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        reports[i] = run_law(selected[i]->id, gen);
      } catch (...) {
        if (!errored.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return reports;
}

bool aggregate_pass(const std::vector<LawReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const LawReport& r) { return r.pass; });
}

Json to_json(const LawReport& r, bool include_timing) {
  Json j = {
      {"law_id", r.law_id},
      {"statement", r.statement},
      {"kind", r.negative_control ? "negative_control" : "law"},
      {"flavor", r.flavor},
      {"seed", r.seed},
      {"dims", r.dims},
      {"dim_range", r.dims.empty() ? Json(nullptr)
                                   : Json::array({*std::min_element(r.dims.begin(), r.dims.end()),
                                                  *std::max_element(r.dims.begin(), r.dims.end())})},
      {"trials_run", r.trials_run},
      {"trials_skipped", r.trials_skipped},
      {"skip_rate", r.skip_rate()},
      {"failures", r.failures},
      {"worst_residual", r.worst_residual},
      {"tolerance", r.tolerance},
      {"pass", r.pass},
  };
  if (r.target_failure_rate) j["target_failure_rate"] = *r.target_failure_rate;
  j["counterexample"] = r.counterexample ? *r.counterexample : Json(nullptr);
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::GenericComplex:
      return "generic";
    case Flavor::RealOnly:
      return "real";
    case Flavor::Coplanar:
      return "coplanar";
    case Flavor::CommutingPair:
      return "commuting";
    case Flavor::NestedPair:
      return "nested";
    case Flavor::ClassicalOrthogonal:
      return "classical";
    case Flavor::Isometry:
      return "isometry";
    case Flavor::NonIsometry:
      return "non-isometry";
  }
  return "generic";
}

std::optional<Flavor> flavor_from_string(std::string_view s) {
  for (Flavor f : {Flavor::GenericComplex, Flavor::RealOnly, Flavor::Coplanar, Flavor::CommutingPair,
                   Flavor::NestedPair, Flavor::ClassicalOrthogonal, Flavor::Isometry, Flavor::NonIsometry}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

Json sample_instance(const GeneratorSpec& gen, Flavor flavor, std::size_t dim, std::uint64_t trial) {
  if (dim < 2 || dim > 32) throw std::invalid_argument("dimension must lie in [2, 32]");
  Rng rng = Rng::substream(gen.seed, "sample_instance", dim, trial);
  Sampler s(rng, dim, flavor);
  Json j = {{"flavor", to_string(flavor)}, {"dim", dim}};
  auto rays_json = [](const std::vector<Ray>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) arr.push_back(to_json(r));
    return arr;
  };
  switch (flavor) {
    case Flavor::GenericComplex:
    case Flavor::RealOnly:
      j["rays"] = rays_json({s.ray(), s.ray(), s.ray()});
      break;
    case Flavor::Coplanar:
      j["rays"] = rays_json(s.coplanar_rays(3));
      break;
    case Flavor::ClassicalOrthogonal:
      j["rays"] = rays_json(s.classical_rays(dim));
      break;
    case Flavor::CommutingPair:
    case Flavor::NestedPair: {
      auto [a, b] = s.pair();
      j["alpha"] = to_json(a);
      j["beta"] = to_json(b);
      break;
    }
    case Flavor::Isometry:
      j["map"] = to_json(LinearMap(s.isometry(dim, dim)));
      break;
    case Flavor::NonIsometry:
      j["map"] = to_json(LinearMap(s.non_isometry(dim, dim)));
      break;
  }
  return j;
}

}  // namespace raygeo

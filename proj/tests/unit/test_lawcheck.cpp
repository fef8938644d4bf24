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
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "generators.hpp"
#include "raygeo/error.hpp"
#include "raygeo/geometry.hpp"
#include "raygeo/lawcheck.hpp"
#include "raygeo/morphisms.hpp"

using namespace raygeo;

namespace {
GeneratorSpec small(std::size_t trials = 40, std::uint64_t seed = 42) {
  GeneratorSpec g;
  g.trials_per_dim = trials;
  g.seed = seed;
  return g;
}
}  // namespace

TEST_CASE("registry matches the manifest") {
  std::ifstream in(RAYGEO_MANIFEST);
  REQUIRE(in.good());
  std::set<std::string> manifest;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') manifest.insert(line);
  }
  std::set<std::string> registered;
  for (const Law& law : law_registry()) {
    CHECK(registered.insert(law.id).second);
    CHECK(!law.statement.empty());
    CHECK(find_law(law.id) == &law);
  }
  CHECK(registered == manifest);
  CHECK(find_law("lemma.nonexistent") == nullptr);
}

TEST_CASE("unknown law") {
  try {
    run_law("lemma.nonexistent", small());
    FAIL("expected UnknownLaw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownLaw);
  }
}

TEST_CASE("generator spec validation") {
  GeneratorSpec g;
  CHECK_NOTHROW(g.validate());
  g.trials_per_dim = 0;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g = GeneratorSpec{};
  g.dims = {1};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.dims = {33};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.dims = {};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.dims = {32};
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("flavor names round trip") {
  for (Flavor f : {Flavor::GenericComplex, Flavor::RealOnly, Flavor::Coplanar, Flavor::CommutingPair,
                   Flavor::NestedPair, Flavor::ClassicalOrthogonal, Flavor::Isometry, Flavor::NonIsometry}) {
    CHECK(flavor_from_string(to_string(f)) == f);
  }
  CHECK(!flavor_from_string("quaternionic").has_value());
}

TEST_CASE("triviality passes with a tiny residual") {
  const LawReport r = run_law("principle.triviality", small(200, 9));
  CHECK(r.pass);
  CHECK(r.worst_residual < 1e-10);
  CHECK(r.failures == 0);
  CHECK(!r.counterexample.has_value());
  CHECK(r.trials_run + r.trials_skipped == 200 * 7);
}

TEST_CASE("reports are deterministic") {
  const GeneratorSpec g = small(30, 123);
  for (const char* id : {"lemma.p_basis", "theorem.interference", "counterexample.total_probability", "lemma.unit_superp"}) {
    CAPTURE(id);
    CHECK(to_json(run_law(id, g)).dump() == to_json(run_law(id, g)).dump());
  }
  const auto a = run_all(g, {"lemma.*"}, 1);
  const auto b = run_all(g, {"lemma.*"}, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
}

TEST_CASE("timing appears only on request") {
  const LawReport r = run_law("lemma.a", small(5));
  CHECK(!to_json(r).contains("elapsed_ms"));
  CHECK(to_json(r, true).contains("elapsed_ms"));
}

TEST_CASE("total probability without commutation fails by design") {
  GeneratorSpec g = small(50);
  g.flavor = Flavor::GenericComplex;
  const LawReport bad = run_law("lemma.total_probability", g);
  CHECK(!bad.pass);
  CHECK(bad.failures > 0.9 * static_cast<double>(bad.trials_run));
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->contains("instance"));

  const LawReport control = run_law("counterexample.total_probability", small(50));
  CHECK(control.negative_control);
  CHECK(control.pass);
  REQUIRE(control.target_failure_rate.has_value());
  CHECK(*control.target_failure_rate > kNegativeControlRate);

  const LawReport commuting = run_law("lemma.total_probability", small(50));
  CHECK(commuting.pass);
}

TEST_CASE("dims {2} keeps coplanarity laws runnable") {
  GeneratorSpec g = small(50);
  g.dims = {2};
  for (const char* id : {"definition.coplanarity", "principle.coplanarity", "corollary.co_prime", "principle.reciprocity"}) {
    CAPTURE(id);
    const LawReport r = run_law(id, g);
    CHECK(r.pass);
    CHECK(r.trials_run > 0);
  }
}

TEST_CASE("seed changes keep verdicts") {
  const auto a = run_all(small(25, 1));
  const auto b = run_all(small(25, 77));
  REQUIRE(a.size() == law_registry().size());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].law_id);
    CHECK(a[i].pass);
    CHECK(a[i].pass == b[i].pass);
  }
  CHECK(aggregate_pass(a));
}

TEST_CASE("glob filter") {
  CHECK(glob_match("lemma.*", "lemma.p_basis"));
  CHECK(glob_match("*theta*", "tensor.theta_product"));
  CHECK(!glob_match("lemma.*", "corollary.max"));
  CHECK(glob_match("lemma.?", "lemma.a"));
  const auto r = run_all(small(3), {"tensor.*", "corollary.max"});
  REQUIRE(r.size() == 3);
  CHECK(r[0].law_id == "corollary.max");  // registry order, not pattern order
  CHECK(run_all(small(3), {"nothing.*"}).empty());
}

TEST_CASE("sample_instance") {
  const GeneratorSpec g;
  const Json classical = sample_instance(g, Flavor::ClassicalOrthogonal, 3);
  REQUIRE(classical["rays"].size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(same_ray(ray_from_json(classical["rays"][i]), Ray::from(Vec::basis(3, i))));
  }
  for (std::uint64_t t = 0; t < 50; ++t) {
    const Json c = sample_instance(g, Flavor::CommutingPair, 2 + t % 7, t);
    CHECK(commutes(subspace_from_json(c["alpha"]), subspace_from_json(c["beta"])));
    const Json n = sample_instance(g, Flavor::NestedPair, 2 + t % 7, t);
    CHECK(is_subset(subspace_from_json(n["alpha"]), subspace_from_json(n["beta"])));
    const Json p = sample_instance(g, Flavor::Coplanar, 2 + t % 7, t);
    CHECK(coplanar(ray_from_json(p["rays"][0]), ray_from_json(p["rays"][1]), ray_from_json(p["rays"][2])));
    const Json re = sample_instance(g, Flavor::RealOnly, 2 + t % 7, t);
    for (const auto& e : re["rays"][0]["rep"]) CHECK(e[1].get<double>() == 0.0);
    const Json iso = sample_instance(g, Flavor::Isometry, 2 + t % 7, t);
    CHECK(isometry_scale(RegularMap(linear_map_from_json(iso["map"]))).has_value());
    const Json non = sample_instance(g, Flavor::NonIsometry, 2 + t % 7, t);
    CHECK(!isometry_scale(RegularMap(linear_map_from_json(non["map"]))).has_value());
  }
  CHECK(sample_instance(g, Flavor::GenericComplex, 4, 3) == sample_instance(g, Flavor::GenericComplex, 4, 3));
  CHECK_THROWS_AS(sample_instance(g, Flavor::GenericComplex, 1), std::invalid_argument);
}

TEST_CASE("property: sampler families satisfy their contracts") {
  gen::for_all("lawcheck.sampler", 200, [](Rng& rng, std::size_t dim, int) {
    Sampler s(rng, dim, Flavor::GenericComplex);
    const auto [a, b] = s.orthogonal_pair();
    CHECK(is_orthogonal(a, b));
    const auto fam = s.orthogonal_family(2);
    CHECK(is_orthogonal(fam[0], fam[1]));
    const auto [c, d] = s.commuting_pair(true);
    CHECK(commutes(c, d));
    CHECK(meet(c, d).rank() > 0);
    const Subspace p = s.subspace();
    CHECK(p.rank() >= 1);
    CHECK(p.rank() <= dim - 1);
    CHECK(is_member(s.ray_in(p), p));
  });
}

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

// Acceptance suite: one PASS/FAIL line per criterion. Each criterion runs the
// relevant registered laws at the default configuration (seed 42, dims 2..8,
// 1000 trials per dimension) and adds direct checks at the pinned tolerances.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "raygeo/cli.hpp"
#include "raygeo/error.hpp"
#include "raygeo/geometry.hpp"
#include "raygeo/lawcheck.hpp"
#include "raygeo/morphisms.hpp"
#include "raygeo/probability.hpp"
#include "raygeo/superposition.hpp"
#include "raygeo/tensor.hpp"

using namespace raygeo;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kTrials = 1000;
constexpr double kSkip = 1e-6;

// Collects the outcome of one criterion with a short note per failed check.
class Criterion {
public:
  explicit Criterion(int n, std::string title) : n_(n), title_(std::move(title)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) notes_.push_back(what);
  }

  void law(const std::string& id, double max_worst = -1.0) {
    const LawReport r = run_law(id, GeneratorSpec{});
    std::ostringstream s;
    s << id << " pass=" << r.pass << " worst=" << r.worst_residual << " skip_rate=" << r.skip_rate();
    require(r.pass, s.str());
    require(r.skip_rate() < kMaxSkipRate, s.str() + " (skip rate)");
    if (max_worst >= 0.0) require(r.worst_residual < max_worst, s.str() + " (worst above bound)");
  }

  bool report() const {
    const bool ok = notes_.empty();
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", n_, title_.c_str());
    for (const auto& note : notes_) std::printf("       %s\n", note.c_str());
    return ok;
  }

private:
  int n_;
  std::string title_;
  std::vector<std::string> notes_;
};

// Calls fn(rng, dim, trial) for every default dimension and trial.
void each_trial(std::string_view label, const std::function<void(Rng&, std::size_t, std::size_t)>& fn,
                std::size_t lo = 2, std::size_t hi = 8, std::size_t trials = kTrials) {
  for (std::size_t d = lo; d <= hi; ++d) {
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = Rng::substream(kSeed, label, d, t);
      fn(rng, d, t);
    }
  }
}

bool c1() {
  Criterion c(1, "closed-form p of a superposition matches the constructed ray (1e-9 relative, skip < 5%)");
  c.law("lemma.p_basis", 1e-9);
  c.law("definition.superposition");
  std::size_t run = 0, skipped = 0;
  double worst = 0.0;
  each_trial("acceptance.c1", [&](Rng& rng, std::size_t d, std::size_t) {
    const Ray y = random_ray(rng, d), z = random_ray(rng, d), x = random_ray(rng, d);
    const double r = rng.uniform();
    if (a_sim(y, z) < kSkip || a_sim(x, y) < kSkip || a_sim(x, z) < kSkip) {
      ++skipped;
      return;
    }
    ++run;
    const SuperpositionSpec s{y, z, r};
    worst = std::max(worst, mixed_residual(p_of_superposition_closed_form(s, x), p_sim(x, superpose(s))));
  });
  c.require(worst <= 1e-9, "direct closed-form residual " + std::to_string(worst));
  c.require(static_cast<double>(skipped) < 0.05 * static_cast<double>(run + skipped), "direct skip rate");
  return c.report();
}

bool c2() {
  Criterion c(2, "superposition principles: triviality, commutativity, r in {0,1}, coplanarity, theta(s,y,z)=0");
  c.law("principle.triviality", 1e-10);
  c.law("principle.superposition");
  c.law("principle.coplanarity");
  c.law("lemma.superposition_commutes");
  c.law("lemma.prop1");
  double triv = 0.0, comm = 0.0, ends = 0.0, th = 0.0;
  bool cop = true;
  each_trial("acceptance.c2", [&](Rng& rng, std::size_t d, std::size_t) {
    const Ray y = random_ray(rng, d), z = random_ray(rng, d);
    const double r = rng.uniform();
    triv = std::max(triv, ray_distance(superpose({y, y, r}), y));
    if (a_sim(y, z) < kSkip) return;
    const Ray s = superpose({y, z, r});
    comm = std::max(comm, ray_distance(s, superpose({z, y, 1.0 - r})));
    ends = std::max({ends, ray_distance(superpose({y, z, 1.0}), y), ray_distance(superpose({y, z, 0.0}), z)});
    cop = cop && coplanar(s, y, z);
    if (r > 0.0 && r < 1.0 && a_sim(s, y) > kSkip && a_sim(s, z) > kSkip) {
      th = std::max(th, circular_distance(theta(s, y, z), 0.0));
    }
  });
  c.require(triv < 1e-10, "triviality residual " + std::to_string(triv));
  c.require(comm < 1e-10, "commutativity residual " + std::to_string(comm));
  c.require(ends < 1e-10, "r in {0,1} residual " + std::to_string(ends));
  c.require(cop, "a superposition was not coplanar with its components");
  c.require(th <= 1e-8, "theta(s, y, z) deviation " + std::to_string(th));
  return c.report();
}

bool c3() {
  Criterion c(3, "projection chain rule below 1e-10; projection is the strict maximizer over 200 probes");
  c.law("theorem.p_chain", 1e-10);
  c.law("corollary.max");
  return c.report();
}

bool c4() {
  Criterion c(4, "probability calculus below 1e-10; total probability fails on the 2D non-commuting family");
  for (const char* id : {"lemma.complement", "lemma.orthodisjunction", "corollary.orthodisjunction",
                         "lemma.inclusion_exclusion", "lemma.conjunction", "corollary.monotone",
                         "counterexample.total_probability"}) {
    c.law(id, std::string(id).starts_with("counterexample") ? -1.0 : 1e-10);
  }
  double analytic = 0.0;
  std::size_t held = 0, total = 0;
  const Subspace a = Subspace::span(std::vector<Vec>{Vec::basis(2, 0)}, 2);
  for (int k = 1; k < 1000; ++k) {
    const double t = std::numbers::pi * k / 1000.0;
    if (std::abs(std::sin(2 * t)) < 1e-3) continue;
    const Vec bv{std::cos(t), std::sin(t)};
    const Subspace b = Subspace::span(std::vector<Vec>{bv}, 2);
    const Ray x = Ray::from(bv);
    const double res = total_probability_residual(x, a, b);
    const double c4v = std::pow(std::cos(t), 4), s4v = std::pow(std::sin(t), 4);
    analytic = std::max(analytic, std::abs(res - std::abs(1.0 - c4v - s4v)));
    ++total;
    if (res <= 1e-10) ++held;
  }
  c.require(analytic <= 1e-9, "2D family analytic mismatch " + std::to_string(analytic));
  c.require(held == 0, "total probability held on " + std::to_string(held) + "/" + std::to_string(total));
  return c.report();
}

bool c5() {
  Criterion c(5, "interference margin >= -1e-12 on 1e4 instances per dim 3..8; non-squared witness found");
  c.law("theorem.interference");
  double worst = 0.0;
  std::size_t run = 0;
  each_trial(
      "acceptance.c5",
      [&](Rng& rng, std::size_t d, std::size_t) {
        Sampler s(rng, d, Flavor::GenericComplex);
        const Subspace a = s.subspace(), b = s.subspace();
        const Ray x = s.ray_in(a);
        try {
          worst = std::min(worst, check_interference_inequality(x, a, b));
          ++run;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PreconditionUnmet) throw;
        }
      },
      3, 8, 10000);
  c.require(worst >= -1e-12, "worst margin " + std::to_string(worst));
  c.require(run >= 0.95 * 60000, "only " + std::to_string(run) + " instances met the preconditions");
  const auto w = search_nonsquared_counterexample(kSeed, 100000);
  c.require(w.has_value(), "no non-squared witness within 1e5 trials");
  if (w) {
    c.require(w->margin < 0.0, "witness margin not negative");
    c.require(w->terms.rhs() - w->terms.lhs_squared() >= -1e-12, "witness violates the squared inequality");
  }
  return c.report();
}

bool c6() {
  Criterion c(6, "theta laws within 1e-8 rad: cyclic, antisymmetric, cocycle, phase-free, orthocomplement, co-prime");
  for (const char* id : {"definition.theta", "lemma.theta_cyclic", "lemma.theta_prime", "corollary.co_prime"}) c.law(id);
  double worst = 0.0;
  each_trial("acceptance.c6", [&](Rng& rng, std::size_t d, std::size_t) {
    const Ray x = random_ray(rng, d), y = random_ray(rng, d), z = random_ray(rng, d), w = random_ray(rng, d);
    const std::vector<const Ray*> all{&x, &y, &z, &w};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (a_sim(*all[i], *all[j]) < kSkip) return;
    const double t = theta(x, y, z);
    worst = std::max(worst, circular_distance(t, theta(y, z, x)));
    worst = std::max(worst, circular_distance(-t, theta(y, x, z)));
    worst = std::max(worst, circular_distance(theta(x, y, w), theta(x, y, z) + theta(x, z, w) + theta(z, y, w)));
    // Arbitrary representatives: the triple product of inner products is phase free.
    const Vec u = rng.phase() * x.rep(), v = rng.phase() * y.rep(), q = rng.phase() * z.rep();
    worst = std::max(worst, circular_distance(t, std::arg(inner(u, v) * inner(v, q) * inner(q, u))));
  });
  // Coplanar triples with the in-plane orthogonal partner.
  each_trial("acceptance.c6.plane", [&](Rng& rng, std::size_t d, std::size_t) {
    Sampler s(rng, d, Flavor::Coplanar);
    const auto rs = s.coplanar_rays(3);
    const Ray &x = rs[0], &y = rs[1], &z = rs[2];
    if (a_sim(x, y) < kSkip || a_sim(y, z) < kSkip || a_sim(z, x) < kSkip) return;
    if (1.0 - p_sim(x, y) < 1e-8 || 1.0 - p_sim(x, z) < 1e-8 || 1.0 - p_sim(y, z) < 1e-8) return;
    try {
      const Triple pr = prime_triple(x, y, z);
      worst = std::max(worst, circular_distance(theta(pr.x, pr.y, pr.z), -theta(x, y, z)));
    } catch (const Error&) {
      return;
    }
    // An orthogonal partner of x inside span{x, y}.
    const Vec perp = y.rep() - inner(y.rep(), x.rep()) * x.rep();
    const Ray xperp = Ray::from(perp);
    if (a_sim(xperp, y) < kSkip || a_sim(xperp, z) < kSkip) return;
    worst = std::max(worst, std::abs(cos_theta_prime(x, xperp, y, z) - std::cos(theta(xperp, y, z))));
  });
  c.require(worst <= 1e-8, "worst angular deviation " + std::to_string(worst));
  return c.report();
}

bool c7() {
  Criterion c(7, "100 unitary embeddings preserve superpositions, p and theta; 100 non-isometries do not");
  int agree = 0;
  double worst_p = 0.0, worst_t = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::substream(kSeed, "acceptance.c7.unitary", i, 0);
    const std::size_t din = 2 + i % 7, dout = din + i % 3;
    const RegularMap f{LinearMap(random_isometry(rng, dout, din))};
    const SuperpositionVerdict v = preserves_superpositions(f, 500, i);
    c.require(v.preserved, "unitary map " + std::to_string(i) + " broke a superposition");
    const PThetaResiduals r = check_preserves_p_theta(f, 500, i);
    worst_p = std::max(worst_p, r.p);
    worst_t = std::max(worst_t, r.theta);
    if (check_char_morph(f, 500, i)) ++agree;
  }
  c.require(worst_p < 1e-10, "p residual " + std::to_string(worst_p));
  c.require(worst_t < 1e-10, "theta residual " + std::to_string(worst_t));
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::substream(kSeed, "acceptance.c7.non_isometry", i, 0);
    const std::size_t din = 2 + i % 7, dout = din + i % 3;
    Sampler s(rng, din, Flavor::NonIsometry);
    const RegularMap f{LinearMap(s.non_isometry(dout, din))};
    const SuperpositionVerdict v = preserves_superpositions(f, 500, i);
    c.require(!v.preserved && v.witness.has_value(), "non-isometry " + std::to_string(i) + " kept superpositions");
    if (check_char_morph(f, 500, i)) ++agree;
  }
  c.require(agree == 200, "char_morph agreement " + std::to_string(agree) + "/200");
  return c.report();
}

bool c8() {
  Criterion c(8, "tensor p multiplicativity and theta additivity below 1e-10 on C2(x)C2 and C2(x)C3");
  c.law("tensor.p_product", 1e-10);
  c.law("tensor.theta_product", 1e-10);
  double wp = 0.0, wt = 0.0;
  for (std::size_t d2 : {2u, 3u}) {
    for (std::size_t t = 0; t < kTrials; ++t) {
      Rng rng = Rng::substream(kSeed, "acceptance.c8", d2, t);
      const Ray x1 = random_ray(rng, 2), y1 = random_ray(rng, 2), z1 = random_ray(rng, 2);
      const Ray x2 = random_ray(rng, d2), y2 = random_ray(rng, d2), z2 = random_ray(rng, d2);
      wp = std::max(wp, check_p_product(x1, y1, x2, y2));
      const std::vector<double> sims{a_sim(x1, y1), a_sim(y1, z1), a_sim(z1, x1),
                                     a_sim(x2, y2), a_sim(y2, z2), a_sim(z2, x2)};
      if (*std::min_element(sims.begin(), sims.end()) < kSkip) continue;
      wt = std::max(wt, check_theta_product(x1, y1, z1, x2, y2, z2));
    }
  }
  const Ray x = Ray::from(Vec{1.0, 0.0}), y = Ray::from(Vec{1.0, 1.0}), z = Ray::from(Vec{1.0, Cplx(0.0, 1.0)});
  const double fixture = theta(tensor_ray(x, x).combined, tensor_ray(y, y).combined, tensor_ray(z, z).combined);
  c.require(circular_distance(fixture, -std::numbers::pi / 2) < 1e-10, "fixture theta " + std::to_string(fixture));
  c.require(wp < 1e-10, "p residual " + std::to_string(wp));
  c.require(wt < 1e-10, "theta residual " + std::to_string(wt));
  return c.report();
}

bool c9() {
  Criterion c(9, "classical regime: no superpositions of distinct states, reciprocity vacuous");
  c.law("principle.classical");
  bool all_errors = true, recip = true;
  for (std::size_t d = 2; d <= 8; ++d) {
    Rng rng = Rng::substream(kSeed, "acceptance.c9", d, 0);
    Sampler s(rng, d, Flavor::ClassicalOrthogonal);
    const auto rs = s.classical_rays(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i == j) continue;
        try {
          superpose({rs[i], rs[j], rng.uniform(1e-3, 1.0 - 1e-3)});
          all_errors = false;
        } catch (const Error& e) {
          all_errors = all_errors && e.kind() == ErrorKind::OrthogonalComponents;
        }
        for (std::size_t k = 0; k < d; ++k) {
          if (k != i && k != j) recip = recip && reciprocity_holds(rs[i], rs[j], rs[k]);
        }
      }
    }
  }
  c.require(all_errors, "a classical superposition request did not fail with OrthogonalComponents");
  c.require(recip, "reciprocity failed on a classical triple");
  return c.report();
}

bool c10() {
  Criterion c(10, "two identical verify runs produce byte-identical JSON");
  const std::vector<std::string> args{"verify", "--trials", "40", "--seed", "42", "--format", "json"};
  std::ostringstream o1, o2, e1, e2;
  const int r1 = run_cli(args, o1, e1);
  const int r2 = run_cli(args, o2, e2);
  c.require(r1 == kExitOk && r2 == kExitOk, "verify exit codes " + std::to_string(r1) + ", " + std::to_string(r2));
  c.require(!o1.str().empty() && o1.str() == o2.str(), "reports differ");
  return c.report();
}

}  // namespace

int main() {
  int failed = 0;
  for (auto fn : {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10}) {
    try {
      if (!fn()) ++failed;
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion raised: %s\n", e.what());
      ++failed;
    }
  }
  std::printf("%d/10 criteria pass\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}

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

#include "raygeo/probability.hpp"

#include <cmath>
#include <vector>

#include "raygeo/error.hpp"
#include "raygeo/geometry.hpp"
#include "raygeo/random.hpp"

namespace raygeo {

namespace {

void require_commuting(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (!commutes(a, b, 0, tol)) throw Error(ErrorKind::NotCommuting, "the propositions do not commute");
}

// p(img, b) for a projected state; a zero image carries zero weight anyway.
double p_of_image(const RayOrZero& img, const Subspace& b, const Tolerance& tol) {
  return is_zero(img) ? 0.0 : p_prop(std::get<Ray>(img), b, tol);
}

}  // namespace

double check_ortho_additivity(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (!is_orthogonal(a, b, tol)) throw Error(ErrorKind::NotOrthogonal, "orthogonal additivity needs a _|_ b");
  return std::abs(p_prop(x, join(a, b, tol), tol) - p_prop(x, a, tol) - p_prop(x, b, tol));
}

double check_finite_additivity(const Ray& x, std::span<const Subspace> parts, const Tolerance& tol) {
  Subspace all = Subspace::falsehood(x.dim());
  double sum = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!is_orthogonal(parts[i], parts[j], tol)) {
        throw Error(ErrorKind::NotOrthogonal, "finite additivity needs pairwise orthogonal parts");
      }
    }
    all = join(all, parts[i], tol);
    sum += p_prop(x, parts[i], tol);
  }
  return std::abs(p_prop(x, all, tol) - sum);
}

double check_complement(const Ray& x, const Subspace& a, const Tolerance& tol) {
  return std::abs(p_prop(x, a, tol) + p_prop(x, ortho_complement(a, tol), tol) - 1.0);
}

double check_inclusion_exclusion(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_commuting(a, b, tol);
  return std::abs(p_prop(x, join(a, b, tol), tol) - p_prop(x, a, tol) - p_prop(x, b, tol) +
                  p_prop(x, meet(a, b, tol), tol));
}

double check_chain_rule(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_commuting(a, b, tol);
  const double p_meet = p_prop(x, meet(a, b, tol), tol);
  const RayOrZero ax = project_ray(a, x, tol);
  if (is_zero(ax)) return std::abs(p_meet);
  return std::abs(p_meet - p_prop(x, a, tol) * p_prop(std::get<Ray>(ax), b, tol));
}

bool check_monotone(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (!is_subset(a, b, tol)) throw Error(ErrorKind::NotContained, "monotonicity needs a contained in b");
  return p_prop(x, a, tol) <= p_prop(x, b, tol) + tol.eps_abs;
}

double total_probability_residual(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  const Subspace not_a = ortho_complement(a, tol);
  const double wa = p_prop(x, a, tol);
  const double wn = p_prop(x, not_a, tol);
  double rhs = 0.0;
  if (wa > 0.0) rhs += wa * p_of_image(project_ray(a, x, tol), b, tol);
  if (wn > 0.0) rhs += wn * p_of_image(project_ray(not_a, x, tol), b, tol);
  return std::abs(p_prop(x, b, tol) - rhs);
}

bool locally_commutes(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  const Vec ab = project_vec(a, project_vec(b, x.rep()));
  const Vec ba = project_vec(b, project_vec(a, x.rep()));
  return norm(ab - ba) <= tol.eps_abs;
}

double check_total_probability(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (!commutes(a, b, 0, tol) && !locally_commutes(x, a, b, tol)) {
    throw Error(ErrorKind::PreconditionUnmet,
                "total probability needs commuting propositions or (a o b)(x) = (b o a)(x)", "commutation");
  }
  return total_probability_residual(x, a, b, tol);
}

InterferenceTerms interference_terms(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (!is_member(x, a, tol)) throw Error(ErrorKind::PreconditionUnmet, "x must belong to alpha", "x in alpha");
  const RayOrZero bx = project_ray(b, x, tol);
  if (is_zero(bx)) throw Error(ErrorKind::PreconditionUnmet, "x must not be orthogonal to beta", "x not _|_ beta");
  const RayOrZero abx = project_ray(a, bx, tol);
  if (is_zero(abx)) {
    throw Error(ErrorKind::PreconditionUnmet, "beta(x) must not be orthogonal to alpha", "beta(x) not _|_ alpha");
  }
  InterferenceTerms t;
  t.p_x_beta = p_prop(x, b, tol);
  t.p_bx_alpha = p_prop(std::get<Ray>(bx), a, tol);
  t.p_abx_beta = p_prop(std::get<Ray>(abx), b, tol);
  return t;
}

double check_interference_inequality(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol) {
  const InterferenceTerms t = interference_terms(x, a, b, tol);
  return t.rhs() - t.lhs_squared();
}

std::optional<NonSquaredWitness> search_nonsquared_counterexample(std::uint64_t seed, std::uint64_t budget,
                                                                 const Tolerance& tol) {
  constexpr std::size_t dim = 3;
  for (std::uint64_t trial = 0; trial < budget; ++trial) {
    Rng rng = Rng::substream(seed, "search.nonsquared", trial, 0);
    auto draw = [&](std::size_t rank) {
      std::vector<Vec> vs;
      for (std::size_t i = 0; i < rank; ++i) vs.push_back(random_vector(rng, dim, true));
      return Subspace::span(vs, dim, tol);
    };
    const Subspace alpha = draw(1 + rng.index(2));
    const Subspace beta = draw(1 + rng.index(2));
    if (alpha.rank() == 0 || beta.rank() == 0) continue;
    Vec xv(dim);
    for (const auto& b : alpha.basis()) xv += rng.normal() * b;
    if (norm(xv) <= 1e-6) continue;
    const Ray x = Ray::from(xv, tol);
    InterferenceTerms t;
    try {
      t = interference_terms(x, alpha, beta, tol);
    } catch (const Error&) {
      continue;
    }
    const double margin = t.rhs() - t.lhs_plain();
    if (margin < -tol.eps_abs) return NonSquaredWitness{trial, x, alpha, beta, t, margin};
  }
  return std::nullopt;
}

CommutingDecomposition decompose_commuting(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  require_commuting(a, b, tol);
  const Subspace not_a = ortho_complement(a, tol);
  const Subspace not_b = ortho_complement(b, tol);
  CommutingDecomposition d{meet(a, b, tol), meet(a, not_b, tol), meet(not_a, b, tol)};
  const bool ok = is_orthogonal(d.gamma1, d.gamma2, tol) && is_orthogonal(d.gamma1, d.gamma3, tol) &&
                  is_orthogonal(d.gamma2, d.gamma3, tol) && same_subspace(join(d.gamma1, d.gamma2, tol), a, tol) &&
                  same_subspace(join(d.gamma1, d.gamma3, tol), b, tol);
  if (!ok) throw Error(ErrorKind::NotCommuting, "commuting decomposition failed to reproduce the operands");
  return d;
}

}  // namespace raygeo

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

// Born-rule probability calculus over propositions. Each check_* function
// evaluates one identity on a concrete instance and returns its residual;
// preconditions that the identity depends on are enforced with typed errors.

#include <cstdint>
#include <optional>
#include <span>

#include "raygeo/rays.hpp"

namespace raygeo {

/// Pairwise orthogonal gamma1 = a^b, gamma2 = a^-b, gamma3 = -a^b with
/// a = gamma1 v gamma2 and b = gamma1 v gamma3.
struct CommutingDecomposition {
  Subspace gamma1;
  Subspace gamma2;
  Subspace gamma3;
};

/// |p(x, a v b) - p(x,a) - p(x,b)| for orthogonal a, b (NotOrthogonal otherwise).
double check_ortho_additivity(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// |p(x, v_i parts_i) - sum_i p(x, parts_i)| for pairwise orthogonal parts.
double check_finite_additivity(const Ray& x, std::span<const Subspace> parts, const Tolerance& tol = {});
/// |p(x,a) + p(x,-a) - 1|.
double check_complement(const Ray& x, const Subspace& a, const Tolerance& tol = {});
/// |p(x, a v b) - p(x,a) - p(x,b) + p(x, a ^ b)| for commuting a, b.
double check_inclusion_exclusion(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// |p(x, a ^ b) - p(x,a) p(a(x), b)| for commuting a, b. When x is orthogonal
/// to a the conditional is undefined and p(x, a ^ b) itself is returned.
double check_chain_rule(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// p(x,a) <= p(x,b) + eps_abs for a contained in b (NotContained otherwise).
bool check_monotone(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});

/// Residual of p(x,b) = p(x,a) p(a(x),b) + p(x,-a) p((-a)(x),b) with no
/// precondition check. Terms whose weight p(x,a) or p(x,-a) vanishes are
/// dropped.
double total_probability_residual(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// (a o b)(x) == (b o a)(x) as rays (or both zero).
bool locally_commutes(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// total_probability_residual, requiring that a and b commute or commute
/// locally at x (PreconditionUnmet otherwise).
double check_total_probability(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});

struct InterferenceTerms {
  double p_x_beta = 0.0;     ///< p(x, b)
  double p_bx_alpha = 0.0;   ///< p(b(x), a)
  double p_abx_beta = 0.0;   ///< p(a(b(x)), b)
  double lhs_squared() const { return p_x_beta * (1.0 - p_bx_alpha) * (1.0 - p_bx_alpha); }
  double lhs_plain() const { return p_x_beta * (1.0 - p_bx_alpha); }
  double rhs() const { return p_bx_alpha * (1.0 - p_abx_beta); }
};

/// Requires x in a, x not orthogonal to b, b(x) not orthogonal to a
/// (PreconditionUnmet naming the failed condition otherwise).
InterferenceTerms interference_terms(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});
/// rhs - lhs_squared of the interference inequality.
double check_interference_inequality(const Ray& x, const Subspace& a, const Subspace& b, const Tolerance& tol = {});

struct NonSquaredWitness {
  std::uint64_t trial = 0;
  Ray x;
  Subspace alpha;
  Subspace beta;
  InterferenceTerms terms;
  /// rhs - lhs_plain; negative for a witness.
  double margin = 0.0;
};

/// Searches real 3-dimensional instances (x in alpha) for which the
/// inequality fails once the (1 - p(b(x), a)) factor is not squared. Trial t
/// draws from Rng::substream(seed, "search.nonsquared", t, 0); the first
/// witness by trial index is returned.
std::optional<NonSquaredWitness> search_nonsquared_counterexample(std::uint64_t seed, std::uint64_t budget,
                                                                 const Tolerance& tol = {});

/// Throws NotCommuting unless a and b commute.
CommutingDecomposition decompose_commuting(const Subspace& a, const Subspace& b, const Tolerance& tol = {});

}  // namespace raygeo

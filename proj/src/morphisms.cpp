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

#include "raygeo/morphisms.hpp"

#include <algorithm>
#include <cmath>

#include "raygeo/error.hpp"
#include "raygeo/geometry.hpp"
#include "raygeo/random.hpp"

namespace raygeo {

LinearMap::LinearMap(Mat matrix, const Tolerance& tol) : matrix_(std::move(matrix)) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < matrix_.cols(); ++c) cols.push_back(matrix_.column(c));
  if (matrix_.cols() == 0 || orthonormalize(cols, tol).size() != matrix_.cols()) {
    throw Error(ErrorKind::NotInjective, "linear map is not injective");
  }
}

Ray apply_ray(const RegularMap& f, const Ray& x, const Tolerance& tol) {
  if (x.dim() != f.underlying().dim_in()) {
    throw Error(ErrorKind::DimensionMismatch, "ray dimension does not match the map's domain");
  }
  return Ray::from(f.underlying().matrix() * x.rep(), tol);
}

std::optional<double> isometry_scale(const RegularMap& f, int probes, const Tolerance& tol) {
  const Mat& m = f.underlying().matrix();
  const Mat gram = m.adjoint() * m;
  const std::size_t n = gram.rows();
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += gram(i, i).real();
  const double c2 = trace / static_cast<double>(n);
  if (!(c2 > 0.0)) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Cplx expected = r == c ? Cplx(c2) : Cplx(0.0);
      if (std::abs(gram(r, c) - expected) > tol.eps_rel * c2) return std::nullopt;
    }
  const double scale = std::sqrt(c2);
  Rng rng(0x150e7c1ULL);
  for (int i = 0; i < probes; ++i) {
    const Vec u = random_vector(rng, n);
    const double nu = norm(u);
    if (std::abs(norm(m * u) - scale * nu) > tol.eps_rel * scale * nu) return std::nullopt;
  }
  return scale;
}

SuperpositionVerdict preserves_superpositions(const RegularMap& f, int trials, std::uint64_t seed,
                                              const Tolerance& tol) {
  SuperpositionVerdict verdict;
  verdict.trials = trials;
  verdict.seed = seed;
  const std::size_t d = f.underlying().dim_in();
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, "morphism.superposition", static_cast<std::uint64_t>(t), d);
    Ray y = random_ray(rng, d);
    Ray z = random_ray(rng, d);
    while (a_sim(y, z) <= 1e-6) z = random_ray(rng, d);
    const double r = rng.uniform();
    const Ray fy = apply_ray(f, y, tol);
    const Ray fz = apply_ray(f, z, tol);
    double residual = 0.0;
    if (a_sim(fy, fz) <= tol.eps_abs) {
      residual = 1.0;  // image superposition undefined
    } else {
      residual = ray_distance(apply_ray(f, superpose({y, z, r}, tol), tol), superpose({fy, fz, r}, tol));
    }
    verdict.worst_residual = std::max(verdict.worst_residual, residual);
    if (residual > tol.eps_abs && verdict.preserved) {
      verdict.preserved = false;
      verdict.witness = SuperpositionSpec{y, z, r};
    }
  }
  return verdict;
}

bool check_char_morph(const RegularMap& f, int trials, std::uint64_t seed, const Tolerance& tol) {
  const bool isometry = isometry_scale(f, 8, tol).has_value();
  return isometry == preserves_superpositions(f, trials, seed, tol).preserved;
}

PThetaResiduals check_preserves_p_theta(const RegularMap& f, int trials, std::uint64_t seed, const Tolerance& tol) {
  if (!isometry_scale(f, 8, tol)) throw Error(ErrorKind::NotIsometry, "map is not an isometry up to scale");
  PThetaResiduals worst;
  const std::size_t d = f.underlying().dim_in();
  for (int t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, "morphism.p_theta", static_cast<std::uint64_t>(t), d);
    const Ray x = random_ray(rng, d);
    const Ray y = random_ray(rng, d);
    const Ray z = random_ray(rng, d);
    const Ray fx = apply_ray(f, x, tol);
    const Ray fy = apply_ray(f, y, tol);
    const Ray fz = apply_ray(f, z, tol);
    worst.p = std::max(worst.p, std::abs(p_sim(fx, fy) - p_sim(x, y)));
    if (a_sim(x, y) > 1e-6 && a_sim(y, z) > 1e-6 && a_sim(z, x) > 1e-6) {
      worst.theta = std::max(worst.theta, circular_distance(theta(fx, fy, fz), theta(x, y, z)));
    }
  }
  return worst;
}

}  // namespace raygeo

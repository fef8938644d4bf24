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
#include <numeric>

#include "raygeo/error.hpp"
#include "raygeo/lawcheck.hpp"

namespace raygeo {

namespace {

Cplx coefficient(Rng& rng, bool real_only) {
  return real_only ? Cplx(rng.normal(), 0.0) : rng.complex_normal();
}

Subspace span_of(const std::vector<Vec>& frame, const std::vector<std::size_t>& idx, std::size_t dim) {
  std::vector<Vec> vs;
  vs.reserve(idx.size());
  for (auto i : idx) vs.push_back(frame[i]);
  return Subspace::span(vs, dim);
}

}  // namespace

Ray Sampler::ray() { return random_ray(rng_, dim_, real_only()); }

Ray Sampler::ray_in(const Subspace& a) {
  if (a.rank() == 0) throw Error(ErrorKind::PreconditionUnmet, "cannot sample a ray in the zero subspace");
  for (;;) {
    Vec v(a.dim());
    for (const auto& b : a.basis()) v += coefficient(rng_, real_only()) * b;
    if (norm(v) > 1e-6) return Ray::from(v);
  }
}

Ray Sampler::ray_in_plane(const Vec& e, const Vec& f) {
  for (;;) {
    Vec v = coefficient(rng_, real_only()) * e + coefficient(rng_, real_only()) * f;
    if (norm(v) > 1e-6) return Ray::from(v);
  }
}

std::vector<Vec> Sampler::frame() { return random_frame(rng_, dim_, real_only()); }

Subspace Sampler::subspace(std::size_t rank) {
  auto f = frame();
  f.resize(std::min(rank, dim_));
  return Subspace::span(f, dim_);
}

Subspace Sampler::subspace() { return subspace(1 + rng_.index(dim_ - 1)); }

std::pair<Subspace, Subspace> Sampler::commuting_pair(bool shared_nonempty) {
  auto f = frame();
  std::vector<std::size_t> a_idx, b_idx;
  for (std::size_t i = 0; i < dim_; ++i) {
    // 0: shared, 1: first only, 2: second only, 3: neither.
    const std::size_t group = (shared_nonempty && i == 0) ? 0 : rng_.index(4);
    if (group == 0 || group == 1) a_idx.push_back(i);
    if (group == 0 || group == 2) b_idx.push_back(i);
  }
  return {span_of(f, a_idx, dim_), span_of(f, b_idx, dim_)};
}

std::pair<Subspace, Subspace> Sampler::nested_pair() {
  auto f = frame();
  const std::size_t outer = 1 + rng_.index(dim_);
  const std::size_t inner = rng_.index(outer + 1);
  std::vector<std::size_t> idx(dim_);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return {span_of(f, {idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(inner)}, dim_),
          span_of(f, {idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(outer)}, dim_)};
}

std::pair<Subspace, Subspace> Sampler::orthogonal_pair() {
  auto fam = orthogonal_family(2);
  return {fam[0], fam[1]};
}

std::vector<Subspace> Sampler::orthogonal_family(std::size_t k) {
  k = std::clamp<std::size_t>(k, 1, dim_);
  auto f = frame();
  // Each part gets one frame vector; the rest are spread at random, some left out.
  std::vector<std::vector<std::size_t>> parts(k);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i < k) {
      parts[i].push_back(i);
    } else {
      const std::size_t g = rng_.index(k + 1);
      if (g < k) parts[g].push_back(i);
    }
  }
  std::vector<Subspace> out;
  out.reserve(k);
  for (const auto& p : parts) out.push_back(span_of(f, p, dim_));
  return out;
}

std::pair<Subspace, Subspace> Sampler::pair() {
  switch (flavor_) {
    case Flavor::CommutingPair:
    case Flavor::ClassicalOrthogonal:
      return commuting_pair();
    case Flavor::NestedPair:
      return nested_pair();
    default: {
      Subspace a = subspace();
      return {a, subspace()};
    }
  }
}

std::vector<Ray> Sampler::coplanar_rays(std::size_t n) {
  auto f = frame();
  std::vector<Ray> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(ray_in_plane(f[0], f[1]));
  return out;
}

std::vector<Ray> Sampler::classical_rays(std::size_t k) {
  std::vector<std::size_t> idx(dim_);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = dim_; i > 1; --i) std::swap(idx[i - 1], idx[rng_.index(i)]);
  std::vector<Ray> out;
  for (std::size_t i = 0; i < std::min(k, dim_); ++i) out.push_back(Ray::from(Vec::basis(dim_, idx[i])));
  return out;
}

Mat Sampler::isometry(std::size_t dim_out, std::size_t dim_in) {
  Mat m = random_isometry(rng_, dim_out, dim_in, real_only());
  m *= Cplx(rng_.uniform(0.5, 3.0), 0.0);
  return m;
}

Mat Sampler::non_isometry(std::size_t dim_out, std::size_t dim_in) {
  Mat u = random_isometry(rng_, dim_out, dim_in, real_only());
  Mat v = random_isometry(rng_, dim_in, dim_in, real_only());
  Mat s = Mat::identity(dim_in);
  const std::size_t k = rng_.index(dim_in);
  s(k, k) = rng_.uniform(1.1, 2.0);
  Mat m = u * s * v.adjoint();
  m *= Cplx(rng_.uniform(0.5, 3.0), 0.0);
  return m;
}

}  // namespace raygeo

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

#include "raygeo/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace raygeo {

std::uint64_t Rng::splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng Rng::substream(std::uint64_t seed, std::string_view label, std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ fnv1a(label));
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return Rng(h);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  // 1 - uniform() lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Cplx Rng::complex_normal() {
  const double s = std::numbers::sqrt2 / 2.0;
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

Cplx Rng::phase() { return std::polar(1.0, uniform(-std::numbers::pi, std::numbers::pi)); }

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::index on empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

Vec random_vector(Rng& rng, std::size_t dim, bool real_only) {
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = real_only ? Cplx(rng.normal(), 0.0) : rng.complex_normal();
  return v;
}

Ray random_ray(Rng& rng, std::size_t dim, bool real_only) {
  for (;;) {
    Vec v = random_vector(rng, dim, real_only);
    if (norm(v) > 1e-6) return Ray::from(v);
  }
}

std::vector<Vec> random_frame(Rng& rng, std::size_t dim, bool real_only) {
  std::vector<Vec> frame;
  while (frame.size() < dim) {
    std::vector<Vec> candidates = frame;
    candidates.push_back(random_vector(rng, dim, real_only));
    auto ortho = orthonormalize(candidates);
    if (ortho.size() == frame.size() + 1) frame = std::move(ortho);
  }
  return frame;
}

Mat random_isometry(Rng& rng, std::size_t dim_out, std::size_t dim_in, bool real_only) {
  if (dim_in > dim_out) throw std::invalid_argument("isometry needs dim_in <= dim_out");
  auto frame = random_frame(rng, dim_out, real_only);
  frame.resize(dim_in);
  return Mat::from_columns(frame);
}

Vec random_unit_in(Rng& rng, const Subspace& a) {
  if (a.rank() == 0) throw std::invalid_argument("random_unit_in on the zero subspace");
  for (;;) {
    Vec v(a.dim());
    for (const auto& b : a.basis()) v += rng.complex_normal() * b;
    const double n = norm(v);
    if (n > 1e-6) return (1.0 / n) * v;
  }
}

}  // namespace raygeo

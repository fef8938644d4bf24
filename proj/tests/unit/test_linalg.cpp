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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "oracle.hpp"
#include "raygeo/error.hpp"
#include "raygeo/linalg.hpp"
#include "raygeo/random.hpp"

using namespace raygeo;

namespace {
constexpr double h = std::numbers::sqrt2 / 2.0;
const Cplx I{0.0, 1.0};
}  // namespace

TEST_CASE("inner is linear in the first slot and conjugate-linear in the second") {
  CHECK(inner(Vec{1.0, 0.0}, Vec{1.0, 0.0}) == Cplx(1.0));
  CHECK(inner(Vec{1.0, 0.0}, Vec{0.0, 1.0}) == Cplx(0.0));
  const Cplx v = inner(Vec{h, h}, Vec{h, h * I});
  CHECK(std::abs(v - Cplx(0.5, -0.5)) < 1e-15);
  CHECK_THROWS_AS((inner(Vec{1.0}, Vec{1.0, 0.0})), Error);
}

TEST_CASE("norm") {
  CHECK(norm(Vec{3.0, 4.0}) == doctest::Approx(5.0));
  CHECK(norm(Vec{0.0, 0.0}) == 0.0);
  CHECK(std::abs(norm(Vec{h, h * I}) - 1.0) < 1e-15);
  // Scaled accumulation survives entries whose squares overflow.
  CHECK(norm(Vec{3e200, 4e200}) == doctest::Approx(5e200));
}

TEST_CASE("carg range and zero argument") {
  CHECK(carg(Cplx(1.0)) == 0.0);
  CHECK(carg(I) == doctest::Approx(std::numbers::pi / 2));
  CHECK(carg(Cplx(0.5, -0.5)) == doctest::Approx(-std::numbers::pi / 4));
  CHECK(carg(Cplx(-1.0, 0.0)) == doctest::Approx(std::numbers::pi));
  CHECK(carg(Cplx(-1.0, -0.0)) == doctest::Approx(std::numbers::pi));
  try {
    (void)carg(Cplx(1e-12, 0.0));
    FAIL("expected ZeroArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroArgument);
  }
}

TEST_CASE("wrap_angle and circular_distance") {
  constexpr double pi = std::numbers::pi;
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(pi) == doctest::Approx(pi));
  CHECK(wrap_angle(-pi) == doctest::Approx(pi));
  CHECK(wrap_angle(3 * pi / 2) == doctest::Approx(-pi / 2));
  CHECK(circular_distance(pi - 1e-9, -pi + 1e-9) == doctest::Approx(2e-9).epsilon(1e-6));
  CHECK(circular_distance(0.1, 0.1 + 4 * pi) < 1e-12);
  gen::for_all("wrap", 200, [](Rng& rng, std::size_t, int) {
    const double a = rng.uniform(-50.0, 50.0);
    const double w = wrap_angle(a);
    CHECK(w > -std::numbers::pi);
    CHECK(w <= std::numbers::pi);
    CHECK(oracle::circ(a, w) < 1e-12);
  });
}

TEST_CASE("mixed_residual policy") {
  Tolerance tol;
  CHECK(mixed_residual(1.0, 1.0) == 0.0);
  CHECK(mixed_residual(2.0 + 1e-9, 2.0) == doctest::Approx(5e-10));
  // Near zero the denominator floors at eps_abs / eps_rel = 0.1.
  CHECK(mixed_residual(1e-11, 0.0) == doctest::Approx(1e-10));
  CHECK(mixed_residual(1e-10, 0.0, tol) <= tol.eps_rel);
}

TEST_CASE("Tolerance validation") {
  CHECK_NOTHROW(Tolerance{}.validate());
  CHECK_THROWS_AS((Tolerance{0.0, 1e-9}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Tolerance{1e-10, -1.0}.validate()), std::invalid_argument);
}

TEST_CASE("orthonormalize examples") {
  auto a = orthonormalize(std::vector<Vec>{Vec{2.0, 0.0}});
  REQUIRE(a.size() == 1);
  CHECK(std::abs(a[0][0] - 1.0) < 1e-15);
  CHECK(orthonormalize(std::vector<Vec>{Vec{1.0, 0.0}, Vec{1.0, 0.0}}).size() == 1);
  auto b = orthonormalize(std::vector<Vec>{Vec{1.0, 0.0}, Vec{1.0, 1.0}});
  REQUIRE(b.size() == 2);
  CHECK(std::abs(b[1][0]) < 1e-15);
  CHECK(std::abs(b[1][1] - 1.0) < 1e-15);
  CHECK(orthonormalize(std::vector<Vec>{}).empty());
  CHECK(orthonormalize(std::vector<Vec>{Vec{0.0, 0.0, 0.0}}).empty());
}

TEST_CASE("property: orthonormalize returns an orthonormal basis of the numerical span") {
  gen::for_all("orthonormalize", 300, [](Rng& rng, std::size_t dim, int) {
    const std::size_t k = 1 + rng.index(dim + 2);
    std::vector<Vec> vs;
    std::size_t dependent = 0;
    for (std::size_t i = 0; i < k; ++i) {
      // Every third vector is a combination of the first two.
      if (i % 3 == 2) {
        vs.push_back(rng.complex_normal() * vs[0] + rng.complex_normal() * vs[1]);
        ++dependent;
      } else {
        vs.push_back(random_vector(rng, dim));
      }
    }
    const auto q = orthonormalize(vs);
    CHECK(q.size() == std::min(dim, k - dependent));
    for (std::size_t i = 0; i < q.size(); ++i) {
      CHECK(std::abs(norm(q[i]) - 1.0) < 1e-12);
      for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(inner(q[i], q[j])) < 1e-12);
    }
    // Every input lies in the span of the output.
    for (const auto& v : vs) {
      Vec r = v;
      for (const auto& b : q) r -= inner(v, b) * b;
      CHECK(norm(r) < 1e-10 * std::max(1.0, norm(v)));
    }
    // Idempotent up to the basis itself.
    const auto q2 = orthonormalize(q);
    REQUIRE(q2.size() == q.size());
    for (std::size_t i = 0; i < q.size(); ++i) CHECK(norm(q2[i] - q[i]) < 1e-10);
  });
}

TEST_CASE("property: sesquilinearity and Cauchy-Schwarz") {
  gen::for_all("inner", 300, [](Rng& rng, std::size_t dim, int) {
    const Vec u = random_vector(rng, dim), v = random_vector(rng, dim), w = random_vector(rng, dim);
    const Cplx a = rng.complex_normal(), b = rng.complex_normal();
    const Cplx lhs = inner(a * u + b * v, w);
    const Cplx rhs = a * inner(u, w) + b * inner(v, w);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(lhs)));
    CHECK(std::abs(inner(v, u) - std::conj(inner(u, v))) < 1e-14);
    CHECK(std::abs(inner(u, v)) <= norm(u) * norm(v) + 1e-10);
    CHECK(std::abs(inner(u, v) - oracle::dot(oracle::to_v(u), oracle::to_v(v))) < 1e-12);
  });
}

TEST_CASE("Mat products, adjoint and kron") {
  Mat m(2, 2, {1.0, I, 0.0, 2.0});
  const Vec v = m * Vec{1.0, 1.0};
  CHECK(v[0] == Cplx(1.0, 1.0));
  CHECK(v[1] == Cplx(2.0));
  const Mat a = m.adjoint();
  CHECK(a(1, 0) == -I);
  Mat id = Mat::identity(2) * m;
  id -= m;
  CHECK(id.max_abs() == 0.0);
  CHECK_THROWS_AS((Mat(2, 2, {1.0})), Error);
  CHECK_THROWS_AS((m * Vec{1.0, 2.0, 3.0}), Error);
  const Vec k = kron(Vec{1.0, 2.0}, Vec{3.0, I});
  REQUIRE(k.dim() == 4);
  CHECK(k[1] == I);
  CHECK(k[2] == Cplx(6.0));
}

TEST_CASE("Rng substreams are deterministic and label-sensitive") {
  Rng a = Rng::substream(42, "law", 3, 7);
  Rng b = Rng::substream(42, "law", 3, 7);
  Rng c = Rng::substream(42, "law", 3, 8);
  Rng d = Rng::substream(42, "lax", 3, 7);
  const auto x = a.next_u64();
  CHECK(x == b.next_u64());
  CHECK(x != c.next_u64());
  CHECK(x != d.next_u64());
  // FNV-1a reference value of the empty string.
  CHECK(Rng::fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(Rng::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("Rng distributions") {
  Rng rng(7);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sq / n - 1.0) < 0.05);
  CHECK_THROWS_AS((rng.index(0)), std::invalid_argument);
  for (int i = 0; i < 100; ++i) CHECK(rng.index(3) < 3);
}

TEST_CASE("random frames and isometries") {
  gen::for_all("frames", 50, [](Rng& rng, std::size_t dim, int i) {
    const bool real_only = i % 2 == 1;
    const auto f = random_frame(rng, dim, real_only);
    REQUIRE(f.size() == dim);
    for (std::size_t a = 0; a < dim; ++a) {
      CHECK(std::abs(norm(f[a]) - 1.0) < 1e-12);
      for (std::size_t b = 0; b < a; ++b) CHECK(std::abs(inner(f[a], f[b])) < 1e-12);
      if (real_only) {
        for (const auto& e : f[a]) CHECK(e.imag() == 0.0);
      }
    }
    const Mat u = random_isometry(rng, dim + 2, dim, real_only);
    Mat g = u.adjoint() * u;
    g -= Mat::identity(dim);
    CHECK(g.max_abs() < 1e-12);
  });
  Rng rng(1);
  CHECK_THROWS_AS((random_isometry(rng, 2, 3)), std::invalid_argument);
}

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

#include "raygeo/io.hpp"

#include <string>

#include "raygeo/error.hpp"

namespace raygeo {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedInput, "malformed JSON: " + what);
}

std::size_t size_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned()) {
    malformed(std::string("expected non-negative integer field '") + key + "'");
  }
  return j.at(key).get<std::size_t>();
}

Json basis_json(const Subspace& a) {
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back(to_json(b));
  return basis;
}

}  // namespace

Json to_json(Cplx c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& e : v) j.push_back(to_json(e));
  return j;
}

Json to_json(const Mat& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const Ray& x) { return {{"dim", x.dim()}, {"rep", to_json(x.rep())}}; }

Json to_json(const RayOrZero& x) {
  if (is_zero(x)) return "zero";
  return to_json(std::get<Ray>(x));
}

Json to_json(const Subspace& a) { return {{"dim", a.dim()}, {"basis", basis_json(a)}}; }

Json to_json(const LinearMap& m) {
  return {{"dim_in", m.dim_in()}, {"dim_out", m.dim_out()}, {"matrix", to_json(m.matrix())}};
}

Json to_json(const SuperpositionSpec& s) { return {{"y", to_json(s.y)}, {"z", to_json(s.z)}, {"r", s.r}}; }

Json to_json(const NonSquaredWitness& w) {
  return {{"trial", w.trial},
          {"x", to_json(w.x)},
          {"alpha_basis", basis_json(w.alpha)},
          {"beta_basis", basis_json(w.beta)},
          {"p_values",
           {{"p_x_alpha", 1.0},
            {"p_x_beta", w.terms.p_x_beta},
            {"p_beta_x_alpha", w.terms.p_bx_alpha},
            {"p_alpha_beta_x_beta", w.terms.p_abx_beta}}},
          {"margin", w.margin},
          {"squared_margin", w.terms.rhs() - w.terms.lhs_squared()}};
}

Cplx cplx_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed("complex numbers are encoded as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("vectors are non-empty arrays of [re, im]");
  std::vector<Cplx> entries;
  for (const auto& e : j) entries.push_back(cplx_from_json(e));
  return Vec(std::move(entries));
}

Mat mat_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) malformed("matrix needs an 'entries' array");
  std::vector<Cplx> entries;
  for (const auto& e : j.at("entries")) entries.push_back(cplx_from_json(e));
  if (entries.size() != rows * cols) malformed("matrix entry count does not equal rows*cols");
  return Mat(rows, cols, std::move(entries));
}

Ray ray_from_json(const Json& j) {
  Vec rep;
  if (j.is_array()) {
    rep = vec_from_json(j);
  } else {
    const std::size_t dim = size_field(j, "dim");
    if (!j.contains("rep")) malformed("ray needs 'rep'");
    rep = vec_from_json(j.at("rep"));
    if (rep.dim() != dim) malformed("ray 'rep' length does not equal 'dim'");
  }
  if (norm(rep) <= Tolerance{}.eps_abs) malformed("ray representative is the zero vector");
  return Ray::from(rep);
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t dim = size_field(j, "dim");
  if (!j.contains("basis") || !j.at("basis").is_array()) malformed("subspace needs a 'basis' array");
  std::vector<Vec> basis;
  for (const auto& b : j.at("basis")) {
    basis.push_back(vec_from_json(b));
    if (basis.back().dim() != dim) malformed("subspace basis vector length does not equal 'dim'");
  }
  return Subspace::span(basis, dim);
}

LinearMap linear_map_from_json(const Json& j) {
  const std::size_t din = size_field(j, "dim_in");
  const std::size_t dout = size_field(j, "dim_out");
  if (!j.contains("matrix")) malformed("linear map needs 'matrix'");
  Mat m = mat_from_json(j.at("matrix"));
  if (m.rows() != dout || m.cols() != din) malformed("matrix shape does not match dim_out x dim_in");
  return LinearMap(std::move(m));
}

SuperpositionSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("y") || !j.contains("z") || !j.contains("r") || !j.at("r").is_number()) {
    malformed("superposition spec is {\"y\", \"z\", \"r\"}");
  }
  return SuperpositionSpec{ray_from_json(j.at("y")), ray_from_json(j.at("z")), j.at("r").get<double>()};
}

}  // namespace raygeo

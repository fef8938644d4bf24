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

// JSON encodings (nlohmann::json):
//   Cplx      [re, im]
//   Vec       [[re, im], ...]
//   Mat       {"rows", "cols", "entries": [[re, im], ...] row-major}
//   Ray       {"dim", "rep"}           decoding re-canonicalizes
//   Subspace  {"dim", "basis"}         decoding re-orthonormalizes
//   LinearMap {"dim_in", "dim_out", "matrix"}
//   SuperpositionSpec {"y", "z", "r"}
// Decoding failures throw Error(MalformedInput).

#include "json.hpp"

#include "raygeo/linalg.hpp"
#include "raygeo/morphisms.hpp"
#include "raygeo/probability.hpp"
#include "raygeo/rays.hpp"
#include "raygeo/superposition.hpp"

namespace raygeo {

using Json = nlohmann::json;

Json to_json(Cplx c);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Ray& x);
Json to_json(const RayOrZero& x);
Json to_json(const Subspace& a);
Json to_json(const LinearMap& m);
Json to_json(const SuperpositionSpec& s);
/// {"x", "alpha_basis", "beta_basis", "p_values", "margin", "trial"}
Json to_json(const NonSquaredWitness& w);

Cplx cplx_from_json(const Json& j);
Vec vec_from_json(const Json& j);
Mat mat_from_json(const Json& j);
/// Accepts {"dim", "rep"} or a bare vector; the result is re-canonicalized.
Ray ray_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);
LinearMap linear_map_from_json(const Json& j);
SuperpositionSpec spec_from_json(const Json& j);

}  // namespace raygeo

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

// Product states in C^d1 (x) C^d2.

#include "raygeo/rays.hpp"

namespace raygeo {

struct ProductRay {
  Ray factor1;
  Ray factor2;
  Ray combined;  ///< dimension d1 * d2, index i*d2 + j
};

ProductRay tensor_ray(const Ray& x1, const Ray& x2);

/// |p(x1(x)x2, y1(x)y2) - p(x1,y1) p(x2,y2)|.
double check_p_product(const Ray& x1, const Ray& y1, const Ray& x2, const Ray& y2);

/// Circular distance between theta of the product triple and
/// theta(x1,y1,z1) + theta(x2,y2,z2). Both factor triples must be pairwise
/// non-orthogonal (OrthogonalPair otherwise).
double check_theta_product(const Ray& x1, const Ray& y1, const Ray& z1, const Ray& x2, const Ray& y2,
                           const Ray& z2);

}  // namespace raygeo

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

#include "raygeo/tensor.hpp"

#include <cmath>

#include "raygeo/geometry.hpp"

namespace raygeo {

ProductRay tensor_ray(const Ray& x1, const Ray& x2) {
  return ProductRay{x1, x2, Ray::from(kron(x1.rep(), x2.rep()))};
}

double check_p_product(const Ray& x1, const Ray& y1, const Ray& x2, const Ray& y2) {
  const Ray x = tensor_ray(x1, x2).combined;
  const Ray y = tensor_ray(y1, y2).combined;
  return std::abs(p_sim(x, y) - p_sim(x1, y1) * p_sim(x2, y2));
}

double check_theta_product(const Ray& x1, const Ray& y1, const Ray& z1, const Ray& x2, const Ray& y2,
                           const Ray& z2) {
  const double factors = theta(x1, y1, z1) + theta(x2, y2, z2);
  const double product =
      theta(tensor_ray(x1, x2).combined, tensor_ray(y1, y2).combined, tensor_ray(z1, z2).combined);
  return circular_distance(product, factors);
}

}  // namespace raygeo

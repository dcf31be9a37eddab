// Copyright 2026 The descriptor-lab Authors
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

#include "dlab/random.hpp"

#include <cmath>

namespace dlab {

Matrix haar_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      a(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution is Haar, not just unitary.
  for (std::size_t k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag == 0.0) ? Complex(1.0, 0.0) : d / mag;
  }
  return q;
}

Vector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    v[k] = Complex(gauss(rng), gauss(rng));
  }
  v.normalize();
  return v;
}

}  // namespace dlab

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

#pragma once

#include <random>

#include "dlab/types.hpp"

namespace dlab::test {

// Independent tensor-product oracle: plain quadruple loop, no shared code
// with the library's embedding.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Matrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      a(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  return 0.5 * (a + a.adjoint());
}

// Sorted eigenvalue list for spectra comparisons.
inline std::vector<double> sorted_real_eigenvalues(const Matrix& a) {
  Eigen::ComplexEigenSolver<Matrix> solver(a);
  std::vector<double> re, im;
  std::vector<std::pair<double, double>> pairs;
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    pairs.emplace_back(solver.eigenvalues()[k].real(),
                       solver.eigenvalues()[k].imag());
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<double> flat;
  for (auto& [r, i] : pairs) {
    flat.push_back(r);
    flat.push_back(i);
  }
  return flat;
}

}  // namespace dlab::test

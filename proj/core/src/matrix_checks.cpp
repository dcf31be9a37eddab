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

#include "dlab/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dlab {

double max_abs(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

bool is_finite(const Matrix& a) { return a.allFinite(); }

bool is_unitary(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols() || !a.allFinite()) return false;
  Matrix residual = a.adjoint() * a;
  residual -= Matrix::Identity(a.rows(), a.cols());
  return max_abs(residual) <= tolerance;
}

bool is_hermitian(const Matrix& a, double tolerance) {
  if (a.rows() != a.cols() || !a.allFinite()) return false;
  return max_abs(Matrix(a - a.adjoint())) <= tolerance;
}

void require_square(const Matrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
}

void require_unitary(const Matrix& a, const char* what, double tolerance) {
  if (!is_unitary(a, tolerance)) {
    throw std::invalid_argument(std::string(what) + ": operator fails the unitarity check");
  }
}

void require_hermitian(const Matrix& a, const char* what, double tolerance) {
  if (!is_hermitian(a, tolerance)) {
    throw std::invalid_argument(std::string(what) + ": operator fails the Hermiticity check");
  }
}

double phase_aligned_delta(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_delta: shape mismatch");
  }
  Eigen::Index pr = 0, pc = 0;
  b.cwiseAbs().maxCoeff(&pr, &pc);
  const Complex pivot = b(pr, pc);
  if (std::abs(pivot) == 0.0) return max_abs(a);
  Complex phase = a(pr, pc) / pivot;
  const double mag = std::abs(phase);
  phase = (mag == 0.0) ? Complex(1.0, 0.0) : phase / mag;
  return max_abs(Matrix(a - phase * b));
}

}  // namespace dlab

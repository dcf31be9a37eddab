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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace dlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Comparison tolerances used throughout the library. Every check that
/// accepts a tolerance defaults to one of these.
namespace tol {
inline constexpr double unitary = 1e-10;
inline constexpr double hermitian = 1e-10;
inline constexpr double coeff_prune = 1e-12;
inline constexpr double coeff_roundtrip = 1e-12;
inline constexpr double step_vs_global = 1e-9;
inline constexpr double locality = 1e-10;
inline constexpr double density = 1e-9;
inline constexpr double trace = 1e-10;
inline constexpr double expectation = 1e-9;
inline constexpr double recovery = 1e-8;
inline constexpr double class_equality = 1e-9;
inline constexpr double projective = 1e-10;
inline constexpr double pivot = 1e-6;
}  // namespace tol

/// Largest entry magnitude (max-norm). Zero for empty matrices.
double max_abs(const Matrix& a);

/// Largest entry magnitude of the difference a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_finite(const Matrix& a);
bool is_unitary(const Matrix& a, double tolerance = tol::unitary);
bool is_hermitian(const Matrix& a, double tolerance = tol::hermitian);

/// Throw std::invalid_argument naming `what` if the check fails.
void require_unitary(const Matrix& a, const char* what,
                     double tolerance = tol::unitary);
void require_hermitian(const Matrix& a, const char* what,
                       double tolerance = tol::hermitian);
void require_square(const Matrix& a, const char* what);

/// Smallest max-norm distance between a and e^{iphi} b over all phases phi,
/// estimated by aligning the phases at b's largest entry.
double phase_aligned_delta(const Matrix& a, const Matrix& b);

}  // namespace dlab

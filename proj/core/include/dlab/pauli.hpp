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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/types.hpp"

namespace dlab {

enum class Pauli : unsigned char { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A multi-qubit Pauli word: one letter per qubit (qubit 0 leftmost) and a
/// unit phase restricted to {1, -1, i, -i}, stored as quarter turns so that
/// phase = i^quarter_turns.
struct PauliWord {
  std::vector<Pauli> letters;
  unsigned char quarter_turns = 0;

  std::size_t size() const { return letters.size(); }
  Complex phase() const;

  /// Dense matrix: phase x tensor product of the single-qubit letters.
  Matrix to_matrix() const;

  /// Word product with phase tracking (XZ = -iY and friends).
  PauliWord operator*(const PauliWord& other) const;

  /// Text form: optional prefix in {+, -, +i, -i, i} then letters,
  /// e.g. "-iXZI". Parsing throws std::invalid_argument on bad input.
  static PauliWord parse(std::string_view text);
  std::string str() const;

  bool operator==(const PauliWord& other) const = default;
};

/// A linear combination of Pauli words in canonical form: terms keyed by
/// letter string (so no two terms share one), word phases folded into the
/// coefficients, coefficients below the pruning threshold dropped.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Accumulate coeff x word (word phase folded into the coefficient).
  void add(Complex coeff, const PauliWord& word);
  void add(Complex coeff, const std::vector<Pauli>& letters);

  /// Drop terms with |coeff| <= threshold.
  void prune(double threshold = tol::coeff_prune);

  const std::map<std::vector<Pauli>, Complex>& terms() const { return terms_; }

  /// Sum of coeff x word matrices, built directly from the words.
  Matrix to_matrix() const;

  /// True when every canonical coefficient is real within `tolerance`
  /// (canonical words are Hermitian, so this decides Hermiticity).
  bool is_hermitian(double tolerance = tol::hermitian) const;

  /// Text form: ";"-separated "a+bi*WORD" entries.
  std::string str(int precision = 17) const;

  /// Parse the text form. If expected_qubits is nonzero, enforce the width.
  static PauliSum parse(std::string_view text, std::size_t expected_qubits = 0);

  bool operator==(const PauliSum& other) const = default;

 private:
  std::size_t n_qubits_ = 0;
  std::map<std::vector<Pauli>, Complex> terms_;
};

/// Unique expansion a = sum_w c_w w with c_w = Tr(w^dagger a) / 2^n.
/// Throws std::invalid_argument unless a is square with side 2^n_qubits.
PauliSum pauli_decompose(const Matrix& a, std::size_t n_qubits);

/// Generator pair standing for one qubit's X and Z in a functional
/// evaluation; both matrices share the evaluation dimension.
struct XZComponents {
  Matrix x;
  Matrix z;
};

/// Map from qubit index to its X/Z component pair.
using ComponentMap = std::map<std::size_t, XZComponents>;

/// Evaluate a Pauli-word polynomial on mapped components: each word becomes
/// coeff x prod_i m(letter_i), letters rebuilt multiplicatively
/// (Y_i = i m(X_i) m(Z_i), I = identity). The map must cover every qubit
/// appearing non-trivially in f; dim_hint supplies the dimension when f is
/// purely scalar (identity words only) and the map is empty.
Matrix pauli_eval(const PauliSum& f, const ComponentMap& components,
                  std::size_t dim_hint = 0);

/// pauli_eval(f, components) * v without materializing the operator.
Vector pauli_eval_apply(const PauliSum& f, const ComponentMap& components,
                        const Vector& v);

/// Helpers shared with the decomposition routine: a Pauli word acts on basis
/// vectors as a signed permutation. Returns the image row of basis column
/// `col` and writes the amplitude to `amp`.
std::size_t pauli_word_column_action(const std::vector<Pauli>& letters,
                                     Complex word_phase, std::size_t col,
                                     Complex* amp);

/// Complex scalar text forms used across reports and snapshots:
/// "a+bi" (also accepts "a", "bi", "i", "-i", "a-bi").
std::string format_complex(Complex z, int precision = 17);
Complex parse_complex(std::string_view text);

}  // namespace dlab

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

#include "dlab/pauli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace dlab {

namespace {

constexpr Complex kQuarterTurn[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

// Single-letter products a*b -> (result letter, extra quarter turns).
// XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
void letter_product(Pauli a, Pauli b, Pauli* out, unsigned* turns) {
  if (a == Pauli::I) {
    *out = b;
    *turns = 0;
    return;
  }
  if (b == Pauli::I || a == b) {
    *out = (b == Pauli::I) ? a : Pauli::I;
    *turns = 0;
    return;
  }
  const auto idx = [](Pauli p) { return static_cast<int>(p) - 1; };  // X=0,Y=1,Z=2
  const int ia = idx(a), ib = idx(b);
  const int ic = 3 - ia - ib;
  static constexpr Pauli kLetters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  *out = kLetters[ic];
  *turns = ((ib - ia + 3) % 3 == 1) ? 1u : 3u;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text) {
  const std::string buf(text);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || buf.empty()) {
    throw std::invalid_argument("parse_complex: bad number '" + buf + "'");
  }
  return v;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
  }
  throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
}

Complex PauliWord::phase() const { return kQuarterTurn[quarter_turns % 4]; }

std::size_t pauli_word_column_action(const std::vector<Pauli>& letters,
                                     Complex word_phase, std::size_t col,
                                     Complex* amp) {
  const std::size_t n = letters.size();
  std::size_t row = col;
  Complex a = word_phase;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t bitpos = n - 1 - q;
    const bool bit = (col >> bitpos) & 1u;
    switch (letters[q]) {
      case Pauli::I:
        break;
      case Pauli::X:
        row ^= (std::size_t{1} << bitpos);
        break;
      case Pauli::Y:
        row ^= (std::size_t{1} << bitpos);
        a *= bit ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
        break;
      case Pauli::Z:
        if (bit) a = -a;
        break;
    }
  }
  *amp = a;
  return row;
}

Matrix PauliWord::to_matrix() const {
  if (letters.empty()) {
    throw std::invalid_argument("PauliWord::to_matrix: empty word");
  }
  const std::size_t n_states = std::size_t{1} << letters.size();
  Matrix m = Matrix::Zero(n_states, n_states);
  for (std::size_t col = 0; col < n_states; ++col) {
    Complex amp;
    const std::size_t row = pauli_word_column_action(letters, phase(), col, &amp);
    m(row, col) = amp;
  }
  return m;
}

PauliWord PauliWord::operator*(const PauliWord& other) const {
  if (letters.size() != other.letters.size()) {
    throw std::invalid_argument("PauliWord product: length mismatch");
  }
  PauliWord out;
  out.letters.resize(letters.size());
  unsigned turns = quarter_turns + other.quarter_turns;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    unsigned extra = 0;
    letter_product(letters[q], other.letters[q], &out.letters[q], &extra);
    turns += extra;
  }
  out.quarter_turns = static_cast<unsigned char>(turns % 4);
  return out;
}

PauliWord PauliWord::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("PauliWord::parse: empty text");
  PauliWord word;
  unsigned turns = 0;
  if (s.front() == '+' || s.front() == '-') {
    if (s.front() == '-') turns = 2;
    s.remove_prefix(1);
  }
  if (!s.empty() && s.front() == 'i' && s.size() > 1) {
    turns += 1;
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("PauliWord::parse: no letters");
  word.quarter_turns = static_cast<unsigned char>(turns % 4);
  for (char c : s) word.letters.push_back(pauli_from_char(c));
  return word;
}

std::string PauliWord::str() const {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[quarter_turns % 4];
  for (Pauli p : letters) out.push_back(pauli_char(p));
  return out;
}

PauliSum::PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

void PauliSum::add(Complex coeff, const std::vector<Pauli>& letters) {
  if (n_qubits_ == 0) {
    n_qubits_ = letters.size();
  } else if (letters.size() != n_qubits_) {
    throw std::invalid_argument("PauliSum::add: word width mismatch");
  }
  if (letters.empty()) throw std::invalid_argument("PauliSum::add: empty word");
  Complex& slot = terms_[letters];
  slot += coeff;
  if (slot == Complex(0.0, 0.0)) terms_.erase(letters);
}

void PauliSum::add(Complex coeff, const PauliWord& word) {
  add(coeff * word.phase(), word.letters);
}

void PauliSum::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Matrix PauliSum::to_matrix() const {
  if (n_qubits_ == 0) {
    throw std::invalid_argument("PauliSum::to_matrix: width unknown");
  }
  const std::size_t n_states = std::size_t{1} << n_qubits_;
  Matrix m = Matrix::Zero(n_states, n_states);
  for (const auto& [letters, coeff] : terms_) {
    for (std::size_t col = 0; col < n_states; ++col) {
      Complex amp;
      const std::size_t row =
          pauli_word_column_action(letters, Complex(1.0, 0.0), col, &amp);
      m(row, col) += coeff * amp;
    }
  }
  return m;
}

bool PauliSum::is_hermitian(double tolerance) const {
  for (const auto& [letters, coeff] : terms_) {
    if (std::abs(coeff.imag()) > tolerance) return false;
  }
  return true;
}

std::string PauliSum::str(int precision) const {
  std::string out;
  for (const auto& [letters, coeff] : terms_) {
    if (!out.empty()) out.push_back(';');
    out += format_complex(coeff, precision);
    out.push_back('*');
    for (Pauli p : letters) out.push_back(pauli_char(p));
  }
  return out;
}

PauliSum PauliSum::parse(std::string_view text, std::size_t expected_qubits) {
  PauliSum sum(expected_qubits);
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    const std::size_t semi = rest.find(';');
    std::string_view entry = trim(rest.substr(0, semi));
    rest = (semi == std::string_view::npos) ? std::string_view{}
                                            : rest.substr(semi + 1);
    if (entry.empty()) continue;
    const std::size_t star = entry.find('*');
    Complex coeff(1.0, 0.0);
    std::string_view word_text = entry;
    if (star != std::string_view::npos) {
      coeff = parse_complex(entry.substr(0, star));
      word_text = trim(entry.substr(star + 1));
    }
    sum.add(coeff, PauliWord::parse(word_text));
  }
  if (expected_qubits != 0 && sum.n_qubits() != expected_qubits) {
    throw std::invalid_argument("PauliSum::parse: word width mismatch");
  }
  return sum;
}

PauliSum pauli_decompose(const Matrix& a, std::size_t n_qubits) {
  require_square(a, "pauli_decompose");
  if (n_qubits == 0 ||
      static_cast<std::size_t>(a.rows()) != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument(
        "pauli_decompose: dimension is not 2^n_qubits");
  }
  const std::size_t n_states = std::size_t{1} << n_qubits;
  const std::size_t n_words = std::size_t{1} << (2 * n_qubits);
  const double norm = 1.0 / static_cast<double>(n_states);
  static constexpr Pauli kByDigit[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

  PauliSum sum(n_qubits);
  std::vector<Pauli> letters(n_qubits);
  for (std::size_t w = 0; w < n_words; ++w) {
    std::size_t rem = w;
    for (std::size_t q = n_qubits; q-- > 0;) {
      letters[q] = kByDigit[rem % 4];
      rem /= 4;
    }
    // Tr(w^dagger a) summed over the word's one nonzero entry per column.
    Complex tr(0.0, 0.0);
    for (std::size_t col = 0; col < n_states; ++col) {
      Complex amp;
      const std::size_t row =
          pauli_word_column_action(letters, Complex(1.0, 0.0), col, &amp);
      tr += std::conj(amp) * a(row, col);
    }
    const Complex coeff = tr * norm;
    if (std::abs(coeff) > tol::coeff_prune) sum.add(coeff, letters);
  }
  return sum;
}

namespace {

std::size_t eval_dimension(const PauliSum& f, const ComponentMap& components,
                           std::size_t dim_hint) {
  std::size_t dim = dim_hint;
  for (const auto& [qubit, xz] : components) {
    require_square(xz.x, "pauli_eval");
    require_square(xz.z, "pauli_eval");
    if (xz.x.rows() != xz.z.rows()) {
      throw std::invalid_argument("pauli_eval: component dimension mismatch");
    }
    const auto d = static_cast<std::size_t>(xz.x.rows());
    if (dim == 0) dim = d;
    if (d != dim) {
      throw std::invalid_argument("pauli_eval: component dimension mismatch");
    }
  }
  if (dim == 0) {
    throw std::invalid_argument("pauli_eval: no components and no dimension hint");
  }
  (void)f;
  return dim;
}

const XZComponents& component_for(const ComponentMap& components, std::size_t qubit) {
  const auto it = components.find(qubit);
  if (it == components.end()) {
    throw std::invalid_argument("pauli_eval: missing component for qubit " +
                                std::to_string(qubit));
  }
  return it->second;
}

}  // namespace

Matrix pauli_eval(const PauliSum& f, const ComponentMap& components,
                  std::size_t dim_hint) {
  const std::size_t dim = eval_dimension(f, components, dim_hint);
  Matrix acc = Matrix::Zero(dim, dim);
  const Complex iunit(0.0, 1.0);

  for (const auto& [letters, coeff] : f.terms()) {
    Matrix product;
    bool have = false;
    for (std::size_t q = 0; q < letters.size(); ++q) {
      if (letters[q] == Pauli::I) continue;
      const XZComponents& xz = component_for(components, q);
      Matrix factor;
      switch (letters[q]) {
        case Pauli::X: factor = xz.x; break;
        case Pauli::Z: factor = xz.z; break;
        default: factor = iunit * (xz.x * xz.z); break;  // Y = i X Z
      }
      if (!have) {
        product = std::move(factor);
        have = true;
      } else {
        product = product * factor;
      }
    }
    if (!have) {
      acc += coeff * Matrix::Identity(dim, dim);
    } else {
      acc += coeff * product;
    }
  }
  return acc;
}

Vector pauli_eval_apply(const PauliSum& f, const ComponentMap& components,
                        const Vector& v) {
  const std::size_t dim =
      eval_dimension(f, components, static_cast<std::size_t>(v.size()));
  if (dim != static_cast<std::size_t>(v.size())) {
    throw std::invalid_argument("pauli_eval_apply: vector dimension mismatch");
  }
  Vector acc = Vector::Zero(v.size());
  const Complex iunit(0.0, 1.0);

  for (const auto& [letters, coeff] : f.terms()) {
    Vector w = v;
    for (std::size_t q = letters.size(); q-- > 0;) {
      if (letters[q] == Pauli::I) continue;
      const XZComponents& xz = component_for(components, q);
      switch (letters[q]) {
        case Pauli::X: w = xz.x * w; break;
        case Pauli::Z: w = xz.z * w; break;
        default: w = iunit * (xz.x * (xz.z * w)); break;
      }
    }
    acc += coeff * w;
  }
  return acc;
}

std::string format_complex(Complex z, int precision) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.*g%+.*gi", precision, z.real(), precision,
                z.imag());
  return buf;
}

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("parse_complex: empty text");

  if (s.back() == 'i' || s.back() == 'I') {
    s.remove_suffix(1);
    // Split real from imaginary at a sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') &&
          !(s[k - 1] == 'e' || s[k - 1] == 'E')) {
        split = k;
        break;
      }
    }
    const auto imag_part = [](std::string_view part) {
      if (part.empty() || part == "+") return 1.0;
      if (part == "-") return -1.0;
      return parse_double(part);
    };
    if (split == std::string_view::npos) {
      return Complex(0.0, imag_part(s));
    }
    return Complex(parse_double(s.substr(0, split)), imag_part(s.substr(split)));
  }
  return Complex(parse_double(s), 0.0);
}

}  // namespace dlab

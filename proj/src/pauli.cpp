// Copyright 2026 The seqpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqpt/pauli.hpp"

#include <cctype>

#include "seqpt/error.hpp"

namespace seqpt {

namespace {

BitVec low_mask(int n) { return n >= 64 ? ~BitVec{0} : (BitVec{1} << n) - 1; }

void require_same(const PauliLabel& a, const PauliLabel& b, const char* what) {
  if (a.qubits() != b.qubits()) {
    throw DimensionError(std::string(what) + ": qubit counts differ (" + std::to_string(a.qubits()) + " vs " +
                         std::to_string(b.qubits()) + ")");
  }
}

// Phase of column b of P_a: i^{|x&z|} (-1)^{|z&b|}.
inline cplx column_phase(PhaseExponent base, BitVec z, std::uint64_t b) {
  return (base + PhaseExponent(2 * parity(z & b))).factor();
}

}  // namespace

cplx PhaseExponent::factor() const {
  switch (value_) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

PauliLabel::PauliLabel(int n, BitVec x, BitVec z) : n_(n), x_(x), z_(z) {
  if (n < 1 || n > kMaxSymbolicQubits) throw DomainError("PauliLabel: unsupported qubit count " + std::to_string(n));
  if ((x | z) & ~low_mask(n)) throw DomainError("PauliLabel: bits set above qubit count");
}

PauliLabel PauliLabel::from_index(int n, std::uint64_t idx) {
  if (n < 1 || n > kMaxSymbolicQubits) throw DomainError("PauliLabel: unsupported qubit count " + std::to_string(n));
  return PauliLabel(n, idx >> n, idx & low_mask(n));
}

PauliLabel PauliLabel::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n < 1 || n > kMaxSymbolicQubits) {
    throw LabelParseError("Pauli string must have 1.." + std::to_string(kMaxSymbolicQubits) + " characters, got '" +
                          std::string(text) + "'");
  }
  BitVec x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const BitVec bit = BitVec{1} << (n - 1 - q);
    switch (std::toupper(static_cast<unsigned char>(text[q]))) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw LabelParseError("invalid Pauli character '" + std::string(1, text[q]) + "' in '" + std::string(text) +
                              "'");
    }
  }
  return PauliLabel(n, x, z);
}

std::string PauliLabel::to_string() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) {
    const BitVec bit = BitVec{1} << (n_ - 1 - q);
    const bool xb = x_ & bit, zb = z_ & bit;
    out[q] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

PauliProduct pauli_mul(const PauliLabel& a, const PauliLabel& b) {
  require_same(a, b, "pauli_mul");
  const BitVec cx = a.x() ^ b.x(), cz = a.z() ^ b.z();
  // P = i^{|x&z|} X^x Z^z; moving Z^{a.z} past X^{b.x} costs (-1)^{|a.z & b.x|}.
  const int theta =
      popcount(a.x() & a.z()) + popcount(b.x() & b.z()) + 2 * popcount(a.z() & b.x()) - popcount(cx & cz);
  return {PauliLabel(a.qubits(), cx, cz), PhaseExponent(theta)};
}

int symplectic_product(const PauliLabel& a, const PauliLabel& b) {
  require_same(a, b, "symplectic_product");
  return parity((a.x() & b.z()) ^ (a.z() & b.x()));
}

Matrix pauli_matrix(const PauliLabel& a) {
  require_dense(a.qubits());
  const std::size_t d = dim(a.qubits());
  const PhaseExponent base(popcount(a.x() & a.z()));
  Matrix m = Matrix::Zero(d, d);
  for (std::uint64_t b = 0; b < d; ++b) m(b ^ a.x(), b) = column_phase(base, a.z(), b);
  return m;
}

void apply_pauli(const PauliLabel& a, std::span<const cplx> in, std::span<cplx> out) {
  const std::size_t d = dim(a.qubits());
  if (in.size() != d || out.size() != d) throw DimensionError("apply_pauli: vector length does not match 2^n");
  const PhaseExponent base(popcount(a.x() & a.z()));
  for (std::uint64_t b = 0; b < d; ++b) out[b ^ a.x()] = column_phase(base, a.z(), b) * in[b];
}

cplx pauli_trace_against(const PauliLabel& a, const Matrix& op) {
  const std::size_t d = dim(a.qubits());
  if (static_cast<std::size_t>(op.rows()) != d || static_cast<std::size_t>(op.cols()) != d) {
    throw DimensionError("pauli_trace_against: operator dimension mismatch");
  }
  // P_a is Hermitian, so Tr[P_a^dagger op] = sum_c (P_a)_{c^x, c} op_{c, c^x}.
  const PhaseExponent base(popcount(a.x() & a.z()));
  cplx acc = 0.0;
  for (std::uint64_t c = 0; c < d; ++c) acc += column_phase(base, a.z(), c) * op(c, c ^ a.x());
  return acc;
}

}  // namespace seqpt

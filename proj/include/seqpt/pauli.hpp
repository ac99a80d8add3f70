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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "seqpt/linalg.hpp"

namespace seqpt {

using BitVec = std::uint64_t;

/// Exponent theta of a phase i^theta, always reduced into 0..3.
class PhaseExponent {
 public:
  constexpr PhaseExponent() = default;
  constexpr explicit PhaseExponent(int theta) : value_(static_cast<std::uint8_t>(((theta % 4) + 4) % 4)) {}

  constexpr int value() const { return value_; }
  cplx factor() const;

  constexpr PhaseExponent operator+(PhaseExponent o) const { return PhaseExponent(value_ + o.value_); }
  constexpr PhaseExponent operator-() const { return PhaseExponent(-value_); }
  friend constexpr bool operator==(PhaseExponent, PhaseExponent) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Phase-free n-qubit Pauli operator in symplectic form.
///
/// Bit (n-1-q) of x/z belongs to qubit q, so qubit 0 is the leftmost
/// character of the string form and the most significant bit of a
/// computational basis index. The matrix representative is the Hermitian
/// tensor product of I, X, Y, Z (a qubit with both bits set is Y).
class PauliLabel {
 public:
  PauliLabel() = default;
  PauliLabel(int n, BitVec x, BitVec z);

  static PauliLabel identity(int n) { return PauliLabel(n, 0, 0); }
  /// Inverse of index(); requires idx < 4^n.
  static PauliLabel from_index(int n, std::uint64_t idx);
  /// Case-insensitive string over {I,X,Y,Z}.
  static PauliLabel parse(std::string_view text);

  int qubits() const { return n_; }
  BitVec x() const { return x_; }
  BitVec z() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Dense index (x << n) | z into 0..4^n-1; the identity is index 0.
  std::uint64_t index() const { return (x_ << n_) | z_; }

  std::string to_string() const;

  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;

 private:
  int n_ = 0;
  BitVec x_ = 0;
  BitVec z_ = 0;
};

struct PauliProduct {
  PauliLabel label;
  PhaseExponent phase;
};

/// P_a * P_b = i^theta * P_c with c = a XOR b.
PauliProduct pauli_mul(const PauliLabel& a, const PauliLabel& b);

/// 0 if the operators commute, 1 if they anticommute.
int symplectic_product(const PauliLabel& a, const PauliLabel& b);

/// Dense D x D matrix of the Hermitian representative. Capped at kMaxDenseQubits.
Matrix pauli_matrix(const PauliLabel& a);

/// out = P_a * in without forming the matrix. in and out must not alias.
void apply_pauli(const PauliLabel& a, std::span<const cplx> in, std::span<cplx> out);

/// Tr[P_a^dagger * op] computed in O(D).
cplx pauli_trace_against(const PauliLabel& a, const Matrix& op);

inline int parity(std::uint64_t v) { return __builtin_parityll(v); }
inline int popcount(std::uint64_t v) { return __builtin_popcountll(v); }

}  // namespace seqpt

template <>
struct std::hash<seqpt::PauliLabel> {
  std::size_t operator()(const seqpt::PauliLabel& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.index() * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(p.qubits()));
  }
};

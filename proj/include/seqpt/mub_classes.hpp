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
#include <vector>

#include "seqpt/pauli.hpp"

namespace seqpt {

/// Bit pattern of (anti)commutation between a Pauli and the generators of
/// one MUB class: bit i is set iff the Pauli anticommutes with generator i.
struct CommutationVector {
  int n = 0;
  BitVec bits = 0;

  friend bool operator==(const CommutationVector&, const CommutationVector&) = default;
};

/// One of the D+1 maximal commuting classes of the n-qubit Pauli group.
///
/// Class 0 is generated by Z on each qubit. Class J >= 1 corresponds to the
/// field element a = J - 1 of GF(2^n); its generators are X_i Z^{S_a e_i}
/// where S_a[i][j] = Tr(a * x^i * x^j) is symmetric, so the generators
/// commute, and S_a - S_b = S_{a-b} is invertible, so distinct classes share
/// only the identity.
struct MubClass {
  int n = 0;
  std::uint64_t index = 0;
  std::vector<PauliLabel> generators;
};

/// D + 1.
std::uint64_t mub_class_count(int n);

/// The J-th class, built on demand in O(n^3) without touching the others.
MubClass mub_class(int n, std::uint64_t J);

/// All D+1 classes. Enumeration is limited to n <= kMaxEnumeratedClassQubits.
inline constexpr int kMaxEnumeratedClassQubits = 16;
std::vector<MubClass> mub_classes(int n);

/// Every element of the group generated by the class (D labels, identity first).
std::vector<PauliLabel> class_group(const MubClass& cls);

CommutationVector commutation_vector(const PauliLabel& a, const MubClass& cls);

/// The unique label whose commutation vectors against two distinct classes
/// are pa and pb, found by Gauss-Jordan elimination over GF(2) on the
/// 2n x 2n system formed by both generator sets.
PauliLabel solve_label_from_constraints(const MubClass& class_a, CommutationVector pa, const MubClass& class_b,
                                        CommutationVector pb);

}  // namespace seqpt

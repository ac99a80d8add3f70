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

#include "seqpt/mub_classes.hpp"

#include <string>

#include "seqpt/error.hpp"
#include "seqpt/gf2n.hpp"

namespace seqpt {

namespace {

void require_qubits(int n) {
  if (n < 1 || n > kMaxSymbolicQubits) throw DomainError("unsupported qubit count " + std::to_string(n));
}

// Qubit q carries bit (n-1-q); generator i acts on qubit i.
inline BitVec qubit_bit(int n, int q) { return BitVec{1} << (n - 1 - q); }

}  // namespace

std::uint64_t mub_class_count(int n) {
  require_qubits(n);
  return (std::uint64_t{1} << n) + 1;
}

MubClass mub_class(int n, std::uint64_t J) {
  const std::uint64_t count = mub_class_count(n);
  if (J >= count) throw DomainError("MUB class index " + std::to_string(J) + " out of range for n=" + std::to_string(n));

  MubClass cls{n, J, {}};
  cls.generators.reserve(static_cast<std::size_t>(n));
  if (J == 0) {
    for (int i = 0; i < n; ++i) cls.generators.emplace_back(n, 0, qubit_bit(n, i));
    return cls;
  }

  const GF2n field(n);
  const std::uint64_t a = J - 1;
  // S_a is a Hankel matrix: entry (i, j) depends on i + j only.
  std::vector<int> hankel(static_cast<std::size_t>(2 * n - 1));
  std::uint64_t power = 1;  // x^s
  const std::uint64_t x = n == 1 ? 1 : 2;
  for (int s = 0; s < 2 * n - 1; ++s) {
    hankel[static_cast<std::size_t>(s)] = field.trace(field.mul(a, power));
    power = field.mul(power, x);
  }
  for (int i = 0; i < n; ++i) {
    BitVec z = 0;
    for (int j = 0; j < n; ++j)
      if (hankel[static_cast<std::size_t>(i + j)]) z |= qubit_bit(n, j);
    cls.generators.emplace_back(n, qubit_bit(n, i), z);
  }
  return cls;
}

std::vector<MubClass> mub_classes(int n) {
  require_qubits(n);
  if (n > kMaxEnumeratedClassQubits) {
    throw DomainError("enumerating all MUB classes is limited to n <= " + std::to_string(kMaxEnumeratedClassQubits));
  }
  std::vector<MubClass> out;
  const std::uint64_t count = mub_class_count(n);
  out.reserve(count);
  for (std::uint64_t J = 0; J < count; ++J) out.push_back(mub_class(n, J));
  return out;
}

std::vector<PauliLabel> class_group(const MubClass& cls) {
  if (cls.n > kMaxEnumeratedClassQubits) throw DomainError("class_group: n too large to enumerate");
  const std::uint64_t d = std::uint64_t{1} << cls.n;
  std::vector<PauliLabel> out;
  out.reserve(d);
  for (std::uint64_t mask = 0; mask < d; ++mask) {
    BitVec x = 0, z = 0;
    for (int i = 0; i < cls.n; ++i) {
      if (mask >> i & 1) {
        x ^= cls.generators[static_cast<std::size_t>(i)].x();
        z ^= cls.generators[static_cast<std::size_t>(i)].z();
      }
    }
    out.emplace_back(cls.n, x, z);
  }
  return out;
}

CommutationVector commutation_vector(const PauliLabel& a, const MubClass& cls) {
  if (a.qubits() != cls.n) throw DimensionError("commutation_vector: label and class qubit counts differ");
  CommutationVector p{cls.n, 0};
  for (int i = 0; i < cls.n; ++i)
    p.bits |= static_cast<BitVec>(symplectic_product(a, cls.generators[static_cast<std::size_t>(i)])) << i;
  return p;
}

PauliLabel solve_label_from_constraints(const MubClass& class_a, CommutationVector pa, const MubClass& class_b,
                                        CommutationVector pb) {
  const int n = class_a.n;
  if (class_b.n != n || pa.n != n || pb.n != n) throw DimensionError("solve_label_from_constraints: qubit counts differ");
  if (class_a.index == class_b.index) throw DomainError("solve_label_from_constraints: classes must be distinct");

  // Unknown u = x | (z << n). <l, g> = l.x . g.z + l.z . g.x, so the row
  // for generator g is g.z | (g.x << n).
  const int rows = 2 * n;
  std::vector<std::uint64_t> eq(static_cast<std::size_t>(rows));
  std::vector<int> rhs(static_cast<std::size_t>(rows));
  for (int i = 0; i < n; ++i) {
    const auto& ga = class_a.generators[static_cast<std::size_t>(i)];
    const auto& gb = class_b.generators[static_cast<std::size_t>(i)];
    eq[static_cast<std::size_t>(i)] = ga.z() | (ga.x() << n);
    rhs[static_cast<std::size_t>(i)] = static_cast<int>(pa.bits >> i & 1);
    eq[static_cast<std::size_t>(n + i)] = gb.z() | (gb.x() << n);
    rhs[static_cast<std::size_t>(n + i)] = static_cast<int>(pb.bits >> i & 1);
  }

  for (int col = 0; col < rows; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    int pivot = -1;
    for (int r = col; r < rows; ++r) {
      if (eq[static_cast<std::size_t>(r)] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InternalError("solve_label_from_constraints: singular system for distinct MUB classes");
    std::swap(eq[static_cast<std::size_t>(pivot)], eq[static_cast<std::size_t>(col)]);
    std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
    for (int r = 0; r < rows; ++r) {
      if (r != col && (eq[static_cast<std::size_t>(r)] & bit)) {
        eq[static_cast<std::size_t>(r)] ^= eq[static_cast<std::size_t>(col)];
        rhs[static_cast<std::size_t>(r)] ^= rhs[static_cast<std::size_t>(col)];
      }
    }
  }

  std::uint64_t u = 0;
  for (int col = 0; col < rows; ++col) u |= static_cast<std::uint64_t>(rhs[static_cast<std::size_t>(col)]) << col;
  const BitVec mask = n == 32 ? 0xFFFFFFFFull : (BitVec{1} << n) - 1;
  return PauliLabel(n, u & mask, (u >> n) & mask);
}

}  // namespace seqpt

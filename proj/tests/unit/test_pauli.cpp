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

#include <set>

#include "doctest.h"
#include "reference.hpp"
#include "seqpt/error.hpp"
#include "seqpt/pauli.hpp"
#include "seqpt/rng.hpp"

using namespace seqpt;
using seqpt::testing::reference_pauli;

namespace {

PauliLabel P(const char* s) { return PauliLabel::parse(s); }

}  // namespace

TEST_CASE("labels parse case-insensitively and print uppercase") {
  const PauliLabel p = P("xIyZ");
  CHECK(p.to_string() == "XIYZ");
  CHECK(p.qubits() == 4);
  CHECK(P("III").is_identity());
  CHECK(P("III").index() == 0);
  CHECK_THROWS_AS(P("XQ"), LabelParseError);
  CHECK_THROWS_AS(PauliLabel::parse(""), LabelParseError);
}

TEST_CASE("there are 4^n distinct labels and index() is a bijection") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * n)); ++i) {
      const PauliLabel p = PauliLabel::from_index(n, i);
      CHECK(p.index() == i);
      seen.insert(p.to_string());
    }
    CHECK(seen.size() == (std::size_t{1} << (2 * n)));
  }
}

TEST_CASE("pauli_mul examples") {
  const auto id = pauli_mul(P("I"), P("Z"));
  CHECK(id.label == P("Z"));
  CHECK(id.phase.value() == 0);

  const auto xz = pauli_mul(P("X"), P("Z"));
  CHECK(xz.label == P("Y"));
  CHECK(xz.phase.value() == 3);

  // Frozen from reference_pauli("XZ") * reference_pauli("ZZ") = -i * reference_pauli("YI").
  const auto two = pauli_mul(P("XZ"), P("ZZ"));
  CHECK(two.label == P("YI"));
  CHECK(two.phase.value() == 3);
  const Matrix prod = reference_pauli("XZ") * reference_pauli("ZZ");
  CHECK(max_abs_diff(prod, cplx(0, -1) * reference_pauli("YI")) < 1e-14);

  CHECK_THROWS_AS(pauli_mul(P("X"), P("XX")), DimensionError);
}

TEST_CASE("symplectic_product examples") {
  CHECK(symplectic_product(P("X"), P("X")) == 0);
  CHECK(symplectic_product(P("X"), P("Z")) == 1);
  CHECK(symplectic_product(P("XZ"), P("ZX")) == 0);
  const Matrix a = reference_pauli("XZ"), b = reference_pauli("ZX");
  CHECK(max_abs_diff(a * b, b * a) < 1e-14);
  CHECK_THROWS_AS(symplectic_product(P("X"), P("XI")), DimensionError);
}

TEST_CASE("pauli_matrix matches literal tensor products") {
  CHECK(max_abs_diff(pauli_matrix(P("I")), Matrix::Identity(2, 2)) == 0.0);
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  CHECK(max_abs_diff(pauli_matrix(P("Z")), z) == 0.0);
  for (std::uint64_t i = 0; i < 64; ++i) {
    const PauliLabel p = PauliLabel::from_index(3, i);
    CHECK(max_abs_diff(pauli_matrix(p), reference_pauli(p.to_string())) < 1e-15);
  }
  CHECK_THROWS_AS(pauli_matrix(PauliLabel::identity(7)), DenseCapError);
}

TEST_CASE("pauli matrices are orthogonal under the trace inner product") {
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const cplx tr = (pauli_matrix(PauliLabel::from_index(2, a)) * pauli_matrix(PauliLabel::from_index(2, b)).adjoint()).trace();
      CHECK(std::abs(tr - (a == b ? cplx(4.0) : cplx(0.0))) < 1e-14);
    }
  }
}

TEST_CASE("pauli_mul phases agree with matrix products for all pairs at n <= 2") {
  for (int n = 1; n <= 2; ++n) {
    const std::uint64_t labels = std::uint64_t{1} << (2 * n);
    for (std::uint64_t a = 0; a < labels; ++a) {
      for (std::uint64_t b = 0; b < labels; ++b) {
        const PauliLabel pa = PauliLabel::from_index(n, a), pb = PauliLabel::from_index(n, b);
        const PauliProduct prod = pauli_mul(pa, pb);
        CHECK(prod.label.x() == (pa.x() ^ pb.x()));
        CHECK(prod.label.z() == (pa.z() ^ pb.z()));
        const Matrix lhs = reference_pauli(pa.to_string()) * reference_pauli(pb.to_string());
        const Matrix rhs = prod.phase.factor() * reference_pauli(prod.label.to_string());
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
        // Commutation from the symplectic form matches the matrices.
        const Matrix rev = reference_pauli(pb.to_string()) * reference_pauli(pa.to_string());
        const double sign = symplectic_product(pa, pb) ? -1.0 : 1.0;
        CHECK(max_abs_diff(lhs, sign * rev) <= 1e-12);
      }
    }
  }
}

TEST_CASE("product is associative including phases") {
  CounterRng rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const std::uint64_t labels = std::uint64_t{1} << (2 * n);
    const PauliLabel a = PauliLabel::from_index(n, rng.below(labels));
    const PauliLabel b = PauliLabel::from_index(n, rng.below(labels));
    const PauliLabel c = PauliLabel::from_index(n, rng.below(labels));
    const auto ab = pauli_mul(a, b);
    const auto ab_c = pauli_mul(ab.label, c);
    const auto bc = pauli_mul(b, c);
    const auto a_bc = pauli_mul(a, bc.label);
    CHECK(ab_c.label == a_bc.label);
    CHECK((ab.phase + ab_c.phase) == (bc.phase + a_bc.phase));
    const Matrix direct = pauli_matrix(a) * pauli_matrix(b) * pauli_matrix(c);
    CHECK(max_abs_diff(direct, (ab.phase + ab_c.phase).factor() * pauli_matrix(ab_c.label)) < 1e-12);
  }
}

TEST_CASE("apply_pauli and pauli_trace_against agree with dense matrices") {
  CounterRng rng(5, 0);
  for (std::uint64_t i = 0; i < 64; ++i) {
    const PauliLabel p = PauliLabel::from_index(3, i);
    Vector v(8), out(8);
    Matrix op(8, 8);
    for (int r = 0; r < 8; ++r) {
      v(r) = cplx(rng.normal(), rng.normal());
      for (int c = 0; c < 8; ++c) op(r, c) = cplx(rng.normal(), rng.normal());
    }
    apply_pauli(p, {v.data(), 8}, {out.data(), 8});
    CHECK((out - pauli_matrix(p) * v).norm() < 1e-12);
    CHECK(std::abs(pauli_trace_against(p, op) - (pauli_matrix(p).adjoint() * op).trace()) < 1e-12);
  }
}

TEST_CASE("symbolic layer reaches 32 qubits") {
  const std::string s(32, 'Y');
  const PauliLabel p = PauliLabel::parse(s);
  CHECK(p.to_string() == s);
  CHECK(pauli_mul(p, p).label.is_identity());
  CHECK(pauli_mul(p, p).phase.value() == 0);
  CHECK_THROWS_AS(PauliLabel::parse(std::string(33, 'X')), LabelParseError);
}

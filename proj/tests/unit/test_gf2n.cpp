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

#include "doctest.h"
#include "seqpt/error.hpp"
#include "seqpt/gf2n.hpp"
#include "seqpt/rng.hpp"

using namespace seqpt;

namespace {

// Independent GF(2)[x] arithmetic for the irreducibility check.
int degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = degree(f);
  while (degree(a) >= df) a ^= f << (degree(a) - df);
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t acc = 0;
  a = poly_mod(a, f);
  for (int i = degree(b); i >= 0; --i) {
    acc = poly_mod(acc << 1, f);
    if (b >> i & 1) acc ^= a;
  }
  return poly_mod(acc, f);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod f by repeated squaring.
std::uint64_t frobenius(int k, std::uint64_t f) {
  std::uint64_t r = poly_mod(2, f);
  for (int i = 0; i < k; ++i) r = poly_mulmod(r, r, f);
  return r;
}

bool rabin_irreducible(std::uint64_t f) {
  const int n = degree(f);
  if (frobenius(n, f) != poly_mod(2, f)) return false;
  for (int q = 2; q <= n; ++q) {
    bool prime = true;
    for (int d = 2; d * d <= q; ++d) prime = prime && q % d != 0;
    if (!prime || n % q != 0) continue;
    if (poly_gcd(f, frobenius(n / q, f) ^ poly_mod(2, f)) != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("every shipped modulus is irreducible of the right degree") {
  for (int n = 1; n <= 32; ++n) {
    const std::uint64_t f = GF2n::modulus_for(n);
    CHECK(degree(f) == n);
    CHECK(rabin_irreducible(f));
  }
  CHECK_THROWS_AS(GF2n::modulus_for(0), DomainError);
  CHECK_THROWS_AS(GF2n::modulus_for(33), DomainError);
}

TEST_CASE("field multiplication matches polynomial arithmetic and has inverses") {
  CounterRng rng(3, 0);
  for (int n : {1, 2, 3, 5, 8, 13, 32}) {
    const GF2n f(n);
    const std::uint64_t size = std::uint64_t{1} << n;
    for (int t = 0; t < 50; ++t) {
      const std::uint64_t a = rng.below(size), b = rng.below(size), c = rng.below(size);
      CHECK(f.mul(a, b) == poly_mulmod(a, b, f.modulus()));
      CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
      CHECK(f.trace(a ^ b) == (f.trace(a) ^ f.trace(b)));
      CHECK(f.trace(f.square(a)) == f.trace(a));
    }
  }
}

TEST_CASE("trace is onto GF(2) and balanced for small fields") {
  for (int n = 1; n <= 10; ++n) {
    const GF2n f(n);
    std::uint64_t ones = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      // Direct definition: sum of the Galois conjugates.
      std::uint64_t acc = 0, p = a;
      for (int j = 0; j < n; ++j) {
        acc ^= p;
        p = f.square(p);
      }
      CHECK(acc == static_cast<std::uint64_t>(f.trace(a)));
      ones += acc;
    }
    CHECK(ones == (std::uint64_t{1} << (n - 1)));
  }
}

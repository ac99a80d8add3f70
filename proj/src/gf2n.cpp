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

#include "seqpt/gf2n.hpp"

#include <array>
#include <string>

#include "seqpt/error.hpp"

namespace seqpt {

namespace {

// Low-weight primitive polynomials, one per degree; entry d-1 is for GF(2^d).
constexpr std::array<std::uint64_t, 32> kModuli = {
    0x3ull,                                                         // x + 1
    (1ull << 2) | 0x3,                                              // x^2 + x + 1
    (1ull << 3) | 0x3,                                              // x^3 + x + 1
    (1ull << 4) | 0x3,                                              // x^4 + x + 1
    (1ull << 5) | (1ull << 2) | 1,                                  // x^5 + x^2 + 1
    (1ull << 6) | 0x3,                                              // x^6 + x + 1
    (1ull << 7) | 0x3,                                              // x^7 + x + 1
    (1ull << 8) | (1ull << 4) | (1ull << 3) | (1ull << 2) | 1,      // x^8 + x^4 + x^3 + x^2 + 1
    (1ull << 9) | (1ull << 4) | 1,                                  // x^9 + x^4 + 1
    (1ull << 10) | (1ull << 3) | 1,                                 // x^10 + x^3 + 1
    (1ull << 11) | (1ull << 2) | 1,                                 // x^11 + x^2 + 1
    (1ull << 12) | (1ull << 6) | (1ull << 4) | 0x3,                 // x^12 + x^6 + x^4 + x + 1
    (1ull << 13) | (1ull << 4) | (1ull << 3) | 0x3,                 // x^13 + x^4 + x^3 + x + 1
    (1ull << 14) | (1ull << 10) | (1ull << 6) | 0x3,                // x^14 + x^10 + x^6 + x + 1
    (1ull << 15) | 0x3,                                             // x^15 + x + 1
    (1ull << 16) | (1ull << 12) | (1ull << 3) | 0x3,                // x^16 + x^12 + x^3 + x + 1
    (1ull << 17) | (1ull << 3) | 1,                                 // x^17 + x^3 + 1
    (1ull << 18) | (1ull << 7) | 1,                                 // x^18 + x^7 + 1
    (1ull << 19) | (1ull << 5) | (1ull << 2) | 0x3,                 // x^19 + x^5 + x^2 + x + 1
    (1ull << 20) | (1ull << 3) | 1,                                 // x^20 + x^3 + 1
    (1ull << 21) | (1ull << 2) | 1,                                 // x^21 + x^2 + 1
    (1ull << 22) | 0x3,                                             // x^22 + x + 1
    (1ull << 23) | (1ull << 5) | 1,                                 // x^23 + x^5 + 1
    (1ull << 24) | (1ull << 7) | (1ull << 2) | 0x3,                 // x^24 + x^7 + x^2 + x + 1
    (1ull << 25) | (1ull << 3) | 1,                                 // x^25 + x^3 + 1
    (1ull << 26) | (1ull << 6) | (1ull << 2) | 0x3,                 // x^26 + x^6 + x^2 + x + 1
    (1ull << 27) | (1ull << 5) | (1ull << 2) | 0x3,                 // x^27 + x^5 + x^2 + x + 1
    (1ull << 28) | (1ull << 3) | 1,                                 // x^28 + x^3 + 1
    (1ull << 29) | (1ull << 2) | 1,                                 // x^29 + x^2 + 1
    (1ull << 30) | (1ull << 23) | (1ull << 2) | 0x3,                // x^30 + x^23 + x^2 + x + 1
    (1ull << 31) | (1ull << 3) | 1,                                 // x^31 + x^3 + 1
    (1ull << 32) | (1ull << 22) | (1ull << 2) | 0x3,                // x^32 + x^22 + x^2 + x + 1
};

}  // namespace

std::uint64_t GF2n::modulus_for(int n) {
  if (n < 1 || n > static_cast<int>(kModuli.size())) throw DomainError("GF(2^n): unsupported degree " + std::to_string(n));
  return kModuli[static_cast<std::size_t>(n - 1)];
}

GF2n::GF2n(int n) : n_(n), modulus_(modulus_for(n)) {
  for (int k = 0; k < n_; ++k) {
    std::uint64_t acc = 0, power = std::uint64_t{1} << k;
    for (int j = 0; j < n_; ++j) {
      acc ^= power;
      power = square(power);
    }
    // acc is in the prime subfield, i.e. 0 or 1.
    if (acc > 1) throw InternalError("GF(2^n): trace left the prime field; modulus not irreducible");
    trace_mask_ |= acc << k;
  }
}

std::uint64_t GF2n::mul(std::uint64_t a, std::uint64_t b) const {
  // Shift-and-add with interleaved reduction; operands stay below 2^n.
  const std::uint64_t top = std::uint64_t{1} << n_;
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return acc;
}

int GF2n::trace(std::uint64_t a) const { return __builtin_parityll(a & trace_mask_); }

}  // namespace seqpt

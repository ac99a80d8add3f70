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

namespace seqpt {

/// Arithmetic in GF(2^n), 1 <= n <= 32, in the polynomial basis
/// {1, x, ..., x^{n-1}} modulo a fixed irreducible polynomial.
class GF2n {
 public:
  explicit GF2n(int n);

  /// Irreducible modulus for GF(2^n), including the leading x^n term.
  static std::uint64_t modulus_for(int n);

  int degree() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t square(std::uint64_t a) const { return mul(a, a); }

  /// Absolute trace a + a^2 + a^4 + ... + a^{2^{n-1}}, which lies in GF(2).
  int trace(std::uint64_t a) const;

 private:
  int n_;
  std::uint64_t modulus_;
  std::uint64_t trace_mask_ = 0;  // bit k = Tr(x^k)
};

}  // namespace seqpt

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

#include <cstddef>
#include <span>
#include <string_view>

#include "seqpt/linalg.hpp"

// Complex inner-loop kernels. Every kernel has a portable scalar reference
// in seqpt::kernels::scalar and, on x86-64, an AVX2+FMA variant in
// seqpt::kernels::avx2. The unqualified entry points dispatch to the best
// level the CPU supports; SEQPT_SIMD=scalar in the environment or
// set_simd_level() forces the reference path.

namespace seqpt::kernels {

enum class SimdLevel { scalar, avx2 };

std::string_view to_string(SimdLevel level);

/// Levels compiled in and supported by the running CPU.
bool level_supported(SimdLevel level);

SimdLevel simd_level();

/// Throws DomainError if the level is not supported.
void set_simd_level(SimdLevel level);

/// sum_i conj(a_i) * b_i
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);

/// y = A * x with A column-major, rows x cols, leading dimension rows.
void gemv(const cplx* a, std::size_t rows, std::size_t cols, std::span<const cplx> x, std::span<cplx> y);

/// sum_i |a_i|^2
double norm2(std::span<const cplx> a);

namespace scalar {
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
void gemv(const cplx* a, std::size_t rows, std::size_t cols, std::span<const cplx> x, std::span<cplx> y);
double norm2(std::span<const cplx> a);
}  // namespace scalar

#if defined(SEQPT_HAVE_AVX2)
namespace avx2 {
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
void gemv(const cplx* a, std::size_t rows, std::size_t cols, std::span<const cplx> x, std::span<cplx> y);
double norm2(std::span<const cplx> a);
}  // namespace avx2
#endif

/// Convenience wrappers over Eigen storage.
inline cplx dotc(const Vector& a, const Vector& b) {
  return dotc(std::span<const cplx>(a.data(), static_cast<std::size_t>(a.size())),
              std::span<const cplx>(b.data(), static_cast<std::size_t>(b.size())));
}

inline void gemv(const Matrix& a, const Vector& x, Vector& y) {
  y.resize(a.rows());
  gemv(a.data(), static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()),
       std::span<const cplx>(x.data(), static_cast<std::size_t>(x.size())),
       std::span<cplx>(y.data(), static_cast<std::size_t>(y.size())));
}

}  // namespace seqpt::kernels

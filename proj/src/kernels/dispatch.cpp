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

#include <atomic>
#include <cstdlib>
#include <string>

#include "seqpt/error.hpp"
#include "seqpt/kernels.hpp"

namespace seqpt::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(SEQPT_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

SimdLevel initial_level() {
  if (const char* env = std::getenv("SEQPT_SIMD"); env != nullptr && std::string(env) == "scalar") {
    return SimdLevel::scalar;
  }
  return cpu_has_avx2() ? SimdLevel::avx2 : SimdLevel::scalar;
}

std::atomic<SimdLevel>& level_ref() {
  static std::atomic<SimdLevel> level{initial_level()};
  return level;
}

}  // namespace

std::string_view to_string(SimdLevel level) { return level == SimdLevel::avx2 ? "avx2" : "scalar"; }

bool level_supported(SimdLevel level) { return level == SimdLevel::scalar || cpu_has_avx2(); }

SimdLevel simd_level() { return level_ref().load(std::memory_order_relaxed); }

void set_simd_level(SimdLevel level) {
  if (!level_supported(level)) throw DomainError("SIMD level " + std::string(to_string(level)) + " not supported here");
  level_ref().store(level, std::memory_order_relaxed);
}

#if defined(SEQPT_HAVE_AVX2)
#define SEQPT_DISPATCH(fn, ...) \
  return simd_level() == SimdLevel::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define SEQPT_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) { SEQPT_DISPATCH(dotc, a, b); }

void gemv(const cplx* a, std::size_t rows, std::size_t cols, std::span<const cplx> x, std::span<cplx> y) {
  SEQPT_DISPATCH(gemv, a, rows, cols, x, y);
}

double norm2(std::span<const cplx> a) { SEQPT_DISPATCH(norm2, a); }

#undef SEQPT_DISPATCH

}  // namespace seqpt::kernels

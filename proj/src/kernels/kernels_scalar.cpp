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

#include "seqpt/error.hpp"
#include "seqpt/kernels.hpp"

namespace seqpt::kernels::scalar {

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("dotc: length mismatch");
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ar = a[i].real(), ai = a[i].imag(), br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

void gemv(const cplx* a, std::size_t rows, std::size_t cols, std::span<const cplx> x, std::span<cplx> y) {
  if (x.size() != cols || y.size() != rows) throw DimensionError("gemv: shape mismatch");
  for (std::size_t r = 0; r < rows; ++r) y[r] = 0.0;
  for (std::size_t c = 0; c < cols; ++c) {
    const double xr = x[c].real(), xi = x[c].imag();
    const cplx* col = a + c * rows;
    for (std::size_t r = 0; r < rows; ++r) {
      const double cr = col[r].real(), ci = col[r].imag();
      y[r] = cplx(y[r].real() + xr * cr - xi * ci, y[r].imag() + xr * ci + xi * cr);
    }
  }
}

double norm2(std::span<const cplx> a) {
  double acc = 0.0;
  for (const cplx& v : a) acc += v.real() * v.real() + v.imag() * v.imag();
  return acc;
}

}  // namespace seqpt::kernels::scalar

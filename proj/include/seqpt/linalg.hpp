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

#include <complex>

#include <Eigen/Dense>

namespace seqpt {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Qubit cap for anything that materializes D x D matrices.
inline constexpr int kMaxDenseQubits = 6;

/// Qubit cap for the bit-packed symbolic layer.
inline constexpr int kMaxSymbolicQubits = 32;

void require_dense(int n, int cap = kMaxDenseQubits);

inline std::size_t dim(int n) { return std::size_t{1} << n; }

/// Max-norm of (a - b).
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Kronecker product a (x) b, with a acting on the most significant qubits.
Matrix kron(const Matrix& a, const Matrix& b);

/// Q factor of a Gaussian random matrix with the R-diagonal phases removed;
/// Haar-distributed for a Gaussian input.
Matrix haar_unitary_from_gaussian(const Matrix& gaussian);

}  // namespace seqpt

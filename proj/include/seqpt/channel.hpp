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

#include <vector>

#include "seqpt/linalg.hpp"
#include "seqpt/pauli.hpp"

namespace seqpt {

inline constexpr double kDefaultTolerance = 1e-9;

/// D x D density matrix. Construction does not validate; call validate().
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(int n, Matrix rho);

  static DensityMatrix pure(int n, const Vector& psi);

  int qubits() const { return n_; }
  const Matrix& matrix() const { return rho_; }

  /// Throws InvalidChannelError unless Hermitian, unit trace and PSD within tol.
  void validate(double tol = kDefaultTolerance) const;

 private:
  int n_ = 0;
  Matrix rho_;
};

/// Operator-sum form rho -> sum_k A_k rho A_k^dagger.
class KrausSet {
 public:
  KrausSet() = default;
  KrausSet(int n, std::vector<Matrix> ops);

  int qubits() const { return n_; }
  const std::vector<Matrix>& operators() const { return ops_; }

  /// Max-norm of sum_k A_k^dagger A_k - I.
  double completeness_deviation() const;

 private:
  int n_ = 0;
  std::vector<Matrix> ops_;
};

/// Chi matrix over the Pauli base, rows/cols indexed by PauliLabel::index().
class ChiMatrix {
 public:
  ChiMatrix() = default;
  ChiMatrix(int n, Matrix entries);

  int qubits() const { return n_; }
  const Matrix& entries() const { return entries_; }

  cplx operator()(const PauliLabel& m, const PauliLabel& n) const;

 private:
  int n_ = 0;
  Matrix entries_;
};

struct ChiValidationReport {
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  double trace_condition_deviation = 0.0;  // max |sum chi_mn E_n^dag E_m - I|
  double tolerance = kDefaultTolerance;
  bool passed = false;
};

ChiValidationReport validate_chi(const ChiMatrix& chi, double tol = kDefaultTolerance);

/// Throws InvalidChannelError if sum A^dag A deviates from I beyond tol.
void validate_kraus(const KrausSet& k, double tol = kDefaultTolerance);

DensityMatrix apply_channel(const KrausSet& channel, const DensityMatrix& rho);
DensityMatrix apply_channel(const ChiMatrix& channel, const DensityMatrix& rho);

/// A_k = sum_m c_km E_m with c_km = Tr[E_m^dag A_k] / D; chi_mn = sum_k c_km conj(c_kn).
ChiMatrix kraus_to_chi(const KrausSet& k);

/// Eigendecomposition of chi; eigenvalues below 1e-12 * max are dropped.
/// Throws InvalidChannelError if chi has an eigenvalue below -tol.
KrausSet chi_to_kraus(const ChiMatrix& chi, double tol = kDefaultTolerance);

/// rho -> E_m^dag E(rho) E_m.
KrausSet modified_channel_diag(const KrausSet& channel, const PauliLabel& m);
ChiMatrix modified_channel_diag(const ChiMatrix& channel, const PauliLabel& m);

/// The (n+1)-qubit map: Hadamard on the ancilla (qubit 0, most significant),
/// E_m^dag controlled on ancilla = 1, E_n^dag controlled on ancilla = 0, then
/// the channel on the main register.
KrausSet modified_channel_offdiag(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label);

/// Sequential composition, first applied first.
KrausSet compose(const KrausSet& first, const KrausSet& second);

}  // namespace seqpt

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
#include <map>
#include <string>

#include "seqpt/channel.hpp"
#include "seqpt/channel_spec.hpp"
#include "seqpt/rng.hpp"

// Brute-force ground truth. Everything here works on dense matrices and
// full enumeration of the design; nothing samples and nothing shares the
// estimators' kernel path.

namespace seqpt::oracle {

inline constexpr int kDefaultQubitCap = 4;
inline constexpr int kMaxQubitCap = 5;

/// Throws DenseCapError above the cap (4, or 5 with allow_large; the
/// latter logs a memory warning).
void require_oracle(int n, bool allow_large = false);

/// chi_mn = sum_k (Tr[E_m^dag A_k]/D) conj(Tr[E_n^dag A_k]/D), with the
/// traces taken against explicit Pauli matrices.
ChiMatrix exact_chi(const KrausSet& channel, bool allow_large = false);

/// Design average of <psi|E(|psi><psi|)|psi>.
double exact_average_fidelity(const KrausSet& channel);

/// Design average of <psi|E(E_m^dag P_psi E_n)|psi>.
cplx exact_offdiag_average(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label);

struct AncillaAverages {
  double sigma_x = 0.0;
  double sigma_y = 0.0;
};

/// Design averages of Tr[E_mn(|0><0| (x) P_psi) (sigma (x) P_psi)] for
/// sigma_x and sigma_y, through the full (n+1)-qubit density matrix.
AncillaAverages exact_ancilla_polarization(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label);

/// (Tr op1 Tr op2 + Tr(op1 op2)) / (D (D+1)).
cplx haar_closed_form(const Matrix& op1, const Matrix& op2);

/// Max over (m, n) of |sum_{m'n'} chi_{m'n'} Tr[E_m' E_m^dag E_n E_n'^dag] - D delta_mn|.
double trace_identity_residual(const ChiMatrix& chi);

struct OracleReport {
  ChiMatrix chi;
  std::map<std::string, double> residuals;
};

/// Exact chi plus the residuals of every averaging identity for the
/// channel: Haar/design agreement, fidelity relations for all m, the
/// off-diagonal integral and ancilla readout for all (m, n), and the
/// trace identity (n <= 2 only; it is quartic in D^2).
OracleReport oracle_report(const KrausSet& channel);

/// Gaussian random D x D operator.
Matrix random_operator(int n, CounterRng& rng);

/// Haar-random unitary.
Matrix random_unitary(int n, CounterRng& rng);

/// Even mixture of a random unitary and a random diagonal Pauli channel,
/// as a serializable Kraus spec.
Channel random_channel(int n, std::uint64_t seed);

/// Random label over all 4^n Paulis.
PauliLabel random_label(int n, CounterRng& rng);

}  // namespace seqpt::oracle

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

#include "seqpt/oracle.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>

#include "seqpt/error.hpp"
#include "seqpt/mub_states.hpp"

namespace seqpt::oracle {

namespace {

std::uint64_t label_count(int n) { return dim(n) * dim(n); }

}  // namespace

void require_oracle(int n, bool allow_large) {
  require_dense(n, allow_large ? kMaxQubitCap : kDefaultQubitCap);
  if (n == kMaxQubitCap) spdlog::warn("oracle at n={}: chi has {}^2 entries", n, label_count(n));
}

ChiMatrix exact_chi(const KrausSet& channel, bool allow_large) {
  const int n = channel.qubits();
  require_oracle(n, allow_large);
  const std::uint64_t labels = label_count(n);
  const double d = static_cast<double>(dim(n));
  std::vector<Matrix> paulis;
  paulis.reserve(labels);
  for (std::uint64_t i = 0; i < labels; ++i) paulis.push_back(pauli_matrix(PauliLabel::from_index(n, i)));

  Matrix chi = Matrix::Zero(static_cast<Eigen::Index>(labels), static_cast<Eigen::Index>(labels));
  Vector c(static_cast<Eigen::Index>(labels));
  for (const auto& a : channel.operators()) {
    for (std::uint64_t i = 0; i < labels; ++i) c(static_cast<Eigen::Index>(i)) = (paulis[i].adjoint() * a).trace() / d;
    chi.noalias() += c * c.adjoint();
  }
  return ChiMatrix(n, std::move(chi));
}

double exact_average_fidelity(const KrausSet& channel) {
  const int n = channel.qubits();
  require_oracle(n);
  const MubDesign& design = design_for(n);
  double acc = 0.0;
  for (std::uint64_t s = 0; s < design.state_count(); ++s) {
    const Vector psi = design.state(design.id_at(s));
    const DensityMatrix out = apply_channel(channel, DensityMatrix::pure(n, psi));
    acc += (psi.adjoint() * out.matrix() * psi)(0, 0).real();
  }
  return acc / static_cast<double>(design.state_count());
}

cplx exact_offdiag_average(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label) {
  const int n = channel.qubits();
  require_oracle(n);
  if (m.qubits() != n || n_label.qubits() != n) throw DimensionError("exact_offdiag_average: label qubit count mismatch");
  const MubDesign& design = design_for(n);
  const Matrix em = pauli_matrix(m), en = pauli_matrix(n_label);
  cplx acc = 0.0;
  for (std::uint64_t s = 0; s < design.state_count(); ++s) {
    const Vector psi = design.state(design.id_at(s));
    Matrix input = em.adjoint() * (psi * psi.adjoint()) * en;
    Matrix out = Matrix::Zero(input.rows(), input.cols());
    for (const auto& a : channel.operators()) out.noalias() += a * input * a.adjoint();
    acc += (psi.adjoint() * out * psi)(0, 0);
  }
  return acc / static_cast<double>(design.state_count());
}

AncillaAverages exact_ancilla_polarization(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label) {
  const int n = channel.qubits();
  require_oracle(n);
  const MubDesign& design = design_for(n);
  const KrausSet modified = modified_channel_offdiag(channel, m, n_label);
  Matrix zero = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  Matrix sx = Matrix::Zero(2, 2), sy = Matrix::Zero(2, 2);
  sx(0, 1) = sx(1, 0) = 1.0;
  sy(0, 1) = cplx(0.0, -1.0);
  sy(1, 0) = cplx(0.0, 1.0);

  AncillaAverages acc;
  for (std::uint64_t s = 0; s < design.state_count(); ++s) {
    const Vector psi = design.state(design.id_at(s));
    const Matrix proj = psi * psi.adjoint();
    const DensityMatrix out = apply_channel(modified, DensityMatrix(n + 1, kron(zero, proj)));
    acc.sigma_x += (out.matrix() * kron(sx, proj)).trace().real();
    acc.sigma_y += (out.matrix() * kron(sy, proj)).trace().real();
  }
  const double count = static_cast<double>(design.state_count());
  acc.sigma_x /= count;
  acc.sigma_y /= count;
  return acc;
}

cplx haar_closed_form(const Matrix& op1, const Matrix& op2) {
  if (op1.rows() != op1.cols() || op2.rows() != op2.cols() || op1.rows() != op2.rows()) {
    throw DimensionError("haar_closed_form: operators must be square and of equal size");
  }
  const double d = static_cast<double>(op1.rows());
  return (op1.trace() * op2.trace() + (op1 * op2).trace()) / (d * (d + 1.0));
}

double trace_identity_residual(const ChiMatrix& chi) {
  const int n = chi.qubits();
  require_oracle(n);
  const std::uint64_t labels = label_count(n);
  const double d = static_cast<double>(dim(n));
  std::vector<Matrix> paulis;
  for (std::uint64_t i = 0; i < labels; ++i) paulis.push_back(pauli_matrix(PauliLabel::from_index(n, i)));

  // sum_{m'n'} chi_{m'n'} E_n'^dag E_m', then Tr[E_m^dag E_n (that)].
  Matrix weighted = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t a = 0; a < labels; ++a)
    for (std::uint64_t b = 0; b < labels; ++b)
      weighted += chi.entries()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * paulis[b].adjoint() * paulis[a];

  double worst = 0.0;
  for (std::uint64_t mi = 0; mi < labels; ++mi) {
    for (std::uint64_t ni = 0; ni < labels; ++ni) {
      // Tr[E_m' E_m^dag E_n E_n'^dag] = Tr[E_m^dag E_n E_n'^dag E_m'] by cyclicity.
      const cplx lhs = (paulis[mi].adjoint() * paulis[ni] * weighted).trace();
      const cplx rhs = mi == ni ? cplx(d) : cplx(0.0);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

OracleReport oracle_report(const KrausSet& channel) {
  const int n = channel.qubits();
  require_oracle(n);
  OracleReport rep{exact_chi(channel), {}};
  const double d = static_cast<double>(dim(n));
  const std::uint64_t labels = label_count(n);

  double fidelity = 0.0, offdiag = 0.0, ancilla = 0.0;
  for (std::uint64_t mi = 0; mi < labels; ++mi) {
    const PauliLabel m = PauliLabel::from_index(n, mi);
    const double expected = (d * rep.chi(m, m).real() + 1.0) / (d + 1.0);
    fidelity = std::max(fidelity, std::abs(exact_average_fidelity(modified_channel_diag(channel, m)) - expected));
    if (n > 2) continue;
    for (std::uint64_t ni = 0; ni < labels; ++ni) {
      const PauliLabel nl = PauliLabel::from_index(n, ni);
      const double delta = mi == ni ? 1.0 : 0.0;
      const cplx rhs = (d * rep.chi(m, nl) + delta) / (d + 1.0);
      offdiag = std::max(offdiag, std::abs(exact_offdiag_average(channel, m, nl) - rhs));
      const AncillaAverages anc = exact_ancilla_polarization(channel, m, nl);
      ancilla = std::max(ancilla, std::abs(anc.sigma_x - rhs.real()));
      ancilla = std::max(ancilla, std::abs(anc.sigma_y - d * rep.chi(m, nl).imag() / (d + 1.0)));
    }
  }
  rep.residuals["fidelity_relation"] = fidelity;
  if (n <= 2) {
    rep.residuals["offdiag_integral"] = offdiag;
    rep.residuals["ancilla_readout"] = ancilla;
    rep.residuals["trace_identity"] = trace_identity_residual(rep.chi);
  }
  const ChiValidationReport v = validate_chi(rep.chi);
  rep.residuals["chi_hermiticity"] = v.hermiticity_deviation;
  rep.residuals["chi_trace_condition"] = v.trace_condition_deviation;
  rep.residuals["chi_negativity"] = std::max(0.0, -v.min_eigenvalue);
  return rep;
}

Matrix random_operator(int n, CounterRng& rng) {
  const auto d = static_cast<Eigen::Index>(dim(n));
  Matrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) {
      const double re = rng.normal();
      g(r, c) = cplx(re, rng.normal());
    }
  return g;
}

Matrix random_unitary(int n, CounterRng& rng) { return haar_unitary_from_gaussian(random_operator(n, rng)); }

PauliLabel random_label(int n, CounterRng& rng) { return PauliLabel::from_index(n, rng.below(label_count(n))); }

Channel random_channel(int n, std::uint64_t seed) {
  require_dense(n);
  CounterRng rng(seed, 0);
  const Matrix u = random_unitary(n, rng);
  // Random diagonal Pauli mixture over a handful of labels.
  const std::uint64_t terms = std::min<std::uint64_t>(label_count(n), 4);
  std::vector<std::uint64_t> picked;
  while (picked.size() < terms) {
    const std::uint64_t idx = rng.below(label_count(n));
    if (std::find(picked.begin(), picked.end(), idx) == picked.end()) picked.push_back(idx);
  }
  std::vector<double> w(terms);
  double total = 0.0;
  for (double& x : w) total += (x = rng.uniform() + 0.05);
  std::vector<Matrix> ops{std::sqrt(0.5) * u};
  for (std::size_t i = 0; i < terms; ++i)
    ops.push_back(std::sqrt(0.5 * w[i] / total) * pauli_matrix(PauliLabel::from_index(n, picked[i])));
  KrausSet k(n, std::move(ops));
  return Channel{kraus_spec(k), k};
}

}  // namespace seqpt::oracle

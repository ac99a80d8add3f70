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

#include "seqpt/channel.hpp"

#include <cmath>
#include <string>

#include "seqpt/error.hpp"

namespace seqpt {

namespace {

void require_square(const Matrix& m, std::size_t d, const char* what) {
  if (static_cast<std::size_t>(m.rows()) != d || static_cast<std::size_t>(m.cols()) != d) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(d) + "x" + std::to_string(d) +
                         " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

cplx pauli_column_phase(const PauliLabel& p, std::uint64_t col) {
  return PhaseExponent(popcount(p.x() & p.z()) + 2 * parity(p.z() & col)).factor();
}

// P * M: row r of the result is phase(r ^ x) * row (r ^ x) of M.
Matrix left_mul_pauli(const PauliLabel& p, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(m.rows()); ++s)
    out.row(static_cast<Eigen::Index>(s ^ p.x())) = pauli_column_phase(p, s) * m.row(static_cast<Eigen::Index>(s));
  return out;
}

// M * P: column c of the result is phase(c) * column (c ^ x) of M.
Matrix right_mul_pauli(const Matrix& m, const PauliLabel& p) {
  Matrix out(m.rows(), m.cols());
  for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(m.cols()); ++c)
    out.col(static_cast<Eigen::Index>(c)) = pauli_column_phase(p, c) * m.col(static_cast<Eigen::Index>(c ^ p.x()));
  return out;
}

double min_hermitian_eigenvalue(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(int n, Matrix rho) : n_(n), rho_(std::move(rho)) {
  require_dense(n);
  require_square(rho_, dim(n), "DensityMatrix");
}

DensityMatrix DensityMatrix::pure(int n, const Vector& psi) {
  if (static_cast<std::size_t>(psi.size()) != dim(n)) throw DimensionError("DensityMatrix::pure: state length mismatch");
  return DensityMatrix(n, psi * psi.adjoint());
}

void DensityMatrix::validate(double tol) const {
  const double herm = max_abs_diff(rho_, rho_.adjoint());
  const double trace_dev = std::abs(rho_.trace() - cplx(1.0));
  const double min_eig = min_hermitian_eigenvalue(rho_);
  if (herm > tol || trace_dev > tol || min_eig < -tol) {
    throw InvalidChannelError("invalid density matrix: hermiticity " + std::to_string(herm) + ", trace deviation " +
                              std::to_string(trace_dev) + ", min eigenvalue " + std::to_string(min_eig));
  }
}

KrausSet::KrausSet(int n, std::vector<Matrix> ops) : n_(n), ops_(std::move(ops)) {
  require_dense(n);
  if (ops_.empty()) throw InvalidChannelError("KrausSet: no operators");
  for (const auto& op : ops_) require_square(op, dim(n), "KrausSet");
}

double KrausSet::completeness_deviation() const {
  Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(dim(n_)), static_cast<Eigen::Index>(dim(n_)));
  for (const auto& a : ops_) sum.noalias() += a.adjoint() * a;
  return max_abs_diff(sum, Matrix::Identity(sum.rows(), sum.cols()));
}

ChiMatrix::ChiMatrix(int n, Matrix entries) : n_(n), entries_(std::move(entries)) {
  require_dense(n);
  require_square(entries_, dim(n) * dim(n), "ChiMatrix");
}

cplx ChiMatrix::operator()(const PauliLabel& m, const PauliLabel& n) const {
  if (m.qubits() != n_ || n.qubits() != n_) throw DimensionError("ChiMatrix: label qubit count mismatch");
  return entries_(static_cast<Eigen::Index>(m.index()), static_cast<Eigen::Index>(n.index()));
}

ChiValidationReport validate_chi(const ChiMatrix& chi, double tol) {
  ChiValidationReport rep;
  rep.tolerance = tol;
  const Matrix& e = chi.entries();
  rep.hermiticity_deviation = max_abs_diff(e, e.adjoint());
  rep.min_eigenvalue = min_hermitian_eigenvalue(e);

  // sum_mn chi_mn E_n^dag E_m = sum_mn chi_mn i^theta P_{n*m}, gathered per label.
  const int n = chi.qubits();
  const std::uint64_t labels = dim(n) * dim(n);
  std::vector<cplx> coef(labels, 0.0);
  for (std::uint64_t mi = 0; mi < labels; ++mi) {
    const PauliLabel m = PauliLabel::from_index(n, mi);
    for (std::uint64_t ni = 0; ni < labels; ++ni) {
      const cplx c = e(static_cast<Eigen::Index>(mi), static_cast<Eigen::Index>(ni));
      if (c == cplx(0.0)) continue;
      const PauliProduct prod = pauli_mul(PauliLabel::from_index(n, ni), m);
      coef[prod.label.index()] += c * prod.phase.factor();
    }
  }
  const auto d = static_cast<Eigen::Index>(dim(n));
  Matrix cond = Matrix::Zero(d, d);
  for (std::uint64_t li = 0; li < labels; ++li) {
    if (coef[li] == cplx(0.0)) continue;
    const PauliLabel p = PauliLabel::from_index(n, li);
    for (std::uint64_t c = 0; c < dim(n); ++c)
      cond(static_cast<Eigen::Index>(c ^ p.x()), static_cast<Eigen::Index>(c)) += coef[li] * pauli_column_phase(p, c);
  }
  rep.trace_condition_deviation = max_abs_diff(cond, Matrix::Identity(d, d));
  rep.passed = rep.hermiticity_deviation <= tol && rep.min_eigenvalue >= -tol && rep.trace_condition_deviation <= tol;
  return rep;
}

void validate_kraus(const KrausSet& k, double tol) {
  const double dev = k.completeness_deviation();
  if (dev > tol) {
    throw InvalidChannelError("Kraus operators are not trace preserving: |sum A^dag A - I| = " + std::to_string(dev));
  }
}

DensityMatrix apply_channel(const KrausSet& channel, const DensityMatrix& rho) {
  if (channel.qubits() != rho.qubits()) throw DimensionError("apply_channel: channel and state qubit counts differ");
  Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& a : channel.operators()) out.noalias() += a * rho.matrix() * a.adjoint();
  return DensityMatrix(rho.qubits(), std::move(out));
}

DensityMatrix apply_channel(const ChiMatrix& channel, const DensityMatrix& rho) {
  const int n = channel.qubits();
  if (n != rho.qubits()) throw DimensionError("apply_channel: channel and state qubit counts differ");
  const std::uint64_t labels = dim(n) * dim(n);
  const Matrix& chi = channel.entries();

  std::vector<Matrix> left(labels);  // E_m rho
  for (std::uint64_t mi = 0; mi < labels; ++mi) left[mi] = left_mul_pauli(PauliLabel::from_index(n, mi), rho.matrix());

  Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  Matrix acc(out.rows(), out.cols());
  for (std::uint64_t ni = 0; ni < labels; ++ni) {
    acc.setZero();
    bool any = false;
    for (std::uint64_t mi = 0; mi < labels; ++mi) {
      const cplx c = chi(static_cast<Eigen::Index>(mi), static_cast<Eigen::Index>(ni));
      if (c == cplx(0.0)) continue;
      acc += c * left[mi];
      any = true;
    }
    if (any) out += right_mul_pauli(acc, PauliLabel::from_index(n, ni));  // E_n^dag = E_n
  }
  return DensityMatrix(n, std::move(out));
}

ChiMatrix kraus_to_chi(const KrausSet& k) {
  const int n = k.qubits();
  const std::uint64_t labels = dim(n) * dim(n);
  const double inv_d = 1.0 / static_cast<double>(dim(n));
  Matrix coeffs(static_cast<Eigen::Index>(k.operators().size()), static_cast<Eigen::Index>(labels));
  for (std::size_t ki = 0; ki < k.operators().size(); ++ki)
    for (std::uint64_t mi = 0; mi < labels; ++mi)
      coeffs(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(mi)) =
          pauli_trace_against(PauliLabel::from_index(n, mi), k.operators()[ki]) * inv_d;
  return ChiMatrix(n, coeffs.transpose() * coeffs.conjugate());
}

KrausSet chi_to_kraus(const ChiMatrix& chi, double tol) {
  const int n = chi.qubits();
  const Matrix h = 0.5 * (chi.entries() + chi.entries().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& evals = es.eigenvalues();
  const double max_eval = evals.maxCoeff();
  if (evals.minCoeff() < -tol) {
    throw InvalidChannelError("chi_to_kraus: chi has eigenvalue " + std::to_string(evals.minCoeff()));
  }
  const auto d = static_cast<Eigen::Index>(dim(n));
  std::vector<Matrix> ops;
  for (Eigen::Index j = evals.size() - 1; j >= 0; --j) {
    if (evals(j) <= 1e-12 * max_eval) continue;
    const double scale = std::sqrt(evals(j));
    Matrix a = Matrix::Zero(d, d);
    for (Eigen::Index mi = 0; mi < evals.size(); ++mi) {
      const cplx v = es.eigenvectors()(mi, j);
      if (v == cplx(0.0)) continue;
      const PauliLabel p = PauliLabel::from_index(n, static_cast<std::uint64_t>(mi));
      for (std::uint64_t c = 0; c < dim(n); ++c)
        a(static_cast<Eigen::Index>(c ^ p.x()), static_cast<Eigen::Index>(c)) += scale * v * pauli_column_phase(p, c);
    }
    ops.push_back(std::move(a));
  }
  return KrausSet(n, std::move(ops));
}

KrausSet modified_channel_diag(const KrausSet& channel, const PauliLabel& m) {
  if (m.qubits() != channel.qubits()) throw DimensionError("modified_channel_diag: label qubit count mismatch");
  std::vector<Matrix> ops;
  ops.reserve(channel.operators().size());
  for (const auto& a : channel.operators()) ops.push_back(left_mul_pauli(m, a));  // E_m^dag = E_m
  return KrausSet(channel.qubits(), std::move(ops));
}

ChiMatrix modified_channel_diag(const ChiMatrix& channel, const PauliLabel& m) {
  const int n = channel.qubits();
  if (m.qubits() != n) throw DimensionError("modified_channel_diag: label qubit count mismatch");
  // P_m P_a rho P_b P_m = i^{theta(m,a)} conj(i^{theta(m,b)}) P_{m*a} rho P_{m*b}.
  const std::uint64_t labels = dim(n) * dim(n);
  std::vector<std::uint64_t> target(labels);
  std::vector<cplx> phase(labels);
  for (std::uint64_t ai = 0; ai < labels; ++ai) {
    const PauliProduct prod = pauli_mul(m, PauliLabel::from_index(n, ai));
    target[ai] = prod.label.index();
    phase[ai] = prod.phase.factor();
  }
  Matrix out = Matrix::Zero(channel.entries().rows(), channel.entries().cols());
  for (std::uint64_t ai = 0; ai < labels; ++ai)
    for (std::uint64_t bi = 0; bi < labels; ++bi)
      out(static_cast<Eigen::Index>(target[ai]), static_cast<Eigen::Index>(target[bi])) =
          channel.entries()(static_cast<Eigen::Index>(ai), static_cast<Eigen::Index>(bi)) * phase[ai] *
          std::conj(phase[bi]);
  return ChiMatrix(n, std::move(out));
}

KrausSet modified_channel_offdiag(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label) {
  const int n = channel.qubits();
  if (m.qubits() != n || n_label.qubits() != n) throw DimensionError("modified_channel_offdiag: label qubit count mismatch");
  require_dense(n + 1);
  const auto d = static_cast<Eigen::Index>(dim(n));
  const double s = 1.0 / std::sqrt(2.0);
  // Gate part: (|0><0| (x) E_n^dag + |1><1| (x) E_m^dag)(H (x) I).
  const Matrix en = pauli_matrix(n_label);
  const Matrix em = pauli_matrix(m);
  Matrix gate(2 * d, 2 * d);
  gate.topLeftCorner(d, d) = s * en;
  gate.topRightCorner(d, d) = s * en;
  gate.bottomLeftCorner(d, d) = s * em;
  gate.bottomRightCorner(d, d) = -s * em;

  std::vector<Matrix> ops;
  ops.reserve(channel.operators().size());
  for (const auto& a : channel.operators()) {
    Matrix c(2 * d, 2 * d);
    c.topRows(d).noalias() = a * gate.topRows(d);
    c.bottomRows(d).noalias() = a * gate.bottomRows(d);
    ops.push_back(std::move(c));
  }
  return KrausSet(n + 1, std::move(ops));
}

KrausSet compose(const KrausSet& first, const KrausSet& second) {
  if (first.qubits() != second.qubits()) throw DimensionError("compose: qubit counts differ");
  std::vector<Matrix> ops;
  ops.reserve(first.operators().size() * second.operators().size());
  for (const auto& b : second.operators())
    for (const auto& a : first.operators()) ops.push_back(b * a);
  return KrausSet(first.qubits(), std::move(ops));
}

}  // namespace seqpt

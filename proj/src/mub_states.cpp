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

#include "seqpt/mub_states.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <memory>
#include <mutex>

#include "seqpt/error.hpp"
#include "seqpt/kernels.hpp"

namespace seqpt {

namespace {

constexpr double kAmplitudeFloor = 1e-9;

std::span<cplx> as_span(Vector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

Vector build_state(const MubClass& cls, BitVec k) {
  const std::size_t d = dim(cls.n);
  Vector v(static_cast<Eigen::Index>(d)), tmp(static_cast<Eigen::Index>(d));
  for (std::size_t fiducial = 0; fiducial < d; ++fiducial) {
    v.setZero();
    v(static_cast<Eigen::Index>(fiducial)) = 1.0;
    for (int i = 0; i < cls.n; ++i) {
      apply_pauli(cls.generators[static_cast<std::size_t>(i)], as_span(v), as_span(tmp));
      const double sign = (k >> i & 1) ? -1.0 : 1.0;
      v = 0.5 * (v + sign * tmp);
    }
    const double norm = std::sqrt(kernels::norm2(as_span(v)));
    if (norm < kAmplitudeFloor) continue;
    v /= norm;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      const double mag = std::abs(v(j));
      if (mag > kAmplitudeFloor) {
        v *= std::conj(v(j)) / mag;
        break;
      }
    }
    return v;
  }
  throw InternalError("MUB state construction: projector product annihilated every fiducial");
}

}  // namespace

std::string bits_to_string(BitVec v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (v >> i & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

BitVec bits_from_string(std::string_view s, int n) {
  if (static_cast<int>(s.size()) != n) throw ParseError("bit string '" + std::string(s) + "' must have length " + std::to_string(n));
  BitVec v = 0;
  for (int i = 0; i < n; ++i) {
    const char c = s[static_cast<std::size_t>(i)];
    if (c == '1') {
      v |= BitVec{1} << i;
    } else if (c != '0') {
      throw ParseError("bit string '" + std::string(s) + "' contains a character other than 0/1");
    }
  }
  return v;
}

DesignStateId sample_design_state(int n, CounterRng& rng) {
  const std::uint64_t bases = mub_class_count(n);
  const std::uint64_t j = rng.below(bases);
  const BitVec mask = n == 64 ? ~BitVec{0} : (BitVec{1} << n) - 1;
  return {j, rng() & mask};
}

DesignStateId transition_target(const MubClass& cls, const DesignStateId& id, const PauliLabel& a) {
  if (cls.index != id.J) throw DomainError("transition_target: class does not match state base");
  return {id.J, id.k ^ commutation_vector(a, cls).bits};
}

MubDesign::MubDesign(int n) : n_(n), classes_(mub_classes((require_dense(n), n))) {
  const auto d = static_cast<Eigen::Index>(dim(n));
  bases_.reserve(classes_.size());
  for (const auto& cls : classes_) {
    Matrix u(d, d);
    for (Eigen::Index k = 0; k < d; ++k) u.col(k) = build_state(cls, static_cast<BitVec>(k));
    bases_.push_back(std::move(u));
  }
}

const MubClass& MubDesign::mub_class(std::uint64_t J) const {
  if (J >= classes_.size()) throw DomainError("MUB base index out of range");
  return classes_[J];
}

const Matrix& MubDesign::basis(std::uint64_t J) const {
  if (J >= bases_.size()) throw DomainError("MUB base index out of range");
  return bases_[J];
}

Vector MubDesign::state(const DesignStateId& id) const {
  if (id.k >= dim(n_)) throw DomainError("design state label out of range");
  return basis(id.J).col(static_cast<Eigen::Index>(id.k));
}

DesignStateId MubDesign::id_at(std::uint64_t flat) const {
  if (flat >= state_count()) throw DomainError("design state index out of range");
  return {flat / dim(n_), flat % dim(n_)};
}

DesignStateId MubDesign::transition_target(const DesignStateId& id, const PauliLabel& a) const {
  return seqpt::transition_target(mub_class(id.J), id, a);
}

cplx MubDesign::average_survival(const Matrix& op1, const Matrix& op2) const {
  const auto d = static_cast<Eigen::Index>(dim(n_));
  if (op1.rows() != d || op1.cols() != d || op2.rows() != d || op2.cols() != d) {
    throw DimensionError("average_survival: operator dimension mismatch");
  }
  cplx acc = 0.0;
  Vector t1(d), t2(d), psi(d);
  for (const auto& u : bases_) {
    for (Eigen::Index k = 0; k < d; ++k) {
      psi = u.col(k);
      kernels::gemv(op1, psi, t1);
      kernels::gemv(op2, psi, t2);
      acc += kernels::dotc(psi, t1) * kernels::dotc(psi, t2);
    }
  }
  return acc / static_cast<double>(state_count());
}

std::vector<double> MubDesign::base_probabilities(const DensityMatrix& rho, std::uint64_t J) const {
  if (rho.qubits() != n_) throw DimensionError("base_probabilities: state qubit count mismatch");
  const Matrix& u = basis(J);
  const Matrix rotated = u.adjoint() * rho.matrix() * u;
  std::vector<double> probs(static_cast<std::size_t>(u.cols()));
  double raw = 0.0, clamped = 0.0;
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    const double p = rotated(k, k).real();
    raw += p;
    if (p < 0.0) clamped += -p;
    probs[static_cast<std::size_t>(k)] = std::max(p, 0.0);
  }
  if (std::abs(raw - 1.0) > 1e-6) {
    throw InvalidChannelError("measurement probabilities sum to " + std::to_string(raw) + "; state is not normalized");
  }
  if (clamped > 0.0) spdlog::debug("base_probabilities: clamped {:.3e} of negative probability mass", clamped);
  const double total = raw + clamped;
  for (double& p : probs) p /= total;
  return probs;
}

BitVec MubDesign::measure(const DensityMatrix& rho, std::uint64_t J, CounterRng& rng) const {
  return static_cast<BitVec>(sample_discrete(base_probabilities(rho, J), rng.uniform()));
}

const MubDesign& design_for(int n) {
  require_dense(n);
  static std::array<std::unique_ptr<MubDesign>, kMaxDenseQubits + 1> cache;
  static std::array<std::once_flag, kMaxDenseQubits + 1> once;
  std::call_once(once[static_cast<std::size_t>(n)], [n] { cache[static_cast<std::size_t>(n)] = std::make_unique<MubDesign>(n); });
  return *cache[static_cast<std::size_t>(n)];
}

Vector mub_state(int n, const DesignStateId& id) { return design_for(n).state(id); }

cplx design_average_survival(const Matrix& op1, const Matrix& op2) {
  const auto d = static_cast<std::size_t>(op1.rows());
  if (d == 0 || (d & (d - 1)) != 0) throw DimensionError("design_average_survival: dimension must be a power of two");
  return design_for(std::countr_zero(d)).average_survival(op1, op2);
}

std::size_t sample_discrete(const std::vector<double>& probs, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return i;
  }
  // u landed in the rounding gap above the last cumulative sum.
  for (std::size_t i = probs.size(); i-- > 0;)
    if (probs[i] > 0.0) return i;
  return probs.size() - 1;
}

}  // namespace seqpt

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

#include "seqpt/estimator.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "experiment_plan.hpp"
#include "seqpt/error.hpp"
#include "seqpt/kernels.hpp"

namespace seqpt {

namespace detail {

ExperimentPlan plan_experiments(const MubDesign& design, const EstimatorConfig& cfg, std::uint64_t M,
                                std::uint64_t campaign) {
  ExperimentPlan plan;
  if (cfg.enumerate_design) {
    plan.enumerated = true;
    plan.experiments = design.state_count();
    plan.distinct.resize(plan.experiments);
    for (std::uint32_t i = 0; i < plan.experiments; ++i) plan.distinct[i] = i;
    return plan;
  }
  if (M >= (std::uint64_t{1} << 48)) throw DomainError("experiment count too large");
  plan.experiments = M;
  plan.state_of.resize(M);
  parallel_for((M + kBlockSize - 1) / kBlockSize, cfg.workers, [&](std::size_t b) {
    const std::uint64_t end = std::min<std::uint64_t>(M, (b + 1) * kBlockSize);
    for (std::uint64_t i = b * kBlockSize; i < end; ++i) {
      CounterRng rng(cfg.seed, stream_id(campaign, i));
      plan.state_of[i] = static_cast<std::uint32_t>(flat_index(design, sample_design_state(design.qubits(), rng)));
    }
  });
  std::vector<char> seen(design.state_count(), 0);
  for (std::uint32_t s : plan.state_of) seen[s] = 1;
  for (std::uint32_t s = 0; s < seen.size(); ++s)
    if (seen[s]) plan.distinct.push_back(s);
  return plan;
}

CounterRng experiment_rng(const MubDesign& design, const EstimatorConfig& cfg, const ExperimentPlan& plan,
                          std::uint64_t campaign, std::uint64_t i) {
  CounterRng rng(cfg.seed, stream_id(campaign, i));
  if (!plan.enumerated) sample_design_state(design.qubits(), rng);
  return rng;
}

double Moments::standard_error() const {
  if (count < 2) return 0.0;
  const double n = static_cast<double>(count);
  const double m = sum / n;
  const double var = std::max(0.0, (sumsq - n * m * m) / (n - 1.0));
  return std::sqrt(var / n);
}

}  // namespace detail

namespace {

using detail::Moments;

std::span<const cplx> as_span(const Vector& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

double clamp_probability(double p) { return std::min(1.0, std::max(0.0, p)); }

struct AncillaStats {
  double survival = 0.0;
  double sigma_x = 0.0;  // <sigma_x (x) P_psi>
  double sigma_y = 0.0;  // <sigma_y (x) P_psi>
};

// sum_k |<psi|B_k|psi>|^2, the survival probability under {B_k}.
double survival_probability(const KrausSet& channel, const Vector& psi) {
  Vector t(psi.size());
  double acc = 0.0;
  for (const auto& b : channel.operators()) {
    kernels::gemv(b, psi, t);
    acc += std::norm(kernels::dotc(psi, t));
  }
  return acc;
}

// Input |0> (x) |psi>; only the first D columns of each Kraus operator act.
AncillaStats ancilla_statistics(const KrausSet& channel, const Vector& psi) {
  const std::size_t d = static_cast<std::size_t>(psi.size());
  Vector v(static_cast<Eigen::Index>(2 * d));
  cplx r00 = 0.0, r11 = 0.0, r01 = 0.0;
  for (const auto& c : channel.operators()) {
    kernels::gemv(c.data(), 2 * d, d, as_span(psi), {v.data(), 2 * d});
    const cplx a0 = kernels::dotc(as_span(psi), {v.data(), d});
    const cplx a1 = kernels::dotc(as_span(psi), {v.data() + d, d});
    r00 += a0 * std::conj(a0);
    r11 += a1 * std::conj(a1);
    r01 += a0 * std::conj(a1);
  }
  return {(r00 + r11).real(), 2.0 * r01.real(), -2.0 * r01.imag()};
}

void check_channel(const KrausSet& channel) { validate_kraus(channel); }

}  // namespace

double Estimate::std_error() const { return std::hypot(std_error_re, std_error_im); }

std::uint64_t required_sample_size(double epsilon, SampleSizeKind kind) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0, 1]");
  const double base = 1.0 / (epsilon * epsilon);
  const double m = kind == SampleSizeKind::fidelity ? base / 4.0 : base;
  // Guard against 1/0.1^2 = 100.00000000000001 style rounding.
  const double rounded = std::nearbyint(m);
  const double target = std::abs(m - rounded) < 1e-9 * std::max(1.0, m) ? rounded : std::ceil(m);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(target));
}

std::uint64_t resolve_experiment_count(const EstimatorConfig& cfg, SampleSizeKind kind) {
  if (cfg.enumerate_design) return 0;
  if (cfg.M.has_value() == cfg.epsilon.has_value()) {
    throw DomainError("exactly one of M or epsilon must be supplied");
  }
  if (cfg.M) {
    if (*cfg.M < 1) throw DomainError("M must be at least 1");
    return *cfg.M;
  }
  return required_sample_size(*cfg.epsilon, kind);
}

Estimate estimate_chi_diag(const KrausSet& channel, const PauliLabel& m, const EstimatorConfig& cfg) {
  check_channel(channel);
  const int n = channel.qubits();
  if (m.qubits() != n) throw DimensionError("estimate_chi_diag: label qubit count mismatch");
  const MubDesign& design = design_for(n);
  const KrausSet modified = modified_channel_diag(channel, m);
  const std::uint64_t M = resolve_experiment_count(cfg, SampleSizeKind::fidelity);

  const auto plan = detail::plan_experiments(design, cfg, M, 0);
  const auto survival = detail::tabulate_states<double>(
      design, plan, cfg.workers, [&](const DesignStateId& id) { return survival_probability(modified, design.state(id)); });

  const Moments mom = detail::reduce_outcomes(plan, cfg.workers, [&](std::uint64_t i) {
    const double p = survival[detail::state_for(plan, i)];
    if (cfg.mode == SimulationMode::exact) return p;
    CounterRng rng = detail::experiment_rng(design, cfg, plan, 0, i);
    return rng.uniform() < clamp_probability(p) ? 1.0 : 0.0;
  });

  const double d = static_cast<double>(dim(n));
  Estimate est;
  est.M = mom.count;
  est.value = ((d + 1.0) * mom.mean() - 1.0) / d;
  est.observable_std_error = mom.standard_error();
  est.std_error_re = (d + 1.0) / d * est.observable_std_error;
  return est;
}

Estimate estimate_chi_offdiag(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label,
                              const EstimatorConfig& cfg) {
  check_channel(channel);
  const int n = channel.qubits();
  if (m.qubits() != n || n_label.qubits() != n) throw DimensionError("estimate_chi_offdiag: label qubit count mismatch");
  const MubDesign& design = design_for(n);
  const KrausSet modified = modified_channel_offdiag(channel, m, n_label);
  const std::uint64_t M = resolve_experiment_count(cfg, SampleSizeKind::offdiagonal);

  // Campaign 1 reads sigma_x, campaign 2 sigma_y; each samples its own states.
  auto run = [&](std::uint64_t campaign, bool use_y) {
    const auto plan = detail::plan_experiments(design, cfg, M, campaign);
    const auto stats = detail::tabulate_states<AncillaStats>(
        design, plan, cfg.workers, [&](const DesignStateId& id) { return ancilla_statistics(modified, design.state(id)); });
    return detail::reduce_outcomes(plan, cfg.workers, [&](std::uint64_t i) {
      const AncillaStats& s = stats[detail::state_for(plan, i)];
      const double polarization = use_y ? s.sigma_y : s.sigma_x;
      if (cfg.mode == SimulationMode::exact) return polarization;
      // Main register first: survive with probability s; then the ancilla
      // reads +1 with conditional probability (s + polarization) / (2 s).
      CounterRng rng = detail::experiment_rng(design, cfg, plan, campaign, i);
      const double u = rng.uniform();
      const double p_plus = clamp_probability(0.5 * (s.survival + polarization));
      const double p_minus = clamp_probability(0.5 * (s.survival - polarization));
      if (u < p_plus) return 1.0;
      if (u < p_plus + p_minus) return -1.0;
      return 0.0;
    });
  };

  const Moments mx = run(1, false);
  const Moments my = run(2, true);
  const double d = static_cast<double>(dim(n));
  const double delta = m == n_label ? 1.0 : 0.0;
  Estimate est;
  est.M = mx.count;
  est.value = cplx(((d + 1.0) * mx.mean() - delta) / d, (d + 1.0) * my.mean() / d);
  est.std_error_re = (d + 1.0) / d * mx.standard_error();
  est.std_error_im = (d + 1.0) / d * my.standard_error();
  est.observable_std_error = std::hypot(mx.standard_error(), my.standard_error());
  return est;
}

}  // namespace seqpt

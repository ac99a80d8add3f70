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
#include <optional>

#include "seqpt/channel.hpp"
#include "seqpt/pauli.hpp"

namespace seqpt {

enum class SimulationMode {
  sampled,  // one Bernoulli / three-valued outcome per experiment
  exact,    // the outcome's exact expectation for the sampled design state
};

enum class SampleSizeKind { fidelity, offdiagonal };

struct EstimatorConfig {
  /// Experiments per campaign. When unset, derived from epsilon.
  std::optional<std::uint64_t> M;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  SimulationMode mode = SimulationMode::sampled;
  /// Visit every design state exactly once instead of sampling; M becomes D(D+1).
  bool enumerate_design = false;
  /// 0 = one per hardware thread. Results never depend on this.
  std::size_t workers = 0;
};

/// Point estimate in chi units. For real-valued protocols the imaginary
/// part and its error are zero.
struct Estimate {
  cplx value;
  double std_error_re = 0.0;
  double std_error_im = 0.0;
  std::uint64_t M = 0;
  /// Standard error on the averaged-observable scale (D chi + delta)/(D+1).
  double observable_std_error = 0.0;

  double std_error() const;
};

/// ceil(eps^-2 / 4) for fidelities, ceil(eps^-2) for ancilla polarizations.
/// The precision refers to the averaged observable, not to chi itself.
std::uint64_t required_sample_size(double epsilon, SampleSizeKind kind);

/// M from the config, or derived from epsilon. Throws DomainError unless
/// exactly one of them is set.
std::uint64_t resolve_experiment_count(const EstimatorConfig& cfg, SampleSizeKind kind);

/// Survival protocol for chi_mm: prepare a design state, run the channel,
/// apply E_m^dag, test survival. chi = ((D+1) F - 1) / D, unclipped.
Estimate estimate_chi_diag(const KrausSet& channel, const PauliLabel& m, const EstimatorConfig& cfg);

/// Ancilla protocol for chi_mn: two campaigns of M experiments on the
/// (n+1)-qubit modified channel, recording 0 on non-survival and the
/// sigma_x (real part) or sigma_y (imaginary part) ancilla outcome +-1 on
/// survival. Re chi = ((D+1) mean_x - delta_mn) / D, Im chi = (D+1) mean_y / D.
Estimate estimate_chi_offdiag(const KrausSet& channel, const PauliLabel& m, const PauliLabel& n_label,
                              const EstimatorConfig& cfg);

}  // namespace seqpt

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
#include <vector>

#include "seqpt/estimator.hpp"
#include "seqpt/mub_states.hpp"
#include "seqpt/parallel.hpp"

namespace seqpt::detail {

/// Experiments are reduced in fixed-size blocks whose partial sums are
/// combined in block order, so floating-point results do not depend on the
/// worker count.
inline constexpr std::size_t kBlockSize = 4096;

/// Experiment i of campaign c draws from stream (c << 48) | i.
inline std::uint64_t stream_id(std::uint64_t campaign, std::uint64_t i) { return (campaign << 48) | i; }

inline std::uint64_t flat_index(const MubDesign& design, const DesignStateId& id) {
  return id.J * dim(design.qubits()) + id.k;
}

/// Which design state each experiment prepares, plus the distinct set.
struct ExperimentPlan {
  std::uint64_t experiments = 0;
  bool enumerated = false;
  std::vector<std::uint32_t> state_of;  // empty when enumerated
  std::vector<std::uint32_t> distinct;
};

ExperimentPlan plan_experiments(const MubDesign& design, const EstimatorConfig& cfg, std::uint64_t M,
                                std::uint64_t campaign);

/// RNG positioned after the state draw of experiment i.
CounterRng experiment_rng(const MubDesign& design, const EstimatorConfig& cfg, const ExperimentPlan& plan,
                          std::uint64_t campaign, std::uint64_t i);

/// Evaluates per_state(flat id) once for every distinct prepared state.
template <class T, class PerState>
std::vector<T> tabulate_states(const MubDesign& design, const ExperimentPlan& plan, std::size_t workers,
                               PerState&& per_state) {
  std::vector<T> table(design.state_count());
  parallel_for(plan.distinct.size(), workers, [&](std::size_t i) {
    const std::uint32_t flat = plan.distinct[i];
    table[flat] = per_state(design.id_at(flat));
  });
  return table;
}

inline std::uint32_t state_for(const ExperimentPlan& plan, std::uint64_t i) {
  return plan.enumerated ? static_cast<std::uint32_t>(i) : plan.state_of[i];
}

struct Moments {
  double sum = 0.0;
  double sumsq = 0.0;
  std::uint64_t count = 0;

  void add(double v) {
    sum += v;
    sumsq += v * v;
    ++count;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    count += o.count;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  /// Standard error of the mean from the unbiased sample variance.
  double standard_error() const;
};

/// Reduces outcome(i) over all experiments of the plan.
template <class Outcome>
Moments reduce_outcomes(const ExperimentPlan& plan, std::size_t workers, Outcome&& outcome) {
  const std::size_t blocks = (plan.experiments + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t b) {
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min<std::uint64_t>(plan.experiments, begin + kBlockSize);
    for (std::uint64_t i = begin; i < end; ++i) partial[b].add(outcome(i));
  });
  Moments total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace seqpt::detail

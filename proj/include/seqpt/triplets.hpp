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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "seqpt/estimator.hpp"
#include "seqpt/mub_states.hpp"

namespace seqpt {

/// One experiment: prepared |psi^J_k>, detected |psi^J_k'>.
struct Triplet {
  std::uint64_t J = 0;
  BitVec k = 0;
  BitVec k_out = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct TripletLog {
  int n = 0;
  std::uint64_t seed = 0;
  std::string channel_hash;
  std::vector<Triplet> triplets;
};

/// Prepare a uniformly drawn design state, run the channel, measure in the
/// preparation base. Always sampled; cfg.mode is ignored.
std::vector<Triplet> run_triplet_experiments(const KrausSet& channel, const EstimatorConfig& cfg);

/// Optional cost accounting for the classical post-processing.
struct TripletCost {
  std::uint64_t triplet_checks = 0;       // one m-type test per triplet
  std::uint64_t symplectic_products = 0;  // commutation vectors, n per distinct base
  std::uint64_t classes_built = 0;        // per-base generator setup
};

/// F = fraction of triplets with k XOR k' = p_m(J); chi = ((D+1) F - 1) / D.
Estimate estimate_diag_from_triplets(int n, const std::vector<Triplet>& triplets, const PauliLabel& m,
                                     TripletCost* cost = nullptr);

struct SieveOptions {
  double threshold = 0.1;
  /// Above this many triplets, pairs are subsampled uniformly.
  std::uint64_t full_pair_limit = 5000;
  std::uint64_t max_sampled_pairs = 12'500'000;
  /// Seeds pair subsampling only.
  std::uint64_t seed = 0;
};

struct SieveResult {
  /// Labels whose estimate exceeds the threshold, estimate descending.
  std::vector<std::pair<PauliLabel, Estimate>> heavy;
  std::uint64_t pairs_processed = 0;  // triplet pairs from distinct bases
  std::uint64_t systems_solved = 0;   // distinct (J, p) pairs actually solved
  std::uint64_t candidates = 0;
  bool subsampled = false;
};

/// Every pair of triplets from distinct bases pins down one label through
/// solve_label_from_constraints with p = k XOR k'. Each distinct candidate
/// is then estimated from the full triplet set and kept if above threshold.
///
/// Triplets sharing (J, p) yield identical systems, so the full pass solves
/// one system per pair of distinct (J, p) groups and weights it by the
/// product of group sizes.
SieveResult sieve_large_diagonals(int n, const std::vector<Triplet>& triplets, const SieveOptions& opts);

/// Line format: header "# seqpt-triplets v1 n=<n> seed=<seed> M=<M> channel=<sha256>"
/// followed by "J<TAB>k<TAB>k'" lines with k, k' as 0/1 strings.
void write_triplet_log(std::ostream& out, const TripletLog& log);
/// Throws ParseError on malformed or truncated logs.
TripletLog read_triplet_log(std::istream& in);

}  // namespace seqpt

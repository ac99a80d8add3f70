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
#include <string>
#include <string_view>
#include <vector>

#include "seqpt/channel.hpp"
#include "seqpt/mub_classes.hpp"
#include "seqpt/rng.hpp"

namespace seqpt {

/// Address of one design state |psi^J_k>: bit i of k is the eigenvalue
/// label of generator i, P^J_i |psi^J_k> = (-1)^{k_i} |psi^J_k>.
struct DesignStateId {
  std::uint64_t J = 0;
  BitVec k = 0;

  friend bool operator==(const DesignStateId&, const DesignStateId&) = default;
};

/// Bit i of v becomes character i ('0' or '1').
std::string bits_to_string(BitVec v, int n);
/// Inverse of bits_to_string; throws ParseError.
BitVec bits_from_string(std::string_view s, int n);

/// Uniform over all D(D+1) design states; never materializes a state.
DesignStateId sample_design_state(int n, CounterRng& rng);

/// (J, k XOR p) with p the commutation vector of a against class J.
DesignStateId transition_target(const MubClass& cls, const DesignStateId& id, const PauliLabel& a);

/// The full state 2-design for a dense qubit count: every MUB stored as a
/// D x D unitary whose column k is |psi^J_k>. Immutable after construction.
///
/// Each state is the image of a computational fiducial under the n
/// projectors (I + (-1)^{k_i} P_i)/2, normalized and re-phased so that its
/// first nonzero amplitude is real and positive.
class MubDesign {
 public:
  explicit MubDesign(int n);

  int qubits() const { return n_; }
  std::uint64_t base_count() const { return classes_.size(); }
  std::uint64_t state_count() const { return base_count() * dim(n_); }

  const MubClass& mub_class(std::uint64_t J) const;
  const Matrix& basis(std::uint64_t J) const;

  Vector state(const DesignStateId& id) const;

  /// Design-state id for flat index 0..state_count()-1 (J-major).
  DesignStateId id_at(std::uint64_t flat) const;

  DesignStateId transition_target(const DesignStateId& id, const PauliLabel& a) const;

  /// (1/(D(D+1))) sum_psi <psi|op1|psi><psi|op2|psi>.
  cplx average_survival(const Matrix& op1, const Matrix& op2) const;

  /// Probabilities <psi^J_k'|rho|psi^J_k'> over k', clamped at zero and
  /// renormalized. Throws InvalidChannelError if the raw mass deviates from
  /// 1 by more than 1e-6.
  std::vector<double> base_probabilities(const DensityMatrix& rho, std::uint64_t J) const;

  /// Samples k' from base_probabilities(rho, J).
  BitVec measure(const DensityMatrix& rho, std::uint64_t J, CounterRng& rng) const;

 private:
  int n_;
  std::vector<MubClass> classes_;
  std::vector<Matrix> bases_;
};

/// Free-function form; builds (and caches per n) the design.
Vector mub_state(int n, const DesignStateId& id);
const MubDesign& design_for(int n);

cplx design_average_survival(const Matrix& op1, const Matrix& op2);

/// Samples an index from a discrete distribution given one uniform draw.
std::size_t sample_discrete(const std::vector<double>& probs, double u);

}  // namespace seqpt

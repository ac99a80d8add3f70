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

#include <numbers>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "seqpt/channel_spec.hpp"
#include "seqpt/oracle.hpp"
#include "seqpt/rng.hpp"

namespace seqpt::testing {

struct NamedChannel {
  std::string name;
  Channel channel;
};

/// One instance of every factory kind at n qubits.
inline std::vector<NamedChannel> factory_channels(int n) {
  std::vector<NamedChannel> out;
  auto add = [&](std::string name, const json& spec) { out.push_back({std::move(name), build_channel(spec)}); };
  add("identity", identity_spec(n));
  add("depolarizing", depolarizing_spec(n, 0.2));
  if (n == 1) {
    add("pauli_mixture", pauli_mixture_spec(1, {{"I", 0.6}, {"X", 0.25}, {"Y", 0.15}}));
    add("rotation", rotation_spec("X", std::numbers::pi / 3));
  } else {
    const auto sz = static_cast<std::size_t>(n);
    add("pauli_mixture", pauli_mixture_spec(n, {{std::string(sz, 'I'), 0.7}, {"X" + std::string(sz - 1, 'I'), 0.2},
                                                {std::string(sz, 'Z'), 0.1}}));
    add("rotation", rotation_spec(std::string(static_cast<std::size_t>(n), 'Y').replace(0, 1, "X"), 0.7));
  }
  CounterRng rng(1000 + static_cast<std::uint64_t>(n), 0);
  add("unitary", unitary_spec(n, oracle::random_unitary(n, rng)));
  add("amplitude_damping", amplitude_damping_spec(n, 0.5));
  add("kraus", oracle::random_channel(n, 77).spec);
  add("compose", compose_spec(n, {amplitude_damping_spec(n, 0.3), rotation_spec(std::string(static_cast<std::size_t>(n), 'Z'), 1.1),
                                  depolarizing_spec(n, 0.1)}));
  return out;
}

inline Vector random_state(int n, CounterRng& rng) {
  Vector v(static_cast<Eigen::Index>(dim(n)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(rng.normal(), rng.normal());
  return v / v.norm();
}

/// Random mixed state: normalized G G^dagger.
inline DensityMatrix random_density(int n, CounterRng& rng) {
  const Matrix g = oracle::random_operator(n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix(n, rho);
}

/// Upper-tail p-value of Pearson's statistic against uniform expected counts.
inline double uniform_chi_square_pvalue(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) stat += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace seqpt::testing

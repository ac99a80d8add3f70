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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cli.hpp"
#include "seqpt/channel_spec.hpp"
#include "seqpt/error.hpp"
#include "seqpt/mub_states.hpp"
#include "seqpt/oracle.hpp"

namespace seqpt::cli {
namespace {

constexpr double kExact = 1e-9;

std::vector<std::pair<std::string, json>> suite_channels(int n) {
  const auto sz = static_cast<std::size_t>(n);
  std::vector<std::pair<std::string, json>> out = {
      {"identity", identity_spec(n)},
      {"depolarizing", depolarizing_spec(n, 0.2)},
      {"pauli_mixture", pauli_mixture_spec(n, {{std::string(sz, 'I'), 0.7}, {std::string(sz, 'X'), 0.2},
                                               {std::string(sz, 'Z'), 0.1}})},
      {"rotation", rotation_spec(std::string(sz, 'Y'), std::numbers::pi / 3)},
      {"amplitude_damping", amplitude_damping_spec(n, 0.5)},
      {"random", oracle::random_channel(n, 2024).spec},
  };
  CounterRng rng(7, static_cast<std::uint64_t>(n));
  out.emplace_back("unitary", unitary_spec(n, oracle::random_unitary(n, rng)));
  return out;
}

double class_violations(int n) {
  const auto classes = mub_classes(n);
  const std::uint64_t labels = dim(n) * dim(n);
  std::vector<int> owner(labels, 0);
  double bad = 0;
  for (const auto& cls : classes) {
    for (const auto& a : cls.generators)
      for (const auto& b : cls.generators) bad += symplectic_product(a, b) ? 1 : 0;
    const auto group = class_group(cls);
    // A full-rank generator set yields D distinct labels.
    std::vector<std::uint64_t> idx;
    for (const auto& g : group) idx.push_back(g.index());
    std::sort(idx.begin(), idx.end());
    bad += static_cast<double>(dim(n) - static_cast<std::uint64_t>(std::unique(idx.begin(), idx.end()) - idx.begin()));
    for (std::uint64_t i : idx)
      if (i != 0) ++owner[i];
  }
  for (std::uint64_t i = 1; i < labels; ++i) bad += std::abs(owner[i] - 1);
  return bad;
}

double unbiasedness(const MubDesign& d) {
  const int n = d.qubits();
  const auto D = static_cast<Eigen::Index>(dim(n));
  const double inv = 1.0 / static_cast<double>(D);
  double worst = 0;
  for (std::uint64_t J = 0; J < d.base_count(); ++J) {
    worst = std::max(worst, max_abs_diff(d.basis(J).adjoint() * d.basis(J), Matrix::Identity(D, D)));
    for (std::uint64_t K = J + 1; K < d.base_count(); ++K) {
      const Matrix g = d.basis(J).adjoint() * d.basis(K);
      for (Eigen::Index i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(std::norm(g(i)) - inv));
    }
  }
  return worst;
}

double eigen_labels(const MubDesign& d) {
  double worst = 0;
  for (std::uint64_t f = 0; f < d.state_count(); ++f) {
    const DesignStateId id = d.id_at(f);
    const Vector v = d.state(id);
    const auto& gens = d.mub_class(id.J).generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const double sign = ((id.k >> i) & 1U) ? -1.0 : 1.0;
      worst = std::max(worst, max_abs_diff(pauli_matrix(gens[i]) * v, sign * v));
    }
  }
  return worst;
}

double two_design(int n) {
  CounterRng rng(11, static_cast<std::uint64_t>(n));
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const Matrix a = oracle::random_operator(n, rng);
    const Matrix b = oracle::random_operator(n, rng);
    worst = std::max(worst, std::abs(design_average_survival(a, b) - oracle::haar_closed_form(a, b)));
  }
  return worst;
}

}  // namespace

std::vector<VerifyRow> verify_suite(int n, const std::string& level) {
  if (level != "quick" && level != "full") throw DomainError("verify level must be quick or full");
  if (n < 1) throw DomainError("verify: qubit count must be positive");
  oracle::require_oracle(n);
  const bool full = level == "full";
  std::vector<VerifyRow> rows;
  const MubDesign& design = design_for(n);
  rows.push_back({"mub_class_structure", "classes", class_violations(n), 0.0});
  rows.push_back({"mub_unbiasedness", "states", unbiasedness(design), 1e-10});
  rows.push_back({"mub_eigenvalue_labels", "states", eigen_labels(design), 1e-10});
  rows.push_back({"two_design_average", "20 operator pairs", two_design(n), kExact});

  const double D = static_cast<double>(dim(n));
  // The dense oracle is quartic in D; sample fewer labels at the cap.
  const int samples = n >= 4 ? 3 : 10;
  CounterRng rng(13, static_cast<std::uint64_t>(n));
  for (const auto& [name, spec] : suite_channels(n)) {
    const KrausSet k = build_channel(spec).kraus;
    const ChiMatrix chi = oracle::exact_chi(k);
    const auto v = validate_chi(chi);
    rows.push_back({"chi_validity", name,
                    std::max({v.hermiticity_deviation, v.trace_condition_deviation, std::max(0.0, -v.min_eigenvalue)}),
                    kExact});
    rows.push_back({"average_fidelity", name,
                    std::abs(oracle::exact_average_fidelity(k) - (D * chi.entries()(0, 0).real() + 1) / (D + 1)),
                    1e-10});
    double fid = 0;
    for (int t = 0; t < samples; ++t) {
      const PauliLabel m = oracle::random_label(n, rng);
      fid = std::max(fid, std::abs(oracle::exact_average_fidelity(modified_channel_diag(k, m)) -
                                   (D * chi(m, m).real() + 1) / (D + 1)));
    }
    rows.push_back({"modified_fidelity", name, fid, kExact});
    if (!full) continue;

    double integral = 0, ancilla = 0;
    for (int t = 0; t < samples; ++t) {
      const PauliLabel m = oracle::random_label(n, rng);
      const PauliLabel nl = t < 2 ? m : oracle::random_label(n, rng);
      const cplx target = (D * chi(m, nl) + (m == nl ? 1.0 : 0.0)) / (D + 1);
      integral = std::max(integral, std::abs(oracle::exact_offdiag_average(k, m, nl) - target));
      const auto anc = oracle::exact_ancilla_polarization(k, m, nl);
      ancilla = std::max({ancilla, std::abs(anc.sigma_x - target.real()), std::abs(anc.sigma_y - target.imag())});
    }
    rows.push_back({"offdiag_integral", name, integral, kExact});
    rows.push_back({"ancilla_readout", name, ancilla, kExact});
    rows.push_back({"decomposition_invariance", name,
                    max_abs_diff(oracle::exact_chi(chi_to_kraus(chi)).entries(), chi.entries()), kExact});
    if (n <= 2) rows.push_back({"trace_identity", name, oracle::trace_identity_residual(chi), 1e-8});
  }
  return rows;
}

}  // namespace seqpt::cli

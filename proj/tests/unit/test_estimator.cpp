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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "seqpt/error.hpp"
#include "seqpt/estimator.hpp"
#include "seqpt/kernels.hpp"

using namespace seqpt;
using namespace seqpt::testing;

namespace {

PauliLabel P(const char* s) { return PauliLabel::parse(s); }

EstimatorConfig config(std::uint64_t M, std::uint64_t seed, SimulationMode mode = SimulationMode::sampled) {
  EstimatorConfig cfg;
  cfg.M = M;
  cfg.seed = seed;
  cfg.mode = mode;
  return cfg;
}

EstimatorConfig enumerate() {
  EstimatorConfig cfg;
  cfg.mode = SimulationMode::exact;
  cfg.enumerate_design = true;
  return cfg;
}

bool within(double value, double target, double se, double k = 5.0) { return std::abs(value - target) <= k * se; }

}  // namespace

TEST_CASE("required_sample_size") {
  CHECK(required_sample_size(0.1, SampleSizeKind::offdiagonal) == 100);
  CHECK(required_sample_size(0.1, SampleSizeKind::fidelity) == 25);
  CHECK(required_sample_size(1.0, SampleSizeKind::offdiagonal) == 1);
  CHECK(required_sample_size(1.0, SampleSizeKind::fidelity) == 1);
  CHECK(required_sample_size(0.3, SampleSizeKind::offdiagonal) == 12);
  CHECK_THROWS_AS(required_sample_size(0.0, SampleSizeKind::fidelity), DomainError);
  CHECK_THROWS_AS(required_sample_size(1.5, SampleSizeKind::fidelity), DomainError);

  EstimatorConfig cfg;
  CHECK_THROWS_AS(resolve_experiment_count(cfg, SampleSizeKind::fidelity), DomainError);
  cfg.epsilon = 0.05;
  CHECK(resolve_experiment_count(cfg, SampleSizeKind::fidelity) == 100);
  cfg.M = 7;
  CHECK_THROWS_AS(resolve_experiment_count(cfg, SampleSizeKind::fidelity), DomainError);
  cfg.epsilon.reset();
  CHECK(resolve_experiment_count(cfg, SampleSizeKind::fidelity) == 7);
  cfg.M = 0;
  CHECK_THROWS_AS(resolve_experiment_count(cfg, SampleSizeKind::fidelity), DomainError);
}

TEST_CASE("estimate_chi_diag examples") {
  const KrausSet id2 = build_channel(identity_spec(2)).kraus;
  const Estimate one = estimate_chi_diag(id2, P("II"), config(100, 1, SimulationMode::exact));
  CHECK(one.value.real() == 1.0);
  CHECK(one.M == 100);
  CHECK(one.std_error() == 0.0);

  const KrausSet id1 = build_channel(identity_spec(1)).kraus;
  const Estimate zero = estimate_chi_diag(id1, P("X"), enumerate());
  CHECK(std::abs(zero.value.real()) < 1e-12);
  CHECK(zero.M == 6);

  const Estimate floor = estimate_chi_diag(id1, P("X"), config(100000, 3));
  CHECK(within(floor.value.real(), 0.0, floor.std_error()));

  const Estimate dep = estimate_chi_diag(build_channel(depolarizing_spec(1, 0.2)).kraus, P("Z"), config(100000, 7));
  CHECK(within(dep.value.real(), 0.05, dep.std_error()));
  CHECK(dep.value.imag() == 0.0);
  CHECK(dep.std_error_im == 0.0);
  // chi-scale error is (D+1)/D times the observable-scale error.
  CHECK(dep.std_error() == doctest::Approx(1.5 * dep.observable_std_error));

  CHECK_THROWS_AS(estimate_chi_diag(id1, P("XX"), config(10, 0)), DimensionError);
  CHECK_THROWS_AS(estimate_chi_diag(build_channel(identity_spec(7)).kraus, PauliLabel::identity(7), config(10, 0)),
                  DenseCapError);
}

TEST_CASE("estimate_chi_offdiag examples") {
  const KrausSet id = build_channel(identity_spec(2)).kraus;
  const Estimate zero = estimate_chi_offdiag(id, P("XI"), P("ZY"), enumerate());
  CHECK(std::abs(zero.value) < 1e-12);

  const double t = std::numbers::pi / 2;
  const KrausSet rot = build_channel(rotation_spec("X", t)).kraus;
  const Estimate e = estimate_chi_offdiag(rot, P("I"), P("X"), config(100000, 11));
  CHECK(e.M == 100000);
  CHECK(within(e.value.imag(), 0.5, e.std_error_im));
  CHECK(within(e.value.real(), 0.0, e.std_error_re));

  // Swapping the labels conjugates chi.
  const KrausSet rot3 = build_channel(rotation_spec("X", std::numbers::pi / 3)).kraus;
  const Estimate a = estimate_chi_offdiag(rot3, P("I"), P("X"), config(100000, 12));
  const Estimate b = estimate_chi_offdiag(rot3, P("X"), P("I"), config(100000, 13));
  CHECK(within(a.value.real(), b.value.real(), std::hypot(a.std_error_re, b.std_error_re)));
  CHECK(within(a.value.imag(), -b.value.imag(), std::hypot(a.std_error_im, b.std_error_im)));

  // Equal labels reproduce the diagonal protocol.
  const KrausSet dep = build_channel(depolarizing_spec(1, 0.4)).kraus;
  const Estimate same = estimate_chi_offdiag(dep, P("Y"), P("Y"), config(50000, 14));
  const Estimate diag = estimate_chi_diag(dep, P("Y"), config(50000, 15));
  CHECK(within(same.value.real(), diag.value.real(), std::hypot(same.std_error_re, diag.std_error())));
  CHECK(within(same.value.imag(), 0.0, same.std_error_im));
}

TEST_CASE("full design enumeration in exact mode reproduces the oracle") {
  CounterRng rng(41, 0);
  for (int n = 1; n <= 2; ++n)
    for (const auto& [name, ch] : factory_channels(n)) {
      CAPTURE(n);
      CAPTURE(name);
      const ChiMatrix chi = oracle::exact_chi(ch.kraus);
      for (int t = 0; t < 4; ++t) {
        const PauliLabel m = oracle::random_label(n, rng);
        const PauliLabel nl = oracle::random_label(n, rng);
        CHECK(std::abs(estimate_chi_diag(ch.kraus, m, enumerate()).value - chi(m, m).real()) < 1e-9);
        CHECK(std::abs(estimate_chi_offdiag(ch.kraus, m, nl, enumerate()).value - chi(m, nl)) < 1e-9);
      }
    }
}

TEST_CASE("sampled estimates are consistent with the oracle") {
  const KrausSet k = build_channel(amplitude_damping_spec(1, 0.3)).kraus;
  const ChiMatrix chi = oracle::exact_chi(k);
  int diag_hits = 0, off_hits = 0;
  const int runs = 40;
  for (int s = 0; s < runs; ++s) {
    const Estimate d = estimate_chi_diag(k, P("X"), config(4000, 100 + static_cast<std::uint64_t>(s)));
    diag_hits += within(d.value.real(), chi(P("X"), P("X")).real(), d.std_error());
    const Estimate o = estimate_chi_offdiag(k, P("I"), P("Z"), config(4000, 900 + static_cast<std::uint64_t>(s)));
    off_hits += within(o.value.real(), chi(P("I"), P("Z")).real(), o.std_error_re) &&
                within(o.value.imag(), chi(P("I"), P("Z")).imag(), o.std_error_im);
  }
  CHECK(diag_hits >= runs - 1);
  CHECK(off_hits >= runs - 1);
}

TEST_CASE("standard error follows the square-root law") {
  const KrausSet k = build_channel(depolarizing_spec(1, 0.2)).kraus;
  double small = 0, large = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    small += estimate_chi_diag(k, P("Z"), config(1000, s)).std_error();
    large += estimate_chi_diag(k, P("Z"), config(4000, 1000 + s)).std_error();
  }
  CHECK(large / small == doctest::Approx(0.5).epsilon(0.25));
}

TEST_CASE("results are deterministic and independent of worker count") {
  const KrausSet k = oracle::random_channel(2, 3).kraus;
  EstimatorConfig one = config(20000, 99);
  one.workers = 1;
  EstimatorConfig many = one;
  many.workers = 5;
  for (auto mode : {SimulationMode::sampled, SimulationMode::exact}) {
    one.mode = many.mode = mode;
    const Estimate a = estimate_chi_diag(k, P("XZ"), one);
    const Estimate b = estimate_chi_diag(k, P("XZ"), many);
    CHECK(a.value == b.value);
    CHECK(a.std_error() == b.std_error());
    const Estimate c = estimate_chi_offdiag(k, P("XZ"), P("YI"), one);
    const Estimate d = estimate_chi_offdiag(k, P("XZ"), P("YI"), many);
    CHECK(c.value == d.value);
    CHECK(c.std_error_re == d.std_error_re);
    CHECK(c.std_error_im == d.std_error_im);
  }
  EstimatorConfig other = one;
  other.seed = 100;
  CHECK(estimate_chi_diag(k, P("XZ"), one).value != estimate_chi_diag(k, P("XZ"), other).value);
}

TEST_CASE("scalar and vector kernels give the same estimates") {
  if (!kernels::level_supported(kernels::SimdLevel::avx2)) return;
  const auto saved = kernels::simd_level();
  const KrausSet k = oracle::random_channel(3, 12).kraus;
  Estimate d[2], o[2];
  for (int i = 0; i < 2; ++i) {
    kernels::set_simd_level(i == 0 ? kernels::SimdLevel::scalar : kernels::SimdLevel::avx2);
    d[i] = estimate_chi_diag(k, P("XYZ"), enumerate());
    o[i] = estimate_chi_offdiag(k, P("XYZ"), P("IZI"), enumerate());
  }
  kernels::set_simd_level(saved);
  CHECK(std::abs(d[0].value - d[1].value) < 1e-13);
  CHECK(std::abs(o[0].value - o[1].value) < 1e-13);
}

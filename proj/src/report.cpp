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

#include "seqpt/report.hpp"

#include <algorithm>
#include <cmath>

namespace seqpt {

namespace {

constexpr double kStdErrorFloor = 1e-12;

bool is_complex(ProtocolKind kind) { return kind == ProtocolKind::offdiagonal; }

}  // namespace

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::diagonal:
      return "diagonal";
    case ProtocolKind::offdiagonal:
      return "offdiagonal";
    case ProtocolKind::triplet_diagonal:
      return "triplet_diagonal";
    case ProtocolKind::sieve:
      return "sieve";
  }
  return "unknown";
}

std::optional<double> ReportRow::z_score() const {
  if (!oracle) return std::nullopt;
  const double se = std::max(estimate.std_error(), kStdErrorFloor);
  if (is_complex(protocol)) return std::abs(estimate.value - *oracle) / se;
  return (estimate.value.real() - oracle->real()) / se;
}

json estimation_report(const json& inputs, const std::vector<ReportRow>& rows) {
  json out_rows = json::array();
  for (const auto& r : rows) {
    json row;
    row["protocol"] = std::string(to_string(r.protocol));
    row["m"] = r.m.to_string();
    row["n_label"] = r.n_label ? json(r.n_label->to_string()) : json(nullptr);
    row["value_re"] = r.estimate.value.real();
    row["value_im"] = r.estimate.value.imag();
    row["std_error"] = r.estimate.std_error();
    row["std_error_re"] = r.estimate.std_error_re;
    row["std_error_im"] = r.estimate.std_error_im;
    row["observable_std_error"] = r.estimate.observable_std_error;
    row["M"] = r.estimate.M;
    row["oracle_re"] = r.oracle ? json(r.oracle->real()) : json(nullptr);
    row["oracle_im"] = r.oracle ? json(r.oracle->imag()) : json(nullptr);
    const auto z = r.z_score();
    row["z_score"] = z ? json(*z) : json(nullptr);
    out_rows.push_back(std::move(row));
  }
  return {{"inputs", inputs}, {"rows", out_rows}};
}

}  // namespace seqpt

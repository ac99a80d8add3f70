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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqpt/channel_spec.hpp"
#include "seqpt/estimator.hpp"

namespace seqpt {

enum class ProtocolKind { diagonal, offdiagonal, triplet_diagonal, sieve };

std::string_view to_string(ProtocolKind kind);

struct ReportRow {
  ProtocolKind protocol = ProtocolKind::diagonal;
  PauliLabel m;
  std::optional<PauliLabel> n_label;
  Estimate estimate;
  std::optional<cplx> oracle;

  /// (estimate - oracle) / std_error for real rows, |estimate - oracle| /
  /// std_error for complex rows. A zero standard error is floored at 1e-12
  /// so the score stays finite.
  std::optional<double> z_score() const;
};

/// Report document: {"inputs": ..., "rows": [...]}. Row fields: protocol,
/// m, n_label, value_re, value_im, std_error, std_error_re, std_error_im,
/// observable_std_error, M, oracle_re, oracle_im, z_score; absent values
/// are null.
json estimation_report(const json& inputs, const std::vector<ReportRow>& rows);

}  // namespace seqpt

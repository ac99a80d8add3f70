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

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace seqpt::cli {

/// Exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kMalformedInput = 2,
  kInvalidLabel = 3,
  kDenseCap = 4,
  kHashMismatch = 5,
  kSingleBase = 6,
  kUsage = 64,
  kInternal = 70,
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one command line (args excludes the program name). Reports go to
/// out unless --out is given; diagnostics and the JSON error document go
/// to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyRow {
  std::string identity;
  std::string subject;
  double residual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return residual <= tolerance; }
};

/// Oracle identity suites at n qubits. level is "quick" or "full".
std::vector<VerifyRow> verify_suite(int n, const std::string& level);

}  // namespace seqpt::cli

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

#include <unistd.h>

#include <cmath>
#include <nlohmann/json.hpp>

#include "../support/cli_harness.hpp"
#include "doctest.h"
#include "seqpt/channel_spec.hpp"
#include "seqpt/triplets.hpp"

using namespace seqpt;
using namespace seqpt::testing;
using nlohmann::json;

namespace {

const char* kMixture = R"({"n": 4, "kind": "pauli_mixture", "weights": {"IIII": 0.6, "XIII": 0.25, "ZZII": 0.15}})";

json row0(const CliResult& r) { return json::parse(r.out)["rows"][0]; }

bool within(const json& row, double k = 5.0) { return std::abs(row["z_score"].get<double>()) <= k; }

}  // namespace

TEST_CASE("cli usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).out == "0.1.0\n");
  const CliResult none = run({});
  CHECK(none.code == cli::kUsage);
  CHECK(json::parse(none.err)["error"] == "usage");
  CHECK(run({"estimate-diag", "--m", "Z"}).code == cli::kUsage);
}

TEST_CASE("cli estimate-diag") {
  TempDir dir("diag");
  const auto id = dir.write("id.json", R"({"n": 2, "kind": "identity"})");
  const CliResult exact = run({"estimate-diag", "--channel", id, "--m", "II", "--M", "100", "--mode", "exact"});
  REQUIRE(exact.code == 0);
  CHECK(row0(exact)["value_re"] == 1.0);
  CHECK(row0(exact)["M"] == 100);

  const auto dep = dir.write("dep.json", R"({"n": 1, "kind": "depolarizing", "p": 0.2})");
  const CliResult s = run({"estimate-diag", "--channel", dep, "--m", "Z", "--M", "100000", "--seed", "7"});
  REQUIRE(s.code == 0);
  CHECK(row0(s)["oracle_re"].get<double>() == doctest::Approx(0.05));
  CHECK(within(row0(s)));
  const json doc = json::parse(s.out);
  CHECK(doc["manifest"]["command"] == "estimate-diag");
  CHECK(doc["manifest"]["channel_hash"] == spec_hash(depolarizing_spec(1, 0.2)));
  CHECK(doc["manifest"]["tool_version"] == "0.1.0");

  const CliResult eps = run({"estimate-diag", "--channel", dep, "--m", "Z", "--epsilon", "0.1"});
  CHECK(row0(eps)["M"] == 25);

  const auto out = dir.file("report.json");
  CHECK(run({"estimate-diag", "--channel", dep, "--m", "Z", "--M", "10", "--out", out}).out.empty());
  CHECK(json::parse(slurp(out))["rows"].size() == 1);

  const CliResult bad = run({"estimate-diag", "--channel", dep, "--m", "Q", "--M", "10"});
  CHECK(bad.code == cli::kInvalidLabel);
  CHECK(json::parse(bad.err)["exit_code"] == 3);
  CHECK(run({"estimate-diag", "--channel", dep, "--m", "ZZ", "--M", "10"}).code == cli::kInvalidLabel);

  const auto broken = dir.write("broken.json", R"({"n": 1, "kind": "depolarizing")");
  CHECK(run({"estimate-diag", "--channel", broken, "--m", "Z", "--M", "10"}).code == cli::kMalformedInput);
  const auto nonunitary = dir.write("nu.json", R"({"n": 1, "kind": "unitary", "matrix": [[[2, 0], [0, 0]], [[0, 0], [1, 0]]]})");
  CHECK(run({"estimate-diag", "--channel", nonunitary, "--m", "Z", "--M", "10"}).code == cli::kMalformedInput);
  const auto big = dir.write("big.json", R"({"n": 7, "kind": "identity"})");
  CHECK(run({"estimate-diag", "--channel", big, "--m", "IIIIIII", "--M", "10"}).code == cli::kDenseCap);
}

TEST_CASE("cli estimate-offdiag") {
  TempDir dir("off");
  const auto id = dir.write("id.json", R"({"n": 1, "kind": "identity"})");
  const CliResult zero =
      run({"estimate-offdiag", "--channel", id, "--m", "I", "--n-label", "X", "--mode", "exact", "--M", "50"});
  REQUIRE(zero.code == 0);
  CHECK(std::abs(row0(zero)["value_re"].get<double>()) < 1e-12);
  CHECK(std::abs(row0(zero)["value_im"].get<double>()) < 1e-12);

  const auto rot = dir.write("rot.json", R"({"n": 1, "kind": "unitary", "pauli": "X", "theta": 1.5707963267948966})");
  const CliResult r = run({"estimate-offdiag", "--channel", rot, "--m", "I", "--n-label", "X", "--M", "100000"});
  CHECK(row0(r)["oracle_im"].get<double>() == doctest::Approx(0.5));
  CHECK(std::abs(row0(r)["value_im"].get<double>() - 0.5) <= 5 * row0(r)["std_error_im"].get<double>());
  CHECK(row0(r)["protocol"] == "offdiagonal");
  CHECK(row0(r)["n_label"] == "X");

  const auto dep = dir.write("dep.json", R"({"n": 1, "kind": "depolarizing", "p": 0.3})");
  const json same = row0(run({"estimate-offdiag", "--channel", dep, "--m", "Y", "--n-label", "Y", "--M", "50000"}));
  const json diag = row0(run({"estimate-diag", "--channel", dep, "--m", "Y", "--M", "50000", "--seed", "1"}));
  CHECK(std::abs(same["value_re"].get<double>() - diag["value_re"].get<double>()) <=
        5 * std::hypot(same["std_error_re"].get<double>(), diag["std_error"].get<double>()));
}

TEST_CASE("cli triplet pipeline") {
  TempDir dir("trip");
  const auto id = dir.write("id.json", R"({"n": 2, "kind": "identity"})");
  const auto log = dir.file("id.log");
  REQUIRE(run({"triplets", "--channel", id, "--M", "10", "--seed", "4", "--out", log}).code == 0);
  std::istringstream in(slurp(log));
  const TripletLog parsed = read_triplet_log(in);
  CHECK(parsed.triplets.size() == 10);
  for (const auto& t : parsed.triplets) CHECK(t.k_out == t.k);
  const json man = json::parse(slurp(log + ".manifest.json"));
  CHECK(man["command"] == "triplets");
  CHECK(man["channel_hash"] == parsed.channel_hash);
  CHECK(run({"triplets", "--channel", id, "--M", "10"}).code == cli::kUsage);

  const auto mix = dir.write("mix.json", kMixture);
  const auto mlog = dir.file("mix.log");
  REQUIRE(run({"triplets", "--channel", mix, "--M", "2000", "--seed", "3", "--out", mlog}).code == 0);
  const CliResult sieve = run({"sieve", "--log", mlog, "--threshold", "0.08", "--channel", mix});
  REQUIRE(sieve.code == 0);
  const json doc = json::parse(sieve.out);
  std::vector<std::string> found;
  for (const auto& row : doc["rows"]) {
    found.push_back(row["m"]);
    CHECK(within(row));
  }
  CHECK(found == std::vector<std::string>{"IIII", "XIII", "ZZII"});
  CHECK(doc["sieve"]["pairs_processed"].get<std::uint64_t>() <= doc["sieve"]["pair_bound"].get<std::uint64_t>());

  const CliResult fromlog = run({"diag-from-log", "--log", mlog, "--m", "IIII,XIII", "--m", "ZZII", "--channel", mix});
  REQUIRE(fromlog.code == 0);
  const json rows = json::parse(fromlog.out)["rows"];
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row["protocol"] == "triplet_diagonal");
    CHECK(within(row));
  }
  CHECK(run({"diag-from-log", "--log", mlog, "--m", "XII"}).code == cli::kInvalidLabel);

  const std::string text = slurp(mlog);
  const auto truncated = dir.write("trunc.log", text.substr(0, text.size() / 2));
  CHECK(run({"sieve", "--log", truncated}).code == cli::kMalformedInput);
  CHECK(run({"diag-from-log", "--log", truncated, "--m", "IIII"}).code == cli::kMalformedInput);
  CHECK(run({"sieve", "--log", mlog, "--channel", id}).code == cli::kHashMismatch);
  CHECK(run({"diag-from-log", "--log", mlog, "--m", "IIII", "--channel", id}).code == cli::kHashMismatch);

  const auto single = dir.write("single.log", "# seqpt-triplets v1 n=1 seed=0 M=2 channel=x\n1\t0\t0\n1\t1\t1\n");
  CHECK(run({"sieve", "--log", single}).code == cli::kSingleBase);
}

TEST_CASE("cli verify") {
  const CliResult quick = run({"verify", "--n", "1"});
  CHECK(quick.code == 0);
  CHECK(quick.out.find("PASS") != std::string::npos);
  const CliResult full = run({"verify", "--n", "2", "--verify-level", "full"});
  CHECK(full.code == 0);
  CHECK(full.out.find("trace_identity") != std::string::npos);
  CHECK(full.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--n", "7"}).code == cli::kDenseCap);
  CHECK(run({"verify", "--n", "1", "--verify-level", "deep"}).code == cli::kUsage);
}

TEST_CASE("cli outputs are identical across runs and worker counts") {
  TempDir dir("det");
  const auto ch = dir.write("ch.json", R"({"n": 2, "kind": "amplitude_damping", "gamma": 0.3})");
  const std::vector<std::vector<std::string>> commands = {
      {"estimate-diag", "--channel", ch, "--m", "XZ", "--M", "5000", "--seed", "9"},
      {"estimate-diag", "--channel", ch, "--m", "XZ", "--M", "5000", "--seed", "9", "--mode", "exact"},
      {"estimate-offdiag", "--channel", ch, "--m", "II", "--n-label", "ZI", "--M", "5000", "--seed", "9"},
      {"verify", "--n", "2"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    const CliResult a = run(cmd);
    const CliResult b = run(cmd);
    REQUIRE(a.code == 0);
    CHECK(strip_timestamp(a.out) == strip_timestamp(b.out));
    if (cmd[0] != "verify") {
      auto threaded = cmd;
      threaded.insert(threaded.end(), {"--workers", "3"});
      CHECK(strip_timestamp(run(threaded).out) == strip_timestamp(a.out));
    }
  }

  const auto l1 = dir.file("a.log"), l2 = dir.file("b.log");
  run({"triplets", "--channel", ch, "--M", "3000", "--seed", "5", "--out", l1});
  run({"triplets", "--channel", ch, "--M", "3000", "--seed", "5", "--out", l2, "--workers", "4"});
  CHECK(slurp(l1) == slurp(l2));
  CHECK(strip_timestamp(slurp(l1 + ".manifest.json")) == strip_timestamp(slurp(l2 + ".manifest.json")));
  const auto s1 = run({"sieve", "--log", l1, "--threshold", "0.05"});
  CHECK(strip_timestamp(s1.out) == strip_timestamp(run({"sieve", "--log", l1, "--threshold", "0.05"}).out));
  const auto d1 = run({"diag-from-log", "--log", l1, "--m", "II,ZZ"});
  CHECK(strip_timestamp(d1.out) == strip_timestamp(run({"diag-from-log", "--log", l1, "--m", "II,ZZ"}).out));
}

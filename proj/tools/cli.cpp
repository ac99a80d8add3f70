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

#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "seqpt/channel_spec.hpp"
#include "seqpt/error.hpp"
#include "seqpt/oracle.hpp"
#include "seqpt/report.hpp"
#include "seqpt/triplets.hpp"

namespace seqpt::cli {
namespace {

class HashMismatchError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string channel_path;
  std::string log_path;
  std::string m;
  std::vector<std::string> m_list;
  std::string n_label;
  std::optional<std::uint64_t> M;
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  std::string mode = "sampled";
  bool enumerate = false;
  double threshold = 0.1;
  std::string out;
  std::size_t workers = 0;
  int n = 1;
  std::string verify_level = "quick";
  bool verbose = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Channel load_channel(const std::string& path) { return build_channel(parse_channel_spec(read_file(path))); }

TripletLog load_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return read_triplet_log(in);
}

PauliLabel parse_label(const std::string& text, int n) {
  const PauliLabel label = PauliLabel::parse(text);
  if (label.qubits() != n)
    throw LabelParseError("label '" + text + "' has " + std::to_string(label.qubits()) + " qubits, channel has " +
                          std::to_string(n));
  return label;
}

EstimatorConfig estimator_config(const Options& o) {
  EstimatorConfig cfg;
  cfg.M = o.M;
  cfg.epsilon = o.epsilon;
  cfg.seed = o.seed;
  cfg.mode = o.mode == "exact" ? SimulationMode::exact : SimulationMode::sampled;
  cfg.enumerate_design = o.enumerate;
  cfg.workers = o.workers;
  return cfg;
}

json sample_size_echo(const Options& o) {
  json j;
  j["M"] = o.M ? json(*o.M) : json(nullptr);
  j["epsilon"] = o.epsilon ? json(*o.epsilon) : json(nullptr);
  return j;
}

json manifest(const std::string& command, const std::optional<std::string>& channel_hash, const json& config) {
  return {{"command", command},
          {"channel_hash", channel_hash ? json(*channel_hash) : json(nullptr)},
          {"config", config},
          {"tool_version", kToolVersion},
          {"timestamp", utc_timestamp()}};
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write '" + o.out + "'");
  f << text;
}

void emit_report(const Options& o, std::ostream& out, json report, json man) {
  report["manifest"] = std::move(man);
  emit(o, out, report.dump(2) + "\n");
}

/// Oracle chi when the channel is small enough for brute force.
std::optional<ChiMatrix> maybe_oracle(const KrausSet& k) {
  if (k.qubits() > oracle::kDefaultQubitCap) return std::nullopt;
  return oracle::exact_chi(k);
}

int cmd_estimate_diag(const Options& o, std::ostream& out) {
  const Channel ch = load_channel(o.channel_path);
  const PauliLabel m = parse_label(o.m, ch.qubits());
  ReportRow row;
  row.protocol = ProtocolKind::diagonal;
  row.m = m;
  row.estimate = estimate_chi_diag(ch.kraus, m, estimator_config(o));
  if (auto chi = maybe_oracle(ch.kraus)) row.oracle = (*chi)(m, m).real();
  json config = sample_size_echo(o);
  config.update({{"m", o.m}, {"seed", o.seed}, {"mode", o.mode}, {"enumerate", o.enumerate}});
  json inputs = config;
  inputs["channel"] = ch.spec;
  emit_report(o, out, estimation_report(inputs, {row}), manifest("estimate-diag", spec_hash(ch.spec), config));
  return kOk;
}

int cmd_estimate_offdiag(const Options& o, std::ostream& out) {
  const Channel ch = load_channel(o.channel_path);
  const PauliLabel m = parse_label(o.m, ch.qubits());
  const PauliLabel nl = parse_label(o.n_label, ch.qubits());
  ReportRow row;
  row.protocol = ProtocolKind::offdiagonal;
  row.m = m;
  row.n_label = nl;
  row.estimate = estimate_chi_offdiag(ch.kraus, m, nl, estimator_config(o));
  if (auto chi = maybe_oracle(ch.kraus)) row.oracle = (*chi)(m, nl);
  json config = sample_size_echo(o);
  config.update({{"m", o.m}, {"n_label", o.n_label}, {"seed", o.seed}, {"mode", o.mode}, {"enumerate", o.enumerate}});
  json inputs = config;
  inputs["channel"] = ch.spec;
  emit_report(o, out, estimation_report(inputs, {row}), manifest("estimate-offdiag", spec_hash(ch.spec), config));
  return kOk;
}

int cmd_triplets(const Options& o, std::ostream& out) {
  const Channel ch = load_channel(o.channel_path);
  EstimatorConfig cfg = estimator_config(o);
  cfg.mode = SimulationMode::sampled;
  cfg.enumerate_design = false;
  TripletLog log;
  log.n = ch.qubits();
  log.seed = o.seed;
  log.channel_hash = spec_hash(ch.spec);
  log.triplets = run_triplet_experiments(ch.kraus, cfg);
  std::ostringstream text;
  write_triplet_log(text, log);
  emit(o, out, text.str());

  json config = sample_size_echo(o);
  config["seed"] = o.seed;
  std::ofstream man(o.out + ".manifest.json", std::ios::binary);
  if (!man) throw Error("cannot write '" + o.out + ".manifest.json'");
  man << manifest("triplets", log.channel_hash, config).dump(2) << "\n";
  return kOk;
}

/// Loads the optional channel and checks it against the log header.
std::optional<Channel> matching_channel(const Options& o, const TripletLog& log) {
  if (o.channel_path.empty()) return std::nullopt;
  Channel ch = load_channel(o.channel_path);
  const std::string h = spec_hash(ch.spec);
  if (h != log.channel_hash)
    throw HashMismatchError("triplet log was recorded with channel " + log.channel_hash + ", spec hashes to " + h);
  return ch;
}

json log_echo(const TripletLog& log) {
  return {{"n", log.n}, {"seed", log.seed}, {"M", log.triplets.size()}, {"channel_hash", log.channel_hash}};
}

int cmd_diag_from_log(const Options& o, std::ostream& out) {
  const TripletLog log = load_log(o.log_path);
  const auto ch = matching_channel(o, log);
  const auto chi = ch ? maybe_oracle(ch->kraus) : std::nullopt;
  std::vector<ReportRow> rows;
  for (const auto& text : o.m_list) {
    ReportRow row;
    row.protocol = ProtocolKind::triplet_diagonal;
    row.m = parse_label(text, log.n);
    row.estimate = estimate_diag_from_triplets(log.n, log.triplets, row.m);
    if (chi) row.oracle = (*chi)(row.m, row.m).real();
    rows.push_back(row);
  }
  const json config = {{"m", o.m_list}, {"log", log_echo(log)}};
  emit_report(o, out, estimation_report(config, rows), manifest("diag-from-log", log.channel_hash, config));
  return kOk;
}

int cmd_sieve(const Options& o, std::ostream& out) {
  const TripletLog log = load_log(o.log_path);
  const auto ch = matching_channel(o, log);
  const auto chi = ch ? maybe_oracle(ch->kraus) : std::nullopt;
  SieveOptions opts;
  opts.threshold = o.threshold;
  opts.seed = o.seed;
  const SieveResult res = sieve_large_diagonals(log.n, log.triplets, opts);
  std::vector<ReportRow> rows;
  for (const auto& [label, est] : res.heavy) {
    ReportRow row;
    row.protocol = ProtocolKind::sieve;
    row.m = label;
    row.estimate = est;
    if (chi) row.oracle = (*chi)(label, label).real();
    rows.push_back(row);
  }
  const json config = {{"threshold", o.threshold}, {"seed", o.seed}, {"log", log_echo(log)}};
  json report = estimation_report(config, rows);
  const auto M = static_cast<std::uint64_t>(log.triplets.size());
  report["sieve"] = {{"pairs_processed", res.pairs_processed},
                     {"pair_bound", M * (M + 1) / 2},
                     {"systems_solved", res.systems_solved},
                     {"candidates", res.candidates},
                     {"subsampled", res.subsampled}};
  emit_report(o, out, report, manifest("sieve", log.channel_hash, config));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto rows = verify_suite(o.n, o.verify_level);
  std::ostringstream ss;
  ss << "verify n=" << o.n << " level=" << o.verify_level << "\n";
  ss << std::left << std::setw(26) << "identity" << std::setw(20) << "subject" << std::right << std::setw(12)
     << "residual" << std::setw(11) << "tolerance"
     << "  status\n";
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.passed();
    ss << std::left << std::setw(26) << r.identity << std::setw(20) << r.subject << std::right << std::scientific
       << std::setprecision(3) << std::setw(12) << r.residual << std::setprecision(1) << std::setw(11) << r.tolerance
       << std::defaultfloat << "  " << (r.passed() ? "pass" : "FAIL") << "\n";
  }
  ss << (ok ? "PASS" : "FAIL") << " (" << rows.size() << " checks)\n";
  emit(o, out, ss.str());
  return ok ? kOk : kVerifyFailed;
}

int report_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
  return code;
}

/// Routes library logging to err for the duration of one invocation.
class LogScope {
 public:
  LogScope(std::ostream& err, bool verbose) : previous_(spdlog::default_logger()) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("seqpt", sink);
    logger->set_level(verbose ? spdlog::level::debug : spdlog::level::warn);
    spdlog::set_default_logger(logger);
  }
  ~LogScope() { spdlog::set_default_logger(previous_); }
  LogScope(const LogScope&) = delete;
  LogScope& operator=(const LogScope&) = delete;

 private:
  std::shared_ptr<spdlog::logger> previous_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Selective process tomography over mutually unbiased bases", "seqpt"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", o.verbose, "Debug logging on stderr");

  auto add_channel = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--channel", o.channel_path, "Channel spec JSON file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_sampling = [&](CLI::App* c, bool with_mode) {
    auto* M = c->add_option("--M", o.M, "Experiments per campaign")->check(CLI::PositiveNumber);
    auto* eps = c->add_option("--epsilon", o.epsilon, "Target precision of the averaged observable");
    M->excludes(eps);
    eps->excludes(M);
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
    if (with_mode) {
      c->add_option("--mode", o.mode, "sampled or exact")->check(CLI::IsMember({"sampled", "exact"}));
      c->add_flag("--enumerate", o.enumerate, "Visit every design state once instead of sampling");
    }
  };

  auto* diag = app.add_subcommand("estimate-diag", "Estimate chi_mm with the survival protocol");
  add_channel(diag, true);
  diag->add_option("--m", o.m, "Pauli label")->required();
  add_sampling(diag, true);
  diag->add_option("--out", o.out, "Report path (default stdout)");

  auto* off = app.add_subcommand("estimate-offdiag", "Estimate chi_mn with the ancilla protocol");
  add_channel(off, true);
  off->add_option("--m", o.m, "Pauli label")->required();
  off->add_option("--n-label", o.n_label, "Second Pauli label")->required();
  add_sampling(off, true);
  off->add_option("--out", o.out, "Report path (default stdout)");

  auto* trip = app.add_subcommand("triplets", "Record (J, k, k') triplets");
  add_channel(trip, true);
  add_sampling(trip, false);
  trip->add_option("--out", o.out, "Triplet log path")->required();

  auto* from_log = app.add_subcommand("diag-from-log", "Estimate chi_mm for each label from a triplet log");
  from_log->add_option("--log", o.log_path, "Triplet log")->required()->check(CLI::ExistingFile);
  from_log->add_option("--m", o.m_list, "Pauli labels")->required()->delimiter(',');
  add_channel(from_log, false);
  from_log->add_option("--out", o.out, "Report path (default stdout)");

  auto* sieve = app.add_subcommand("sieve", "Find the large diagonal coefficients in a triplet log");
  sieve->add_option("--log", o.log_path, "Triplet log")->required()->check(CLI::ExistingFile);
  sieve->add_option("--threshold", o.threshold, "Keep labels whose estimate exceeds this")->check(CLI::PositiveNumber);
  sieve->add_option("--seed", o.seed, "Seed for pair subsampling");
  add_channel(sieve, false);
  sieve->add_option("--out", o.out, "Report path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the oracle identity suites");
  verify->add_option("--n", o.n, "Qubit count")->required();
  verify->add_option("--verify-level", o.verify_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--out", o.out, "Table path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "usage", e.what(), kUsage);
  }

  LogScope logs(err, o.verbose);
  try {
    if (diag->parsed()) return cmd_estimate_diag(o, out);
    if (off->parsed()) return cmd_estimate_offdiag(o, out);
    if (trip->parsed()) return cmd_triplets(o, out);
    if (from_log->parsed()) return cmd_diag_from_log(o, out);
    if (sieve->parsed()) return cmd_sieve(o, out);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    return report_error(err, "malformed_input", e.what(), kMalformedInput);
  } catch (const InvalidChannelError& e) {
    return report_error(err, "invalid_channel", e.what(), kMalformedInput);
  } catch (const LabelParseError& e) {
    return report_error(err, "invalid_label", e.what(), kInvalidLabel);
  } catch (const DimensionError& e) {
    return report_error(err, "invalid_label", e.what(), kInvalidLabel);
  } catch (const DenseCapError& e) {
    return report_error(err, "dense_cap", e.what(), kDenseCap);
  } catch (const HashMismatchError& e) {
    return report_error(err, "hash_mismatch", e.what(), kHashMismatch);
  } catch (const SingleBaseError& e) {
    return report_error(err, "single_base", e.what(), kSingleBase);
  } catch (const DomainError& e) {
    return report_error(err, "usage", e.what(), kUsage);
  } catch (const std::exception& e) {
    return report_error(err, "internal", e.what(), kInternal);
  }
}

}  // namespace seqpt::cli

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

#include "seqpt/triplets.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "experiment_plan.hpp"
#include "seqpt/error.hpp"

namespace seqpt {

namespace {

struct ClassCache {
  int n;
  std::unordered_map<std::uint64_t, MubClass> classes;
  TripletCost* cost;

  const MubClass& get(std::uint64_t J) {
    auto it = classes.find(J);
    if (it == classes.end()) {
      it = classes.emplace(J, mub_class(n, J)).first;
      if (cost) ++cost->classes_built;
    }
    return it->second;
  }
};

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("triplet log: bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<Triplet> run_triplet_experiments(const KrausSet& channel, const EstimatorConfig& cfg) {
  validate_kraus(channel);
  const int n = channel.qubits();
  const MubDesign& design = design_for(n);
  const std::uint64_t M = resolve_experiment_count(cfg, SampleSizeKind::fidelity);
  constexpr std::uint64_t kCampaign = 3;

  const auto plan = detail::plan_experiments(design, cfg, M, kCampaign);
  // Outcome distribution over k' for every prepared state.
  const auto probs = detail::tabulate_states<std::vector<double>>(design, plan, cfg.workers, [&](const DesignStateId& id) {
    const DensityMatrix out = apply_channel(channel, DensityMatrix::pure(n, design.state(id)));
    return design.base_probabilities(out, id.J);
  });

  std::vector<Triplet> out(plan.experiments);
  parallel_for(plan.experiments, cfg.workers, [&](std::size_t i) {
    const std::uint32_t flat = detail::state_for(plan, i);
    const DesignStateId id = design.id_at(flat);
    CounterRng rng = detail::experiment_rng(design, cfg, plan, kCampaign, i);
    out[i] = Triplet{id.J, id.k, static_cast<BitVec>(sample_discrete(probs[flat], rng.uniform()))};
  });
  return out;
}

Estimate estimate_diag_from_triplets(int n, const std::vector<Triplet>& triplets, const PauliLabel& m,
                                     TripletCost* cost) {
  if (triplets.empty()) throw DomainError("estimate_diag_from_triplets: no triplets");
  if (m.qubits() != n) throw DimensionError("estimate_diag_from_triplets: label qubit count mismatch");
  ClassCache cache{n, {}, cost};
  std::unordered_map<std::uint64_t, BitVec> pattern;  // J -> p_m(J)
  const std::uint64_t bases = mub_class_count(n);
  const BitVec mask = (BitVec{1} << n) - 1;

  std::uint64_t hits = 0;
  for (const Triplet& t : triplets) {
    if (t.J >= bases || (t.k & ~mask) || (t.k_out & ~mask)) throw DimensionError("triplet inconsistent with qubit count");
    auto it = pattern.find(t.J);
    if (it == pattern.end()) {
      it = pattern.emplace(t.J, commutation_vector(m, cache.get(t.J)).bits).first;
      if (cost) cost->symplectic_products += static_cast<std::uint64_t>(n);
    }
    if (cost) ++cost->triplet_checks;
    if ((t.k ^ t.k_out) == it->second) ++hits;
  }

  detail::Moments mom;
  mom.sum = static_cast<double>(hits);
  mom.sumsq = static_cast<double>(hits);
  mom.count = triplets.size();
  const double d = static_cast<double>(dim(n));
  Estimate est;
  est.M = mom.count;
  est.value = ((d + 1.0) * mom.mean() - 1.0) / d;
  est.observable_std_error = mom.standard_error();
  est.std_error_re = (d + 1.0) / d * est.observable_std_error;
  return est;
}

SieveResult sieve_large_diagonals(int n, const std::vector<Triplet>& triplets, const SieveOptions& opts) {
  if (triplets.empty()) throw DomainError("sieve: no triplets");
  if (!(opts.threshold > 0.0)) throw DomainError("sieve: threshold must be positive");
  const std::uint64_t first_base = triplets.front().J;
  if (std::all_of(triplets.begin(), triplets.end(), [&](const Triplet& t) { return t.J == first_base; })) {
    throw SingleBaseError("sieve: all triplets come from one MUB base");
  }

  ClassCache cache{n, {}, nullptr};
  auto solve = [&](std::uint64_t ja, BitVec pa, std::uint64_t jb, BitVec pb) {
    return solve_label_from_constraints(cache.get(ja), {n, pa}, cache.get(jb), {n, pb});
  };

  SieveResult result;
  std::map<std::uint64_t, std::uint64_t> tally;  // label index -> votes
  const std::uint64_t M = triplets.size();

  if (M <= opts.full_pair_limit) {
    std::map<std::pair<std::uint64_t, BitVec>, std::uint64_t> groups;
    for (const Triplet& t : triplets) ++groups[{t.J, t.k ^ t.k_out}];
    const std::vector<std::pair<std::pair<std::uint64_t, BitVec>, std::uint64_t>> flat(groups.begin(), groups.end());
    for (std::size_t a = 0; a < flat.size(); ++a) {
      for (std::size_t b = a + 1; b < flat.size(); ++b) {
        if (flat[a].first.first == flat[b].first.first) continue;
        const PauliLabel label = solve(flat[a].first.first, flat[a].first.second, flat[b].first.first, flat[b].first.second);
        const std::uint64_t votes = flat[a].second * flat[b].second;
        tally[label.index()] += votes;
        result.pairs_processed += votes;
        ++result.systems_solved;
      }
    }
  } else {
    result.subsampled = true;
    spdlog::info("sieve: {} triplets, subsampling {} pairs", M, opts.max_sampled_pairs);
    CounterRng rng(opts.seed, 0);
    while (result.pairs_processed < opts.max_sampled_pairs) {
      const std::uint64_t i = rng.below(M), j = rng.below(M);
      const Triplet& a = triplets[i];
      const Triplet& b = triplets[j];
      if (a.J == b.J) continue;
      const PauliLabel label = solve(a.J, a.k ^ a.k_out, b.J, b.k ^ b.k_out);
      ++tally[label.index()];
      ++result.pairs_processed;
      ++result.systems_solved;
    }
  }

  result.candidates = tally.size();
  for (const auto& [index, votes] : tally) {
    const PauliLabel label = PauliLabel::from_index(n, index);
    const Estimate est = estimate_diag_from_triplets(n, triplets, label);
    if (est.value.real() > opts.threshold) result.heavy.emplace_back(label, est);
  }
  std::stable_sort(result.heavy.begin(), result.heavy.end(),
                   [](const auto& a, const auto& b) { return a.second.value.real() > b.second.value.real(); });
  return result;
}

void write_triplet_log(std::ostream& out, const TripletLog& log) {
  out << "# seqpt-triplets v1 n=" << log.n << " seed=" << log.seed << " M=" << log.triplets.size()
      << " channel=" << log.channel_hash << '\n';
  for (const Triplet& t : log.triplets)
    out << t.J << '\t' << bits_to_string(t.k, log.n) << '\t' << bits_to_string(t.k_out, log.n) << '\n';
}

TripletLog read_triplet_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("triplet log: empty file");
  std::istringstream header(line);
  std::string hash_mark, magic, version;
  header >> hash_mark >> magic >> version;
  if (hash_mark != "#" || magic != "seqpt-triplets" || version != "v1") throw ParseError("triplet log: bad header");

  TripletLog log;
  std::uint64_t expected = 0;
  bool have_n = false, have_seed = false, have_m = false, have_channel = false;
  std::string field;
  while (header >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("triplet log: bad header field '" + field + "'");
    const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "n") {
      log.n = static_cast<int>(parse_u64(value, "n"));
      have_n = true;
    } else if (key == "seed") {
      log.seed = parse_u64(value, "seed");
      have_seed = true;
    } else if (key == "M") {
      expected = parse_u64(value, "M");
      have_m = true;
    } else if (key == "channel") {
      log.channel_hash = value;
      have_channel = true;
    } else {
      throw ParseError("triplet log: unknown header field '" + key + "'");
    }
  }
  if (!(have_n && have_seed && have_m && have_channel)) throw ParseError("triplet log: incomplete header");
  if (log.n < 1 || log.n > kMaxSymbolicQubits) throw ParseError("triplet log: unsupported n");

  const std::uint64_t bases = mub_class_count(log.n);
  log.triplets.reserve(expected);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw ParseError("triplet log: line " + std::to_string(log.triplets.size() + 2) + " is not J<TAB>k<TAB>k'");
    }
    Triplet t;
    t.J = parse_u64(std::string_view(line).substr(0, t1), "base index");
    if (t.J >= bases) throw ParseError("triplet log: base index out of range");
    t.k = bits_from_string(std::string_view(line).substr(t1 + 1, t2 - t1 - 1), log.n);
    t.k_out = bits_from_string(std::string_view(line).substr(t2 + 1), log.n);
    log.triplets.push_back(t);
  }
  if (log.triplets.size() != expected) {
    throw ParseError("triplet log: header promises " + std::to_string(expected) + " triplets, found " +
                     std::to_string(log.triplets.size()));
  }
  return log;
}

}  // namespace seqpt

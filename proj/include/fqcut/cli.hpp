// Copyright 2026 The fqcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   verify | ex | lemmas | cut | decompose | oracle
//
// Exit codes: 0 all asserted checks pass, 1 mismatch or construction failure,
// 2 invalid arguments, 3 search budget exhausted without --allow-inexact.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fqcut/connectivity.hpp"
#include "fqcut/errors.hpp"
#include "fqcut/ex_oracle.hpp"
#include "fqcut/extremal.hpp"
#include "fqcut/graph_core.hpp"
#include "fqcut/lemma_suite.hpp"
#include "fqcut/report.hpp"

namespace fqcut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

enum class OutputFormat { kTable, kJson, kCsv };

/// Inclusive integer range; `last_is_max` defers the upper end to
/// max_theorem_g(n).
struct RangeSpec {
  std::uint64_t first = 1;
  std::uint64_t last = 1;
  bool first_is_max = false;
  bool last_is_max = false;

  std::vector<std::uint64_t> resolve(std::uint64_t max_value) const {
    const std::uint64_t lo = first_is_max ? max_value : first;
    const std::uint64_t hi = last_is_max ? max_value : last;
    if (lo > hi) {
      throw std::invalid_argument("empty range " + std::to_string(lo) + ".." +
                                  std::to_string(hi));
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
};

/// "7", "3..9", "max" or "1..max" (`max` only when allow_max).
inline RangeSpec parse_range(const std::string& text, bool allow_max) {
  auto parse_end = [&](const std::string& part, bool& is_max) -> std::uint64_t {
    if (part == "max") {
      if (!allow_max) throw std::invalid_argument("'max' is not valid here");
      is_max = true;
      return 0;
    }
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("not a nonnegative integer: '" + part + "'");
    }
    return std::stoull(part);
  };
  RangeSpec range;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    range.first = parse_end(text, range.first_is_max);
    range.last = range.first;
    range.last_is_max = range.first_is_max;
  } else {
    range.first = parse_end(text.substr(0, dots), range.first_is_max);
    range.last = parse_end(text.substr(dots + 2), range.last_is_max);
  }
  if (!range.first_is_max && !range.last_is_max && range.first > range.last) {
    throw std::invalid_argument("empty range '" + text + "'");
  }
  return range;
}

struct RunConfig {
  std::string command;
  RangeSpec n{5, 5};
  std::optional<RangeSpec> g;
  std::optional<RangeSpec> m;
  bool all_m = false;
  bool folded = false;
  bool with_oracle = false;
  SearchBudget budget;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::kTable;
  std::string out_path;
  bool allow_inexact = false;
  std::optional<LemmaId> lemma;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
  std::vector<ReportRow> rows;  // verify only
};

namespace detail {

inline std::vector<int> dimensions(const RunConfig& config) {
  std::vector<int> out;
  if (config.n.first_is_max || config.n.last_is_max ||
      config.n.last > static_cast<std::uint64_t>(kMaxDimension)) {
    throw std::invalid_argument("--n must lie in [" + std::to_string(kMinDimension) +
                                ", " + std::to_string(kMaxDimension) + "]");
  }
  for (std::uint64_t n : config.n.resolve(0)) {
    if (n < static_cast<std::uint64_t>(kMinDimension) ||
        n > static_cast<std::uint64_t>(kMaxDimension)) {
      throw std::invalid_argument("--n " + std::to_string(n) + " outside [" +
                                  std::to_string(kMinDimension) + ", " +
                                  std::to_string(kMaxDimension) + "]");
    }
    out.push_back(static_cast<int>(n));
  }
  return out;
}

inline int single_dimension(const RunConfig& config) {
  std::vector<int> ns = dimensions(config);
  if (ns.size() != 1) throw std::invalid_argument("this command takes one --n");
  return ns.front();
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename Range>
std::string join_numbers(const Range& values, const char* sep) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(std::to_string(v));
  return join(parts, sep);
}

/// Runs task(i) for i in [0, count) on `workers` threads. Results land by
/// index, so ordering never depends on the schedule. The first exception (by
/// index) is rethrown after all workers finish.
template <typename Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::string optional_number(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "null";
}

}  // namespace detail

/// One row per (n, g) in ascending order.
inline CommandOutput cmd_verify(const RunConfig& config) {
  struct Cell {
    int n;
    std::uint64_t g;
  };
  std::vector<Cell> cells;
  for (int n : detail::dimensions(config)) {
    if (n < kConstructionMinDimension) {
      throw std::invalid_argument("verify needs n >= 3");
    }
    RangeSpec g_spec = config.g.value_or(RangeSpec{1, 1, false, true});
    for (std::uint64_t g : g_spec.resolve(max_theorem_g(n))) {
      if (g < 1 || g > max_theorem_g(n)) {
        throw std::invalid_argument("g = " + std::to_string(g) +
                                    " outside [1, " +
                                    std::to_string(max_theorem_g(n)) +
                                    "] at n = " + std::to_string(n));
      }
      cells.push_back({n, g});
    }
  }

  CommandOutput output;
  std::vector<ReportRow> rows(cells.size());
  try {
    detail::parallel_for(cells.size(), config.workers, [&](std::size_t i) {
      auto start = std::chrono::steady_clock::now();
      TheoremReport report =
          verify_theorem(cells[i].n, cells[i].g, config.with_oracle, config.budget);
      std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      rows[i] = make_report_row(report, std::round(elapsed.count() * 1000.0) / 1000.0);
    });
  } catch (const ConstructionFailure& e) {
    output.exit_code = kExitMismatch;
    output.text = std::string("construction failure: ") + e.what() + "\n";
    return output;
  }

  bool mismatch = false;
  bool inexact = false;
  for (const ReportRow& row : rows) {
    if (row.in_theorem_range && !row.match) mismatch = true;
    if (row.oracle_value && !row.oracle_exact) inexact = true;
  }
  if (mismatch) {
    output.exit_code = kExitMismatch;
  } else if (inexact && !config.allow_inexact) {
    output.exit_code = kExitBudget;
  }

  switch (config.format) {
    case OutputFormat::kJson: output.text = rows_to_json(rows); break;
    case OutputFormat::kCsv: output.text = rows_to_csv(rows); break;
    case OutputFormat::kTable: output.text = rows_to_table(rows); break;
  }
  output.rows = std::move(rows);
  return output;
}

/// Closed form against the exhaustive oracle for each requested m.
inline CommandOutput cmd_ex(const RunConfig& config) {
  const int n = detail::single_dimension(config);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t half = total / 2;
  std::vector<std::uint64_t> sizes;
  if (config.all_m) {
    sizes = RangeSpec{1, total}.resolve(total);
  } else if (config.m) {
    sizes = config.m->resolve(total);
  } else {
    throw std::invalid_argument("ex needs --m or --all-m");
  }
  for (std::uint64_t m : sizes) {
    if (m < 1 || m > total) {
      throw std::invalid_argument("--m " + std::to_string(m) + " outside [1, 2^n]");
    }
  }
  if (config.with_oracle && n > kExOracleMaxDimension) {
    throw std::invalid_argument("--oracle supports n <= " +
                                std::to_string(kExOracleMaxDimension));
  }

  struct Row {
    std::uint64_t m;
    std::uint64_t closed;
    std::optional<ExOracleResult> oracle;
    std::optional<std::uint64_t> single_count;
  };
  std::vector<Row> rows(sizes.size());
  detail::parallel_for(sizes.size(), config.workers, [&](std::size_t i) {
    const std::uint64_t m = sizes[i];
    rows[i].m = m;
    rows[i].closed = ex_value(m, n, config.folded).degree_sum;
    if (config.with_oracle) rows[i].oracle = ex_oracle(m, n, config.folded, config.budget);
    if (config.folded && m > half) rows[i].single_count = ex_fqn_single_count(m, n);
  });

  bool disagree = false;
  bool inexact = false;
  std::size_t single_count_rows = 0;
  std::size_t single_count_wrong = 0;
  for (const Row& row : rows) {
    if (row.oracle) {
      if (!row.oracle->exact) inexact = true;
      else if (row.oracle->value.degree_sum != row.closed) disagree = true;
    }
    if (row.single_count) {
      ++single_count_rows;
      const std::uint64_t truth = row.oracle && row.oracle->exact
                                      ? row.oracle->value.degree_sum
                                      : row.closed;
      if (*row.single_count != truth) ++single_count_wrong;
    }
  }

  CommandOutput output;
  output.exit_code = disagree ? kExitMismatch
                     : (inexact && !config.allow_inexact) ? kExitBudget
                                                          : kExitOk;

  auto witness_text = [](const Row& row) {
    return row.oracle ? detail::join_numbers(row.oracle->witness, " ") : std::string("-");
  };
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const Row& row : rows) {
      nlohmann::ordered_json j;
      j["n"] = n;
      j["folded"] = config.folded;
      j["m"] = row.m;
      j["closed_form"] = row.closed;
      j["oracle"] = row.oracle ? nlohmann::ordered_json(row.oracle->value.degree_sum)
                               : nlohmann::ordered_json(nullptr);
      j["oracle_exact"] = row.oracle ? row.oracle->exact : false;
      j["witness"] = row.oracle ? nlohmann::ordered_json(std::vector<Vertex>(
                                      row.oracle->witness.begin(), row.oracle->witness.end()))
                                : nlohmann::ordered_json(nullptr);
      j["single_count"] = row.single_count ? nlohmann::ordered_json(*row.single_count)
                                           : nlohmann::ordered_json(nullptr);
      array.push_back(std::move(j));
    }
    output.text = array.dump(2) + "\n";
    return output;
  }

  TextTable table({"m", "closed_form", "oracle", "oracle_exact", "witness",
                   "single_count", "agree"});
  for (const Row& row : rows) {
    const bool agree = !row.oracle || !row.oracle->exact ||
                       row.oracle->value.degree_sum == row.closed;
    table.add_row({std::to_string(row.m), std::to_string(row.closed),
                   row.oracle ? std::to_string(row.oracle->value.degree_sum) : "null",
                   row.oracle ? (row.oracle->exact ? "true" : "false") : "false",
                   witness_text(row),
                   row.single_count ? std::to_string(*row.single_count) : "null",
                   agree ? "true" : "false"});
  }
  if (config.format == OutputFormat::kCsv) {
    output.text = table.render_csv();
    return output;
  }
  std::ostringstream out;
  out << (config.folded ? "FQ_" : "Q_") << n << ", ex_m as degree sum\n"
      << table.render();
  if (single_count_rows > 0) {
    out << "single_count counts each complementary pair once (+(m - 2^(n-1))); "
        << "it is wrong at " << single_count_wrong << " of " << single_count_rows
        << " rows past 2^(n-1), the doubled term +2(m - 2^(n-1)) is used\n";
  }
  output.text = out.str();
  return output;
}

inline CommandOutput cmd_lemmas(const RunConfig& config) {
  std::vector<LemmaSweep> sweeps;
  std::vector<std::pair<LemmaId, int>> jobs;
  for (int n : detail::dimensions(config)) {
    if (n > kLemmaSweepMaxDimension) {
      throw std::invalid_argument("lemma sweeps support n <= " +
                                  std::to_string(kLemmaSweepMaxDimension));
    }
    for (LemmaId id : kAllLemmas) {
      if (!config.lemma || *config.lemma == id) jobs.emplace_back(id, n);
    }
  }
  sweeps.resize(jobs.size());
  detail::parallel_for(jobs.size(), config.workers, [&](std::size_t i) {
    sweeps[i] = run_lemma_sweep(jobs[i].first, jobs[i].second);
  });

  CommandOutput output;
  bool all_pass = true;
  for (const LemmaSweep& s : sweeps) all_pass = all_pass && s.passed();
  output.exit_code = all_pass ? kExitOk : kExitMismatch;

  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const LemmaSweep& s : sweeps) {
      array.push_back({{"lemma", lemma_name(s.id)},
                       {"n", s.n},
                       {"cases", s.cases},
                       {"violations", s.violations},
                       {"passed", s.passed()},
                       {"first_violation", s.passed() ? nlohmann::ordered_json(nullptr)
                                                      : nlohmann::ordered_json(s.first_violation)}});
    }
    output.text = array.dump(2) + "\n";
    return output;
  }
  TextTable table({"lemma", "n", "cases", "violations", "status", "first_violation"});
  for (const LemmaSweep& s : sweeps) {
    table.add_row({lemma_name(s.id), std::to_string(s.n), std::to_string(s.cases),
                   std::to_string(s.violations), s.passed() ? "pass" : "FAIL",
                   s.passed() ? "-" : s.first_violation});
  }
  output.text = config.format == OutputFormat::kCsv ? table.render_csv() : table.render();
  return output;
}

inline CommandOutput cmd_cut(const RunConfig& config) {
  const int n = detail::single_dimension(config);
  if (!config.g) throw std::invalid_argument("cut needs --g");
  std::vector<std::uint64_t> gs = config.g->resolve(max_theorem_g(n));
  if (gs.size() != 1) throw std::invalid_argument("cut takes a single --g");
  const std::uint64_t g = gs.front();

  CommandOutput output;
  ConstructedCut built;
  try {
    built = build_cut(n, g);
  } catch (const ConstructionFailure& e) {
    output.exit_code = kExitMismatch;
    output.text = std::string("construction failure: ") + e.what() + "\n";
    return output;
  }
  CubeTopology topo(n, true);

  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (Edge e : built.cut) edges.push_back({e.u, e.v});
    nlohmann::ordered_json j;
    j["n"] = n;
    j["g"] = g;
    j["size"] = built.cut.size();
    j["formula_value"] = formula_value(n, g);
    j["edges"] = std::move(edges);
    j["profile"] = {{"count", built.profile.count},
                    {"sizes", built.profile.sizes},
                    {"isolated_count", built.profile.isolated_count}};
    output.text = j.dump(2) + "\n";
    return output;
  }
  TextTable table({"u", "v", "dimension"});
  for (Edge e : built.cut) {
    const int dim = edge_dimension(topo, e);
    table.add_row({std::to_string(e.u), std::to_string(e.v),
                   dim == kComplementDimension ? "complement" : std::to_string(dim)});
  }
  if (config.format == OutputFormat::kCsv) {
    output.text = table.render_csv();
    return output;
  }
  std::ostringstream out;
  out << "FQ_" << n << ", g = " << g << ": cut size " << built.cut.size()
      << " (formula " << formula_value(n, g) << ")\n"
      << "profile: count " << built.profile.count << ", sizes ["
      << detail::join_numbers(built.profile.sizes, ",") << "], isolated "
      << built.profile.isolated_count << "\n"
      << table.render();
  output.text = out.str();
  return output;
}

inline CommandOutput cmd_decompose(const RunConfig& config) {
  if (!config.m) throw std::invalid_argument("decompose needs --m");
  std::vector<std::uint64_t> sizes = config.m->resolve(0);
  CommandOutput output;
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (std::uint64_t m : sizes) {
      GreedyDecomposition d = greedy_decompose(m);
      array.push_back({{"m", m}, {"exponents", d.exponents}, {"terms", d.term_count()}});
    }
    output.text = array.dump(2) + "\n";
    return output;
  }
  TextTable table({"m", "exponents", "terms"});
  for (std::uint64_t m : sizes) {
    GreedyDecomposition d = greedy_decompose(m);
    table.add_row({std::to_string(m), detail::join_numbers(d.exponents, " "),
                   std::to_string(d.term_count())});
  }
  output.text = config.format == OutputFormat::kCsv ? table.render_csv() : table.render();
  return output;
}

/// Exact c_lambda_{g+1}(FQ_n) for each requested g.
inline CommandOutput cmd_oracle(const RunConfig& config) {
  const int n = detail::single_dimension(config);
  if (!config.g) throw std::invalid_argument("oracle needs --g");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> gs = config.g->resolve(max_theorem_g(n));
  for (std::uint64_t g : gs) {
    if (g < 1 || g >= total || !clambda_oracle_supported(n, static_cast<int>(g + 1))) {
      throw std::invalid_argument("no exact oracle for n = " + std::to_string(n) +
                                  ", g = " + std::to_string(g));
    }
  }

  std::vector<ClambdaResult> results(gs.size());
  detail::parallel_for(gs.size(), config.workers, [&](std::size_t i) {
    results[i] = exact_clambda(n, static_cast<int>(gs[i] + 1), config.budget);
  });

  CommandOutput output;
  CubeTopology topo(n, true);
  bool mismatch = false;
  bool inexact = false;
  TextTable table({"n", "g", "k", "oracle", "exact", "method", "nodes",
                   "formula", "isolated", "block_sizes"});
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const ClambdaResult& r = results[i];
    const std::int64_t formula = formula_value(n, gs[i]);
    if (!r.exact) inexact = true;
    if (r.exact && r.value && in_theorem_range(n, gs[i]) &&
        static_cast<std::int64_t>(*r.value) != formula) {
      mismatch = true;
    }
    std::optional<std::uint64_t> isolated;
    std::vector<std::size_t> block_sizes;
    if (r.witness) {
      isolated = components_after_removal(topo, r.witness->cross_edges(topo)).isolated_count;
      block_sizes = r.witness->block_sizes();
    }
    const char* method =
        r.method == OracleMethod::kGlobalMinCut ? "global-min-cut" : "partition-search";
    table.add_row({std::to_string(n), std::to_string(gs[i]), std::to_string(gs[i] + 1),
                   detail::optional_number(r.value), r.exact ? "true" : "false", method,
                   std::to_string(r.nodes), std::to_string(formula),
                   detail::optional_number(isolated), detail::join_numbers(block_sizes, " ")});
    array.push_back({{"n", n},
                     {"g", gs[i]},
                     {"k", gs[i] + 1},
                     {"oracle_value", r.value ? nlohmann::ordered_json(*r.value)
                                              : nlohmann::ordered_json(nullptr)},
                     {"oracle_exact", r.exact},
                     {"method", method},
                     {"nodes", r.nodes},
                     {"formula_value", formula},
                     {"isolated_count", isolated ? nlohmann::ordered_json(*isolated)
                                                 : nlohmann::ordered_json(nullptr)},
                     {"block_sizes", block_sizes}});
  }
  output.exit_code = mismatch ? kExitMismatch
                     : (inexact && !config.allow_inexact) ? kExitBudget
                                                          : kExitOk;
  switch (config.format) {
    case OutputFormat::kJson: output.text = array.dump(2) + "\n"; break;
    case OutputFormat::kCsv: output.text = table.render_csv(); break;
    case OutputFormat::kTable: output.text = table.render(); break;
  }
  return output;
}

inline CommandOutput dispatch(const RunConfig& config) {
  if (config.command == "verify") return cmd_verify(config);
  if (config.command == "ex") return cmd_ex(config);
  if (config.command == "lemmas") return cmd_lemmas(config);
  if (config.command == "cut") return cmd_cut(config);
  if (config.command == "decompose") return cmd_decompose(config);
  if (config.command == "oracle") return cmd_oracle(config);
  throw std::invalid_argument("unknown command '" + config.command + "'");
}

/// Parses argv, runs the command, and writes its report to `out` (or to
/// --out). Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Component edge connectivity of folded hypercubes: formulas, "
               "explicit cuts and exact oracles"};
  app.require_subcommand(1);

  std::string n_text = "5";
  std::string g_text;
  std::string m_text;
  std::string format_text = "table";
  std::string lemma_text;
  RunConfig config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "dimension, N or A..B")->capture_default_str();
    sub->add_option("--format", format_text, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", config.out_path, "write the report to PATH");
    sub->add_option("--workers", config.workers, "worker threads")
        ->check(CLI::Range(1U, 256U))
        ->capture_default_str();
    sub->add_option("--budget", config.budget.max_nodes,
                    "search node-expansion limit")
        ->check(CLI::Range(1ULL, ~0ULL))
        ->capture_default_str();
    sub->add_flag("--allow-inexact", config.allow_inexact,
                  "do not fail when a search runs out of budget");
  };

  CLI::App* verify = app.add_subcommand("verify", "formula vs. explicit cut (vs. oracle)");
  add_common(verify);
  verify->add_option("--g", g_text, "N, A..B, max or A..max (default 1..max)");
  verify->add_flag("--oracle", config.with_oracle, "run the exact oracle");

  CLI::App* ex = app.add_subcommand("ex", "ex_m closed form vs. exhaustive oracle");
  add_common(ex);
  ex->add_option("--m", m_text, "set size, N or A..B");
  ex->add_flag("--all-m", config.all_m, "every m in [1, 2^n]");
  auto* folded_flag = ex->add_flag("--folded", config.folded, "use FQ_n");
  auto* plain_flag = ex->add_flag("--plain", "use Q_n (default)");
  folded_flag->excludes(plain_flag);
  ex->add_flag("--oracle", config.with_oracle, "run the exhaustive oracle");

  CLI::App* lemmas = app.add_subcommand("lemmas", "inequality and isomorphism sweeps");
  add_common(lemmas);
  lemmas->add_option("--lemma", lemma_text,
                     "one of superadditivity|isomorphism|xi-monotone|sublinearity|"
                     "merge-bound, or 2|6|9|10|11");

  CLI::App* cut = app.add_subcommand("cut", "print the explicit (g+1)-component cut");
  add_common(cut);
  cut->add_option("--g", g_text, "N or max")->required();

  CLI::App* decompose = app.add_subcommand("decompose", "binary decomposition of m");
  add_common(decompose);
  decompose->add_option("--m", m_text, "N or A..B")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "exact c_lambda_{g+1}(FQ_n)");
  add_common(oracle);
  oracle->add_option("--g", g_text, "N, A..B or max")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CommandOutput result;
  try {
    config.command = app.get_subcommands().front()->get_name();
    config.n = parse_range(n_text, false);
    if (!g_text.empty()) config.g = parse_range(g_text, true);
    if (!m_text.empty()) config.m = parse_range(m_text, false);
    config.format = format_text == "json"  ? OutputFormat::kJson
                    : format_text == "csv" ? OutputFormat::kCsv
                                           : OutputFormat::kTable;
    if (!lemma_text.empty()) {
      config.lemma = parse_lemma_id(lemma_text);
      if (!config.lemma) throw std::invalid_argument("unknown lemma '" + lemma_text + "'");
    }
    result = dispatch(config);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedScale& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << config.out_path << "\n";
      return kExitUsage;
    }
    file << result.text;
  }
  return result.exit_code;
}

}  // namespace fqcut::cli

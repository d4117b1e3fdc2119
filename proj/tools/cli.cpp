// Copyright 2026 The bia Authors
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

#include <charconv>
#include <cstdint>
#include <fstream>
#include <tuple>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bia/counting.hpp"
#include "bia/diophantine.hpp"
#include "bia/errors.hpp"
#include "bia/feasibility.hpp"
#include "bia/pattern.hpp"
#include "bia/schedule_io.hpp"
#include "bia/scheduler.hpp"
#include "bia/signaling.hpp"

namespace bia::cli {
namespace {

using Json = nlohmann::json;

// Shortest round-trip form, always with '.' as the decimal separator.
std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string join(const T& values) {
  std::string s;
  for (const auto& v : values) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}


std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text << '\n';
  if (!f) throw InputError("failed writing " + path);
}

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::int64_t n = 0;
  std::vector<std::int64_t> offsets;
  bool json = false;
  bool fail_on_infeasible = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const ChannelConfig cfg(a.n, a.offsets);
  const FeasibilityReport rep = check_config(cfg);
  std::vector<std::int64_t> lambda;
  if (rep.feasible) {
    const LambdaSolution sol = closed_form_solution(rep.profile);
    lambda.assign(sol.counts().begin(), sol.counts().end());
  }
  const auto s = rep.profile.base();
  if (a.json) {
    Json j = {{"N", cfg.coherence()},
              {"K", cfg.users()},
              {"offsets", std::vector<std::int64_t>(cfg.offsets().begin(),
                                                    cfg.offsets().end())},
              {"s", std::vector<std::int64_t>(s.begin(), s.end())},
              {"distinct_offsets", rep.distinct_offsets},
              {"sum", rep.sum},
              {"min", rep.min_gap},
              {"bound", rep.bound},
              {"threshold", rep.threshold},
              {"integer_threshold", rep.integer_threshold},
              {"feasible", rep.feasible}};
    if (rep.feasible) j["lambda"] = lambda;
    out << j.dump(2) << '\n';
  } else {
    out << "N=" << cfg.coherence() << " K=" << cfg.users()
        << " offsets=" << join(cfg.offsets()) << '\n'
        << "s=" << join(s) << '\n'
        << "sum(s)=" << rep.sum << " (K+1)*min(s)=" << rep.bound
        << " min gap=" << rep.min_gap << " needed=" << rep.integer_threshold
        << " (N/(K+1)=" << fmt(rep.threshold) << ")\n"
        << "distinct offsets: " << (rep.distinct_offsets ? "yes" : "no") << '\n'
        << "feasible: " << (rep.feasible ? "true" : "false") << '\n';
    if (rep.feasible) out << "lambda=" << join(lambda) << '\n';
  }
  if (!rep.feasible && a.fail_on_infeasible) return kExitFailure;
  return kExitOk;
}

// ---- region --------------------------------------------------------------

struct RegionArgs {
  std::int64_t n = 0;
  std::string format = "csv";
};

int cmd_region(const RegionArgs& a, std::ostream& out) {
  const FeasibleRegion region = feasible_region(a.n);
  const std::int64_t total = a.n * a.n;
  // Points are sorted row-major, so a single cursor marks the feasible cells.
  std::size_t cursor = 0;
  auto next_feasible = [&](std::int64_t n2, std::int64_t n3) {
    if (cursor < region.points.size() && region.points[cursor].first == n2 &&
        region.points[cursor].second == n3) {
      ++cursor;
      return true;
    }
    return false;
  };
  if (a.format == "json") {
    Json points = Json::array();
    for (std::int64_t n2 = 0; n2 < a.n; ++n2) {
      for (std::int64_t n3 = 0; n3 < a.n; ++n3) {
        points.push_back({{"n2", n2}, {"n3", n3}, {"feasible", next_feasible(n2, n3)}});
      }
    }
    Json j = {{"N", a.n},
              {"count", region.count()},
              {"total", total},
              {"ratio", region.ratio()},
              {"points", std::move(points)}};
    out << j.dump(2) << '\n';
  } else {
    out << "n2,n3,feasible\n";
    for (std::int64_t n2 = 0; n2 < a.n; ++n2) {
      for (std::int64_t n3 = 0; n3 < a.n; ++n3) {
        out << n2 << ',' << n3 << ',' << (next_feasible(n2, n3) ? 1 : 0) << '\n';
      }
    }
    out << "# count=" << region.count() << ",total=" << total
        << ",ratio=" << fmt(region.ratio()) << '\n';
  }
  return kExitOk;
}

// ---- decompose -----------------------------------------------------------

struct DecomposeArgs {
  std::int64_t n = 0;
  std::vector<std::int64_t> offsets;
  std::string out_path;
  bool all_solutions = false;
  std::uint64_t search_bound = kDefaultSearchBound;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  const ChannelConfig cfg(a.n, a.offsets);
  const FeasibilityReport rep = check_config(cfg);
  if (!rep.feasible) {
    err << "infeasible: condition violated: sum(s)=" << rep.sum
        << " > (K+1)*min(s)=" << rep.bound << " (s=" << join(rep.profile.base())
        << ")\n";
    return kExitFailure;
  }
  std::vector<Schedule> schedules;
  if (a.all_solutions) {
    for (const LambdaSolution& sol :
         brute_force_solve(rep.profile, SearchMode::kAll, a.search_bound)) {
      schedules.push_back(build_schedule(cfg, sol));
    }
    write_output(a.out_path, schedules_to_json(schedules), out);
  } else {
    schedules.push_back(build_schedule(cfg, closed_form_solution(rep.profile)));
    write_output(a.out_path, schedule_to_json(schedules.front()), out);
  }
  if (!a.out_path.empty() && a.out_path != "-") {
    out << "wrote " << schedules.size() << " schedule(s), "
        << schedules.front().tuples.size() << " tuples each, to " << a.out_path
        << '\n';
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string path;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const std::vector<Schedule> schedules = schedules_from_json(read_file(a.path));
  bool all_passed = true;
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    const Schedule& sched = schedules[i];
    if (schedules.size() > 1) out << "schedule " << i << ":\n";
    const ValidationReport val = validate_schedule(sched);
    if (!val.passed()) {
      all_passed = false;
      out << "result: FAIL (structure)\n";
      for (const std::string& issue : val.issues) out << "  " << issue << '\n';
      continue;
    }
    const SummaryReport rep =
        verify_schedule_end_to_end(sched, a.seed, a.trials, a.threads);
    all_passed = all_passed && rep.passed;
    out << "result: " << (rep.passed ? "PASS" : "FAIL") << '\n'
        << "trials: " << rep.trials << '\n'
        << "super-symbols: " << rep.super_symbols << '\n'
        << "alignment failures: " << rep.alignment_failures << '\n'
        << "decodability failures: " << rep.decodability_failures << '\n'
        << "max residual: " << fmt(rep.max_residual) << '\n'
        << "min singular value: " << fmt(rep.min_singular_value) << '\n'
        << "dof: " << dof_of_schedule(sched).str() << '\n'
        << "symbols/slot: " << fmt(rep.symbols_per_slot) << '\n';
  }
  return all_passed ? kExitOk : kExitFailure;
}

// ---- prob ----------------------------------------------------------------

struct ProbArgs {
  int n = 0;
  int k = 0;
  std::string k_range;
  int k_target = 3;
  std::string method = "mc";
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  std::string format = "csv";
  unsigned threads = 0;
  std::uint64_t guard = kDefaultEnumerationBound;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--K-range expects a:b");
  auto parse = [&](std::string_view part) {
    int v = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size()) {
      throw InputError("--K-range expects integers a:b, got '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const int lo = parse(sv.substr(0, colon));
  const int hi = parse(sv.substr(colon + 1));
  if (lo > hi) throw InputError("--K-range needs a <= b");
  return {lo, hi};
}

ProbabilityEstimate estimate(const ProbArgs& a, int users) {
  if (a.method == "bound") {
    return a.k_target == 3 ? p_upper_3(a.n, users) : p_2user(a.n, users);
  }
  if (a.method == "exact") {
    try {
      return p_exact(a.n, users, a.k_target, a.guard, a.threads);
    } catch (const ResourceError& e) {
      throw InputError(e.what());
    }
  }
  return monte_carlo_p(a.n, users, a.k_target, a.trials, a.seed, a.threads);
}

int cmd_prob(const ProbArgs& a, std::ostream& out) {
  int lo = a.k;
  int hi = a.k;
  if (!a.k_range.empty()) std::tie(lo, hi) = parse_range(a.k_range);
  std::vector<std::pair<int, ProbabilityEstimate>> rows;
  for (int users = lo; users <= hi; ++users) rows.emplace_back(users, estimate(a, users));

  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& [users, est] : rows) {
      Json row = {{"N", a.n},
                  {"K", users},
                  {"k_target", a.k_target},
                  {"method", a.method},
                  {"p", est.p},
                  {"half_width", est.half_width}};
      if (est.method == ProbabilityMethod::kMonteCarlo) {
        row["trials"] = est.trials;
        row["successes"] = est.successes;
      }
      arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "N,K,k_target,method,p,half_width\n";
    for (const auto& [users, est] : rows) {
      out << a.n << ',' << users << ',' << a.k_target << ',' << a.method << ','
          << fmt(est.p) << ',' << fmt(est.half_width) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blind interference alignment feasibility and scheduling tools", "bia"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide feasibility of a channel configuration");
  c->add_option("--N", check.n, "Coherence time")->required()->check(CLI::PositiveNumber);
  c->add_option("--offsets", check.offsets, "Comma-separated block offsets")
      ->required()
      ->delimiter(',');
  c->add_flag("--json", check.json, "Emit JSON");
  c->add_flag("--fail-on-infeasible", check.fail_on_infeasible,
              "Exit with status 1 when infeasible");

  RegionArgs region;
  auto* r = app.add_subcommand("region", "Feasible (n2, n3) offsets for 3 users");
  r->add_option("--N", region.n, "Coherence time")->required()->check(CLI::PositiveNumber);
  r->add_option("--format", region.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  DecomposeArgs decompose;
  auto* d = app.add_subcommand("decompose", "Write an alignment schedule as JSON");
  d->add_option("--N", decompose.n, "Coherence time")->required()->check(CLI::PositiveNumber);
  d->add_option("--offsets", decompose.offsets, "Comma-separated block offsets")
      ->required()
      ->delimiter(',');
  d->add_option("--out", decompose.out_path, "Output path (default: stdout)");
  d->add_flag("--all-solutions", decompose.all_solutions,
              "Enumerate every decomposition by exhaustive search");
  d->add_option("--search-bound", decompose.search_bound,
                "Candidate limit for --all-solutions");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a schedule on random channel draws");
  v->add_option("--schedule", verify.path, "Schedule JSON file")->required();
  v->add_option("--seed", verify.seed, "Random seed");
  v->add_option("--trials", verify.trials, "Channel draws")->check(CLI::PositiveNumber);
  v->add_option("--threads", verify.threads, "Worker cap (0 = hardware)");

  ProbArgs prob;
  auto* p = app.add_subcommand("prob", "Probability of a feasible user subset");
  p->add_option("--N", prob.n, "Coherence time")->required()->check(CLI::PositiveNumber);
  auto* k_opt = p->add_option("--K", prob.k, "Number of users");
  auto* range_opt = p->add_option("--K-range", prob.k_range, "Users a:b inclusive");
  k_opt->excludes(range_opt);
  p->add_option("--k-target", prob.k_target, "Subset size")
      ->check(CLI::IsMember({2, 3}));
  p->add_option("--method", prob.method, "bound, exact or mc")
      ->check(CLI::IsMember({"bound", "exact", "mc"}));
  p->add_option("--trials", prob.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  p->add_option("--seed", prob.seed, "Monte Carlo seed");
  p->add_option("--format", prob.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  p->add_option("--threads", prob.threads, "Worker cap (0 = hardware)");
  p->add_option("--guard", prob.guard, "Placement limit for --method exact");

  try {
    app.parse(argc, argv);
    if (p->parsed() && k_opt->count() == 0 && range_opt->count() == 0) {
      throw CLI::RequiredError("--K or --K-range");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    const auto parsed = app.get_subcommands();
    err << "error: " << e.what() << "\n\n"
        << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (r->parsed()) return cmd_region(region, out);
    if (d->parsed()) return cmd_decompose(decompose, out, err);
    if (v->parsed()) return cmd_verify(verify, out);
    if (p->parsed()) return cmd_prob(prob, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bia::cli

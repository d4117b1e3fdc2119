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

#include "bia/scheduler.hpp"

#include <numeric>

#include "bia/errors.hpp"

namespace bia {

Schedule build_schedule(const ChannelConfig& cfg, const LambdaSolution& lam) {
  const GroupLayout layout(cfg);
  const GroupProfile& s = layout.profile();
  if (lam.users() != cfg.users()) {
    throw ConsistencyError("lambda solution built for a different user count");
  }
  if (!verify_solution(s, lam) || s.min() == 0) {
    throw ConsistencyError(
        "lambda does not decompose this channel; run check_config and "
        "verify_solution first");
  }

  const auto k = static_cast<std::int64_t>(cfg.users());
  const std::int64_t m = layout.groups_per_period();
  Schedule sched{.config = cfg,
                 .lambda = {lam.counts().begin(), lam.counts().end()},
                 .tuples = {}};
  sched.tuples.reserve(static_cast<std::size_t>(cfg.coherence()));

  for (std::int64_t h = 0; h < m; ++h) {
    for (std::int64_t t = 0; t < lam[h]; ++t) {
      SuperSymbol sym{.start_group = h, .slots = {}};
      sym.slots.reserve(static_cast<std::size_t>(k + 1));
      for (std::int64_t d = 0; d <= k; ++d) {
        // Earlier starters in group h+d: those from groups h+d-K .. h-1.
        std::int64_t ahead = 0;
        for (std::int64_t j = h + d - k; j < h; ++j) ahead += lam[j];
        sym.slots.push_back(layout.group_start(h + d) + ahead + t);
      }
      sched.tuples.push_back(std::move(sym));
    }
  }
  return sched;
}

ValidationReport validate_schedule(const Schedule& sched) {
  ValidationReport report;
  const ChannelConfig& cfg = sched.config;
  const GroupLayout layout(cfg);
  const auto k = static_cast<std::int64_t>(cfg.users());
  const std::int64_t m = layout.groups_per_period();
  const std::int64_t period = layout.period();

  const auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    report.issues.push_back(std::move(msg));
  };

  if (static_cast<std::int64_t>(sched.tuples.size()) != cfg.coherence()) {
    fail(report.coverage, "coverage: expected " + std::to_string(cfg.coherence()) +
                              " super-symbols, found " +
                              std::to_string(sched.tuples.size()));
  }

  std::vector<int> hits(static_cast<std::size_t>(period), 0);
  for (std::size_t n = 0; n < sched.tuples.size(); ++n) {
    const SuperSymbol& sym = sched.tuples[n];
    const std::string tag = "super-symbol " + std::to_string(n);
    if (static_cast<std::int64_t>(sym.slots.size()) != k + 1) {
      fail(report.coverage, "coverage: " + tag + " has " +
                                std::to_string(sym.slots.size()) + " slots");
      report.consecutive = false;
      report.permutation = false;
      continue;
    }
    for (std::int64_t slot : sym.slots) {
      const std::int64_t r = ((slot % period) + period) % period;
      ++hits[static_cast<std::size_t>(r)];
    }

    if (sym.start_group < 0 || sym.start_group >= m) {
      fail(report.consecutive, "consecutiveness: " + tag +
                                   " has start group outside Z_" +
                                   std::to_string(m));
    } else {
      const std::int64_t g0 = layout.group_of(sym.slots[0]);
      bool ok = ((g0 % m) + m) % m == sym.start_group;
      for (std::int64_t d = 1; ok && d <= k; ++d) {
        ok = layout.group_of(sym.slots[static_cast<std::size_t>(d)]) == g0 + d;
      }
      if (!ok) {
        fail(report.consecutive, "consecutiveness: " + tag +
                                     " does not occupy consecutive groups "
                                     "from its start group");
      }
    }

    try {
      if (!is_feasible_pattern(pattern_matrix(cfg, sym.slots))) {
        fail(report.permutation,
             "pattern: " + tag + " is not a permutation pattern");
      }
    } catch (const InputError& e) {
      fail(report.permutation, "pattern: " + tag + ": " + e.what());
    }
  }

  for (std::int64_t r = 0; r < period; ++r) {
    const int h = hits[static_cast<std::size_t>(r)];
    if (h != 1) {
      fail(report.coverage, "coverage: residue " + std::to_string(r) +
                                " covered " + std::to_string(h) + " times");
    }
  }
  return report;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational dof_of_schedule(const Schedule& sched) {
  const auto k = static_cast<std::int64_t>(sched.config.users());
  const std::int64_t n = sched.config.coherence();
  return Rational::make(2 * k * n, (k + 1) * n);
}

}  // namespace bia

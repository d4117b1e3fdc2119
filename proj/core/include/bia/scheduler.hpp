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
#ifndef BIA_SCHEDULER_HPP_
#define BIA_SCHEDULER_HPP_

// Slot-level schedules: one period of (K+1)N slots decomposed into N
// super-symbols, each taking one slot from K+1 consecutive groups.

#include <cstdint>
#include <string>
#include <vector>

#include "bia/diophantine.hpp"
#include "bia/pattern.hpp"

namespace bia {

struct SuperSymbol {
  /// Group index in Z_{K(K+1)} holding the first slot.
  std::int64_t start_group = 0;
  /// K+1 absolute slots, one per consecutive group. Super-symbols that cross
  /// the period boundary keep slot numbers past the period end.
  std::vector<std::int64_t> slots;

  friend bool operator==(const SuperSymbol&, const SuperSymbol&) = default;
};

struct Schedule {
  ChannelConfig config;
  std::vector<std::int64_t> lambda;
  /// Canonical order: by start_group, then first slot.
  std::vector<SuperSymbol> tuples;

  std::int64_t period() const noexcept {
    return static_cast<std::int64_t>(config.users() + 1) * config.coherence();
  }
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Deterministic assignment: within every group, slots go first to the
/// super-symbols that started earliest, then to the lambda_g new ones.
/// Throws ConsistencyError if `lam` does not solve the system for `cfg`.
Schedule build_schedule(const ChannelConfig& cfg, const LambdaSolution& lam);

struct ValidationReport {
  bool coverage = true;          // every residue mod period exactly once
  bool consecutive = true;       // slots in groups g, g+1, ..., g+K
  bool permutation = true;       // each pattern matrix is a permutation
  std::vector<std::string> issues;

  bool passed() const noexcept { return coverage && consecutive && permutation; }
};

ValidationReport validate_schedule(const Schedule& sched);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Symbols delivered per slot: 2K per super-symbol, N super-symbols over
/// (K+1)N slots, i.e. 2K/(K+1).
Rational dof_of_schedule(const Schedule& sched);

}  // namespace bia

#endif  // BIA_SCHEDULER_HPP_

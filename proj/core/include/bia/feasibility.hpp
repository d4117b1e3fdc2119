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
#ifndef BIA_FEASIBILITY_HPP_
#define BIA_FEASIBILITY_HPP_

// Necessary and sufficient BIA-feasibility conditions for homogeneous
// broadcast channels, the offset-plane feasible region of 3-user channels,
// and feasible sub-channel search among many users.
//
// The condition used everywhere: a K-user channel is feasible iff
//   sum_k s_k <= (K+1) * min_k s_k,
// equivalently every circular gap between consecutive offsets is at least
// ceil(N / (K+1)). Duplicate offsets give a zero gap and are infeasible.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bia/pattern.hpp"

namespace bia {

/// max(s) <= 2 min(s). Necessary only; kept for diagnostics.
/// Throws InputError unless the profile has exactly 3 groups.
bool check_weak(const GroupProfile& s);

/// sum(s) <= (K+1) min(s), with K = s.users().
bool check_feasible(const GroupProfile& s);

struct FeasibilityReport {
  bool feasible = false;
  bool distinct_offsets = false;
  GroupProfile profile;
  std::int64_t min_gap = 0;
  std::int64_t sum = 0;          // == N
  std::int64_t bound = 0;        // (K+1) * min_gap
  double threshold = 0.0;        // N / (K+1)
  std::int64_t integer_threshold = 0;  // ceil(N / (K+1))
};

FeasibilityReport check_config(const ChannelConfig& cfg);

/// All circular gaps of `offsets` (taken mod N) are >= ceil(N / (K+1)).
bool circular_gap_check(std::span<const std::int64_t> offsets,
                        std::int64_t coherence);

struct FeasibleRegion {
  std::int64_t coherence = 0;
  /// (n2, n3) pairs with the benchmark at offset 0, in row-major order.
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  std::size_t count() const noexcept { return points.size(); }
  /// count / N^2
  double ratio() const noexcept;
};

/// Every (n2, n3) in [0, N)^2 for which offsets (0, n2, n3) are feasible.
FeasibleRegion feasible_region(std::int64_t coherence);

/// Lexicographically smallest set of `subset_size` user indices (zero-based)
/// whose offsets form a feasible sub-channel, or nullopt.
/// Throws InputError unless 2 <= subset_size <= offsets.size().
std::optional<std::vector<std::size_t>> find_feasible_subset(
    std::span<const std::int64_t> offsets, std::int64_t coherence,
    std::size_t subset_size);

}  // namespace bia

#endif  // BIA_FEASIBILITY_HPP_

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

#include "bia/feasibility.hpp"

#include <algorithm>
#include <string>

#include "bia/errors.hpp"

namespace bia {
namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Minimum circular gap of a sorted set of residues in [0, n).
std::int64_t min_circular_gap(std::span<const std::int64_t> sorted,
                              std::int64_t n) {
  std::int64_t best = n - sorted.back() + sorted.front();
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    best = std::min(best, sorted[i + 1] - sorted[i]);
  }
  return best;
}

}  // namespace

bool check_weak(const GroupProfile& s) {
  if (s.users() != 3) {
    throw InputError("the weak condition is defined for 3-user profiles, got " +
                     std::to_string(s.users()));
  }
  const auto base = s.base();
  return *std::max_element(base.begin(), base.end()) <= 2 * s.min();
}

bool check_feasible(const GroupProfile& s) {
  const auto k = static_cast<std::int64_t>(s.users());
  return s.total() <= (k + 1) * s.min();
}

FeasibilityReport check_config(const ChannelConfig& cfg) {
  const auto k = static_cast<std::int64_t>(cfg.users());
  const std::int64_t n = cfg.coherence();
  FeasibilityReport r{.profile = group_profile(cfg)};
  r.distinct_offsets = cfg.distinct_offsets();
  r.min_gap = r.profile.min();
  r.sum = r.profile.total();
  r.bound = (k + 1) * r.min_gap;
  r.threshold = static_cast<double>(n) / static_cast<double>(k + 1);
  r.integer_threshold = ceil_div(n, k + 1);
  r.feasible = check_feasible(r.profile);
  return r;
}

bool circular_gap_check(std::span<const std::int64_t> offsets,
                        std::int64_t coherence) {
  if (coherence < 1) throw InputError("coherence time must be >= 1");
  if (offsets.size() < 2) throw InputError("need at least 2 offsets");
  std::vector<std::int64_t> sorted;
  sorted.reserve(offsets.size());
  for (std::int64_t o : offsets) {
    sorted.push_back(((o % coherence) + coherence) % coherence);
  }
  std::sort(sorted.begin(), sorted.end());
  const auto k = static_cast<std::int64_t>(offsets.size());
  return min_circular_gap(sorted, coherence) >= ceil_div(coherence, k + 1);
}

double FeasibleRegion::ratio() const noexcept {
  if (coherence <= 0) return 0.0;
  return static_cast<double>(points.size()) /
         static_cast<double>(coherence * coherence);
}

FeasibleRegion feasible_region(std::int64_t coherence) {
  if (coherence < 1) throw InputError("coherence time must be >= 1");
  FeasibleRegion region;
  region.coherence = coherence;
  const std::int64_t need = ceil_div(coherence, 4);
  for (std::int64_t a = 0; a < coherence; ++a) {
    for (std::int64_t b = 0; b < coherence; ++b) {
      const std::int64_t lo = std::min(a, b);
      const std::int64_t hi = std::max(a, b);
      // Gaps of {0, lo, hi} on the ring.
      if (lo >= need && hi - lo >= need && coherence - hi >= need) {
        region.points.emplace_back(a, b);
      }
    }
  }
  return region;
}

std::optional<std::vector<std::size_t>> find_feasible_subset(
    std::span<const std::int64_t> offsets, std::int64_t coherence,
    std::size_t subset_size) {
  if (coherence < 1) throw InputError("coherence time must be >= 1");
  if (subset_size < 2 || subset_size > offsets.size()) {
    throw InputError("subset size must lie in [2, " +
                     std::to_string(offsets.size()) + "], got " +
                     std::to_string(subset_size));
  }
  const auto k = static_cast<std::int64_t>(subset_size);
  const std::int64_t need = ceil_div(coherence, k + 1);
  std::vector<std::int64_t> residues(offsets.size());
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    residues[i] = ((offsets[i] % coherence) + coherence) % coherence;
  }

  std::vector<std::size_t> idx(subset_size);
  for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
  std::vector<std::int64_t> chosen(subset_size);
  const std::size_t total = offsets.size();
  while (true) {
    for (std::size_t i = 0; i < subset_size; ++i) chosen[i] = residues[idx[i]];
    std::sort(chosen.begin(), chosen.end());
    if (min_circular_gap(chosen, coherence) >= need) return idx;

    // Advance to the next combination in lexicographic order.
    std::size_t pos = subset_size;
    while (pos > 0 && idx[pos - 1] == total - subset_size + (pos - 1)) --pos;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace bia

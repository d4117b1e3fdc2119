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
#ifndef BIA_TESTS_GENERATORS_HPP_
#define BIA_TESTS_GENERATORS_HPP_

// Random instance generators and slow reference implementations shared by the
// test binaries. The references avoid the library's algorithms on purpose.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "bia/bigint.hpp"
#include "bia/pattern.hpp"

namespace bia::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// A group profile with K entries, every entry >= its minimum m and total at
// most (K+1) m, so it is feasible by construction. Total <= max_total.
inline std::vector<std::int64_t> random_feasible_profile(Rng& rng, int users,
                                                         std::int64_t max_total) {
  const std::int64_t m = uniform(rng, 1, std::max<std::int64_t>(1, max_total / (users + 1)));
  std::vector<std::int64_t> s(static_cast<std::size_t>(users), m);
  std::int64_t budget = uniform(rng, 0, m);
  // Spread the slack unevenly: each step hands a random chunk to a random
  // entry other than a designated minimum holder.
  const auto keep = static_cast<std::size_t>(uniform(rng, 0, users - 1));
  while (budget > 0) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, users - 1));
    if (i == keep) continue;
    const std::int64_t chunk = uniform(rng, 1, budget);
    s[i] += chunk;
    budget -= chunk;
  }
  return s;
}

// Any profile with positive entries summing to `total`.
inline std::vector<std::int64_t> random_profile(Rng& rng, int users, std::int64_t total) {
  std::vector<std::int64_t> cuts;
  for (int i = 0; i < users - 1; ++i) cuts.push_back(uniform(rng, 0, total));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> s;
  std::int64_t prev = 0;
  for (std::int64_t c : cuts) {
    s.push_back(c - prev);
    prev = c;
  }
  s.push_back(total - prev);
  return s;
}

// Offsets realizing profile s (in ring order starting at user 0), then
// shifted by a random amount and with users 1..K-1 relabeled at random.
inline ChannelConfig config_from_profile(Rng& rng, const std::vector<std::int64_t>& s) {
  const std::int64_t n = std::accumulate(s.begin(), s.end(), std::int64_t{0});
  std::vector<std::int64_t> ring;
  std::int64_t pos = 0;
  for (std::int64_t gap : s) {
    ring.push_back(pos);
    pos += gap;
  }
  const std::int64_t shift = uniform(rng, 0, n - 1);
  for (auto& o : ring) o = (o + shift) % n;
  std::shuffle(ring.begin() + 1, ring.end(), rng);
  return ChannelConfig(n, ring);
}

inline ChannelConfig random_feasible_config(Rng& rng, int users, std::int64_t max_total) {
  return config_from_profile(rng, random_feasible_profile(rng, users, max_total));
}

// ---- reference implementations ------------------------------------------

// Gaps between consecutive occupied positions going around the ring.
inline std::vector<std::int64_t> ring_gaps(std::vector<std::int64_t> offsets, std::int64_t n) {
  for (auto& o : offsets) o = ((o % n) + n) % n;
  std::sort(offsets.begin(), offsets.end());
  std::vector<std::int64_t> gaps;
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i) gaps.push_back(offsets[i + 1] - offsets[i]);
  gaps.push_back(n - offsets.back() + offsets.front());
  return gaps;
}

// Every gap at least N/(K+1), compared without division.
inline bool reference_feasible(const std::vector<std::int64_t>& offsets, std::int64_t n) {
  const auto k = static_cast<std::int64_t>(offsets.size());
  for (std::int64_t g : ring_gaps(offsets, n)) {
    if (g * (k + 1) < n) return false;
  }
  return true;
}

// Direct summation of every window; no sliding.
inline bool reference_window_check(const std::vector<std::int64_t>& s,
                                   const std::vector<std::int64_t>& lam) {
  const auto k = static_cast<std::int64_t>(s.size());
  const std::int64_t len = k * (k + 1);
  if (static_cast<std::int64_t>(lam.size()) != len) return false;
  for (std::int64_t v : lam) {
    if (v < 0) return false;
  }
  for (std::int64_t i = 0; i < len; ++i) {
    std::int64_t sum = 0;
    for (std::int64_t j = i - k; j <= i; ++j) sum += lam[static_cast<std::size_t>(((j % len) + len) % len)];
    if (sum != s[static_cast<std::size_t>(i % k)]) return false;
  }
  return true;
}

// Placements of users 1..K-1 (user 0 at 0) with no feasible subset of
// `subset` users. Subsets are scanned as bitmasks.
inline std::uint64_t reference_count(int n, int users, int subset) {
  std::vector<std::int64_t> off(static_cast<std::size_t>(users), 0);
  std::uint64_t total = 1;
  for (int i = 1; i < users; ++i) total *= static_cast<std::uint64_t>(n);
  std::uint64_t misses = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 1; i < users; ++i) {
      off[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(n));
      c /= static_cast<std::uint64_t>(n);
    }
    bool found = false;
    for (unsigned mask = 0; mask < (1u << users) && !found; ++mask) {
      if (__builtin_popcount(mask) != subset) continue;
      std::vector<std::int64_t> pick;
      for (int i = 0; i < users; ++i) {
        if (mask & (1u << i)) pick.push_back(off[static_cast<std::size_t>(i)]);
      }
      found = reference_feasible(pick, n);
    }
    if (!found) ++misses;
  }
  return misses;
}

// Balls-in-boxes count by listing every assignment; designated boxes are
// 0..mu-1.
class GammaTable {
 public:
  BigInt operator()(int boxes, int balls, int mu) {
    if (mu > boxes) return 0;  // only ever multiplied by a zero coefficient
    const auto key = std::make_tuple(boxes, balls, mu);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<int> where(static_cast<std::size_t>(balls), 0);
    std::uint64_t count = 0;
    while (true) {
      std::uint32_t hit = 0;
      for (int b : where) {
        if (b < mu) hit |= 1u << b;
      }
      if (hit == (mu == 0 ? 0u : (1u << mu) - 1)) ++count;
      int pos = 0;
      while (pos < balls && ++where[static_cast<std::size_t>(pos)] == boxes) {
        where[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == balls) break;
    }
    memo_[key] = count;
    return count;
  }

 private:
  std::map<std::tuple<int, int, int>, BigInt> memo_;
};

inline BigInt ipow(std::int64_t base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// The lower bound assembled from its two event types with every nested sum
// written out over its original indices (arc end i, pentagon length j).
inline BigInt reference_f_low_3(int n_total, int users) {
  GammaTable gamma;
  const int t = users - 1;
  const int half = n_total / 2;
  const int quarter = n_total / 4;

  BigInt f1 = 1;
  for (int n = 2; n <= half; ++n) {
    f1 += 2 * (ipow(n, t) - ipow(n - 1, t)) + (n - 2) * gamma(n, t, 2);
  }

  BigInt f2 = ipow(2, t) - 1;
  for (int n = 3; n <= quarter + 1; ++n) {
    for (int i = half + 1; i <= n + half - 1; ++i) {
      f2 += 2 * (n - 3) * gamma(n, t, 3) + 3 * gamma(n, t, 2);
    }
  }
  for (int n = 4; n <= quarter + 1; ++n) {
    for (int i = half + 1; i <= n + half - 1; ++i) {
      for (int j = 3; j <= n - 2; ++j) f2 += (j - 2) * gamma(n, t, 4);
      f2 += (n - 3) * gamma(n, t, 3);
    }
  }
  for (int n = quarter + 2; n <= half; ++n) {
    for (int i = half + 1; i <= n + half - 1; ++i) {
      f2 += 2 * (half - n + 1) * gamma(n, t, 3);
      for (int j = n - quarter; j <= quarter; ++j) f2 += (j - 2) * gamma(n, t, 4);
    }
  }
  return f1 + f2;
}

}  // namespace bia::testing

#endif  // BIA_TESTS_GENERATORS_HPP_

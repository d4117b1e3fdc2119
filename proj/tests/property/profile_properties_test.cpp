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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "bia/diophantine.hpp"
#include "bia/errors.hpp"
#include "bia/feasibility.hpp"
#include "generators.hpp"

namespace bia {
namespace {

using testing::Rng;
using testing::uniform;
using Vec = std::vector<std::int64_t>;

Vec random_offsets(Rng& rng, int users, std::int64_t n) {
  Vec off;
  for (int i = 0; i < users; ++i) off.push_back(uniform(rng, 0, n - 1));
  return off;
}

TEST(ProfileProperty, SumsToCoherenceAndPositiveIffDistinct) {
  Rng rng(1);
  for (int trial = 0; trial < 3000; ++trial) {
    const int users = static_cast<int>(uniform(rng, 2, 7));
    const std::int64_t n = uniform(rng, 1, 60);
    const ChannelConfig cfg(n, random_offsets(rng, users, n));
    const GroupProfile s = group_profile(cfg);
    EXPECT_EQ(s.total(), n);
    EXPECT_EQ(s.min() > 0, cfg.distinct_offsets());
    for (std::int64_t i = -20; i < 20; ++i) EXPECT_EQ(s[i], s[i + users]);
  }
}

TEST(ProfileProperty, ShiftInvariant) {
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int users = static_cast<int>(uniform(rng, 2, 6));
    const std::int64_t n = uniform(rng, 2, 50);
    Vec off = random_offsets(rng, users, n);
    const GroupProfile before = group_profile(ChannelConfig(n, off));
    const std::int64_t shift = uniform(rng, 0, n - 1);
    for (auto& o : off) o += shift;
    EXPECT_EQ(group_profile(ChannelConfig(n, off)), before);
  }
}

TEST(FeasibilityProperty, AgreesWithReference) {
  Rng rng(3);
  for (int trial = 0; trial < 5000; ++trial) {
    const int users = static_cast<int>(uniform(rng, 2, 7));
    const std::int64_t n = uniform(rng, 1, 80);
    const Vec off = random_offsets(rng, users, n);
    const bool expected = testing::reference_feasible(off, n);
    EXPECT_EQ(check_config(ChannelConfig(n, off)).feasible, expected);
    EXPECT_EQ(circular_gap_check(off, n), expected);
  }
}

TEST(FeasibilityProperty, GeneratedConfigsAreFeasible) {
  Rng rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const int users = static_cast<int>(uniform(rng, 2, 8));
    const ChannelConfig cfg = testing::random_feasible_config(rng, users, 500);
    EXPECT_TRUE(check_config(cfg).feasible);
  }
}

TEST(FeasibilityProperty, ClosedUnderScaling) {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int users = static_cast<int>(uniform(rng, 2, 6));
    const Vec s = testing::random_profile(rng, users, uniform(rng, users, 40));
    Vec scaled = s;
    const std::int64_t c = uniform(rng, 2, 9);
    for (auto& x : scaled) x *= c;
    EXPECT_EQ(check_feasible(GroupProfile(s)), check_feasible(GroupProfile(scaled)));
  }
}

TEST(FeasibilityProperty, FoundSubsetPassesGapTest) {
  Rng rng(6);
  for (int trial = 0; trial < 2000; ++trial) {
    const int users = static_cast<int>(uniform(rng, 3, 7));
    const std::int64_t n = uniform(rng, 3, 40);
    const Vec off = random_offsets(rng, users, n);
    const auto k = static_cast<std::size_t>(uniform(rng, 2, users));
    const auto found = find_feasible_subset(off, n, k);
    if (!found) continue;
    Vec pick;
    for (std::size_t i : *found) pick.push_back(off[i]);
    EXPECT_EQ(pick.size(), k);
    EXPECT_TRUE(testing::reference_feasible(pick, n));
  }
}

TEST(ClosedFormProperty, CertificatesPassReferenceCheck) {
  Rng rng(7);
  for (int trial = 0; trial < 4000; ++trial) {
    const int users = static_cast<int>(uniform(rng, 2, 7));
    Vec s = testing::random_feasible_profile(rng, users, 3000);
    std::rotate(s.begin(), s.begin() + uniform(rng, 0, users - 1), s.end());
    const GroupProfile profile(s);
    const LambdaSolution lam = closed_form_solution(profile);
    const Vec counts(lam.counts().begin(), lam.counts().end());
    EXPECT_TRUE(testing::reference_window_check(s, counts));
    EXPECT_EQ(lam.total(), profile.total());
    if (users == 3) {
      const LambdaSolution alt = closed_form_solution_k3(profile);
      EXPECT_TRUE(testing::reference_window_check(s, Vec(alt.counts().begin(), alt.counts().end())));
    }
  }
}

TEST(ClosedFormProperty, InfeasibleProfilesThrow) {
  Rng rng(8);
  int checked = 0;
  while (checked < 500) {
    const int users = static_cast<int>(uniform(rng, 2, 6));
    const Vec s = testing::random_profile(rng, users, uniform(rng, users, 60));
    if (check_feasible(GroupProfile(s))) continue;
    EXPECT_THROW(closed_form_solution(GroupProfile(s)), InputError);
    ++checked;
  }
}

TEST(BruteForceProperty, NonemptyIffConditionHolds) {
  Rng rng(9);
  for (int trial = 0; trial < 400; ++trial) {
    const int users = static_cast<int>(uniform(rng, 2, 4));
    const Vec s = testing::random_profile(rng, users, uniform(rng, 1, 16));
    const auto all = brute_force_solve(GroupProfile(s), SearchMode::kAll);
    EXPECT_EQ(!all.empty(), check_feasible(GroupProfile(s)));
    for (const auto& lam : all) {
      EXPECT_TRUE(testing::reference_window_check(s, Vec(lam.counts().begin(), lam.counts().end())));
    }
  }
}

}  // namespace
}  // namespace bia

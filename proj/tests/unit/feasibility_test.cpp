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
#include <vector>

#include "bia/errors.hpp"
#include "bia/feasibility.hpp"

namespace bia {
namespace {

using Offsets = std::vector<std::int64_t>;

TEST(CheckWeakTest, Examples) {
  EXPECT_TRUE(check_weak(GroupProfile({1, 1, 2})));
  EXPECT_FALSE(check_weak(GroupProfile({1, 1, 3})));
  EXPECT_TRUE(check_weak(GroupProfile({5, 5, 10})));
  EXPECT_THROW(check_weak(GroupProfile({1, 1, 1, 1})), InputError);
}

TEST(CheckFeasibleTest, Examples) {
  EXPECT_TRUE(check_feasible(GroupProfile({1, 1, 2})));
  EXPECT_FALSE(check_feasible(GroupProfile({3, 3, 7})));
  EXPECT_TRUE(check_feasible(GroupProfile({5, 5, 5, 5})));
  EXPECT_FALSE(check_feasible(GroupProfile({0, 4, 4})));
}

TEST(CheckFeasibleTest, WeakConditionIsNecessary) {
  // max <= 2 min holds, but 13 > 4 * 3.
  EXPECT_TRUE(check_weak(GroupProfile({3, 4, 6})));
  EXPECT_FALSE(check_feasible(GroupProfile({3, 4, 6})));
}

TEST(CheckConfigTest, Examples) {
  const FeasibilityReport four_slot = check_config(ChannelConfig(4, {0, 1, 2}));
  EXPECT_TRUE(four_slot.feasible);
  EXPECT_EQ(four_slot.min_gap, 1);
  EXPECT_EQ(four_slot.sum, 4);
  EXPECT_EQ(four_slot.bound, 4);
  EXPECT_DOUBLE_EQ(four_slot.threshold, 1.0);

  const FeasibilityReport dup = check_config(ChannelConfig(8, {0, 3, 3}));
  EXPECT_FALSE(dup.feasible);
  EXPECT_FALSE(dup.distinct_offsets);

  EXPECT_TRUE(check_config(ChannelConfig(20, {0, 5, 10})).feasible);
  EXPECT_FALSE(check_config(ChannelConfig(4, {0, 1})).feasible);
}

TEST(CircularGapTest, Examples) {
  EXPECT_TRUE(circular_gap_check(Offsets{0, 1, 2}, 4));
  EXPECT_TRUE(circular_gap_check(Offsets{0, 4, 8}, 16));
  EXPECT_FALSE(circular_gap_check(Offsets{0, 2, 8}, 16));
}

TEST(CircularGapTest, AgreesWithCheckConfigExhaustively) {
  for (std::int64_t n = 1; n <= 13; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t b = 0; b < n; ++b) {
        const Offsets off{0, a, b};
        EXPECT_EQ(circular_gap_check(off, n), check_config(ChannelConfig(n, off)).feasible)
            << n << ": " << a << "," << b;
      }
    }
  }
}

TEST(FeasibleRegionTest, PublishedCounts) {
  const FeasibleRegion r20 = feasible_region(20);
  EXPECT_EQ(r20.count(), 42u);
  EXPECT_DOUBLE_EQ(r20.ratio(), 0.105);
  const FeasibleRegion r21 = feasible_region(21);
  EXPECT_EQ(r21.count(), 20u);
  EXPECT_NEAR(r21.ratio(), 0.0454, 5e-5);
}

TEST(FeasibleRegionTest, SmallCases) {
  const FeasibleRegion r3 = feasible_region(3);
  using Point = std::pair<std::int64_t, std::int64_t>;
  EXPECT_EQ(r3.points, (std::vector<Point>{{1, 2}, {2, 1}}));
  EXPECT_EQ(feasible_region(1).count(), 0u);
  EXPECT_THROW(feasible_region(0), InputError);
}

TEST(FeasibleRegionTest, SymmetricUnderSwap) {
  const FeasibleRegion r = feasible_region(24);
  for (const auto& [a, b] : r.points) {
    EXPECT_TRUE(std::find(r.points.begin(), r.points.end(), std::make_pair(b, a)) !=
                r.points.end());
  }
}

TEST(FindFeasibleSubsetTest, Examples) {
  // Offsets 1, 10, 5 leave gaps (4, 5, 3); the other three triples fail.
  EXPECT_EQ(find_feasible_subset(Offsets{0, 1, 10, 5}, 12, 3),
            (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_FALSE(find_feasible_subset(Offsets{0, 1, 2, 6}, 12, 3).has_value());
  EXPECT_EQ(find_feasible_subset(Offsets{0, 4, 8}, 12, 3),
            (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(find_feasible_subset(Offsets{0, 5}, 12, 2), (std::vector<std::size_t>{0, 1}));
}

TEST(FindFeasibleSubsetTest, LexicographicallySmallest) {
  // Every triple holding users 0 and 1 has a gap of 1; {0,2,3} comes next.
  const Offsets off{0, 1, 4, 8, 9};
  EXPECT_EQ(find_feasible_subset(off, 12, 3), (std::vector<std::size_t>{0, 2, 3}));
}

TEST(FindFeasibleSubsetTest, RejectsBadSize) {
  EXPECT_THROW(find_feasible_subset(Offsets{0, 4, 8}, 12, 4), InputError);
  EXPECT_THROW(find_feasible_subset(Offsets{0, 4, 8}, 12, 1), InputError);
}

}  // namespace
}  // namespace bia

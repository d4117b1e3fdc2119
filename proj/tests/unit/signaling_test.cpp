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

#include <vector>

#include "bia/diophantine.hpp"
#include "bia/errors.hpp"
#include "bia/signaling.hpp"

namespace bia {
namespace {

using Slots = std::vector<std::int64_t>;
using Rows = std::vector<std::vector<int>>;

const ChannelConfig kFourSlot(4, {0, 1, 2});
const Slots kTile{3, 4, 5, 6};

BeamformingSet tile_beams() { return beamforming_vectors(pattern_matrix(kFourSlot, kTile)); }

TEST(BeamformingTest, Examples) {
  const BeamformingSet bf =
      beamforming_vectors(PatternMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(bf.v, (Rows{{0, 1, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_EQ(bf.u, bf.v);

  EXPECT_EQ(beamforming_vectors(PatternMatrix::from_rows({{1, 0}, {0, 1}})).v,
            (Rows{{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(beamforming_vectors(PatternMatrix::from_rows({{0, 1}, {1, 0}})).v,
            (Rows{{0, 1, 1}, {1, 1, 0}}));
}

TEST(BeamformingTest, RejectsNonPermutation) {
  EXPECT_THROW(beamforming_vectors(PatternMatrix::from_rows({{1, 0}, {1, 0}})), InputError);
}

TEST(ChannelDrawTest, Deterministic) {
  const ChannelRealization a = draw_channels(kFourSlot, 99, 0, 32);
  const ChannelRealization b = draw_channels(kFourSlot, 99, 0, 32);
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::int64_t slot = 0; slot < 32; ++slot) EXPECT_EQ(a.at_slot(u, slot), b.at_slot(u, slot));
  }
}

TEST(ChannelDrawTest, WindowIndependent) {
  const ChannelRealization wide = draw_channels(kFourSlot, 5, 0, 64);
  const ChannelRealization narrow = draw_channels(kFourSlot, 5, 20, 30);
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::int64_t slot = 20; slot < 30; ++slot) {
      EXPECT_EQ(wide.at_slot(u, slot), narrow.at_slot(u, slot));
    }
  }
  EXPECT_THROW(narrow.at_slot(0, 40), InputError);
}

TEST(ChannelDrawTest, BlockFading) {
  const ChannelRealization ch = draw_channels(kFourSlot, 7, 0, 40);
  for (std::size_t u = 0; u < 3; ++u) {
    for (std::int64_t slot = 0; slot + 1 < 40; ++slot) {
      const bool same = block_index(kFourSlot, u, slot) == block_index(kFourSlot, u, slot + 1);
      EXPECT_EQ(same, ch.at_slot(u, slot) == ch.at_slot(u, slot + 1));
    }
  }
}

TEST(ChannelDrawTest, MagnitudeFloor) {
  for (std::int64_t block = 0; block < 2000; ++block) {
    for (const Complex& h : draw_block(3, 1, block)) EXPECT_GE(std::abs(h), kMagnitudeFloor);
  }
}

TEST(AlignmentTest, FeasibleTupleAligns) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const AlignmentReport rep =
        verify_alignment(kFourSlot, kTile, tile_beams(), draw_channels(kFourSlot, seed, 0, 16));
    EXPECT_TRUE(rep.passed);
    EXPECT_LT(rep.max_residual, kAlignmentTolerance);
    EXPECT_EQ(rep.pairs, 6u);
  }
}

TEST(AlignmentTest, WrongWindowMisaligns) {
  // Slots 0..3 have no transition for user 0 and two adjacent transitions
  // for users 1 and 2, so the tile's vectors straddle a change at receiver 2.
  const Slots slots{0, 1, 2, 3};
  const AlignmentReport rep =
      verify_alignment(kFourSlot, slots, tile_beams(), draw_channels(kFourSlot, 1, 0, 16));
  EXPECT_FALSE(rep.passed);
  EXPECT_GT(rep.max_residual, 1e-3);
}

TEST(AlignmentTest, ZeroInterfererCountsAsAligned) {
  BeamformingSet bf = tile_beams();
  bf.v[1].assign(4, 0);
  bf.u[1].assign(4, 0);
  const AlignmentReport rep =
      verify_alignment(kFourSlot, kTile, bf, draw_channels(kFourSlot, 2, 0, 16));
  EXPECT_TRUE(rep.passed);
}

TEST(DecodabilityTest, FeasibleTupleDecodes) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DecodabilityReport rep =
        verify_decodability(kFourSlot, kTile, tile_beams(), draw_channels(kFourSlot, seed, 0, 16));
    EXPECT_TRUE(rep.passed) << "seed " << seed;
    EXPECT_EQ(rep.per_receiver.size(), 3u);
    EXPECT_GT(rep.min_singular_value, kDecodabilityTolerance);
  }
}

TEST(DecodabilityTest, FrozenChannelFails) {
  ChannelRealization ch = draw_channels(kFourSlot, 4, 0, 16);
  // User 0 changes block between slots 3 and 4; make both blocks equal.
  ch.set_block(0, block_index(kFourSlot, 0, 4), ch.at_slot(0, 3));
  const DecodabilityReport rep = verify_decodability(kFourSlot, kTile, tile_beams(), ch);
  EXPECT_FALSE(rep.passed);
  EXPECT_LT(rep.per_receiver[0], 1e-9);
  EXPECT_GT(rep.per_receiver[1], 1e-9);
}

TEST(DecodabilityTest, TwoUsers) {
  const ChannelConfig cfg(3, {0, 1});
  const Schedule sched = build_schedule(cfg, closed_form_solution(group_profile(cfg)));
  const SummaryReport rep = verify_schedule_end_to_end(sched, 11, 100);
  EXPECT_TRUE(rep.passed);
  EXPECT_DOUBLE_EQ(rep.symbols_per_slot, 4.0 / 3.0);
}

TEST(EndToEndTest, FourSlotPipeline) {
  const SummaryReport rep = run_pipeline(kFourSlot, 2024, 100);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.trials, 100u);
  EXPECT_EQ(rep.super_symbols, 4u);
  EXPECT_EQ(rep.alignment_failures, 0u);
  EXPECT_EQ(rep.decodability_failures, 0u);
  EXPECT_DOUBLE_EQ(rep.symbols_per_slot, 1.5);
  EXPECT_EQ(rep.dof, Rational::make(3, 2));
}

TEST(EndToEndTest, InfeasibleRefused) {
  EXPECT_THROW(run_pipeline(ChannelConfig(8, {0, 3, 3}), 1, 1), InputError);
}

TEST(EndToEndTest, BothDecompositionsOfNonUniqueInstance) {
  const ChannelConfig cfg(11, {0, 3, 6});
  const auto all = brute_force_solve(group_profile(cfg), SearchMode::kAll);
  ASSERT_GE(all.size(), 2u);
  for (const LambdaSolution& lam : all) {
    EXPECT_TRUE(verify_schedule_end_to_end(build_schedule(cfg, lam), 8, 20).passed);
  }
}

TEST(EndToEndTest, IndependentOfThreadCount) {
  const ChannelConfig cfg(23, {0, 7, 12, 18});
  const Schedule sched = build_schedule(cfg, closed_form_solution(group_profile(cfg)));
  const SummaryReport one = verify_schedule_end_to_end(sched, 3, 16, 1);
  const SummaryReport four = verify_schedule_end_to_end(sched, 3, 16, 4);
  EXPECT_EQ(one.max_residual, four.max_residual);
  EXPECT_EQ(one.min_singular_value, four.min_singular_value);
}

TEST(EndToEndTest, RejectsInvalidSchedule) {
  const ChannelConfig cfg(4, {0, 1, 2});
  Schedule sched = build_schedule(cfg, closed_form_solution(group_profile(cfg)));
  sched.tuples[1].slots[0] = sched.tuples[0].slots[0];
  EXPECT_THROW(verify_schedule_end_to_end(sched, 1, 1), InputError);
}

}  // namespace
}  // namespace bia

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
#ifndef BIA_SIGNALING_HPP_
#define BIA_SIGNALING_HPP_

// Transmit-side beamforming for one super-symbol and a noiseless numerical
// witness that it aligns interference and leaves the desired streams
// decodable on random block-fading draws.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bia/pattern.hpp"
#include "bia/scheduler.hpp"

namespace bia {

using Complex = std::complex<double>;
/// Coefficients (h_i1, h_i2) from the two transmit antennas to one user.
using ChannelVector = std::array<Complex, 2>;

inline constexpr double kMagnitudeFloor = 0.05;
inline constexpr double kAlignmentTolerance = 1e-9;
inline constexpr double kDecodabilityTolerance = 1e-9;

/// Per-user block-fading coefficients over a finite slot window. A block's
/// coefficients depend only on (seed, user, block label), never on the
/// window, so overlapping realizations agree.
class ChannelRealization {
 public:
  ChannelRealization(ChannelConfig cfg, std::uint64_t seed,
                     std::int64_t first_slot, std::int64_t end_slot);

  const ChannelConfig& config() const noexcept { return cfg_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Coefficients seen by `user` at `slot`. Throws InputError if the slot's
  /// block was not touched by the drawn window.
  const ChannelVector& at_slot(std::size_t user, std::int64_t slot) const;
  const ChannelVector& at_block(std::size_t user, std::int64_t block) const;
  /// Replaces one block's coefficients (used to construct degenerate cases).
  void set_block(std::size_t user, std::int64_t block, const ChannelVector& h);

 private:
  std::size_t locate(std::size_t user, std::int64_t block) const;

  ChannelConfig cfg_;
  std::uint64_t seed_;
  std::vector<std::int64_t> first_block_;
  std::vector<std::vector<ChannelVector>> blocks_;
};

/// Coefficients for one (user, block) pair: independent standard normal real
/// and imaginary parts, redrawn until the magnitude reaches kMagnitudeFloor.
ChannelVector draw_block(std::uint64_t seed, std::size_t user,
                         std::int64_t block);

/// Draws every block touched by slots in [first_slot, end_slot).
ChannelRealization draw_channels(const ChannelConfig& cfg, std::uint64_t seed,
                                 std::int64_t first_slot,
                                 std::int64_t end_slot);

/// v[i] and u[i] are 0/1 vectors of length K+1 for user i's streams at the
/// first and second antenna.
struct BeamformingSet {
  std::vector<std::vector<int>> v;
  std::vector<std::vector<int>> u;
};

/// v_i = u_i = indicator of the two slots straddling user i's transition
/// column. Throws InputError unless M is a permutation matrix.
BeamformingSet beamforming_vectors(const PatternMatrix& m);

struct AlignmentReport {
  /// Max over (receiver, interferer) of sigma_min / sigma_max of the two
  /// received interference directions.
  double max_residual = 0.0;
  std::size_t pairs = 0;
  bool passed = true;
};

AlignmentReport verify_alignment(const ChannelConfig& cfg,
                                 std::span<const std::int64_t> slots,
                                 const BeamformingSet& bf,
                                 const ChannelRealization& ch);

struct DecodabilityReport {
  /// Smallest singular value of each receiver's column-normalized
  /// (K+1)x(K+1) signal matrix.
  std::vector<double> per_receiver;
  double min_singular_value = 0.0;
  bool passed = true;
};

DecodabilityReport verify_decodability(const ChannelConfig& cfg,
                                       std::span<const std::int64_t> slots,
                                       const BeamformingSet& bf,
                                       const ChannelRealization& ch);

struct SummaryReport {
  std::size_t trials = 0;
  std::size_t super_symbols = 0;
  std::size_t alignment_failures = 0;
  std::size_t decodability_failures = 0;
  double max_residual = 0.0;
  double min_singular_value = 0.0;
  Rational dof;
  bool passed = false;
  /// 2K/(K+1) when every check passed, else 0.
  double symbols_per_slot = 0.0;
};

/// Runs both verifiers on every super-symbol for `trials` independent
/// channel draws (trial t uses derive_seed(seed, t)). Throws InputError if
/// the schedule fails validate_schedule.
SummaryReport verify_schedule_end_to_end(const Schedule& sched,
                                         std::uint64_t seed, std::size_t trials,
                                         unsigned threads = 0);

/// check_config -> closed_form_solution -> build_schedule -> verification.
/// Throws InputError for an infeasible configuration.
SummaryReport run_pipeline(const ChannelConfig& cfg, std::uint64_t seed,
                           std::size_t trials, unsigned threads = 0);

}  // namespace bia

#endif  // BIA_SIGNALING_HPP_

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

#ifndef BIA_PATTERN_HPP_
#define BIA_PATTERN_HPP_

// Block-fading channel model of a homogeneous K-user 2x1 broadcast channel:
// slot -> fading block mapping, circular group sizes, and pattern matrices of
// candidate super-symbols.
//
// User indices are zero-based throughout the library; user 0 is the
// benchmark user whose block boundary anchors group 0.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bia/bigint.hpp"

namespace bia {

/// Coherence time N plus one block offset per user.
class ChannelConfig {
 public:
  /// Offsets are reduced modulo `coherence` (negative values included).
  /// Throws InputError if coherence < 1 or fewer than two users are given.
  ChannelConfig(std::int64_t coherence, std::vector<std::int64_t> offsets);

  std::int64_t coherence() const noexcept { return coherence_; }
  std::size_t users() const noexcept { return offsets_.size(); }
  std::span<const std::int64_t> offsets() const noexcept { return offsets_; }
  std::int64_t offset(std::size_t user) const;

  /// True when no two users share a block boundary.
  bool distinct_offsets() const;

  friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;

 private:
  std::int64_t coherence_;
  std::vector<std::int64_t> offsets_;
};

/// One period of circular group sizes s_0..s_{K-1}. Indexing with any
/// integer g reads s_{g mod K}, which is the extended view used by the
/// K(K+1)-group pattern array.
class GroupProfile {
 public:
  /// Throws InputError for fewer than two groups or a negative size.
  explicit GroupProfile(std::vector<std::int64_t> sizes);

  std::size_t users() const noexcept { return sizes_.size(); }
  std::span<const std::int64_t> base() const noexcept { return sizes_; }
  std::int64_t operator[](std::int64_t group) const noexcept;

  std::int64_t total() const noexcept;
  std::int64_t min() const noexcept;
  /// Smallest index attaining the minimum.
  std::size_t argmin() const noexcept;

  friend bool operator==(const GroupProfile&, const GroupProfile&) = default;

 private:
  std::vector<std::int64_t> sizes_;
};

/// Fading-block label of `user` at `slot`. Slots before the user's first
/// boundary carry label 0 when the offset is nonzero; a user with offset 0
/// starts a new block every N slots from slot 0. Two slots share a label iff
/// the user's channel is constant across them.
std::int64_t block_index(const ChannelConfig& cfg, std::size_t user,
                         std::int64_t slot);

/// Circular gaps between the sorted offsets, rotated so that group 0 starts
/// at the benchmark user's boundary. Duplicate offsets yield zero entries.
GroupProfile group_profile(const ChannelConfig& cfg);

/// Maps between absolute slots and the unbounded sequence of constant-channel
/// groups. Group g occupies [group_start(g), group_start(g + 1)) and has size
/// profile()[g]; group 0 begins at the benchmark user's offset.
class GroupLayout {
 public:
  explicit GroupLayout(const ChannelConfig& cfg);

  std::int64_t users() const noexcept;
  std::int64_t groups_per_period() const noexcept;  // K(K+1)
  std::int64_t period() const noexcept;             // (K+1)N
  const GroupProfile& profile() const noexcept { return profile_; }

  std::int64_t group_start(std::int64_t group) const noexcept;
  /// Group containing `slot`; negative for slots before the origin.
  std::int64_t group_of(std::int64_t slot) const noexcept;

 private:
  std::int64_t coherence_;
  std::int64_t origin_;
  std::vector<std::int64_t> boundaries_;  // rotated sorted offsets, [0] == 0
  GroupProfile profile_;
};

/// K x K binary matrix; entry (i, j) is 1 when user i's channel changes
/// between the j-th and (j+1)-th slot of a super-symbol.
class PatternMatrix {
 public:
  explicit PatternMatrix(std::size_t dim);
  /// Throws InputError unless `rows` is square with 0/1 entries.
  static PatternMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Permutation matrix with a 1 at (i, perm[i]).
  static PatternMatrix from_permutation(std::span<const std::size_t> perm);

  std::size_t dim() const noexcept { return dim_; }
  int at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, int value);

  int row_sum(std::size_t row) const;
  int col_sum(std::size_t col) const;

  friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<std::uint8_t> entries_;
};

/// Pattern matrix of the K+1 strictly increasing `slots`.
/// Throws InputError on wrong length or a non-increasing slot list.
PatternMatrix pattern_matrix(const ChannelConfig& cfg,
                             std::span<const std::int64_t> slots);

/// Pattern matrix from explicit block labels: labels[i][j] is user i's block
/// at the j-th selected slot. Every row must have the same length K+1 where
/// K is the number of rows.
PatternMatrix pattern_matrix_from_labels(
    const std::vector<std::vector<std::int64_t>>& labels);

/// True iff M is a permutation matrix (every row and column sums to 1).
bool is_feasible_pattern(const PatternMatrix& m);

/// K! as an exact integer. Throws InputError for K < 2.
BigInt count_feasible_patterns(int users);

/// All K! permutation matrices in lexicographic permutation order.
/// Throws ResourceError for K > 9.
std::vector<PatternMatrix> enumerate_feasible_patterns(int users);

}  // namespace bia

#endif  // BIA_PATTERN_HPP_

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

#include "bia/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bia/errors.hpp"

namespace bia {
namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

// Offsets relative to the benchmark user, sorted ascending. Element 0 is 0.
std::vector<std::int64_t> rotated_boundaries(const ChannelConfig& cfg) {
  const std::int64_t n = cfg.coherence();
  const std::int64_t origin = cfg.offset(0);
  std::vector<std::int64_t> r;
  r.reserve(cfg.users());
  for (std::int64_t o : cfg.offsets()) r.push_back(floor_mod(o - origin, n));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<std::int64_t> gaps_of(const std::vector<std::int64_t>& sorted,
                                  std::int64_t n) {
  std::vector<std::int64_t> gaps(sorted.size());
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    gaps[k] = sorted[k + 1] - sorted[k];
  }
  gaps.back() = n - sorted.back() + sorted.front();
  return gaps;
}

}  // namespace

ChannelConfig::ChannelConfig(std::int64_t coherence,
                             std::vector<std::int64_t> offsets)
    : coherence_(coherence), offsets_(std::move(offsets)) {
  if (coherence_ < 1) {
    throw InputError("coherence time must be >= 1, got " +
                     std::to_string(coherence_));
  }
  if (offsets_.size() < 2) {
    throw InputError("a broadcast channel needs at least 2 users, got " +
                     std::to_string(offsets_.size()));
  }
  for (auto& o : offsets_) o = floor_mod(o, coherence_);
}

std::int64_t ChannelConfig::offset(std::size_t user) const {
  if (user >= offsets_.size()) {
    throw InputError("user index " + std::to_string(user) +
                     " out of range for " + std::to_string(offsets_.size()) +
                     " users");
  }
  return offsets_[user];
}

bool ChannelConfig::distinct_offsets() const {
  std::vector<std::int64_t> sorted(offsets_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GroupProfile::GroupProfile(std::vector<std::int64_t> sizes)
    : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) {
    throw InputError("group profile needs at least 2 groups");
  }
  for (std::int64_t s : sizes_) {
    if (s < 0) throw InputError("group sizes must be nonnegative");
  }
}

std::int64_t GroupProfile::operator[](std::int64_t group) const noexcept {
  return sizes_[static_cast<std::size_t>(
      floor_mod(group, static_cast<std::int64_t>(sizes_.size())))];
}

std::int64_t GroupProfile::total() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::int64_t{0});
}

std::int64_t GroupProfile::min() const noexcept {
  return *std::min_element(sizes_.begin(), sizes_.end());
}

std::size_t GroupProfile::argmin() const noexcept {
  return static_cast<std::size_t>(
      std::min_element(sizes_.begin(), sizes_.end()) - sizes_.begin());
}

std::int64_t block_index(const ChannelConfig& cfg, std::size_t user,
                         std::int64_t slot) {
  const std::int64_t off = cfg.offset(user);
  if (slot < 0) throw InputError("slot index must be nonnegative");
  const std::int64_t n = cfg.coherence();
  return (slot + floor_mod(n - off, n)) / n;
}

GroupProfile group_profile(const ChannelConfig& cfg) {
  return GroupProfile(gaps_of(rotated_boundaries(cfg), cfg.coherence()));
}

GroupLayout::GroupLayout(const ChannelConfig& cfg)
    : coherence_(cfg.coherence()),
      origin_(cfg.offset(0)),
      boundaries_(rotated_boundaries(cfg)),
      profile_(gaps_of(boundaries_, cfg.coherence())) {}

std::int64_t GroupLayout::users() const noexcept {
  return static_cast<std::int64_t>(boundaries_.size());
}

std::int64_t GroupLayout::groups_per_period() const noexcept {
  return users() * (users() + 1);
}

std::int64_t GroupLayout::period() const noexcept {
  return (users() + 1) * coherence_;
}

std::int64_t GroupLayout::group_start(std::int64_t group) const noexcept {
  const std::int64_t k = users();
  return origin_ + floor_div(group, k) * coherence_ +
         boundaries_[static_cast<std::size_t>(floor_mod(group, k))];
}

std::int64_t GroupLayout::group_of(std::int64_t slot) const noexcept {
  const std::int64_t t = slot - origin_;
  const std::int64_t block = floor_div(t, coherence_);
  const std::int64_t within = t - block * coherence_;
  // Last boundary <= within; zero-size groups are skipped by upper_bound.
  const auto it =
      std::upper_bound(boundaries_.begin(), boundaries_.end(), within);
  const std::int64_t k = (it - boundaries_.begin()) - 1;
  return block * users() + k;
}

PatternMatrix::PatternMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, 0) {}

PatternMatrix PatternMatrix::from_rows(
    const std::vector<std::vector<int>>& rows) {
  PatternMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InputError("pattern matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

PatternMatrix PatternMatrix::from_permutation(
    std::span<const std::size_t> perm) {
  PatternMatrix m(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m.set(i, perm[i], 1);
  return m;
}

int PatternMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) throw InputError("pattern index out of range");
  return entries_[row * dim_ + col];
}

void PatternMatrix::set(std::size_t row, std::size_t col, int value) {
  if (row >= dim_ || col >= dim_) throw InputError("pattern index out of range");
  if (value != 0 && value != 1) throw InputError("pattern entries are 0 or 1");
  entries_[row * dim_ + col] = static_cast<std::uint8_t>(value);
}

int PatternMatrix::row_sum(std::size_t row) const {
  int sum = 0;
  for (std::size_t j = 0; j < dim_; ++j) sum += at(row, j);
  return sum;
}

int PatternMatrix::col_sum(std::size_t col) const {
  int sum = 0;
  for (std::size_t i = 0; i < dim_; ++i) sum += at(i, col);
  return sum;
}

PatternMatrix pattern_matrix(const ChannelConfig& cfg,
                             std::span<const std::int64_t> slots) {
  const std::size_t k = cfg.users();
  if (slots.size() != k + 1) {
    throw InputError("a super-symbol of " + std::to_string(k) +
                     " users spans exactly " + std::to_string(k + 1) +
                     " slots, got " + std::to_string(slots.size()));
  }
  for (std::size_t j = 0; j + 1 < slots.size(); ++j) {
    if (slots[j] >= slots[j + 1]) {
      throw InputError("super-symbol slots must be strictly increasing");
    }
  }
  PatternMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (block_index(cfg, i, slots[j]) != block_index(cfg, i, slots[j + 1])) {
        m.set(i, j, 1);
      }
    }
  }
  return m;
}

PatternMatrix pattern_matrix_from_labels(
    const std::vector<std::vector<std::int64_t>>& labels) {
  const std::size_t k = labels.size();
  PatternMatrix m(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (labels[i].size() != k + 1) {
      throw InputError("each label row must have K+1 entries");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (labels[i][j] != labels[i][j + 1]) m.set(i, j, 1);
    }
  }
  return m;
}

bool is_feasible_pattern(const PatternMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (m.row_sum(i) != 1 || m.col_sum(i) != 1) return false;
  }
  return m.dim() > 0;
}

BigInt count_feasible_patterns(int users) {
  if (users < 2) throw InputError("pattern counting needs K >= 2");
  BigInt f = 1;
  for (int i = 2; i <= users; ++i) f *= i;
  return f;
}

std::vector<PatternMatrix> enumerate_feasible_patterns(int users) {
  if (users < 2) throw InputError("pattern enumeration needs K >= 2");
  if (users > 9) {
    throw ResourceError("refusing to enumerate " + std::to_string(users) +
                        "! patterns; use count_feasible_patterns");
  }
  std::vector<std::size_t> perm(static_cast<std::size_t>(users));
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<PatternMatrix> out;
  do {
    out.push_back(PatternMatrix::from_permutation(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace bia

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
#ifndef BIA_DIOPHANTINE_HPP_
#define BIA_DIOPHANTINE_HPP_

// The cyclic banded Diophantine system certifying complete decomposition:
// for every i in Z_{K(K+1)},
//   s_{i mod K} = lambda_{i-K} + ... + lambda_{i}   (indices mod K(K+1)),
// with lambda_i >= 0 the number of super-symbols starting at group i.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bia/pattern.hpp"

namespace bia {

class LambdaSolution {
 public:
  LambdaSolution(std::size_t users, std::vector<std::int64_t> counts);

  std::size_t users() const noexcept { return users_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  /// Cyclic access: any integer index is reduced mod K(K+1).
  std::int64_t operator[](std::int64_t group) const noexcept;
  std::int64_t total() const noexcept;

  friend bool operator==(const LambdaSolution&, const LambdaSolution&) = default;
  friend auto operator<=>(const LambdaSolution& a, const LambdaSolution& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::size_t users_;
  std::vector<std::int64_t> counts_;
};

/// All window sums match s and all entries are nonnegative.
/// Throws InputError if lam.counts().size() != K(K+1) for K = s.users().
bool verify_solution(const GroupProfile& s, std::span<const std::int64_t> lam);
bool verify_solution(const GroupProfile& s, const LambdaSolution& lam);

/// General-K explicit solution. Rotates s so a minimal entry (smallest index
/// on ties) sits at position 0, applies the explicit formula, and rotates the
/// result back. Throws InputError("condition violated ...") when
/// check_feasible(s) is false.
LambdaSolution closed_form_solution(const GroupProfile& s);

/// The alternative 3-user construction built from x = s1 - s0, y = s0 - x.
/// Same rotation convention and error behaviour as closed_form_solution.
LambdaSolution closed_form_solution_k3(const GroupProfile& s);

enum class SearchMode { kFirst, kAll };

/// Default cap on the number of free-variable assignments the exhaustive
/// solver may visit.
inline constexpr std::uint64_t kDefaultSearchBound = 100'000'000;

/// Exhaustive depth-first search in index order. The first K unknowns are
/// free (bounded by prefix window sums); every later unknown is forced by
/// its window. Returns every solution (kAll) or at most one (kFirst), sorted
/// lexicographically; an empty result means the system has no nonnegative
/// solution. Throws ResourceError if the product of free-variable ranges
/// exceeds `search_bound`.
std::vector<LambdaSolution> brute_force_solve(
    const GroupProfile& s, SearchMode mode = SearchMode::kFirst,
    std::uint64_t search_bound = kDefaultSearchBound);

}  // namespace bia

#endif  // BIA_DIOPHANTINE_HPP_

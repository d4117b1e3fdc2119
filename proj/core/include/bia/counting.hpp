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
#ifndef BIA_COUNTING_HPP_
#define BIA_COUNTING_HPP_

// Counting offset placements that admit no feasible k-user sub-channel, and
// the probability of finding one when K-1 offsets are uniform on Z_N (user 0
// pinned at offset 0).
//
// Three routes are provided and cross-checked in the tests: closed-form
// counts (a lower bound for k = 3, an exact formula for k = 2), exhaustive
// enumeration, and Monte Carlo sampling.

#include <cstdint>
#include <string>

#include "bia/bigint.hpp"

namespace bia {

/// Stirling number of the second kind S(k, mu), via the alternating sum.
/// Throws InputError unless 0 <= mu <= k.
BigInt stirling2(int k, int mu);

/// Ways to drop `balls` labeled balls into `boxes` labeled boxes leaving
/// `required` designated boxes nonempty:
///   sum_{j=required}^{balls} C(balls, j) required! S(j, required)
///                           (boxes - required)^(balls - j).
/// Zero when required > balls. Throws InputError if required > boxes.
BigInt gamma_count(int boxes, int balls, int required);

/// Same count by inclusion-exclusion:
///   sum_{j=0}^{required} (-1)^j C(required, j) (boxes - j)^balls.
BigInt gamma_count_inclusion_exclusion(int boxes, int balls, int required);

enum class CountKind { kFormulaLowerBound, kFormula, kExactEnumeration };

struct CountResult {
  BigInt value;
  CountKind kind = CountKind::kExactEnumeration;
};

/// Closed-form lower bound on the number of placements with no feasible
/// 3-user subset. Requires N % 4 == 0 and K >= 3 (InputError otherwise).
CountResult f_low_3(int coherence, int users);

/// Closed-form number of placements with no feasible 2-user subset.
/// Requires N % 3 == 0 and K >= 2 (InputError otherwise).
CountResult f_2user(int coherence, int users);

inline constexpr std::uint64_t kDefaultEnumerationBound = 100'000'000;

/// Enumerates all N^(K-1) placements of users 1..K-1 with user 0 at 0 and
/// counts those where no `subset_size` users form a feasible sub-channel.
/// Throws ResourceError beyond `bound` placements (use monte_carlo_p).
CountResult exact_count(int coherence, int users, int subset_size,
                        std::uint64_t bound = kDefaultEnumerationBound,
                        unsigned threads = 0);

enum class ProbabilityMethod { kClosedFormBound, kClosedForm, kExact, kMonteCarlo };

std::string to_string(ProbabilityMethod m);

struct ProbabilityEstimate {
  double p = 0.0;
  ProbabilityMethod method = ProbabilityMethod::kExact;
  std::uint64_t trials = 0;      // Monte Carlo only
  std::uint64_t successes = 0;   // Monte Carlo only
  double half_width = 0.0;       // 95% normal-approximation half-width
  /// sqrt(p (1 - p) / trials) for Monte Carlo estimates.
  double standard_error() const noexcept;
};

/// 1 - count / N^(K-1) evaluated with 50 significant decimal digits before
/// rounding to double.
double probability_from_count(const BigInt& count, int coherence, int users);

/// Upper bound 1 - f_low_3 / N^(K-1) on the probability of a feasible
/// 3-user subset.
ProbabilityEstimate p_upper_3(int coherence, int users);

/// 1 - f_2user / N^(K-1).
ProbabilityEstimate p_2user(int coherence, int users);

/// 1 - exact_count / N^(K-1).
ProbabilityEstimate p_exact(int coherence, int users, int subset_size,
                            std::uint64_t bound = kDefaultEnumerationBound,
                            unsigned threads = 0);

/// Fraction of `trials` uniform placements that contain a feasible subset.
/// Trial t draws from derive_seed(seed, t), so the estimate does not depend
/// on the thread count.
ProbabilityEstimate monte_carlo_p(int coherence, int users, int subset_size,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads = 0);

struct TwoUserComparison {
  BigInt formula;
  BigInt enumerated;
  bool agrees() const { return formula == enumerated; }
};

/// f_2user against exhaustive enumeration for the same (N, K).
TwoUserComparison compare_f2user(int coherence, int users,
                                 std::uint64_t bound = kDefaultEnumerationBound,
                                 unsigned threads = 0);

}  // namespace bia

#endif  // BIA_COUNTING_HPP_

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

#include "bia/counting.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/integer.hpp>

#include "bia/errors.hpp"
#include "bia/feasibility.hpp"
#include "bia/random.hpp"
#include "parallel.hpp"

namespace bia {
namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

BigInt power(std::int64_t base, int exp) {
  // 0^0 == 1, matching the empty-placement convention.
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// gamma(n, K-1, mu) where a zero coefficient may multiply an undefined term
// (mu > n). Such terms vanish in the closed forms below.
BigInt gamma_or_zero(int boxes, int balls, int required) {
  if (required > boxes) return 0;
  return gamma_count(boxes, balls, required);
}

void require_users(int users, int min) {
  if (users < min) {
    throw InputError("need at least " + std::to_string(min) + " users, got " +
                     std::to_string(users));
  }
}

}  // namespace

BigInt stirling2(int k, int mu) {
  if (mu < 0 || mu > k) {
    throw InputError("stirling2 needs 0 <= mu <= k, got k=" + std::to_string(k) +
                     " mu=" + std::to_string(mu));
  }
  BigInt sum = 0;
  for (int j = 0; j <= mu; ++j) {
    BigInt term = binomial(mu, j) * power(j, k);
    if ((mu - j) % 2) sum -= term; else sum += term;
  }
  return sum / factorial(mu);
}

BigInt gamma_count(int boxes, int balls, int required) {
  if (boxes < 0 || balls < 0 || required < 0) {
    throw InputError("gamma_count arguments must be nonnegative");
  }
  if (required > boxes) {
    throw InputError("cannot designate " + std::to_string(required) +
                     " boxes out of " + std::to_string(boxes));
  }
  if (required > balls) return 0;
  const BigInt mu_fact = factorial(required);
  BigInt sum = 0;
  for (int j = required; j <= balls; ++j) {
    sum += binomial(balls, j) * mu_fact * stirling2(j, required) *
           power(boxes - required, balls - j);
  }
  return sum;
}

BigInt gamma_count_inclusion_exclusion(int boxes, int balls, int required) {
  if (boxes < 0 || balls < 0 || required < 0 || required > boxes) {
    throw InputError("gamma_count_inclusion_exclusion needs 0 <= required <= boxes");
  }
  BigInt sum = 0;
  for (int j = 0; j <= required; ++j) {
    BigInt term = binomial(required, j) * power(boxes - j, balls);
    if (j % 2) sum -= term; else sum += term;
  }
  return sum;
}

CountResult f_low_3(int coherence, int users) {
  require_users(users, 3);
  if (coherence < 4 || coherence % 4 != 0) {
    throw InputError("the 3-user lower bound assumes N divisible by 4 (got N=" +
                     std::to_string(coherence) +
                     "); use exact enumeration or Monte Carlo instead");
  }
  const int t = users - 1;
  const int half = coherence / 2;
  const int quarter = coherence / 4;

  // All users within an arc of at most N/2 boxes.
  BigInt type1 = 1;
  for (int n = 2; n <= half; ++n) {
    type1 += 2 * (power(n, t) - power(n - 1, t)) + (n - 2) * gamma_or_zero(n, t, 2);
  }

  // Users split over two short arcs.
  BigInt type2 = power(2, t) - 1;
  for (int n = 3; n <= quarter + 1; ++n) {
    type2 += (n - 1) * (2 * (n - 3) * gamma_or_zero(n, t, 3) +
                        3 * gamma_or_zero(n, t, 2));
  }
  for (int n = 3; n <= quarter + 1; ++n) {
    const int inner = (n - 3) * (n - 4) / 2;  // sum_{j=3}^{n-2} (j - 2)
    BigInt term = (n - 3) * gamma_or_zero(n, t, 3);
    if (inner != 0) term += inner * gamma_or_zero(n, t, 4);
    type2 += (n - 1) * term;
  }
  for (int n = quarter + 2; n <= half; ++n) {
    const int arcs = half - n + 1;  // choices of j with n - N/4 <= j <= N/4
    // sum_{j=n-N/4}^{N/4} (j - 2) == arcs * (n - 4) / 2
    const int inner = arcs * (n - 4) / 2;
    BigInt term = 2 * arcs * gamma_or_zero(n, t, 3);
    if (inner != 0) term += inner * gamma_or_zero(n, t, 4);
    type2 += (n - 1) * term;
  }
  return {type1 + type2, CountKind::kFormulaLowerBound};
}

CountResult f_2user(int coherence, int users) {
  require_users(users, 2);
  if (coherence < 3 || coherence % 3 != 0) {
    throw InputError("the 2-user formula assumes N divisible by 3 (got N=" +
                     std::to_string(coherence) +
                     "); use exact enumeration or Monte Carlo instead");
  }
  const int t = users - 1;
  BigInt f = 1;
  for (int n = 2; n <= coherence / 3; ++n) {
    f += 2 * (power(n, t) - power(n - 1, t)) + (n - 2) * gamma_or_zero(n, t, 2);
  }
  return {f, CountKind::kFormula};
}

CountResult exact_count(int coherence, int users, int subset_size,
                        std::uint64_t bound, unsigned threads) {
  if (coherence < 1) throw InputError("coherence time must be >= 1");
  require_users(users, 2);
  if (subset_size < 2 || subset_size > users) {
    throw InputError("subset size must lie in [2, K]");
  }
  const BigInt total_big = power(coherence, users - 1);
  if (total_big > BigInt(bound)) {
    throw ResourceError("exact enumeration of " + total_big.str() +
                        " placements exceeds the bound " + std::to_string(bound) +
                        "; use Monte Carlo instead");
  }
  const auto total = total_big.convert_to<std::uint64_t>();
  const unsigned workers = detail::resolve_threads(threads, total);
  std::vector<std::uint64_t> misses(workers, 0);
  detail::parallel_chunks(total, workers, [&](unsigned w, std::size_t begin,
                                              std::size_t end) {
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(users), 0);
    for (std::size_t code = begin; code < end; ++code) {
      std::uint64_t rest = code;
      for (int i = users - 1; i >= 1; --i) {
        offsets[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(coherence));
        rest /= static_cast<std::uint64_t>(coherence);
      }
      if (!find_feasible_subset(offsets, coherence,
                                static_cast<std::size_t>(subset_size))) {
        ++misses[w];
      }
    }
  });
  std::uint64_t count = 0;
  for (std::uint64_t m : misses) count += m;
  return {BigInt(count), CountKind::kExactEnumeration};
}

std::string to_string(ProbabilityMethod m) {
  switch (m) {
    case ProbabilityMethod::kClosedFormBound: return "bound";
    case ProbabilityMethod::kClosedForm: return "formula";
    case ProbabilityMethod::kExact: return "exact";
    case ProbabilityMethod::kMonteCarlo: return "mc";
  }
  return "unknown";
}

double ProbabilityEstimate::standard_error() const noexcept {
  if (trials == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

double probability_from_count(const BigInt& count, int coherence, int users) {
  const BigInt total = power(coherence, users - 1);
  // Subtract in integers first so values near 0 keep their relative precision.
  const Decimal p = Decimal(total - count) / Decimal(total);
  return p.convert_to<double>();
}

ProbabilityEstimate p_upper_3(int coherence, int users) {
  const CountResult f = f_low_3(coherence, users);
  return {.p = probability_from_count(f.value, coherence, users),
          .method = ProbabilityMethod::kClosedFormBound};
}

ProbabilityEstimate p_2user(int coherence, int users) {
  const CountResult f = f_2user(coherence, users);
  return {.p = probability_from_count(f.value, coherence, users),
          .method = ProbabilityMethod::kClosedForm};
}

ProbabilityEstimate p_exact(int coherence, int users, int subset_size,
                            std::uint64_t bound, unsigned threads) {
  const CountResult f = exact_count(coherence, users, subset_size, bound, threads);
  return {.p = probability_from_count(f.value, coherence, users),
          .method = ProbabilityMethod::kExact};
}

ProbabilityEstimate monte_carlo_p(int coherence, int users, int subset_size,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned threads) {
  if (coherence < 1) throw InputError("coherence time must be >= 1");
  require_users(users, 2);
  if (subset_size < 2 || subset_size > users) {
    throw InputError("subset size must lie in [2, K]");
  }
  if (trials == 0) throw InputError("Monte Carlo needs at least one trial");

  const unsigned workers = detail::resolve_threads(threads, trials);
  std::vector<std::uint64_t> hits(workers, 0);
  detail::parallel_chunks(trials, workers, [&](unsigned w, std::size_t begin,
                                               std::size_t end) {
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(users), 0);
    std::uniform_int_distribution<std::int64_t> uniform(0, coherence - 1);
    for (std::size_t t = begin; t < end; ++t) {
      CounterRng rng(derive_seed(seed, t));
      for (int i = 1; i < users; ++i) {
        offsets[static_cast<std::size_t>(i)] = uniform(rng);
      }
      if (find_feasible_subset(offsets, coherence,
                               static_cast<std::size_t>(subset_size))) {
        ++hits[w];
      }
    }
  });
  ProbabilityEstimate est{.method = ProbabilityMethod::kMonteCarlo,
                          .trials = trials};
  for (std::uint64_t h : hits) est.successes += h;
  est.p = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.half_width = 1.96 * est.standard_error();
  return est;
}

TwoUserComparison compare_f2user(int coherence, int users, std::uint64_t bound,
                                 unsigned threads) {
  return {f_2user(coherence, users).value,
          exact_count(coherence, users, 2, bound, threads).value};
}

}  // namespace bia

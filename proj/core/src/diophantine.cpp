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

#include "bia/diophantine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bia/errors.hpp"
#include "bia/feasibility.hpp"

namespace bia {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::string describe(const GroupProfile& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.users(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.base()[i]);
  }
  return out + ")";
}

void require_feasible(const GroupProfile& s) {
  if (!check_feasible(s)) {
    const auto k = static_cast<std::int64_t>(s.users());
    throw InputError("condition violated: sum(s)=" + std::to_string(s.total()) +
                     " > (K+1)*min(s)=" + std::to_string((k + 1) * s.min()) +
                     " for s=" + describe(s));
  }
}

// Profile rotated left by r: result[k] = s[k + r].
GroupProfile rotate(const GroupProfile& s, std::size_t r) {
  std::vector<std::int64_t> out(s.users());
  for (std::size_t k = 0; k < s.users(); ++k) {
    out[k] = s[static_cast<std::int64_t>(k + r)];
  }
  return GroupProfile(std::move(out));
}

// Undo a left rotation of s by r: lambda_j = rotated_lambda_{j - r}.
LambdaSolution unrotate(const std::vector<std::int64_t>& rotated,
                        std::size_t users, std::size_t r) {
  const auto m = static_cast<std::int64_t>(rotated.size());
  std::vector<std::int64_t> out(rotated.size());
  for (std::int64_t j = 0; j < m; ++j) {
    out[static_cast<std::size_t>(j)] =
        rotated[static_cast<std::size_t>(mod(j - static_cast<std::int64_t>(r), m))];
  }
  return LambdaSolution(users, std::move(out));
}

}  // namespace

LambdaSolution::LambdaSolution(std::size_t users,
                               std::vector<std::int64_t> counts)
    : users_(users), counts_(std::move(counts)) {
  if (users_ < 2) throw InputError("lambda solution needs K >= 2");
  if (counts_.size() != users_ * (users_ + 1)) {
    throw InputError("lambda solution for K=" + std::to_string(users_) +
                     " must have " + std::to_string(users_ * (users_ + 1)) +
                     " entries, got " + std::to_string(counts_.size()));
  }
}

std::int64_t LambdaSolution::operator[](std::int64_t group) const noexcept {
  return counts_[static_cast<std::size_t>(
      mod(group, static_cast<std::int64_t>(counts_.size())))];
}

std::int64_t LambdaSolution::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

bool verify_solution(const GroupProfile& s,
                     std::span<const std::int64_t> lam) {
  const auto k = static_cast<std::int64_t>(s.users());
  const std::int64_t m = k * (k + 1);
  if (static_cast<std::int64_t>(lam.size()) != m) {
    throw InputError("lambda length " + std::to_string(lam.size()) +
                     " does not match K(K+1)=" + std::to_string(m));
  }
  if (std::any_of(lam.begin(), lam.end(), [](std::int64_t v) { return v < 0; })) {
    return false;
  }
  // Sliding window of width K+1 ending at i.
  std::int64_t window = 0;
  for (std::int64_t j = -k; j <= 0; ++j) window += lam[static_cast<std::size_t>(mod(j, m))];
  for (std::int64_t i = 0; i < m; ++i) {
    if (window != s[i]) return false;
    window += lam[static_cast<std::size_t>(mod(i + 1, m))];
    window -= lam[static_cast<std::size_t>(mod(i - k, m))];
  }
  return true;
}

bool verify_solution(const GroupProfile& s, const LambdaSolution& lam) {
  return verify_solution(s, lam.counts());
}

LambdaSolution closed_form_solution(const GroupProfile& s) {
  require_feasible(s);
  const std::size_t r = s.argmin();
  const GroupProfile t = rotate(s, r);
  const auto k = static_cast<std::int64_t>(t.users());
  const std::int64_t m = k * (k + 1);
  const std::int64_t s0 = t[0];

  std::int64_t tail = 0;  // s_1 + ... + s_{K-1}
  for (std::int64_t q = 1; q < k; ++q) tail += t[q];

  std::vector<std::int64_t> lam(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) lam[static_cast<std::size_t>(i)] = t[i] - s0;
  // Positions (j-1)K + j for j = 1..K-1.
  for (std::int64_t j = 1; j < k; ++j) {
    lam[static_cast<std::size_t>((j - 1) * k + j)] = (k - 1) * s0 - (tail - t[j]);
  }
  lam[static_cast<std::size_t>(k * k)] = k * s0 - tail;
  return unrotate(lam, t.users(), r);
}

LambdaSolution closed_form_solution_k3(const GroupProfile& s) {
  if (s.users() != 3) {
    throw InputError("the x/y construction applies to 3-user profiles only");
  }
  require_feasible(s);
  const std::size_t r = s.argmin();
  const GroupProfile t = rotate(s, r);
  const std::int64_t s0 = t[0], s1 = t[1], s2 = t[2];
  const std::int64_t x = s1 - s0;
  const std::int64_t y = s0 - x;
  const std::vector<std::int64_t> lam = {
      0,      x,           y,       0,          s1 - s0,     s2 - s1 + x,
      3 * s0 - s1 - s2,    s1 - s0, s2 - s1 + x, 0,          2 * s0 - s2,
      s2 - s0};
  return unrotate(lam, 3, r);
}

std::vector<LambdaSolution> brute_force_solve(const GroupProfile& s,
                                              SearchMode mode,
                                              std::uint64_t search_bound) {
  const auto k = static_cast<std::int64_t>(s.users());
  const std::int64_t m = k * (k + 1);

  // lambda_0..lambda_{K-1} are free; lambda_i <= s_i bounds each.
  long double space = 1.0L;
  for (std::int64_t i = 0; i < k; ++i) space *= static_cast<long double>(s[i] + 1);
  if (space > static_cast<long double>(search_bound)) {
    throw ResourceError("exhaustive search space of about " +
                        std::to_string(static_cast<double>(space)) +
                        " assignments exceeds the bound " +
                        std::to_string(search_bound));
  }

  std::vector<LambdaSolution> out;
  std::vector<std::int64_t> lam(static_cast<std::size_t>(m), 0);
  const auto at = [&](std::int64_t i) -> std::int64_t& {
    return lam[static_cast<std::size_t>(i)];
  };

  // Forced completion: window i = K..m-1 determines lambda_i; then the K
  // wrap-around windows 0..K-1 are checked.
  const auto complete = [&]() -> bool {
    std::int64_t window = 0;  // lambda_{i-K} .. lambda_{i-1}
    for (std::int64_t j = 0; j < k; ++j) window += at(j);
    for (std::int64_t i = k; i < m; ++i) {
      const std::int64_t v = s[i] - window;
      if (v < 0) return false;
      at(i) = v;
      window += v - at(i - k);
    }
    for (std::int64_t i = 0; i < k; ++i) {
      std::int64_t sum = 0;
      for (std::int64_t j = i - k; j <= i; ++j) sum += at(mod(j, m));
      if (sum != s[i]) return false;
    }
    return true;
  };

  // prefix = lambda_0 + ... + lambda_{depth-1}; window i < K contains this
  // prefix plus unknown wrap-around terms, so prefix_i <= s_i.
  const auto dfs = [&](auto&& self, std::int64_t depth,
                       std::int64_t prefix) -> bool {
    if (depth == k) {
      if (complete()) {
        out.emplace_back(s.users(), lam);
        if (mode == SearchMode::kFirst) return true;
      }
      return false;
    }
    for (std::int64_t v = 0; prefix + v <= s[depth]; ++v) {
      at(depth) = v;
      if (self(self, depth + 1, prefix + v)) return true;
    }
    at(depth) = 0;
    return false;
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bia

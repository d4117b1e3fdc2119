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

#include "bia/signaling.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "bia/diophantine.hpp"
#include "bia/errors.hpp"
#include "bia/feasibility.hpp"
#include "bia/random.hpp"
#include "parallel.hpp"

namespace bia {
namespace {

// Super-symbols span at most 7 users + 1 slots before Eigen falls back to
// heap storage; larger K still works.
using SmallMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;

double singular_ratio(const SmallMatrix& a) {
  const Eigen::JacobiSVD<SmallMatrix> svd(a);
  const auto& sv = svd.singularValues();
  const double top = sv(0);
  if (top == 0.0) return 0.0;
  return sv(sv.size() - 1) / top;
}

double min_singular(const SmallMatrix& a) {
  const Eigen::JacobiSVD<SmallMatrix> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace

ChannelVector draw_block(std::uint64_t seed, std::size_t user,
                         std::int64_t block) {
  CounterRng rng(derive_seed(seed, user, static_cast<std::uint64_t>(block)));
  std::normal_distribution<double> normal(0.0, 1.0);
  ChannelVector h;
  for (Complex& c : h) {
    do {
      c = Complex(normal(rng), normal(rng));
    } while (std::abs(c) < kMagnitudeFloor);
  }
  return h;
}

ChannelRealization::ChannelRealization(ChannelConfig cfg, std::uint64_t seed,
                                       std::int64_t first_slot,
                                       std::int64_t end_slot)
    : cfg_(std::move(cfg)), seed_(seed) {
  if (first_slot < 0 || end_slot <= first_slot) {
    throw InputError("channel window must be a nonempty range of slots >= 0");
  }
  const std::size_t k = cfg_.users();
  first_block_.resize(k);
  blocks_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t lo = block_index(cfg_, i, first_slot);
    const std::int64_t hi = block_index(cfg_, i, end_slot - 1);
    first_block_[i] = lo;
    blocks_[i].reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t b = lo; b <= hi; ++b) {
      blocks_[i].push_back(draw_block(seed_, i, b));
    }
  }
}

std::size_t ChannelRealization::locate(std::size_t user,
                                       std::int64_t block) const {
  if (user >= blocks_.size()) throw InputError("user index out of range");
  const std::int64_t rel = block - first_block_[user];
  if (rel < 0 || rel >= static_cast<std::int64_t>(blocks_[user].size())) {
    throw InputError("block " + std::to_string(block) +
                     " lies outside the drawn window");
  }
  return static_cast<std::size_t>(rel);
}

const ChannelVector& ChannelRealization::at_block(std::size_t user,
                                                  std::int64_t block) const {
  return blocks_[user][locate(user, block)];
}

const ChannelVector& ChannelRealization::at_slot(std::size_t user,
                                                 std::int64_t slot) const {
  return at_block(user, block_index(cfg_, user, slot));
}

void ChannelRealization::set_block(std::size_t user, std::int64_t block,
                                   const ChannelVector& h) {
  blocks_[user][locate(user, block)] = h;
}

ChannelRealization draw_channels(const ChannelConfig& cfg, std::uint64_t seed,
                                 std::int64_t first_slot,
                                 std::int64_t end_slot) {
  return ChannelRealization(cfg, seed, first_slot, end_slot);
}

BeamformingSet beamforming_vectors(const PatternMatrix& m) {
  if (!is_feasible_pattern(m)) {
    throw InputError("beamforming needs a permutation pattern matrix");
  }
  const std::size_t k = m.dim();
  BeamformingSet bf;
  bf.v.assign(k, std::vector<int>(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      if (m.at(i, c) == 1) {
        bf.v[i][c] = 1;
        bf.v[i][c + 1] = 1;
      }
    }
  }
  bf.u = bf.v;
  return bf;
}

AlignmentReport verify_alignment(const ChannelConfig& cfg,
                                 std::span<const std::int64_t> slots,
                                 const BeamformingSet& bf,
                                 const ChannelRealization& ch) {
  const std::size_t k = cfg.users();
  const auto len = static_cast<Eigen::Index>(slots.size());
  if (bf.v.size() != k || bf.u.size() != k) {
    throw InputError("beamforming set does not match the user count");
  }
  AlignmentReport report;
  SmallMatrix stack(len, 2);
  for (std::size_t rx = 0; rx < k; ++rx) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j == rx) continue;
      for (Eigen::Index n = 0; n < len; ++n) {
        const ChannelVector& h = ch.at_slot(rx, slots[static_cast<std::size_t>(n)]);
        stack(n, 0) = h[0] * static_cast<double>(bf.v[j][static_cast<std::size_t>(n)]);
        stack(n, 1) = h[1] * static_cast<double>(bf.u[j][static_cast<std::size_t>(n)]);
      }
      report.max_residual = std::max(report.max_residual, singular_ratio(stack));
      ++report.pairs;
    }
  }
  report.passed = report.max_residual < kAlignmentTolerance;
  return report;
}

DecodabilityReport verify_decodability(const ChannelConfig& cfg,
                                       std::span<const std::int64_t> slots,
                                       const BeamformingSet& bf,
                                       const ChannelRealization& ch) {
  const std::size_t k = cfg.users();
  const auto len = static_cast<Eigen::Index>(slots.size());
  if (bf.v.size() != k || bf.u.size() != k) {
    throw InputError("beamforming set does not match the user count");
  }
  DecodabilityReport report;
  report.min_singular_value = std::numeric_limits<double>::infinity();
  SmallMatrix a(len, static_cast<Eigen::Index>(k + 1));
  for (std::size_t rx = 0; rx < k; ++rx) {
    Eigen::Index col = 0;
    const auto fill = [&](const std::vector<int>& beam, int antenna) {
      for (Eigen::Index n = 0; n < len; ++n) {
        const ChannelVector& h = ch.at_slot(rx, slots[static_cast<std::size_t>(n)]);
        a(n, col) = h[static_cast<std::size_t>(antenna)] *
                    static_cast<double>(beam[static_cast<std::size_t>(n)]);
      }
      const double norm = a.col(col).norm();
      if (norm > 0.0) a.col(col) /= norm;
      ++col;
    };
    fill(bf.v[rx], 0);
    fill(bf.u[rx], 1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j != rx) fill(bf.v[j], 0);
    }
    const double sigma = a.cols() == a.rows() ? min_singular(a) : 0.0;
    report.per_receiver.push_back(sigma);
    report.min_singular_value = std::min(report.min_singular_value, sigma);
  }
  report.passed = report.min_singular_value > kDecodabilityTolerance;
  return report;
}

SummaryReport verify_schedule_end_to_end(const Schedule& sched,
                                         std::uint64_t seed, std::size_t trials,
                                         unsigned threads) {
  const ValidationReport valid = validate_schedule(sched);
  if (!valid.passed()) {
    throw InputError("schedule failed validation: " + valid.issues.front());
  }
  const ChannelConfig& cfg = sched.config;

  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  std::vector<BeamformingSet> beams;
  beams.reserve(sched.tuples.size());
  for (const SuperSymbol& sym : sched.tuples) {
    lo = std::min(lo, sym.slots.front());
    hi = std::max(hi, sym.slots.back());
    beams.push_back(beamforming_vectors(pattern_matrix(cfg, sym.slots)));
  }

  struct Partial {
    std::size_t align_fail = 0, decode_fail = 0;
    double max_residual = 0.0;
    double min_sigma = std::numeric_limits<double>::infinity();
  };
  const unsigned workers = detail::resolve_threads(threads, trials);
  std::vector<Partial> partial(workers);
  detail::parallel_chunks(trials, workers, [&](unsigned w, std::size_t begin,
                                               std::size_t end) {
    Partial& p = partial[w];
    for (std::size_t t = begin; t < end; ++t) {
      const ChannelRealization ch =
          draw_channels(cfg, derive_seed(seed, t), lo, hi + 1);
      for (std::size_t n = 0; n < sched.tuples.size(); ++n) {
        const auto& slots = sched.tuples[n].slots;
        const AlignmentReport al = verify_alignment(cfg, slots, beams[n], ch);
        const DecodabilityReport de = verify_decodability(cfg, slots, beams[n], ch);
        p.align_fail += al.passed ? 0 : 1;
        p.decode_fail += de.passed ? 0 : 1;
        p.max_residual = std::max(p.max_residual, al.max_residual);
        p.min_sigma = std::min(p.min_sigma, de.min_singular_value);
      }
    }
  });

  SummaryReport out;
  out.trials = trials;
  out.super_symbols = sched.tuples.size();
  out.min_singular_value = std::numeric_limits<double>::infinity();
  for (const Partial& p : partial) {
    out.alignment_failures += p.align_fail;
    out.decodability_failures += p.decode_fail;
    out.max_residual = std::max(out.max_residual, p.max_residual);
    out.min_singular_value = std::min(out.min_singular_value, p.min_sigma);
  }
  if (trials == 0 || sched.tuples.empty()) out.min_singular_value = 0.0;
  out.dof = dof_of_schedule(sched);
  out.passed = trials > 0 && out.alignment_failures == 0 &&
               out.decodability_failures == 0;
  out.symbols_per_slot = out.passed ? out.dof.value() : 0.0;
  return out;
}

SummaryReport run_pipeline(const ChannelConfig& cfg, std::uint64_t seed,
                           std::size_t trials, unsigned threads) {
  const FeasibilityReport rep = check_config(cfg);
  if (!rep.feasible) {
    throw InputError("configuration is not BIA-feasible: sum(s)=" +
                     std::to_string(rep.sum) + " > (K+1)*min(s)=" +
                     std::to_string(rep.bound));
  }
  const Schedule sched = build_schedule(cfg, closed_form_solution(rep.profile));
  return verify_schedule_end_to_end(sched, seed, trials, threads);
}

}  // namespace bia

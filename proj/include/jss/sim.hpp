// Copyright 2026 The JSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generative simulation of the submission process.
//
// Nothing here uses the belief update: the paper's quality is drawn from the
// prior and evolves through explicit acceptance and feedback draws. Agreement
// with evaluate() is therefore an independent check of the update map.
//
// Reproducibility: episode i draws from SplitMix64::stream(seed, i), and
// episodes are aggregated in fixed-size blocks merged in a fixed order, so
// results are bit-identical for any thread count.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jss/error.hpp"
#include "jss/model.hpp"
#include "jss/parallel.hpp"
#include "jss/random.hpp"

namespace jss {

enum class Quality { kLow, kHigh };

struct EpisodeOutcome {
  std::optional<std::size_t> accepted_at;      // 0-based period
  std::optional<std::size_t> paying_journal;   // sorted journal index
  double realized_payoff = 0;
  std::vector<Quality> quality_path;           // quality entering each period
};

// Draw H with the prior; each period pay c, an H paper is accepted with
// probability a; after a rejection an L paper turns H with probability q.
inline EpisodeOutcome simulate_episode(const Instance<double>& inst,
                                       const SearchOrder& order, SplitMix64& rng,
                                       bool record_path = true) {
  require_order_fits(inst, order);
  EpisodeOutcome out;
  Quality quality = rng.bernoulli(inst.prior().high()) ? Quality::kHigh : Quality::kLow;
  double costs = 0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const Journal<double>& j = inst.journal(order[t]);
    if (record_path) out.quality_path.push_back(quality);
    costs += j.c;
    if (quality == Quality::kHigh) {
      if (rng.bernoulli(j.a)) {
        out.accepted_at = t;
        out.paying_journal = static_cast<std::size_t>(order[t]);
        out.realized_payoff = j.u - costs;
        return out;
      }
    } else if (rng.bernoulli(j.q)) {
      quality = Quality::kHigh;
    }
  }
  out.realized_payoff = inst.outside_option() - costs;
  return out;
}

struct ValueEstimate {
  double mean = 0;
  std::optional<double> stderr_;  // none when n == 1
  std::size_t episodes = 0;
};

namespace detail {

inline constexpr std::size_t kEpisodeBlock = 1 << 14;

// Count, mean and sum of squared deviations; merged with Chan's formula.
struct Moments {
  double count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    count += 1;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  static Moments merge(const Moments& x, const Moments& y) {
    if (x.count == 0) return y;
    if (y.count == 0) return x;
    Moments out;
    out.count = x.count + y.count;
    const double delta = y.mean - x.mean;
    out.mean = x.mean + delta * (y.count / out.count);
    out.m2 = x.m2 + y.m2 + delta * delta * (x.count * y.count / out.count);
    return out;
  }
};

// Pairwise reduction in a fixed tree shape.
inline Moments reduce(const std::vector<Moments>& parts, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return Moments::merge(reduce(parts, lo, mid), reduce(parts, mid, hi));
}

inline std::size_t block_count(std::size_t n) {
  return (n + kEpisodeBlock - 1) / kEpisodeBlock;
}

}  // namespace detail

inline ValueEstimate estimate_value(const Instance<double>& inst, const SearchOrder& order,
                                    std::size_t n, std::uint64_t seed,
                                    unsigned threads = 0) {
  if (n == 0) throw Error("estimate_value needs at least one episode");
  require_order_fits(inst, order);
  const std::size_t blocks = detail::block_count(n);
  std::vector<detail::Moments> parts(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t lo = b * detail::kEpisodeBlock;
    const std::size_t hi = std::min(n, lo + detail::kEpisodeBlock);
    detail::Moments m;
    for (std::size_t i = lo; i < hi; ++i) {
      SplitMix64 rng = SplitMix64::stream(seed, i);
      m.add(simulate_episode(inst, order, rng, false).realized_payoff);
    }
    parts[b] = m;
  });
  const detail::Moments total = detail::reduce(parts, 0, blocks);
  ValueEstimate est;
  est.mean = total.mean;
  est.episodes = n;
  if (n > 1) est.stderr_ = std::sqrt(total.m2 / (total.count - 1) / total.count);
  return est;
}

struct SurvivalEstimate {
  // reach[t]: fraction of episodes that reach period t+1; I + 1 entries, the
  // last is the fraction rejected everywhere.
  std::vector<double> reach;
  // accept_given_reach[t]: acceptances at period t+1 over arrivals there
  // (NaN when no episode arrived).
  std::vector<double> accept_given_reach;
  std::vector<std::uint64_t> arrivals;
  std::size_t episodes = 0;
};

inline SurvivalEstimate empirical_survival(const Instance<double>& inst,
                                           const SearchOrder& order, std::size_t n,
                                           std::uint64_t seed, unsigned threads = 0) {
  if (n == 0) throw Error("empirical_survival needs at least one episode");
  require_order_fits(inst, order);
  const std::size_t periods = inst.size();
  const std::size_t blocks = detail::block_count(n);
  std::vector<std::vector<std::uint64_t>> arrivals(blocks), accepts(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::vector<std::uint64_t> arr(periods + 1, 0), acc(periods, 0);
    const std::size_t lo = b * detail::kEpisodeBlock;
    const std::size_t hi = std::min(n, lo + detail::kEpisodeBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      SplitMix64 rng = SplitMix64::stream(seed, i);
      const EpisodeOutcome e = simulate_episode(inst, order, rng, false);
      const std::size_t last = e.accepted_at ? *e.accepted_at : periods;
      for (std::size_t t = 0; t <= last; ++t) ++arr[t];
      if (e.accepted_at) ++acc[*e.accepted_at];
    }
    arrivals[b] = std::move(arr);
    accepts[b] = std::move(acc);
  });
  SurvivalEstimate out;
  out.episodes = n;
  out.arrivals.assign(periods + 1, 0);
  std::vector<std::uint64_t> accepted(periods, 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t t = 0; t <= periods; ++t) out.arrivals[t] += arrivals[b][t];
    for (std::size_t t = 0; t < periods; ++t) accepted[t] += accepts[b][t];
  }
  for (std::size_t t = 0; t <= periods; ++t) {
    out.reach.push_back(static_cast<double>(out.arrivals[t]) / static_cast<double>(n));
  }
  for (std::size_t t = 0; t < periods; ++t) {
    out.accept_given_reach.push_back(
        out.arrivals[t] == 0 ? std::nan("")
                             : static_cast<double>(accepted[t]) /
                                   static_cast<double>(out.arrivals[t]));
  }
  return out;
}

}  // namespace jss

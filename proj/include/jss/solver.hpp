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

// Optimal submission orders.
//
// brute_force_optimal is the reference: it enumerates every permutation and
// reports the full set of maximizers. The other methods are only correct
// inside their hypothesis class and refuse to run outside it.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jss/error.hpp"
#include "jss/model.hpp"
#include "jss/numeric.hpp"
#include "jss/parallel.hpp"

namespace jss {

enum class SolveMethod { kBruteForce, kSubsetDp, kIndex, kLocalSearch };

inline std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::kBruteForce: return "brute";
    case SolveMethod::kSubsetDp: return "dp";
    case SolveMethod::kIndex: return "index";
    case SolveMethod::kLocalSearch: return "local";
  }
  return "unknown";
}

template <Scalar S>
struct SolveResult {
  SearchOrder best_order;
  S best_value = S(0);
  // Every order tied with best_value (exactly in rational mode), sorted
  // lexicographically; best_order is the first one.
  std::vector<SearchOrder> argmax_set;
  SolveMethod method = SolveMethod::kBruteForce;
  // False for local search: the order is only a local optimum.
  bool certified = true;
  std::vector<std::string> warnings;

  bool in_argmax(const SearchOrder& order) const {
    return std::binary_search(argmax_set.begin(), argmax_set.end(), order);
  }
};

struct SolveOptions {
  std::size_t brute_force_cap = 10;
  std::size_t subset_dp_cap = 20;
  unsigned threads = 0;  // 0: JSS_THREADS or hardware concurrency
};

namespace detail {

// Per-journal coefficients of the payoff recursion.
template <Scalar S>
struct Coefficients {
  S ua;    // u * a
  S a;
  S keep;  // 1 - a - q
  S q;
  S c;
};

template <Scalar S>
std::vector<Coefficients<S>> coefficients(const Instance<S>& inst) {
  std::vector<Coefficients<S>> out;
  out.reserve(inst.size());
  for (const auto& j : inst.journals()) {
    out.push_back({S(j.u * j.a), j.a, S(S(1) - j.a - j.q), j.q, j.c});
  }
  return out;
}

// Maximizers found so far, pruned against the running best.
template <Scalar S>
struct Candidates {
  bool any = false;
  S best = S(0);
  std::vector<std::pair<S, SearchOrder>> ties;

  void offer(const S& value, const std::vector<int>& perm) {
    if (!any || clearly_greater(value, best)) {
      if (!any || value > best) best = value;
      any = true;
      std::erase_if(ties, [&](const auto& t) { return !tied(t.first, best); });
      ties.emplace_back(value, SearchOrder(perm));
      return;
    }
    if (tied(value, best)) {
      if (value > best) best = value;
      ties.emplace_back(value, SearchOrder(perm));
    }
  }
};

// Depth-first enumeration of all orders that start with `first`, sharing
// prefix computations. Orders are visited in lexicographic order.
template <Scalar S>
class PermutationSearch {
 public:
  PermutationSearch(const Instance<S>& inst, const std::vector<Coefficients<S>>& k)
      : n_(inst.size()),
        outside_(inst.outside_option()),
        coef_(k),
        reach_(n_ + 1),
        belief_(n_ + 1),
        acc_(n_ + 1),
        perm_(n_),
        used_(n_, false) {
    reach_[0] = S(1);
    belief_[0] = inst.prior().high();
    acc_[0] = S(0);
  }

  Candidates<S> run(int first) {
    Candidates<S> found;
    step(0, first, found);
    return found;
  }

 private:
  void step(std::size_t depth, int j, Candidates<S>& found) {
    const Coefficients<S>& k = coef_[j];
    perm_[depth] = j;
    used_[j] = true;
    acc_[depth + 1] = acc_[depth] + reach_[depth] * (k.ua * belief_[depth] - k.c);
    denom_ = S(1) - k.a * belief_[depth];
    reach_[depth + 1] = reach_[depth] * denom_;
    if (depth + 1 == n_) {
      S value = acc_[n_] + reach_[n_] * outside_;
      found.offer(value, perm_);
    } else {
      if (denom_ == 0) {
        belief_[depth + 1] = S(1);
      } else {
        belief_[depth + 1] = (k.keep * belief_[depth] + k.q) / denom_;
      }
      for (std::size_t next = 0; next < n_; ++next) {
        if (!used_[next]) step(depth + 1, static_cast<int>(next), found);
      }
    }
    used_[j] = false;
  }

  std::size_t n_;
  S outside_;
  const std::vector<Coefficients<S>>& coef_;
  std::vector<S> reach_;
  std::vector<S> belief_;
  std::vector<S> acc_;
  S denom_;
  std::vector<int> perm_;
  std::vector<bool> used_;
};

template <Scalar S>
SolveResult<S> merge_candidates(std::vector<Candidates<S>>& parts,
                                SolveMethod method) {
  SolveResult<S> result;
  result.method = method;
  bool any = false;
  for (const auto& p : parts) {
    if (p.any && (!any || p.best > result.best_value)) {
      result.best_value = p.best;
      any = true;
    }
  }
  for (auto& p : parts) {
    for (auto& [value, order] : p.ties) {
      if (tied(value, result.best_value)) result.argmax_set.push_back(std::move(order));
    }
  }
  std::sort(result.argmax_set.begin(), result.argmax_set.end());
  result.best_order = result.argmax_set.front();
  return result;
}

}  // namespace detail

template <Scalar S>
SolveResult<S> brute_force_optimal(const Instance<S>& inst,
                                   const SolveOptions& options = {}) {
  const std::size_t n = inst.size();
  if (n > options.brute_force_cap) {
    throw SizeLimitError("brute force is capped at " +
                         std::to_string(options.brute_force_cap) +
                         " journals (instance has " + std::to_string(n) +
                         "); use the subset DP when order independence holds, "
                         "or local search");
  }
  const auto coef = detail::coefficients(inst);
  std::vector<detail::Candidates<S>> parts(n);
  parallel_for(n, options.threads, [&](std::size_t first) {
    detail::PermutationSearch<S> search(inst, coef);
    parts[first] = search.run(static_cast<int>(first));
  });
  return detail::merge_candidates(parts, SolveMethod::kBruteForce);
}

// Theorem-style index for the no-feedback case: sort by u - c/a, decreasing.
// Ties keep the u-sorted order.
template <Scalar S>
SearchOrder index_order_no_feedback(const Instance<S>& inst) {
  for (const auto& j : inst.journals()) {
    if (j.q != 0) {
      throw PreconditionError("index rule requires q = 0 for every journal; '" +
                              j.name + "' has q = " + to_display_string(j.q));
    }
  }
  std::vector<S> index;
  index.reserve(inst.size());
  for (const auto& j : inst.journals()) index.push_back(S(j.u - j.c / j.a));
  std::vector<int> perm(inst.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int x, int y) { return index[x] > index[y]; });
  return SearchOrder(std::move(perm));
}

// Decreasing u: the identity on the sorted instance.
template <Scalar S>
SearchOrder monotone_order(const Instance<S>& inst) {
  return SearchOrder::identity(inst.size());
}

// True when a_i q_j = a_j q_i for every pair, i.e. the posterior after a set
// of rejections does not depend on the order they arrived in.
template <Scalar S>
bool globally_order_independent(const Instance<S>& inst) {
  const auto& js = inst.journals();
  for (std::size_t i = 0; i < js.size(); ++i) {
    for (std::size_t j = i + 1; j < js.size(); ++j) {
      const S lhs = js[i].a * js[j].q;
      const S rhs = js[j].a * js[i].q;
      if (!tied(lhs, rhs)) return false;
    }
  }
  return true;
}

// Value iteration over subsets of rejected journals. Valid only under global
// order independence, where belief and reach probability after a set of
// rejections are functions of the set alone.
template <Scalar S>
SolveResult<S> subset_dp_optimal(const Instance<S>& inst,
                                 const SolveOptions& options = {}) {
  const std::size_t n = inst.size();
  if (!globally_order_independent(inst)) {
    throw PreconditionError(
        "subset DP requires a_i q_j = a_j q_i for all pairs; beliefs are "
        "path dependent on this instance, so the DP would be incorrect");
  }
  if (n > options.subset_dp_cap) {
    throw SizeLimitError("subset DP is capped at " +
                         std::to_string(options.subset_dp_cap) + " journals");
  }
  const auto coef = detail::coefficients(inst);
  const std::uint32_t full = (1u << n) - 1u;
  const std::size_t states = std::size_t{1} << n;
  std::vector<S> belief(states), reach(states), value(states);
  belief[0] = inst.prior().high();
  reach[0] = S(1);
  for (std::uint32_t mask = 1; mask < states; ++mask) {
    const int j = __builtin_ctz(mask);
    const std::uint32_t prev = mask & (mask - 1);
    const auto& k = coef[j];
    const S denom = S(1) - k.a * belief[prev];
    reach[mask] = reach[prev] * denom;
    if (denom == 0) {
      belief[mask] = S(1);
    } else {
      belief[mask] = (k.keep * belief[prev] + k.q) / denom;
    }
  }
  auto step_value = [&](std::uint32_t mask, std::size_t j) {
    const auto& k = coef[j];
    S v = reach[mask] * (k.ua * belief[mask] - k.c) + value[mask | (1u << j)];
    return v;
  };
  value[full] = reach[full] * inst.outside_option();
  for (std::uint32_t mask = full; mask-- > 0;) {
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      S v = step_value(mask, j);
      if (!any || v > value[mask]) value[mask] = std::move(v);
      any = true;
    }
  }
  SolveResult<S> result;
  result.method = SolveMethod::kSubsetDp;
  result.best_value = value[0];
  // Every optimal path; choices visited in increasing j keep the output
  // lexicographically sorted.
  std::vector<int> perm;
  auto collect = [&](auto&& self, std::uint32_t mask) -> void {
    if (mask == full) {
      result.argmax_set.emplace_back(perm);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      if (tied(step_value(mask, j), value[mask])) {
        perm.push_back(static_cast<int>(j));
        self(self, mask | (1u << j));
        perm.pop_back();
      }
    }
  };
  collect(collect, 0u);
  result.best_order = result.argmax_set.front();
  return result;
}

// Adjacent-transposition hill climbing: left-to-right sweeps, accepting any
// strictly improving swap, until a full sweep changes nothing.
template <Scalar S>
SolveResult<S> pairwise_swap_local_search(const Instance<S>& inst,
                                          const SearchOrder& start) {
  require_order_fits(inst, start);
  SearchOrder current = start;
  S current_value = expected_payoff(inst, current);
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t t = 0; t + 1 < current.size(); ++t) {
      SearchOrder candidate = current.swapped(t);
      S v = expected_payoff(inst, candidate);
      if (clearly_greater(v, current_value)) {
        current = std::move(candidate);
        current_value = std::move(v);
        improved = true;
      }
    }
  }
  SolveResult<S> result;
  result.best_order = current;
  result.best_value = current_value;
  result.argmax_set = {current};
  result.method = SolveMethod::kLocalSearch;
  result.certified = false;
  result.warnings.push_back(
      "local search returns an adjacent-swap local optimum, not a certified "
      "global optimum");
  return result;
}

// Picks brute force when it fits, then the subset DP when it is valid, and
// falls back to local search from the monotone order.
template <Scalar S>
SolveResult<S> solve_auto(const Instance<S>& inst, const SolveOptions& options = {}) {
  if (inst.size() <= options.brute_force_cap) return brute_force_optimal(inst, options);
  if (inst.size() <= options.subset_dp_cap && globally_order_independent(inst)) {
    return subset_dp_optimal(inst, options);
  }
  return pairwise_swap_local_search(inst, monotone_order(inst));
}

// ---------------------------------------------------------------------------
// Two-journal prior threshold.

enum class ThresholdKind { kAlwaysMonotone, kNeverMonotone, kThreshold };
enum class ThresholdDirection { kNone, kAbove, kBelow };

inline std::string_view to_string(ThresholdKind k) {
  switch (k) {
    case ThresholdKind::kAlwaysMonotone: return "always_monotone";
    case ThresholdKind::kNeverMonotone: return "never_monotone";
    case ThresholdKind::kThreshold: return "threshold";
  }
  return "unknown";
}

inline std::string_view to_string(ThresholdDirection d) {
  switch (d) {
    case ThresholdDirection::kNone: return "none";
    case ThresholdDirection::kAbove: return "above";
    case ThresholdDirection::kBelow: return "below";
  }
  return "unknown";
}

struct ThresholdResult {
  ThresholdKind kind = ThresholdKind::kAlwaysMonotone;
  Rational mu_star = 0;  // meaningful for kThreshold
  // kAbove: monotone is optimal for mu >= mu_star; kBelow: for mu <= mu_star.
  ThresholdDirection direction = ThresholdDirection::kNone;
  // payoff(monotone) - payoff(swapped) = intercept + slope * mu
  Rational intercept = 0;
  Rational slope = 0;
};

// For two journals, (1 - a mu) f(mu) is affine in mu, so the payoff gap
// between the monotone and the swapped order is affine too (costs included)
// and its root is an exact rational.
inline ThresholdResult prior_threshold_2box(const Instance<Rational>& inst) {
  if (inst.size() != 2) {
    throw PreconditionError("prior threshold needs exactly two journals, got " +
                            std::to_string(inst.size()));
  }
  const SearchOrder mono = SearchOrder::identity(2);
  const SearchOrder swapped = mono.swapped(0);
  auto gap = [&](const Rational& mu) {
    const auto at = inst.with_prior(Belief<Rational>(mu));
    Rational d = expected_payoff(at, mono) - expected_payoff(at, swapped);
    return d;
  };
  const Rational d0 = gap(0);
  const Rational d1 = gap(1);
  ThresholdResult out;
  out.intercept = d0;
  out.slope = d1 - d0;
  if (d0 >= 0 && d1 >= 0) {
    out.kind = ThresholdKind::kAlwaysMonotone;
  } else if (d0 < 0 && d1 < 0) {
    out.kind = ThresholdKind::kNeverMonotone;
  } else {
    out.kind = ThresholdKind::kThreshold;
    out.mu_star = d0 / (d0 - d1);
    out.direction =
        d1 > d0 ? ThresholdDirection::kAbove : ThresholdDirection::kBelow;
  }
  return out;
}

inline ThresholdResult prior_threshold_2box(const Journal<Rational>& first,
                                            const Journal<Rational>& second) {
  return prior_threshold_2box(
      Instance<Rational>::create({first, second}, Belief<Rational>(0)));
}

// ---------------------------------------------------------------------------
// Payoff sweeps over a grid of priors.

// start:stop:step, inclusive of stop when it lies on the grid.
inline std::vector<Rational> make_grid(const Rational& start, const Rational& stop,
                                       const Rational& step) {
  if (step <= 0) throw InvalidInstanceError("grid step must be positive");
  if (stop < start) throw InvalidInstanceError("grid stop is below start");
  const Rational span = (stop - start) / step;
  const mpz_class count = mpz_class(span.get_num() / span.get_den()) + 1;
  if (count > 10'000'000) throw InvalidInstanceError("grid has too many points");
  std::vector<Rational> grid;
  for (long i = 0; i < count.get_si(); ++i) {
    Rational mu = start + step * i;
    grid.push_back(std::move(mu));
  }
  return grid;
}

// "0:1:0.01"
inline std::vector<Rational> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos
                          ? std::string_view::npos
                          : spec.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw InvalidInstanceError("grid must look like start:stop:step, got '" +
                               std::string(spec) + "'");
  }
  return make_grid(parse_rational(spec.substr(0, first)),
                   parse_rational(spec.substr(first + 1, second - first - 1)),
                   parse_rational(spec.substr(second + 1)));
}

template <Scalar S>
struct SweepRow {
  Belief<S> mu;
  std::vector<S> values;  // one per SweepTable::orders entry (may be empty)
  SearchOrder best_order;
  S best_value = S(0);
  std::size_t argmax_size = 0;
};

template <Scalar S>
struct SweepTable {
  std::vector<SearchOrder> orders;  // value columns; empty for large I
  std::vector<SweepRow<S>> rows;
};

// Every order gets its own column while there are at most `all_orders_cap`
// journals; above that only the best order is reported.
template <Scalar S>
SweepTable<S> payoff_sweep(const Instance<S>& inst, const std::vector<Belief<S>>& grid,
                           const SolveOptions& options = {},
                           std::size_t all_orders_cap = 4) {
  SweepTable<S> table;
  const bool all_orders = inst.size() <= all_orders_cap;
  if (all_orders) {
    std::vector<int> perm(inst.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      table.orders.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  table.rows.resize(grid.size());
  parallel_for(grid.size(), options.threads, [&](std::size_t g) {
    const Instance<S> at = inst.with_prior(grid[g]);
    SweepRow<S>& row = table.rows[g];
    row.mu = grid[g];
    if (all_orders) {
      for (const auto& order : table.orders) row.values.push_back(expected_payoff(at, order));
      row.best_value = *std::max_element(row.values.begin(), row.values.end());
      bool first = true;
      for (std::size_t k = 0; k < table.orders.size(); ++k) {
        if (tied(row.values[k], row.best_value)) {
          if (first) row.best_order = table.orders[k];
          first = false;
          ++row.argmax_size;
        }
      }
    } else {
      SolveOptions inner = options;
      inner.threads = 1;
      const auto best = solve_auto(at, inner);
      row.best_order = best.best_order;
      row.best_value = best.best_value;
      row.argmax_size = best.argmax_set.size();
    }
  });
  return table;
}

}  // namespace jss

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

// Structural hypotheses: regularity, order independence, globally bounded
// weak feedback, strong-feedback regions. Each check returns a report with a
// concrete witness so a failure can be inspected.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jss/error.hpp"
#include "jss/model.hpp"
#include "jss/numeric.hpp"
#include "jss/parallel.hpp"

namespace jss {

template <Scalar S>
struct Witness {
  std::string description;
  std::vector<int> journals;  // a pair or a submission path (sorted indices)
  std::vector<S> values;
};

template <Scalar S>
struct ConditionReport {
  std::string name;
  bool pass = true;
  // First violation when !pass; otherwise the binding (tightest) case.
  std::vector<Witness<S>> witnesses;
  // Smallest slack across all checked cases; empty when nothing is checked.
  std::optional<S> margin;
  std::vector<std::pair<std::string, bool>> flags;

  bool flag(std::string_view key) const {
    for (const auto& [k, v] : flags) {
      if (k == key) return v;
    }
    throw Error("report '" + name + "' has no flag '" + std::string(key) + "'");
  }
};

namespace detail {

template <Scalar S>
void lower_margin(std::optional<S>& margin, const S& slack) {
  if (!margin || slack < *margin) margin = slack;
}

}  // namespace detail

// Regular: u and q non-increasing, a non-decreasing along the u-sorted list.
// Strict: all three strictly. Exponential: regular and u_i >= 2 u_j, i < j.
template <Scalar S>
ConditionReport<S> check_regularity(const Instance<S>& inst) {
  ConditionReport<S> report;
  report.name = "regularity";
  const auto& js = inst.journals();
  bool regular = true, strict = true, exponential = true;
  std::optional<Witness<S>> regular_violation, strict_violation, exp_violation;
  for (std::size_t i = 0; i < js.size(); ++i) {
    for (std::size_t j = i + 1; j < js.size(); ++j) {
      const std::vector<int> pair{static_cast<int>(i), static_cast<int>(j)};
      const auto& hi = js[i];
      const auto& lo = js[j];
      const S q_slack = hi.q - lo.q;
      const S a_slack = lo.a - hi.a;
      detail::lower_margin(report.margin, std::min(q_slack, a_slack));
      if (q_slack < 0 && regular) {
        regular = false;
        regular_violation = Witness<S>{"q increases from " + hi.name + " to " + lo.name,
                                       pair, {hi.q, lo.q}};
      } else if (a_slack < 0 && regular) {
        regular = false;
        regular_violation = Witness<S>{"a decreases from " + hi.name + " to " + lo.name,
                                       pair, {hi.a, lo.a}};
      }
      if (strict && !(hi.u > lo.u && q_slack > 0 && a_slack > 0)) {
        strict = false;
        strict_violation = Witness<S>{
            "not strictly regular between " + hi.name + " and " + lo.name, pair,
            {hi.u, lo.u, hi.q, lo.q, hi.a, lo.a}};
      }
      const S growth = hi.u - S(2) * lo.u;
      if (growth < 0 && exponential) {
        exponential = false;
        exp_violation = Witness<S>{"u of " + hi.name + " is below twice u of " + lo.name,
                                   pair, {hi.u, lo.u}};
      }
    }
  }
  exponential = exponential && regular;
  report.pass = regular;
  report.flags = {{"regular", regular}, {"strict", strict}, {"exponential", exponential}};
  if (regular_violation) report.witnesses.push_back(*regular_violation);
  if (strict_violation) report.witnesses.push_back(*strict_violation);
  if (exp_violation) report.witnesses.push_back(*exp_violation);
  return report;
}

template <Scalar S>
struct OrderIndependenceReport : ConditionReport<S> {
  // antisymmetric[i][j] = a_i q_j - a_j q_i
  std::vector<std::vector<S>> antisymmetric;
};

// Global pass iff a_i q_j = a_j q_i for every pair. The "small_costs" flag
// records whether u_i > u_j exactly when u_i - c_i/a_i > u_j - c_j/a_j.
template <Scalar S>
OrderIndependenceReport<S> check_order_independence(const Instance<S>& inst) {
  OrderIndependenceReport<S> report;
  report.name = "order_independence";
  const auto& js = inst.journals();
  const std::size_t n = js.size();
  report.antisymmetric.assign(n, std::vector<S>(n, S(0)));
  bool small_costs = true;
  std::optional<Witness<S>> cost_violation;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const S lhs = js[i].a * js[j].q;
      const S rhs = js[j].a * js[i].q;
      report.antisymmetric[i][j] = lhs - rhs;
      if (i < j) {
        const S abs_gap = lhs > rhs ? S(lhs - rhs) : S(rhs - lhs);
        detail::lower_margin(report.margin, S(-abs_gap));
        if (!tied(lhs, rhs) && report.pass) {
          report.pass = false;
          report.witnesses.push_back(
              {"a_i q_j != a_j q_i for " + js[i].name + ", " + js[j].name,
               {static_cast<int>(i), static_cast<int>(j)},
               {lhs, rhs}});
        }
        const S idx_i = js[i].u - js[i].c / js[i].a;
        const S idx_j = js[j].u - js[j].c / js[j].a;
        const bool u_order = js[i].u > js[j].u;
        const bool idx_order = idx_i > idx_j;
        const bool u_order_rev = js[j].u > js[i].u;
        const bool idx_order_rev = idx_j > idx_i;
        if ((u_order != idx_order || u_order_rev != idx_order_rev) && small_costs) {
          small_costs = false;
          cost_violation = Witness<S>{
              "costs reverse the payoff ranking of " + js[i].name + ", " + js[j].name,
              {static_cast<int>(i), static_cast<int>(j)},
              {js[i].u, js[j].u, idx_i, idx_j}};
        }
      }
    }
  }
  report.flags = {{"order_independent", report.pass}, {"small_costs", small_costs}};
  if (cost_violation) report.witnesses.push_back(*cost_violation);
  return report;
}

// Threshold applied to every belief reached along a submission path.
enum class FeedbackThresholdPolicy {
  kFirstJournal,      // q_1 / (q_1 + a_1) of the highest-payoff journal
  kMaxOverJournals,   // max_i q_i / (a_i + q_i)
  kPerRemaining,      // max over journals still available at that point
};

inline std::string_view to_string(FeedbackThresholdPolicy p) {
  switch (p) {
    case FeedbackThresholdPolicy::kFirstJournal: return "box1";
    case FeedbackThresholdPolicy::kMaxOverJournals: return "max_over_journals";
    case FeedbackThresholdPolicy::kPerRemaining: return "per_remaining";
  }
  return "unknown";
}

inline FeedbackThresholdPolicy parse_threshold_policy(std::string_view s) {
  if (s == "box1") return FeedbackThresholdPolicy::kFirstJournal;
  if (s == "max" || s == "max_over_journals") return FeedbackThresholdPolicy::kMaxOverJournals;
  if (s == "per_remaining") return FeedbackThresholdPolicy::kPerRemaining;
  throw Error("unknown threshold policy '" + std::string(s) +
              "' (expected box1, max_over_journals or per_remaining)");
}

// q / (a + q): beliefs at or above it satisfy mu >= (1 - a mu) f(mu).
template <Scalar S>
S weak_feedback_bound(const Journal<S>& j) {
  S bound = j.q / (j.a + j.q);
  return bound;
}

template <Scalar S>
struct FeedbackReport : ConditionReport<S> {
  FeedbackThresholdPolicy policy = FeedbackThresholdPolicy::kMaxOverJournals;
  Belief<S> min_belief;
  std::vector<int> min_path;  // prefix of rejections that reaches min_belief
  std::size_t paths_checked = 0;
};

namespace detail {

template <Scalar S>
struct PathScan {
  bool has_min = false;
  S min_belief = S(0);
  std::vector<int> min_path;
  std::optional<S> margin;
  std::optional<Witness<S>> violation;
  std::size_t visited = 0;
};

template <Scalar S>
class PrefixEnumerator {
 public:
  PrefixEnumerator(const Instance<S>& inst, FeedbackThresholdPolicy policy)
      : inst_(inst), policy_(policy), used_(inst.size(), false) {
    for (const auto& j : inst.journals()) bounds_.push_back(weak_feedback_bound(j));
    global_ = policy == FeedbackThresholdPolicy::kFirstJournal
                  ? bounds_.front()
                  : *std::max_element(bounds_.begin(), bounds_.end());
  }

  // Visits the node for `path` (belief entering the next period) and every
  // extension that still leaves at least one journal to submit to.
  void visit(const Belief<S>& belief, PathScan<S>& scan) {
    ++scan.visited;
    const S threshold = threshold_here();
    const S slack = belief.high() - threshold;
    lower_margin(scan.margin, slack);
    if (!scan.has_min || belief.high() < scan.min_belief) {
      scan.has_min = true;
      scan.min_belief = belief.high();
      scan.min_path = path_;
    }
    if (slack < 0 && !scan.violation) {
      scan.violation = Witness<S>{"belief below the weak-feedback threshold after rejections",
                                  path_, {belief.high(), threshold}};
    }
    if (path_.size() + 1 >= inst_.size()) return;
    for (std::size_t j = 0; j < inst_.size(); ++j) {
      if (!used_[j]) descend(static_cast<int>(j), belief, scan);
    }
  }

  void descend(int j, const Belief<S>& belief, PathScan<S>& scan) {
    used_[j] = true;
    path_.push_back(j);
    visit(update_belief(inst_.journal(j), belief), scan);
    path_.pop_back();
    used_[j] = false;
  }

 private:
  S threshold_here() const {
    if (policy_ != FeedbackThresholdPolicy::kPerRemaining) return global_;
    bool any = false;
    S best = S(0);
    for (std::size_t j = 0; j < bounds_.size(); ++j) {
      if (!used_[j] && (!any || bounds_[j] > best)) {
        best = bounds_[j];
        any = true;
      }
    }
    return best;
  }

  const Instance<S>& inst_;
  FeedbackThresholdPolicy policy_;
  std::vector<S> bounds_;
  S global_;
  std::vector<bool> used_;
  std::vector<int> path_;
};

}  // namespace detail

// Globally bounded weak feedback: every belief the agent can hold when it
// still has a journal to submit to (the prior and every posterior after any
// ordered set of at most I-1 rejections) is at or above the threshold.
template <Scalar S>
FeedbackReport<S> check_globally_bounded_weak_feedback(
    const Instance<S>& inst,
    FeedbackThresholdPolicy policy = FeedbackThresholdPolicy::kMaxOverJournals,
    std::size_t cap = 8, unsigned threads = 0) {
  if (inst.size() > cap) {
    throw SizeLimitError("weak-feedback path enumeration is capped at " +
                         std::to_string(cap) + " journals");
  }
  FeedbackReport<S> report;
  report.name = "globally_bounded_weak_feedback";
  report.policy = policy;

  // Root first, then one branch per first journal, merged in DFS order.
  detail::PathScan<S> root;
  root.visited = 1;
  const std::size_t n = inst.size();
  std::vector<detail::PathScan<S>> branches(n);
  const std::vector<S> bounds = [&] {
    std::vector<S> b;
    for (const auto& j : inst.journals()) b.push_back(weak_feedback_bound(j));
    return b;
  }();
  const S global = policy == FeedbackThresholdPolicy::kFirstJournal
                       ? bounds.front()
                       : *std::max_element(bounds.begin(), bounds.end());
  {
    const S root_slack = inst.prior().high() - global;
    root.has_min = true;
    root.min_belief = inst.prior().high();
    root.margin = root_slack;
    if (root_slack < 0) {
      root.violation = Witness<S>{"prior below the weak-feedback threshold", {},
                                  {inst.prior().high(), global}};
    }
  }
  if (n > 1) {
    parallel_for(n, threads, [&](std::size_t first) {
      detail::PrefixEnumerator<S> e(inst, policy);
      e.descend(static_cast<int>(first), inst.prior(), branches[first]);
    });
  }
  detail::PathScan<S> merged = root;
  for (auto& b : branches) {
    merged.visited += b.visited;
    if (b.margin) detail::lower_margin(merged.margin, *b.margin);
    if (b.has_min && b.min_belief < merged.min_belief) {
      merged.min_belief = b.min_belief;
      merged.min_path = b.min_path;
    }
    if (!merged.violation && b.violation) merged.violation = b.violation;
  }
  report.paths_checked = merged.visited;
  report.margin = merged.margin;
  report.min_belief = Belief<S>::unchecked(merged.min_belief);
  report.min_path = merged.min_path;
  report.pass = !merged.violation.has_value();
  if (merged.violation) {
    report.witnesses.push_back(*merged.violation);
  } else {
    report.witnesses.push_back(
        {"lowest reachable belief", merged.min_path, {merged.min_belief, global}});
  }
  report.flags = {{"globally_bounded_weak_feedback", report.pass}};
  return report;
}

template <Scalar S>
struct StrongFeedbackReport {
  bool strong = false;     // f_j(mu) >= mu: rejection does not lower the belief
  Belief<S> posterior;
  S fixed_point = S(1);    // interior solution of f_j(mu) = mu, min(q/a, 1)
  S weak_bound = S(0);     // q / (a + q)
};

// f_j(mu) - mu = (1 - mu)(q - a mu) / (1 - a mu), so rejection raises the
// belief exactly when mu <= q / a (and trivially at mu = 1).
template <Scalar S>
StrongFeedbackReport<S> check_strong_feedback_region(const Journal<S>& j,
                                                     const Belief<S>& b) {
  StrongFeedbackReport<S> r;
  r.posterior = update_belief(j, b);
  r.strong = r.posterior.high() >= b.high() || tied(r.posterior.high(), b.high());
  const S ratio = j.q / j.a;
  r.fixed_point = ratio < 1 ? ratio : S(1);
  r.weak_bound = weak_feedback_bound(j);
  return r;
}

}  // namespace jss

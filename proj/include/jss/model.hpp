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

// Problem representation and exact payoff evaluation.
//
// A paper is high (H) or low (L) quality. Journal i accepts an H paper with
// probability a_i and never accepts an L paper. After a rejection, an L paper
// becomes H with probability q_i (feedback). Submitting costs c_i, acceptance
// pays u_i and ends the search, and exhausting every journal pays the outside
// option. Because acceptance ends the game and there is no recall, a strategy
// is fully described by the order in which journals are tried.
//
// Timing convention: beliefs[t] is the belief entering period t+1 and
// reach[t] is the probability that period t+1 is reached, so
//   total = sum_t reach[t] * (u a beliefs[t] - c) + reach[I] * outside.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "jss/error.hpp"
#include "jss/numeric.hpp"

namespace jss {

// Probability that the paper is high quality.
template <Scalar S>
class Belief {
 public:
  Belief() : mu_h_(0) {}

  explicit Belief(S mu_h) : mu_h_(std::move(mu_h)) {
    if (mu_h_ < 0 || mu_h_ > 1) {
      throw InvalidInstanceError("belief " + to_display_string(mu_h_) +
                                 " is outside [0, 1]");
    }
  }

  // For values produced by the update map, which stays in [0, 1] up to
  // floating point rounding.
  static Belief unchecked(S mu_h) {
    Belief b;
    b.mu_h_ = std::move(mu_h);
    return b;
  }

  const S& high() const { return mu_h_; }
  S low() const { return S(1) - mu_h_; }

  friend bool operator==(const Belief& x, const Belief& y) {
    return x.mu_h_ == y.mu_h_;
  }

 private:
  S mu_h_;
};

// One search alternative.
template <Scalar S>
struct Journal {
  std::string name;
  S u;  // acceptance payoff
  S a;  // acceptance probability of a high quality paper, in (0, 1]
  S q;  // feedback probability L -> H after rejection, in [0, 1)
  S c = S(0);  // submission cost, paid on submission
  std::size_t input_index = 0;  // position in the caller's list

  friend bool operator==(const Journal& x, const Journal& y) {
    return x.name == y.name && x.u == y.u && x.a == y.a && x.q == y.q &&
           x.c == y.c;
  }
};

template <Scalar S>
void validate_journal(const Journal<S>& j) {
  const std::string who = "journal '" + j.name + "': ";
  if (!(j.a > 0 && j.a <= 1)) {
    throw InvalidInstanceError(who + "acceptance rate a must be in (0, 1], got " +
                               to_display_string(j.a));
  }
  if (!(j.q >= 0 && j.q < 1)) {
    throw InvalidInstanceError(who + "feedback rate q must be in [0, 1), got " +
                               to_display_string(j.q));
  }
  if (j.c < 0) {
    throw InvalidInstanceError(who + "submission cost c must be >= 0, got " +
                               to_display_string(j.c));
  }
}

// Journals stored in decreasing order of u (stable on ties).
template <Scalar S>
class Instance {
 public:
  static Instance create(std::vector<Journal<S>> journals, Belief<S> prior,
                         S outside_option = S(0)) {
    if (journals.empty()) {
      throw InvalidInstanceError("an instance needs at least one journal");
    }
    for (std::size_t i = 0; i < journals.size(); ++i) {
      journals[i].input_index = i;
      validate_journal(journals[i]);
    }
    std::stable_sort(journals.begin(), journals.end(),
                     [](const Journal<S>& x, const Journal<S>& y) {
                       return x.u > y.u;
                     });
    Instance inst;
    inst.journals_ = std::move(journals);
    inst.prior_ = std::move(prior);
    inst.outside_option_ = std::move(outside_option);
    return inst;
  }

  std::size_t size() const { return journals_.size(); }
  const Journal<S>& journal(std::size_t i) const { return journals_.at(i); }
  const std::vector<Journal<S>>& journals() const { return journals_; }
  const Belief<S>& prior() const { return prior_; }
  const S& outside_option() const { return outside_option_; }

  // False when two journals share an acceptance payoff; ties are kept in
  // input order.
  bool distinct_payoffs() const {
    for (std::size_t i = 1; i < journals_.size(); ++i) {
      if (journals_[i].u == journals_[i - 1].u) return false;
    }
    return true;
  }

  Instance with_prior(Belief<S> prior) const {
    Instance copy = *this;
    copy.prior_ = std::move(prior);
    return copy;
  }

  // Journals in the caller's original order (for serialization).
  std::vector<Journal<S>> journals_in_input_order() const {
    std::vector<Journal<S>> out = journals_;
    std::sort(out.begin(), out.end(),
              [](const Journal<S>& x, const Journal<S>& y) {
                return x.input_index < y.input_index;
              });
    return out;
  }

  friend bool operator==(const Instance& x, const Instance& y) {
    return x.journals_ == y.journals_ && x.prior_ == y.prior_ &&
           x.outside_option_ == y.outside_option_;
  }

 private:
  template <Scalar>
  friend class Instance;

  std::vector<Journal<S>> journals_;
  Belief<S> prior_;
  S outside_option_ = S(0);
};

inline Instance<double> to_float(const Instance<Rational>& inst) {
  std::vector<Journal<double>> js;
  for (const auto& j : inst.journals_in_input_order()) {
    js.push_back({j.name, to_double(j.u), to_double(j.a), to_double(j.q),
                  to_double(j.c), 0});
  }
  return Instance<double>::create(
      std::move(js), Belief<double>(to_double(inst.prior().high())),
      to_double(inst.outside_option()));
}

// A permutation of journal indices: order[t] is the journal tried in period
// t+1. Indices refer to the u-sorted instance.
class SearchOrder {
 public:
  SearchOrder() = default;

  explicit SearchOrder(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (int j : perm_) {
      if (j < 0 || static_cast<std::size_t>(j) >= perm_.size() || seen[j]) {
        throw InvalidOrderError("not a permutation: " + to_string());
      }
      seen[j] = true;
    }
  }

  static SearchOrder identity(std::size_t n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SearchOrder order;
    order.perm_ = std::move(perm);
    return order;
  }

  std::size_t size() const { return perm_.size(); }
  int operator[](std::size_t t) const { return perm_[t]; }
  const std::vector<int>& perm() const { return perm_; }
  bool is_identity() const {
    for (std::size_t t = 0; t < perm_.size(); ++t) {
      if (perm_[t] != static_cast<int>(t)) return false;
    }
    return true;
  }

  SearchOrder swapped(std::size_t t) const {
    SearchOrder out = *this;
    std::swap(out.perm_.at(t), out.perm_.at(t + 1));
    return out;
  }

  // 1-based, e.g. "(2,1)".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t t = 0; t < perm_.size(); ++t) {
      if (t > 0) s += ",";
      s += std::to_string(perm_[t] + 1);
    }
    return s + ")";
  }

  friend bool operator==(const SearchOrder&, const SearchOrder&) = default;
  friend auto operator<=>(const SearchOrder&, const SearchOrder&) = default;

 private:
  std::vector<int> perm_;
};

template <Scalar S>
void require_order_fits(const Instance<S>& inst, const SearchOrder& order) {
  if (order.size() != inst.size()) {
    throw InvalidOrderError("order " + order.to_string() + " has " +
                            std::to_string(order.size()) +
                            " entries but the instance has " +
                            std::to_string(inst.size()) + " journals");
  }
}

// 1 - a mu_H: probability of rejection.
template <Scalar S>
S rejection_probability(const Journal<S>& j, const Belief<S>& b) {
  S r = S(1) - j.a * b.high();
  return r;
}

// Posterior after a rejection by j:
//   f_j(mu) = ((1 - a - q) mu + q) / (1 - a mu).
// When rejection has probability zero (a = 1, mu = 1) the posterior is set
// to 1; that continuation carries zero weight.
template <Scalar S>
Belief<S> update_belief(const Journal<S>& j, const Belief<S>& b) {
  const S denom = rejection_probability(j, b);
  if (denom == 0) return Belief<S>::unchecked(S(1));
  S num = (S(1) - j.a - j.q) * b.high() + j.q;
  S mu = num / denom;
  return Belief<S>::unchecked(std::move(mu));
}

template <Scalar S>
struct EvaluationTrace {
  std::vector<Belief<S>> beliefs;  // I + 1 entries
  std::vector<S> reach;            // I + 1 entries, reach[0] = 1
  std::vector<bool> reachable;     // false once a zero-probability rejection occurs
  std::vector<S> period_values;    // I + 1 entries; the last is reach[I] * outside
  S total = S(0);
};

template <Scalar S>
EvaluationTrace<S> evaluate(const Instance<S>& inst, const SearchOrder& order) {
  require_order_fits(inst, order);
  const std::size_t n = inst.size();
  EvaluationTrace<S> tr;
  tr.beliefs.reserve(n + 1);
  tr.reach.reserve(n + 1);
  tr.reachable.reserve(n + 1);
  tr.period_values.reserve(n + 1);
  Belief<S> belief = inst.prior();
  S reach = S(1);
  bool reachable = true;
  for (std::size_t t = 0; t < n; ++t) {
    const Journal<S>& j = inst.journal(order[t]);
    tr.beliefs.push_back(belief);
    tr.reach.push_back(reach);
    tr.reachable.push_back(reachable);
    S value = reach * (j.u * j.a * belief.high() - j.c);
    tr.total += value;
    tr.period_values.push_back(std::move(value));
    const S reject = rejection_probability(j, belief);
    if (reject == 0) reachable = false;
    reach *= reject;
    belief = update_belief(j, belief);
  }
  tr.beliefs.push_back(belief);
  tr.reach.push_back(reach);
  tr.reachable.push_back(reachable);
  S outside = reach * inst.outside_option();
  tr.total += outside;
  tr.period_values.push_back(std::move(outside));
  return tr;
}

// evaluate(...).total without materializing the trace.
template <Scalar S>
S expected_payoff(const Instance<S>& inst, const SearchOrder& order) {
  require_order_fits(inst, order);
  S total = S(0);
  S reach = S(1);
  Belief<S> belief = inst.prior();
  for (std::size_t t = 0; t < inst.size(); ++t) {
    const Journal<S>& j = inst.journal(order[t]);
    total += reach * (j.u * j.a * belief.high() - j.c);
    reach *= rejection_probability(j, belief);
    belief = update_belief(j, belief);
  }
  total += reach * inst.outside_option();
  return total;
}

template <Scalar S>
std::vector<Belief<S>> belief_path(const Instance<S>& inst,
                                   const SearchOrder& order) {
  return evaluate(inst, order).beliefs;
}

template <Scalar S>
std::vector<S> survival_schedule(const Instance<S>& inst,
                                 const SearchOrder& order) {
  return evaluate(inst, order).reach;
}

// Shifts every acceptance payoff and the outside option by -K (an outside
// option of 0 becomes -K). Every order's expected payoff drops by exactly K
// because exit probabilities sum to one, so the set of optimal orders is
// unchanged.
template <Scalar S>
Instance<S> normalize(const Instance<S>& inst, const S& shift) {
  std::vector<Journal<S>> js = inst.journals_in_input_order();
  for (auto& j : js) j.u -= shift;
  S outside = inst.outside_option() - shift;
  return Instance<S>::create(std::move(js), inst.prior(), std::move(outside));
}

}  // namespace jss

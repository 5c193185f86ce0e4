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

// Command line front end.
//
// Exit codes: 0 success, 1 usage, 2 invalid instance (including an instance
// that does not meet the requested algorithm's precondition), 3 a
// verification claim was falsified.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jss/jss.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInstance = 2;
constexpr int kExitFalsified = 3;

struct UsageError : jss::Error {
  using jss::Error::Error;
};

struct Config {
  std::string instance_path;
  std::string prior;
  std::string mode = "exact";
  std::string algorithm = "auto";
  std::string order;
  std::string grid = "0:1:0.01";
  std::string output;
  std::string policy = "max_over_journals";
  std::string suite = "all";
  bool json = false;
  unsigned threads = 0;
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  std::size_t max_journals = 5;
  std::size_t episodes = 100000;
  std::size_t verify_episodes = 1000000;
};

jss::Instance<jss::Rational> load(const Config& cfg) {
  auto inst = jss::load_instance(cfg.instance_path);
  if (!cfg.prior.empty()) {
    inst = inst.with_prior(jss::Belief<jss::Rational>(jss::parse_rational(cfg.prior)));
  }
  return inst;
}

bool exact_mode(const Config& cfg) { return cfg.mode == "exact"; }

// Writes to --output when given, stdout otherwise.
void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw UsageError("cannot write '" + cfg.output + "'");
  out << text;
}

// "2,1" (1-based) -> SearchOrder on the sorted instance. Journal names are
// accepted too.
template <jss::Scalar S>
jss::SearchOrder parse_order(const jss::Instance<S>& inst, const std::string& text) {
  std::vector<int> perm;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    int index = -1;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (inst.journal(i).name == token) index = static_cast<int>(i);
    }
    if (index < 0) {
      try {
        std::size_t used = 0;
        index = std::stoi(token, &used) - 1;
        if (used != token.size()) index = -1;
      } catch (const std::exception&) {
        index = -1;
      }
    }
    if (index < 0) throw UsageError("cannot read journal '" + token + "' in --order");
    perm.push_back(index);
  }
  jss::SearchOrder order(perm);
  jss::require_order_fits(inst, order);
  return order;
}

template <jss::Scalar S>
std::string names(const jss::Instance<S>& inst, const jss::SearchOrder& order) {
  std::string s;
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t > 0) s += " -> ";
    s += inst.journal(order[t]).name;
  }
  return s;
}

template <jss::Scalar S>
std::string value_string(const S& v) {
  if constexpr (jss::kIsExact<S>) {
    return jss::to_fraction_string(v) + " (" + jss::to_decimal_string(jss::to_double(v)) + ")";
  } else {
    return jss::to_decimal_string(v);
  }
}

// ---------------------------------------------------------------------------

template <jss::Scalar S>
int solve(const Config& cfg, const jss::Instance<S>& inst) {
  jss::SolveOptions options;
  options.threads = cfg.threads;
  jss::SolveResult<S> result;
  if (cfg.algorithm == "auto") {
    result = jss::solve_auto(inst, options);
  } else if (cfg.algorithm == "brute") {
    result = jss::brute_force_optimal(inst, options);
  } else if (cfg.algorithm == "dp") {
    result = jss::subset_dp_optimal(inst, options);
  } else if (cfg.algorithm == "local") {
    const auto start = cfg.order.empty() ? jss::monotone_order(inst) : parse_order(inst, cfg.order);
    result = jss::pairwise_swap_local_search(inst, start);
  } else {
    // index
    const auto order = jss::index_order_no_feedback(inst);
    result.best_order = order;
    result.best_value = jss::expected_payoff(inst, order);
    result.argmax_set = {order};
    result.method = jss::SolveMethod::kIndex;
    result.warnings.push_back("index rule: argmax_set lists only the index order");
  }
  if (cfg.json) {
    jss::Json doc = jss::to_json(inst, result);
    doc["mode"] = cfg.mode;
    doc["prior_h"] = jss::scalar_to_json(inst.prior().high());
    doc["distinct_payoffs"] = inst.distinct_payoffs();
    emit(cfg, doc.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream out;
  out << "journals (by decreasing u):";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out << " " << i + 1 << "=" << inst.journal(i).name;
  }
  out << "\nprior: " << jss::to_display_string(inst.prior().high()) << "\n";
  out << "method: " << jss::to_string(result.method) << "\n";
  out << "best order: " << result.best_order.to_string() << "  " << names(inst, result.best_order)
      << "\n";
  out << "value: " << value_string(result.best_value) << "\n";
  out << "argmax:";
  for (const auto& o : result.argmax_set) out << " " << o.to_string();
  out << "\nmonotone optimal: "
      << (result.in_argmax(jss::monotone_order(inst)) ? "yes" : "no") << "\n";
  if (!inst.distinct_payoffs()) out << "note: payoff ties, broken by input order\n";
  for (const auto& w : result.warnings) out << "warning: " << w << "\n";
  emit(cfg, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

template <jss::Scalar S>
int check(const Config& cfg, const jss::Instance<S>& inst) {
  const auto policy = jss::parse_threshold_policy(cfg.policy);
  const auto regularity = jss::check_regularity(inst);
  const auto independence = jss::check_order_independence(inst);
  const auto feedback =
      jss::check_globally_bounded_weak_feedback(inst, policy, 8, cfg.threads);
  if (cfg.json) {
    jss::Json doc;
    doc["prior_h"] = jss::scalar_to_json(inst.prior().high());
    doc["distinct_payoffs"] = inst.distinct_payoffs();
    doc["regularity"] = jss::to_json(regularity);
    jss::Json oi = jss::to_json(static_cast<const jss::ConditionReport<S>&>(independence));
    jss::Json matrix = jss::Json::array();
    for (const auto& row : independence.antisymmetric) {
      jss::Json r = jss::Json::array();
      for (const auto& v : row) r.push_back(jss::scalar_to_json(v));
      matrix.push_back(std::move(r));
    }
    oi["antisymmetric"] = std::move(matrix);
    doc["order_independence"] = std::move(oi);
    jss::Json fb = jss::to_json(static_cast<const jss::ConditionReport<S>&>(feedback));
    fb["policy"] = std::string(jss::to_string(feedback.policy));
    fb["min_belief"] = jss::scalar_to_json(feedback.min_belief.high());
    jss::Json path = jss::Json::array();
    for (int j : feedback.min_path) path.push_back(j + 1);
    fb["min_path"] = std::move(path);
    fb["paths_checked"] = feedback.paths_checked;
    doc["weak_feedback"] = std::move(fb);
    jss::Json strong = jss::Json::array();
    for (const auto& j : inst.journals()) {
      const auto s = jss::check_strong_feedback_region(j, inst.prior());
      strong.push_back({{"journal", j.name},
                        {"strong", s.strong},
                        {"posterior", jss::scalar_to_json(s.posterior.high())},
                        {"fixed_point", jss::scalar_to_json(s.fixed_point)},
                        {"weak_bound", jss::scalar_to_json(s.weak_bound)}});
    }
    doc["strong_feedback"] = std::move(strong);
    emit(cfg, doc.dump(2) + "\n");
    return kExitOk;
  }
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "prior: " << jss::to_display_string(inst.prior().high()) << "\n";
  out << "distinct payoffs: " << mark(inst.distinct_payoffs()) << "\n";
  out << "regular: " << mark(regularity.flag("regular"))
      << "\nstrictly regular: " << mark(regularity.flag("strict"))
      << "\nexponentially regular: " << mark(regularity.flag("exponential")) << "\n";
  for (const auto& w : regularity.witnesses) out << "  " << w.description << "\n";
  out << "order independent: " << mark(independence.flag("order_independent")) << "\n";
  out << "small costs: " << mark(independence.flag("small_costs")) << "\n";
  for (const auto& w : independence.witnesses) {
    out << "  " << w.description << ":";
    for (const auto& v : w.values) out << " " << jss::to_display_string(v);
    out << "\n";
  }
  out << "globally bounded weak feedback (" << jss::to_string(feedback.policy)
      << "): " << mark(feedback.pass) << "\n";
  out << "  min path belief " << jss::to_display_string(feedback.min_belief.high())
      << " after prefix (";
  for (std::size_t k = 0; k < feedback.min_path.size(); ++k) {
    out << (k ? "," : "") << feedback.min_path[k] + 1;
  }
  out << "), " << feedback.paths_checked << " beliefs checked\n";
  for (const auto& w : feedback.witnesses) out << "  " << w.description << "\n";
  for (const auto& j : inst.journals()) {
    const auto s = jss::check_strong_feedback_region(j, inst.prior());
    out << "strong feedback at " << j.name << ": " << mark(s.strong) << " (posterior "
        << jss::to_display_string(s.posterior.high()) << ", fixed point "
        << jss::to_display_string(s.fixed_point) << ")\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

int threshold(const Config& cfg) {
  if (!exact_mode(cfg)) {
    throw UsageError("threshold certification needs --mode exact");
  }
  const auto inst = load(cfg);
  const auto r = jss::prior_threshold_2box(inst);
  if (cfg.json) {
    emit(cfg, jss::to_json(r).dump(2) + "\n");
  } else if (r.kind == jss::ThresholdKind::kThreshold) {
    emit(cfg, jss::to_fraction_string(r.mu_star) + "\n");
  } else {
    emit(cfg, std::string(jss::to_string(r.kind)) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

std::string order_token(const jss::SearchOrder& order) {
  std::string s;
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t > 0) s += "-";
    s += std::to_string(order[t] + 1);
  }
  return s;
}

template <jss::Scalar S>
int sweep(const Config& cfg, const jss::Instance<S>& inst) {
  std::vector<jss::Belief<S>> grid;
  for (const auto& mu : jss::parse_grid(cfg.grid)) {
    grid.emplace_back(jss::from_rational<S>(mu));
  }
  jss::SolveOptions options;
  options.threads = cfg.threads;
  const auto table = jss::payoff_sweep(inst, grid, options);
  std::ostringstream out;
  out << "mu";
  for (const auto& o : table.orders) out << ",value_" << order_token(o);
  if (table.orders.empty()) out << ",best_value";
  out << ",best_order\n";
  for (const auto& row : table.rows) {
    out << jss::to_decimal_string(jss::to_double(row.mu.high()));
    for (const auto& v : row.values) out << "," << jss::to_decimal_string(jss::to_double(v));
    if (table.orders.empty()) out << "," << jss::to_decimal_string(jss::to_double(row.best_value));
    out << "," << order_token(row.best_order) << "\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

int simulate(const Config& cfg) {
  const auto exact = load(cfg);
  const auto inst = jss::to_float(exact);
  const auto order = cfg.order.empty() ? jss::monotone_order(inst) : parse_order(inst, cfg.order);
  const auto est = jss::estimate_value(inst, order, cfg.episodes, cfg.seed, cfg.threads);
  const auto surv = jss::empirical_survival(inst, order, cfg.episodes, cfg.seed, cfg.threads);
  const auto trace = jss::evaluate(inst, order);
  if (cfg.json) {
    jss::Json doc;
    doc["order"] = order.to_string();
    doc["episodes"] = cfg.episodes;
    doc["seed"] = cfg.seed;
    doc["mean"] = est.mean;
    doc["stderr"] = est.stderr_ ? jss::Json(*est.stderr_) : jss::Json(nullptr);
    doc["exact"] = trace.total;
    doc["reach_simulated"] = surv.reach;
    doc["reach_exact"] = trace.reach;
    emit(cfg, doc.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream out;
  out << "order: " << order.to_string() << "  " << names(inst, order) << "\n";
  out << "episodes: " << cfg.episodes << ", seed " << cfg.seed << "\n";
  out << "simulated mean: " << jss::to_decimal_string(est.mean);
  if (est.stderr_) out << " (stderr " << jss::to_decimal_string(*est.stderr_) << ")";
  out << "\nexact value: " << jss::to_decimal_string(trace.total) << "\n";
  out << "period  reach(sim)  reach(exact)\n";
  for (std::size_t t = 0; t < surv.reach.size(); ++t) {
    out << "  " << t + 1 << "     " << jss::to_decimal_string(surv.reach[t]) << "  "
        << jss::to_decimal_string(trace.reach[t]) << "\n";
  }
  emit(cfg, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------

int verify(const Config& cfg) {
  jss::SuiteOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.max_journals = cfg.max_journals;
  opts.threads = cfg.threads;
  opts.episodes = cfg.verify_episodes;
  const auto reports = jss::run_suite(cfg.suite, opts);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (cfg.json) {
    jss::Json doc = jss::Json::array();
    for (const auto& r : reports) doc.push_back(jss::to_json(r));
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& r : reports) text += jss::to_text(r);
    emit(cfg, text);
  }
  return ok ? kExitOk : kExitFalsified;
}

template <class Fn>
int dispatch_mode(const Config& cfg, Fn&& fn) {
  const auto inst = load(cfg);
  if (exact_mode(cfg)) return fn(inst);
  return fn(jss::to_float(inst));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal submission orders for search without recall"};
  app.require_subcommand(1);
  Config cfg;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", cfg.instance_path, "instance JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--prior", cfg.prior, "override the prior, e.g. 0.7 or 17/29");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "numeric mode")
        ->check(CLI::IsMember({"exact", "float"}));
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "machine readable output");
    sub->add_option("--threads", cfg.threads, "worker threads (default: JSS_THREADS or all cores)");
    sub->add_option("--output", cfg.output, "write output to this file");
  };

  auto* solve_cmd = app.add_subcommand("solve", "optimal submission order");
  add_instance(solve_cmd);
  add_mode(solve_cmd);
  add_common(solve_cmd);
  solve_cmd->add_option("--algorithm", cfg.algorithm, "auto, brute, dp, index or local")
      ->check(CLI::IsMember({"auto", "brute", "dp", "index", "local"}));
  solve_cmd->add_option("--order", cfg.order, "start order for local search, e.g. 2,1");

  auto* check_cmd = app.add_subcommand("check", "structural conditions");
  add_instance(check_cmd);
  add_mode(check_cmd);
  add_common(check_cmd);
  check_cmd->add_option("--policy", cfg.policy, "weak feedback threshold policy")
      ->check(CLI::IsMember({"box1", "max_over_journals", "per_remaining"}));

  auto* threshold_cmd = app.add_subcommand("threshold", "exact prior threshold for two journals");
  add_instance(threshold_cmd);
  add_mode(threshold_cmd);
  add_common(threshold_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "payoff of each order over a prior grid (CSV)");
  add_instance(sweep_cmd);
  add_mode(sweep_cmd);
  add_common(sweep_cmd);
  sweep_cmd->add_option("--grid", cfg.grid, "start:stop:step");

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of an order's value");
  add_instance(simulate_cmd);
  add_common(simulate_cmd);
  simulate_cmd->add_option("--order", cfg.order, "order to simulate (default monotone)");
  simulate_cmd->add_option("--episodes", cfg.episodes, "episodes")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", cfg.seed, "random seed");

  auto* verify_cmd = app.add_subcommand("verify", "randomized verification suites");
  add_common(verify_cmd);
  std::string suites = "all";
  for (const auto& n : jss::suite_names()) suites += ", " + n;
  verify_cmd->add_option("--suite", cfg.suite, suites);
  verify_cmd->add_option("--trials", cfg.trials, "trials per claim");
  verify_cmd->add_option("--seed", cfg.seed, "base seed; trial t uses seed + t");
  verify_cmd->add_option("--max-journals", cfg.max_journals, "largest instance size");
  verify_cmd->add_option("--episodes", cfg.verify_episodes, "episodes per Monte Carlo case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return dispatch_mode(cfg, [&](const auto& inst) { return solve(cfg, inst); });
    if (*check_cmd) return dispatch_mode(cfg, [&](const auto& inst) { return check(cfg, inst); });
    if (*threshold_cmd) return threshold(cfg);
    if (*sweep_cmd) return dispatch_mode(cfg, [&](const auto& inst) { return sweep(cfg, inst); });
    if (*simulate_cmd) return simulate(cfg);
    if (*verify_cmd) return verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const jss::InvalidOrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const jss::InvalidInstanceError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const jss::PreconditionError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const jss::SizeLimitError& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const jss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

// Copyright 2026 The Recourse Matching Authors
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

// Command line front end: bound tables, stream replay, adversarial duels and
// lower-bound instance generation. Exits with 1 when a run breaks a proven
// guarantee or an invariant, 2 on bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "recourse/adversaries.hpp"
#include "recourse/error.hpp"
#include "recourse/harness.hpp"
#include "recourse/matchers.hpp"

namespace {

using recourse::RunReport;

int finish(const RunReport& report, const std::string& csv_path) {
  std::cout << recourse::report_summary(report);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      throw recourse::Error(recourse::ErrorCode::kParse,
                            "cannot write " + csv_path);
    }
    out << recourse::report_csv(report);
  }
  return report.bound_violations > 0 || !report.violations.empty() ? 1 : 0;
}

recourse::MatcherOptions matcher_options(const std::optional<int>& L,
                                         const std::optional<double>& r) {
  recourse::MatcherOptions opts;
  opts.L = L;
  opts.r = r;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online matching under edge-bounded recourse"};
  app.require_subcommand(1);

  int k_min = 4, k_max = 22;
  auto* bounds = app.add_subcommand("bounds", "Print the competitive bound table");
  bounds->add_option("--k-min", k_min)->capture_default_str();
  bounds->add_option("--k-max", k_max)->capture_default_str();

  std::string algo = "greedy";
  int k = 4;
  std::string model_name = "arrival";
  std::string instance;
  std::optional<int> L;
  std::optional<double> r;
  std::string csv_path;
  const std::vector<std::string> algos = {"greedy", "lgreedy", "amp"};

  auto* simulate = app.add_subcommand("simulate", "Replay an event stream");
  simulate->add_option("--algo", algo)->required()->check(
      CLI::IsMember(algos));
  simulate->add_option("--k", k, "Recourse budget")->required();
  simulate->add_option("--model", model_name)
      ->check(CLI::IsMember({"arrival", "limited", "full"}))
      ->capture_default_str();
  simulate->add_option("--instance", instance, "Event stream file")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--L", L, "L-Greedy path length parameter");
  simulate->add_option("--r", r, "AMP level base");
  simulate->add_option("--csv", csv_path, "Write per-step CSV here");

  std::string adversary = "det";
  double epsilon = 0.05;
  int depth = 1;
  std::size_t max_moves = 10000;
  auto* duel = app.add_subcommand("duel", "Run an adaptive adversary");
  duel->add_option("--adversary", adversary)
      ->required()
      ->check(CLI::IsMember({"det", "string", "fulldep"}));
  duel->add_option("--algo", algo)->required()->check(CLI::IsMember(algos));
  duel->add_option("--k", k)->required();
  duel->add_option("--epsilon", epsilon)->capture_default_str();
  duel->add_option("--depth", depth, "Recursion depth (det, k = 3)")
      ->capture_default_str();
  duel->add_option("--max-moves", max_moves)->capture_default_str();
  duel->add_option("--L", L);
  duel->add_option("--r", r);
  duel->add_option("--csv", csv_path);

  std::string family;
  int n = 50, copies = 1;
  int gen_L = 6;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a lower-bound event stream");
  gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"greedy-lb", "lgreedy-lb"}));
  gen->add_option("--k", k)->required();
  gen->add_option("--n", n)->capture_default_str();
  gen->add_option("--L", gen_L)->capture_default_str();
  gen->add_option("--copies", copies)->capture_default_str();
  gen->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bounds) {
      std::cout << recourse::emit_bound_table(k_min, k_max);
      return 0;
    }
    if (*simulate) {
      const auto stream = recourse::read_event_stream(instance);
      const auto model = recourse::parse_model(model_name);
      if (stream.model != model || stream.k != k) {
        std::cerr << "note: instance header says k " << stream.k << " model "
                  << recourse::to_string(stream.model)
                  << "; running with the command line values\n";
      }
      auto matcher = recourse::make_matcher(algo, k, model, matcher_options(L, r));
      return finish(recourse::replay(stream.events, *matcher, model), csv_path);
    }
    if (*duel) {
      auto adv = recourse::make_adversary(adversary, k, epsilon, depth);
      auto matcher =
          recourse::make_matcher(algo, k, adv->model(), matcher_options(L, r));
      return finish(recourse::duel(*adv, *matcher, max_moves), csv_path);
    }
    if (*gen) {
      recourse::EventStream stream;
      stream.k = k;
      stream.model = recourse::Model::kArrival;
      stream.events = family == "greedy-lb"
                          ? recourse::greedy_lb_stream(k, n)
                          : recourse::lgreedy_lb_stream(k, gen_L, copies);
      recourse::write_event_stream(out_path, stream);
      std::cout << "wrote " << stream.events.size() << " events to "
                << out_path << "\n";
      return 0;
    }
  } catch (const recourse::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

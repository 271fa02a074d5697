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


// Drives matchers through fixed event streams or adaptive adversaries while
// tracking the true optimum, and serializes streams and results.

#ifndef RECOURSE_HARNESS_HPP_
#define RECOURSE_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recourse/adversaries.hpp"
#include "recourse/graph.hpp"
#include "recourse/matchers.hpp"

namespace recourse {

// opt/alg, infinite when only alg is zero and 1 when both are.
double ratio_of(std::size_t opt, std::size_t alg);

struct StepRecord {
  std::size_t step = 0;
  Event event;
  std::size_t alg = 0;
  std::size_t opt = 0;
  double ratio = 1.0;
  std::uint64_t flips = 0;
  std::optional<int> phase;
};

struct RunReport {
  std::string algo;
  std::string params;
  std::string adversary;
  int k = 0;
  Model model = Model::kArrival;
  std::optional<double> guarantee;

  std::vector<StepRecord> steps;
  std::size_t final_alg = 0;
  std::size_t final_opt = 0;
  double final_ratio = 1.0;
  double max_ratio = 1.0;
  std::size_t bound_violations = 0;
  // Matcher and adversary invariant failures, oracle disagreements.
  std::vector<std::string> violations;

  std::size_t moves = 0;
  bool move_cap_hit = false;
  std::string stop_reason;
};

struct RunOptions {
  // Cross-check the incremental optimum by exhaustive search while the
  // graph has at most this many live edges (0 disables).
  std::size_t brute_force_limit = 24;
  bool check_graph_invariants = true;
  bool keep_steps = true;
};

RunReport replay(std::span<const Event> stream, OnlineMatcher& matcher,
                 Model model, const RunOptions& opts = {});

// The model is the adversary's; the matcher must have been built for it.
RunReport duel(AdaptiveAdversary& adversary, OnlineMatcher& matcher,
               std::size_t max_moves, const RunOptions& opts = {});

struct EventStream {
  int k = 0;
  Model model = Model::kArrival;
  std::vector<Event> events;
};

EventStream parse_event_stream(std::istream& in);
EventStream read_event_stream(const std::string& path);
void write_event_stream(std::ostream& out, const EventStream& stream);
void write_event_stream(const std::string& path, const EventStream& stream);

std::string report_csv(const RunReport& report);
std::string report_summary(const RunReport& report);

std::string emit_bound_table(int k_min, int k_max);

}  // namespace recourse

#endif  // RECOURSE_HARNESS_HPP_

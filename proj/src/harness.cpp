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


#include "recourse/harness.hpp"

#include <climits>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "recourse/bounds.hpp"
#include "recourse/opt_oracle.hpp"

namespace recourse {
namespace {

std::string fixed6(double x) {
  if (std::isinf(x)) return "inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Owns the unconstrained reference copy of the instance and the bookkeeping
// shared by replays and duels.
class Session {
 public:
  Session(OnlineMatcher& m, Model model, const RunOptions& opts)
      : m_(m), model_(model), opts_(opts), ref_(INT_MAX), oracle_(ref_) {
    if (m.model() != model) {
      throw Error(ErrorCode::kBadParams,
                  "matcher runs the " + std::string(to_string(m.model())) +
                      " model, stream is " + std::string(to_string(model)));
    }
    rep_.algo = m.name();
    rep_.params = m.params();
    rep_.k = m.graph().budget();
    rep_.model = model;
    if (model != Model::kFull) rep_.guarantee = m.guarantee();
  }

  std::size_t opt() const { return oracle_.size(); }

  void apply(const Event& ev) {
    if (ev.action == EventAction::kArrive) {
      m_.on_arrival(ev.u, ev.v);
      oracle_.insert(ref_.add_edge(ev.u, ev.v));
    } else {
      if (model_ == Model::kArrival) {
        throw Error(ErrorCode::kIllegalEvent,
                    "departure " + to_string(ev) + " in the arrival model");
      }
      m_.on_departure(ev.u, ev.v);
      const EdgeId e = *ref_.find_edge(ev.u, ev.v);
      ref_.remove_edge(e, Model::kFull);
      oracle_.erase(e);
    }
    record(ev);
  }

  RunReport finish() {
    for (const auto& v : m_.violations()) rep_.violations.push_back(v);
    rep_.final_alg = m_.size();
    rep_.final_opt = oracle_.size();
    rep_.final_ratio = ratio_of(rep_.final_opt, rep_.final_alg);
    return std::move(rep_);
  }

  RunReport& report() { return rep_; }

 private:
  void record(const Event& ev) {
    ++step_;
    const Graph& g = m_.graph();
    const std::size_t opt = oracle_.size();
    if (opts_.brute_force_limit > 0 &&
        ref_.live_edge_count() <= opts_.brute_force_limit) {
      const std::size_t exact = brute_force_max_matching(edge_pairs(ref_));
      if (exact != opt) {
        rep_.violations.push_back("step " + std::to_string(step_) +
                                  ": oracle " + std::to_string(opt) +
                                  " != exhaustive " + std::to_string(exact));
      }
    }
    if (opts_.check_graph_invariants) {
      if (auto bad = g.check_invariants()) {
        rep_.violations.push_back("step " + std::to_string(step_) + ": " + *bad);
      }
    }
    StepRecord r;
    r.step = step_;
    r.event = ev;
    r.alg = g.matching_size();
    r.opt = opt;
    r.ratio = ratio_of(opt, r.alg);
    r.flips = g.total_flips();
    r.phase = m_.phase();
    if (r.alg > r.opt) {
      rep_.violations.push_back("step " + std::to_string(step_) +
                                ": matching larger than the optimum");
    }
    rep_.max_ratio = std::max(rep_.max_ratio, r.ratio);
    if (rep_.guarantee && r.ratio > *rep_.guarantee + 1e-9) {
      ++rep_.bound_violations;
    }
    if (opts_.keep_steps) rep_.steps.push_back(r);
  }

  OnlineMatcher& m_;
  Model model_;
  RunOptions opts_;
  Graph ref_;
  OptOracle oracle_;
  RunReport rep_;
  std::size_t step_ = 0;
};

}  // namespace

double ratio_of(std::size_t opt, std::size_t alg) {
  if (alg == 0) return opt == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(opt) / static_cast<double>(alg);
}

RunReport replay(std::span<const Event> stream, OnlineMatcher& matcher,
                 Model model, const RunOptions& opts) {
  if (model == Model::kArrival) {
    for (const Event& ev : stream) {
      if (ev.action == EventAction::kDepart) {
        throw Error(ErrorCode::kIllegalEvent,
                    "departure " + to_string(ev) + " in the arrival model");
      }
    }
  }
  Session s(matcher, model, opts);
  for (const Event& ev : stream) s.apply(ev);
  return s.finish();
}

RunReport duel(AdaptiveAdversary& adversary, OnlineMatcher& matcher,
               std::size_t max_moves, const RunOptions& opts) {
  if (max_moves == 0) throw Error(ErrorCode::kBadParams, "max_moves must be positive");
  Session s(matcher, adversary.model(), opts);
  s.report().adversary = adversary.name();
  std::size_t moves = 0;
  while (true) {
    if (moves >= max_moves) {
      s.report().move_cap_hit = true;
      s.report().stop_reason = "move cap";
      break;
    }
    AdversaryMove mv = adversary.next(matcher.graph(), s.opt());
    if (mv.stop) {
      s.report().stop_reason = mv.reason;
      break;
    }
    ++moves;
    for (const Event& ev : mv.events) s.apply(ev);
  }
  s.report().moves = moves;
  for (const auto& v : adversary.violations())
    s.report().violations.push_back(adversary.name() + ": " + v);
  return s.finish();
}

EventStream parse_event_stream(std::istream& in) {
  EventStream out;
  bool have_k = false, have_model = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "k") {
      if (!(ss >> out.k) || out.k < 1) fail("bad k");
      have_k = true;
    } else if (head == "model") {
      std::string name;
      if (!(ss >> name)) fail("missing model");
      try {
        out.model = parse_model(name);
      } catch (const Error&) {
        fail("unknown model '" + name + "'");
      }
      have_model = true;
    } else if (head == "+" || head == "-") {
      long long u = 0, v = 0;
      if (!(ss >> u >> v) || u < 1 || v < 1) fail("expected two positive vertex ids");
      out.events.push_back(head == "+" ? Event::arrive(u, v) : Event::depart(u, v));
    } else {
      fail("unexpected '" + head + "'");
    }
    std::string extra;
    if (ss >> extra) fail("trailing '" + extra + "'");
  }
  if (!have_k || !have_model) {
    throw Error(ErrorCode::kParse, "stream needs both 'k' and 'model' headers");
  }
  return out;
}

EventStream read_event_stream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return parse_event_stream(in);
}

void write_event_stream(std::ostream& out, const EventStream& stream) {
  out << "k " << stream.k << "\nmodel " << to_string(stream.model) << "\n";
  for (const Event& ev : stream.events) out << to_string(ev) << "\n";
}

void write_event_stream(const std::string& path, const EventStream& stream) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  write_event_stream(out, stream);
}

std::string report_csv(const RunReport& report) {
  std::string out = "step,event,alg,opt,ratio,flips,phase\n";
  for (const StepRecord& r : report.steps) {
    out += std::to_string(r.step) + "," + to_string(r.event) + "," +
           std::to_string(r.alg) + "," + std::to_string(r.opt) + "," +
           fixed6(r.ratio) + "," + std::to_string(r.flips) + "," +
           (r.phase ? std::to_string(*r.phase) : "") + "\n";
  }
  return out;
}

std::string report_summary(const RunReport& r) {
  std::ostringstream s;
  s << "algo " << r.algo;
  if (!r.params.empty()) s << " (" << r.params << ")";
  s << " k " << r.k << " model " << to_string(r.model);
  if (!r.adversary.empty()) s << " adversary " << r.adversary;
  s << "\nsteps " << r.steps.size() << " final alg " << r.final_alg << " opt "
    << r.final_opt << " ratio " << fixed6(r.final_ratio) << " max "
    << fixed6(r.max_ratio) << "\n";
  if (r.guarantee) {
    s << "guarantee " << fixed6(*r.guarantee) << " violations "
      << r.bound_violations << "\n";
  }
  if (!r.adversary.empty()) {
    s << "moves " << r.moves << " stop " << r.stop_reason
      << (r.move_cap_hit ? " (cap hit)" : "") << "\n";
  }
  for (const auto& v : r.violations) s << "invariant: " << v << "\n";
  return s.str();
}

std::string emit_bound_table(int k_min, int k_max) {
  return bound_table_csv(bound_table(k_min, k_max));
}

}  // namespace recourse

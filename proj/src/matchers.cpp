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


#include "recourse/matchers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "recourse/augmenting_search.hpp"
#include "recourse/bounds.hpp"

namespace recourse {
namespace {

// The graph as seen by an algorithm that may not touch type-k edges: those
// edges vanish, and for odd k so do the vertices they hold matched.
struct BudgetView {
  const Graph& g;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (const auto& [w, e] : g.incident(v)) {
      if (g.is_blocked(e)) continue;
      auto m = g.mate_edge(w);
      if (m && g.is_blocked(*m)) continue;
      f(w);
    }
  }
  std::optional<Vertex> mate(Vertex v) const { return g.mate(v); }
};

std::string format_double(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

}  // namespace

OnlineMatcher::OnlineMatcher(int budget, Model model)
    : g_(budget), model_(model) {}

EdgeId OnlineMatcher::on_arrival(Vertex u, Vertex v) {
  const EdgeId e = g_.add_edge(u, v);
  after_arrival(e);
  return e;
}

void OnlineMatcher::on_departure(Vertex u, Vertex v) {
  auto e = g_.find_edge(u, v);
  if (!e) {
    throw Error(ErrorCode::kUnknownEdge, "no live edge (" + std::to_string(u) +
                                             "," + std::to_string(v) + ")");
  }
  const bool was_matched = g_.edge(*e).matched;
  g_.remove_edge(*e, model_);
  after_departure(*e, was_matched);
}

bool greedy_step(Graph& g) {
  for (Vertex root : g.vertices()) {
    if (g.is_matched(root)) continue;
    auto walk = find_augmenting_path(BudgetView{g}, root);
    if (walk.empty()) continue;
    g.apply_augmenting_path(g.path_component(walk));
    return true;
  }
  return false;
}

GreedyMatcher::GreedyMatcher(int budget, Model model)
    : OnlineMatcher(budget, model) {}

std::optional<double> GreedyMatcher::guarantee() const {
  return g_.budget() % 2 == 0 ? 1.5 : 2.0;
}

void GreedyMatcher::wake_component(Vertex start) {
  if (!g_.has_vertex(start)) return;
  std::vector<Vertex> stack{start};
  std::set<Vertex> seen{start};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!g_.is_matched(v)) pending_.insert(v);
    for (const auto& [w, e] : g_.incident(v)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
}

void GreedyMatcher::run() {
  while (!pending_.empty()) {
    const Vertex root = *pending_.begin();
    pending_.erase(pending_.begin());
    if (g_.is_matched(root)) continue;
    auto walk = find_augmenting_path(BudgetView{g_}, root);
    if (walk.empty()) continue;
    g_.apply_augmenting_path(g_.path_component(walk));
    ++augmentations_;
  }
}

void GreedyMatcher::after_arrival(EdgeId e) {
  wake_component(g_.edge(e).u);
  run();
}

void GreedyMatcher::after_departure(EdgeId e, bool was_matched) {
  // Losing an unmatched edge cannot create an augmenting path.
  if (!was_matched) return;
  wake_component(g_.edge(e).u);
  wake_component(g_.edge(e).v);
  run();
}

WeightLedger::WeightLedger(int budget, int L, double alpha)
    : budget_(budget), L_(L), alpha_(alpha) {}

void WeightLedger::distribute(const AlternatingComponent& path) {
  const std::size_t l = path.length() / 2;
  const double end_share = 0.5 - static_cast<double>(l) * alpha_;
  if (end_share < 0.0) {
    throw Error(ErrorCode::kNegativeEndpointWeight,
                "path of length " + std::to_string(path.length()) +
                    " leaves endpoints " + format_double("%.6f", end_share));
  }
  const auto& vs = path.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const bool end = i == 0 || i + 1 == vs.size();
    weight_[vs[i]] += end ? end_share : alpha_;
  }
  total_ += 1.0;
}

double WeightLedger::weight(Vertex v) const {
  auto it = weight_.find(v);
  return it == weight_.end() ? 0.0 : it->second;
}

std::optional<std::string> WeightLedger::check(const Graph& g) const {
  constexpr double kEps = 1e-9;
  double sum = 0.0;
  for (const auto& [v, w] : weight_) sum += w;
  if (std::abs(sum - static_cast<double>(g.matching_size())) > kEps) {
    return "ledger total " + format_double("%.9f", sum) + " != |ALG| " +
           std::to_string(g.matching_size());
  }
  const double matched_floor = 0.5 - L_ * alpha_;
  const double blocked_floor = matched_floor + (budget_ - 1) * alpha_;
  for (EdgeId e : g.live_edges()) {
    const EdgeState& s = g.edge(e);
    for (Vertex v : {s.u, s.v}) {
      if (s.matched && weight(v) < matched_floor - kEps) {
        return "matched vertex " + std::to_string(v) + " has weight " +
               format_double("%.9f", weight(v));
      }
      if (s.etype == budget_ && weight(v) < blocked_floor - kEps) {
        return "type-k endpoint " + std::to_string(v) + " has weight " +
               format_double("%.9f", weight(v));
      }
    }
  }
  return std::nullopt;
}

std::optional<AlternatingComponent> lgreedy_step(Graph& g,
                                                 const OptOracle& oracle,
                                                 int L) {
  const auto alg = g.matching();
  const auto opt = oracle.matching();
  std::optional<AlternatingComponent> best;
  for (auto& c : symmetric_difference(g, alg, opt, false)) {
    if (c.kind != ComponentKind::kAugmentingPath) continue;
    if (c.length() > static_cast<std::size_t>(2 * L + 1)) continue;
    if (std::any_of(c.edges.begin(), c.edges.end(),
                    [&](EdgeId e) { return g.is_blocked(e); })) {
      continue;
    }
    if (!best || c.length() < best->length()) best = std::move(c);
  }
  if (best) g.apply_augmenting_path(*best);
  return best;
}

LGreedyMatcher::LGreedyMatcher(int budget, Model model, int L)
    : OnlineMatcher(budget, model),
      L_(L),
      oracle_(g_),
      ledger_(budget, L, lgreedy_alpha(budget, L)) {
  if (L < 0) throw Error(ErrorCode::kBadParams, "L must be non-negative");
}

std::string LGreedyMatcher::params() const {
  return "L=" + std::to_string(L_) + " alpha=" +
         format_double("%.6f", ledger_.alpha());
}

std::optional<double> LGreedyMatcher::guarantee() const {
  const int k = g_.budget();
  if (k % 2 != 0) return std::nullopt;
  if (L_ == 1) return 1.5;
  if (k >= 4 && L_ == lgreedy_default_L(k)) return lgreedy_bound(k);
  return std::nullopt;
}

void LGreedyMatcher::run() {
  while (auto c = lgreedy_step(g_, oracle_, L_)) {
    ++augmentations_;
    ledger_.distribute(*c);
    if (!ledger_valid_) continue;
    if (auto bad = ledger_.check(g_)) report("ledger: " + *bad);
  }
}

void LGreedyMatcher::after_arrival(EdgeId e) {
  oracle_.insert(e);
  run();
}

void LGreedyMatcher::after_departure(EdgeId e, bool was_matched) {
  oracle_.erase(e);
  // A matched edge leaving takes its weight with it; the ledger no longer
  // tracks the matching from here on.
  if (was_matched) ledger_valid_ = false;
  run();
}

std::optional<int> amp_level(std::size_t opt, double r) {
  if (opt == 0) return std::nullopt;
  const double x = static_cast<double>(opt);
  const double slack = 1.0 + 1e-9;
  int l = static_cast<int>(std::floor(std::log(x) / std::log(r) + 1e-9));
  while (std::pow(r, l + 1) <= x * slack) ++l;
  while (l > 0 && std::pow(r, l) > x * slack) --l;
  return l;
}

AmpMatcher::AmpMatcher(int budget, Model model, double r)
    : OnlineMatcher(budget, model), r_(r), oracle_(g_) {
  if (budget % 2 != 0) {
    throw Error(ErrorCode::kOddBudget, "AMP needs an even budget");
  }
  if (!(r > 1.0)) throw Error(ErrorCode::kBadParams, "r must exceed 1");
}

std::string AmpMatcher::params() const {
  return "r=" + format_double("%.6f", r_);
}

std::optional<double> AmpMatcher::guarantee() const {
  const int k = g_.budget();
  if (k < 4) return std::nullopt;
  return amp_improved_objective(k, r_);
}

std::optional<int> AmpMatcher::phase() const {
  if (phases_.empty()) return std::nullopt;
  return phases_.back().phase;
}

void AmpMatcher::maybe_start_phase() {
  const auto level = amp_level(oracle_.size(), r_);
  if (!level) return;
  if (!phases_.empty() && *level <= phases_.back().ell) return;

  const auto alg = g_.matching();
  const auto opt = oracle_.matching();
  for (const auto& c : symmetric_difference(g_, alg, opt, true)) {
    g_.apply_alternating_component(c);
  }
  PhaseRecord rec;
  rec.phase = static_cast<int>(phases_.size()) + 1;
  rec.ell = *level;
  rec.opt = oracle_.size();
  rec.alg = g_.matching_size();
  for (Vertex v : g_.vertices()) {
    if (g_.vertex_type(v) == g_.budget()) ++rec.type_k_vertices;
  }
  phases_.push_back(rec);

  const int k = g_.budget();
  if (rec.phase >= k + 1) {
    const std::size_t bound = 2 * phases_[rec.phase - k].opt;
    if (rec.type_k_vertices > bound) {
      report("phase " + std::to_string(rec.phase) + ": " +
             std::to_string(rec.type_k_vertices) +
             " type-k vertices exceed 2*OPT = " + std::to_string(bound));
    }
  }
}

void AmpMatcher::check_phase_inequalities() {
  if (phases_.empty() || model() == Model::kFull) return;
  const int k = g_.budget();
  const PhaseRecord& now = phases_.back();
  if (now.phase < k + 1) return;
  const PhaseRecord& back = phases_[now.phase - k];
  const double floor =
      std::pow(r_, now.ell) - std::pow(r_, back.ell + 1);
  if (static_cast<double>(g_.matching_size()) < floor - 1e-9) {
    report("phase " + std::to_string(now.phase) + ": |ALG| " +
           std::to_string(g_.matching_size()) + " below " +
           format_double("%.6f", floor));
  }
}

void AmpMatcher::after_arrival(EdgeId e) {
  oracle_.insert(e);
  maybe_start_phase();
  check_phase_inequalities();
}

void AmpMatcher::after_departure(EdgeId e, bool) {
  // Phases only ever start on growth; between phases ALG is left alone.
  oracle_.erase(e);
  check_phase_inequalities();
}

std::unique_ptr<OnlineMatcher> make_matcher(const std::string& algo, int k,
                                            Model model,
                                            const MatcherOptions& opts) {
  if (k < 1) throw Error(ErrorCode::kBadK, "k must be at least 1");
  if (algo == "greedy") return std::make_unique<GreedyMatcher>(k, model);
  if (algo == "idle") return std::make_unique<IdleMatcher>(k, model);
  const int budget = k % 2 == 0 ? k : k - 1;
  if (algo == "lgreedy" || algo == "amp") {
    if (budget < 2) {
      throw Error(ErrorCode::kBadK, algo + " needs k of at least 2");
    }
  }
  if (algo == "lgreedy") {
    const int L = opts.L ? *opts.L : budget >= 4 ? lgreedy_default_L(budget) : 1;
    return std::make_unique<LGreedyMatcher>(budget, model, L);
  }
  if (algo == "amp") {
    const double r = opts.r ? *opts.r : budget >= 4 ? amp_default_r(budget) : 2.0;
    return std::make_unique<AmpMatcher>(budget, model, r);
  }
  throw Error(ErrorCode::kBadParams, "unknown algorithm '" + algo + "'");
}

}  // namespace recourse

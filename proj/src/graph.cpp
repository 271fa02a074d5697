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

#include "recourse/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace recourse {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "duplicate-edge";
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kUnknownEdge: return "unknown-edge";
    case ErrorCode::kUnknownVertex: return "unknown-vertex";
    case ErrorCode::kLimitedDepartureViolation:
      return "limited-departure-violation";
    case ErrorCode::kBlockedPath: return "blocked-path";
    case ErrorCode::kNotAugmenting: return "not-augmenting";
    case ErrorCode::kBlockedComponent: return "blocked-component";
    case ErrorCode::kNotAMatching: return "not-a-matching";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kBadK: return "bad-k";
    case ErrorCode::kOddBudget: return "odd-budget";
    case ErrorCode::kNegativeEndpointWeight: return "negative-endpoint-weight";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kBadInterval: return "bad-interval";
    case ErrorCode::kBadParams: return "bad-params";
    case ErrorCode::kEpsilonTooLarge: return "epsilon-too-large";
    case ErrorCode::kIllegalTransition: return "illegal-transition";
    case ErrorCode::kZeroAlg: return "zero-alg";
    case ErrorCode::kIllegalEvent: return "illegal-event-for-model";
    case ErrorCode::kParse: return "parse-error";
  }
  return "unknown-error";
}

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kArrival: return "arrival";
    case Model::kLimited: return "limited";
    case Model::kFull: return "full";
  }
  return "arrival";
}

Model parse_model(std::string_view text) {
  if (text == "arrival") return Model::kArrival;
  if (text == "limited") return Model::kLimited;
  if (text == "full") return Model::kFull;
  throw Error(ErrorCode::kParse, "unknown model '" + std::string(text) + "'");
}

std::string to_string(const Event& event) {
  std::ostringstream out;
  out << (event.action == EventAction::kArrive ? '+' : '-') << ' ' << event.u
      << ' ' << event.v;
  return out.str();
}

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kAugmentingPath: return "augmenting-path";
    case ComponentKind::kEvenPath: return "even-path";
    case ComponentKind::kOddPath: return "odd-path";
    case ComponentKind::kCycle: return "cycle";
  }
  return "even-path";
}

std::vector<int> canonical_type_string(std::span<const int> types,
                                       bool cycle) {
  std::vector<int> forward(types.begin(), types.end());
  std::vector<int> backward(types.rbegin(), types.rend());
  if (!cycle || forward.empty()) return std::min(forward, backward);
  std::vector<int> best = forward;
  for (const auto* seq : {&forward, &backward}) {
    std::vector<int> rotated = *seq;
    for (std::size_t i = 0; i < seq->size(); ++i) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      best = std::min(best, rotated);
    }
  }
  return best;
}

std::vector<int> canonical_type_string(const AlternatingComponent& c) {
  return canonical_type_string(c.type_string, c.is_cycle());
}

Graph::Graph(int budget) : budget_(budget) {
  if (budget < 1) {
    throw Error(ErrorCode::kBadK, "recourse budget must be at least 1");
  }
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::kSelfLoop, "edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
  }
  if (find_edge(u, v)) {
    throw Error(ErrorCode::kDuplicateEdge, "edge (" + std::to_string(u) + "," +
                                               std::to_string(v) +
                                               ") is already live");
  }
  const EdgeId id = edges_.size();
  edges_.push_back(EdgeState{id, std::min(u, v), std::max(u, v), 0, false,
                             true});
  vertices_[u].incident.emplace(v, id);
  vertices_[v].incident.emplace(u, id);
  ++live_count_;
  return id;
}

void Graph::remove_edge(EdgeId e, Model model) {
  if (!is_live(e)) {
    throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(e));
  }
  EdgeState& state = mutable_edge(e);
  if (model == Model::kArrival) {
    throw Error(ErrorCode::kIllegalEvent,
                "departures are not allowed in the arrival model");
  }
  if (state.matched) {
    if (model == Model::kLimited) {
      throw Error(ErrorCode::kLimitedDepartureViolation,
                  "edge " + std::to_string(e) + " is matched");
    }
    vertices_[state.u].mate.reset();
    vertices_[state.v].mate.reset();
    --matching_size_;
  }
  vertices_[state.u].incident.erase(state.v);
  vertices_[state.v].incident.erase(state.u);
  state.live = false;
  --live_count_;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  auto it = vertices_.find(u);
  if (it == vertices_.end()) return std::nullopt;
  auto jt = it->second.incident.find(v);
  if (jt == it->second.incident.end()) return std::nullopt;
  return jt->second;
}

const EdgeState& Graph::edge(EdgeId e) const {
  if (e >= edges_.size()) {
    throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(e));
  }
  return edges_[e];
}

EdgeState& Graph::mutable_edge(EdgeId e) {
  if (e >= edges_.size()) {
    throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(e));
  }
  return edges_[e];
}

bool Graph::is_live(EdgeId e) const {
  return e < edges_.size() && edges_[e].live;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size());
  for (const auto& [v, rec] : vertices_) out.push_back(v);
  return out;
}

const std::map<Vertex, EdgeId>& Graph::incident(Vertex v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    throw Error(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v));
  }
  return it->second.incident;
}

std::optional<EdgeId> Graph::mate_edge(Vertex v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) return std::nullopt;
  return it->second.mate;
}

std::optional<Vertex> Graph::mate(Vertex v) const {
  auto e = mate_edge(v);
  if (!e) return std::nullopt;
  return edges_[*e].other(v);
}

std::vector<EdgeId> Graph::live_edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_count_);
  for (const auto& e : edges_) {
    if (e.live) out.push_back(e.id);
  }
  return out;
}

std::vector<EdgeId> Graph::matching() const {
  std::vector<EdgeId> out;
  out.reserve(matching_size_);
  for (const auto& e : edges_) {
    if (e.live && e.matched) out.push_back(e.id);
  }
  return out;
}

int Graph::vertex_type(Vertex v) const {
  int best = 0;
  for (const auto& [w, e] : incident(v)) best = std::max(best, edges_[e].etype);
  return best;
}

AlternatingComponent Graph::path_component(
    std::span<const Vertex> walk) const {
  AlternatingComponent c;
  c.vertices.assign(walk.begin(), walk.end());
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    auto e = find_edge(walk[i], walk[i + 1]);
    if (!e) {
      throw Error(ErrorCode::kUnknownEdge,
                  "no live edge (" + std::to_string(walk[i]) + "," +
                      std::to_string(walk[i + 1]) + ")");
    }
    c.edges.push_back(*e);
    c.type_string.push_back(edges_[*e].etype);
  }
  bool alternating = true;
  for (std::size_t i = 0; i + 1 < c.edges.size(); ++i) {
    if (edges_[c.edges[i]].matched == edges_[c.edges[i + 1]].matched) {
      alternating = false;
    }
  }
  const bool odd = c.edges.size() % 2 == 1;
  if (odd && alternating && !edges_[c.edges.front()].matched &&
      !is_matched(walk.front()) && !is_matched(walk.back())) {
    c.kind = ComponentKind::kAugmentingPath;
  } else {
    c.kind = odd ? ComponentKind::kOddPath : ComponentKind::kEvenPath;
  }
  c.type_string = canonical_type_string(c.type_string);
  return c;
}

void Graph::apply_augmenting_path(const AlternatingComponent& path) {
  const auto& vs = path.vertices;
  const auto& es = path.edges;
  if (path.kind != ComponentKind::kAugmentingPath || es.empty() ||
      es.size() % 2 == 0 || vs.size() != es.size() + 1) {
    throw Error(ErrorCode::kNotAugmenting, "component is not an augmenting path");
  }
  std::unordered_set<Vertex> seen;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!is_live(es[i])) {
      throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(es[i]));
    }
    const EdgeState& e = edges_[es[i]];
    const bool joins = (e.u == vs[i] && e.v == vs[i + 1]) ||
                       (e.v == vs[i] && e.u == vs[i + 1]);
    if (!joins || e.matched != (i % 2 == 1)) {
      throw Error(ErrorCode::kNotAugmenting, "path does not alternate");
    }
  }
  for (Vertex v : vs) {
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::kNotAugmenting, "path repeats a vertex");
    }
  }
  if (is_matched(vs.front()) || is_matched(vs.back())) {
    throw Error(ErrorCode::kNotAugmenting, "path endpoints must be free");
  }
  for (EdgeId e : es) {
    if (is_blocked(e)) {
      throw Error(ErrorCode::kBlockedPath,
                  "edge " + std::to_string(e) + " is at the budget");
    }
  }
  flip_all(es);
}

void Graph::apply_alternating_component(const AlternatingComponent& c) {
  for (EdgeId e : c.edges) {
    if (!is_live(e)) {
      throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(e));
    }
    if (is_blocked(e)) {
      throw Error(ErrorCode::kBlockedComponent,
                  "edge " + std::to_string(e) + " is at the budget");
    }
  }
  std::unordered_set<EdgeId> members(c.edges.begin(), c.edges.end());
  std::unordered_set<Vertex> newly_covered;
  for (EdgeId id : c.edges) {
    const EdgeState& e = edges_[id];
    if (e.matched) continue;
    for (Vertex w : {e.u, e.v}) {
      auto m = mate_edge(w);
      if ((m && !members.count(*m)) || !newly_covered.insert(w).second) {
        throw Error(ErrorCode::kNotAMatching,
                    "flipping the component would not leave a matching");
      }
    }
  }
  flip_all(c.edges);
}

void Graph::flip_all(std::span<const EdgeId> edges) {
  // Unmatch first so that the new mates never collide with stale ones.
  std::vector<EdgeId> entering;
  for (EdgeId id : edges) {
    EdgeState& e = edges_[id];
    if (!e.matched) {
      entering.push_back(id);
      continue;
    }
    vertices_[e.u].mate.reset();
    vertices_[e.v].mate.reset();
    e.matched = false;
    --matching_size_;
    ++e.etype;
  }
  for (EdgeId id : entering) {
    EdgeState& e = edges_[id];
    vertices_[e.u].mate = id;
    vertices_[e.v].mate = id;
    e.matched = true;
    ++matching_size_;
    ++e.etype;
  }
  total_flips_ += edges.size();
}

std::optional<std::string> Graph::check_invariants() const {
  std::size_t matched = 0;
  std::size_t live = 0;
  std::unordered_map<Vertex, EdgeId> cover;
  for (const auto& e : edges_) {
    if (e.etype < 0 || e.etype > budget_) {
      return "edge " + std::to_string(e.id) + " type out of range";
    }
    if (!e.live) continue;
    ++live;
    if (e.u == e.v) return "self-loop on edge " + std::to_string(e.id);
    if (e.matched != (e.etype % 2 == 1)) {
      return "parity broken on edge " + std::to_string(e.id);
    }
    if (find_edge(e.u, e.v) != e.id) {
      return "adjacency index broken for edge " + std::to_string(e.id);
    }
    if (!e.matched) continue;
    ++matched;
    for (Vertex w : {e.u, e.v}) {
      if (!cover.emplace(w, e.id).second) {
        return "vertex " + std::to_string(w) + " matched twice";
      }
      if (mate_edge(w) != e.id) {
        return "mate record broken at vertex " + std::to_string(w);
      }
    }
  }
  for (const auto& [v, rec] : vertices_) {
    if (rec.mate && !cover.count(v)) {
      return "stale mate at vertex " + std::to_string(v);
    }
  }
  if (matched != matching_size_) return "matching size counter broken";
  if (live != live_count_) return "live edge counter broken";
  return std::nullopt;
}

namespace {

std::unordered_map<Vertex, EdgeId> cover_map(const Graph& g,
                                             std::span<const EdgeId> m) {
  std::unordered_map<Vertex, EdgeId> cover;
  for (EdgeId id : m) {
    if (!g.is_live(id)) {
      throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(id));
    }
    const EdgeState& e = g.edge(id);
    for (Vertex w : {e.u, e.v}) {
      if (!cover.emplace(w, id).second) {
        throw Error(ErrorCode::kNotAMatching,
                    "vertex " + std::to_string(w) + " covered twice");
      }
    }
  }
  return cover;
}

}  // namespace

std::vector<AlternatingComponent> symmetric_difference(
    const Graph& g, std::span<const EdgeId> alg, std::span<const EdgeId> opt,
    bool exclude_blocked) {
  const auto alg_cover = cover_map(g, alg);
  cover_map(g, opt);
  std::set<EdgeId> alg_set(alg.begin(), alg.end());
  std::set<EdgeId> opt_set(opt.begin(), opt.end());
  std::map<Vertex, std::vector<EdgeId>> adj;
  auto consider = [&](EdgeId id, const std::set<EdgeId>& other) {
    if (other.count(id)) return;
    if (exclude_blocked && g.is_blocked(id)) return;
    const EdgeState& e = g.edge(id);
    adj[e.u].push_back(id);
    adj[e.v].push_back(id);
  };
  for (EdgeId id : alg_set) consider(id, opt_set);
  for (EdgeId id : opt_set) consider(id, alg_set);

  std::unordered_set<EdgeId> used;
  std::vector<AlternatingComponent> out;
  auto walk = [&](Vertex start, bool cycle) {
    AlternatingComponent c;
    Vertex cur = start;
    c.vertices.push_back(cur);
    while (true) {
      std::optional<EdgeId> next;
      for (EdgeId id : adj[cur]) {
        if (!used.count(id)) {
          next = id;
          break;
        }
      }
      if (!next) break;
      used.insert(*next);
      c.edges.push_back(*next);
      c.type_string.push_back(g.edge(*next).etype);
      cur = g.edge(*next).other(cur);
      if (cycle && cur == start) break;
      c.vertices.push_back(cur);
    }
    const bool odd = c.edges.size() % 2 == 1;
    if (cycle) {
      c.kind = ComponentKind::kCycle;
    } else if (!odd) {
      c.kind = ComponentKind::kEvenPath;
    } else {
      const bool ends_opt = !alg_set.count(c.edges.front()) &&
                            !alg_set.count(c.edges.back());
      const bool ends_free = !alg_cover.count(c.vertices.front()) &&
                             !alg_cover.count(c.vertices.back());
      c.kind = ends_opt && ends_free ? ComponentKind::kAugmentingPath
                                     : ComponentKind::kOddPath;
    }
    c.type_string = canonical_type_string(c.type_string, cycle);
    out.push_back(std::move(c));
  };
  for (const auto& [v, es] : adj) {
    if (es.size() == 1 && !used.count(es.front())) walk(v, false);
  }
  for (const auto& [v, es] : adj) {
    if (std::any_of(es.begin(), es.end(),
                    [&](EdgeId id) { return !used.count(id); })) {
      walk(v, true);
    }
  }
  return out;
}

}  // namespace recourse

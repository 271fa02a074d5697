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


#include "recourse/opt_oracle.hpp"

#include <algorithm>
#include <set>

#include "recourse/augmenting_search.hpp"

namespace recourse {

struct OracleView {
  const OptOracle& o;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (const auto& [w, e] : o.g_.incident(v)) f(w);
  }
  std::optional<Vertex> mate(Vertex v) const {
    auto it = o.mate_.find(v);
    if (it == o.mate_.end()) return std::nullopt;
    return o.g_.edge(it->second).other(v);
  }
};

OptOracle::OptOracle(const Graph& g) : g_(g) {
  // Adopt whatever is already live, one edge at a time.
  for (EdgeId e : g.live_edges()) insert(e);
}

bool OptOracle::contains(EdgeId e) const {
  const EdgeState& s = g_.edge(e);
  auto it = mate_.find(s.u);
  return it != mate_.end() && it->second == e;
}

std::optional<EdgeId> OptOracle::mate_edge(Vertex v) const {
  auto it = mate_.find(v);
  if (it == mate_.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeId> OptOracle::matching() const {
  std::vector<EdgeId> out;
  for (const auto& [v, e] : mate_) {
    if (g_.edge(e).u == v) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void OptOracle::flip(std::span<const Vertex> walk) {
  for (std::size_t i = 0; i + 1 < walk.size(); i += 2) {
    const EdgeId e = *g_.find_edge(walk[i], walk[i + 1]);
    mate_[walk[i]] = e;
    mate_[walk[i + 1]] = e;
  }
  ++size_;
}

bool OptOracle::augment_from(Vertex root) {
  if (mate_.count(root)) return false;
  auto walk = find_augmenting_path(OracleView{*this}, root);
  if (walk.empty()) return false;
  flip(walk);
  return true;
}

bool OptOracle::insert(EdgeId e) {
  const EdgeState& s = g_.edge(e);
  const bool u_free = !mate_.count(s.u);
  const bool v_free = !mate_.count(s.v);
  if (u_free && v_free) {
    mate_[s.u] = e;
    mate_[s.v] = e;
    ++size_;
    return true;
  }
  // Any new augmenting path runs through e, so its ends are free vertices of
  // e's component. Try them from the lowest id up.
  std::set<Vertex> free_vertices;
  std::vector<Vertex> stack{s.u};
  std::set<Vertex> seen{s.u};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!mate_.count(v)) free_vertices.insert(v);
    for (const auto& [w, id] : g_.incident(v)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  for (Vertex root : free_vertices) {
    if (augment_from(root)) return true;
  }
  return false;
}

void OptOracle::erase(EdgeId e) {
  const EdgeState& s = g_.edge(e);
  auto it = mate_.find(s.u);
  if (it == mate_.end() || it->second != e) return;
  mate_.erase(s.u);
  mate_.erase(s.v);
  --size_;
  // One deletion lowers the maximum by at most one; a single augmentation
  // from a freed endpoint restores it whenever possible.
  for (Vertex root : {std::min(s.u, s.v), std::max(s.u, s.v)}) {
    if (g_.has_vertex(root) && augment_from(root)) return;
  }
}

namespace {

void brute_force(std::span<const std::pair<Vertex, Vertex>> edges,
                 std::size_t next, std::set<Vertex>& used, std::size_t current,
                 std::size_t& best) {
  best = std::max(best, current);
  if (next == edges.size()) return;
  if (current + (edges.size() - next) <= best) return;
  const auto& [u, v] = edges[next];
  if (!used.count(u) && !used.count(v)) {
    used.insert(u);
    used.insert(v);
    brute_force(edges, next + 1, used, current + 1, best);
    used.erase(u);
    used.erase(v);
  }
  brute_force(edges, next + 1, used, current, best);
}

}  // namespace

std::size_t brute_force_max_matching(
    std::span<const std::pair<Vertex, Vertex>> edges) {
  if (edges.size() > 24) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(edges.size()) + " edges, limit is 24");
  }
  std::set<Vertex> used;
  std::size_t best = 0;
  brute_force(edges, 0, used, 0, best);
  return best;
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (EdgeId e : g.live_edges()) out.emplace_back(g.edge(e).u, g.edge(e).v);
  return out;
}

}  // namespace recourse

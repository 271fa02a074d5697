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

// Dynamic graph carrying an online matching under edge-bounded recourse.
//
// Every edge has a type: the number of accept/reject flips it has undergone.
// Edges start rejected at type 0 and each flip toggles membership, so an edge
// is matched exactly when its type is odd. An edge at type k (the budget) is
// blocked and never changes again. Alternating paths and cycles are the only
// way the matching is mutated, which keeps every flip accounted for.

#ifndef RECOURSE_GRAPH_HPP_
#define RECOURSE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recourse/error.hpp"

namespace recourse {

using Vertex = std::int64_t;
using EdgeId = std::size_t;

enum class Model { kArrival, kLimited, kFull };

std::string_view to_string(Model model);
Model parse_model(std::string_view text);

struct EdgeState {
  EdgeId id = 0;
  Vertex u = 0;
  Vertex v = 0;
  int etype = 0;
  bool matched = false;
  bool live = true;

  Vertex other(Vertex w) const { return w == u ? v : u; }
};

enum class EventAction { kArrive, kDepart };

struct Event {
  EventAction action = EventAction::kArrive;
  Vertex u = 0;
  Vertex v = 0;

  static Event arrive(Vertex a, Vertex b) {
    return {EventAction::kArrive, a, b};
  }
  static Event depart(Vertex a, Vertex b) {
    return {EventAction::kDepart, a, b};
  }
  friend bool operator==(const Event&, const Event&) = default;
};

std::string to_string(const Event& event);

enum class ComponentKind {
  kAugmentingPath,  // odd length, both end vertices free w.r.t. the base set
  kEvenPath,
  kOddPath,  // odd length but not augmenting for the base set
  kCycle,
};

std::string_view to_string(ComponentKind kind);

// A path or cycle whose edges alternate between two matchings. For paths
// `vertices` has edges.size() + 1 entries; for cycles it has edges.size()
// entries and the closing edge joins back() to front().
struct AlternatingComponent {
  ComponentKind kind = ComponentKind::kEvenPath;
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;
  std::vector<int> type_string;

  std::size_t length() const { return edges.size(); }
  bool is_cycle() const { return kind == ComponentKind::kCycle; }
};

// Lexicographically minimal orientation of `types`; for cycles also minimal
// over all rotations.
std::vector<int> canonical_type_string(std::span<const int> types,
                                       bool cycle = false);
std::vector<int> canonical_type_string(const AlternatingComponent& c);

class Graph {
 public:
  explicit Graph(int budget);

  int budget() const { return budget_; }

  EdgeId add_edge(Vertex u, Vertex v);
  void remove_edge(EdgeId e, Model model);

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  const EdgeState& edge(EdgeId e) const;
  bool is_live(EdgeId e) const;
  bool is_blocked(EdgeId e) const { return edge(e).etype >= budget_; }

  bool has_vertex(Vertex v) const { return vertices_.count(v) != 0; }
  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const { return vertices_.size(); }
  // Incident live edges keyed by neighbour, in increasing neighbour order.
  const std::map<Vertex, EdgeId>& incident(Vertex v) const;

  std::optional<EdgeId> mate_edge(Vertex v) const;
  std::optional<Vertex> mate(Vertex v) const;
  bool is_matched(Vertex v) const { return mate_edge(v).has_value(); }

  std::vector<EdgeId> live_edges() const;
  std::size_t live_edge_count() const { return live_count_; }
  std::vector<EdgeId> matching() const;
  std::size_t matching_size() const { return matching_size_; }
  std::uint64_t total_flips() const { return total_flips_; }

  // Maximum type over incident live edges; 0 for isolated vertices.
  int vertex_type(Vertex v) const;

  // Builds a component from a vertex walk, classified against the current
  // matching. Throws unknown-edge if consecutive vertices are not adjacent.
  AlternatingComponent path_component(std::span<const Vertex> walk) const;

  void apply_augmenting_path(const AlternatingComponent& path);
  void apply_alternating_component(const AlternatingComponent& c);

  // Checks every structural invariant; returns a description of the first
  // violation or nullopt.
  std::optional<std::string> check_invariants() const;

 private:
  struct VertexRecord {
    std::map<Vertex, EdgeId> incident;
    std::optional<EdgeId> mate;
  };

  EdgeState& mutable_edge(EdgeId e);
  void flip_all(std::span<const EdgeId> edges);

  int budget_;
  std::vector<EdgeState> edges_;
  std::map<Vertex, VertexRecord> vertices_;
  std::size_t live_count_ = 0;
  std::size_t matching_size_ = 0;
  std::uint64_t total_flips_ = 0;
};

// Decomposes alg xor opt (optionally without type-k edges) into alternating
// components, classified relative to `alg`. Paths come first, ordered by
// their smaller end vertex, then cycles by their smallest vertex.
std::vector<AlternatingComponent> symmetric_difference(
    const Graph& g, std::span<const EdgeId> alg, std::span<const EdgeId> opt,
    bool exclude_blocked);

}  // namespace recourse

#endif  // RECOURSE_GRAPH_HPP_

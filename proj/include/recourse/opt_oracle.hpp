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


// A maximum cardinality matching of a Graph's live edges, kept exact under
// arrivals and departures by single augmenting searches. The oracle keeps
// its own mates and reads adjacency from the graph it was built on, so the
// graph must outlive it and every add/remove must be reported.

#ifndef RECOURSE_OPT_ORACLE_HPP_
#define RECOURSE_OPT_ORACLE_HPP_

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "recourse/graph.hpp"

namespace recourse {

class OptOracle {
 public:
  explicit OptOracle(const Graph& g);

  // Call after g.add_edge. Returns true when OPT grew.
  bool insert(EdgeId e);
  // Call after g.remove_edge. Repairs OPT if e was in it.
  void erase(EdgeId e);

  std::size_t size() const { return size_; }
  bool contains(EdgeId e) const;
  std::optional<EdgeId> mate_edge(Vertex v) const;
  std::vector<EdgeId> matching() const;

 private:
  friend struct OracleView;

  bool augment_from(Vertex root);
  void flip(std::span<const Vertex> walk);

  const Graph& g_;
  std::unordered_map<Vertex, EdgeId> mate_;
  std::size_t size_ = 0;
};

// Exhaustive maximum matching size; throws too-large above 24 edges.
std::size_t brute_force_max_matching(
    std::span<const std::pair<Vertex, Vertex>> edges);

// Live edges of g as endpoint pairs, in id order.
std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g);

}  // namespace recourse

#endif  // RECOURSE_OPT_ORACLE_HPP_

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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace recourse {
namespace {

std::vector<int> types_along(const Graph& g, std::vector<Vertex> walk) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    out.push_back(g.edge(*g.find_edge(walk[i], walk[i + 1])).etype);
  }
  return out;
}

void augment(Graph& g, std::vector<Vertex> walk) {
  g.apply_augmenting_path(g.path_component(walk));
}

// Builds the path 0-1-2-3-4-5 with types 0,1,2,1,0.
Graph path_01210(int k) {
  Graph g(k);
  g.add_edge(2, 3);
  augment(g, {2, 3});
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  augment(g, {1, 2, 3, 4});
  g.add_edge(0, 1);
  g.add_edge(4, 5);
  return g;
}

TEST(GraphTest, NewEdgeStartsRejected) {
  Graph g(4);
  const EdgeId e = g.add_edge(1, 2);
  EXPECT_EQ(g.edge(e).etype, 0);
  EXPECT_FALSE(g.edge(e).matched);
  EXPECT_EQ(g.matching_size(), 0u);
}

TEST(GraphTest, RejectsDuplicatesAndSelfLoops) {
  Graph g(4);
  g.add_edge(1, 2);
  try {
    g.add_edge(2, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kDuplicateEdge);
  }
  try {
    g.add_edge(3, 3);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kSelfLoop);
  }
  EXPECT_EQ(g.live_edge_count(), 1u);
}

TEST(GraphTest, BadBudget) {
  EXPECT_THROW(Graph(0), Error);
}

TEST(GraphTest, RemoveUnderDepartureModels) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  const EdgeId b = g.add_edge(3, 4);
  augment(g, {3, 4});
  g.remove_edge(a, Model::kLimited);
  EXPECT_FALSE(g.is_live(a));
  try {
    g.remove_edge(b, Model::kLimited);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kLimitedDepartureViolation);
  }
  EXPECT_EQ(g.matching_size(), 1u);
  g.remove_edge(b, Model::kFull);
  EXPECT_EQ(g.matching_size(), 0u);
  EXPECT_FALSE(g.is_matched(3));
  try {
    g.remove_edge(b, Model::kFull);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kUnknownEdge);
  }
  EXPECT_FALSE(g.check_invariants().has_value());
}

TEST(GraphTest, ArrivalModelForbidsDepartures) {
  Graph g(2);
  const EdgeId e = g.add_edge(1, 2);
  try {
    g.remove_edge(e, Model::kArrival);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kIllegalEvent);
  }
}

TEST(GraphTest, ReArrivalIsAFreshEdge) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  augment(g, {1, 2});
  g.remove_edge(a, Model::kFull);
  const EdgeId b = g.add_edge(1, 2);
  EXPECT_NE(a, b);
  EXPECT_EQ(g.edge(b).etype, 0);
}

TEST(GraphTest, SingleEdgeAugmentation) {
  Graph g(4);
  const EdgeId e = g.add_edge(1, 2);
  augment(g, {1, 2});
  EXPECT_EQ(g.edge(e).etype, 1);
  EXPECT_TRUE(g.edge(e).matched);
  EXPECT_EQ(g.matching_size(), 1u);
  EXPECT_EQ(g.mate(1), 2);
}

TEST(GraphTest, AugmentingThreeAndFiveEdgePaths) {
  Graph g(4);
  g.add_edge(2, 3);
  augment(g, {2, 3});
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  EXPECT_EQ(types_along(g, {1, 2, 3, 4}), (std::vector<int>{0, 1, 0}));
  augment(g, {1, 2, 3, 4});
  EXPECT_EQ(types_along(g, {1, 2, 3, 4}), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(g.matching_size(), 2u);

  Graph h = path_01210(4);
  EXPECT_EQ(types_along(h, {0, 1, 2, 3, 4, 5}),
            (std::vector<int>{0, 1, 2, 1, 0}));
  augment(h, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(types_along(h, {0, 1, 2, 3, 4, 5}),
            (std::vector<int>{1, 2, 3, 2, 1}));
  EXPECT_EQ(h.matching_size(), 3u);
  EXPECT_EQ(h.total_flips(), 1u + 3u + 5u);
  EXPECT_FALSE(h.check_invariants().has_value());
}

TEST(GraphTest, BlockedPathLeavesGraphUntouched) {
  Graph g = path_01210(2);
  auto c = g.path_component(std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(c.kind, ComponentKind::kAugmentingPath);
  try {
    g.apply_augmenting_path(c);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kBlockedPath);
  }
  EXPECT_EQ(types_along(g, {0, 1, 2, 3, 4, 5}),
            (std::vector<int>{0, 1, 2, 1, 0}));
}

TEST(GraphTest, NonAugmentingWalksAreRejected) {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  auto even = g.path_component(std::vector<Vertex>{1, 2, 3});
  EXPECT_EQ(even.kind, ComponentKind::kEvenPath);
  try {
    g.apply_augmenting_path(even);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotAugmenting);
  }
  // Forging the kind does not get past the structural checks.
  even.kind = ComponentKind::kAugmentingPath;
  EXPECT_THROW(g.apply_augmenting_path(even), Error);
  EXPECT_THROW(g.path_component(std::vector<Vertex>{1, 3}), Error);
}

TEST(GraphTest, AlternatingCycleKeepsSize) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  const EdgeId b = g.add_edge(3, 4);
  augment(g, {1, 2});
  augment(g, {3, 4});
  const EdgeId c = g.add_edge(2, 3);
  const EdgeId d = g.add_edge(4, 1);
  std::vector<EdgeId> alg{a, b};
  std::vector<EdgeId> opt{c, d};
  auto comps = symmetric_difference(g, alg, opt, true);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].kind, ComponentKind::kCycle);
  EXPECT_EQ(comps[0].type_string, (std::vector<int>{0, 1, 0, 1}));
  g.apply_alternating_component(comps[0]);
  EXPECT_EQ(g.matching_size(), 2u);
  EXPECT_EQ(g.edge(a).etype, 2);
  EXPECT_EQ(g.edge(b).etype, 2);
  EXPECT_EQ(g.edge(c).etype, 1);
  EXPECT_EQ(g.edge(d).etype, 1);
  EXPECT_FALSE(g.check_invariants().has_value());
}

TEST(GraphTest, EvenPathComponent) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  augment(g, {1, 2});
  const EdgeId b = g.add_edge(2, 3);
  std::vector<EdgeId> alg{a};
  std::vector<EdgeId> opt{b};
  auto comps = symmetric_difference(g, alg, opt, false);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].kind, ComponentKind::kEvenPath);
  g.apply_alternating_component(comps[0]);
  EXPECT_EQ(g.edge(a).etype, 2);
  EXPECT_EQ(g.edge(b).etype, 1);
  EXPECT_EQ(g.matching_size(), 1u);
}

TEST(GraphTest, AugmentingComponentGrowsMatching) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  augment(g, {2, 1});
  const EdgeId b = g.add_edge(0, 1);
  const EdgeId c = g.add_edge(2, 3);
  std::vector<EdgeId> alg{a};
  std::vector<EdgeId> opt{b, c};
  auto comps = symmetric_difference(g, alg, opt, true);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].kind, ComponentKind::kAugmentingPath);
  g.apply_alternating_component(comps[0]);
  EXPECT_EQ(g.matching_size(), 2u);
}

TEST(GraphTest, BlockedComponent) {
  Graph g(1);
  const EdgeId a = g.add_edge(1, 2);
  augment(g, {1, 2});
  const EdgeId b = g.add_edge(2, 3);
  AlternatingComponent c;
  c.kind = ComponentKind::kEvenPath;
  c.edges = {a, b};
  c.vertices = {1, 2, 3};
  try {
    g.apply_alternating_component(c);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kBlockedComponent);
  }
  std::vector<EdgeId> alg{a};
  std::vector<EdgeId> opt{b};
  EXPECT_TRUE(symmetric_difference(g, alg, opt, true).size() == 1u);
  EXPECT_EQ(symmetric_difference(g, alg, opt, true)[0].edges,
            (std::vector<EdgeId>{b}));
}

TEST(GraphTest, ComponentThatBreaksTheMatching) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  augment(g, {1, 2});
  const EdgeId b = g.add_edge(2, 3);
  AlternatingComponent c;
  c.kind = ComponentKind::kOddPath;
  c.edges = {b};
  c.vertices = {2, 3};
  try {
    g.apply_alternating_component(c);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotAMatching);
  }
  EXPECT_TRUE(g.edge(a).matched);
}

TEST(GraphTest, SymmetricDifferenceRejectsNonMatchings) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  const EdgeId b = g.add_edge(2, 3);
  std::vector<EdgeId> bad{a, b};
  std::vector<EdgeId> none;
  try {
    symmetric_difference(g, bad, none, false);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kNotAMatching);
  }
  std::vector<EdgeId> same{a};
  EXPECT_TRUE(symmetric_difference(g, same, same, false).empty());
}

TEST(GraphTest, CanonicalTypeStrings) {
  EXPECT_EQ(canonical_type_string(std::vector<int>{0}), std::vector<int>{0});
  EXPECT_EQ(canonical_type_string(std::vector<int>{0, 3, 0, 1, 0}),
            (std::vector<int>{0, 1, 0, 3, 0}));
  EXPECT_EQ(canonical_type_string(std::vector<int>{1, 2, 1, 0}),
            (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(canonical_type_string(std::vector<int>{2, 1, 0, 1}, true),
            (std::vector<int>{0, 1, 2, 1}));
  EXPECT_EQ(canonical_type_string(std::vector<int>{3, 2, 1, 2}, true),
            (std::vector<int>{1, 2, 3, 2}));
}

TEST(GraphTest, VertexType) {
  Graph g(4);
  const EdgeId a = g.add_edge(1, 2);
  g.remove_edge(a, Model::kLimited);
  EXPECT_EQ(g.vertex_type(1), 0);
  g.add_edge(5, 6);
  augment(g, {5, 6});
  g.add_edge(4, 5);
  g.add_edge(6, 7);
  augment(g, {4, 5, 6, 7});
  g.add_edge(7, 8);
  g.add_edge(3, 4);
  augment(g, {3, 4, 5, 6, 7, 8});
  // vertex 5 touches types 2 (4-5) and 3 (5-6); vertex 8 only the new 1
  EXPECT_EQ(g.vertex_type(5), 3);
  EXPECT_EQ(g.vertex_type(8), 1);
  try {
    g.vertex_type(99);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kUnknownVertex);
  }
}

// Random matching built by scanning edges in a shuffled order.
std::vector<EdgeId> random_matching(const Graph& g, std::mt19937& rng) {
  auto edges = g.live_edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::set<Vertex> used;
  std::vector<EdgeId> out;
  for (EdgeId e : edges) {
    if (rng() % 3 == 0) continue;
    const auto& s = g.edge(e);
    if (used.count(s.u) || used.count(s.v)) continue;
    used.insert(s.u);
    used.insert(s.v);
    out.push_back(e);
  }
  return out;
}

int find_root(std::map<Vertex, Vertex>& parent, Vertex v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return static_cast<int>(v);
}

TEST(GraphTest, SymmetricDifferenceMatchesUnionFindScan) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g(4);
    for (Vertex u = 0; u < 8; ++u) {
      for (Vertex v = u + 1; v < 8; ++v) {
        if (rng() % 3 == 0) g.add_edge(u, v);
      }
    }
    auto alg = random_matching(g, rng);
    auto opt = random_matching(g, rng);
    auto comps = symmetric_difference(g, alg, opt, false);

    std::set<EdgeId> a(alg.begin(), alg.end()), o(opt.begin(), opt.end());
    std::vector<EdgeId> diff;
    std::set_symmetric_difference(a.begin(), a.end(), o.begin(), o.end(),
                                  std::back_inserter(diff));
    std::map<Vertex, Vertex> parent;
    for (EdgeId e : diff) {
      parent.emplace(g.edge(e).u, g.edge(e).u);
      parent.emplace(g.edge(e).v, g.edge(e).v);
    }
    for (EdgeId e : diff) {
      parent[find_root(parent, g.edge(e).u)] = find_root(parent, g.edge(e).v);
    }
    std::map<int, std::set<EdgeId>> expected;
    for (EdgeId e : diff) expected[find_root(parent, g.edge(e).u)].insert(e);
    std::set<std::set<EdgeId>> want, got;
    for (auto& [r, es] : expected) want.insert(es);
    for (const auto& c : comps) {
      got.insert(std::set<EdgeId>(c.edges.begin(), c.edges.end()));
      EXPECT_EQ(std::set<EdgeId>(c.edges.begin(), c.edges.end()).size(),
                c.edges.size());
      for (std::size_t i = 0; i + 1 < c.edges.size(); ++i) {
        EXPECT_NE(a.count(c.edges[i]), a.count(c.edges[i + 1]));
      }
      if (c.kind == ComponentKind::kAugmentingPath) {
        EXPECT_EQ(c.length() % 2, 1u);
        EXPECT_EQ(a.count(c.edges.front()), 0u);
      }
    }
    EXPECT_EQ(got, want);
  }
}

TEST(GraphTest, RandomOperationsKeepInvariants) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    Graph g(k);
    for (int step = 0; step < 60; ++step) {
      const Vertex u = rng() % 9, v = rng() % 9;
      if (u != v && !g.find_edge(u, v)) g.add_edge(u, v);
      auto opt = random_matching(g, rng);
      auto alg = g.matching();
      for (const auto& c : symmetric_difference(g, alg, opt, true)) {
        std::map<EdgeId, int> before;
        for (EdgeId e : c.edges) before[e] = g.edge(e).etype;
        try {
          g.apply_alternating_component(c);
        } catch (const Error& err) {
          // Only the matching check may refuse a blocked-free component.
          EXPECT_EQ(err.code(), ErrorCode::kNotAMatching);
          continue;
        }
        for (EdgeId e : c.edges) EXPECT_EQ(g.edge(e).etype, before[e] + 1);
        break;
      }
      auto live = g.live_edges();
      if (!live.empty() && rng() % 4 == 0) {
        g.remove_edge(live[rng() % live.size()], Model::kFull);
      }
      ASSERT_FALSE(g.check_invariants().has_value())
          << *g.check_invariants();
    }
  }
}

}  // namespace
}  // namespace recourse

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


// Edmonds' blossom search for a single augmenting path, rooted at one free
// vertex. The search only touches vertices it reaches, so it runs in time
// proportional to the explored part of the root's component rather than the
// whole graph. Vertices are indexed lazily as the BFS discovers them.
//
// A View supplies the graph and the matching being augmented:
//   template <class F> void for_each_neighbor(Vertex v, F&& f) const;
//   std::optional<Vertex> mate(Vertex v) const;
// Neighbours must be reported in increasing order for reproducible paths.

#ifndef RECOURSE_AUGMENTING_SEARCH_HPP_
#define RECOURSE_AUGMENTING_SEARCH_HPP_

#include <deque>
#include <unordered_map>
#include <vector>

#include "recourse/graph.hpp"

namespace recourse {

template <class View>
class BlossomSearch {
 public:
  explicit BlossomSearch(const View& view) : view_(view) {}

  // Returns the vertex walk root..other_end of an augmenting path, or an
  // empty vector. `root` must be free in the view's matching.
  std::vector<Vertex> from(Vertex root) {
    const int r = id(root);
    used_[r] = 1;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      int found = -1;
      view_.for_each_neighbor(label_[v], [&](Vertex w) {
        if (found >= 0) return;
        const int t = id(w);
        if (base_[v] == base_[t] || match_[v] == t) return;
        if (t == r || (match_[t] != -1 && parent_[match_[t]] != -1)) {
          const int b = lca(v, t, r);
          blossom_.assign(label_.size(), 0);
          mark_path(v, b, t);
          mark_path(t, b, v);
          for (std::size_t i = 0; i < label_.size(); ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(static_cast<int>(i));
            }
          }
        } else if (parent_[t] == -1) {
          parent_[t] = v;
          if (match_[t] == -1) {
            found = t;
            return;
          }
          used_[match_[t]] = 1;
          queue.push_back(match_[t]);
        }
      });
      if (found >= 0) return walk_back(found);
    }
    return {};
  }

 private:
  int id(Vertex v) {
    auto [it, fresh] = index_.emplace(v, static_cast<int>(label_.size()));
    if (!fresh) return it->second;
    const int i = it->second;
    label_.push_back(v);
    match_.push_back(-1);
    parent_.push_back(-1);
    base_.push_back(i);
    used_.push_back(0);
    if (auto m = view_.mate(v)) {
      const int j = id(*m);
      match_[i] = j;
    }
    return i;
  }

  int lca(int a, int b, int root) {
    std::vector<char> seen(label_.size(), 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (a == base_[root] || match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  std::vector<Vertex> walk_back(int end) {
    std::vector<Vertex> walk{label_[end]};
    int v = end;
    while (true) {
      const int pv = parent_[v];
      walk.push_back(label_[pv]);
      if (match_[pv] == -1) break;
      v = match_[pv];
      walk.push_back(label_[v]);
    }
    return {walk.rbegin(), walk.rend()};
  }

  const View& view_;
  std::unordered_map<Vertex, int> index_;
  std::vector<Vertex> label_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

template <class View>
std::vector<Vertex> find_augmenting_path(const View& view, Vertex root) {
  return BlossomSearch<View>(view).from(root);
}

}  // namespace recourse

#endif  // RECOURSE_AUGMENTING_SEARCH_HPP_

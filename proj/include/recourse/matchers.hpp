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


// Online matchers: Greedy, L-Greedy and AMP behind one interface. Each owns
// its graph; the harness feeds it events and reads back the matching.

#ifndef RECOURSE_MATCHERS_HPP_
#define RECOURSE_MATCHERS_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "recourse/graph.hpp"
#include "recourse/opt_oracle.hpp"

namespace recourse {

class OnlineMatcher {
 public:
  OnlineMatcher(int budget, Model model);
  virtual ~OnlineMatcher() = default;
  OnlineMatcher(const OnlineMatcher&) = delete;
  OnlineMatcher& operator=(const OnlineMatcher&) = delete;

  EdgeId on_arrival(Vertex u, Vertex v);
  void on_departure(Vertex u, Vertex v);

  const Graph& graph() const { return g_; }
  std::vector<EdgeId> matching() const { return g_.matching(); }
  std::size_t size() const { return g_.matching_size(); }
  Model model() const { return model_; }

  virtual std::string name() const = 0;
  virtual std::string params() const { return ""; }
  // Proven worst-case OPT/ALG for this configuration, if there is one.
  virtual std::optional<double> guarantee() const { return std::nullopt; }
  virtual std::optional<int> phase() const { return std::nullopt; }
  // Empty when every internal proof invariant held so far.
  const std::vector<std::string>& violations() const { return violations_; }

 protected:
  virtual void after_arrival(EdgeId e) = 0;
  virtual void after_departure(EdgeId e, bool was_matched) = 0;
  void report(std::string what) { violations_.push_back(std::move(what)); }

  Graph g_;

 private:
  Model model_;
  std::vector<std::string> violations_;
};

// One augmenting path avoiding type-k edges, searched from the lowest free
// vertex up. Returns whether a path was applied.
bool greedy_step(Graph& g);

class GreedyMatcher : public OnlineMatcher {
 public:
  GreedyMatcher(int budget, Model model);
  std::string name() const override { return "greedy"; }
  std::optional<double> guarantee() const override;
  std::size_t augmentations() const { return augmentations_; }

 protected:
  void after_arrival(EdgeId e) override;
  void after_departure(EdgeId e, bool was_matched) override;

 private:
  void wake_component(Vertex start);
  void run();

  // Free vertices that may root an augmenting path. A failed search keeps
  // its root out until the component around it changes.
  std::set<Vertex> pending_;
  std::size_t augmentations_ = 0;
};

// Per-vertex weights that pay for each L-Greedy augmentation.
class WeightLedger {
 public:
  WeightLedger(int budget, int L, double alpha);

  void distribute(const AlternatingComponent& path);
  double weight(Vertex v) const;
  double total() const { return total_; }
  double alpha() const { return alpha_; }
  int L() const { return L_; }

  // Empty when all three ledger invariants hold on g.
  std::optional<std::string> check(const Graph& g) const;

 private:
  int budget_;
  int L_;
  double alpha_;
  double total_ = 0.0;
  std::unordered_map<Vertex, double> weight_;
};

// Applies the shortest non-blocked augmenting component of length at most
// 2L+1 in ALG xor OPT. Returns the applied component, if any.
std::optional<AlternatingComponent> lgreedy_step(Graph& g,
                                                 const OptOracle& oracle,
                                                 int L);

class LGreedyMatcher : public OnlineMatcher {
 public:
  LGreedyMatcher(int budget, Model model, int L);
  std::string name() const override { return "lgreedy"; }
  std::string params() const override;
  std::optional<double> guarantee() const override;
  int L() const { return L_; }
  const WeightLedger& ledger() const { return ledger_; }
  const OptOracle& oracle() const { return oracle_; }
  std::size_t augmentations() const { return augmentations_; }

 protected:
  void after_arrival(EdgeId e) override;
  void after_departure(EdgeId e, bool was_matched) override;

 private:
  void run();

  int L_;
  OptOracle oracle_;
  WeightLedger ledger_;
  bool ledger_valid_ = true;
  std::size_t augmentations_ = 0;
};

struct PhaseRecord {
  int phase = 0;
  int ell = 0;
  std::size_t opt = 0;
  std::size_t alg = 0;
  std::size_t type_k_vertices = 0;
};

// Largest integer l with opt >= r^l, or nullopt when opt is 0.
std::optional<int> amp_level(std::size_t opt, double r);

class AmpMatcher : public OnlineMatcher {
 public:
  AmpMatcher(int budget, Model model, double r);
  std::string name() const override { return "amp"; }
  std::string params() const override;
  std::optional<double> guarantee() const override;
  std::optional<int> phase() const override;
  double r() const { return r_; }
  const std::vector<PhaseRecord>& phases() const { return phases_; }
  const OptOracle& oracle() const { return oracle_; }

 protected:
  void after_arrival(EdgeId e) override;
  void after_departure(EdgeId e, bool was_matched) override;

 private:
  void maybe_start_phase();
  void check_phase_inequalities();

  double r_;
  OptOracle oracle_;
  std::vector<PhaseRecord> phases_;
};

// Never changes its matching. Useful as a baseline opponent.
class IdleMatcher : public OnlineMatcher {
 public:
  IdleMatcher(int budget, Model model) : OnlineMatcher(budget, model) {}
  std::string name() const override { return "idle"; }

 protected:
  void after_arrival(EdgeId) override {}
  void after_departure(EdgeId, bool) override {}
};

struct MatcherOptions {
  std::optional<int> L;
  std::optional<double> r;
};

// Builds a matcher for budget k. L-Greedy and AMP run with budget k-1 when
// k is odd, which never exceeds the allowance.
std::unique_ptr<OnlineMatcher> make_matcher(const std::string& algo, int k,
                                            Model model,
                                            const MatcherOptions& opts = {});

}  // namespace recourse

#endif  // RECOURSE_MATCHERS_HPP_

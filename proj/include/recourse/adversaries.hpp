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


// Opponents for the online matchers. Fixed streams replay a lower-bound
// instance against a known deterministic algorithm; adaptive adversaries
// watch the matcher's graph after every response and react to each path it
// augments.

#ifndef RECOURSE_ADVERSARIES_HPP_
#define RECOURSE_ADVERSARIES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recourse/graph.hpp"

namespace recourse {

std::vector<Event> greedy_lb_stream(int k, int n);
std::vector<Event> lgreedy_lb_stream(int k, int L, int copies);

struct AdversaryMove {
  std::vector<Event> events;
  bool stop = false;
  std::string reason;
};

class AdaptiveAdversary {
 public:
  virtual ~AdaptiveAdversary() = default;

  virtual std::string name() const = 0;
  virtual Model model() const = 0;
  // The ratio the construction forces; a matcher that stalls at or above
  // it concedes.
  virtual double target_ratio() const = 0;
  // `observed` is the matcher's graph after its last response and `opt` the
  // maximum matching size of that graph.
  virtual AdversaryMove next(const Graph& observed, std::size_t opt) = 0;

  // Proof invariants that failed during the game.
  const std::vector<std::string>& violations() const { return violations_; }

 protected:
  void report(std::string what) { violations_.push_back(std::move(what)); }

 private:
  std::vector<std::string> violations_;
};

// The adversary's own record of the instance: which edges it released and
// the type each should have. Diffing against the matcher's graph tells which
// edges the matcher flipped.
class ShadowGraph {
 public:
  using Key = std::pair<Vertex, Vertex>;
  static Key key(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

  void add(Vertex u, Vertex v, std::vector<Event>& out);
  void remove(Vertex u, Vertex v, std::vector<Event>& out);
  int type(Vertex u, Vertex v) const;
  void bump(const Key& e) { ++types_.at(e); }
  std::size_t size() const { return types_.size(); }

  struct Diff {
    std::set<Key> bumped;
    std::optional<std::string> foreign;
  };
  Diff diff(const Graph& g) const;

 private:
  std::map<Key, int> types_;
};

// Deterministic lower bound 1 + 1/(k-1). For k = 3 the construction recurses
// `depth` times; other k ignore depth.
class DetLowerBoundAdversary : public AdaptiveAdversary {
 public:
  explicit DetLowerBoundAdversary(int k, int depth = 1);
  std::string name() const override { return "det"; }
  Model model() const override { return Model::kArrival; }
  double target_ratio() const override;
  AdversaryMove next(const Graph& observed, std::size_t opt) override;

 private:
  enum class Role { kGrow, kFinish };
  struct Tracked {
    std::vector<Vertex> walk;
    Role role;
  };

  Vertex fresh() { return next_vertex_++; }
  void extend(Tracked& p, std::vector<Event>& out);
  void on_blocked_growth(const std::vector<Vertex>& walk,
                         std::vector<Event>& out);
  int max_type(const std::vector<Vertex>& walk) const;

  int k_;
  int depth_;
  int rounds_ = 0;
  bool started_ = false;
  Vertex next_vertex_ = 1;
  ShadowGraph shadow_;
  std::vector<Tracked> active_;
};

// Full-departure opponent on vertices 1..4.
class FullDepartureAdversary : public AdaptiveAdversary {
 public:
  explicit FullDepartureAdversary(int k);
  std::string name() const override { return "fulldep"; }
  Model model() const override { return Model::kFull; }
  double target_ratio() const override { return 2.0; }
  AdversaryMove next(const Graph& observed, std::size_t opt) override;

 private:
  enum class Stage { kStart, kSingle, kPath, kDone };
  int k_;
  Stage stage_ = Stage::kStart;
};

// --- limited-departure string game ---------------------------------------

// One alternating string realized as a vertex path; types[i] is the type of
// the edge path[i] - path[i+1].
struct RealizedString {
  std::vector<Vertex> path;
  std::vector<int> types;
  // Set once a matcher re-synchronised this blocked string (swapping even
  // segments around its type-k edge): the game string it blocked as, which
  // keeps counting towards the class counters.
  std::vector<int> game;
};

struct StringConfig {
  int k = 4;
  double epsilon = 0.05;
  int phase = 1;
  std::map<int, RealizedString> strings;
  int next_id = 0;
  Vertex next_vertex = 1;
};

struct StringCounters {
  long v = 0, w = 0, x = 0, y = 0;
  std::map<int, long> a;  // a[j] for even j in [4, k]; a[4] is z at k = 4
};

enum class StringClass { kV, kW, kX, kY, kA };

StringClass classify_string(std::span<const int> canonical, int k, int phase);
StringCounters count_strings(const StringConfig& cfg);

bool is_alternating(std::span<const int> s);
bool is_blocked_string(std::span<const int> s, int k);
std::size_t string_opt(std::span<const int> s);
std::size_t string_alg(std::span<const int> s);
double string_ratio(const StringConfig& cfg);

// Elementary edits of the game. Increment models the algorithm augmenting a
// string and emits nothing; the other three are the adversary's tools.
struct StringOp {
  enum class Kind { kIncrement, kSplit, kMerge, kAppend };
  Kind kind = Kind::kAppend;
  int a = 0;    // string id
  int b = 0;    // second string for merges
  int pos = 0;  // edge index for splits
};

// Applies `ops` to `cfg` and returns the events that realize them on the
// graph. Split ids are handed out in order from cfg.next_id. Throws
// illegal-transition for edits that would delete a matched edge or leave a
// non-alternating junction.
std::vector<Event> compile_strings_to_events(StringConfig& cfg,
                                             std::span<const StringOp> ops);

// Ops the adversary answers with once string `id` has been incremented. The
// stored string is first turned to its canonical orientation (no events).
std::vector<StringOp> string_game_response(StringConfig& cfg, int id);

class StringGameAdversary : public AdaptiveAdversary {
 public:
  StringGameAdversary(int k, double epsilon);
  std::string name() const override { return "string"; }
  Model model() const override { return Model::kLimited; }
  double target_ratio() const override;
  AdversaryMove next(const Graph& observed, std::size_t opt) override;

  const StringConfig& config() const { return cfg_; }
  std::size_t moves() const { return moves_; }
  // Per-phase count of processed augmentations.
  const std::map<int, std::size_t>& phase_moves() const { return phase_moves_; }
  bool bisimulation_held() const { return bisimulation_; }
  // Blocked strings the matcher re-typed without augmenting them.
  std::size_t resyncs() const { return resyncs_; }

 private:
  void update_phase();
  void check_invariants();
  void check_bisimulation(const Graph& observed, const std::set<int>& bumped);
  std::vector<Event> fresh_string();

  StringConfig cfg_;
  bool started_ = false;
  bool bisimulation_ = true;
  std::size_t moves_ = 0;
  std::size_t resyncs_ = 0;
  std::map<int, std::size_t> phase_moves_;
};

std::unique_ptr<AdaptiveAdversary> make_adversary(const std::string& name,
                                                  int k, double epsilon,
                                                  int depth);

}  // namespace recourse

#endif  // RECOURSE_ADVERSARIES_HPP_

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


#include "recourse/adversaries.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "recourse/bounds.hpp"
#include "recourse/error.hpp"

namespace recourse {
namespace {

std::string pair_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

double witnessed_ratio(const Graph& g, std::size_t opt) {
  if (g.matching_size() == 0) return opt == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(opt) / static_cast<double>(g.matching_size());
}

AdversaryMove stop_move(std::string reason) {
  AdversaryMove m;
  m.stop = true;
  m.reason = std::move(reason);
  return m;
}

}  // namespace

// --- fixed streams ----------------------------------------------------------

std::vector<Event> greedy_lb_stream(int k, int n) {
  if (k < 1 || n < 1) {
    throw Error(ErrorCode::kBadParams, "greedy_lb_stream needs k >= 1, n >= 1");
  }
  std::vector<Event> out;
  Vertex next = 1;
  const int m = 2 * n + 1;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < m; ++i) {
    es.emplace_back(next, next + 1);
    next += 2;
    out.push_back(Event::arrive(es.back().first, es.back().second));
  }
  for (int i = 0; i + 1 < m; ++i)
    out.push_back(Event::arrive(es[i].second, es[i + 1].first));
  // The last connector completes an augmenting path of length 4n+3; every
  // later pair of extensions completes another one around it.
  Vertex left = next++, right = next++;
  out.push_back(Event::arrive(left, es.front().first));
  out.push_back(Event::arrive(es.back().second, right));
  for (int i = 0; i < k - 2; ++i) {
    const Vertex x = next++, y = next++;
    out.push_back(Event::arrive(x, left));
    out.push_back(Event::arrive(right, y));
    left = x;
    right = y;
  }
  // The original edges now sit at type k.
  for (int i = 0; i < m; ++i) {
    if (k % 2 == 0 && i % 2 != 0) continue;
    const Vertex x = next++, y = next++;
    out.push_back(Event::arrive(x, es[i].first));
    out.push_back(Event::arrive(es[i].second, y));
  }
  return out;
}

std::vector<Event> lgreedy_lb_stream(int k, int L, int copies) {
  if (k < 4 || k % 2 != 0 || L < 3 || copies < 1) {
    throw Error(ErrorCode::kBadParams,
                "lgreedy_lb_stream needs even k >= 4, L >= 3, copies >= 1");
  }
  std::vector<Event> one;
  Vertex next = 1;
  std::vector<Vertex> v(2 * L - 2);
  for (auto& x : v) x = next++;
  for (int i = 1; i <= L - 2; ++i)
    one.push_back(Event::arrive(v[2 * i - 1], v[2 * i]));
  for (int i = 0; i <= L - 2; ++i)
    one.push_back(Event::arrive(v[2 * i], v[2 * i + 1]));
  // Each round hangs one fresh pair off both ends: first a single edge (an
  // augmenting path of length 2L-1), then its partner (length 2L+1).
  const Vertex first = v.front(), last = v.back();
  for (int round = 0; round < k / 2 - 1; ++round) {
    const Vertex x = next++, y = next++, x2 = next++, y2 = next++;
    one.push_back(Event::arrive(x, first));
    one.push_back(Event::arrive(last, y));
    one.push_back(Event::arrive(x2, x));
    one.push_back(Event::arrive(y, y2));
  }
  // Connectors are at type k-1 now; pendants alternate sides.
  for (int i = 0; i <= L - 2; ++i) {
    if (i % 2 == 0) {
      one.push_back(Event::arrive(next++, v[2 * i]));
    } else {
      one.push_back(Event::arrive(v[2 * i + 1], next++));
    }
  }
  const Vertex span = next - 1;
  std::vector<Event> out;
  out.reserve(one.size() * copies);
  for (const Event& ev : one) {
    for (int c = 0; c < copies; ++c) {
      out.push_back({ev.action, ev.u + c * span, ev.v + c * span});
    }
  }
  return out;
}

// --- shadow graph -----------------------------------------------------------

void ShadowGraph::add(Vertex u, Vertex v, std::vector<Event>& out) {
  if (!types_.emplace(key(u, v), 0).second) {
    throw Error(ErrorCode::kDuplicateEdge, "shadow already has " + pair_str(u, v));
  }
  out.push_back(Event::arrive(u, v));
}

void ShadowGraph::remove(Vertex u, Vertex v, std::vector<Event>& out) {
  if (types_.erase(key(u, v)) == 0) {
    throw Error(ErrorCode::kUnknownEdge, "shadow lacks " + pair_str(u, v));
  }
  out.push_back(Event::depart(u, v));
}

int ShadowGraph::type(Vertex u, Vertex v) const {
  auto it = types_.find(key(u, v));
  if (it == types_.end()) {
    throw Error(ErrorCode::kUnknownEdge, "shadow lacks " + pair_str(u, v));
  }
  return it->second;
}

ShadowGraph::Diff ShadowGraph::diff(const Graph& g) const {
  Diff d;
  if (g.live_edge_count() != types_.size()) {
    d.foreign = "graph has " + std::to_string(g.live_edge_count()) +
                " live edges, expected " + std::to_string(types_.size());
    return d;
  }
  for (const auto& [k, t] : types_) {
    auto e = g.find_edge(k.first, k.second);
    if (!e) {
      d.foreign = "edge " + pair_str(k.first, k.second) + " missing";
      return d;
    }
    const int delta = g.edge(*e).etype - t;
    if (delta == 1) {
      d.bumped.insert(k);
    } else if (delta != 0) {
      d.foreign = "edge " + pair_str(k.first, k.second) + " moved by " +
                  std::to_string(delta);
      return d;
    }
  }
  return d;
}

// --- deterministic lower bound ---------------------------------------------

DetLowerBoundAdversary::DetLowerBoundAdversary(int k, int depth)
    : k_(k), depth_(depth) {
  if (k < 3) throw Error(ErrorCode::kBadK, "det adversary needs k >= 3");
  if (depth < 1) throw Error(ErrorCode::kBadParams, "depth must be positive");
}

double DetLowerBoundAdversary::target_ratio() const {
  return det_lower_bound(k_);
}

int DetLowerBoundAdversary::max_type(const std::vector<Vertex>& walk) const {
  int m = 0;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    m = std::max(m, shadow_.type(walk[i], walk[i + 1]));
  return m;
}

void DetLowerBoundAdversary::extend(Tracked& p, std::vector<Event>& out) {
  const Vertex a = fresh(), b = fresh();
  shadow_.add(a, p.walk.front(), out);
  shadow_.add(p.walk.back(), b, out);
  p.walk.insert(p.walk.begin(), a);
  p.walk.push_back(b);
}

// `p` reads 1,2,...,k-1,k,k-1,...,1 here.
void DetLowerBoundAdversary::on_blocked_growth(const std::vector<Vertex>& p,
                                               std::vector<Event>& out) {
  const int k = k_;
  if (k == 3) {
    // Block the middle, then recurse on the outer type-1 edge.
    shadow_.add(fresh(), p[2], out);
    shadow_.add(p[3], fresh(), out);
    const Vertex r = fresh(), t = fresh();
    shadow_.add(r, p[4], out);
    shadow_.add(p[5], t, out);
    active_.push_back({{r, p[4], p[5], t}, Role::kGrow});
    ++rounds_;
    return;
  }
  if (k % 2 == 0) {
    const Vertex o = fresh(), pp = fresh(), q = fresh(), r = fresh();
    shadow_.add(o, p[k - 2], out);
    shadow_.add(p[k - 1], pp, out);
    shadow_.add(q, p[k], out);
    shadow_.add(p[k + 1], r, out);
    active_.push_back({{o, p[k - 2], p[k - 1], pp}, Role::kFinish});
    active_.push_back({{q, p[k], p[k + 1], r}, Role::kFinish});
    return;
  }
  // Odd k: the matched type-k middle edge gets a pendant on each side and
  // both halves become augmenting paths 0,1,...,k-2,0.
  const Vertex aa = fresh(), o = fresh();
  shadow_.add(aa, p[0], out);
  shadow_.add(p[k - 2], o, out);
  shadow_.add(fresh(), p[k - 1], out);
  shadow_.add(p[k], fresh(), out);
  const Vertex r = fresh(), nn = fresh();
  shadow_.add(r, p[k + 1], out);
  shadow_.add(p[2 * k - 1], nn, out);
  std::vector<Vertex> left{aa};
  left.insert(left.end(), p.begin(), p.begin() + (k - 1));
  left.push_back(o);
  std::vector<Vertex> right{r};
  right.insert(right.end(), p.begin() + (k + 1), p.end());
  right.push_back(nn);
  active_.push_back({std::move(left), Role::kFinish});
  active_.push_back({std::move(right), Role::kFinish});
}

AdversaryMove DetLowerBoundAdversary::next(const Graph& observed,
                                           std::size_t opt) {
  AdversaryMove mv;
  if (!started_) {
    started_ = true;
    const Vertex a = fresh(), b = fresh();
    shadow_.add(a, b, mv.events);
    active_.push_back({{a, b}, Role::kGrow});
    return mv;
  }
  const auto d = shadow_.diff(observed);
  if (d.foreign) return stop_move("foreign mutation: " + *d.foreign);

  std::vector<bool> augmented(active_.size(), false);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < active_.size(); ++i) {
    const auto& w = active_[i].walk;
    std::size_t hit = 0;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
      hit += d.bumped.count(ShadowGraph::key(w[j], w[j + 1]));
    if (hit == w.size() - 1) {
      augmented[i] = true;
      covered += hit;
    } else if (hit != 0) {
      return stop_move("foreign mutation: partial flip of a tracked path");
    }
  }
  if (covered != d.bumped.size()) {
    return stop_move("foreign mutation: flip outside the tracked paths");
  }
  if (covered == 0) {
    if (active_.empty()) return stop_move("terminal");
    const double ratio = witnessed_ratio(observed, opt);
    return stop_move("stall at ratio " + num(ratio));
  }

  auto old = std::move(active_);
  active_.clear();
  for (std::size_t i = 0; i < old.size(); ++i) {
    Tracked p = std::move(old[i]);
    if (!augmented[i]) {
      active_.push_back(std::move(p));
      continue;
    }
    for (std::size_t j = 0; j + 1 < p.walk.size(); ++j)
      shadow_.bump(ShadowGraph::key(p.walk[j], p.walk[j + 1]));
    const int top = max_type(p.walk);
    if (p.role == Role::kGrow) {
      if (top >= k_) {
        on_blocked_growth(p.walk, mv.events);
      } else if (!(k_ == 3 && rounds_ >= depth_)) {
        extend(p, mv.events);
        active_.push_back(std::move(p));
      }
    } else {
      extend(p, mv.events);
      if (top < k_) active_.push_back(std::move(p));
    }
  }
  if (mv.events.empty() && active_.empty()) return stop_move("terminal");
  return mv;
}

// --- full departures --------------------------------------------------------

FullDepartureAdversary::FullDepartureAdversary(int k) : k_(k) {
  if (k < 1) throw Error(ErrorCode::kBadK, "k must be at least 1");
}

AdversaryMove FullDepartureAdversary::next(const Graph& observed,
                                           std::size_t opt) {
  AdversaryMove mv;
  auto type_of = [&](Vertex u, Vertex v) -> std::optional<int> {
    auto e = observed.find_edge(u, v);
    if (!e) return std::nullopt;
    return observed.edge(*e).etype;
  };
  switch (stage_) {
    case Stage::kStart:
      mv.events.push_back(Event::arrive(2, 3));
      stage_ = Stage::kSingle;
      return mv;
    case Stage::kSingle: {
      const auto t = type_of(2, 3);
      if (!t) return stop_move("foreign mutation: (2,3) missing");
      if (*t % 2 == 0) {
        if (*t >= k_) return stop_move("terminal");
        return stop_move("stall at ratio " + num(witnessed_ratio(observed, opt)));
      }
      mv.events.push_back(Event::arrive(1, 2));
      mv.events.push_back(Event::arrive(3, 4));
      stage_ = *t >= k_ ? Stage::kDone : Stage::kPath;
      return mv;
    }
    case Stage::kPath: {
      const auto a = type_of(1, 2), b = type_of(2, 3), c = type_of(3, 4);
      if (!a || !b || !c) return stop_move("foreign mutation: edge missing");
      if (*a % 2 == 0 || *c % 2 == 0 || *b % 2 != 0) {
        return stop_move("stall at ratio " + num(witnessed_ratio(observed, opt)));
      }
      mv.events.push_back(Event::depart(1, 2));
      mv.events.push_back(Event::depart(3, 4));
      stage_ = Stage::kSingle;
      return mv;
    }
    case Stage::kDone:
      break;
  }
  return stop_move("terminal");
}

// --- string game ------------------------------------------------------------

bool is_alternating(std::span<const int> s) {
  if (s.empty() || s.front() != 0 || s.back() != 0) return false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if ((s[i] - s[i + 1]) % 2 == 0) return false;
  return true;
}

bool is_blocked_string(std::span<const int> s, int k) {
  return std::any_of(s.begin(), s.end(), [k](int t) { return t >= k; });
}

std::size_t string_opt(std::span<const int> s) {
  return std::count_if(s.begin(), s.end(), [](int t) { return t % 2 == 0; });
}

std::size_t string_alg(std::span<const int> s) {
  return s.size() - string_opt(s);
}

double string_ratio(const StringConfig& cfg) {
  std::size_t opt = 0, alg = 0;
  for (const auto& [id, st] : cfg.strings) {
    opt += string_opt(st.types);
    alg += string_alg(st.types);
  }
  if (alg == 0) throw Error(ErrorCode::kZeroAlg, "configuration has no matched edge");
  return static_cast<double>(opt) / static_cast<double>(alg);
}

namespace {

bool is_w_string(std::span<const int> s) {
  const std::size_t n = s.size();
  if (n < 7) return false;
  const std::size_t m = n / 2;
  return s[m] == s[m - 1] - 1 && s[m] == s[m + 1] - 1;
}

// j of an a_j string, or 0.
int a_index(std::span<const int> s) {
  if (s.size() == 3 && s[1] >= 3) return s[1] + 1;
  if (s.size() == 5 && s[1] == 1 && s[3] == 1 && s[2] >= 4) return s[2];
  return 0;
}

bool is_y_string(std::span<const int> s, int k, int phase) {
  static const std::vector<int> y1{0, 1, 0}, y2{0, 1, 2, 1, 0};
  const std::vector<int> v(s.begin(), s.end());
  return v == y1 || (v == y2 && !(k == 4 && phase == 3));
}

}  // namespace

StringClass classify_string(std::span<const int> s, int k, int phase) {
  static const std::vector<int> x{0, 1, 0, 1, 0};
  if (std::vector<int>(s.begin(), s.end()) == x) return StringClass::kX;
  if (is_y_string(s, k, phase)) return StringClass::kY;
  if (a_index(s) != 0) return StringClass::kA;
  if (is_w_string(s)) return StringClass::kW;
  return StringClass::kV;
}

StringCounters count_strings(const StringConfig& cfg) {
  StringCounters c;
  for (int j = 4; j <= cfg.k; j += 2) c.a[j] = 0;
  for (const auto& [id, st] : cfg.strings) {
    const auto s = canonical_type_string(st.game.empty() ? st.types : st.game);
    switch (classify_string(s, cfg.k, cfg.phase)) {
      case StringClass::kX: ++c.x; break;
      case StringClass::kY: ++c.y; break;
      case StringClass::kW: ++c.w; break;
      case StringClass::kV: ++c.v; break;
      case StringClass::kA: ++c.a[a_index(s)]; break;
    }
  }
  return c;
}

std::vector<Event> compile_strings_to_events(StringConfig& cfg,
                                             std::span<const StringOp> ops) {
  std::vector<Event> out;
  auto get = [&](int id) -> RealizedString& {
    auto it = cfg.strings.find(id);
    if (it == cfg.strings.end()) {
      throw Error(ErrorCode::kIllegalTransition,
                  "no string with id " + std::to_string(id));
    }
    return it->second;
  };
  for (const StringOp& op : ops) {
    switch (op.kind) {
      case StringOp::Kind::kIncrement: {
        auto& s = get(op.a);
        for (int& t : s.types) {
          if (++t > cfg.k) {
            throw Error(ErrorCode::kIllegalTransition, "entry exceeds k");
          }
        }
        break;
      }
      case StringOp::Kind::kSplit: {
        auto& s = get(op.a);
        const int n = static_cast<int>(s.types.size());
        if (op.pos < 1 || op.pos > n - 2) {
          throw Error(ErrorCode::kIllegalTransition,
                      "split at " + std::to_string(op.pos) +
                          " leaves an empty piece");
        }
        if (s.types[op.pos] % 2 != 0) {
          throw Error(ErrorCode::kIllegalTransition,
                      "split would delete a matched edge");
        }
        out.push_back(Event::depart(s.path[op.pos], s.path[op.pos + 1]));
        RealizedString right;
        right.path.assign(s.path.begin() + op.pos + 1, s.path.end());
        right.types.assign(s.types.begin() + op.pos + 1, s.types.end());
        s.path.resize(op.pos + 1);
        s.types.resize(op.pos);
        cfg.strings.emplace(cfg.next_id++, std::move(right));
        break;
      }
      case StringOp::Kind::kMerge: {
        if (op.a == op.b) {
          throw Error(ErrorCode::kIllegalTransition, "merge with itself");
        }
        auto& a = get(op.a);
        auto& b = get(op.b);
        if (a.types.back() % 2 == 0 || b.types.front() % 2 == 0) {
          throw Error(ErrorCode::kIllegalTransition,
                      "merge needs odd entries on both sides of the new 0");
        }
        out.push_back(Event::arrive(a.path.back(), b.path.front()));
        a.types.push_back(0);
        a.types.insert(a.types.end(), b.types.begin(), b.types.end());
        a.path.insert(a.path.end(), b.path.begin(), b.path.end());
        cfg.strings.erase(op.b);
        break;
      }
      case StringOp::Kind::kAppend: {
        auto& s = get(op.a);
        if (s.types.front() % 2 != 0) {
          const Vertex x = cfg.next_vertex++;
          out.push_back(Event::arrive(x, s.path.front()));
          s.path.insert(s.path.begin(), x);
          s.types.insert(s.types.begin(), 0);
        }
        if (s.types.back() % 2 != 0) {
          const Vertex x = cfg.next_vertex++;
          out.push_back(Event::arrive(s.path.back(), x));
          s.path.push_back(x);
          s.types.push_back(0);
        }
        break;
      }
    }
  }
  return out;
}

std::vector<StringOp> string_game_response(StringConfig& cfg, int id) {
  RealizedString& st = cfg.strings.at(id);
  {
    std::vector<int> rev(st.types.rbegin(), st.types.rend());
    if (rev < st.types) {
      st.types = std::move(rev);
      std::reverse(st.path.begin(), st.path.end());
    }
  }
  const int k = cfg.k, phase = cfg.phase;
  std::vector<int> s(st.types);
  for (int& t : s) --t;
  const std::size_t n = s.size();

  std::vector<int> cuts;
  std::vector<std::vector<int>> recipes{{0}};
  const std::vector<int> y2{0, 1, 2, 1, 0}, x{0, 1, 0, 1, 0};
  if ((s == y2 && !(k == 4 && phase == 3)) ||
      (n == 5 && s[1] == 1 && s[3] == 1 && s[2] >= 4)) {
    // 12321-like: keep the outer 1s around a fresh 0, the middle alone.
    cuts = {1, 3};
    recipes = {{0, 2}, {1}};
  } else if (s == x && phase == 1) {
    cuts = {3};
    recipes = {{0}, {1}};
  } else if (is_w_string(s) && s[n / 2 - 1] >= k - 2) {
    const int m = static_cast<int>(n / 2);
    cuts = {m - 2, m, m + 2};
    if (k == 4 && phase == 2) {
      recipes = {{0, 3}, {1}, {2}};
    } else {
      recipes = {{0}, {1}, {2}, {3}};
    }
  }

  std::vector<StringOp> ops;
  const int pieces = static_cast<int>(cuts.size());
  const int base = cfg.next_id;
  for (int i = pieces - 1; i >= 0; --i) {
    ops.push_back({StringOp::Kind::kSplit, id, 0, cuts[i]});
  }
  auto piece_id = [&](int p) { return p == 0 ? id : base + (pieces - p); };
  for (const auto& r : recipes) {
    const int head = piece_id(r.front());
    for (std::size_t j = 1; j < r.size(); ++j)
      ops.push_back({StringOp::Kind::kMerge, head, piece_id(r[j]), 0});
    ops.push_back({StringOp::Kind::kAppend, head, 0, 0});
  }
  return ops;
}

StringGameAdversary::StringGameAdversary(int k, double epsilon) {
  if (k < 4 || k % 2 != 0) {
    throw Error(ErrorCode::kBadK, "string game needs an even k >= 4");
  }
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kBadParams, "epsilon must be positive");
  }
  if (epsilon >= 1.0) {
    throw Error(ErrorCode::kEpsilonTooLarge,
                "epsilon must be below 1 for the phase thresholds to bind");
  }
  cfg_.k = k;
  cfg_.epsilon = epsilon;
}

double StringGameAdversary::target_ratio() const {
  return dep_lower_bound(cfg_.k);
}

std::vector<Event> StringGameAdversary::fresh_string() {
  const int id = cfg_.next_id++;
  const Vertex a = cfg_.next_vertex++, b = cfg_.next_vertex++;
  cfg_.strings[id] = RealizedString{{a, b}, {0}, {}};
  return {Event::arrive(a, b)};
}

void StringGameAdversary::check_invariants() {
  const auto c = count_strings(cfg_);
  const double eps = cfg_.epsilon;
  const int k = cfg_.k;
  const std::string at = "move " + std::to_string(moves_) + ": ";
  if (k == 4) {
    const long z = c.a.at(4);
    if (!(7.0 * z + 3 > 4.0 / eps)) report(at + "invariant (1) 7z+3 > 4/eps fails");
    if (2 * c.x + c.y + 2 * c.w > z + 1) report(at + "invariant (2) 2x+y+2w <= z+1 fails");
    return;
  }
  double lhs6 = 0.0, rhs7 = 1.0;
  for (int j = 2; j <= k / 2; ++j) {
    const double a = static_cast<double>(c.a.at(2 * j));
    lhs6 += (4.0 * j * j - 8.0 * j + 7.0) * a;
    rhs7 += (2.0 * j - 3.0) * a;
  }
  if (lhs6 < (4.0 * k - 12) / eps - (k - 1)) report(at + "invariant (6) fails");
  if (2.0 * (c.x + c.w) + c.y + (k - 4.0) * c.v > rhs7) {
    report(at + "invariant (7) fails");
  }
}

void StringGameAdversary::update_phase() {
  const auto c = count_strings(cfg_);
  const double eps = cfg_.epsilon;
  const int k = cfg_.k;
  if (k == 4) {
    const long z = c.a.at(4);
    if (cfg_.phase == 1) {
      if (7.0 * z + 3 > 4.0 / eps) cfg_.phase = 2;
    } else if (cfg_.phase == 2) {
      check_invariants();
      if (z >= 8 * (c.x + c.y + c.v + c.w)) cfg_.phase = 3;
    }
    return;
  }
  if (cfg_.phase == 1) {
    double lhs = 0.0;
    for (int j = 2; j <= k / 2; ++j)
      lhs += (4.0 * j * j - 8.0 * j + 7.0) * static_cast<double>(c.a.at(2 * j));
    if (lhs >= (4.0 * k - 12) / eps - (k - 1)) cfg_.phase = 2;
  } else {
    check_invariants();
  }
}

void StringGameAdversary::check_bisimulation(const Graph& g,
                                             const std::set<int>& bumped) {
  std::map<std::vector<int>, long> want;
  for (const auto& [id, st] : cfg_.strings) {
    std::vector<int> t = st.types;
    if (bumped.count(id)) {
      for (int& x : t) ++x;
    }
    ++want[canonical_type_string(t)];
  }
  std::set<Vertex> seen;
  for (Vertex v : g.vertices()) {
    const auto& inc = g.incident(v);
    if (inc.empty() || seen.count(v)) continue;
    // Walk to one end of the component, then collect types to the other.
    Vertex prev = v, cur = v;
    bool cyclic = false;
    while (true) {
      const auto& ci = g.incident(cur);
      if (ci.size() > 2) {
        bisimulation_ = false;
        report("component with a vertex of degree " + std::to_string(ci.size()));
        return;
      }
      Vertex nxt = cur;
      for (const auto& [w, e] : ci)
        if (w != prev) nxt = w;
      if (nxt == cur || ci.size() == 1) break;
      prev = cur;
      cur = nxt;
      if (cur == v) {
        cyclic = true;
        break;
      }
    }
    if (cyclic) {
      bisimulation_ = false;
      report("cycle component in the realized graph");
      return;
    }
    std::vector<int> types;
    seen.insert(cur);
    while (true) {
      std::optional<std::pair<Vertex, EdgeId>> step;
      for (const auto& [w, e] : g.incident(cur))
        if (!seen.count(w)) step.emplace(w, e);
      if (!step) break;
      types.push_back(g.edge(step->second).etype);
      seen.insert(step->first);
      cur = step->first;
    }
    auto it = want.find(canonical_type_string(types));
    if (it == want.end() || it->second == 0) {
      bisimulation_ = false;
      report("realized component has no matching string");
      return;
    }
    --it->second;
  }
  for (const auto& [s, n] : want) {
    if (n != 0) {
      bisimulation_ = false;
      report("string without a realized component");
      return;
    }
  }
}

AdversaryMove StringGameAdversary::next(const Graph& observed,
                                        std::size_t opt) {
  AdversaryMove mv;
  if (!started_) {
    started_ = true;
    mv.events = fresh_string();
    return mv;
  }
  std::set<int> bumped;
  std::size_t edges = 0;
  for (auto& [id, st] : cfg_.strings) {
    std::vector<int> seen(st.types.size());
    std::size_t hit = 0;
    bool drift = false;
    for (std::size_t i = 0; i < st.types.size(); ++i) {
      auto e = observed.find_edge(st.path[i], st.path[i + 1]);
      if (!e) return stop_move("foreign mutation: string edge missing");
      seen[i] = observed.edge(*e).etype;
      const int delta = seen[i] - st.types[i];
      if (delta == 1) {
        ++hit;
      } else if (delta != 0) {
        drift = true;
      }
    }
    edges += st.types.size();
    if (hit == st.types.size() && !drift) {
      bumped.insert(id);
      continue;
    }
    if (hit == 0 && !drift) continue;
    // A blocked string can only be re-typed around its type-k edge; the game
    // is over for it, so take the graph's word for the new types.
    if (is_blocked_string(st.types, cfg_.k) && !drift) {
      if (st.game.empty()) st.game = canonical_type_string(st.types);
      st.types = std::move(seen);
      ++resyncs_;
      continue;
    }
    return stop_move("foreign mutation: partial flip of a string");
  }
  if (edges != observed.live_edge_count()) {
    return stop_move("foreign mutation: unexpected edges");
  }
  check_bisimulation(observed, bumped);

  if (bumped.empty()) {
    const bool all_blocked = std::all_of(
        cfg_.strings.begin(), cfg_.strings.end(),
        [&](const auto& kv) { return is_blocked_string(kv.second.types, cfg_.k); });
    if (all_blocked) return stop_move("terminal");
    return stop_move("stall at ratio " + num(witnessed_ratio(observed, opt)));
  }
  for (int id : bumped) {
    const StringOp inc{StringOp::Kind::kIncrement, id, 0, 0};
    compile_strings_to_events(cfg_, std::span(&inc, 1));
    const int first_new = cfg_.next_id;
    const auto ops = string_game_response(cfg_, id);
    auto evs = compile_strings_to_events(cfg_, ops);
    mv.events.insert(mv.events.end(), evs.begin(), evs.end());
    ++moves_;
    ++phase_moves_[cfg_.phase];
    auto check = [&](int sid) {
      auto it = cfg_.strings.find(sid);
      if (it != cfg_.strings.end() && !is_alternating(it->second.types)) {
        report("move " + std::to_string(moves_) + ": non-alternating result");
      }
    };
    check(id);
    for (int sid = first_new; sid < cfg_.next_id; ++sid) check(sid);
    update_phase();
  }
  return mv;
}

std::unique_ptr<AdaptiveAdversary> make_adversary(const std::string& name,
                                                  int k, double epsilon,
                                                  int depth) {
  if (name == "det") return std::make_unique<DetLowerBoundAdversary>(k, depth);
  if (name == "fulldep") return std::make_unique<FullDepartureAdversary>(k);
  if (name == "string") return std::make_unique<StringGameAdversary>(k, epsilon);
  throw Error(ErrorCode::kBadParams, "unknown adversary '" + name + "'");
}

}  // namespace recourse

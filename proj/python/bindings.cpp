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

// Python bindings for the core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "recourse/adversaries.hpp"
#include "recourse/bounds.hpp"
#include "recourse/error.hpp"
#include "recourse/harness.hpp"
#include "recourse/matchers.hpp"
#include "recourse/opt_oracle.hpp"

namespace py = pybind11;

namespace {

using namespace recourse;

using PyEvent = std::tuple<std::string, Vertex, Vertex>;

PyEvent to_py(const Event& e) {
  return {e.action == EventAction::kArrive ? "+" : "-", e.u, e.v};
}

Event from_py(const PyEvent& e) {
  const auto& [op, u, v] = e;
  if (op == "+") return Event::arrive(u, v);
  if (op == "-") return Event::depart(u, v);
  throw Error(ErrorCode::kParse, "event op must be '+' or '-', got '" + op + "'");
}

std::vector<PyEvent> to_py(const std::vector<Event>& events) {
  std::vector<PyEvent> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(to_py(e));
  return out;
}

py::dict summary(const RunReport& r) {
  py::dict d;
  d["algo"] = r.algo;
  d["params"] = r.params;
  d["adversary"] = r.adversary;
  d["k"] = r.k;
  d["model"] = std::string(to_string(r.model));
  d["guarantee"] = r.guarantee;
  d["steps"] = r.steps.size();
  d["alg"] = r.final_alg;
  d["opt"] = r.final_opt;
  d["ratio"] = r.final_ratio;
  d["max_ratio"] = r.max_ratio;
  d["bound_violations"] = r.bound_violations;
  d["violations"] = r.violations;
  d["moves"] = r.moves;
  d["move_cap_hit"] = r.move_cap_hit;
  d["stop_reason"] = r.stop_reason;
  return d;
}

MatcherOptions options(std::optional<int> L, std::optional<double> r) {
  MatcherOptions o;
  o.L = L;
  o.r = r;
  return o;
}

// Owns a matcher built by name.
class PyMatcher {
 public:
  PyMatcher(const std::string& algo, int k, const std::string& model,
            std::optional<int> L, std::optional<double> r)
      : m_(make_matcher(algo, k, parse_model(model), options(L, r))) {}

  void arrive(Vertex u, Vertex v) { m_->on_arrival(u, v); }
  void depart(Vertex u, Vertex v) { m_->on_departure(u, v); }
  std::size_t size() const { return m_->size(); }
  std::string name() const { return m_->name(); }
  std::string params() const { return m_->params(); }
  std::optional<double> guarantee() const { return m_->guarantee(); }
  std::optional<int> phase() const { return m_->phase(); }
  int budget() const { return m_->graph().budget(); }
  std::vector<std::string> violations() const { return m_->violations(); }
  std::size_t total_flips() const { return m_->graph().total_flips(); }

  std::vector<std::tuple<Vertex, Vertex>> matching() const {
    std::vector<std::tuple<Vertex, Vertex>> out;
    const Graph& g = m_->graph();
    for (EdgeId e : g.matching()) out.emplace_back(g.edge(e).u, g.edge(e).v);
    return out;
  }

  // (u, v, type) for every live edge.
  std::vector<std::tuple<Vertex, Vertex, int>> edges() const {
    std::vector<std::tuple<Vertex, Vertex, int>> out;
    const Graph& g = m_->graph();
    for (EdgeId e : g.live_edges()) {
      const auto& s = g.edge(e);
      out.emplace_back(s.u, s.v, s.etype);
    }
    return out;
  }

  std::size_t opt() const {
    const Graph& g = m_->graph();
    Graph copy(g.budget());
    OptOracle oracle(copy);
    for (EdgeId e : g.live_edges()) {
      oracle.insert(copy.add_edge(g.edge(e).u, g.edge(e).v));
    }
    return oracle.size();
  }

  OnlineMatcher& get() { return *m_; }

 private:
  std::unique_ptr<OnlineMatcher> m_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Online maximum matching under edge-bounded recourse";

  py::register_exception<Error>(m, "RecourseError", PyExc_ValueError);

  m.def("det_lower_bound", &det_lower_bound, py::arg("k"));
  m.def("dep_lower_bound", &dep_lower_bound, py::arg("k"));
  m.def("lgreedy_bound", &lgreedy_bound, py::arg("k"));
  m.def("lgreedy_default_L", &lgreedy_default_L, py::arg("k"));
  m.def("lgreedy_lower_bound", &lgreedy_lower_bound, py::arg("k"),
        py::arg("L"));
  m.def("lgreedy_alpha", &lgreedy_alpha, py::arg("k"), py::arg("L"));
  m.def("amp_bound_improved", &amp_bound_improved, py::arg("k"));
  m.def("amp_bound_original", &amp_bound_original, py::arg("k"));
  m.def("amp_default_r", &amp_default_r, py::arg("k"));
  m.def("amp_level", &amp_level, py::arg("opt"), py::arg("r"));

  m.def(
      "bound_table",
      [](int k_min, int k_max) {
        py::list rows;
        for (const auto& r : bound_table(k_min, k_max)) {
          py::dict d;
          d["k"] = r.k;
          d["det_lb"] = r.det_lb;
          d["dep_lb"] = r.dep_lb;
          d["lgreedy"] = r.lgreedy_upper;
          d["amp_improved"] = r.amp_improved;
          d["amp_original"] = r.amp_original;
          rows.append(d);
        }
        return rows;
      },
      py::arg("k_min") = 4, py::arg("k_max") = 22);
  m.def("emit_bound_table", &emit_bound_table, py::arg("k_min") = 4,
        py::arg("k_max") = 22);

  m.def(
      "max_matching_size",
      [](const std::vector<std::pair<Vertex, Vertex>>& edges) {
        return brute_force_max_matching(edges);
      },
      py::arg("edges"), "Exhaustive maximum matching size (at most 24 edges).");

  m.def(
      "greedy_lb_stream",
      [](int k, int n) { return to_py(greedy_lb_stream(k, n)); },
      py::arg("k"), py::arg("n"));
  m.def(
      "lgreedy_lb_stream",
      [](int k, int L, int copies) {
        return to_py(lgreedy_lb_stream(k, L, copies));
      },
      py::arg("k"), py::arg("L"), py::arg("copies") = 1);

  m.def(
      "read_event_stream",
      [](const std::string& path) {
        const auto s = read_event_stream(path);
        return py::make_tuple(s.k, std::string(to_string(s.model)),
                              to_py(s.events));
      },
      py::arg("path"), "Returns (k, model, events).");
  m.def(
      "write_event_stream",
      [](const std::string& path, int k, const std::string& model,
         const std::vector<PyEvent>& events) {
        EventStream s;
        s.k = k;
        s.model = parse_model(model);
        for (const auto& e : events) s.events.push_back(from_py(e));
        write_event_stream(path, s);
      },
      py::arg("path"), py::arg("k"), py::arg("model"), py::arg("events"));

  py::class_<PyMatcher>(m, "Matcher")
      .def(py::init<const std::string&, int, const std::string&,
                    std::optional<int>, std::optional<double>>(),
           py::arg("algo"), py::arg("k"), py::arg("model") = "arrival",
           py::arg("L") = py::none(), py::arg("r") = py::none())
      .def("arrive", &PyMatcher::arrive, py::arg("u"), py::arg("v"))
      .def("depart", &PyMatcher::depart, py::arg("u"), py::arg("v"))
      .def_property_readonly("size", &PyMatcher::size)
      .def_property_readonly("name", &PyMatcher::name)
      .def_property_readonly("params", &PyMatcher::params)
      .def_property_readonly("guarantee", &PyMatcher::guarantee)
      .def_property_readonly("phase", &PyMatcher::phase)
      .def_property_readonly("budget", &PyMatcher::budget)
      .def_property_readonly("violations", &PyMatcher::violations)
      .def_property_readonly("total_flips", &PyMatcher::total_flips)
      .def("matching", &PyMatcher::matching)
      .def("edges", &PyMatcher::edges)
      .def("opt", &PyMatcher::opt);

  m.def(
      "replay",
      [](const std::string& algo, int k, const std::string& model,
         const std::vector<PyEvent>& events, std::optional<int> L,
         std::optional<double> r) {
        std::vector<Event> stream;
        for (const auto& e : events) stream.push_back(from_py(e));
        const Model mdl = parse_model(model);
        auto matcher = make_matcher(algo, k, mdl, options(L, r));
        return summary(replay(stream, *matcher, mdl));
      },
      py::arg("algo"), py::arg("k"), py::arg("model"), py::arg("events"),
      py::arg("L") = py::none(), py::arg("r") = py::none());

  m.def(
      "duel",
      [](const std::string& adversary, const std::string& algo, int k,
         double epsilon, int depth, std::size_t max_moves,
         std::optional<int> L, std::optional<double> r) {
        auto adv = make_adversary(adversary, k, epsilon, depth);
        auto matcher = make_matcher(algo, k, adv->model(), options(L, r));
        return summary(duel(*adv, *matcher, max_moves));
      },
      py::arg("adversary"), py::arg("algo"), py::arg("k"),
      py::arg("epsilon") = 0.05, py::arg("depth") = 1,
      py::arg("max_moves") = 10000, py::arg("L") = py::none(),
      py::arg("r") = py::none());
}

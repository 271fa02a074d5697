# Copyright 2026 The Recourse Matching Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import recourse


def test_bound_row_k4():
    row = recourse.bound_table(4, 4)[0]
    assert row["k"] == 4
    assert row["det_lb"] == pytest.approx(4 / 3, abs=5e-7)
    assert row["dep_lb"] == pytest.approx(1.428571, abs=5e-7)
    assert row["lgreedy"] == pytest.approx(1.5, abs=1e-12)
    assert row["amp_improved"] == pytest.approx(2.598076, abs=5e-7)
    assert row["amp_original"] == pytest.approx(2.64526, abs=1e-4)
    csv = recourse.emit_bound_table(4, 6)
    assert csv.splitlines()[0].startswith("k,LB(arr.)")


def test_amp_level_and_r():
    r = recourse.amp_default_r(4)
    assert r == pytest.approx(math.sqrt(3), abs=1e-9)
    assert recourse.amp_level(0, r) is None
    assert recourse.amp_level(1, r) == 0
    assert recourse.amp_level(27, r) == 6


def test_brute_force():
    assert recourse.max_matching_size([(1, 2), (2, 3), (3, 4)]) == 2
    with pytest.raises(recourse.RecourseError):
        recourse.max_matching_size([(i, i + 100) for i in range(25)])


def test_matcher_greedy_path():
    m = recourse.Matcher("greedy", 4)
    m.arrive(2, 3)
    assert m.size == 1
    m.arrive(1, 2)
    m.arrive(3, 4)
    # The 3-path 1-2-3-4 is augmented.
    assert m.size == 2
    assert sorted(m.matching()) == [(1, 2), (3, 4)]
    assert m.opt() == 2
    assert m.total_flips == 4
    assert m.violations == []


def test_limited_departure_of_matched_edge_rejected():
    m = recourse.Matcher("greedy", 4, "limited")
    m.arrive(1, 2)
    with pytest.raises(recourse.RecourseError):
        m.depart(1, 2)


def test_replay_greedy_stream():
    events = recourse.greedy_lb_stream(4, 50)
    rep = recourse.replay("greedy", 4, "arrival", events)
    assert (rep["alg"], rep["opt"]) == (2 * 50 + 4, 3 * 50 + 4)
    assert rep["bound_violations"] == 0


def test_stream_round_trip(tmp_path):
    events = recourse.lgreedy_lb_stream(8, 6)
    path = str(tmp_path / "s.txt")
    recourse.write_event_stream(path, 8, "arrival", events)
    k, model, back = recourse.read_event_stream(path)
    assert (k, model) == (8, "arrival")
    assert back == events


def test_det_duel_k3():
    rep = recourse.duel("det", "greedy", 3, depth=3)
    assert rep["stop_reason"] == "terminal"
    assert rep["ratio"] == pytest.approx(11 / 8, abs=1e-12)


def test_string_duel_k4():
    rep = recourse.duel("string", "greedy", 4, epsilon=0.05)
    assert rep["ratio"] >= recourse.dep_lower_bound(4) - 1e-9
    assert rep["violations"] == []

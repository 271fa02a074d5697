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

"""Online maximum matching under edge-bounded recourse."""

from ._core import (
    Matcher,
    RecourseError,
    amp_bound_improved,
    amp_bound_original,
    amp_default_r,
    amp_level,
    bound_table,
    dep_lower_bound,
    det_lower_bound,
    duel,
    emit_bound_table,
    greedy_lb_stream,
    lgreedy_alpha,
    lgreedy_bound,
    lgreedy_default_L,
    lgreedy_lb_stream,
    lgreedy_lower_bound,
    max_matching_size,
    read_event_stream,
    replay,
    write_event_stream,
)

__all__ = [
    "Matcher",
    "RecourseError",
    "amp_bound_improved",
    "amp_bound_original",
    "amp_default_r",
    "amp_level",
    "bound_table",
    "dep_lower_bound",
    "det_lower_bound",
    "duel",
    "emit_bound_table",
    "greedy_lb_stream",
    "lgreedy_alpha",
    "lgreedy_bound",
    "lgreedy_default_L",
    "lgreedy_lb_stream",
    "lgreedy_lower_bound",
    "max_matching_size",
    "read_event_stream",
    "replay",
    "write_event_stream",
]

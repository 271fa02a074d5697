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


#include "recourse/harness.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

namespace recourse {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

TEST(Ratio, Sentinels) {
  EXPECT_EQ(ratio_of(0, 0), 1.0);
  EXPECT_TRUE(std::isinf(ratio_of(1, 0)));
  EXPECT_DOUBLE_EQ(ratio_of(3, 2), 1.5);
}

TEST(Replay, Empty) {
  GreedyMatcher m(4, Model::kArrival);
  auto r = replay({}, m, Model::kArrival);
  EXPECT_TRUE(r.steps.empty());
  EXPECT_EQ(r.final_ratio, 1.0);
}

TEST(Replay, RecordsEveryStep) {
  GreedyMatcher m(4, Model::kLimited);
  std::vector<Event> s{Event::arrive(1, 2), Event::arrive(2, 3),
                       Event::arrive(3, 4), Event::depart(2, 3)};
  auto r = replay(s, m, Model::kLimited);
  ASSERT_EQ(r.steps.size(), 4u);
  EXPECT_EQ(r.steps[2].alg, 2u);
  EXPECT_EQ(r.steps[2].opt, 2u);
  EXPECT_EQ(r.steps[2].flips, 2u);  // (3,4) is taken directly
  EXPECT_EQ(r.steps[3].opt, 2u);
  EXPECT_EQ(r.final_alg, 2u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Replay, IllegalEventForModel) {
  GreedyMatcher m(4, Model::kArrival);
  std::vector<Event> s{Event::arrive(1, 2), Event::depart(1, 2)};
  EXPECT_EQ(code_of([&] { replay(s, m, Model::kArrival); }), ErrorCode::kIllegalEvent);
  GreedyMatcher lim(4, Model::kLimited);
  EXPECT_EQ(code_of([&] { replay(s, lim, Model::kLimited); }),
            ErrorCode::kLimitedDepartureViolation);
  GreedyMatcher other(4, Model::kFull);
  EXPECT_EQ(code_of([&] { replay(s, other, Model::kLimited); }), ErrorCode::kBadParams);
}

TEST(Replay, MaxDominatesFinalAndDeterministic) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Event> s;
    std::set<std::pair<Vertex, Vertex>> have;
    while (s.size() < 20) {
      Vertex u = 1 + rng() % 10, v = 1 + rng() % 10;
      if (u == v || !have.insert({std::min(u, v), std::max(u, v)}).second) continue;
      s.push_back(Event::arrive(u, v));
    }
    for (const char* algo : {"greedy", "lgreedy", "amp"}) {
      auto a = make_matcher(algo, 6, Model::kArrival);
      auto b = make_matcher(algo, 6, Model::kArrival);
      auto ra = replay(s, *a, Model::kArrival);
      auto rb = replay(s, *b, Model::kArrival);
      EXPECT_GE(ra.max_ratio, ra.final_ratio);
      EXPECT_EQ(report_csv(ra), report_csv(rb));
      EXPECT_EQ(ra.bound_violations, 0u);
      EXPECT_TRUE(ra.violations.empty());
    }
  }
}

TEST(Csv, Format) {
  AmpMatcher m(4, Model::kArrival, std::sqrt(3.0));
  std::vector<Event> s{Event::arrive(1, 2)};
  auto csv = report_csv(replay(s, m, Model::kArrival));
  EXPECT_EQ(csv, "step,event,alg,opt,ratio,flips,phase\n1,+ 1 2,1,1,1.000000,1,1\n");
}

TEST(Stream, RoundTrip) {
  EventStream s{4, Model::kLimited, {Event::arrive(1, 2), Event::depart(1, 2)}};
  std::ostringstream out;
  write_event_stream(out, s);
  EXPECT_EQ(out.str(), "k 4\nmodel limited\n+ 1 2\n- 1 2\n");
  std::istringstream in("# fixture\nk 4   # budget\nmodel limited\n\n+ 1 2\n- 1 2\n");
  auto back = parse_event_stream(in);
  EXPECT_EQ(back.k, 4);
  EXPECT_EQ(back.model, Model::kLimited);
  EXPECT_EQ(back.events, s.events);
}

TEST(Stream, ParseErrors) {
  for (const char* text : {"model arrival\n+ 1 2\n", "k 4\n+ 1 2\n",
                           "k 4\nmodel nope\n", "k 4\nmodel arrival\n+ 1\n",
                           "k 4\nmodel arrival\n+ 0 2\n", "k 4\nmodel arrival\n* 1 2\n",
                           "k 4\nmodel arrival\n+ 1 2 3\n", "k x\nmodel arrival\n"}) {
    std::istringstream in(text);
    EXPECT_EQ(code_of([&] { parse_event_stream(in); }), ErrorCode::kParse) << text;
  }
}

TEST(Table, Emit) {
  auto csv = emit_bound_table(4, 22);
  std::istringstream in(csv);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 10);
  EXPECT_NE(csv.find("\n22,"), std::string::npos);
}

TEST(Duel, Summary) {
  DetLowerBoundAdversary adv(4);
  GreedyMatcher m(4, Model::kArrival);
  auto r = duel(adv, m, 100);
  auto s = report_summary(r);
  EXPECT_NE(s.find("adversary det"), std::string::npos);
  EXPECT_NE(s.find("stop terminal"), std::string::npos);
  EXPECT_EQ(code_of([&] { duel(adv, m, 0); }), ErrorCode::kBadParams);
}

}  // namespace
}  // namespace recourse

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


// Competitive-ratio bounds for online matching with recourse budget k, plus
// the local-ratio expressions behind the L-Greedy analysis. Everything here
// is a pure function of its arguments.

#ifndef RECOURSE_BOUNDS_HPP_
#define RECOURSE_BOUNDS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace recourse {

struct Minimum {
  double argmin = 0.0;
  double value = 0.0;
};

// Golden-section search; f must be unimodal on [lo, hi].
Minimum minimize_1d(const std::function<double(double)>& f, double lo,
                    double hi, double tol);

// Root of a sign-changing continuous g on [lo, hi] by bisection.
double bisect_root(const std::function<double(double)>& g, double lo,
                   double hi, double tol);

// r^k / (r^{k-1} - r), the AMP ratio for a given phase base r.
double amp_improved_objective(int k, double r);
// r^k (r-1) / (r^{k-1} (r-1) - r), the ratio of the original analysis.
double amp_original_objective(int k, double r);
// Positive root of r^{k-1}(r-1) - r; the original objective needs r above it.
double amp_original_r0(int k);

double amp_bound_improved(int k);
double amp_bound_original(int k);
double lgreedy_bound(int k);
double det_lower_bound(int k);
double dep_lower_bound(int k);
double lgreedy_lower_bound(int k, int L);

int lgreedy_default_L(int k);
double amp_default_r(int k);
// Vertex-weight increment used by the L-Greedy analysis.
double lgreedy_alpha(int k, int L);

struct LGreedyCases {
  // Local ratio of a blocked augmenting path of length 2l+1 <= 2L+1.
  std::function<double(int)> short_path;
  // Local ratio of an unblocked path of length 2l+1 > 2L+1.
  std::function<double(int)> long_path;
  // long_path at its worst length l = L+1.
  double long_bound = 0.0;
  double r1b = 0.0;
  double r2a = 0.0;
  double r2b = 0.0;
  double alpha_1b = 0.0;
  double alpha_2b = 0.0;
};

LGreedyCases lgreedy_case_expressions(int k, int L, double alpha);

struct BoundRow {
  int k = 0;
  double det_lb = 0.0;
  double dep_lb = 0.0;
  double lgreedy_upper = 0.0;
  double amp_improved = 0.0;
  double amp_original = 0.0;
  double greedy_lb_limit = 1.5;
  std::optional<double> lgreedy_lb;  // needs floor(sqrt(k-1)) >= 3
};

std::vector<BoundRow> bound_table(int k_min, int k_max);

// Header plus one line per even k, six decimals.
std::string bound_table_csv(const std::vector<BoundRow>& rows);

}  // namespace recourse

#endif  // RECOURSE_BOUNDS_HPP_

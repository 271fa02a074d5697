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


#include "recourse/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "recourse/error.hpp"

namespace recourse {
namespace {

constexpr double kSearchLo = 1.0 + 1e-6;
constexpr double kSearchHi = 8.0;
constexpr double kTol = 1e-9;

void require_even_k(int k) {
  if (k < 4 || k % 2 != 0) {
    throw Error(ErrorCode::kBadK,
                "k must be even and at least 4, got " + std::to_string(k));
  }
}

double checked_div(double num, double den) {
  if (den == 0.0 || !std::isfinite(den)) {
    throw Error(ErrorCode::kDivisionByZero, "denominator vanishes");
  }
  return num / den;
}

}  // namespace

Minimum minimize_1d(const std::function<double(double)>& f, double lo,
                    double hi, double tol) {
  if (!(lo < hi) || !(tol > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::kBadInterval, "need lo < hi and tol > 0");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = (a + b) / 2.0;
  return {x, f(x)};
}

double bisect_root(const std::function<double(double)>& g, double lo,
                   double hi, double tol) {
  double glo = g(lo);
  const double ghi = g(hi);
  if (!(lo < hi) || glo * ghi > 0.0) {
    throw Error(ErrorCode::kBadInterval, "no sign change on the interval");
  }
  while (hi - lo > tol) {
    const double mid = (lo + hi) / 2.0;
    const double gm = g(mid);
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2.0;
}

double amp_improved_objective(int k, double r) {
  return std::pow(r, k) / (std::pow(r, k - 1) - r);
}

double amp_original_objective(int k, double r) {
  return std::pow(r, k) * (r - 1.0) / (std::pow(r, k - 1) * (r - 1.0) - r);
}

double amp_original_r0(int k) {
  require_even_k(k);
  auto g = [k](double r) { return std::pow(r, k - 1) * (r - 1.0) - r; };
  return bisect_root(g, kSearchLo, 2.0, 1e-13);
}

int lgreedy_default_L(int k) {
  require_even_k(k);
  return static_cast<int>(std::floor(std::sqrt(static_cast<double>(k - 1))));
}

double amp_default_r(int k) {
  require_even_k(k);
  return std::pow(static_cast<double>(k - 1), 1.0 / (k - 2));
}

double lgreedy_alpha(int k, int L) {
  return 1.0 / (2.0 * k * (L + 2) - 4.0);
}

double amp_bound_improved(int k) {
  return amp_improved_objective(k, amp_default_r(k));
}

double amp_bound_original(int k) {
  // The objective blows up at r0 from above, so search just past it.
  const double r0 = amp_original_r0(k);
  auto f = [k](double r) { return amp_original_objective(k, r); };
  return minimize_1d(f, r0 + 1e-9, kSearchHi, kTol).value;
}

double lgreedy_bound(int k) {
  require_even_k(k);
  if (k == 4) return 1.5;
  const int L = lgreedy_default_L(k);
  return static_cast<double>(k * (L + 2) - 2) / ((L + 1) * (k - 1));
}

double det_lower_bound(int k) {
  if (k < 3) {
    throw Error(ErrorCode::kBadK, "k must be at least 3");
  }
  return 1.0 + 1.0 / (k - 1);
}

double dep_lower_bound(int k) {
  require_even_k(k);
  return static_cast<double>(k * k - 3 * k + 6) / (k * k - 4 * k + 7);
}

double lgreedy_lower_bound(int k, int L) {
  if (k < 4 || k % 2 != 0 || L < 3) {
    throw Error(ErrorCode::kBadParams, "need even k >= 4 and L >= 3");
  }
  return static_cast<double>(3 * ((L - 1) / 2) + k - 2) / (L + k - 3);
}

LGreedyCases lgreedy_case_expressions(int k, int L, double alpha) {
  if (k % 2 != 0 || L < 1 || alpha < 0.0) {
    throw Error(ErrorCode::kBadParams, "need even k, L >= 1, alpha >= 0");
  }
  LGreedyCases c;
  const double kk = k, ll = L;
  c.short_path = [=](int l) {
    return checked_div(l + 1.0, l - 2.0 * l * ll * alpha + 2.0 * (kk - 1) * alpha);
  };
  c.long_path = [=](int l) {
    return checked_div(l + 1.0, l - 2.0 * l * ll * alpha);
  };
  c.long_bound =
      checked_div(ll + 2, ll + 1 - 2 * ll * ll * alpha - 2 * ll * alpha);
  c.r1b = (ll * ll + 2 * kk + kk * ll - 2 * ll - 2) / ((kk - 1) * (ll + 1));
  c.r2a = (ll + 2) * (ll + kk - 1) / ((ll + 1) * (kk - 1));
  c.r2b = (kk * (ll + 2) - 2) / ((ll + 1) * (kk - 1));
  c.alpha_1b = (ll - 1) / (2 * ll * ll + 4 * kk + 2 * kk * ll - 4 * ll - 4);
  c.alpha_2b = lgreedy_alpha(k, L);
  return c;
}

std::vector<BoundRow> bound_table(int k_min, int k_max) {
  std::vector<BoundRow> rows;
  for (int k = std::max(4, k_min + (k_min % 2)); k <= k_max; k += 2) {
    BoundRow row;
    row.k = k;
    row.det_lb = det_lower_bound(k);
    row.dep_lb = dep_lower_bound(k);
    row.lgreedy_upper = lgreedy_bound(k);
    row.amp_improved = amp_bound_improved(k);
    row.amp_original = amp_bound_original(k);
    const int L = lgreedy_default_L(k);
    if (L >= 3) row.lgreedy_lb = lgreedy_lower_bound(k, L);
    rows.push_back(row);
  }
  return rows;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
  std::string out =
      "k,LB(arr.),LB(arr./dep.),L-Greedy,AMP-improved,AMP-original\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%d,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.k,
                  r.det_lb, r.dep_lb, r.lgreedy_upper, r.amp_improved,
                  r.amp_original);
    out += line;
  }
  return out;
}

}  // namespace recourse

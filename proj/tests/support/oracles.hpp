//  Copyright 2026 The convlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.


// Independent reference computations for tests. Nothing here calls the library's
// convolution, order or envelope code.

#ifndef CONVLAT_TESTS_ORACLES_HPP
#define CONVLAT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;
using Op = std::function<double(double, double)>;

inline double tri_shape(double a, double b, double c, double x) {
  if (x < a || x > c) return 0.0;
  if (x <= b) return b == a ? 1.0 : (x - a) / (b - a);
  return c == b ? 1.0 : (c - x) / (c - b);
}

inline double t_min(double x, double y) { return std::min(x, y); }
inline double t_prod(double x, double y) { return x * y; }
inline double t_luk(double x, double y) { return std::max(0.0, x + y - 1.0); }
inline double t_nilmin(double x, double y) { return x + y > 1.0 ? std::min(x, y) : 0.0; }

/// sup over the min-fiber {y = x, z >= x} u {z = x, y >= x}, sampled with m points.
inline double min_star_sup(const Op& tri, const Fn& f, const Fn& g, double x, int m = 4097) {
  double best = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = x + (1.0 - x) * i / (m - 1);
    best = std::max({best, tri(f(x), g(t)), tri(f(t), g(x))});
  }
  return best;
}

/// sup over the product fiber y*z = x (x > 0), y sampled in [x,1].
inline double product_star_sup(const Op& tri, const Fn& f, const Fn& g, double x, int m = 4097) {
  double best = 0.0;
  for (int i = 0; i < m; ++i) {
    const double y = x + (1.0 - x) * i / (m - 1);
    best = std::max(best, tri(f(y), g(std::min(1.0, x / y))));
  }
  return best;
}

/// Brute-force convolution on an n-grid with exact star values binned to nearest point,
/// exact halves going to the lower point.
inline std::vector<double> binned(const Op& star, const Op& tri, const Fn& f, const Fn& g, int n) {
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double y = static_cast<double>(i) / (n - 1), z = static_cast<double>(j) / (n - 1);
      const int k = static_cast<int>(std::ceil(star(y, z) * (n - 1) - 0.5 - 1e-9));
      out[k] = std::max(out[k], tri(f(y), g(z)));
    }
  }
  return out;
}

/// Three-point convexity test f(x) ^ f(z) <= f(y) for sampled x <= y <= z.
inline bool three_point_convex(const std::vector<double>& v, double tol = 1e-12) {
  const std::size_t n = v.size();
  // prefix max from the left and from the right give the tightest x, z for each y
  std::vector<double> l(n), r(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = std::max(v[i], i ? l[i - 1] : 0.0);
  for (std::size_t i = n; i-- > 0;) r[i] = std::max(v[i], i + 1 < n ? r[i + 1] : 0.0);
  for (std::size_t y = 0; y < n; ++y) {
    if (std::min(l[y], r[y]) > v[y] + tol) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // CONVLAT_TESTS_ORACLES_HPP

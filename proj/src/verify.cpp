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


#include "convlat/verify.hpp"

#include <algorithm>
#include <cmath>

#include "convlat/convolution.hpp"
#include "convlat/errors.hpp"
#include "convlat/order.hpp"
#include "convlat/pointwise.hpp"

namespace convlat {

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b, std::size_t* at = nullptr) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > m) {
      m = d;
      if (at) *at = i;
    }
  }
  return m;
}

// max_k (a_k - max_{|d| <= s} b_{k+d}) and the same with a, b swapped.
double shifted_gap(const std::vector<double>& a, const std::vector<double>& b, std::size_t s) {
  const auto n = static_cast<long>(a.size());
  const auto w = static_cast<long>(s);
  double g = 0.0;
  for (long k = 0; k < n; ++k) {
    double ma = 0.0, mb = 0.0;
    for (long j = std::max(0L, k - w); j <= std::min(n - 1, k + w); ++j) {
      ma = std::max(ma, a[j]);
      mb = std::max(mb, b[j]);
    }
    g = std::max({g, a[k] - mb, b[k] - ma});
  }
  return g;
}

// a below b in the convolution order on grid samples, jumps matched up to s cells.
bool grid_below(const std::vector<double>& a, const std::vector<double>& b, std::size_t s, double tol) {
  const std::size_t n = a.size();
  std::vector<double> al(n), bl(n), ar(n), br(n);
  for (std::size_t i = 0; i < n; ++i) {
    al[i] = std::max(a[i], i ? al[i - 1] : 0.0);
    bl[i] = std::max(b[i], i ? bl[i - 1] : 0.0);
  }
  for (std::size_t i = n; i-- > 0;) {
    ar[i] = std::max(a[i], i + 1 < n ? ar[i + 1] : 0.0);
    br[i] = std::max(b[i], i + 1 < n ? br[i + 1] : 0.0);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (bl[k] > al[std::min(n - 1, k + s)] + tol) return false;
    if (ar[k] > br[k >= s ? k - s : 0] + tol) return false;
  }
  return true;
}

bool is_singleton(const std::vector<double>& v, double tol) {
  std::size_t high = 0;
  for (double x : v) {
    if (x >= 1.0 - tol) ++high;
    else if (x > tol) return false;
  }
  return high == 1;
}

bool is_block(const std::vector<double>& v, double tol) {
  long first = -1, last = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= 1.0 - tol) {
      if (first < 0) first = static_cast<long>(i);
      last = static_cast<long>(i);
    } else if (v[i] > tol) {
      return false;
    }
  }
  if (first < 0) return false;
  for (long i = first; i <= last; ++i) {
    if (v[i] < 1.0 - tol) return false;
  }
  return true;
}

}  // namespace

AxiomReport run_axiom_suite(const ScalarOp& star, const ScalarOp& tri,
                            const std::vector<NormalConvexFunction>& sample, double tolerance,
                            const SuiteOptions& options) {
  if (sample.empty()) throw InputError("axiom suite needs a non-empty sample");
  if (!(tolerance > 0.0)) throw InputError("tolerance must be positive");
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!is_convex(sample[i].base()) || !is_normal(sample[i].base())) {
      throw InputError("sample member s" + std::to_string(i) + " is not a normal convex function");
    }
  }
  const std::size_t n = options.n;
  const std::size_t m = sample.size();
  auto name = [](std::size_t i) { return "s" + std::to_string(i); };
  auto conv = [&](const MembershipFunction& a, const MembershipFunction& b) {
    return convolve_grid(star, tri, a, b, n);
  };
  AxiomReport r;

  std::vector<std::vector<MembershipFunction>> pair(m, std::vector<MembershipFunction>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pair[i][j] = conv(sample[i].base(), sample[j].base());

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (max_abs_diff(pair[i][j].vs(), pair[j][i].vs()) > tolerance) r.commutative = false;
    }
  }

  const MembershipFunction one = characteristic_function(1.0, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const MembershipFunction u = conv(one, sample[i].base());
    if (max_abs_diff(u.vs(), sample[i].base().sample_cells(n)) > tolerance) r.unit_ok = false;
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!is_convex(pair[i][j], tolerance) || !is_normal(pair[i][j], tolerance)) r.closed_on_L = false;
    }
  }

  // f1 = meet(s_i, s_k) lies below s_i, so f1 * s_j must lie below s_i * s_j.
  for (std::size_t i = 0; i < m && r.monotone_ok; ++i) {
    const NormalConvexFunction lower = meet(sample[i], sample[(i + 1) % m]);
    for (std::size_t j = 0; j < m; ++j) {
      const auto a = conv(lower.base(), sample[j].base());
      const auto a2 = conv(sample[j].base(), lower.base());
      if (!grid_below(a.vs(), pair[i][j].vs(), options.shift, tolerance) ||
          !grid_below(a2.vs(), pair[j][i].vs(), options.shift, tolerance)) {
        r.monotone_ok = false;
        break;
      }
    }
  }

  struct Spot {
    double plain;
    std::size_t i, j, k;
    double x;
  };
  std::vector<Spot> spots;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const MembershipFunction lhs = conv(pair[i][j], sample[k].base());
        const MembershipFunction rhs = conv(sample[i].base(), pair[j][k]);
        std::size_t at = 0;
        const double plain = max_abs_diff(lhs.vs(), rhs.vs(), &at);
        const double x = static_cast<double>(at) / (n - 1);
        r.plain_grid_assoc_gap = std::max(r.plain_grid_assoc_gap, plain);
        spots.push_back({plain, i, j, k, x});
        const double gap = shifted_gap(lhs.vs(), rhs.vs(), options.shift);
        if (gap > r.grid_assoc_gap) {
          r.grid_assoc_gap = gap;
          r.witness = AxiomWitness{name(i), name(j), name(k), x};
        }
      }
    }
  }
  std::sort(spots.begin(), spots.end(), [](const Spot& a, const Spot& b) { return a.plain > b.plain; });
  for (std::size_t s = 0; s < std::min(options.spot_checks, spots.size()); ++s) {
    const Spot& p = spots[s];
    if (p.plain <= tolerance) break;
    try {
      const double gap = associations_at(star, tri, sample[p.i].base(), sample[p.j].base(),
                                         sample[p.k].base(), p.x, options.witness_samples)
                             .gap();
      if (gap > r.spot_assoc_gap) {
        r.spot_assoc_gap = gap;
        if (gap > r.grid_assoc_gap) r.witness = AxiomWitness{name(p.i), name(p.j), name(p.k), p.x};
      }
    } catch (const UnsupportedOperator&) {
      break;
    }
  }
  r.max_assoc_gap = std::max(r.grid_assoc_gap, r.spot_assoc_gap);

  for (const auto& w : options.witnesses) {
    const double gap = associations_at(star, tri, w.f, w.g, w.h, w.x0, options.witness_samples).gap();
    if (gap > r.witness_assoc_gap) r.witness_assoc_gap = gap;
    if (gap > r.max_assoc_gap) {
      r.max_assoc_gap = gap;
      r.witness = AxiomWitness{w.name + ".f", w.name + ".g", w.name + ".h", w.x0};
    }
  }
  r.associative_ok = r.max_assoc_gap <= tolerance;

  const std::vector<double> points{0.0, 0.25, 0.375, 0.5, 0.625, 0.75, 1.0};
  for (double x : points) {
    for (double y : points) {
      const auto v = conv(characteristic_function(x, x), characteristic_function(y, y));
      if (!is_singleton(v.vs(), tolerance)) r.closed_on_J = false;
    }
  }
  const std::vector<std::pair<double, double>> intervals{
      {0.0, 1.0}, {0.25, 0.5}, {0.5, 0.75}, {0.0, 0.25}, {0.375, 1.0}, {0.75, 0.75}, {0.125, 0.875}};
  for (const auto& [a, b] : intervals) {
    for (const auto& [c, d] : intervals) {
      const auto v = conv(characteristic_function(a, b), characteristic_function(c, d));
      if (!is_block(v.vs(), tolerance)) r.closed_on_J2 = false;
    }
  }
  return r;
}

WitnessTriple border_witness(double a) {
  if (!(a > 0.0 && a < 1.0)) throw InputError("border witness needs a in (0,1)");
  WitnessTriple w;
  w.name = "border";
  w.f = MembershipFunction::constant(1.0);
  w.g = MembershipFunction::from_segments({0.0, 1.0}, {0.0, 0.0}, {{0.0, 1.0}});
  w.h = MembershipFunction::from_segments({0.0, 1.0}, {1.0, a}, {{a, a}});
  w.x0 = 0.5;
  return w;
}

WitnessTriple left_witness(const ScalarOp& star, double lambda, double u, double v, double alpha,
                           double beta) {
  const OpTraits& t = traits(star);
  if (!t.tnorm || !t.continuous) throw InputError("left witness needs a continuous t-norm star");
  if (!(u > 0.0 && u < 1.0 && v > 0.0 && v < 1.0)) throw InputError("left witness needs u, v in (0,1)");
  if (!(0.0 <= alpha && alpha < beta && beta <= 1.0)) throw InputError("left witness needs 0 <= alpha < beta <= 1");
  const double l2 = star(lambda, lambda);
  const double l3 = star(l2, lambda);
  for (double p : {lambda, l2, l3}) {
    if (!(p > alpha && p < beta)) {
      throw InputError("left witness needs lambda, lambda*lambda and lambda*lambda*lambda inside (alpha, beta)");
    }
  }
  if (!(l3 < l2 && l2 < lambda)) throw InputError("left witness needs lambda*lambda < lambda");
  WitnessTriple w;
  w.name = "left";
  // f: max{0, x - lambda + v} on (lambda*lambda, lambda), 1 at lambda, 0 elsewhere.
  {
    std::vector<double> xs{0.0, l2};
    std::vector<double> vs{0.0, 0.0};
    std::vector<Segment> segs{{0.0, 0.0}};
    const double knee = lambda - v;
    if (knee > l2) {
      segs.push_back({0.0, 0.0});
      xs.push_back(knee);
      vs.push_back(0.0);
      segs.push_back({0.0, v});
    } else {
      segs.push_back({l2 - lambda + v, v});
    }
    xs.push_back(lambda);
    vs.push_back(1.0);
    segs.push_back({0.0, 0.0});
    xs.push_back(1.0);
    vs.push_back(0.0);
    w.f = MembershipFunction::from_segments(std::move(xs), std::move(vs), std::move(segs));
  }
  w.g = MembershipFunction::from_segments({0.0, lambda, 1.0}, {0.0, 0.0, lambda}, {{0.0, 0.0}, {1.0, lambda}});
  w.h = MembershipFunction::from_segments({0.0, lambda, 1.0}, {0.0, u, 1.0}, {{0.0, 0.0}, {u, u}});
  w.x0 = l3;
  return w;
}

NormalConvexFunction random_normal_convex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  const double center = 0.36 + 0.28 * unit(rng);
  const double half = 0.06 * unit(rng);
  const double lw = 0.15 + 0.15 * unit(rng);
  const double rw = 0.15 + 0.15 * unit(rng);
  const double b = center - half, c = center + half;
  const double a = std::max(0.0, b - lw), d = std::min(1.0, c + rw);
  std::vector<std::pair<double, double>> pts;
  if (a > 0.0) pts.emplace_back(0.0, 0.0);
  pts.emplace_back(a, 0.0);
  if (coin(rng)) {
    const double t = 0.35 + 0.3 * unit(rng);
    pts.emplace_back(a + t * (b - a), t * (0.75 + 0.5 * unit(rng)));
  }
  pts.emplace_back(b, 1.0);
  if (c > b) pts.emplace_back(c, 1.0);
  if (coin(rng)) {
    const double t = 0.35 + 0.3 * unit(rng);
    pts.emplace_back(c + t * (d - c), 1.0 - t * (0.75 + 0.5 * unit(rng)));
  }
  pts.emplace_back(d, 0.0);
  if (d < 1.0) pts.emplace_back(1.0, 0.0);
  return NormalConvexFunction::from(MembershipFunction::linear(pts));
}

std::vector<NormalConvexFunction> random_sample(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NormalConvexFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_normal_convex(rng));
  return out;
}

}  // namespace convlat

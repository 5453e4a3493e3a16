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


#include "convlat/pointwise.hpp"

#include <algorithm>
#include <cmath>

#include "convlat/errors.hpp"

namespace convlat {

namespace {

constexpr double kSnap = 1e-12;
constexpr double kDelta = 1e-9;

double snap_to(const std::vector<double>& pts, double x) {
  x = std::clamp(x, 0.0, 1.0);
  auto it = std::lower_bound(pts.begin(), pts.end(), x - kSnap);
  if (it != pts.end() && std::abs(*it - x) <= kSnap) return *it;
  return x;
}

std::vector<double> dedupe(std::vector<double> v) {
  for (double& x : v) x = std::clamp(x, 0.0, 1.0);
  v.push_back(0.0);
  v.push_back(1.0);
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > kSnap) out.push_back(x);
  }
  return out;
}

struct SupAccumulator {
  SupResult r{-1.0, false};
  void add(double v, bool attained) {
    if (v > r.value + kSnap) {
      r = {v, attained};
    } else if (std::abs(v - r.value) <= kSnap) {
      r.attained = r.attained || attained;
    }
  }
  SupResult result() const { return r.value < 0.0 ? SupResult{0.0, false} : r; }
};

class PiecewiseProbe final : public Probe {
 public:
  explicit PiecewiseProbe(MembershipFunction f) : f_(std::move(f)), crit_(f_.xs()) {}
  double value(double x) const override { return f_(x); }
  Approach left(double x) const override { return f_.approach_left(x); }
  Approach right(double x) const override { return f_.approach_right(x); }
  SupResult sup_over(double a, double b, bool ac, bool bc) const override {
    return f_.sup_over(a, b, ac, bc);
  }
  const std::vector<double>& critical_points() const override { return crit_; }

 private:
  MembershipFunction f_;
  std::vector<double> crit_;
};

class NegatedProbe final : public Probe {
 public:
  explicit NegatedProbe(ProbePtr p) : p_(std::move(p)) {
    for (auto it = p_->critical_points().rbegin(); it != p_->critical_points().rend(); ++it) {
      crit_.push_back(1.0 - *it);
    }
    crit_ = dedupe(std::move(crit_));
  }
  double value(double x) const override { return p_->value(1.0 - x); }
  Approach left(double x) const override { return p_->right(1.0 - x); }
  Approach right(double x) const override { return p_->left(1.0 - x); }
  SupResult sup_over(double a, double b, bool ac, bool bc) const override {
    return p_->sup_over(1.0 - b, 1.0 - a, bc, ac);
  }
  const std::vector<double>& critical_points() const override { return crit_; }

 private:
  ProbePtr p_;
  std::vector<double> crit_;
};

enum class Fiber { minimum, product, lukasiewicz };

class ConvolutionProbe final : public Probe {
 public:
  ConvolutionProbe(Fiber fiber, ScalarOp tri, ProbePtr f, ProbePtr g, int samples)
      : fiber_(fiber), tri_(std::move(tri)), f_(std::move(f)), g_(std::move(g)),
        samples_(std::max(samples, 3)) {
    std::vector<double> c;
    for (double a : f_->critical_points()) {
      for (double b : g_->critical_points()) c.push_back(star(a, b));
    }
    if (fiber_ == Fiber::minimum) {
      c.insert(c.end(), f_->critical_points().begin(), f_->critical_points().end());
      c.insert(c.end(), g_->critical_points().begin(), g_->critical_points().end());
    }
    crit_ = dedupe(std::move(c));
  }

  double value(double x) const override {
    x = snap_to(crit_, x);
    if (fiber_ == Fiber::minimum || (fiber_ == Fiber::product && x <= 0.0)) return fixed_branches(x);
    if (fiber_ == Fiber::lukasiewicz && x <= 0.0) return lukasiewicz_zero();
    return along_curve(x);
  }

  Approach left(double x) const override {
    if (x <= 0.0) return {value(0.0), 0};
    return extrapolate(value(x - kDelta), value(x - 2 * kDelta));
  }

  Approach right(double x) const override {
    if (x >= 1.0) return {value(1.0), 0};
    return extrapolate(value(x + kDelta), value(x + 2 * kDelta));
  }

  SupResult sup_over(double a, double b, bool ac, bool bc) const override {
    a = snap_to(crit_, a);
    b = snap_to(crit_, b);
    if (a > b) return {0.0, false};
    if (a == b) return ac && bc ? SupResult{value(a), true} : SupResult{0.0, false};
    SupAccumulator acc;
    if (ac) acc.add(value(a), true);
    else acc.add(right(a).value, false);
    if (bc) acc.add(value(b), true);
    else acc.add(left(b).value, false);
    for (double c : crit_) {
      if (c <= a || c >= b) continue;
      acc.add(value(c), true);
      acc.add(left(c).value, false);
      acc.add(right(c).value, false);
    }
    for (int i = 1; i + 1 < samples_; ++i) {
      acc.add(value(a + (b - a) * i / (samples_ - 1)), true);
    }
    return acc.result();
  }

  const std::vector<double>& critical_points() const override { return crit_; }

 private:
  double star(double a, double b) const {
    switch (fiber_) {
      case Fiber::minimum: return std::min(a, b);
      case Fiber::product: return a * b;
      case Fiber::lukasiewicz: return std::max(a + b - 1.0, 0.0);
    }
    return 0.0;
  }

  static Approach extrapolate(double v1, double v2) {
    const double lim = std::clamp(2.0 * v1 - v2, 0.0, 1.0);
    int dir = 0;
    if (v1 > lim + 1e-15) dir = 1;
    else if (v1 < lim - 1e-15) dir = -1;
    return {lim, dir};
  }

  // sup over z in [x,1] of tri(c, p(z)) for a fixed first argument value c.
  double sup_with(double c, const Probe& p, double x, bool swap) const {
    const SupResult s = p.sup_over(x, 1.0, true, true);
    const Approach pa{c, 0};
    const Approach pb{s.value, s.attained ? 0 : -1};
    return swap ? eval_limit(tri_, pb, pa) : eval_limit(tri_, pa, pb);
  }

  // star(y, z) = x splits into {y = x, z >= x} and {z = x, y >= x} (also the product at 0).
  double fixed_branches(double x) const {
    const double v1 = sup_with(f_->value(x), *g_, x, false);
    const double v2 = sup_with(g_->value(x), *f_, x, true);
    return std::max(v1, v2);
  }

  double z_of(double x, double y) const {
    return fiber_ == Fiber::product ? x / y : x + 1.0 - y;
  }

  double along_curve(double x) const {
    const auto& fc = f_->critical_points();
    const auto& gc = g_->critical_points();
    std::vector<double> ys{x, 1.0};
    for (double c : fc) {
      if (c > x && c < 1.0) ys.push_back(c);
    }
    for (double c : gc) {
      if (c <= x || c >= 1.0) continue;
      ys.push_back(fiber_ == Fiber::product ? x / c : x + 1.0 - c);
    }
    for (int i = 1; i + 1 < samples_; ++i) ys.push_back(x + (1.0 - x) * i / (samples_ - 1));
    for (double& y : ys) y = std::clamp(snap_to(fc, y), x, 1.0);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto at = [&](double y) {
      const double z = y == x ? 1.0 : snap_to(gc, z_of(x, y));
      return tri_(f_->value(y), g_->value(z));
    };
    double best = 0.0;
    std::vector<double> vals(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double y = ys[i];
      const double z = y == x ? 1.0 : snap_to(gc, z_of(x, y));
      vals[i] = at(y);
      best = std::max(best, vals[i]);
      // z decreases as y increases.
      if (y > x) best = std::max(best, eval_limit(tri_, f_->left(y), g_->right(z)));
      if (y < 1.0) best = std::max(best, eval_limit(tri_, f_->right(y), g_->left(z)));
    }
    // A rising f against a falling g peaks between samples; polish the best few brackets.
    std::vector<std::size_t> peaks;
    for (std::size_t i = 1; i + 1 < ys.size(); ++i) {
      if (vals[i] > 0.0 && vals[i] >= vals[i - 1] && vals[i] >= vals[i + 1]) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    if (peaks.size() > 3) peaks.resize(3);
    constexpr double kInvPhi = 0.6180339887498949;
    for (std::size_t i : peaks) {
      double lo = ys[i - 1], hi = ys[i + 1];
      double c = hi - kInvPhi * (hi - lo), d = lo + kInvPhi * (hi - lo);
      double fc_v = at(c), fd_v = at(d);
      for (int it = 0; it < 48 && hi - lo > 1e-15; ++it) {
        if (fc_v >= fd_v) {
          hi = d;
          d = c;
          fd_v = fc_v;
          c = hi - kInvPhi * (hi - lo);
          fc_v = at(c);
        } else {
          lo = c;
          c = d;
          fc_v = fd_v;
          d = lo + kInvPhi * (hi - lo);
          fd_v = at(d);
        }
        best = std::max({best, fc_v, fd_v});
      }
    }
    return best;
  }

  // x = 0 under the Lukasiewicz star is the whole region y + z <= 1.
  double lukasiewicz_zero() const {
    const auto& fc = f_->critical_points();
    std::vector<double> ys{0.0, 1.0};
    for (double c : fc) ys.push_back(c);
    for (double c : g_->critical_points()) ys.push_back(1.0 - c);
    for (int i = 1; i + 1 < samples_; ++i) ys.push_back(static_cast<double>(i) / (samples_ - 1));
    double best = 0.0;
    for (double y : ys) {
      y = snap_to(fc, y);
      const SupResult s = g_->sup_over(0.0, 1.0 - y, true, true);
      const Approach gb{s.value, s.attained ? 0 : -1};
      best = std::max(best, eval_limit(tri_, {f_->value(y), 0}, gb));
      if (y > 0.0) best = std::max(best, eval_limit(tri_, f_->left(y), gb));
      if (y < 1.0) best = std::max(best, eval_limit(tri_, f_->right(y), gb));
    }
    return best;
  }

  Fiber fiber_;
  ScalarOp tri_;
  ProbePtr f_;
  ProbePtr g_;
  int samples_;
  std::vector<double> crit_;
};

}  // namespace

ProbePtr make_probe(const MembershipFunction& f) { return std::make_shared<PiecewiseProbe>(f); }

ProbePtr make_convolution_probe(const ScalarOp& star, const ScalarOp& tri, ProbePtr f, ProbePtr g,
                                int samples) {
  if (is_minimum(star)) {
    return std::make_shared<ConvolutionProbe>(Fiber::minimum, tri, std::move(f), std::move(g), samples);
  }
  if (star.kind() == OpKind::product) {
    return std::make_shared<ConvolutionProbe>(Fiber::product, tri, std::move(f), std::move(g), samples);
  }
  if (star.kind() == OpKind::lukasiewicz) {
    return std::make_shared<ConvolutionProbe>(Fiber::lukasiewicz, tri, std::move(f), std::move(g),
                                              samples);
  }
  const ScalarOp d = dual(star);
  if (is_minimum(d) || d.kind() == OpKind::product || d.kind() == OpKind::lukasiewicz) {
    auto nf = std::make_shared<NegatedProbe>(std::move(f));
    auto ng = std::make_shared<NegatedProbe>(std::move(g));
    return std::make_shared<NegatedProbe>(make_convolution_probe(d, tri, nf, ng, samples));
  }
  throw UnsupportedOperator("pointwise convolution supports minimum, product, lukasiewicz and their "
                            "duals as star, got '" + to_string(star) + "'");
}

double convolve_at(const ScalarOp& star, const ScalarOp& tri, const MembershipFunction& f,
                   const MembershipFunction& g, double x) {
  return make_convolution_probe(star, tri, make_probe(f), make_probe(g))->value(x);
}

double AssociationValues::gap() const { return std::abs(left_assoc - right_assoc); }

AssociationValues associations_at(const ScalarOp& star, const ScalarOp& tri,
                                  const MembershipFunction& f, const MembershipFunction& g,
                                  const MembershipFunction& h, double x, int samples) {
  const ProbePtr pf = make_probe(f), pg = make_probe(g), ph = make_probe(h);
  const ProbePtr fg = make_convolution_probe(star, tri, pf, pg, samples);
  const ProbePtr gh = make_convolution_probe(star, tri, pg, ph, samples);
  AssociationValues out;
  out.left_assoc = make_convolution_probe(star, tri, fg, ph, samples)->value(x);
  out.right_assoc = make_convolution_probe(star, tri, pf, gh, samples)->value(x);
  return out;
}

}  // namespace convlat

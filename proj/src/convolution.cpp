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


#include "convlat/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "convlat/errors.hpp"

namespace convlat {

namespace {

std::size_t snap_index(double x, std::size_t n) {
  double t = x * static_cast<double>(n - 1) - 0.5;
  const double r = std::round(t);
  if (std::abs(t - r) < 1e-9) t = r;
  const long idx = static_cast<long>(std::ceil(t));
  return static_cast<std::size_t>(std::clamp<long>(idx, 0, static_cast<long>(n) - 1));
}

void require_monotone(const ScalarOp& star) {
  constexpr int r = 17;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const double x = static_cast<double>(i) / (r - 1), y = static_cast<double>(j) / (r - 1);
      const double v = star(x, y);
      if ((i + 1 < r && star(static_cast<double>(i + 1) / (r - 1), y) < v - 1e-12) ||
          (j + 1 < r && star(x, static_cast<double>(j + 1) / (r - 1)) < v - 1e-12)) {
        throw UnsupportedOperator("cut-based convolution needs a monotone star, '" + to_string(star) +
                                  "' is not");
      }
    }
  }
}

struct Threshold {
  double at;
  bool attained;
};

// inf { b in [0,1] : op(b, other) > gamma } (first_threshold) or op(other, b) > gamma
// (second_threshold), with whether the infimum itself qualifies. Empty set gives nullopt.
std::optional<Threshold> bisect_threshold(const std::function<double(double)>& h, double gamma) {
  if (!(h(1.0) > gamma)) return std::nullopt;
  if (h(0.0) > gamma) return Threshold{0.0, true};
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 64 && hi - lo > 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) > gamma) hi = mid;
    else lo = mid;
  }
  return Threshold{hi, true};
}

// Closed forms for the commutative named t-norms, where the threshold is never attained.
std::optional<Threshold> named_threshold(const ScalarOp& op, double other, double gamma, bool* known) {
  *known = true;
  switch (op.kind()) {
    case OpKind::minimum:
      if (!(other > gamma)) return std::nullopt;
      return Threshold{gamma, false};
    case OpKind::product:
      if (!(other > gamma)) return std::nullopt;
      return Threshold{gamma / other, false};
    case OpKind::lukasiewicz:
      if (!(other > gamma)) return std::nullopt;
      return Threshold{1.0 + gamma - other, false};
    case OpKind::nilpotent_minimum:
      if (!(other > gamma)) return std::nullopt;
      return Threshold{std::max(gamma, 1.0 - other), false};
    default:
      *known = false;
      return std::nullopt;
  }
}

std::optional<Threshold> first_threshold(const ScalarOp& op, double other, double gamma) {
  bool known = false;
  auto t = named_threshold(op, other, gamma, &known);
  if (known) return t;
  return bisect_threshold([&](double b) { return op(b, other); }, gamma);
}

std::optional<Threshold> second_threshold(const ScalarOp& op, double other, double gamma) {
  bool known = false;
  auto t = named_threshold(op, other, gamma, &known);
  if (known) return t;
  return bisect_threshold([&](double b) { return op(other, b); }, gamma);
}

}  // namespace

MembershipFunction convolve_grid(const ScalarOp& star, const ScalarOp& tri, const MembershipFunction& f,
                                 const MembershipFunction& g, std::size_t n) {
  if (n < 65) throw InputError("convolve_grid needs n >= 65");
  const std::vector<double> fs = f.sample_cells(n);
  const std::vector<double> gs = g.sample_cells(n);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = tri(fs[i], gs[j]);
      if (v <= 0.0) continue;
      const std::size_t k = snap_index(star(xs[i], xs[j]), n);
      if (v > out[k]) out[k] = v;
    }
  }
  return MembershipFunction::grid(std::move(out));
}

NormalConvexFunction convolve_cuts(const ScalarOp& star, const ScalarOp& tri,
                                   const NormalConvexFunction& f, const NormalConvexFunction& g) {
  if (f.levels() != g.levels()) throw InputError("convolve_cuts inputs use different level counts");
  require_monotone(star);
  const std::size_t k = f.levels();
  std::vector<double> level(k);
  for (std::size_t a = 0; a < k; ++a) level[a] = f.level(a);

  // Level values at which an endpoint function of f or g may jump or bend.
  auto breakpoint_levels = [](const NormalConvexFunction& h) {
    std::vector<double> out;
    for (const MembershipFunction* e : {&h.left_env(), &h.right_env()}) {
      out.insert(out.end(), e->vs().begin(), e->vs().end());
      for (const Segment& sg : e->segments()) {
        out.push_back(sg.start);
        out.push_back(sg.end);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  const std::vector<double> f_levels = breakpoint_levels(f);
  const std::vector<double> g_levels = breakpoint_levels(g);
  const std::size_t coarse = 257;

  // cuts[j] is the result's cut at level j + 1, taken as the strong cut at the midpoint gamma.
  std::vector<Cut> cuts(k - 1);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const double gamma = 0.5 * (level[j] + level[j + 1]);
    const auto a0 = first_threshold(tri, 1.0, gamma);
    if (!a0) continue;

    // For a fixed alpha the best beta sits at the bottom of the ray {tri(alpha, .) > gamma}:
    // l and r are monotone, so only that end of the ray matters.
    struct Probe {
      double lo, hi;
    };
    auto probe = [&](double alpha) -> std::optional<Probe> {
      if (alpha < 0.0 || alpha > 1.0) return std::nullopt;
      const auto th = second_threshold(tri, alpha, gamma);
      if (!th) return std::nullopt;
      const bool strict = !th->attained;
      return Probe{star(f.lo_at(alpha), g.lo_at(th->at, strict)), star(f.hi_at(alpha), g.hi_at(th->at, strict))};
    };

    std::vector<double> cand;
    cand.reserve(coarse + 4 * (f_levels.size() + g_levels.size()) + 8);
    for (std::size_t i = 0; i < coarse; ++i) cand.push_back(static_cast<double>(i) / (coarse - 1));
    for (const double eps : {0.0, 1e-13, 1e-11, 1e-9}) cand.push_back(a0->at + eps);
    for (const double p : f_levels) {
      cand.push_back(p);
      cand.push_back(p + 1e-12);
    }
    for (const double q : g_levels) {
      // alpha at which the beta threshold crosses the level q
      const auto aq = first_threshold(tri, q, gamma);
      if (!aq) continue;
      for (const double eps : {0.0, 1e-13, 1e-11, 1e-9}) cand.push_back(aq->at + eps);
    }

    double best_lo = std::numeric_limits<double>::infinity(), best_hi = -1.0;
    double arg_lo = 0.0, arg_hi = 0.0;
    auto consider = [&](double alpha) {
      const auto pr = probe(alpha);
      if (!pr) return;
      if (pr->lo < best_lo) {
        best_lo = pr->lo;
        arg_lo = alpha;
      }
      if (pr->hi > best_hi) {
        best_hi = pr->hi;
        arg_hi = alpha;
      }
    };
    for (const double a : cand) consider(a);
    if (best_hi < 0.0) continue;

    // Zoom in on both optima; the coarse scan only needs to land in the right basin.
    for (double* arg : {&arg_lo, &arg_hi}) {
      double delta = 1.0 / (coarse - 1);
      for (int round = 0; round < 12; ++round) {
        const double centre = *arg;
        for (int t = 0; t <= 16; ++t) consider(centre + delta * (t / 8.0 - 1.0));
        delta /= 8.0;
      }
    }
    cuts[j] = {std::clamp(best_lo, 0.0, 1.0), std::clamp(best_hi, 0.0, 1.0), false};
  }

  std::vector<double> xs{0.0, 1.0};
  for (const Cut& c : cuts) {
    if (c.empty) continue;
    xs.push_back(c.lo);
    xs.push_back(c.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(), [](double a, double b) { return b - a <= 1e-15; }), xs.end());
  auto height = [&](double x) {
    double v = 0.0;
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      if (!cuts[j].empty && cuts[j].lo <= x && x <= cuts[j].hi) v = level[j + 1];
    }
    return v;
  };
  std::vector<double> vs;
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vs.push_back(height(xs[i]));
    if (i + 1 < xs.size()) {
      const double v = height(0.5 * (xs[i] + xs[i + 1]));
      segs.push_back({v, v});
    }
  }
  return NormalConvexFunction::trusted(
      MembershipFunction::from_segments(std::move(xs), std::move(vs), std::move(segs)), k);
}

NormalConvexFunction meet_convolve(const ScalarOp& tri, const NormalConvexFunction& f,
                                   const NormalConvexFunction& g) {
  const OpTraits& tt = traits(tri);
  if (!tt.tnorm || !tt.border_continuous) {
    throw ClassificationError("closed-form meet needs a border-continuous t-norm, '" + to_string(tri) +
                              "' is not");
  }
  const MembershipFunction& fb = f.base();
  const MembershipFunction& gb = g.base();
  std::vector<double> pts = critical_points({&fb, &gb});
  pts.push_back(f.hi_at(1.0));
  pts.push_back(g.hi_at(1.0));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(), [](double a, double b) { return b - a <= 1e-12; }),
            pts.end());
  if (pts.size() > 1 && pts[pts.size() - 2] > 1.0 - 1e-12) pts.erase(pts.end() - 2);
  pts.front() = 0.0;
  pts.back() = 1.0;

  std::vector<double> refined{pts.front()};
  const bool tri_min = is_minimum(tri);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    const double d1 = fb.limit_right(a) - gb.limit_right(a);
    const double d2 = fb.limit_left(b) - gb.limit_left(b);
    std::vector<double> inner;
    if (d1 * d2 < 0.0) inner.push_back(a + d1 / (d1 - d2) * (b - a));
    const double mid = 0.5 * (a + b);
    const bool outside = !increasing_prefix_contains(f, mid) && !increasing_prefix_contains(g, mid);
    if (!tri_min && outside) {
      const bool flat = std::abs(fb.limit_right(a) - fb.limit_left(b)) <= 1e-15 ||
                        std::abs(gb.limit_right(a) - gb.limit_left(b)) <= 1e-15;
      if (tri.kind() == OpKind::lukasiewicz || tri.kind() == OpKind::nilpotent_minimum) {
        // both inputs are linear here; the only kink (or jump) is where f + g = 1
        const double s1 = fb.limit_right(a) + gb.limit_right(a) - 1.0;
        const double s2 = fb.limit_left(b) + gb.limit_left(b) - 1.0;
        if (s1 * s2 < 0.0) inner.push_back(a + s1 / (s1 - s2) * (b - a));
      } else if (!flat || tri.kind() != OpKind::product) {
        const auto m = static_cast<std::size_t>(std::ceil((b - a) * (kDefaultSamples - 1)));
        for (std::size_t s = 1; s < m; ++s) inner.push_back(a + (b - a) * static_cast<double>(s) / m);
      }
    }
    std::sort(inner.begin(), inner.end());
    for (double x : inner) {
      if (x - refined.back() > 1e-12 && b - x > 1e-12) refined.push_back(x);
    }
    refined.push_back(b);
  }

  auto combine = [&](bool in_f, bool in_g, Approach fv, Approach gv) {
    if (in_f && in_g) return std::max(fv.value, gv.value);
    if (in_g) return fv.value;
    if (in_f) return gv.value;
    return eval_limit(tri, fv, gv);
  };
  std::vector<double> vs;
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < refined.size(); ++i) {
    const double x = refined[i];
    vs.push_back(combine(increasing_prefix_contains(f, x), increasing_prefix_contains(g, x), {fb(x), 0},
                         {gb(x), 0}));
    if (i + 1 < refined.size()) {
      const double b = refined[i + 1];
      const double mid = 0.5 * (x + b);
      const bool in_f = increasing_prefix_contains(f, mid);
      const bool in_g = increasing_prefix_contains(g, mid);
      segs.push_back({combine(in_f, in_g, fb.approach_right(x), gb.approach_right(x)),
                      combine(in_f, in_g, fb.approach_left(b), gb.approach_left(b))});
    }
  }
  // drop breakpoints that carry no information, or repeated joins keep growing
  return NormalConvexFunction::trusted(
      MembershipFunction::from_segments(std::move(refined), std::move(vs), std::move(segs)).canonical(),
      f.levels());
}

NormalConvexFunction join_convolve(const ScalarOp& tri, const NormalConvexFunction& f,
                                   const NormalConvexFunction& g) {
  const NormalConvexFunction r = negate(meet_convolve(tri, negate(f), negate(g)));
  return NormalConvexFunction::trusted(snap_breakpoints(r.base(), {&f.base(), &g.base()}), r.levels());
}

ClassificationReport classify(const ScalarOp& star, const ScalarOp& tri, int report_resolution) {
  ClassificationReport r;
  r.star_class = classify_continuity(star, report_resolution);
  r.tri_class = classify_continuity(tri, report_resolution);
  const OpTraits& s = traits(star);
  const OpTraits& t = traits(tri);
  const std::string star_name = to_string(star);
  const std::string tri_name = to_string(tri);

  auto side = [&](bool star_ok, bool extreme, const char* kind, const char* extreme_name) {
    std::string why;
    bool ok = false;
    if (!star_ok) {
      why = star_name + " is not a continuous " + kind;
    } else if (!t.tnorm) {
      why = tri_name + " is not a t-norm";
    } else if (extreme) {
      ok = t.border_continuous;
      why = std::string("star is ") + extreme_name + ", so tri must be a border-continuous t-norm: " +
            tri_name + (ok ? " is" : " is not") + " border continuous";
    } else {
      ok = t.left_continuous;
      why = std::string("star is a continuous ") + kind + " other than " + extreme_name +
            ", so tri must be a left-continuous t-norm: " + tri_name + (ok ? " is" : " is not") +
            " left continuous";
    }
    return std::make_pair(ok, why);
  };
  const auto [tn, tn_why] = side(s.tnorm && s.continuous, is_minimum(star), "t-norm", "minimum");
  const auto [tc, tc_why] = side(s.tconorm && s.continuous, is_maximum(star), "t-conorm", "maximum");
  r.is_tnorm_on_L = tn;
  r.is_tr_norm_on_L = tn;
  r.is_tconorm_on_L = tc;
  r.reason = "t-norm: " + tn_why + "; t-conorm: " + tc_why;
  return r;
}

}  // namespace convlat

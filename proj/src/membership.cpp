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


#include "convlat/membership.hpp"

#include <algorithm>
#include <mutex>
#include <cmath>
#include <functional>
#include <sstream>

#include "convlat/errors.hpp"

namespace convlat {

namespace {

constexpr double kSnap = 1e-12;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double lerp_seg(const Segment& s, double xa, double xb, double x) {
  if (x <= xa) return s.start;
  if (x >= xb) return s.end;
  return s.start + (s.end - s.start) * (x - xa) / (xb - xa);
}

int slope_sign(const Segment& s) {
  if (s.end > s.start + kSnap) return 1;
  if (s.end < s.start - kSnap) return -1;
  return 0;
}

// Builds a function that is linear on each open piece between the given breakpoints,
// reading point values and piece lines off `fn`.
MembershipFunction from_pieces(std::vector<double> xs, const std::function<double(double)>& fn) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> vs;
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vs.push_back(clamp01(fn(xs[i])));
    if (i + 1 < xs.size()) {
      const double w = xs[i + 1] - xs[i];
      const double v1 = fn(xs[i] + w / 3.0);
      const double v2 = fn(xs[i] + 2.0 * w / 3.0);
      segs.push_back({clamp01(v1 - (v2 - v1)), clamp01(v2 + (v2 - v1))});
    }
  }
  return MembershipFunction::from_segments(std::move(xs), std::move(vs), std::move(segs));
}

}  // namespace

MembershipFunction::MembershipFunction() : xs_{0.0, 1.0}, vs_{0.0, 0.0}, segs_{{0.0, 0.0}} {}

MembershipFunction MembershipFunction::from_segments(std::vector<double> xs, std::vector<double> vs,
                                                     std::vector<Segment> segments) {
  if (xs.size() < 2 || vs.size() != xs.size() || segments.size() + 1 != xs.size()) {
    throw InputError("piecewise function needs n >= 2 points and n - 1 segments");
  }
  if (xs.front() != 0.0 || xs.back() != 1.0) {
    throw InputError("piecewise breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw InputError("piecewise breakpoints must be strictly increasing");
  }
  auto check = [](double& v) {
    if (!(v >= -kSnap && v <= 1.0 + kSnap)) {
      std::ostringstream os;
      os << "membership value " << v << " outside [0,1]";
      throw InputError(os.str());
    }
    v = clamp01(v);
  };
  for (double& v : vs) check(v);
  for (Segment& s : segments) {
    check(s.start);
    check(s.end);
  }
  MembershipFunction f;
  f.xs_ = std::move(xs);
  f.vs_ = std::move(vs);
  f.segs_ = std::move(segments);
  return f;
}

MembershipFunction MembershipFunction::piecewise(const std::vector<std::pair<double, double>>& points,
                                                 const std::vector<SegmentKind>& kinds) {
  if (points.size() < 2 || kinds.size() + 1 != points.size()) {
    throw InputError("piecewise function needs n >= 2 points and n - 1 segment kinds");
  }
  std::vector<double> xs, vs;
  std::vector<Segment> segs;
  for (const auto& [x, v] : points) {
    xs.push_back(x);
    vs.push_back(v);
  }
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    switch (kinds[j]) {
      case SegmentKind::linear: segs.push_back({vs[j], vs[j + 1]}); break;
      case SegmentKind::constant_left: segs.push_back({vs[j], vs[j]}); break;
      case SegmentKind::constant_right: segs.push_back({vs[j + 1], vs[j + 1]}); break;
    }
  }
  return from_segments(std::move(xs), std::move(vs), std::move(segs));
}

MembershipFunction MembershipFunction::linear(const std::vector<std::pair<double, double>>& points) {
  return piecewise(points, std::vector<SegmentKind>(points.empty() ? 0 : points.size() - 1,
                                                    SegmentKind::linear));
}

MembershipFunction MembershipFunction::grid(std::vector<double> values) {
  const std::size_t n = values.size();
  if (n < 3) throw InputError("grid function needs at least 3 samples");
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  xs.back() = 1.0;
  std::vector<Segment> segs;
  segs.reserve(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) segs.push_back({values[i], values[i + 1]});
  MembershipFunction f = from_segments(std::move(xs), std::move(values), std::move(segs));
  f.grid_n_ = n;
  return f;
}

MembershipFunction MembershipFunction::constant(double c) {
  return from_segments({0.0, 1.0}, {c, c}, {{c, c}});
}

MembershipFunction MembershipFunction::triangle(double a, double b, double c) {
  if (!(0.0 <= a && a <= b && b <= c && c <= 1.0)) {
    throw InputError("triangle needs 0 <= a <= b <= c <= 1");
  }
  return trapezoid(a, b, b, c);
}

MembershipFunction MembershipFunction::trapezoid(double a, double b, double c, double d) {
  if (!(0.0 <= a && a <= b && b <= c && c <= d && d <= 1.0)) {
    throw InputError("trapezoid needs 0 <= a <= b <= c <= d <= 1");
  }
  auto fn = [=](double x) {
    if (x < a || x > d) return 0.0;
    if (x < b) return (x - a) / (b - a);
    if (x <= c) return 1.0;
    return (d - x) / (d - c);
  };
  return from_pieces({0.0, a, b, c, d, 1.0}, fn);
}

int MembershipFunction::breakpoint_at(double x) const {
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x - kSnap);
  if (it != xs_.end() && std::abs(*it - x) <= kSnap) return static_cast<int>(it - xs_.begin());
  return -1;
}

std::size_t MembershipFunction::segment_of(double x) const {
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t j = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
  return std::min(j, segs_.size() - 1);
}

double MembershipFunction::operator()(double x) const {
  const int k = breakpoint_at(x);
  if (k >= 0) return vs_[k];
  if (x <= 0.0) return vs_.front();
  if (x >= 1.0) return vs_.back();
  const std::size_t j = segment_of(x);
  return lerp_seg(segs_[j], xs_[j], xs_[j + 1], x);
}

double MembershipFunction::limit_left(double x) const { return approach_left(x).value; }
double MembershipFunction::limit_right(double x) const { return approach_right(x).value; }

Approach MembershipFunction::approach_left(double x) const {
  const int k = breakpoint_at(x);
  if (k == 0 || x <= 0.0) return {vs_.front(), 0};
  if (k > 0) {
    const Segment& s = segs_[k - 1];
    return {s.end, -slope_sign(s)};
  }
  const std::size_t j = segment_of(x);
  return {lerp_seg(segs_[j], xs_[j], xs_[j + 1], x), -slope_sign(segs_[j])};
}

Approach MembershipFunction::approach_right(double x) const {
  const int k = breakpoint_at(x);
  if (k == static_cast<int>(xs_.size()) - 1 || x >= 1.0) return {vs_.back(), 0};
  if (k >= 0) {
    const Segment& s = segs_[k];
    return {s.start, slope_sign(s)};
  }
  const std::size_t j = segment_of(x);
  return {lerp_seg(segs_[j], xs_[j], xs_[j + 1], x), slope_sign(segs_[j])};
}

SupResult MembershipFunction::sup_over(double a, double b, bool a_closed, bool b_closed) const {
  const int ka = breakpoint_at(a);
  if (ka >= 0) a = xs_[ka];
  const int kb = breakpoint_at(b);
  if (kb >= 0) b = xs_[kb];
  a = clamp01(a);
  b = clamp01(b);
  SupResult r{-1.0, false};
  auto consider = [&r](double v, bool attained) {
    if (v > r.value + kSnap) {
      r.value = v;
      r.attained = attained;
    } else if (std::abs(v - r.value) <= kSnap) {
      r.attained = r.attained || attained;
    }
  };
  if (a > b) return {0.0, false};
  if (a == b) {
    if (a_closed && b_closed) return {(*this)(a), true};
    return {0.0, false};
  }
  if (a_closed) consider((*this)(a), true);
  if (b_closed) consider((*this)(b), true);
  auto first = std::upper_bound(xs_.begin(), xs_.end(), a);
  for (auto it = first; it != xs_.end() && *it < b; ++it) {
    consider(vs_[it - xs_.begin()], true);
  }
  std::size_t j = first == xs_.begin() ? 0 : static_cast<std::size_t>(first - xs_.begin()) - 1;
  for (; j < segs_.size() && xs_[j] < b; ++j) {
    const double p = std::max(xs_[j], a);
    const double q = std::min(xs_[j + 1], b);
    if (!(p < q)) continue;
    const Segment& s = segs_[j];
    const double lp = lerp_seg(s, xs_[j], xs_[j + 1], p);
    const double lq = lerp_seg(s, xs_[j], xs_[j + 1], q);
    if (slope_sign(s) == 0) consider(lp, true);
    else consider(std::max(lp, lq), false);
  }
  if (r.value < 0.0) return {0.0, false};
  return r;
}

double MembershipFunction::sup() const {
  double m = *std::max_element(vs_.begin(), vs_.end());
  for (const auto& s : segs_) m = std::max({m, s.start, s.end});
  return m;
}

std::vector<double> MembershipFunction::sample(std::size_t n) const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (*this)(static_cast<double>(i) / static_cast<double>(n - 1));
  return out;
}

std::vector<double> MembershipFunction::sample_cells(std::size_t n) const {
  std::vector<double> out = sample(n);
  const double scale = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < xs_.size(); ++k) {
    // only values the point samples could miss: the function must jump at x_k.
    // On a continuous ramp the breakpoint value is no more special than its neighbours.
    const bool jump_left = k > 0 && std::abs(segs_[k - 1].end - vs_[k]) > kSnap;
    const bool jump_right = k + 1 < xs_.size() && std::abs(segs_[k].start - vs_[k]) > kSnap;
    if (!jump_left && !jump_right) continue;
    double t = xs_[k] * scale - 0.5;
    const double r = std::round(t);
    if (std::abs(t - r) < 1e-9) t = r;
    const auto idx = static_cast<long>(std::ceil(t));
    const auto i = static_cast<std::size_t>(std::clamp<long>(idx, 0, static_cast<long>(n) - 1));
    out[i] = std::max(out[i], vs_[k]);
  }
  return out;
}

MembershipFunction MembershipFunction::to_grid(std::size_t n) const { return grid(sample_cells(n)); }

MembershipFunction MembershipFunction::canonical() const {
  std::vector<double> xs{xs_.front()};
  std::vector<double> vs{vs_.front()};
  std::vector<Segment> segs;
  Segment cur = segs_.front();
  double cur_x0 = xs_.front();
  for (std::size_t k = 1; k < xs_.size(); ++k) {
    const bool last = k + 1 == xs_.size();
    if (!last) {
      const Segment& nxt = segs_[k];
      const double v = vs_[k];
      const bool continuous = std::abs(cur.end - v) <= kSnap && std::abs(nxt.start - v) <= kSnap;
      const double s1 = (cur.end - cur.start) / (xs_[k] - cur_x0);
      const double s2 = (nxt.end - nxt.start) / (xs_[k + 1] - xs_[k]);
      if (continuous && std::abs(s1 - s2) <= 1e-9) {
        cur.end = nxt.end;
        continue;
      }
    }
    segs.push_back(cur);
    xs.push_back(xs_[k]);
    vs.push_back(vs_[k]);
    if (!last) {
      cur = segs_[k];
      cur_x0 = xs_[k];
    }
  }
  MembershipFunction f = from_segments(std::move(xs), std::move(vs), std::move(segs));
  if (f.xs_.size() == xs_.size()) f.grid_n_ = grid_n_;
  return f;
}

std::vector<double> critical_points(const std::vector<const MembershipFunction*>& fs) {
  std::vector<double> pts;
  for (const auto* f : fs) pts.insert(pts.end(), f->xs().begin(), f->xs().end());
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double p : pts) {
    if (out.empty() || p - out.back() > kSnap) out.push_back(p);
  }
  return out;
}

namespace {

// max over critical points of fn(f-side, g-side) for point values and one-sided limits.
template <typename Fn>
double scan_pairs(const MembershipFunction& f, const MembershipFunction& g, Fn fn) {
  double worst = -1e300;
  for (double c : critical_points({&f, &g})) {
    worst = std::max(worst, fn(f(c), g(c)));
    if (c > 0.0) worst = std::max(worst, fn(f.limit_left(c), g.limit_left(c)));
    if (c < 1.0) worst = std::max(worst, fn(f.limit_right(c), g.limit_right(c)));
  }
  return worst;
}

}  // namespace

double sup_distance(const MembershipFunction& f, const MembershipFunction& g) {
  return scan_pairs(f, g, [](double a, double b) { return std::abs(a - b); });
}

bool pointwise_leq(const MembershipFunction& f, const MembershipFunction& g, double tol) {
  return scan_pairs(f, g, [](double a, double b) { return a - b; }) <= tol;
}

MembershipFunction left_envelope(const MembershipFunction& f) {
  if (f.is_grid()) {
    std::vector<double> v = f.vs();
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = std::max(v[i], v[i - 1]);
    return MembershipFunction::grid(std::move(v));
  }
  const auto& xs = f.xs();
  const auto& vs = f.vs();
  const auto& segs = f.segments();
  std::vector<double> ox{0.0}, ov{vs[0]};
  std::vector<Segment> os;
  double m = vs[0];
  for (std::size_t j = 0; j < segs.size(); ++j) {
    const double xa = xs[j], xb = xs[j + 1];
    const double s = segs[j].start, e = segs[j].end;
    const double m0 = std::max(m, s);
    if (e <= m0) {
      os.push_back({m0, m0});
    } else if (s >= m) {
      os.push_back({s, e});
    } else {
      const double xc = xa + (m - s) / (e - s) * (xb - xa);
      if (xc - xa <= kSnap) {
        os.push_back({m, e});
      } else if (xb - xc <= kSnap) {
        os.push_back({m, m});
      } else {
        os.push_back({m, m});
        ox.push_back(xc);
        ov.push_back(m);
        os.push_back({m, e});
      }
    }
    m = std::max({m0, e, vs[j + 1]});
    ox.push_back(xb);
    ov.push_back(m);
  }
  return MembershipFunction::from_segments(std::move(ox), std::move(ov), std::move(os));
}

MembershipFunction right_envelope(const MembershipFunction& f) {
  return snap_breakpoints(negate(left_envelope(negate(f))), {&f});
}

MembershipFunction snap_breakpoints(const MembershipFunction& f,
                                    const std::vector<const MembershipFunction*>& refs, double tol) {
  if (f.is_grid()) return f;
  std::vector<double> ref;
  for (const MembershipFunction* r : refs) ref.insert(ref.end(), r->xs().begin(), r->xs().end());
  std::sort(ref.begin(), ref.end());
  std::vector<double> xs = f.xs();
  bool moved = false;
  for (double& x : xs) {
    const auto it = std::lower_bound(ref.begin(), ref.end(), x - tol);
    if (it != ref.end() && std::abs(*it - x) <= tol && *it != x) {
      x = *it;
      moved = true;
    }
  }
  if (!moved) return f;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) return f;  // snapping would merge breakpoints; keep the drift
  }
  return MembershipFunction::from_segments(std::move(xs), f.vs(), f.segments());
}

MembershipFunction negate(const MembershipFunction& f) {
  if (f.is_grid()) {
    std::vector<double> v(f.vs().rbegin(), f.vs().rend());
    return MembershipFunction::grid(std::move(v));
  }
  const std::size_t n = f.xs().size();
  std::vector<double> xs(n), vs(n);
  std::vector<Segment> segs(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = 1.0 - f.xs()[n - 1 - i];
    vs[i] = f.vs()[n - 1 - i];
  }
  xs.front() = 0.0;
  xs.back() = 1.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const Segment& s = f.segments()[n - 2 - j];
    segs[j] = {s.end, s.start};
  }
  return MembershipFunction::from_segments(std::move(xs), std::move(vs), std::move(segs));
}

bool is_convex(const MembershipFunction& f, double tol) {
  const MembershipFunction l = left_envelope(f);
  const MembershipFunction r = right_envelope(f);
  // f <= min(f^L, f^R) always; between critical points f is linear and the min is
  // concave, so checking the ends of every piece suffices.
  for (double c : critical_points({&f, &l, &r})) {
    if (f(c) < std::min(l(c), r(c)) - tol) return false;
    if (c > 0.0 && f.limit_left(c) < std::min(l.limit_left(c), r.limit_left(c)) - tol) return false;
    if (c < 1.0 && f.limit_right(c) < std::min(l.limit_right(c), r.limit_right(c)) - tol) return false;
  }
  return true;
}

bool is_normal(const MembershipFunction& f, double tol) { return f.sup() >= 1.0 - tol; }

bool is_upper_semicontinuous(const MembershipFunction& f, double tol) {
  const auto& xs = f.xs();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0 && f.vs()[k] < f.segments()[k - 1].end - tol) return false;
    if (k + 1 < xs.size() && f.vs()[k] < f.segments()[k].start - tol) return false;
  }
  return true;
}

namespace {

// inf and sup of { x : f(x) >= alpha } (strict: > alpha), closure of the set.
Cut level_set(const MembershipFunction& f, double alpha, bool strict) {
  auto ok = [&](double v) { return strict ? v > alpha + kSnap : v >= alpha - kSnap; };
  Cut c;
  auto add = [&c](double lo, double hi) {
    if (c.empty) {
      c = {lo, hi, false};
    } else {
      c.lo = std::min(c.lo, lo);
      c.hi = std::max(c.hi, hi);
    }
  };
  const auto& xs = f.xs();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (ok(f.vs()[k])) add(xs[k], xs[k]);
  }
  for (std::size_t j = 0; j < f.segments().size(); ++j) {
    const Segment& s = f.segments()[j];
    const double xa = xs[j], xb = xs[j + 1];
    const bool sa = ok(s.start), sb = ok(s.end);
    if (sa && sb) {
      add(xa, xb);
    } else if (sa || sb) {
      const double xc = std::clamp(xa + (alpha - s.start) / (s.end - s.start) * (xb - xa), xa, xb);
      if (sa) add(xa, xc);
      else add(xc, xb);
    }
  }
  return c;
}

}  // namespace

Cut alpha_cut(const MembershipFunction& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in [0,1]");
  if (!is_convex(f)) throw ShapeError("alpha_cut requires a convex function");
  if (alpha <= 0.0) return {0.0, 1.0, false};
  return level_set(f, alpha, false);
}

Cut strong_alpha_cut(const MembershipFunction& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in [0,1]");
  if (!is_convex(f)) throw ShapeError("strong_alpha_cut requires a convex function");
  return level_set(f, alpha, true);
}

struct NormalConvexFunction::LevelTable {
  std::once_flag once;
  std::vector<double> lo;
  std::vector<double> hi;
};

NormalConvexFunction::NormalConvexFunction(MembershipFunction f, MembershipFunction left, MembershipFunction right,
                                           std::size_t levels)
    : base_(std::move(f)),
      left_(std::move(left)),
      right_(std::move(right)),
      levels_(levels),
      table_(std::make_shared<LevelTable>()) {
  if (levels < 2) throw InputError("need at least 2 levels");
}

const NormalConvexFunction::LevelTable& NormalConvexFunction::table() const {
  std::call_once(table_->once, [this] {
    table_->lo.resize(levels_);
    table_->hi.resize(levels_);
    for (std::size_t k = 0; k < levels_; ++k) {
      table_->lo[k] = lo_at(level(k));
      table_->hi[k] = hi_at(level(k));
    }
  });
  return *table_;
}

const std::vector<double>& NormalConvexFunction::cut_lo() const { return table().lo; }
const std::vector<double>& NormalConvexFunction::cut_hi() const { return table().hi; }

namespace {

bool reaches(double v, double alpha, bool strict) { return strict ? v > alpha + kSnap : v >= alpha - kSnap; }

}  // namespace

double NormalConvexFunction::lo_at(double alpha, bool strict) const {
  if (!strict && alpha <= 0.0) return 0.0;
  // the left envelope is nondecreasing: find the first breakpoint whose value or right limit qualifies
  const auto& xs = left_.xs();
  const auto& vs = left_.vs();
  const auto& segs = left_.segments();
  auto top = [&](std::size_t k) { return k + 1 < xs.size() ? std::max(vs[k], segs[k].start) : vs[k]; };
  std::size_t lo = 0, hi = xs.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (reaches(top(mid), alpha, strict)) hi = mid;
    else lo = mid + 1;
  }
  if (lo == xs.size()) return 1.0;
  if (lo == 0) return xs[0];
  const Segment& sg = segs[lo - 1];
  if (reaches(sg.end, alpha, strict) && sg.end > sg.start) {
    const double t = std::clamp((alpha - sg.start) / (sg.end - sg.start), 0.0, 1.0);
    return xs[lo - 1] + t * (xs[lo] - xs[lo - 1]);
  }
  return xs[lo];
}

double NormalConvexFunction::hi_at(double alpha, bool strict) const {
  if (!strict && alpha <= 0.0) return 1.0;
  // mirror image: the right envelope is nonincreasing, search from the right end
  const auto& xs = right_.xs();
  const auto& vs = right_.vs();
  const auto& segs = right_.segments();
  auto top = [&](std::size_t k) { return k > 0 ? std::max(vs[k], segs[k - 1].end) : vs[k]; };
  std::size_t lo = 0, hi = xs.size();  // first index past the last qualifying one
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (reaches(top(mid), alpha, strict)) lo = mid + 1;
    else hi = mid;
  }
  if (lo == 0) return 0.0;
  const std::size_t k = lo - 1;
  if (k + 1 == xs.size()) return xs[k];
  const Segment& sg = segs[k];
  if (reaches(sg.start, alpha, strict) && sg.start > sg.end) {
    const double t = std::clamp((sg.start - alpha) / (sg.start - sg.end), 0.0, 1.0);
    return xs[k] + t * (xs[k + 1] - xs[k]);
  }
  return xs[k];
}

NormalConvexFunction NormalConvexFunction::from(MembershipFunction f, std::size_t levels, double tol) {
  if (!is_convex(f, tol)) throw ShapeError("function is not convex");
  if (!is_normal(f, tol)) throw ShapeError("function is not normal");
  return trusted(std::move(f), levels);
}

NormalConvexFunction NormalConvexFunction::trusted(MembershipFunction f, std::size_t levels) {
  MembershipFunction l = left_envelope(f);
  MembershipFunction r = right_envelope(f);
  return NormalConvexFunction(std::move(f), std::move(l), std::move(r), levels);
}

bool increasing_prefix_contains(const NormalConvexFunction& f, double x) {
  return f.right_env()(x) >= 1.0 - kExactTol;
}

MembershipFunction characteristic_function(double lo, double hi) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw InputError("characteristic needs 0 <= lo <= hi <= 1");
  }
  // coordinates closer than kSnap to an end or to each other would collapse under reflection
  auto snap_end = [](double v) { return v < kSnap ? 0.0 : (v > 1.0 - kSnap ? 1.0 : v); };
  lo = snap_end(lo);
  hi = snap_end(hi);
  if (hi - lo < kSnap) hi = lo;
  std::vector<double> xs{0.0, lo, hi, 1.0};
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> vs;
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vs.push_back(xs[i] >= lo && xs[i] <= hi ? 1.0 : 0.0);
    if (i + 1 < xs.size()) {
      const double v = (lo < hi && xs[i] >= lo && xs[i + 1] <= hi) ? 1.0 : 0.0;
      segs.push_back({v, v});
    }
  }
  return MembershipFunction::from_segments(std::move(xs), std::move(vs), std::move(segs));
}

NormalConvexFunction characteristic(double lo, double hi) {
  return NormalConvexFunction::trusted(characteristic_function(lo, hi));
}

NormalConvexFunction negate(const NormalConvexFunction& f) {
  // reflection swaps the envelopes, no need to recompute them
  return NormalConvexFunction(negate(f.base()), negate(f.right_env()), negate(f.left_env()), f.levels());
}

double reconstruct(const NormalConvexFunction& f, double x) {
  double best = 0.0;
  for (std::size_t k = 0; k < f.levels(); ++k) {
    if (f.cut_lo()[k] <= x + kSnap && x <= f.cut_hi()[k] + kSnap) best = f.level(k);
  }
  return best;
}

}  // namespace convlat

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


#ifndef CONVLAT_MEMBERSHIP_HPP
#define CONVLAT_MEMBERSHIP_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "convlat/scalar_ops.hpp"

namespace convlat {

inline constexpr std::size_t kDefaultSamples = 1025;
inline constexpr std::size_t kDefaultLevels = 257;
inline constexpr double kExactTol = 1e-9;

enum class SegmentKind { linear, constant_left, constant_right };

/// Behavior on the open interval between two breakpoints: linear from `start`
/// (limit at the left end) to `end` (limit at the right end). Breakpoint values are
/// stored separately, so jumps on either side are representable.
struct Segment {
  double start;
  double end;
};

struct SupResult {
  double value = 0.0;
  bool attained = false;
};

/// Element of Map([0,1],[0,1]), exact piecewise-linear with jumps.
/// A grid function is the piecewise-linear interpolant of its samples and remembers
/// that it came from a grid.
class MembershipFunction {
 public:
  MembershipFunction();  // constant 0

  /// Breakpoints (x_i, v_i), strictly increasing x with x_0 = 0 and x_last = 1.
  /// kinds.size() must equal points.size() - 1.
  static MembershipFunction piecewise(const std::vector<std::pair<double, double>>& points,
                                      const std::vector<SegmentKind>& kinds);
  /// Fully explicit form; segments.size() == xs.size() - 1.
  static MembershipFunction from_segments(std::vector<double> xs, std::vector<double> vs,
                                          std::vector<Segment> segments);
  /// Continuous linear interpolation through the points.
  static MembershipFunction linear(const std::vector<std::pair<double, double>>& points);
  static MembershipFunction grid(std::vector<double> values);
  static MembershipFunction constant(double c);
  /// Continuous triangle with feet a, c and apex b (a <= b <= c); clipped to [0,1].
  static MembershipFunction triangle(double a, double b, double c);
  /// Trapezoid with support [a, d] and core [b, c].
  static MembershipFunction trapezoid(double a, double b, double c, double d);

  double operator()(double x) const;
  /// lim_{t -> x-}, x > 0.
  double limit_left(double x) const;
  /// lim_{t -> x+}, x < 1.
  double limit_right(double x) const;
  /// Direction of the approach as seen from the left/right of x (see Approach).
  Approach approach_left(double x) const;
  Approach approach_right(double x) const;

  /// Sup over the interval between a and b (a <= b), each end open or closed.
  SupResult sup_over(double a, double b, bool a_closed, bool b_closed) const;
  /// Sup over [0,1], limits included.
  double sup() const;

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& vs() const { return vs_; }
  const std::vector<Segment>& segments() const { return segs_; }
  bool is_grid() const { return grid_n_ != 0; }
  std::size_t grid_n() const { return grid_n_; }

  /// Point values at i/(n-1).
  std::vector<double> sample(std::size_t n) const;
  /// Grid-cell sampling: max of the value at i/(n-1) and of the values at jump breakpoints
  /// inside the cell (x_i - h/2, x_i + h/2], so isolated spikes and narrow plateaus survive.
  std::vector<double> sample_cells(std::size_t n) const;
  MembershipFunction to_grid(std::size_t n) const;

  /// Drops breakpoints that carry no information.
  MembershipFunction canonical() const;

 private:
  std::size_t segment_of(double x) const;  // index j with xs[j] < x < xs[j+1]
  int breakpoint_at(double x) const;       // index or -1

  std::vector<double> xs_;
  std::vector<double> vs_;
  std::vector<Segment> segs_;
  std::size_t grid_n_ = 0;
};

struct Cut {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
};

/// Union of breakpoints of all arguments.
std::vector<double> critical_points(const std::vector<const MembershipFunction*>& fs);

/// Exact sup_x |f(x) - g(x)|, one-sided limits included.
double sup_distance(const MembershipFunction& f, const MembershipFunction& g);
/// Exact test f <= g + tol everywhere.
bool pointwise_leq(const MembershipFunction& f, const MembershipFunction& g, double tol = kExactTol);

MembershipFunction left_envelope(const MembershipFunction& f);
MembershipFunction right_envelope(const MembershipFunction& f);
MembershipFunction negate(const MembershipFunction& f);

/// Moves breakpoints of f that lie within tol of a breakpoint of some reference onto it.
/// Undoes the last-bit drift of x -> 1 - (1 - x) after a double reflection.
MembershipFunction snap_breakpoints(const MembershipFunction& f,
                                    const std::vector<const MembershipFunction*>& refs, double tol = 1e-14);

bool is_convex(const MembershipFunction& f, double tol = kExactTol);
bool is_normal(const MembershipFunction& f, double tol = kExactTol);
bool is_upper_semicontinuous(const MembershipFunction& f, double tol = kExactTol);

/// Throws ShapeError when f is not convex.
Cut alpha_cut(const MembershipFunction& f, double alpha);
Cut strong_alpha_cut(const MembershipFunction& f, double alpha);

/// Element of L with cached envelopes and cut endpoints at K uniform levels.
class NormalConvexFunction {
 public:
  /// Throws ShapeError when f is not convex or not normal.
  static NormalConvexFunction from(MembershipFunction f, std::size_t levels = kDefaultLevels,
                                   double tol = kExactTol);
  /// Skips the shape validation; for results known to lie in L.
  static NormalConvexFunction trusted(MembershipFunction f, std::size_t levels = kDefaultLevels);

  double operator()(double x) const { return base_(x); }
  const MembershipFunction& base() const { return base_; }
  const MembershipFunction& left_env() const { return left_; }
  const MembershipFunction& right_env() const { return right_; }
  std::size_t levels() const { return levels_; }
  double level(std::size_t k) const { return static_cast<double>(k) / static_cast<double>(levels_ - 1); }
  /// inf { x : f^L(x) >= level(k) } and sup { x : f^R(x) >= level(k) }; tabulated on first use.
  const std::vector<double>& cut_lo() const;
  const std::vector<double>& cut_hi() const;

  /// Exact endpoints of the alpha-cut (strict: strong cut) at any level, from the envelopes.
  /// An empty cut reports lo = 1 and hi = 0.
  double lo_at(double alpha, bool strict = false) const;
  double hi_at(double alpha, bool strict = false) const;

 private:
  NormalConvexFunction(MembershipFunction f, MembershipFunction left, MembershipFunction right,
                       std::size_t levels);
  friend NormalConvexFunction negate(const NormalConvexFunction& f);

  struct LevelTable;
  const LevelTable& table() const;

  MembershipFunction base_;
  MembershipFunction left_;
  MembershipFunction right_;
  std::size_t levels_;
  std::shared_ptr<LevelTable> table_;
};

/// x in f+ iff f^R(x) = 1.
bool increasing_prefix_contains(const NormalConvexFunction& f, double x);

/// Indicator of [lo, hi]; throws InputError unless 0 <= lo <= hi <= 1.
NormalConvexFunction characteristic(double lo, double hi);
MembershipFunction characteristic_function(double lo, double hi);

NormalConvexFunction negate(const NormalConvexFunction& f);

/// sup { level : lo <= x <= hi } over the sampled cuts.
double reconstruct(const NormalConvexFunction& f, double x);

}  // namespace convlat

#endif  // CONVLAT_MEMBERSHIP_HPP

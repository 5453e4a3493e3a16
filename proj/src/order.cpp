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


#include "convlat/order.hpp"

#include <algorithm>
#include <vector>

#include "convlat/convolution.hpp"
#include "convlat/errors.hpp"

namespace convlat {

namespace {

// First critical point where lhs > rhs + tol, counting one-sided limits.
std::optional<double> first_violation(const MembershipFunction& lhs, const MembershipFunction& rhs,
                                      double tol) {
  for (double c : critical_points({&lhs, &rhs})) {
    if (lhs(c) > rhs(c) + tol) return c;
    if (c > 0.0 && lhs.limit_left(c) > rhs.limit_left(c) + tol) return c;
    if (c < 1.0 && lhs.limit_right(c) > rhs.limit_right(c) + tol) return c;
  }
  return std::nullopt;
}

double first_at_least(const MembershipFunction& up, double alpha) {
  // up is nondecreasing.
  const auto& xs = up.xs();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (up.vs()[k] >= alpha - 1e-12) return xs[k];
    if (k + 1 < xs.size()) {
      const Segment& s = up.segments()[k];
      if (s.start >= alpha - 1e-12) return xs[k];
      if (s.end >= alpha - 1e-12) {
        return std::clamp(xs[k] + (alpha - s.start) / (s.end - s.start) * (xs[k + 1] - xs[k]), xs[k],
                          xs[k + 1]);
      }
    }
  }
  return 1.0;
}

double last_at_least(const MembershipFunction& down, double alpha) {
  return 1.0 - first_at_least(negate(down), alpha);
}

void add_values(const MembershipFunction& f, std::vector<double>& out) {
  out.insert(out.end(), f.vs().begin(), f.vs().end());
  for (const auto& s : f.segments()) {
    out.push_back(s.start);
    out.push_back(s.end);
  }
}

}  // namespace

bool interval_leq(const Cut& a, const Cut& b) {
  if (a.empty || b.empty) throw InputError("interval_leq needs non-empty intervals");
  return a.lo <= b.lo && a.hi <= b.hi;
}

Cut alpha_cut(const NormalConvexFunction& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in [0,1]");
  if (alpha <= 0.0) return {0.0, 1.0, false};
  return {first_at_least(f.left_env(), alpha), last_at_least(f.right_env(), alpha), false};
}

OrderVerdict leq_envelopes(const NormalConvexFunction& f, const NormalConvexFunction& g, double tol) {
  OrderVerdict v;
  v.method = OrderMethod::envelopes;
  if (auto w = first_violation(g.left_env(), f.left_env(), tol)) {
    v.holds = false;
    v.witness = w;
  } else if (auto w2 = first_violation(f.right_env(), g.right_env(), tol)) {
    v.holds = false;
    v.witness = w2;
  }
  return v;
}

OrderVerdict leq_cuts(const NormalConvexFunction& f, const NormalConvexFunction& g, double tol) {
  OrderVerdict v;
  v.method = OrderMethod::cuts;
  std::vector<double> levels;
  for (std::size_t k = 1; k < f.levels(); ++k) levels.push_back(f.level(k));
  add_values(f.left_env(), levels);
  add_values(f.right_env(), levels);
  add_values(g.left_env(), levels);
  add_values(g.right_env(), levels);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<double> all;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    all.push_back(levels[i]);
    if (i + 1 < levels.size()) all.push_back(0.5 * (levels[i] + levels[i + 1]));
  }
  const MembershipFunction nfr = negate(f.right_env());
  const MembershipFunction ngr = negate(g.right_env());
  for (double a : all) {
    if (a <= 0.0 || a >= 1.0) continue;
    const Cut cf{first_at_least(f.left_env(), a), 1.0 - first_at_least(nfr, a), false};
    const Cut cg{first_at_least(g.left_env(), a), 1.0 - first_at_least(ngr, a), false};
    if (cf.lo > cg.lo + tol || cf.hi > cg.hi + tol) {
      v.holds = false;
      v.witness = a;
      return v;
    }
  }
  return v;
}

NormalConvexFunction meet(const NormalConvexFunction& f, const NormalConvexFunction& g) {
  return meet_convolve(ScalarOp::minimum(), f, g);
}

NormalConvexFunction join(const NormalConvexFunction& f, const NormalConvexFunction& g) {
  return join_convolve(ScalarOp::minimum(), f, g);
}

}  // namespace convlat

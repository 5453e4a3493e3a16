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


#include <gtest/gtest.h>

#include <random>

#include "convlat/errors.hpp"
#include "convlat/pointwise.hpp"
#include "convlat/verify.hpp"
#include "oracles.hpp"
#include "random_functions.hpp"

using namespace convlat;

namespace {

oracle::Fn fn(const MembershipFunction& f) {
  return [f](double x) { return f(x); };
}

}  // namespace

TEST(ConvolveAt, MatchesFiberSupOnModerateInputs) {
  std::mt19937_64 rng(41);
  const std::pair<ScalarOp, oracle::Op> tris[] = {{ScalarOp::minimum(), oracle::t_min},
                                                  {ScalarOp::product(), oracle::t_prod},
                                                  {ScalarOp::lukasiewicz(), oracle::t_luk}};
  for (const auto& [tri, ref] : tris)
    for (int t = 0; t < 4; ++t) {
      const auto f = testgen::random_moderate_pl(rng);
      const auto g = testgen::random_moderate_pl(rng);
      for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        const double m = convolve_at(ScalarOp::minimum(), tri, f, g, x);
        const double mb = oracle::min_star_sup(ref, fn(f), fn(g), x);
        // brute force only sees attained values, so it bounds the sup from below
        EXPECT_GE(m, mb - 1e-12) << x;
        EXPECT_NEAR(m, mb, 3e-3) << x;
        if (x == 0.0) continue;
        const double p = convolve_at(ScalarOp::product(), tri, f, g, x);
        const double pb = oracle::product_star_sup(ref, fn(f), fn(g), x, 20001);
        EXPECT_GE(p, pb - 1e-12) << x;
        EXPECT_NEAR(p, pb, 3e-3) << x;
      }
    }
}

TEST(ConvolveAt, DualStarsGoThroughNegation) {
  const auto f = MembershipFunction::triangle(0.1, 0.3, 0.6);
  const auto g = MembershipFunction::triangle(0.2, 0.7, 0.9);
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    const double lhs = convolve_at(ScalarOp::probabilistic_sum(), ScalarOp::product(), f, g, x);
    const double rhs = convolve_at(ScalarOp::product(), ScalarOp::product(), negate(f), negate(g), 1.0 - x);
    EXPECT_NEAR(lhs, rhs, 1e-12) << x;
  }
  EXPECT_THROW(convolve_at(ScalarOp::drastic(), ScalarOp::minimum(), f, g, 0.5), UnsupportedOperator);
}

TEST(ConvolveAt, UnattainedSupsUseLimits) {
  // g(x) = x on [0,1) drops to 0 at 1: sup over [x,1] is 1 but never attained
  const auto one = MembershipFunction::constant(1.0);
  const auto g = MembershipFunction::from_segments({0.0, 1.0}, {0.0, 0.0}, {{0.0, 1.0}});
  EXPECT_DOUBLE_EQ(convolve_at(ScalarOp::minimum(), ScalarOp::minimum(), one, g, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(convolve_at(ScalarOp::minimum(), ScalarOp::minimum(), one, g, 1.0), 0.0);
}

// Closed forms for the border witness under (minimum, drastic): with f = 1,
// (f*g)(x) = sup g on [x,1] = 1 below 1, and (g*h) is 0 away from 0 because
// neither g nor h reaches 1 there. So the left bracket is a and the right one is 0.
TEST(Witness, BorderValuesMatchClosedForm) {
  for (double a : {0.1, 0.3, 0.6, 0.9}) {
    const auto w = border_witness(a);
    const ScalarOp m = ScalarOp::minimum(), d = ScalarOp::drastic();
    for (double x : {0.0, 0.25, 0.5, 0.75}) EXPECT_DOUBLE_EQ(convolve_at(m, d, w.f, w.g, x), 1.0);
    EXPECT_DOUBLE_EQ(convolve_at(m, d, w.f, w.g, 1.0), 0.0);
    for (double x : {0.25, 0.5, 1.0}) EXPECT_DOUBLE_EQ(convolve_at(m, d, w.g, w.h, x), 0.0);
    const auto v = associations_at(m, d, w.f, w.g, w.h, w.x0);
    EXPECT_DOUBLE_EQ(v.left_assoc, a);
    EXPECT_DOUBLE_EQ(v.right_assoc, 0.0);
    EXPECT_DOUBLE_EQ(v.gap(), a);
  }
}

TEST(Witness, BorderIsHarmlessForBorderContinuousTri) {
  const auto w = border_witness(0.3);
  for (const auto& t : {ScalarOp::minimum(), ScalarOp::product(), ScalarOp::os_drastic()}) {
    EXPECT_NEAR(associations_at(ScalarOp::minimum(), t, w.f, w.g, w.h, w.x0).gap(), 0.0, 1e-9) << to_string(t);
  }
}

TEST(Witness, LeftSeparatesOnlyNonLeftContinuousTri) {
  const ScalarOp star = ScalarOp::product();
  const auto w = left_witness(star, 0.9, 0.3, 0.5);
  EXPECT_DOUBLE_EQ(w.x0, 0.9 * 0.9 * 0.9);
  const auto bad = associations_at(star, ScalarOp::os_drastic(), w.f, w.g, w.h, w.x0);
  EXPECT_NEAR(bad.gap(), 0.3, 1e-9);
  for (const auto& t : {ScalarOp::minimum(), ScalarOp::product(), ScalarOp::nilpotent_minimum()}) {
    EXPECT_NEAR(associations_at(star, t, w.f, w.g, w.h, w.x0).gap(), 0.0, 1e-6) << to_string(t);
  }
}

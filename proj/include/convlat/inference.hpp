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


#ifndef CONVLAT_INFERENCE_HPP
#define CONVLAT_INFERENCE_HPP

#include <cstddef>
#include <vector>

#include "convlat/membership.hpp"
#include "convlat/scalar_ops.hpp"

namespace convlat {

struct Universe {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t n = 101;

  double point(std::size_t i) const {
    return n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  bool operator==(const Universe& o) const { return lo == o.lo && hi == o.hi && n == o.n; }
};

/// One element of L per universe point.
struct T2FuzzySet {
  Universe domain;
  std::vector<NormalConvexFunction> grades;
};

struct Rule {
  T2FuzzySet antecedent;
  T2FuzzySet consequent;
};

/// Single-input single-output rules over a convolution t-norm on L.
class RuleBase {
 public:
  /// Throws ClassificationError when (star, tri) does not give a t-norm on L and
  /// InputError when a rule does not live on the declared universes.
  RuleBase(Universe input, Universe output, std::vector<Rule> rules, ScalarOp star, ScalarOp tri);

  const Universe& input() const { return input_; }
  const Universe& output() const { return output_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const ScalarOp& star() const { return star_; }
  const ScalarOp& tri() const { return tri_; }

  /// star = minimum uses the closed-form meet, anything else the cut scan.
  NormalConvexFunction convolve(const NormalConvexFunction& f, const NormalConvexFunction& g) const;

 private:
  Universe input_;
  Universe output_;
  std::vector<Rule> rules_;
  ScalarOp star_;
  ScalarOp tri_;
};

/// B'(y) = join over x of (A'(x) * A(x) * B(y)), joined again across rules.
T2FuzzySet infer(const RuleBase& rb, const T2FuzzySet& input);

/// Grade at x is the triangle (mu - width, mu, mu + width), clipped to [0,1], with
/// mu = exp(-(x - crisp)^2 / (2 spread^2)). width = 0 gives the singleton of mu.
T2FuzzySet fuzzify(const Universe& universe, double crisp, double spread, double width = 0.1);

/// Centroid of a grade; for zero-area grades the middle of the top cut.
double grade_centroid(const NormalConvexFunction& grade);

/// Universe centroid weighted by grade centroids; DegenerateOutput when all weights vanish.
double defuzzify(const T2FuzzySet& set);

}  // namespace convlat

#endif  // CONVLAT_INFERENCE_HPP

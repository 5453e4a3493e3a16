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


#ifndef CONVLAT_ORDER_HPP
#define CONVLAT_ORDER_HPP

#include <optional>

#include "convlat/membership.hpp"

namespace convlat {

enum class OrderMethod { envelopes, cuts };

struct OrderVerdict {
  bool holds = true;
  OrderMethod method = OrderMethod::envelopes;
  /// x (envelopes) or alpha (cuts) where the comparison failed.
  std::optional<double> witness;
};

/// A <= B for closed intervals: lo and hi both ordered. Throws InputError on empty cuts.
bool interval_leq(const Cut& a, const Cut& b);

/// Closed cut [inf f^L >= alpha, sup f^R >= alpha] of an element of L; alpha in (0,1].
Cut alpha_cut(const NormalConvexFunction& f, double alpha);

/// f below g: g^L <= f^L and f^R <= g^R, checked exactly at critical points.
OrderVerdict leq_envelopes(const NormalConvexFunction& f, const NormalConvexFunction& g,
                           double tol = kExactTol);

/// f below g: every alpha-cut of f is interval-below the matching cut of g. Levels are
/// the uniform level grid plus every breakpoint value of the envelopes and midpoints
/// between consecutive ones, which makes the scan exact for piecewise-linear inputs.
OrderVerdict leq_cuts(const NormalConvexFunction& f, const NormalConvexFunction& g,
                      double tol = kExactTol);

NormalConvexFunction meet(const NormalConvexFunction& f, const NormalConvexFunction& g);
NormalConvexFunction join(const NormalConvexFunction& f, const NormalConvexFunction& g);

}  // namespace convlat

#endif  // CONVLAT_ORDER_HPP

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


#ifndef CONVLAT_POINTWISE_HPP
#define CONVLAT_POINTWISE_HPP

#include <memory>
#include <vector>

#include "convlat/membership.hpp"
#include "convlat/scalar_ops.hpp"

namespace convlat {

/// A function on [0,1] that can be queried pointwise, with one-sided limits and
/// interval sups. Used to evaluate nested convolutions at single points without
/// discretizing the inputs.
class Probe {
 public:
  virtual ~Probe() = default;
  virtual double value(double x) const = 0;
  virtual Approach left(double x) const = 0;
  virtual Approach right(double x) const = 0;
  virtual SupResult sup_over(double a, double b, bool a_closed, bool b_closed) const = 0;
  /// Points where the function may jump or bend; sorted.
  virtual const std::vector<double>& critical_points() const = 0;
};

using ProbePtr = std::shared_ptr<const Probe>;

ProbePtr make_probe(const MembershipFunction& f);

/// Pointwise view of x -> sup { tri(f(y), g(z)) : star(y, z) = x }.
/// star must be minimum, product or lukasiewicz, or the dual of one of them.
/// One-sided limits of the result are estimated from values at x -/+ 1e-9 with a
/// linear extrapolation; sups are taken over critical points plus `samples` dense points.
ProbePtr make_convolution_probe(const ScalarOp& star, const ScalarOp& tri, ProbePtr f, ProbePtr g,
                                int samples = 513);

double convolve_at(const ScalarOp& star, const ScalarOp& tri, const MembershipFunction& f,
                   const MembershipFunction& g, double x);

struct AssociationValues {
  double left_assoc = 0.0;   // ((f * g) * h)(x)
  double right_assoc = 0.0;  // (f * (g * h))(x)
  double gap() const;
};

AssociationValues associations_at(const ScalarOp& star, const ScalarOp& tri,
                                  const MembershipFunction& f, const MembershipFunction& g,
                                  const MembershipFunction& h, double x, int samples = 513);

}  // namespace convlat

#endif  // CONVLAT_POINTWISE_HPP

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


#ifndef CONVLAT_CONVOLUTION_HPP
#define CONVLAT_CONVOLUTION_HPP

#include <cstddef>
#include <string>

#include "convlat/membership.hpp"
#include "convlat/scalar_ops.hpp"

namespace convlat {

/// Brute force: result(x_k) = max tri(f(y_i), g(z_j)) over grid pairs whose star
/// value rounds to x_k (ties to the lower index); never-hit points are 0.
/// Inputs are sampled with MembershipFunction::sample_cells. Requires n >= 65.
MembershipFunction convolve_grid(const ScalarOp& star, const ScalarOp& tri, const MembershipFunction& f,
                                 const MembershipFunction& g, std::size_t n = kDefaultSamples);

/// Strong-cut construction. The cut at level k+1 of the result is the strong cut at the
/// midpoint gamma between levels k and k+1, i.e. the hull of star(f^a, g^b) over
/// tri(a, b) > gamma. Its endpoints come from the input envelopes at arbitrary levels
/// (a scan plus local refinement over a), so jumps of the result land where they belong
/// rather than on the level grid. The function is the step function rebuilt from those
/// nested intervals. Both inputs must use the same number of levels.
/// Throws UnsupportedOperator when star is not monotone.
NormalConvexFunction convolve_cuts(const ScalarOp& star, const ScalarOp& tri,
                                   const NormalConvexFunction& f, const NormalConvexFunction& g);

/// Closed form for star = minimum: max(f,g) on f+ and g+, f on g+ \ f+, g on f+ \ g+,
/// tri(f,g) elsewhere. Throws ClassificationError unless tri is a border-continuous t-norm.
NormalConvexFunction meet_convolve(const ScalarOp& tri, const NormalConvexFunction& f,
                                   const NormalConvexFunction& g);

/// star = maximum, through negation of the meet form.
NormalConvexFunction join_convolve(const ScalarOp& tri, const NormalConvexFunction& f,
                                   const NormalConvexFunction& g);

struct ClassificationReport {
  bool is_tnorm_on_L = false;
  bool is_tr_norm_on_L = false;
  bool is_tconorm_on_L = false;
  ContinuityReport star_class;
  ContinuityReport tri_class;
  std::string reason;
};

/// Verdict from operator metadata only; the embedded continuity reports are sampled
/// at `report_resolution` for diagnostics.
ClassificationReport classify(const ScalarOp& star, const ScalarOp& tri, int report_resolution = 65);

}  // namespace convlat

#endif  // CONVLAT_CONVOLUTION_HPP

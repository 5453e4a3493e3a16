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


#ifndef CONVLAT_VERIFY_HPP
#define CONVLAT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "convlat/membership.hpp"
#include "convlat/scalar_ops.hpp"

namespace convlat {

/// Three functions and the point where their two associations are compared.
struct WitnessTriple {
  std::string name;
  MembershipFunction f;
  MembershipFunction g;
  MembershipFunction h;
  double x0 = 0.5;
};

struct AxiomWitness {
  std::string f;
  std::string g;
  std::string h;
  double x = 0.0;
};

struct AxiomReport {
  bool commutative = true;
  bool unit_ok = true;
  bool monotone_ok = true;
  bool associative_ok = true;
  bool closed_on_L = true;
  bool closed_on_J = true;
  bool closed_on_J2 = true;
  double max_assoc_gap = 0.0;
  /// Grid gap with jump positions matched up to SuiteOptions::shift cells.
  double grid_assoc_gap = 0.0;
  /// Plain sup-norm grid gap, for reference.
  double plain_grid_assoc_gap = 0.0;
  /// Exact pointwise gaps at the worst plain-gap locations.
  double spot_assoc_gap = 0.0;
  double witness_assoc_gap = 0.0;
  std::optional<AxiomWitness> witness;

  bool all() const {
    return commutative && unit_ok && monotone_ok && associative_ok && closed_on_L && closed_on_J &&
           closed_on_J2;
  }
};

struct SuiteOptions {
  std::size_t n = 257;
  /// Grid comparisons accept a value if the other side reaches it within this many
  /// cells; a jump can land one cell apart in the two associations.
  std::size_t shift = 1;
  /// Number of worst grid triples re-evaluated exactly (skipped for stars the
  /// pointwise evaluator does not support).
  std::size_t spot_checks = 4;
  /// Evaluated exactly at x0 through the pointwise evaluator.
  std::vector<WitnessTriple> witnesses;
  int witness_samples = 513;
};

/// Grid checks on all pairs/triples of the sample plus exact association gaps of the
/// witness triples. Throws InputError naming the first sample member outside L.
AxiomReport run_axiom_suite(const ScalarOp& star, const ScalarOp& tri,
                            const std::vector<NormalConvexFunction>& sample, double tolerance,
                            const SuiteOptions& options = {});

/// f = 1, g(x) = x on [0,1) with g(1) = 0, h(0) = 1 and h = a on (0,1]; x0 = 0.5.
WitnessTriple border_witness(double a);

/// Ramp-and-spike triple built around lambda for a continuous t-norm star whose
/// Archimedean block (alpha, beta) contains lambda, lambda*lambda and lambda*lambda*lambda.
/// x0 = lambda*lambda*lambda.
WitnessTriple left_witness(const ScalarOp& star, double lambda, double u, double v, double alpha = 0.0,
                           double beta = 1.0);

/// Random piecewise-linear elements of L: trapezoids whose ramps may carry one extra
/// knot, with support inside [0,1] and slopes bounded by about 8.
NormalConvexFunction random_normal_convex(std::mt19937_64& rng);
std::vector<NormalConvexFunction> random_sample(std::size_t count, std::uint64_t seed);

}  // namespace convlat

#endif  // CONVLAT_VERIFY_HPP

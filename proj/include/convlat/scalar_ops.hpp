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


#ifndef CONVLAT_SCALAR_OPS_HPP
#define CONVLAT_SCALAR_OPS_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace convlat {

enum class OpKind {
  minimum,
  maximum,
  product,
  probabilistic_sum,
  lukasiewicz,
  lukasiewicz_conorm,
  drastic,
  nilpotent_minimum,
  ordinal_sum,
  tabulated,
  // N-conjugate of an op that has no named partner.
  dual,
};

class ScalarOp;

struct Summand {
  double lo;
  double hi;
  std::shared_ptr<const ScalarOp> inner;
};

/// Square table of op values on the uniform grid i/(n-1).
struct OpTable {
  std::size_t n = 0;
  std::vector<double> values;  // row-major, values[i*n + j] = op(x_i, y_j)
  bool commutative = false;
  std::string source;  // file name used in the text record, may be empty
};

/// Analytic or sampled metadata used by the classification.
struct OpTraits {
  bool tnorm = false;
  bool tconorm = false;
  bool continuous = false;
  bool left_continuous = false;
  bool border_continuous = false;
};

/// Binary operation on [0,1]. Cheap to copy; the payload is shared and immutable.
class ScalarOp {
 public:
  static ScalarOp minimum();
  static ScalarOp maximum();
  static ScalarOp product();
  static ScalarOp probabilistic_sum();
  static ScalarOp lukasiewicz();
  static ScalarOp lukasiewicz_conorm();
  static ScalarOp drastic();
  static ScalarOp nilpotent_minimum();
  /// ordinal_sum([(0, 0.5, drastic)]): border continuous but not left continuous.
  static ScalarOp os_drastic();
  static ScalarOp tabulated(OpTable table);

  OpKind kind() const { return kind_; }
  const std::vector<Summand>& summands() const { return summands_; }
  const OpTable* table() const { return table_.get(); }
  /// Operand of a dual wrapper, null otherwise.
  const ScalarOp* inner() const { return inner_.get(); }

  double operator()(double x, double y) const;

 private:
  friend ScalarOp ordinal_sum(std::vector<Summand> summands);
  friend ScalarOp dual(const ScalarOp& op);
  friend const OpTraits& traits(const ScalarOp& op);

  explicit ScalarOp(OpKind kind);

  struct Cache;

  OpKind kind_;
  std::vector<Summand> summands_;
  std::shared_ptr<const OpTable> table_;
  std::shared_ptr<const ScalarOp> inner_;
  std::shared_ptr<Cache> cache_;
};

/// A one-sided approach to a point: dir < 0 from below, 0 exactly at value, > 0 from above.
struct Approach {
  double value;
  int dir = 0;
};

double eval(const ScalarOp& op, double x, double y);

/// Limit of op(s, t) as s and t approach a and b in the given directions.
/// Where the limit is path dependent the smaller candidate is returned.
double eval_limit(const ScalarOp& op, Approach a, Approach b);

/// a op b^- = sup { a op t : t < b }, zero when b = 0.
double left_limit(const ScalarOp& op, double a, double b);

/// Same quantity estimated by a geometric sweep t = b - d, d halving down to `gap`.
double left_limit_sampled(const ScalarOp& op, double a, double b, double gap = 1e-6);

struct ContinuityReport {
  bool is_tnorm_sampled = false;
  bool is_tconorm_sampled = false;
  bool continuous = false;
  bool left_continuous = false;
  bool border_continuous = false;
  std::optional<std::pair<double, double>> witness;
};

/// Samples the unit square at `resolution` points per axis. Named families have their
/// flags fixed analytically; the sampled checks then only contribute witnesses.
ContinuityReport classify_continuity(const ScalarOp& op, int resolution = 129);

/// Metadata for classification. Analytic for named families and ordinal sums;
/// sampled once and cached for tabulated ops and dual wrappers.
const OpTraits& traits(const ScalarOp& op);

/// N-conjugate x, y -> 1 - op(1-x, 1-y).
ScalarOp dual(const ScalarOp& op);

/// Throws ConstructionError on overlapping or degenerate intervals.
ScalarOp ordinal_sum(std::vector<Summand> summands);

/// True when op evaluates as min (resp. max) everywhere; recognizes trivial ordinal sums.
bool is_minimum(const ScalarOp& op);
bool is_maximum(const ScalarOp& op);

/// Text record, e.g. "product", "ordinal-sum[(0,0.5,drastic)]", "dual(drastic)",
/// "tabulated(path.csv)". Throws InputError when malformed.
ScalarOp parse_op(const std::string& text);
std::string to_string(const ScalarOp& op);

/// Row-major square CSV, at least 2x2.
ScalarOp load_tabulated_csv(const std::string& path, bool commutative = false);

}  // namespace convlat

#endif  // CONVLAT_SCALAR_OPS_HPP

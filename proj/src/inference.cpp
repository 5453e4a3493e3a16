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


#include "convlat/inference.hpp"

#include <algorithm>
#include <thread>
#include <cmath>
#include <optional>

#include "convlat/convolution.hpp"
#include "convlat/errors.hpp"
#include "convlat/order.hpp"

namespace convlat {

namespace {

void check_set(const T2FuzzySet& s, const Universe& u, const char* what) {
  if (!(s.domain == u) || s.grades.size() != u.n) {
    throw InputError(std::string(what) + " does not match its declared universe");
  }
}

}  // namespace

RuleBase::RuleBase(Universe input, Universe output, std::vector<Rule> rules, ScalarOp star, ScalarOp tri)
    : input_(input), output_(output), rules_(std::move(rules)), star_(std::move(star)), tri_(std::move(tri)) {
  for (const Universe* u : {&input_, &output_}) {
    if (u->n < 2 || !(u->lo < u->hi)) throw InputError("universe needs lo < hi and at least 2 points");
  }
  const ClassificationReport c = classify(star_, tri_);
  if (!c.is_tnorm_on_L) throw ClassificationError("rule base operators rejected: " + c.reason);
  for (const Rule& r : rules_) {
    check_set(r.antecedent, input_, "rule antecedent");
    check_set(r.consequent, output_, "rule consequent");
  }
}

NormalConvexFunction RuleBase::convolve(const NormalConvexFunction& f, const NormalConvexFunction& g) const {
  if (is_minimum(star_)) return meet_convolve(tri_, f, g);
  return convolve_cuts(star_, tri_, f, g);
}

T2FuzzySet infer(const RuleBase& rb, const T2FuzzySet& input) {
  check_set(input, rb.input(), "input set");
  // match[r][i] = A'(x_i) * A_r(x_i), shared by every output point
  std::vector<std::vector<NormalConvexFunction>> match(rb.rules().size());
  for (std::size_t r = 0; r < rb.rules().size(); ++r) {
    match[r].reserve(rb.input().n);
    for (std::size_t i = 0; i < rb.input().n; ++i) {
      match[r].push_back(rb.convolve(input.grades[i], rb.rules()[r].antecedent.grades[i]));
    }
  }

  const std::size_t n_out = rb.output().n;
  std::vector<std::optional<NormalConvexFunction>> acc(n_out);
  auto work = [&](std::size_t j0, std::size_t j1) {
    for (std::size_t j = j0; j < j1; ++j) {
      for (std::size_t r = 0; r < rb.rules().size(); ++r) {
        for (const auto& m : match[r]) {
          NormalConvexFunction v = rb.convolve(m, rb.rules()[r].consequent.grades[j]);
          acc[j] = acc[j] ? join(*acc[j], v) : std::move(v);
        }
      }
    }
  };
  // output points are independent; split them over a few threads
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  const std::size_t chunk = (n_out + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (std::size_t j0 = chunk; j0 < n_out; j0 += chunk) pool.emplace_back(work, j0, std::min(n_out, j0 + chunk));
  work(0, std::min(n_out, chunk));
  for (auto& t : pool) t.join();

  T2FuzzySet out{rb.output(), {}};
  out.grades.reserve(n_out);
  for (auto& a : acc) out.grades.push_back(a ? std::move(*a) : characteristic(0.0, 0.0));
  return out;
}

T2FuzzySet fuzzify(const Universe& universe, double crisp, double spread, double width) {
  if (!(spread > 0.0)) throw InputError("fuzzify needs spread > 0");
  if (!(width >= 0.0)) throw InputError("fuzzify needs width >= 0");
  if (!(crisp >= universe.lo && crisp <= universe.hi)) throw InputError("crisp value outside the universe");
  T2FuzzySet s{universe, {}};
  s.grades.reserve(universe.n);
  for (std::size_t i = 0; i < universe.n; ++i) {
    const double d = (universe.point(i) - crisp) / spread;
    const double mu = std::clamp(std::exp(-0.5 * d * d), 0.0, 1.0);
    if (width == 0.0) {
      s.grades.push_back(characteristic(mu, mu));
    } else {
      s.grades.push_back(NormalConvexFunction::trusted(
          MembershipFunction::triangle(std::max(0.0, mu - width), mu, std::min(1.0, mu + width))));
    }
  }
  return s;
}

double grade_centroid(const NormalConvexFunction& grade) {
  const MembershipFunction& f = grade.base();
  double area = 0.0, moment = 0.0;
  for (std::size_t j = 0; j < f.segments().size(); ++j) {
    const double a = f.xs()[j], b = f.xs()[j + 1];
    const double s = f.segments()[j].start, e = f.segments()[j].end;
    const double w = b - a;
    area += 0.5 * w * (s + e);
    // integral of x * (s + (e - s)(x - a)/w) over [a, b]
    moment += w * (s * (2.0 * a + b) + e * (a + 2.0 * b)) / 6.0;
  }
  if (area <= 1e-15) return 0.5 * (grade.lo_at(1.0) + grade.hi_at(1.0));
  return moment / area;
}

double defuzzify(const T2FuzzySet& set) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < set.grades.size(); ++i) {
    const double w = grade_centroid(set.grades[i]);
    num += w * set.domain.point(i);
    den += w;
  }
  if (den <= 0.0) throw DegenerateOutput("all grade centroids are zero; nothing to defuzzify");
  return num / den;
}

}  // namespace convlat

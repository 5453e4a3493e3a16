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


#include "convlat/scalar_ops.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "convlat/errors.hpp"

namespace convlat {

namespace {

constexpr double kSlack = 1e-12;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double check_unit(double v, const char* what) {
  if (!(v >= -kSlack && v <= 1.0 + kSlack)) {
    std::ostringstream os;
    os << what << " = " << v << " outside [0,1]";
    throw InputError(os.str());
  }
  return clamp01(v);
}

bool is_one(double v) { return v >= 1.0 - kSlack; }

}  // namespace

struct ScalarOp::Cache {
  std::once_flag once;
  OpTraits traits;
};

ScalarOp::ScalarOp(OpKind kind) : kind_(kind), cache_(std::make_shared<Cache>()) {}

ScalarOp ScalarOp::minimum() { return ScalarOp(OpKind::minimum); }
ScalarOp ScalarOp::maximum() { return ScalarOp(OpKind::maximum); }
ScalarOp ScalarOp::product() { return ScalarOp(OpKind::product); }
ScalarOp ScalarOp::probabilistic_sum() { return ScalarOp(OpKind::probabilistic_sum); }
ScalarOp ScalarOp::lukasiewicz() { return ScalarOp(OpKind::lukasiewicz); }
ScalarOp ScalarOp::lukasiewicz_conorm() { return ScalarOp(OpKind::lukasiewicz_conorm); }
ScalarOp ScalarOp::drastic() { return ScalarOp(OpKind::drastic); }
ScalarOp ScalarOp::nilpotent_minimum() { return ScalarOp(OpKind::nilpotent_minimum); }

ScalarOp ScalarOp::os_drastic() {
  return ordinal_sum({Summand{0.0, 0.5, std::make_shared<const ScalarOp>(drastic())}});
}

ScalarOp ScalarOp::tabulated(OpTable table) {
  if (table.n < 2 || table.values.size() != table.n * table.n) {
    throw ConstructionError("tabulated op needs an n x n table with n >= 2");
  }
  for (double& v : table.values) {
    if (!(v >= -kSlack && v <= 1.0 + kSlack)) {
      throw ConstructionError("tabulated op value outside [0,1]");
    }
    v = clamp01(v);
  }
  if (table.commutative) {
    for (std::size_t i = 0; i < table.n; ++i) {
      for (std::size_t j = i + 1; j < table.n; ++j) {
        if (std::abs(table.values[i * table.n + j] - table.values[j * table.n + i]) > 1e-12) {
          throw ConstructionError("tabulated op declared commutative but table is not symmetric");
        }
      }
    }
  }
  ScalarOp op(OpKind::tabulated);
  op.table_ = std::make_shared<const OpTable>(std::move(table));
  return op;
}

double ScalarOp::operator()(double x, double y) const {
  switch (kind_) {
    case OpKind::minimum:
      return std::min(x, y);
    case OpKind::maximum:
      return std::max(x, y);
    case OpKind::product:
      return x * y;
    case OpKind::probabilistic_sum:
      return clamp01(x + y - x * y);
    case OpKind::lukasiewicz:
      return std::max(x + y - 1.0, 0.0);
    case OpKind::lukasiewicz_conorm:
      return std::min(x + y, 1.0);
    case OpKind::drastic:
      if (is_one(x)) return y;
      if (is_one(y)) return x;
      return 0.0;
    case OpKind::nilpotent_minimum:
      return x + y > 1.0 ? std::min(x, y) : 0.0;
    case OpKind::ordinal_sum:
      for (const auto& s : summands_) {
        if (x >= s.lo && x <= s.hi && y >= s.lo && y <= s.hi) {
          const double w = s.hi - s.lo;
          return clamp01(s.lo + w * (*s.inner)(clamp01((x - s.lo) / w), clamp01((y - s.lo) / w)));
        }
      }
      return std::min(x, y);
    case OpKind::tabulated: {
      const auto n = table_->n;
      const auto i = static_cast<std::size_t>(std::lround(x * static_cast<double>(n - 1)));
      const auto j = static_cast<std::size_t>(std::lround(y * static_cast<double>(n - 1)));
      return table_->values[i * n + j];
    }
    case OpKind::dual:
      return clamp01(1.0 - (*inner_)(1.0 - x, 1.0 - y));
  }
  return 0.0;
}

double eval(const ScalarOp& op, double x, double y) {
  return op(check_unit(x, "x"), check_unit(y, "y"));
}

double eval_limit(const ScalarOp& op, Approach a, Approach b) {
  a.value = clamp01(a.value);
  b.value = clamp01(b.value);
  switch (op.kind()) {
    case OpKind::minimum:
    case OpKind::maximum:
    case OpKind::product:
    case OpKind::probabilistic_sum:
    case OpKind::lukasiewicz:
    case OpKind::lukasiewicz_conorm:
      return op(a.value, b.value);
    case OpKind::drastic:
      if (is_one(a.value) && a.dir == 0) return b.value;
      if (is_one(b.value) && b.dir == 0) return a.value;
      return 0.0;
    case OpKind::nilpotent_minimum: {
      const double sum = a.value + b.value;
      if (std::abs(sum - 1.0) > kSlack) return sum > 1.0 ? std::min(a.value, b.value) : 0.0;
      // On the line x + y = 1 the side is decided by the directions.
      if (a.dir >= 0 && b.dir >= 0 && (a.dir > 0 || b.dir > 0)) return std::min(a.value, b.value);
      return 0.0;
    }
    case OpKind::ordinal_sum: {
      auto inside = [](const Approach& p, const Summand& s) {
        if (p.value > s.lo && p.value < s.hi) return true;
        if (std::abs(p.value - s.lo) <= kSlack) return p.dir >= 0;
        if (std::abs(p.value - s.hi) <= kSlack) return p.dir <= 0;
        return false;
      };
      for (const auto& s : op.summands()) {
        if (inside(a, s) && inside(b, s)) {
          const double w = s.hi - s.lo;
          const Approach ra{clamp01((a.value - s.lo) / w), a.dir};
          const Approach rb{clamp01((b.value - s.lo) / w), b.dir};
          return clamp01(s.lo + w * eval_limit(*s.inner, ra, rb));
        }
      }
      return std::min(a.value, b.value);
    }
    case OpKind::tabulated: {
      constexpr double nudge = 1e-9;
      return op(clamp01(a.value + a.dir * nudge), clamp01(b.value + b.dir * nudge));
    }
    case OpKind::dual:
      return clamp01(1.0 - eval_limit(*op.inner(), {1.0 - a.value, -a.dir},
                                      {1.0 - b.value, -b.dir}));
  }
  return 0.0;
}

double left_limit(const ScalarOp& op, double a, double b) {
  a = check_unit(a, "a");
  b = check_unit(b, "b");
  if (b <= 0.0) return 0.0;
  return eval_limit(op, {a, 0}, {b, -1});
}

double left_limit_sampled(const ScalarOp& op, double a, double b, double gap) {
  a = check_unit(a, "a");
  b = check_unit(b, "b");
  if (b <= 0.0) return 0.0;
  double best = 0.0;
  for (double d = b / 2.0;; d /= 2.0) {
    const double dd = std::max(d, gap);
    best = std::max(best, op(a, b - dd));
    if (dd <= gap) break;
  }
  return best;
}

namespace {

OpTraits named_traits(OpKind kind) {
  OpTraits t;
  switch (kind) {
    case OpKind::minimum:
    case OpKind::product:
    case OpKind::lukasiewicz:
      t = {true, false, true, true, true};
      break;
    case OpKind::maximum:
    case OpKind::probabilistic_sum:
    case OpKind::lukasiewicz_conorm:
      t = {false, true, true, true, true};
      break;
    case OpKind::drastic:
      t = {true, false, false, false, false};
      break;
    case OpKind::nilpotent_minimum:
      t = {true, false, false, true, true};
      break;
    default:
      break;
  }
  return t;
}

OpTraits from_report(const ContinuityReport& r) {
  return {r.is_tnorm_sampled, r.is_tconorm_sampled, r.continuous, r.left_continuous,
          r.border_continuous};
}

struct SampledFlags {
  bool commutative = true;
  bool monotone = true;
  bool associative = true;
  bool unit_one = true;
  bool unit_zero = true;
  std::optional<std::pair<double, double>> witness;
};

SampledFlags sample_axioms(const ScalarOp& op, int res) {
  SampledFlags f;
  std::vector<double> xs(res);
  for (int i = 0; i < res; ++i) xs[i] = static_cast<double>(i) / (res - 1);
  std::vector<double> tab(static_cast<std::size_t>(res) * res);
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) tab[i * res + j] = op(xs[i], xs[j]);
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const double v = tab[i * res + j];
      if (std::abs(v - tab[j * res + i]) > 1e-12) f.commutative = false;
      if (i + 1 < res && tab[(i + 1) * res + j] < v - 1e-12) f.monotone = false;
      if (j + 1 < res && tab[i * res + j + 1] < v - 1e-12) f.monotone = false;
    }
    if (std::abs(tab[i * res + res - 1] - xs[i]) > 1e-12) f.unit_one = false;
    if (std::abs(tab[i * res] - xs[i]) > 1e-12) f.unit_zero = false;
  }
  for (int i = 0; i < res && f.associative; ++i) {
    for (int j = 0; j < res && f.associative; ++j) {
      const double xy = tab[i * res + j];
      for (int k = 0; k < res; ++k) {
        const double lhs = op(xy, xs[k]);
        const double rhs = op(xs[i], tab[j * res + k]);
        if (std::abs(lhs - rhs) > 1e-9) {
          f.associative = false;
          f.witness = std::make_pair(xs[i], xs[j]);
          break;
        }
      }
    }
  }
  return f;
}

// Continuity checks for a sampled t-norm-like op (left limits matter).
void sample_continuity(const ScalarOp& op, int res, ContinuityReport& r) {
  constexpr double tol = 1e-5;
  r.border_continuous = true;
  r.left_continuous = true;
  r.continuous = true;
  std::optional<std::pair<double, double>> border_w, left_w, cont_w;
  for (int i = 0; i < res; ++i) {
    const double a = static_cast<double>(i) / (res - 1);
    if (std::abs(left_limit_sampled(op, a, 1.0) - op(a, 1.0)) > tol) {
      r.border_continuous = false;
      if (!border_w) border_w = std::make_pair(a, 1.0);
    }
    for (int j = 1; j < res; ++j) {
      const double b = static_cast<double>(j) / (res - 1);
      const double v = op(a, b);
      if (std::abs(left_limit_sampled(op, a, b) - v) > tol ||
          std::abs(left_limit_sampled(op, b, a) - op(b, a)) > tol) {
        r.left_continuous = false;
        if (!left_w) left_w = std::make_pair(a, b);
      }
    }
    for (int j = 0; j + 1 < res; ++j) {
      const double b = static_cast<double>(j) / (res - 1);
      if (std::abs(op(a, b + 1e-7) - op(a, b)) > tol || std::abs(op(b + 1e-7, a) - op(b, a)) > tol) {
        r.continuous = false;
        if (!cont_w) cont_w = std::make_pair(a, b);
      }
    }
  }
  r.continuous = r.continuous && r.left_continuous;
  if (border_w) r.witness = border_w;
  else if (left_w) r.witness = left_w;
  else if (cont_w && !r.continuous) r.witness = cont_w;
}

bool is_named(OpKind k) { return k != OpKind::tabulated && k != OpKind::dual; }

}  // namespace

ContinuityReport classify_continuity(const ScalarOp& op, int resolution) {
  if (resolution < 17) throw InputError("classify_continuity resolution must be >= 17");
  ContinuityReport r;
  const SampledFlags ax = sample_axioms(op, resolution);
  const bool base = ax.commutative && ax.monotone && ax.associative;
  r.is_tnorm_sampled = base && ax.unit_one;
  r.is_tconorm_sampled = base && ax.unit_zero;

  // Conorms are judged through their dual t-norm.
  ContinuityReport cont;
  if (r.is_tconorm_sampled && !r.is_tnorm_sampled) {
    sample_continuity(dual(op), resolution, cont);
    if (cont.witness) cont.witness = std::make_pair(1.0 - cont.witness->first, 1.0 - cont.witness->second);
  } else {
    sample_continuity(op, resolution, cont);
  }
  r.continuous = cont.continuous;
  r.left_continuous = cont.left_continuous;
  r.border_continuous = cont.border_continuous;
  r.witness = cont.witness;
  if (!base && !r.witness) r.witness = ax.witness;

  if (op.kind() == OpKind::ordinal_sum || is_named(op.kind())) {
    const OpTraits& t = traits(op);
    r.continuous = t.continuous;
    r.left_continuous = t.left_continuous;
    r.border_continuous = t.border_continuous;
  }
  r.left_continuous = r.left_continuous && r.border_continuous;
  r.continuous = r.continuous && r.left_continuous;
  return r;
}

const OpTraits& traits(const ScalarOp& op) {
  std::call_once(op.cache_->once, [&op] {
    OpTraits t;
    switch (op.kind()) {
      case OpKind::ordinal_sum: {
        t = {true, false, true, true, true};
        for (const auto& s : op.summands()) {
          const OpTraits& it = traits(*s.inner);
          t.tnorm = t.tnorm && it.tnorm;
          t.continuous = t.continuous && it.continuous;
          t.left_continuous = t.left_continuous && it.left_continuous;
          if (s.hi >= 1.0) t.border_continuous = it.border_continuous;
        }
        t.left_continuous = t.left_continuous && t.border_continuous;
        t.continuous = t.continuous && t.left_continuous;
        break;
      }
      case OpKind::dual: {
        t = traits(*op.inner());
        std::swap(t.tnorm, t.tconorm);
        break;
      }
      case OpKind::tabulated:
        t = from_report(classify_continuity(op, static_cast<int>(std::max<std::size_t>(op.table()->n, 17))));
        break;
      default:
        t = named_traits(op.kind());
    }
    op.cache_->traits = t;
  });
  return op.cache_->traits;
}

ScalarOp dual(const ScalarOp& op) {
  switch (op.kind()) {
    case OpKind::minimum: return ScalarOp::maximum();
    case OpKind::maximum: return ScalarOp::minimum();
    case OpKind::product: return ScalarOp::probabilistic_sum();
    case OpKind::probabilistic_sum: return ScalarOp::product();
    case OpKind::lukasiewicz: return ScalarOp::lukasiewicz_conorm();
    case OpKind::lukasiewicz_conorm: return ScalarOp::lukasiewicz();
    case OpKind::dual: return *op.inner();
    default: break;
  }
  ScalarOp d(OpKind::dual);
  d.inner_ = std::make_shared<const ScalarOp>(op);
  return d;
}

ScalarOp ordinal_sum(std::vector<Summand> summands) {
  for (const auto& s : summands) {
    if (!s.inner) throw ConstructionError("ordinal sum summand without an inner op");
    if (!(s.lo >= 0.0 && s.hi <= 1.0 && s.lo < s.hi)) {
      throw ConstructionError("ordinal sum summand interval must satisfy 0 <= a < b <= 1");
    }
    if (!traits(*s.inner).tnorm) {
      throw ConstructionError("ordinal sum summand '" + to_string(*s.inner) + "' is not a t-norm");
    }
  }
  std::sort(summands.begin(), summands.end(),
            [](const Summand& a, const Summand& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < summands.size(); ++i) {
    if (summands[i].lo < summands[i - 1].hi) {
      throw ConstructionError("ordinal sum summand intervals overlap");
    }
  }
  if (summands.empty()) return ScalarOp::minimum();
  if (summands.size() == 1 && summands[0].lo == 0.0 && summands[0].hi == 1.0) {
    return *summands[0].inner;
  }
  ScalarOp op(OpKind::ordinal_sum);
  op.summands_ = std::move(summands);
  return op;
}

bool is_minimum(const ScalarOp& op) {
  if (op.kind() == OpKind::minimum) return true;
  if (op.kind() == OpKind::ordinal_sum) {
    return std::all_of(op.summands().begin(), op.summands().end(),
                       [](const Summand& s) { return is_minimum(*s.inner); });
  }
  if (op.kind() == OpKind::dual) return is_maximum(*op.inner());
  return false;
}

bool is_maximum(const ScalarOp& op) {
  if (op.kind() == OpKind::maximum) return true;
  if (op.kind() == OpKind::dual) return is_minimum(*op.inner());
  return false;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string fmt_num(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double parse_num(const std::string& s) {
  const std::string t = trim(s);
  double v = 0.0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw InputError("bad number '" + t + "' in operator descriptor");
  }
  return v;
}

// Splits on commas that are not nested inside brackets or parentheses.
std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw InputError("unbalanced brackets in operator descriptor");
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw InputError("unbalanced brackets in operator descriptor");
  out.push_back(cur);
  return out;
}

bool wrapped(const std::string& t, const std::string& head, char open, char close,
             std::string& body) {
  if (t.size() < head.size() + 2 || t.compare(0, head.size(), head) != 0) return false;
  if (t[head.size()] != open || t.back() != close) return false;
  body = t.substr(head.size() + 1, t.size() - head.size() - 2);
  return true;
}

}  // namespace

ScalarOp parse_op(const std::string& text) {
  const std::string raw = trim(text);
  const std::string t = lower(raw);
  if (t == "minimum" || t == "min") return ScalarOp::minimum();
  if (t == "maximum" || t == "max") return ScalarOp::maximum();
  if (t == "product" || t == "prod") return ScalarOp::product();
  if (t == "probabilistic-sum" || t == "probsum" || t == "prob-sum") {
    return ScalarOp::probabilistic_sum();
  }
  if (t == "lukasiewicz" || t == "luk") return ScalarOp::lukasiewicz();
  if (t == "lukasiewicz-conorm" || t == "luk-conorm" || t == "bounded-sum") {
    return ScalarOp::lukasiewicz_conorm();
  }
  if (t == "drastic") return ScalarOp::drastic();
  if (t == "nilpotent-minimum" || t == "nilmin") return ScalarOp::nilpotent_minimum();
  if (t == "os-drastic") return ScalarOp::os_drastic();
  std::string body;
  if (wrapped(t, "dual", '(', ')', body)) return dual(parse_op(raw.substr(5, raw.size() - 6)));
  if (wrapped(t, "tabulated", '(', ')', body)) {
    return load_tabulated_csv(trim(raw.substr(10, raw.size() - 11)));
  }
  if (wrapped(t, "ordinal-sum", '[', ']', body)) {
    std::vector<Summand> summands;
    const std::string inner_raw = raw.substr(12, raw.size() - 13);
    if (!trim(inner_raw).empty()) {
      for (const auto& item : split_top(inner_raw)) {
        std::string tuple;
        const std::string it = trim(item);
        if (it.size() < 2 || it.front() != '(' || it.back() != ')') {
          throw InputError("ordinal-sum summand must look like (a,b,op): '" + it + "'");
        }
        tuple = it.substr(1, it.size() - 2);
        const auto parts = split_top(tuple);
        if (parts.size() != 3) throw InputError("ordinal-sum summand needs three fields: '" + it + "'");
        summands.push_back({parse_num(parts[0]), parse_num(parts[1]),
                            std::make_shared<const ScalarOp>(parse_op(parts[2]))});
      }
    }
    return ordinal_sum(std::move(summands));
  }
  throw InputError("unknown operator descriptor '" + raw + "'");
}

std::string to_string(const ScalarOp& op) {
  switch (op.kind()) {
    case OpKind::minimum: return "minimum";
    case OpKind::maximum: return "maximum";
    case OpKind::product: return "product";
    case OpKind::probabilistic_sum: return "probabilistic-sum";
    case OpKind::lukasiewicz: return "lukasiewicz";
    case OpKind::lukasiewicz_conorm: return "lukasiewicz-conorm";
    case OpKind::drastic: return "drastic";
    case OpKind::nilpotent_minimum: return "nilpotent-minimum";
    case OpKind::ordinal_sum: {
      std::string s = "ordinal-sum[";
      for (std::size_t i = 0; i < op.summands().size(); ++i) {
        const auto& m = op.summands()[i];
        if (i) s += ",";
        s += "(" + fmt_num(m.lo) + "," + fmt_num(m.hi) + "," + to_string(*m.inner) + ")";
      }
      return s + "]";
    }
    case OpKind::tabulated:
      return "tabulated(" + (op.table()->source.empty() ? std::string("inline") : op.table()->source) + ")";
    case OpKind::dual:
      return "dual(" + to_string(*op.inner()) + ")";
  }
  return "?";
}

ScalarOp load_tabulated_csv(const std::string& path, bool commutative) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tabulated op file '" + path + "'");
  OpTable table;
  table.source = path;
  table.commutative = commutative;
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::size_t cols = 0;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      table.values.push_back(parse_num(cell));
      ++cols;
    }
    if (rows == 0) table.n = cols;
    if (cols != table.n) throw InputError("tabulated op CSV rows have different lengths");
    ++rows;
  }
  if (rows != table.n) throw InputError("tabulated op CSV is not square");
  try {
    return ScalarOp::tabulated(std::move(table));
  } catch (const ConstructionError& e) {
    throw InputError(std::string(e.what()) + " in '" + path + "'");
  }
}

}  // namespace convlat

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


#include "convlat/json_io.hpp"

#include <fstream>

#include "convlat/errors.hpp"

namespace convlat {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Json membership_to_json(const MembershipFunction& f) {
  Json j;
  if (f.is_grid()) {
    j["repr"] = "grid";
    j["n"] = f.grid_n();
    j["values"] = f.vs();
    return j;
  }
  j["repr"] = "piecewise";
  Json pts = Json::array();
  for (std::size_t i = 0; i < f.xs().size(); ++i) pts.push_back({f.xs()[i], f.vs()[i]});
  j["points"] = pts;
  Json segs = Json::array();
  for (std::size_t i = 0; i < f.segments().size(); ++i) {
    const Segment& s = f.segments()[i];
    const double a = f.vs()[i], b = f.vs()[i + 1];
    if (s.start == a && s.end == b) segs.push_back("linear");
    else if (s.start == a && s.end == a) segs.push_back("constant-left");
    else if (s.start == b && s.end == b) segs.push_back("constant-right");
    else segs.push_back(Json{{"kind", "linear"}, {"from", s.start}, {"to", s.end}});
  }
  j["segments"] = segs;
  return j;
}

MembershipFunction membership_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("repr")) throw InputError("membership document needs a \"repr\" field");
    const std::string repr = j.at("repr").get<std::string>();
    if (repr == "grid") {
      const auto values = j.at("values").get<std::vector<double>>();
      if (j.contains("n") && j.at("n").get<std::size_t>() != values.size()) {
        throw InputError("grid \"n\" does not match the number of values");
      }
      return MembershipFunction::grid(values);
    }
    if (repr != "piecewise") throw InputError("unknown membership repr '" + repr + "'");
    std::vector<double> xs, vs;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw InputError("piecewise points must be [x, v] pairs");
      xs.push_back(p[0].get<double>());
      vs.push_back(p[1].get<double>());
    }
    const Json& segs = j.at("segments");
    if (segs.size() + 1 != xs.size()) throw InputError("piecewise needs one segment per gap between points");
    std::vector<Segment> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const Json& s = segs[i];
      if (s.is_string()) {
        const std::string kind = s.get<std::string>();
        if (kind == "linear") out.push_back({vs[i], vs[i + 1]});
        else if (kind == "constant-left") out.push_back({vs[i], vs[i]});
        else if (kind == "constant-right") out.push_back({vs[i + 1], vs[i + 1]});
        else throw InputError("unknown segment kind '" + kind + "'");
      } else if (s.is_object() && s.value("kind", "") == "linear") {
        out.push_back({s.at("from").get<double>(), s.at("to").get<double>()});
      } else {
        throw InputError("segment entries must be a kind name or {\"kind\":\"linear\",\"from\":..,\"to\":..}");
      }
    }
    return MembershipFunction::from_segments(std::move(xs), std::move(vs), std::move(out));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed membership document: ") + e.what());
  }
}

MembershipFunction load_membership(const std::string& path) {
  return membership_from_json(read_json_file(path));
}

NormalConvexFunction grade_from_json(const Json& j) {
  if (j.is_number()) {
    const double x = j.get<double>();
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("singleton grade outside [0,1]");
    return characteristic(x, x);
  }
  return NormalConvexFunction::from(membership_from_json(j));
}

Json universe_to_json(const Universe& u) { return Json{{"lo", u.lo}, {"hi", u.hi}, {"n", u.n}}; }

Universe universe_from_json(const Json& j) {
  try {
    Universe u;
    u.lo = j.value("lo", 0.0);
    u.hi = j.value("hi", 1.0);
    u.n = j.value("n", std::size_t{101});
    if (u.n < 2 || !(u.lo < u.hi)) throw InputError("universe needs lo < hi and n >= 2");
    return u;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed universe: ") + e.what());
  }
}

T2FuzzySet set_from_json(const Json& j, const Universe* fallback) {
  try {
    Universe u;
    if (j.contains("universe")) u = universe_from_json(j.at("universe"));
    else if (fallback) u = *fallback;
    else throw InputError("fuzzy set needs a \"universe\"");
    if (j.contains("gaussian")) {
      const Json& g = j.at("gaussian");
      return fuzzify(u, g.at("center").get<double>(), g.at("spread").get<double>(), g.value("width", 0.1));
    }
    T2FuzzySet s{u, {}};
    for (const auto& g : j.at("grades")) s.grades.push_back(grade_from_json(g));
    if (s.grades.size() != u.n) throw InputError("fuzzy set has a different number of grades than universe points");
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed fuzzy set: ") + e.what());
  }
}

Json set_to_json(const T2FuzzySet& s) {
  Json grades = Json::array();
  for (const auto& g : s.grades) grades.push_back(membership_to_json(g.base()));
  return Json{{"universe", universe_to_json(s.domain)}, {"grades", grades}};
}

RuleBase rulebase_from_json(const Json& j) {
  try {
    const ScalarOp star = parse_op(j.at("star").get<std::string>());
    const ScalarOp tri = parse_op(j.at("tri").get<std::string>());
    const Universe in = j.contains("input_universe") ? universe_from_json(j.at("input_universe")) : Universe{};
    const Universe out = j.contains("output_universe") ? universe_from_json(j.at("output_universe")) : Universe{};
    std::vector<Rule> rules;
    for (const auto& r : j.at("rules")) {
      rules.push_back({set_from_json(r.at("antecedent"), &in), set_from_json(r.at("consequent"), &out)});
    }
    return RuleBase(in, out, std::move(rules), star, tri);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed rule base: ") + e.what());
  }
}

namespace {

Json witness_json(const std::optional<std::pair<double, double>>& w) {
  if (!w) return nullptr;
  return Json::array({w->first, w->second});
}

}  // namespace

Json to_json(const ContinuityReport& r) {
  return Json{{"is_tnorm_sampled", r.is_tnorm_sampled},
              {"is_tconorm_sampled", r.is_tconorm_sampled},
              {"continuous", r.continuous},
              {"left_continuous", r.left_continuous},
              {"border_continuous", r.border_continuous},
              {"witness", witness_json(r.witness)}};
}

Json to_json(const ClassificationReport& r) {
  return Json{{"is_tnorm_on_L", r.is_tnorm_on_L},
              {"is_tr_norm_on_L", r.is_tr_norm_on_L},
              {"is_tconorm_on_L", r.is_tconorm_on_L},
              {"star_class", to_json(r.star_class)},
              {"tri_class", to_json(r.tri_class)},
              {"reason", r.reason}};
}

Json to_json(const AxiomReport& r) {
  Json j{{"commutative", r.commutative},
         {"unit_ok", r.unit_ok},
         {"monotone_ok", r.monotone_ok},
         {"associative_ok", r.associative_ok},
         {"closed_on_L", r.closed_on_L},
         {"closed_on_J", r.closed_on_J},
         {"closed_on_J2", r.closed_on_J2},
         {"max_assoc_gap", r.max_assoc_gap},
         {"grid_assoc_gap", r.grid_assoc_gap},
         {"plain_grid_assoc_gap", r.plain_grid_assoc_gap},
         {"spot_assoc_gap", r.spot_assoc_gap},
         {"witness_assoc_gap", r.witness_assoc_gap}};
  if (r.witness) {
    j["witness"] = Json{{"f", r.witness->f}, {"g", r.witness->g}, {"h", r.witness->h}, {"x", r.witness->x}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const OrderVerdict& v) {
  Json j{{"holds", v.holds}, {"method", v.method == OrderMethod::envelopes ? "envelopes" : "cuts"}};
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  return j;
}

}  // namespace convlat

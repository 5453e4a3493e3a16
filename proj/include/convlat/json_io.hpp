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


#ifndef CONVLAT_JSON_IO_HPP
#define CONVLAT_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "convlat/convolution.hpp"
#include "convlat/inference.hpp"
#include "convlat/membership.hpp"
#include "convlat/order.hpp"
#include "convlat/verify.hpp"

namespace convlat {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Reads a JSON file; InputError when missing or malformed.
Json read_json_file(const std::string& path);

/// {"repr":"piecewise","points":[[x,v],...],"segments":[...]} or
/// {"repr":"grid","n":N,"values":[...]}. Segment entries are "linear",
/// "constant-left", "constant-right" or {"kind":"linear","from":s,"to":e} for
/// segments whose open-end limits differ from the neighbouring point values.
Json membership_to_json(const MembershipFunction& f);
MembershipFunction membership_from_json(const Json& j);
MembershipFunction load_membership(const std::string& path);

/// A grade is either a membership document or a bare number x meaning the singleton x.
NormalConvexFunction grade_from_json(const Json& j);

Json universe_to_json(const Universe& u);
Universe universe_from_json(const Json& j);

/// {"universe":{...},"grades":[...]} or the shorthand
/// {"universe":{...},"gaussian":{"center":c,"spread":s,"width":w}}.
T2FuzzySet set_from_json(const Json& j, const Universe* fallback = nullptr);
Json set_to_json(const T2FuzzySet& s);

/// {"star":..., "tri":..., "input_universe":{...}, "output_universe":{...},
///  "rules":[{"antecedent":<set body>, "consequent":<set body>}]}; set bodies may
/// omit the universe.
RuleBase rulebase_from_json(const Json& j);

Json to_json(const ContinuityReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const OrderVerdict& v);

}  // namespace convlat

#endif  // CONVLAT_JSON_IO_HPP

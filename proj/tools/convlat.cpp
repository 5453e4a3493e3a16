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


// Command-line front end: classify, conv, order, verify, infer, plot.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "convlat/convolution.hpp"
#include "convlat/errors.hpp"
#include "convlat/inference.hpp"
#include "convlat/json_io.hpp"
#include "convlat/order.hpp"
#include "convlat/verify.hpp"

namespace {

using convlat::Json;

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kInput = 3,
  kShape = 4,
  kUnsupported = 5,
  kClassification = 6,
  kDegenerate = 7,
  kConstruction = 8,
};

void emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw convlat::InputError("cannot write '" + out_path + "'");
  out << text;
}

Json envelope() { return Json{{"format_version", convlat::kFormatVersion}}; }

struct Options {
  std::string star, tri, f, g, out, witness, rulebase, input, csv;
  std::string conv_method = "grid", order_method = "envelopes";
  bool conorm = false;
  std::size_t n = 0, sample = 8;
  std::uint64_t seed = 42;
  double tolerance = 0.02, a = 0.3, lambda = 0.9, u = 0.3, v = 0.5, alpha = 0.0, beta = 1.0;
};

int run_classify(const Options& o) {
  const auto star = convlat::parse_op(o.star);
  const auto tri = convlat::parse_op(o.tri);
  const auto report = convlat::classify(star, tri);
  Json j = envelope();
  j["star"] = convlat::to_string(star);
  j["tri"] = convlat::to_string(tri);
  j.update(convlat::to_json(report));
  emit(j, o.out);
  const bool ok = o.conorm ? report.is_tconorm_on_L : report.is_tnorm_on_L;
  return ok ? kOk : kNegative;
}

int run_conv(const Options& o) {
  const auto star = convlat::parse_op(o.star);
  const auto tri = convlat::parse_op(o.tri);
  const auto f = convlat::load_membership(o.f);
  const auto g = convlat::load_membership(o.g);
  convlat::MembershipFunction result;
  std::size_t resolution = 0;
  if (o.conv_method == "grid") {
    resolution = o.n ? o.n : convlat::kDefaultSamples;
    result = convlat::convolve_grid(star, tri, f, g, resolution);
  } else {
    const std::size_t levels = o.n ? o.n : convlat::kDefaultLevels;
    const auto lf = convlat::NormalConvexFunction::from(f, levels);
    const auto lg = convlat::NormalConvexFunction::from(g, levels);
    resolution = levels;
    if (o.conv_method == "cuts") {
      result = convlat::convolve_cuts(star, tri, lf, lg).base();
    } else if (convlat::is_minimum(star)) {
      result = convlat::meet_convolve(tri, lf, lg).base();
    } else if (convlat::is_maximum(star)) {
      result = convlat::join_convolve(tri, lf, lg).base();
    } else {
      throw convlat::UnsupportedOperator("--method fast needs star minimum or maximum");
    }
  }
  Json j = envelope();
  j["provenance"] = Json{{"star", convlat::to_string(star)},
                         {"tri", convlat::to_string(tri)},
                         {"method", o.conv_method},
                         {"resolution", resolution}};
  j["result"] = convlat::membership_to_json(result);
  emit(j, o.out);
  return kOk;
}

int run_order(const Options& o) {
  const auto f = convlat::NormalConvexFunction::from(convlat::load_membership(o.f));
  const auto g = convlat::NormalConvexFunction::from(convlat::load_membership(o.g));
  const auto v = o.order_method == "cuts" ? convlat::leq_cuts(f, g) : convlat::leq_envelopes(f, g);
  Json j = envelope();
  j.update(convlat::to_json(v));
  emit(j, o.out);
  return v.holds ? kOk : kNegative;
}

int run_verify(const Options& o) {
  const auto star = convlat::parse_op(o.star);
  const auto tri = convlat::parse_op(o.tri);
  if (!(o.tolerance > 0.0)) throw convlat::InputError("--tolerance must be positive");
  convlat::SuiteOptions opts;
  opts.n = o.n ? o.n : 257;
  if (o.witness == "border") {
    opts.witnesses.push_back(convlat::border_witness(o.a));
  } else if (o.witness == "left") {
    opts.witnesses.push_back(convlat::left_witness(star, o.lambda, o.u, o.v, o.alpha, o.beta));
  }
  const auto sample = convlat::random_sample(o.sample, o.seed);
  const auto report = convlat::run_axiom_suite(star, tri, sample, o.tolerance, opts);
  Json j = envelope();
  j["star"] = convlat::to_string(star);
  j["tri"] = convlat::to_string(tri);
  j["seed"] = o.seed;
  j["sample"] = o.sample;
  j["tolerance"] = o.tolerance;
  j["report"] = convlat::to_json(report);
  if (!opts.witnesses.empty()) {
    j["witness_construction"] = o.witness;
    j["witness_point"] = opts.witnesses.front().x0;
  }
  emit(j, o.out);
  return report.all() ? kOk : kNegative;
}

int run_infer(const Options& o) {
  const auto rb = convlat::rulebase_from_json(convlat::read_json_file(o.rulebase));
  const auto input = convlat::set_from_json(convlat::read_json_file(o.input), &rb.input());
  const auto output = convlat::infer(rb, input);
  Json j = envelope();
  j["provenance"] = Json{{"star", convlat::to_string(rb.star())}, {"tri", convlat::to_string(rb.tri())}};
  j["output"] = convlat::set_to_json(output);
  j["defuzzified"] = convlat::defuzzify(output);
  emit(j, o.out);
  return kOk;
}

int run_plot(const Options& o) {
  const auto f = convlat::load_membership(o.f);
  const std::size_t n = o.n ? o.n : (f.is_grid() ? f.grid_n() : convlat::kDefaultSamples);
  if (n < 2) throw convlat::InputError("--n must be at least 2");
  std::ofstream file;
  if (!o.csv.empty()) {
    file.open(o.csv);
    if (!file) throw convlat::InputError("cannot write '" + o.csv + "'");
  }
  std::ostream& out = o.csv.empty() ? std::cout : file;
  out << "x,value\n";
  char line[64];
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(n - 1);
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", x, f(x));
    out << line;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convolution t-norms on normal convex membership functions"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Decide whether star/tri gives a t-norm (t-conorm) on L");
  classify->add_option("--star", o.star, "star operator")->required();
  classify->add_option("--tri", o.tri, "triangle operator")->required();
  classify->add_flag("--conorm", o.conorm, "exit status reflects the t-conorm verdict");
  classify->add_option("--out", o.out, "write JSON here instead of stdout");

  auto* conv = app.add_subcommand("conv", "Convolve two membership functions");
  conv->add_option("--star", o.star)->required();
  conv->add_option("--tri", o.tri)->required();
  conv->add_option("--f", o.f)->required()->check(CLI::ExistingFile);
  conv->add_option("--g", o.g)->required()->check(CLI::ExistingFile);
  conv->add_option("--method", o.conv_method)->check(CLI::IsMember({"grid", "cuts", "fast"}));
  conv->add_option("--n", o.n, "grid size (grid) or level count (cuts, fast)")->check(CLI::Range(3, 1 << 16));
  conv->add_option("--out", o.out);

  auto* order = app.add_subcommand("order", "Check f below g in the convolution order");
  order->add_option("--f", o.f)->required()->check(CLI::ExistingFile);
  order->add_option("--g", o.g)->required()->check(CLI::ExistingFile);
  order->add_option("--method", o.order_method)->check(CLI::IsMember({"envelopes", "cuts"}));
  order->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "Run the axiom suite on a seeded random sample");
  verify->add_option("--star", o.star)->required();
  verify->add_option("--tri", o.tri)->required();
  verify->add_option("--sample", o.sample)->check(CLI::Range(1, 64));
  verify->add_option("--witness", o.witness)->check(CLI::IsMember({"border", "left"}));
  verify->add_option("--seed", o.seed);
  verify->add_option("--tolerance", o.tolerance);
  verify->add_option("--n", o.n)->check(CLI::Range(65, 4097));
  verify->add_option("--a", o.a, "border witness level");
  verify->add_option("--lambda", o.lambda);
  verify->add_option("--u", o.u);
  verify->add_option("--v", o.v);
  verify->add_option("--alpha", o.alpha);
  verify->add_option("--beta", o.beta);
  verify->add_option("--out", o.out);

  auto* infer = app.add_subcommand("infer", "Run a rule base on an input set");
  infer->add_option("--rulebase", o.rulebase)->required()->check(CLI::ExistingFile);
  infer->add_option("--input", o.input)->required()->check(CLI::ExistingFile);
  infer->add_option("--out", o.out);

  auto* plot = app.add_subcommand("plot", "Emit (x, f(x)) samples as CSV");
  plot->add_option("--f", o.f)->required()->check(CLI::ExistingFile);
  plot->add_option("--csv", o.csv);
  plot->add_option("--n", o.n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return run_classify(o);
    if (*conv) return run_conv(o);
    if (*order) return run_order(o);
    if (*verify) return run_verify(o);
    if (*infer) return run_infer(o);
    if (*plot) return run_plot(o);
  } catch (const convlat::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const convlat::ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kShape;
  } catch (const convlat::UnsupportedOperator& e) {
    std::cerr << "unsupported operator: " << e.what() << "\n";
    return kUnsupported;
  } catch (const convlat::ClassificationError& e) {
    std::cerr << "classification error: " << e.what() << "\n";
    return kClassification;
  } catch (const convlat::DegenerateOutput& e) {
    std::cerr << "degenerate output: " << e.what() << "\n";
    return kDegenerate;
  } catch (const convlat::ConstructionError& e) {
    std::cerr << "construction error: " << e.what() << "\n";
    return kConstruction;
  }
  return kUsage;
}

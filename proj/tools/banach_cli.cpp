// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

// banach_cli: evaluate lattice norms, run theorem checks, sample product balls.
//
//   banach_cli norm <space.json> <x1,x2,...>
//   banach_cli check <suite|all>
//   banach_cli sample-ball <E.json> <F.json> --count N
//
// Exit codes: 0 ok, 1 a check failed, 2 usage or parse error, 3 invalid
// input (dimension or admissibility), 4 solver not confident.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "banach/banach.hpp"

namespace {

using banach::Vec;
using ojson = nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInput = 3, kNumeric = 4 };

struct Options {
  banach::SolverConfig cfg;
  std::string format = "text";
  std::string out;
  std::string manifest;
  bool timings = false;
};

/// Shortest round-trip text of x after rounding to 12 significant digits.
std::string format_value(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  auto res = std::to_chars(buf, buf + sizeof buf, r);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

ojson cfg_json(const banach::SolverConfig& c) {
  ojson j;
  j["tol"] = c.tol;
  j["grid"] = c.grid;
  j["starts"] = c.starts;
  j["max_iter"] = c.max_iter;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["closed_forms"] = c.closed_forms;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw banach::ParseError("cannot write '" + path + "'");
  f << text;
}

void write_manifest(const Options& o, const std::string& command, const std::vector<std::string>& inputs) {
  ojson m;
  m["version"] = 1;
  m["command"] = command;
  m["inputs"] = inputs;
  m["cfg"] = cfg_json(o.cfg);
  m["outputs"] = o.out.empty() ? "-" : o.out;
  m["format"] = o.format;
  std::string path = o.manifest;
  if (path.empty()) path = o.out.empty() ? "banach_manifest.json" : o.out + ".manifest.json";
  write_text(path, m.dump(2) + "\n");
}

int cmd_norm(const Options& o, const std::string& file, const std::string& vec) {
  const auto sf = banach::load_space_file(file);
  banach::validate_space(sf.space, sf.model, o.cfg);
  const Vec f = banach::parse_vector(vec);
  if (f.size() != sf.model.n())
    throw banach::DimensionError("vector has " + std::to_string(f.size()) + " entries, model has " +
                                 std::to_string(sf.model.n()));
  const auto est = banach::norm_eval(sf.space, f, sf.model, o.cfg);
  std::string text;
  if (o.format == "json") {
    ojson j;
    j["version"] = 1;
    j["space"] = banach::describe(sf.space);
    j["value"] = est.value;
    j["confident"] = est.confident;
    text = j.dump(2) + "\n";
  } else if (o.format == "csv") {
    text = "value,confident\n" + format_value(est.value) + "," + (est.confident ? "true" : "false") + "\n";
  } else {
    text = format_value(est.value) + "\nconfident: " + (est.confident ? "true" : "false") + "\n";
  }
  write_text(o.out, text);
  write_manifest(o, "norm", {file, vec});
  return est.confident ? kOk : kNumeric;
}

int cmd_check(const Options& o, const std::string& suite) {
  std::vector<std::string> ids;
  if (suite == "all") {
    ids = banach::suite_ids();
  } else {
    const auto& known = banach::suite_ids();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      std::cerr << "error: unknown suite '" << suite << "'\n";
      return kUsage;
    }
    ids = {suite};
  }
  std::vector<banach::CheckReport> reports;
  for (const auto& id : ids) {
    auto rs = banach::run_suite(id, o.cfg);
    reports.insert(reports.end(), rs.begin(), rs.end());
  }
  std::string text;
  if (o.format == "json")
    text = banach::to_json(reports, o.timings).dump(2) + "\n";
  else if (o.format == "csv")
    text = banach::to_csv(reports, o.timings);
  else
    text = banach::to_text(reports, o.timings);
  write_text(o.out, text);
  write_manifest(o, "check " + suite, {});
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass;
  std::cerr << passed << "/" << reports.size() << " checks passed\n";
  return passed == reports.size() ? kOk : kFailed;
}

int cmd_sample_ball(const Options& o, const std::string& efile, const std::string& ffile, int count) {
  const auto E = banach::load_space_file(efile);
  const auto F = banach::load_space_file(ffile);
  if (E.model.weights() != F.model.weights()) throw banach::DimensionError("E and F use different models");
  const std::size_t n = E.model.n();
  if (n < 2 || n > 3) throw banach::DimensionError("sample-ball needs a model of dimension 2 or 3");
  if (count < 0) throw banach::ParseError("--count must be nonnegative");
  banach::validate_space(E.space, E.model, o.cfg);
  banach::validate_space(F.space, F.model, o.cfg);

  std::mt19937_64 rng(o.cfg.seed);
  std::normal_distribution<double> nd;
  std::ostringstream os;
  os << (n == 2 ? "x,y" : "x,y,z") << ",rho_gauge,hull_gauge\n";
  bool confident = true;
  for (int k = 0; k < count; ++k) {
    Vec d(n);
    for (double& v : d) v = std::abs(nd(rng)) + 1e-3;
    const auto h = banach::product_norm(E.space, F.space, d, E.model, o.cfg);
    for (double& v : d) v /= h.value;
    const auto r = banach::rho_product(E.space, F.space, d, E.model, o.cfg);
    const auto h1 = banach::product_norm(E.space, F.space, d, E.model, o.cfg);
    confident = confident && h.confident && r.confident && h1.confident;
    for (double v : d) os << format_value(v) << ",";
    os << format_value(r.value) << "," << format_value(h1.value) << "\n";
  }
  write_text(o.out, os.str());
  write_manifest(o, "sample-ball", {efile, ffile});
  return confident ? kOk : kNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norms, products and factors of finite-dimensional Banach lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--tol", o.cfg.tol, "relative tolerance")->capture_default_str();
  app.add_option("--grid", o.cfg.grid, "grid resolution for brute-force searches")->capture_default_str();
  app.add_option("--starts", o.cfg.starts, "multistart count")->capture_default_str();
  app.add_option("--max-iter", o.cfg.max_iter, "optimizer iteration cap")->capture_default_str();
  app.add_option("--seed", o.cfg.seed, "random seed")->capture_default_str();
  app.add_option("--samples", o.cfg.samples, "samples per check")->capture_default_str();
  app.add_flag("!--no-closed-forms", o.cfg.closed_forms, "use numeric routes only");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--manifest", o.manifest, "run manifest path (default <out>.manifest.json)");
  app.add_flag("--timings", o.timings, "include runtimes in check reports");

  std::string file, vec, suite, efile, ffile;
  int count = 100;
  auto* norm = app.add_subcommand("norm", "evaluate a norm");
  norm->add_option("space_file", file)->required();
  norm->add_option("vector", vec, "comma-separated coordinates")->required();
  auto* check = app.add_subcommand("check", "run a theorem suite");
  check->add_option("suite", suite, "suite id or 'all'")->required();
  auto* ball = app.add_subcommand("sample-ball", "sample the unit sphere of the product norm");
  ball->add_option("E_file", efile)->required();
  ball->add_option("F_file", ffile)->required();
  ball->add_option("--count", count)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    o.cfg.validate();
    if (*norm) return cmd_norm(o, file, vec);
    if (*check) return cmd_check(o, suite);
    return cmd_sample_ball(o, efile, ffile, count);
  } catch (const banach::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const banach::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const banach::StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
}

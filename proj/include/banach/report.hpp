// Copyright 2026 The banach-lattice Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "banach/model.hpp"

namespace banach {

struct Witness {
  std::string input;
  double expected = 0.0;
  double got = 0.0;
};

struct CheckReport {
  std::string check_id;
  int instances = 0;
  double max_rel_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::vector<Witness> witnesses;
  double runtime = 0.0;  // seconds; kept out of serialized reports unless asked for

  /// Records one comparison; keeps the worst few offending inputs.
  void record(double deviation, const std::string& input, double expected, double got) {
    ++instances;
    if (!std::isfinite(deviation)) deviation = kInf;
    if (deviation > max_rel_deviation) max_rel_deviation = deviation;
    if (deviation > tolerance && witnesses.size() < 5) witnesses.push_back({input, expected, got});
  }
  void finish() {
    pass = max_rel_deviation <= tolerance;
    if (!pass && witnesses.empty()) witnesses.push_back({"(worst instance)", 0.0, max_rel_deviation});
  }
};

inline double rel_dev(double got, double expected) {
  const double d = std::abs(got - expected);
  if (d == 0.0) return 0.0;
  return d / std::max(std::abs(expected), 1e-300);
}

inline std::string format_point(const Vec& v) {
  std::ostringstream os;
  os << std::setprecision(6) << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

/// Stopwatch that adds elapsed seconds to a report when stopped or destroyed.
class ReportTimer {
 public:
  explicit ReportTimer(CheckReport& r) : r_(&r), t0_(std::chrono::steady_clock::now()) {}
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;
  ~ReportTimer() { stop(); }

  /// Adds the elapsed time to the report; later calls do nothing.
  void stop() {
    if (!r_) return;
    r_->runtime += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    r_ = nullptr;
  }

 private:
  CheckReport* r_;
  std::chrono::steady_clock::time_point t0_;
};

inline nlohmann::ordered_json to_json(const std::vector<CheckReport>& reports, bool timings = false) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json c;
    c["id"] = r.check_id;
    c["instances"] = r.instances;
    c["max_rel_deviation"] = std::isfinite(r.max_rel_deviation) ? nlohmann::ordered_json(r.max_rel_deviation)
                                                                 : nlohmann::ordered_json("inf");
    c["tolerance"] = r.tolerance;
    c["pass"] = r.pass;
    c["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses)
      c["witnesses"].push_back({{"input", w.input}, {"expected", w.expected}, {"got", w.got}});
    if (timings) c["runtime"] = r.runtime;
    j["checks"].push_back(std::move(c));
  }
  return j;
}

inline std::string to_csv(const std::vector<CheckReport>& reports, bool timings = false) {
  std::ostringstream os;
  os << std::setprecision(9);
  os << "id,instances,max_rel_deviation,tolerance,pass,witnesses" << (timings ? ",runtime" : "") << "\n";
  for (const auto& r : reports) {
    os << r.check_id << "," << r.instances << "," << r.max_rel_deviation << "," << r.tolerance << ","
       << (r.pass ? "true" : "false") << "," << r.witnesses.size();
    if (timings) os << "," << r.runtime;
    os << "\n";
  }
  return os.str();
}

inline std::string to_text(const std::vector<CheckReport>& reports, bool timings = false) {
  std::ostringstream os;
  os << std::setprecision(4);
  for (const auto& r : reports) {
    os << (r.pass ? "PASS " : "FAIL ") << r.check_id << ": " << r.instances << " instances, max rel deviation "
       << r.max_rel_deviation << " (tol " << r.tolerance << ")";
    if (timings) os << ", " << r.runtime << " s";
    os << "\n";
    for (const auto& w : r.witnesses)
      os << "    witness " << w.input << ": expected " << w.expected << ", got " << w.got << "\n";
  }
  return os.str();
}

}  // namespace banach

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rsverify/errors.hpp"
#include "rsverify/exactalg/serialize.hpp"

namespace rsv {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"unramified", "gsp4-raising", "eta-lemma", "dims", "prop4",
                                                 "level-a1", "oldform-bases", "oldforms", "dependence", "kernel",
                                                 "fe"};
  return names;
}

struct VerifyConfig {
  std::string suite;
  int n_min = 1, n_max = 3;
  int r = 0;  // 0: all 1 <= r <= n
  int trunc = 8;
  int window = 4;
  int trials = 20;
  std::uint64_t seed = 42;
  std::string mode = "evaluation";  // or "symbolic"
  int max_level = 4;

  void validate() const {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw domain_error("unknown suite: " + suite);
    if (window < 2) throw domain_error("window must be at least 2");
    if (trunc < window) throw domain_error("truncation order must be at least the window");
    if (trials < 1) throw domain_error("trial count must be at least 1");
    if (n_min < 1 || n_max < n_min) throw domain_error("bad n range");
    if (mode != "evaluation" && mode != "symbolic") throw domain_error("mode must be evaluation or symbolic");
    if (max_level < 0) throw domain_error("max level must be non-negative");
  }

  Json to_json() const {
    Json j = Json::object();
    j["suite"] = suite;
    j["n_min"] = n_min;
    j["n_max"] = n_max;
    j["r"] = r;
    j["trunc"] = trunc;
    j["window"] = window;
    j["trials"] = trials;
    j["seed"] = std::to_string(seed);
    j["mode"] = mode;
    j["max_level"] = max_level;
    return j;
  }
};

struct CaseRecord {
  long id = 0;  // generation order; emission sorts on it
  Json params = Json::object();
  bool pass = false;
  Json values = Json::object();
  Json witness;  // null unless failing
  double elapsed_ms = 0;
};

struct Report {
  std::string suite;
  Json config = Json::object();
  std::vector<CaseRecord> cases;

  bool all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; });
  }
  long failures() const {
    return std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.pass; });
  }
  void sort() {
    std::sort(cases.begin(), cases.end(), [](const CaseRecord& a, const CaseRecord& b) { return a.id < b.id; });
  }
};

// Timing fields are kept out unless requested, so equal configs give equal bytes.
inline Json report_json(const Report& r, bool with_timing) {
  Json j = Json::object();
  j["schema_version"] = kReportSchemaVersion;
  j["toolkit_version"] = kToolkitVersion;
  j["suite"] = r.suite;
  j["config"] = r.config;
  Json cs = Json::array();
  for (const auto& c : r.cases) {
    Json e = Json::object();
    e["params"] = c.params;
    e["verdict"] = c.pass ? "pass" : "fail";
    if (!c.values.empty()) e["values"] = c.values;
    if (!c.pass) e["witness"] = c.witness.is_null() ? Json::object() : c.witness;
    if (with_timing) e["elapsed_ms"] = c.elapsed_ms;
    cs.push_back(std::move(e));
  }
  j["cases"] = std::move(cs);
  Json s = Json::object();
  s["total"] = r.cases.size();
  s["failed"] = r.failures();
  s["all_pass"] = r.all_pass();
  j["summary"] = std::move(s);
  return j;
}

inline std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline void emit(const Report& r, const std::string& format, std::ostream& os, bool with_timing = false) {
  if (format == "json") {
    os << report_json(r, with_timing).dump(2) << "\n";
  } else if (format == "text") {
    os << r.suite << ": " << (r.all_pass() ? "PASS" : "FAIL") << " (" << r.cases.size() - r.failures() << "/"
       << r.cases.size() << " cases)\n";
    for (const auto& c : r.cases) {
      if (c.pass) continue;
      os << "  fail " << c.params.dump() << "\n";
      if (!c.witness.is_null()) os << "    witness " << c.witness.dump() << "\n";
    }
  } else if (format == "csv") {
    std::vector<std::string> pcols, vcols;
    std::set<std::string> seen;
    for (const auto& c : r.cases) {
      for (const auto& [k, v] : c.params.items()) if (seen.insert("p:" + k).second) pcols.push_back(k);
      for (const auto& [k, v] : c.values.items()) if (seen.insert("v:" + k).second) vcols.push_back(k);
    }
    bool first = true;
    for (const auto& k : pcols) { os << (first ? "" : ",") << k; first = false; }
    for (const auto& k : vcols) { os << (first ? "" : ",") << k; first = false; }
    os << (first ? "" : ",") << "verdict\n";
    for (const auto& c : r.cases) {
      first = true;
      for (const auto& k : pcols) { os << (first ? "" : ",") << (c.params.contains(k) ? csv_cell(c.params[k]) : ""); first = false; }
      for (const auto& k : vcols) { os << (first ? "" : ",") << (c.values.contains(k) ? csv_cell(c.values[k]) : ""); first = false; }
      os << (first ? "" : ",") << (c.pass ? "pass" : "fail") << "\n";
    }
  } else {
    throw domain_error("unknown format: " + format);
  }
}

// Worker count from RSVERIFY_THREADS, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* s = std::getenv("RSVERIFY_THREADS")) {
    int k = std::atoi(s);
    if (k >= 1) return static_cast<unsigned>(k);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

}  // namespace rsv

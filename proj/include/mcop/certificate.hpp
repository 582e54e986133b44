#pragma once

// Machine-readable run certificates.  A certificate collects named checks
// with pass/fail status and structured details, then serializes to JSON
// with a stable key order.  Canonical bytes exclude wall-clock timings so
// that two identical runs produce identical files; timings can be opted
// in for human consumption.

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcop/version.hpp"

namespace mcop {

using OrderedJson = nlohmann::ordered_json;

class Certificate {
 public:
  Certificate(std::string tool, std::string version = MCOP_VERSION)
      : tool_(std::move(tool)), version_(std::move(version)) {}

  void set_config(OrderedJson config) { config_ = std::move(config); }

  void add_check(const std::string& name, bool pass,
                 OrderedJson details = OrderedJson::object(),
                 double elapsed_ms = -1.0) {
    checks_.push_back(Check{name, pass, std::move(details), elapsed_ms});
  }

  bool all_pass() const {
    for (const auto& c : checks_) {
      if (!c.pass) return false;
    }
    return true;
  }

  int check_count() const { return static_cast<int>(checks_.size()); }

  int failure_count() const {
    int f = 0;
    for (const auto& c : checks_) {
      if (!c.pass) ++f;
    }
    return f;
  }

  void mark_partial() { partial_ = true; }
  bool partial() const { return partial_; }

  OrderedJson to_json(bool with_timings = false) const {
    OrderedJson root;
    root["schema_version"] = 1;
    root["tool"] = tool_;
    root["tool_version"] = version_;
    root["config"] = config_;
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : checks_) {
      OrderedJson jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["details"] = c.details;
      if (with_timings && c.elapsed_ms >= 0) jc["elapsed_ms"] = c.elapsed_ms;
      checks.push_back(std::move(jc));
    }
    root["checks"] = std::move(checks);
    OrderedJson summary;
    summary["checks"] = check_count();
    summary["failures"] = failure_count();
    summary["partial"] = partial_;
    summary["pass"] = all_pass() && !partial_;
    root["summary"] = std::move(summary);
    return root;
  }

  // Serialized form; canonical (reproducible) when timings are excluded.
  std::string bytes(bool with_timings = false) const {
    return to_json(with_timings).dump(2) + "\n";
  }

  void write_file(const std::string& path, bool with_timings = false) const {
    std::ofstream out(path, std::ios::binary);
    out << bytes(with_timings);
  }

 private:
  struct Check {
    std::string name;
    bool pass = false;
    OrderedJson details;
    double elapsed_ms = -1.0;
  };

  std::string tool_;
  std::string version_;
  OrderedJson config_ = OrderedJson::object();
  std::vector<Check> checks_;
  bool partial_ = false;
};

}  // namespace mcop

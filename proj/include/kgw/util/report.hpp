#pragma once

#include <cstddef>
#include <deque>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace kgw {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first counterexample in enumeration order

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
  // Folds a partial result computed over one slice of the enumeration.
  void merge(const CheckResult& part) {
    cases += part.cases;
    if (!part.passed) fail(part.witness);
  }
};

struct SuiteReport {
  std::string suite;
  std::deque<CheckResult> checks;  // add() hands out stable references

  SuiteReport() = default;
  explicit SuiteReport(std::string name) : suite(std::move(name)) {}

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  CheckResult& add(std::string name) {
    checks.emplace_back();
    checks.back().name = std::move(name);
    return checks.back();
  }
  void append(const SuiteReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }
};

inline std::ostream& operator<<(std::ostream& os, const SuiteReport& r) {
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << r.suite << "/" << c.name << " (" << c.cases
       << " cases)";
    if (!c.passed) os << "\n     witness: " << c.witness;
    os << "\n";
  }
  return os;
}

inline nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace kgw

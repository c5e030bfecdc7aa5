#pragma once

#include <string>
#include <vector>

#include "pjts/model.hpp"

namespace pjts {

struct CheckRecord {
  std::string check;
  std::string identity;  // which identity the residual measures
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
};

struct SuiteReport {
  std::string model;
  std::string suite;
  uint64_t seed = 42;
  double wall_ms = 0;
  std::vector<CheckRecord> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct SuiteOptions {
  uint64_t seed = 42;
  double tol = -1;    // < 0: per-check defaults
  int samples = -1;   // < 0: per-check defaults
};

const std::vector<std::string>& suite_names();

SuiteReport run_suite(const TripleSystem& V, const std::string& suite,
                      const SuiteOptions& opt = {});

}  // namespace pjts

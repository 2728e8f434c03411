#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace comblab {

struct SuiteParams {
  int n = -1;        // -1: suite default
  uint64_t seed = 12345;
  int samples = -1;  // -1: suite default
  int jobs = 0;      // 0: all cores, 1: serial reference path
};

struct InstanceFailure {
  uint64_t index = 0;
  std::string id;
  std::string reason;  // "category: detail"
};

struct SuiteReport {
  std::string name;
  int n = 0;
  uint64_t seed = 0;
  int samples = 0;
  int jobs = 0;
  uint64_t total = 0;
  uint64_t failed = 0;
  std::vector<InstanceFailure> failures;  // first few, by instance index
  double seconds = 0.0;
  bool passed() const { return failed == 0; }
  std::map<std::string, uint64_t> failures_by_category;
  std::string to_json() const;
};

std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace comblab

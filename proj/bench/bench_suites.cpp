// Timing comparison between the serial reference path (jobs=1) and the
// parallel path (jobs=0) of the verification suites. Also cross-checks that
// both paths produce identical totals and failure counts.

#include <cstdio>
#include <string>
#include <vector>

#include "comblab/suites.hpp"

using namespace comblab;

int main(int argc, char** argv) {
  std::vector<std::string> names = {"tournament-feed-snp", "comb-snc", "recognizer-cross"};
  if (argc > 1) {
    names.clear();
    for (int i = 1; i < argc; ++i) names.push_back(argv[i]);
  }

  std::printf("%-24s %12s %8s %10s %10s %8s\n", "suite", "instances", "failed", "serial_s",
              "parallel_s", "speedup");
  bool ok = true;
  for (const auto& name : names) {
    SuiteParams serial;
    serial.jobs = 1;
    SuiteReport a = run_suite(name, serial);

    SuiteParams parallel;
    parallel.jobs = 0;
    SuiteReport b = run_suite(name, parallel);

    bool same = a.total == b.total && a.failed == b.failed;
    ok = ok && same;
    std::printf("%-24s %12llu %8llu %10.3f %10.3f %7.2fx%s\n", name.c_str(),
                static_cast<unsigned long long>(a.total),
                static_cast<unsigned long long>(a.failed), a.seconds, b.seconds,
                b.seconds > 0 ? a.seconds / b.seconds : 0.0,
                same ? "" : "  MISMATCH");
  }
  return ok ? 0 : 1;
}

#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qc::selftest {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Case {
  std::string name;
  std::function<Outcome()> run;
};

std::vector<Case> catalog();

// Prints one PASS/FAIL line per case and a summary; returns the failure count.
int run_all(std::ostream& out, unsigned jobs = 1);

}  // namespace qc::selftest

#include <fstream>
#include <iostream>

#include "lieinner/suite/suite.hpp"

using namespace lieinner;

int main(int argc, char** argv) {
  RunConfig config;
  auto results = verify_suite(config);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " (" << r.instances
              << " instances)\n";
    all = all && r.passed;
  }
  if (argc > 1) {
    std::ofstream out(argv[1]);
    out << suite_report(config, results).dump(2) << "\n";
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}

#include <iostream>

#include "engelkit/acceptance.hpp"

int main() {
  auto results = engelkit::run_acceptance(&std::cout);
  bool ok = engelkit::all_passed(results);
  std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << '\n';
  return ok ? 0 : 1;
}

#include <iostream>

#include "tzero/acceptance.hpp"

int main() {
  const auto results = tzero::run_acceptance();
  bool all = true;
  for (const auto& r : results) {
    std::cout << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  (" << r.seconds << " s)" << r.detail << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

// One line per acceptance criterion; exit status 0 iff all pass.
#include <iostream>

#include "r2sheaf/verify.hpp"

int main() {
  bool ok = true;
  for (const auto& c : r2sheaf::verify::run_all()) {
    std::cout << c.summary() << "\n";
    ok = ok && c.passed();
  }
  std::cout << (ok ? "ALL ACCEPTANCE CRITERIA PASS" : "SOME ACCEPTANCE CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}

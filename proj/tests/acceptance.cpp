// Acceptance suite: one PASS/FAIL line per criterion, failing checks listed
// underneath. Exit status is zero only when every criterion passes.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "dualfield/report.hpp"
#include "dualfield/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
  bool all = true;
  for (const auto& c : dualfield::verify::run_all(seed)) {
    const bool ok = c.pass();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
    for (const auto& chk : c.checks) {
      if (chk.pass) continue;
      std::cout << "    " << chk.name << " [" << chk.identity << "] value=" << dualfield::report::format_number(chk.value)
                << " tolerance=" << dualfield::report::format_number(chk.tolerance, 3) << '\n';
    }
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}

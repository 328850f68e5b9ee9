#pragma once

// The ten acceptance criteria as executable property checks. Shared by the
// acceptance test binary and `dualfield verify all`.

#include <cstdint>
#include <string>
#include <vector>

#include "dualfield/report.hpp"

namespace dualfield::verify {

struct Criterion {
  int id;
  std::string title;
  std::vector<report::CheckRecord> checks;

  bool pass() const;
};

Criterion dual_covariance(std::uint64_t seed);
Criterion hyperbolic_covariance(std::uint64_t seed);
Criterion larmor_reduction(std::uint64_t seed);
Criterion cyclic_bases();
Criterion cavity_solutions(std::uint64_t seed);
Criterion cavity_currents(std::uint64_t seed);
Criterion conservation(std::uint64_t seed);
Criterion fock_algebra(std::uint64_t seed);
Criterion contradiction_certificate();
Criterion generalized_maxwell(std::uint64_t seed);

std::vector<Criterion> run_all(std::uint64_t seed);

}  // namespace dualfield::verify

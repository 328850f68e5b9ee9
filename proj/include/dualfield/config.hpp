#pragma once

// INI-style run configuration:
//
//   [cavity]
//   length = 1            ; m
//   volume = 1            ; m^3
//   max_modes = 8         ; truncation of the mode list
//   fock_dim = 12         ; per-mode Fock truncation
//   dimension_cap = 4096  ; limit on the tensor-product dimension
//
//   [constants]           ; any subset; eps0 defaults to 1/(mu0 c^2)
//   c = 299792458
//   mu0 = 1.25663706212e-6
//   eps0 = ...
//   hbar = 1.054571817e-34
//   e = 1.602176634e-19
//
//   [mode.1]              ; one section per retained mode, in file order
//   alpha = 1
//   mass = 1              ; kg
//   c1 = 0.5, 0           ; re, im
//   c2 = 0.5, 0

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualfield/cavity.hpp"

namespace dualfield::config {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double length = 1.0;
  double volume = 1.0;
  std::size_t max_modes = 8;
  int fock_dim = 12;
  std::size_t dimension_cap = 4096;
  PhysicalConstants constants = PhysicalConstants::codata();
  std::vector<cavity::CavityMode> modes;
};

/// One real mode alpha = 1, m = 1 kg, C1 = C2 = 1/2 in a 1 m, 1 m^3 cavity.
RunConfig default_config();

/// Throws ConfigError on unreadable files, malformed values, or constants
/// failing the consistency check.
RunConfig load(const std::filesystem::path& path);
RunConfig parse(const std::string& text);

/// Explicit path if given, else $DUALFIELD_CONFIG, else none.
std::optional<std::filesystem::path> resolve_path(const std::optional<std::string>& flag);

}  // namespace dualfield::config

#pragma once

// Field snapshots on a Grid4: a text header `<base>.hdr` plus either
// little-endian float64 values in `<base>.bin` or a CSV table `<base>.csv`.
//
// Header, one item per line:
//   dualfield-snapshot 1
//   shape <nx> <ny> <nz> <nt>
//   origin <x0> <y0> <z0> <t0>
//   spacing <hx> <hy> <hz> <ht>
//   encoding binary|csv
//   components <N>
//   label <name>            (N lines, in storage order)
// Numbers are written with %.17g. Binary values are node-major with x fastest,
// then y, z, t; the N components of a node are contiguous in label order.
// CSV has a header row `x,y,z,t,<labels...>` and one row per node in the same order.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualfield/quatmaxwell.hpp"

namespace dualfield::snapshot {

enum class Encoding { Binary, Csv };

struct Snapshot {
  quat::Grid4 grid;
  std::vector<std::string> labels;
  std::vector<double> values;  // grid.size() * labels.size()

  double& at(std::size_t node, std::size_t comp) { return values[node * labels.size() + comp]; }
  double at(std::size_t node, std::size_t comp) const { return values[node * labels.size() + comp]; }
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write(const std::filesystem::path& base, const Snapshot& snap, Encoding enc);
/// Reads `<base>.hdr` and its data file; throws FormatError on malformed input.
Snapshot read(const std::filesystem::path& base);

/// Labels E1_x .. E4_z, H*, je*, jg*, rho_e1..4, rho_g1..4.
Snapshot from_components(const quat::Grid4& grid, const quat::FieldComponents& comps);
/// Unknown labels are rejected; missing ones are zero.
quat::FieldComponents to_components(const Snapshot& snap);

}  // namespace dualfield::snapshot

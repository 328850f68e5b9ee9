#include "dualfield/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace dualfield::snapshot {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::filesystem::path with_ext(const std::filesystem::path& base, const char* ext) {
  return std::filesystem::path(base.string() + ext);
}

void put_le(std::ostream& os, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_le(std::istream& is) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) throw FormatError("binary snapshot is truncated");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw FormatError("bad number '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("bad number '" + s + "'");
  }
}

const char* axis_names = "xyz";

// Label -> (quantity, component slot, vector axis or -1).
struct LabelRef {
  int quantity;  // 0 E, 1 H, 2 je, 3 jg, 4 rho_e, 5 rho_g
  int slot;
  int axis;
};

std::vector<std::pair<std::string, LabelRef>> all_labels() {
  std::vector<std::pair<std::string, LabelRef>> out;
  const char* vec_names[4] = {"E", "H", "je", "jg"};
  for (int q = 0; q < 4; ++q) {
    for (int s = 0; s < 4; ++s) {
      for (int a = 0; a < 3; ++a) {
        out.push_back({std::string(vec_names[q]) + std::to_string(s + 1) + "_" + axis_names[a], {q, s, a}});
      }
    }
  }
  for (int s = 0; s < 4; ++s) out.push_back({"rho_e" + std::to_string(s + 1), {4, s, -1}});
  for (int s = 0; s < 4; ++s) out.push_back({"rho_g" + std::to_string(s + 1), {5, s, -1}});
  return out;
}

}  // namespace

void write(const std::filesystem::path& base, const Snapshot& snap, Encoding enc) {
  const auto& g = snap.grid;
  if (snap.values.size() != g.size() * snap.labels.size()) {
    throw std::invalid_argument("snapshot value count does not match grid and labels");
  }
  std::ofstream hdr(with_ext(base, ".hdr"));
  if (!hdr) throw std::runtime_error("cannot write " + with_ext(base, ".hdr").string());
  hdr << "dualfield-snapshot 1\n";
  hdr << "shape " << g.x.count << ' ' << g.y.count << ' ' << g.z.count << ' ' << g.t.count << '\n';
  hdr << "origin " << fmt(g.x.start) << ' ' << fmt(g.y.start) << ' ' << fmt(g.z.start) << ' ' << fmt(g.t.start)
      << '\n';
  hdr << "spacing " << fmt(g.x.step) << ' ' << fmt(g.y.step) << ' ' << fmt(g.z.step) << ' ' << fmt(g.t.step)
      << '\n';
  hdr << "encoding " << (enc == Encoding::Binary ? "binary" : "csv") << '\n';
  hdr << "components " << snap.labels.size() << '\n';
  for (const auto& l : snap.labels) hdr << "label " << l << '\n';

  if (enc == Encoding::Binary) {
    std::ofstream bin(with_ext(base, ".bin"), std::ios::binary);
    if (!bin) throw std::runtime_error("cannot write " + with_ext(base, ".bin").string());
    for (double v : snap.values) put_le(bin, v);
    return;
  }
  std::ofstream csv(with_ext(base, ".csv"));
  if (!csv) throw std::runtime_error("cannot write " + with_ext(base, ".csv").string());
  csv << "x,y,z,t";
  for (const auto& l : snap.labels) csv << ',' << l;
  csv << '\n';
  const std::size_t nc = snap.labels.size();
  for (std::size_t it = 0; it < g.t.count; ++it)
    for (std::size_t iz = 0; iz < g.z.count; ++iz)
      for (std::size_t iy = 0; iy < g.y.count; ++iy)
        for (std::size_t ix = 0; ix < g.x.count; ++ix) {
          const std::size_t n = g.index(ix, iy, iz, it);
          csv << fmt(g.x.at(ix)) << ',' << fmt(g.y.at(iy)) << ',' << fmt(g.z.at(iz)) << ',' << fmt(g.t.at(it));
          for (std::size_t c = 0; c < nc; ++c) csv << ',' << fmt(snap.values[n * nc + c]);
          csv << '\n';
        }
}

Snapshot read(const std::filesystem::path& base) {
  std::ifstream hdr(with_ext(base, ".hdr"));
  if (!hdr) throw FormatError("cannot open " + with_ext(base, ".hdr").string());
  std::string line;
  if (!std::getline(hdr, line) || line != "dualfield-snapshot 1") throw FormatError("missing snapshot magic line");

  Snapshot snap;
  std::size_t shape[4] = {0, 0, 0, 0};
  double origin[4] = {0, 0, 0, 0};
  double spacing[4] = {1, 1, 1, 1};
  std::string encoding;
  std::size_t ncomp = 0;
  bool have_shape = false, have_origin = false, have_spacing = false, have_comp = false;
  while (std::getline(hdr, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string key;
    is >> key;
    if (key == "shape") {
      for (auto& s : shape) is >> s;
      have_shape = static_cast<bool>(is);
    } else if (key == "origin" || key == "spacing") {
      double* dst = key == "origin" ? origin : spacing;
      for (int i = 0; i < 4; ++i) {
        std::string tok;
        is >> tok;
        dst[i] = parse_double(tok);
      }
      (key == "origin" ? have_origin : have_spacing) = true;
    } else if (key == "encoding") {
      is >> encoding;
    } else if (key == "components") {
      is >> ncomp;
      have_comp = static_cast<bool>(is);
    } else if (key == "label") {
      std::string name;
      is >> name;
      if (name.empty()) throw FormatError("empty component label");
      snap.labels.push_back(name);
    } else {
      throw FormatError("unknown header key '" + key + "'");
    }
  }
  if (!have_shape || !have_origin || !have_spacing || !have_comp) throw FormatError("incomplete snapshot header");
  if (snap.labels.size() != ncomp) throw FormatError("label count does not match components");
  for (auto s : shape) {
    if (s == 0) throw FormatError("shape entries must be positive");
  }
  snap.grid = {{origin[0], spacing[0], shape[0]},
               {origin[1], spacing[1], shape[1]},
               {origin[2], spacing[2], shape[2]},
               {origin[3], spacing[3], shape[3]}};
  const std::size_t total = snap.grid.size() * ncomp;
  snap.values.resize(total);

  if (encoding == "binary") {
    std::ifstream bin(with_ext(base, ".bin"), std::ios::binary);
    if (!bin) throw FormatError("cannot open " + with_ext(base, ".bin").string());
    for (auto& v : snap.values) v = get_le(bin);
    if (bin.peek() != std::char_traits<char>::eof()) throw FormatError("binary snapshot has trailing data");
  } else if (encoding == "csv") {
    std::ifstream csv(with_ext(base, ".csv"));
    if (!csv) throw FormatError("cannot open " + with_ext(base, ".csv").string());
    if (!std::getline(csv, line)) throw FormatError("csv snapshot is empty");
    const auto head = split(line, ',');
    if (head.size() != ncomp + 4) throw FormatError("csv header does not match components");
    for (std::size_t c = 0; c < ncomp; ++c) {
      if (head[c + 4] != snap.labels[c]) throw FormatError("csv header labels differ from sidecar");
    }
    std::size_t n = 0;
    while (std::getline(csv, line)) {
      if (line.empty()) continue;
      const auto cells = split(line, ',');
      if (cells.size() != ncomp + 4) throw FormatError("csv row has wrong width");
      if (n >= snap.grid.size()) throw FormatError("csv snapshot has too many rows");
      for (std::size_t c = 0; c < ncomp; ++c) snap.values[n * ncomp + c] = parse_double(cells[c + 4]);
      ++n;
    }
    if (n != snap.grid.size()) throw FormatError("csv snapshot has too few rows");
  } else {
    throw FormatError("unknown encoding '" + encoding + "'");
  }
  return snap;
}

Snapshot from_components(const quat::Grid4& grid, const quat::FieldComponents& comps) {
  comps.require_size(grid.size());
  Snapshot snap;
  snap.grid = grid;
  const auto labels = all_labels();
  for (const auto& [name, ref] : labels) snap.labels.push_back(name);
  const std::size_t nc = labels.size();
  snap.values.assign(grid.size() * nc, 0.0);
  const std::array<const std::array<quat::VectorSamples, 4>*, 4> vecs{&comps.E, &comps.H, &comps.je, &comps.jg};
  for (std::size_t n = 0; n < grid.size(); ++n) {
    for (std::size_t c = 0; c < nc; ++c) {
      const auto& ref = labels[c].second;
      double v = 0.0;
      if (ref.quantity < 4) {
        v = (*vecs[ref.quantity])[ref.slot][n](ref.axis);
      } else {
        v = (ref.quantity == 4 ? comps.rho_e : comps.rho_g)[ref.slot][n];
      }
      snap.values[n * nc + c] = v;
    }
  }
  return snap;
}

quat::FieldComponents to_components(const Snapshot& snap) {
  std::map<std::string, LabelRef> known;
  for (const auto& [name, ref] : all_labels()) known.emplace(name, ref);
  auto comps = quat::FieldComponents::zeros(snap.grid);
  std::array<std::array<quat::VectorSamples, 4>*, 4> vecs{&comps.E, &comps.H, &comps.je, &comps.jg};
  const std::size_t nc = snap.labels.size();
  for (std::size_t c = 0; c < nc; ++c) {
    const auto it = known.find(snap.labels[c]);
    if (it == known.end()) throw FormatError("unknown component label '" + snap.labels[c] + "'");
    const auto& ref = it->second;
    for (std::size_t n = 0; n < snap.grid.size(); ++n) {
      const double v = snap.values[n * nc + c];
      if (ref.quantity < 4) {
        (*vecs[ref.quantity])[ref.slot][n](ref.axis) = v;
      } else {
        (ref.quantity == 4 ? comps.rho_e : comps.rho_g)[ref.slot][n] = v;
      }
    }
  }
  return comps;
}

}  // namespace dualfield::snapshot

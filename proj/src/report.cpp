#include "dualfield/report.hpp"

#include <cstdio>

namespace dualfield::report {

std::string format_number(double v, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

CheckRecord at_most(std::string name, std::string identity, double value, double tolerance) {
  return {std::move(name), std::move(identity), value, tolerance, value <= tolerance};
}

CheckRecord at_least(std::string name, std::string identity, double value, double bound) {
  return {std::move(name), std::move(identity), value, bound, value >= bound};
}

CheckRecord within(std::string name, std::string identity, double value, double lo, double hi) {
  return {std::move(name), std::move(identity), value, (hi - lo) / 2.0, value >= lo && value <= hi};
}

CheckRecord holds(std::string name, std::string identity, bool flag) {
  return {std::move(name), std::move(identity), flag ? 1.0 : 0.0, 0.0, flag};
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport::RunReport(std::string command, std::string inputs)
    : command_(std::move(command)), inputs_digest_(digest(inputs)) {}

void RunReport::value(const std::string& key, const std::string& text) { values_.emplace_back(key, text); }

void RunReport::value(const std::string& key, double v) { values_.emplace_back(key, format_number(v)); }

void RunReport::check(CheckRecord rec) { checks_.push_back(std::move(rec)); }

bool RunReport::all_pass() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void RunReport::write(std::ostream& os, Format fmt) const {
  if (fmt == Format::Text) {
    os << "command=" << command_ << '\n';
    os << "inputs=" << inputs_digest_ << '\n';
    for (const auto& [k, v] : values_) os << k << '=' << v << '\n';
    for (const auto& c : checks_) {
      os << "check=" << c.name << " identity=\"" << c.identity << "\" value=" << format_number(c.value)
         << " tolerance=" << format_number(c.tolerance, 3) << " pass=" << (c.pass ? "true" : "false") << '\n';
    }
    if (wall_time_) os << "wall_time_s=" << format_number(*wall_time_, 6) << '\n';
    os << "status=" << (all_pass() ? "pass" : "fail") << '\n';
    return;
  }
  os << "kind,name,identity,value,tolerance,pass\n";
  os << "meta,command,," << csv_cell(command_) << ",,\n";
  os << "meta,inputs,," << inputs_digest_ << ",,\n";
  for (const auto& [k, v] : values_) os << "value," << csv_cell(k) << ",," << csv_cell(v) << ",,\n";
  for (const auto& c : checks_) {
    os << "check," << csv_cell(c.name) << ',' << csv_cell(c.identity) << ',' << format_number(c.value) << ','
       << format_number(c.tolerance, 3) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  if (wall_time_) os << "meta,wall_time_s,," << format_number(*wall_time_, 6) << ",,\n";
}

}  // namespace dualfield::report

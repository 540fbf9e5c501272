#include "symmspace/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace symmspace {
namespace {

bool check_passes(double measured, double expected, double tolerance) {
  return std::abs(measured - expected) <= tolerance * std::max(1.0, std::abs(expected));
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check& VerificationReport::add_relative(const std::string& name, double measured, double expected,
                                        double rel) {
  Check c;
  c.name = name;
  c.measured = measured;
  c.expected = expected;
  c.tolerance = rel * std::abs(expected) / std::max(1.0, std::abs(expected));
  c.passed = check_passes(c.measured, c.expected, c.tolerance);
  checks.push_back(std::move(c));
  return checks.back();
}

Check& VerificationReport::add_deficit(const std::string& name, double violation, double slack) {
  Check c;
  c.name = name;
  c.measured = std::max(0.0, violation);
  c.expected = 0.0;
  c.tolerance = slack;
  c.passed = check_passes(c.measured, c.expected, c.tolerance);
  checks.push_back(std::move(c));
  return checks.back();
}

Check& VerificationReport::add_exact(const std::string& name, double measured, double expected) {
  Check c;
  c.name = name;
  c.measured = measured;
  c.expected = expected;
  c.tolerance = 0.0;
  c.passed = check_passes(c.measured, c.expected, c.tolerance);
  checks.push_back(std::move(c));
  return checks.back();
}

std::string format_real(double value) {
  if (!std::isfinite(value)) {
    return "null";
  }
  if (value == 0.0) {
    value = 0.0;  // normalize -0
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string render_table(const VerificationReport& report) {
  size_t name_width = 5;  // "check"
  for (const Check& c : report.checks) {
    name_width = std::max(name_width, c.name.size());
  }
  const int value_width = 18;
  std::ostringstream out;
  out << report.space << "  (seed " << report.seed << ", metric " << report.metric << ")\n";
  auto pad = [&](const std::string& s, size_t width) {
    out << s;
    if (s.size() < width) {
      out << std::string(width - s.size(), ' ');
    }
    out << "  ";
  };
  pad("check", name_width);
  pad("measured", value_width);
  pad("expected", value_width);
  pad("tolerance", value_width);
  out << "status\n";
  for (const Check& c : report.checks) {
    pad(c.name, name_width);
    pad(format_real(c.measured), value_width);
    pad(format_real(c.expected), value_width);
    pad(format_real(c.tolerance), value_width);
    out << (c.passed ? "PASS" : "FAIL") << "\n";
  }
  size_t failed = 0;
  for (const Check& c : report.checks) {
    failed += c.passed ? 0 : 1;
  }
  out << report.checks.size() << " checks, " << failed << " failed\n";
  return out.str();
}

std::string render_json(const VerificationReport& report, bool include_wall_time) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"space\": \"" << json_escape(report.space) << "\",\n";
  out << "  \"seed\": " << report.seed << ",\n";
  out << "  \"metric\": \"" << json_escape(report.metric) << "\",\n";
  out << "  \"checks\": [";
  for (size_t i = 0; i < report.checks.size(); ++i) {
    const Check& c = report.checks[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"name\": \"" << json_escape(c.name) << "\", \"measured\": "
        << format_real(c.measured) << ", \"expected\": " << format_real(c.expected)
        << ", \"tolerance\": " << format_real(c.tolerance) << ", \"passed\": "
        << (c.passed ? "true" : "false") << "}";
  }
  out << (report.checks.empty() ? "]" : "\n  ]");
  if (include_wall_time) {
    out << ",\n  \"wall_time_ms\": " << report.wall_time_ms << "\n";
  } else {
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace symmspace

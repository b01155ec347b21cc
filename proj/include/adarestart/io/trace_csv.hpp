#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adarestart/core/trace.hpp"

namespace adarestart::io {

inline constexpr std::string_view kTraceHeader = "total_iter,epoch,inner_iter,residual,potential,restarted";
inline constexpr std::string_view kCurrentHeader = "total_iter,current_residual";

// Numbers go through to_chars (17 significant digits for reals), so output
// never depends on the stream's locale.
inline std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double parse_real_field(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("trace csv: bad number '" + std::string(s) + "'");
  }
  return v;
}

inline std::int64_t parse_int_field(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("trace csv: bad integer '" + std::string(s) + "'");
  }
  return v;
}

inline void write_trace(const SolverTrace& trace, std::ostream& out) {
  out << kTraceHeader << '\n';
  for (const auto& row : trace.rows) {
    out << format_int(row.total_iter) << ',' << format_int(row.epoch) << ',' << format_int(row.inner_iter) << ','
        << format_real(row.residual) << ',' << (row.potential ? format_real(*row.potential) : std::string()) << ','
        << (row.restarted ? '1' : '0') << '\n';
  }
  if (!out) throw std::runtime_error("trace csv: write failure");
}

// Companion series for the non-averaged iterate; rows without it are skipped.
inline void write_current_residuals(const SolverTrace& trace, std::ostream& out) {
  out << kCurrentHeader << '\n';
  for (const auto& row : trace.rows) {
    if (row.current_residual) out << format_int(row.total_iter) << ',' << format_real(*row.current_residual) << '\n';
  }
  if (!out) throw std::runtime_error("trace csv: write failure");
}

namespace detail {
inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}
}  // namespace detail

inline SolverTrace read_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) throw std::runtime_error("trace csv: missing header");
  SolverTrace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_commas(line);
    if (f.size() != 6) throw std::runtime_error("trace csv: expected 6 fields");
    TraceRow row;
    row.total_iter = parse_int_field(f[0]);
    row.epoch = parse_int_field(f[1]);
    row.inner_iter = parse_int_field(f[2]);
    row.residual = parse_real_field(f[3]);
    if (!f[4].empty()) row.potential = parse_real_field(f[4]);
    if (f[5] != "0" && f[5] != "1") throw std::runtime_error("trace csv: restarted must be 0 or 1");
    row.restarted = f[5] == "1";
    trace.rows.push_back(row);
  }
  return trace;
}

inline std::string trace_to_string(const SolverTrace& trace) {
  std::ostringstream out;
  write_trace(trace, out);
  return out.str();
}

}  // namespace adarestart::io

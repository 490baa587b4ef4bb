#include "qosc/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace qosc {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& field, const std::string& path) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::runtime_error("read_csv: malformed number '" + field + "' in " + path);
  }
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw std::runtime_error("write_csv: row width does not match header in " + path);
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

void write_csv(const std::string& path, const TimeSeriesOutput& ts) {
  if (ts.t.size() != ts.x.size()) {
    throw std::runtime_error("write_csv: t and x lengths differ");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(ts.t.size());
  if (ts.all_real()) {
    for (std::size_t i = 0; i < ts.t.size(); ++i) {
      rows.push_back({ts.t[i], ts.x[i].real()});
    }
    write_csv(path, {"t", "x"}, rows);
    return;
  }
  for (std::size_t i = 0; i < ts.t.size(); ++i) {
    rows.push_back({ts.t[i], ts.x[i].real(), ts.x[i].imag()});
  }
  write_csv(path, {"t", "x_re", "x_im"}, rows);
}

TimeSeriesOutput read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);
  bool complex_columns = false;
  if (line == "t,x") {
    complex_columns = false;
  } else if (line == "t,x_re,x_im") {
    complex_columns = true;
  } else {
    throw std::runtime_error("read_csv: unrecognized header '" + line + "' in " + path);
  }
  TimeSeriesOutput ts;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    const std::size_t expected = complex_columns ? 3 : 2;
    if (fields.size() != expected) {
      throw std::runtime_error("read_csv: wrong field count in " + path);
    }
    ts.t.push_back(parse_double(fields[0], path));
    if (complex_columns) {
      ts.x.emplace_back(parse_double(fields[1], path), parse_double(fields[2], path));
    } else {
      ts.x.emplace_back(parse_double(fields[1], path), 0.0);
    }
  }
  return ts;
}

}  // namespace qosc

#pragma once

#include <string>
#include <vector>

#include "qosc/timeseries.hpp"

namespace qosc {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Generic writer: one header row, then one row per entry of rows, fields
// formatted with format_double and joined by ','. Lines end with '\n'.
// Throws std::runtime_error on I/O failure or ragged rows.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Header "t,x" for an all-real series, "t,x_re,x_im" otherwise.
void write_csv(const std::string& path, const TimeSeriesOutput& ts);

// Inverse of the TimeSeriesOutput writer; accepts both header shapes.
// Throws std::runtime_error on malformed input.
TimeSeriesOutput read_csv(const std::string& path);

}  // namespace qosc

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thermistor/simulator.hpp"

namespace thermistor {

/// Long-format time series: header "t,x,u,phi", one row per (snapshot,
/// node), time-major then node-ascending, numbers printed with 15
/// significant digits, every line newline-terminated.
std::string write_series_csv(const SimulationResult& result);

/// Final profile: header "x,u" followed by N+1 rows.
std::string write_profile_csv(const SimulationResult& result);

struct SeriesRow {
    double t = 0.0;
    double x = 0.0;
    double u = 0.0;
    double phi = 0.0;
};

/// Parse text produced by write_series_csv. Throws std::invalid_argument on
/// a malformed header or row.
std::vector<SeriesRow> parse_series_csv(std::string_view text);

/// Shortest "%.15g" rendering used by every CSV writer.
std::string format_number(double value);

}  // namespace thermistor

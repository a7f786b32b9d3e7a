#include "thermistor/series_io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace thermistor {

std::string format_number(double value) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.15g", value);
    std::string s(buf, static_cast<std::size_t>(len));
    if (s == "-0") s = "0";
    return s;
}

std::string write_series_csv(const SimulationResult& result) {
    std::string out = "t,x,u,phi\n";
    for (const Snapshot& snap : result.snapshots) {
        const std::string t = format_number(snap.time);
        for (std::size_t j = 0; j < result.nodes.size(); ++j) {
            out += t;
            out += ',';
            out += format_number(result.nodes[j]);
            out += ',';
            out += format_number(snap.temperature[j]);
            out += ',';
            out += format_number(snap.potential[j]);
            out += '\n';
        }
    }
    return out;
}

std::string write_profile_csv(const SimulationResult& result) {
    std::string out = "x,u\n";
    for (std::size_t j = 0; j < result.nodes.size(); ++j) {
        out += format_number(result.nodes[j]);
        out += ',';
        out += format_number(result.final_profile[j]);
        out += '\n';
    }
    return out;
}

std::vector<SeriesRow> parse_series_csv(std::string_view text) {
    const auto take_line = [&text]() {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            throw std::invalid_argument("series CSV line is not newline-terminated");
        }
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl + 1);
        return line;
    };

    if (take_line() != "t,x,u,phi") {
        throw std::invalid_argument("series CSV header must be 't,x,u,phi'");
    }

    std::vector<SeriesRow> rows;
    while (!text.empty()) {
        const std::string_view line = take_line();
        double fields[4];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int f = 0; f < 4; ++f) {
            auto [next, ec] = std::from_chars(p, end, fields[f]);
            if (ec != std::errc()) {
                throw std::invalid_argument("malformed series CSV row: " + std::string(line));
            }
            p = next;
            if (f < 3) {
                if (p == end || *p != ',') {
                    throw std::invalid_argument("malformed series CSV row: " + std::string(line));
                }
                ++p;
            }
        }
        if (p != end) {
            throw std::invalid_argument("trailing data in series CSV row: " + std::string(line));
        }
        rows.push_back({fields[0], fields[1], fields[2], fields[3]});
    }
    return rows;
}

}  // namespace thermistor

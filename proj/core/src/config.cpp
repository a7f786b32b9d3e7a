#include "thermistor/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "thermistor/errors.hpp"

namespace thermistor {

namespace {

const std::set<std::string, std::less<>> kKnownKeys = {
    "n_elements", "tau",        "t_max",      "beta",
    "gamma",      "k0",         "sigma0",     "lambda",
    "model",      "flux_left",  "flux_right", "scheme",
    "potential_scheme", "temperature_scheme", "source",
    "steady_tol", "record_every", "freeze_potential"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    std::size_t line;
};

class Entries {
public:
    void add(std::string key, std::string value, std::size_t line) {
        if (!kKnownKeys.contains(key)) {
            throw ConfigError("unknown key '" + key + "'", line);
        }
        if (auto it = entries_.find(key); it != entries_.end()) {
            throw ConfigError("duplicate key '" + key + "' (first set on line " +
                                  std::to_string(it->second.line) + ")",
                              line);
        }
        entries_.emplace(std::move(key), Entry{std::move(value), line});
    }

    bool has(const std::string& key) const { return entries_.contains(key); }

    std::size_t line(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    double real(const std::string& key) const {
        const Entry& e = require(key);
        double v = 0.0;
        const char* begin = e.value.data();
        const char* end = begin + e.value.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
            throw ConfigError("value of '" + key + "' is not a finite number: '" + e.value + "'",
                              e.line);
        }
        return v;
    }

    double real_or(const std::string& key, double fallback) const {
        return has(key) ? real(key) : fallback;
    }

    std::size_t count(const std::string& key) const {
        const Entry& e = require(key);
        std::size_t v = 0;
        const char* begin = e.value.data();
        const char* end = begin + e.value.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end) {
            throw ConfigError("value of '" + key + "' is not a nonnegative integer: '" + e.value +
                                  "'",
                              e.line);
        }
        return v;
    }

    const std::string& text(const std::string& key) const { return require(key).value; }

private:
    const Entry& require(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            throw ConfigError("missing required key '" + key + "'");
        }
        return it->second;
    }

    std::map<std::string, Entry, std::less<>> entries_;
};

Stiffness parse_stiffness(const Entries& entries, const std::string& key) {
    const std::string& v = entries.text(key);
    if (v == "paper") return Stiffness::paper_literal;
    if (v == "corrected") return Stiffness::corrected;
    throw ConfigError("'" + key + "' must be 'paper' or 'corrected', got '" + v + "'",
                      entries.line(key));
}

SourceQuadrature parse_source(const Entries& entries) {
    const std::string& v = entries.text("source");
    if (v == "paper") return SourceQuadrature::paper_literal;
    if (v == "central") return SourceQuadrature::central;
    throw ConfigError("'source' must be 'paper' or 'central', got '" + v + "'",
                      entries.line("source"));
}

ModelKind parse_model_kind(const Entries& entries) {
    const std::string& v = entries.text("model");
    if (v == "paper_example") return ModelKind::paper_example;
    if (v == "constant") return ModelKind::constant;
    if (v == "rational_sigma") return ModelKind::rational_sigma;
    throw ConfigError("'model' must be paper_example, constant or rational_sigma, got '" + v + "'",
                      entries.line("model"));
}

bool parse_bool(const Entries& entries, const std::string& key) {
    const std::string& v = entries.text(key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ConfigError("'" + key + "' must be true or false, got '" + v + "'", entries.line(key));
}

std::vector<std::string> model_keys(ModelKind kind) {
    switch (kind) {
    case ModelKind::paper_example:
        return {"gamma"};
    case ModelKind::constant:
        return {"k0", "sigma0"};
    case ModelKind::rational_sigma:
        return {"k0", "sigma0", "lambda"};
    }
    return {};
}

std::string format_real(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

ParsedConfig parse_config(std::string_view text) {
    Entries entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        entries.add(std::string(key), std::string(value), line_no);
    }

    ParsedConfig parsed;
    SimulationConfig& c = parsed.config;

    c.n_elements = entries.count("n_elements");
    c.tau = entries.real("tau");
    c.t_max = entries.real("t_max");
    c.beta = entries.real("beta");

    c.model.kind = entries.has("model") ? parse_model_kind(entries) : ModelKind::paper_example;
    c.model.parameters.clear();
    const std::vector<std::string> needed = model_keys(c.model.kind);
    for (const std::string& key : needed) {
        c.model.parameters[key] = entries.real(key);
    }
    for (const char* key : {"gamma", "k0", "sigma0", "lambda"}) {
        if (entries.has(key) && std::find(needed.begin(), needed.end(), key) == needed.end()) {
            throw ConfigError(std::string("key '") + key + "' does not apply to model '" +
                                  to_string(c.model.kind) + "'",
                              entries.line(key));
        }
    }

    c.flux_left = entries.real_or("flux_left", 1.0);
    c.flux_right = entries.real_or("flux_right", 1.0);

    if (entries.has("scheme")) {
        const Stiffness s = parse_stiffness(entries, "scheme");
        c.variant.potential = s;
        c.variant.temperature = s;
    }
    if (entries.has("potential_scheme")) {
        c.variant.potential = parse_stiffness(entries, "potential_scheme");
    }
    if (entries.has("temperature_scheme")) {
        c.variant.temperature = parse_stiffness(entries, "temperature_scheme");
    }
    if (entries.has("source")) c.variant.source = parse_source(entries);

    c.steady_tolerance = entries.real_or("steady_tol", 1e-8);
    if (entries.has("record_every")) c.record_every = entries.count("record_every");
    if (entries.has("freeze_potential")) {
        c.freeze_potential_after_first_step = parse_bool(entries, "freeze_potential");
    }

    const auto check = [&](bool ok, const std::string& key, const std::string& what) {
        if (!ok) throw ConfigError("'" + key + "' " + what, entries.line(key));
    };
    check(c.n_elements >= 3, "n_elements", "must be at least 3");
    check(c.tau > 0.0, "tau", "must be positive");
    check(c.t_max >= c.tau, "t_max", "must be at least tau");
    check(c.beta >= 0.0, "beta", "must be nonnegative");
    check(c.steady_tolerance > 0.0, "steady_tol", "must be positive");
    check(c.record_every >= 1, "record_every", "must be at least 1");
    c.validate();

    if (c.model.kind == ModelKind::paper_example && c.beta > 0.0) {
        const double gamma = c.model.parameter("gamma");
        if (gamma > 0.0 && !validate_physical(c.beta, gamma)) {
            parsed.warnings.push_back("physical constraint 1/β+1/2 ≤ 1/γ violated (beta = " +
                                      format_real(c.beta) + ", gamma = " + format_real(gamma) +
                                      ")");
        }
    }
    return parsed;
}

ParsedConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string format_config(const SimulationConfig& config) {
    std::ostringstream out;
    out << "n_elements = " << config.n_elements << '\n'
        << "tau = " << format_real(config.tau) << '\n'
        << "t_max = " << format_real(config.t_max) << '\n'
        << "beta = " << format_real(config.beta) << '\n'
        << "model = " << to_string(config.model.kind) << '\n';
    for (const auto& [key, value] : config.model.parameters) {
        out << key << " = " << format_real(value) << '\n';
    }
    out << "flux_left = " << format_real(config.flux_left) << '\n'
        << "flux_right = " << format_real(config.flux_right) << '\n'
        << "potential_scheme = " << to_string(config.variant.potential) << '\n'
        << "temperature_scheme = " << to_string(config.variant.temperature) << '\n'
        << "source = " << to_string(config.variant.source) << '\n'
        << "steady_tol = " << format_real(config.steady_tolerance) << '\n'
        << "record_every = " << config.record_every << '\n'
        << "freeze_potential = " << (config.freeze_potential_after_first_step ? "true" : "false")
        << '\n';
    return out.str();
}

}  // namespace thermistor

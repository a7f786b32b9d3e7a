#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "thermistor/config.hpp"
#include "thermistor/errors.hpp"
#include "thermistor/series_io.hpp"
#include "thermistor/simulator.hpp"

namespace thermistor {
namespace {

const std::filesystem::path kConfigDir{THERMISTOR_CONFIG_DIR};

std::size_t count_lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

std::size_t error_line(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

TEST(Config, ShippedExampleParses) {
    const ParsedConfig p = load_config(kConfigDir / "fig1.cfg");
    EXPECT_TRUE(p.warnings.empty());
    EXPECT_EQ(p.config.n_elements, 100u);
    EXPECT_EQ(p.config.tau, 0.1);
    EXPECT_EQ(p.config.t_max, 200.0);
    EXPECT_EQ(p.config.beta, 0.2);
    EXPECT_EQ(p.config.model.kind, ModelKind::paper_example);
    EXPECT_EQ(p.config.model.parameter("gamma"), 0.1);
    EXPECT_EQ(p.config.variant, SchemeVariant{});
    EXPECT_EQ(p.config.record_every, 10u);
}

TEST(Config, DefaultsAndOverrides) {
    const ParsedConfig p = parse_config(
        "n_elements = 8\ntau = 0.5\nt_max = 1\nbeta = 0.2\ngamma = 0.1\n"
        "scheme = paper\npotential_scheme = corrected\nsource = paper\n");
    EXPECT_EQ(p.config.flux_left, 1.0);
    EXPECT_EQ(p.config.flux_right, 1.0);
    EXPECT_EQ(p.config.steady_tolerance, 1e-8);
    EXPECT_EQ(p.config.record_every, 1u);
    EXPECT_FALSE(p.config.freeze_potential_after_first_step);
    EXPECT_EQ(p.config.variant.potential, Stiffness::corrected);
    EXPECT_EQ(p.config.variant.temperature, Stiffness::paper_literal);
    EXPECT_EQ(p.config.variant.source, SourceQuadrature::paper_literal);
}

TEST(Config, CommentsAndBlankLines) {
    const ParsedConfig p = parse_config(
        "# header\n\n  n_elements = 8   # trailing\ntau=0.5\nt_max = 1\nbeta = 0.2\ngamma = 0.1\n");
    EXPECT_EQ(p.config.n_elements, 8u);
    EXPECT_EQ(p.config.tau, 0.5);
}

TEST(Config, PhysicalConstraintWarning) {
    const ParsedConfig p =
        parse_config("n_elements = 10\ntau = 0.1\nt_max = 1\nbeta = 0.1\ngamma = 0.5\n");
    ASSERT_EQ(p.warnings.size(), 1u);
    EXPECT_NE(p.warnings[0].find("physical constraint"), std::string::npos);
}

TEST(Config, MissingRequiredKey) {
    try {
        parse_config("n_elements = 10\nt_max = 1\nbeta = 0.2\ngamma = 0.1\n");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("tau"), std::string::npos);
    }
    EXPECT_THROW(parse_config("model = constant\nn_elements = 10\ntau = 0.1\nt_max = 1\nbeta = 0.2\n"
                              "k0 = 1\n"),
                 ConfigError);
}

TEST(Config, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line("n_elements = 10\ntau = 0.1\ntau = 0.2\n"), 3u);
    EXPECT_EQ(error_line("n_elements = 10\n\nwidth = 3\n"), 3u);
    EXPECT_EQ(error_line("n_elements = ten\n"), 1u);
    EXPECT_EQ(error_line("tau 0.1\n"), 1u);
    EXPECT_EQ(error_line("n_elements = 10\ntau = nan\n"), 2u);
    EXPECT_EQ(error_line("n_elements = 10\ntau = -1\nt_max = 1\nbeta = 0.2\ngamma = 0.1\n"), 2u);
    EXPECT_EQ(error_line("n_elements = 2\ntau = 1\nt_max = 1\nbeta = 0.2\ngamma = 0.1\n"), 1u);
    EXPECT_EQ(error_line("n_elements = 10\ntau = 0.1\nt_max = 1\nbeta = 0.2\ngamma = 0.1\nlambda = 1\n"),
              6u);
    EXPECT_EQ(error_line("n_elements = 10\ntau = 0.1\nt_max = 1\nbeta = 0.2\ngamma = 0.1\nscheme = fancy\n"),
              6u);
}

TEST(Config, UnreadableFile) {
    EXPECT_THROW(load_config(kConfigDir / "does_not_exist.cfg"), ConfigError);
}

TEST(Config, FormatRoundTrips) {
    SimulationConfig c;
    c.n_elements = 37;
    c.tau = 0.03;
    c.t_max = 1.7;
    c.beta = 0.15;
    c.model = {ModelKind::rational_sigma, {{"k0", 0.9}, {"sigma0", 1.1}, {"lambda", 0.25}}};
    c.flux_left = 0.5;
    c.flux_right = 0.5;
    c.variant = {Stiffness::paper_literal, Stiffness::corrected, SourceQuadrature::paper_literal};
    c.steady_tolerance = 3e-9;
    c.record_every = 4;
    c.freeze_potential_after_first_step = true;
    const SimulationConfig back = parse_config(format_config(c)).config;
    EXPECT_EQ(back.n_elements, c.n_elements);
    EXPECT_EQ(back.tau, c.tau);
    EXPECT_EQ(back.t_max, c.t_max);
    EXPECT_EQ(back.beta, c.beta);
    EXPECT_EQ(back.model.kind, c.model.kind);
    EXPECT_EQ(back.model.parameters, c.model.parameters);
    EXPECT_EQ(back.flux_left, c.flux_left);
    EXPECT_EQ(back.variant, c.variant);
    EXPECT_EQ(back.steady_tolerance, c.steady_tolerance);
    EXPECT_EQ(back.record_every, c.record_every);
    EXPECT_TRUE(back.freeze_potential_after_first_step);
}

SimulationResult small_run() {
    SimulationConfig c;
    c.n_elements = 10;
    c.tau = 0.1;
    c.t_max = 1.0;
    c.record_every = 2;
    return run(c);
}

TEST(SeriesIo, FormatNumber) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333333");
    EXPECT_EQ(format_number(2e-20), "2e-20");
}

TEST(SeriesIo, SeriesLayout) {
    const SimulationResult r = small_run();
    const std::string csv = write_series_csv(r);
    EXPECT_EQ(csv.rfind("t,x,u,phi\n", 0), 0u);
    EXPECT_EQ(csv.back(), '\n');
    EXPECT_EQ(count_lines(csv), 1 + r.snapshots.size() * 11);

    const std::vector<SeriesRow> rows = parse_series_csv(csv);
    ASSERT_EQ(rows.size(), r.snapshots.size() * 11);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Snapshot& s = r.snapshots[i / 11];
        EXPECT_EQ(rows[i].t, std::stod(format_number(s.time)));
        EXPECT_NEAR(rows[i].x, r.nodes[i % 11], 1e-15);
        EXPECT_NEAR(rows[i].u, s.temperature[i % 11], 1e-14 * (1 + std::abs(s.temperature[i % 11])));
        EXPECT_NEAR(rows[i].phi, s.potential[i % 11], 1e-14);
    }
}

TEST(SeriesIo, ProfileLayout) {
    const SimulationResult r = small_run();
    const std::string csv = write_profile_csv(r);
    EXPECT_EQ(csv.rfind("x,u\n", 0), 0u);
    EXPECT_EQ(count_lines(csv), 12u);
}

TEST(SeriesIo, OutputIsDeterministic) {
    EXPECT_EQ(write_series_csv(small_run()), write_series_csv(small_run()));
}

TEST(SeriesIo, MalformedInput) {
    EXPECT_THROW(parse_series_csv("x,u\n1,2\n"), std::invalid_argument);
    EXPECT_THROW(parse_series_csv("t,x,u,phi\n1,2,3\n"), std::invalid_argument);
    EXPECT_THROW(parse_series_csv("t,x,u,phi\n1,2,three,4\n"), std::invalid_argument);
    EXPECT_TRUE(parse_series_csv("t,x,u,phi\n").empty());
}

}  // namespace
}  // namespace thermistor

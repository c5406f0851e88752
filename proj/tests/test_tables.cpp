#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "rmscat/errors.hpp"
#include "rmscat/tables.hpp"

namespace tb = rmscat::tables;
namespace rm = rmscat::rosenmorse;

namespace {
std::string render(const tb::Table& t, tb::Format f) {
    std::ostringstream os;
    tb::write(t, os, f);
    return os.str();
}
}  // namespace

TEST_CASE("format_double round-trips doubles exactly") {
    for (double v : {1.0 / 3.0, -2.718281828459045e-7, 1e300, 0.1}) {
        CHECK(std::stod(tb::format_double(v)) == v);
    }
}

TEST_CASE("CSV output: metadata comments, header row, one line per sample") {
    const tb::Table t = tb::coefficients_table(rm::RMParams(1.0, 0.0), 1.0, 2.0, 5);
    const std::string csv = render(t, tb::Format::Csv);
    CHECK(csv.find("# alpha = 1") != std::string::npos);
    CHECK(csv.find("k,R,T,") != std::string::npos);
    // 5 data rows
    std::istringstream is(csv);
    std::string line;
    int data_rows = 0, comment_rows = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.rfind("#", 0) == 0) {
            ++comment_rows;
        } else if (!saw_header) {
            saw_header = true;
        } else {
            ++data_rows;
        }
    }
    CHECK(data_rows == 5);
    CHECK(comment_rows >= 3);
}

TEST_CASE("JSON output carries metadata, columns, and flat rows") {
    const tb::Table t = tb::measure_table(rm::RMParams(1.0, 0.0), 1.0, 3.0, 3);
    const std::string js = render(t, tb::Format::Json);
    CHECK(js.find("\"metadata\"") != std::string::npos);
    CHECK(js.find("\"columns\"") != std::string::npos);
    CHECK(js.find("\"data\"") != std::string::npos);
    CHECK(js.find("\"w\"") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    const rm::RMParams p(1.3, 0.25);
    const tb::Table a = tb::coefficients_table(p, 1.2, 6.0, 41);
    const tb::Table b = tb::coefficients_table(p, 1.2, 6.0, 41);
    CHECK(render(a, tb::Format::Csv) == render(b, tb::Format::Csv));
    CHECK(render(a, tb::Format::Json) == render(b, tb::Format::Json));
}

TEST_CASE("spectrum table lists the closed-form levels") {
    const tb::Table t = tb::spectrum_table(rm::RMParams(2.5, 1.0));
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][1] == doctest::Approx(-6.41));
    CHECK(t.rows[1][1] == doctest::Approx(-2.25 - 1.0 / 2.25));
}

TEST_CASE("state table samples the wavefunction") {
    const tb::Table t = tb::state_table(rm::RMParams(1.0, 0.0), 2.0, -5.0, 5.0, 11);
    REQUIRE(t.rows.size() == 11);
    // reflectionless channel at alpha = 1: |psi| = sqrt((k^2+tanh^2 x)/(k^2+1))
    for (const auto& row : t.rows) {
        const double x = row[0], k = 2.0;
        const double want =
            std::sqrt((k * k + std::tanh(x) * std::tanh(x)) / (k * k + 1.0));
        CHECK(row[3] == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("transform table reports a small round-trip error") {
    const tb::Table t = tb::transform_table(rm::RMParams(1.0, 0.0), 3.0, 0.25, 1.5,
                                            4.5, 161, -30.0, 30.0, 901);
    double l2 = -1.0;
    for (const auto& [key, value] : t.metadata) {
        if (key == "roundtrip_rel_l2_error") l2 = std::stod(value);
    }
    CHECK(l2 >= 0.0);
    CHECK(l2 < 1e-2);
}

TEST_CASE("bad ranges are rejected") {
    CHECK_THROWS_AS(tb::coefficients_table(rm::RMParams(1.0, 0.0), 2.0, 1.0, 5),
                    rmscat::DomainError);
    CHECK_THROWS_AS(tb::measure_table(rm::RMParams(1.0, 0.0), 1.0, 2.0, 1),
                    rmscat::DomainError);
}

#include "matmonoid/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace matmonoid;

TEST_CASE("suites run and report") {
    auto const reports = run_suites("formulas", 8);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].passed());
    std::string const text = format_report(reports);
    CHECK(text.find("[formulas]") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    CHECK(run_polydom_suite(200, 1).passed());
    CHECK_THROWS_AS(run_suites("nope"), std::invalid_argument);
}

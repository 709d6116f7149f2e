#include <doctest.h>

#include <stdexcept>

#include "landau/verify.hpp"

using namespace landau;

TEST_CASE("every verification suite passes at its own tolerances") {
    for (const auto& name : verify::suite_names()) {
        CAPTURE(name);
        const auto results = verify::run_suite(name);
        REQUIRE_FALSE(results.empty());
        for (const auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.residual);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("tolerance override propagates to every check") {
    verify::Options options;
    options.tol_override = 1e-30;
    const auto results = verify::run_suite("gauge", options);
    bool any_fail = false;
    for (const auto& r : results) {
        CHECK(r.tolerance == 1e-30);
        if (!r.pass) any_fail = true;
    }
    CHECK(any_fail);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(verify::run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("seeded grids are deterministic") {
    verify::Options options;
    options.seed = 777;
    const auto a = verify::run_suite("gauge", options);
    const auto b = verify::run_suite("gauge", options);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].residual == b[i].residual);
}

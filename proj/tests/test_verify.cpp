#include <doctest.h>

#include "graphcent/errors.hpp"
#include "graphcent/verify.hpp"

namespace gc = graphcent;

TEST_CASE("verification battery passes on a reduced campaign") {
    gc::VerifyConfig config;
    config.trials = 25;
    config.seed = 123;
    config.n_max = 10;
    const std::vector<gc::SuiteResult> suites = gc::run_verification(config);

    REQUIRE(suites.size() == 7);
    CHECK(suites[0].name == "core_bounds");
    CHECK(suites[1].name == "monotonicity");
    CHECK(suites[2].name == "limit_at_k200");
    CHECK(suites[3].name == "renyi2_identity");
    CHECK(suites[4].name == "jain_pairing");
    CHECK(suites[5].name == "threshold_split");
    CHECK(suites[6].name == "betweenness_oracle");

    for (const gc::SuiteResult& suite : suites) {
        CAPTURE(suite.name);
        CHECK(suite.checks > 0);
        CHECK(suite.failures == 0);
        CHECK(suite.messages.empty());
    }
}

TEST_CASE("verification is deterministic for a fixed config") {
    gc::VerifyConfig config;
    config.trials = 5;
    config.seed = 9;
    config.n_max = 8;
    const auto a = gc::run_verification(config);
    const auto b = gc::run_verification(config);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].checks == b[i].checks);
        CHECK(a[i].failures == b[i].failures);
    }
}

TEST_CASE("verification rejects an empty campaign") {
    gc::VerifyConfig config;
    config.trials = 0;
    bool threw = false;
    try {
        (void)gc::run_verification(config);
    } catch (const gc::graph_error& e) {
        threw = e.code() == gc::errc::too_small;
    }
    CHECK(threw);
}

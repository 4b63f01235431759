#include <catch2/catch_amalgamated.hpp>

#include "divlab/witnesses.hpp"

using namespace divlab;

namespace {

void require_reproduced(const WitnessReport& rep) {
    INFO(rep.name);
    for (const auto& c : rep.details) {
        INFO(c.name << ": " << c.note);
        CHECK(c.passed);
    }
    REQUIRE(rep.reproduced);
    CHECK_FALSE(rep.name.empty());
    CHECK_FALSE(rep.claim.empty());
    CHECK_FALSE(rep.details.empty());
}

nlohmann::ordered_json stable_json(const WitnessReport& rep) {
    auto j = rep.to_json();
    j.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("family-size guard") {
    CHECK_THROWS_AS(FamilyParams(0), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(1000001), std::invalid_argument);
    CHECK(FamilyParams(1).n == 1);
    CHECK(FamilyParams(1000000).n == 1000000);
}

TEST_CASE("indexed maximal-common-divisor family") {
    require_reproduced(witness_mcd_infinite(FamilyParams(1)));
    require_reproduced(witness_mcd_infinite(FamilyParams(100)));
}

TEST_CASE("one element with arbitrarily many irreducible divisors") {
    require_reproduced(witness_idf_fails(FamilyParams(1)));
    require_reproduced(witness_idf_fails(FamilyParams(100)));
}

TEST_CASE("every nonunit splits into two nonunits") {
    require_reproduced(witness_antimatter_idf(500));
    require_reproduced(witness_antimatter_idf(500, 99));
}

TEST_CASE("subring product forces a factor into the subring") {
    require_reproduced(witness_claim_fuzz(500));
    require_reproduced(witness_claim_fuzz(500, 99));
}

TEST_CASE("control-domain reproductions") {
    require_reproduced(witness_gauss_fails_z5());
    require_reproduced(witness_aq_z5());
    require_reproduced(witness_prime_like_cases());
    require_reproduced(witness_x_not_primal());
}

TEST_CASE("fuzz drivers hold on reduced batches") {
    require_reproduced(fuzz_dk_prime_like(300));
    require_reproduced(fuzz_primal_z(300));
    require_reproduced(fuzz_primal_r0(300));
    require_reproduced(fuzz_kernel(500));
    require_reproduced(fuzz_gauss_z(300));
    require_reproduced(fuzz_prime_like_z(300));
    require_reproduced(fuzz_prime_like_r(300));
}

TEST_CASE("report serialization is deterministic") {
    auto a = stable_json(witness_mcd_infinite(FamilyParams(20)));
    auto b = stable_json(witness_mcd_infinite(FamilyParams(20)));
    CHECK(a.dump() == b.dump());

    auto c = stable_json(witness_claim_fuzz(200, 7));
    auto d = stable_json(witness_claim_fuzz(200, 7));
    CHECK(c.dump() == d.dump());

    // A different seed is allowed to change inputs but not the verdict.
    auto e = stable_json(witness_claim_fuzz(200, 8));
    CHECK(e["verdict"] == "reproduced");
}

TEST_CASE("report JSON carries the expected fields") {
    auto j = witness_gauss_fails_z5().to_json();
    REQUIRE(j.contains("name"));
    REQUIRE(j.contains("claim"));
    REQUIRE(j.contains("inputs"));
    REQUIRE(j.contains("verdict"));
    REQUIRE(j.contains("checks"));
    REQUIRE(j.contains("elapsed_ms"));
    CHECK(j["verdict"] == "reproduced");
    CHECK(j["inputs"].is_array());
    REQUIRE(j["checks"].is_array());
    REQUIRE_FALSE(j["checks"].empty());
    for (const auto& chk : j["checks"]) {
        CHECK(chk.contains("check"));
        CHECK(chk.contains("passed"));
    }
}

TEST_CASE("witness registry") {
    RunOptions opt;
    opt.n = 5;
    opt.trials = 200;
    for (const auto& name : witness_names()) {
        auto rep = run_witness(name, opt);
        REQUIRE(rep.has_value());
        INFO(name);
        CHECK(rep->reproduced);
    }
    CHECK_FALSE(run_witness("no-such-witness", opt).has_value());
}

TEST_CASE("fuzz registry") {
    RunOptions opt;
    opt.trials = 200;
    for (const auto& name : fuzz_names()) {
        auto rep = run_fuzz(name, opt);
        REQUIRE(rep.has_value());
        INFO(name);
        CHECK(rep->reproduced);
    }
    CHECK_FALSE(run_fuzz("no-such-property", opt).has_value());
}

#include <set>

#include "critcyc/fixtures.hpp"
#include "helpers.hpp"

using namespace critcyc;
using testutil::close_to;

TEST_CASE("catalog sizes and completeness flags") {
    const struct {
        int64 d;
        int64 count;
        bool complete;
    } expected[] = {
        {3, 4, true},  {5, 6, true},   {7, 8, true},   {9, 15, true},
        {11, 20, true}, {13, 18, true}, {15, 46, false}, {17, 28, false},
    };
    for (const auto& e : expected) {
        const FixtureList list = fixture_list(e.d);
        INFO("d=" << e.d);
        CHECK(static_cast<int64>(list.entries.size()) == e.count);
        CHECK(list.complete == e.complete);
        if (auto n = expected_fixture_count(e.d)) CHECK(*n == e.count);
        // Catalog values are pairwise distinct: these lists enumerate values,
        // not constructions.
        for (size_t i = 0; i < list.entries.size(); ++i)
            for (size_t j = i + 1; j < list.entries.size(); ++j) {
                INFO(list.entries[i].label << " vs " << list.entries[j].label);
                CHECK(std::abs(list.entries[i].lambda - list.entries[j].lambda) > 1e-6);
            }
    }
    CHECK_FALSE(expected_fixture_count(15).has_value());
    CHECK_THROWS_AS(fixture_list(19), std::domain_error);
    CHECK_THROWS_AS(fixture_list(4), std::domain_error);
}

TEST_CASE("every in-scope catalog entry is realized at its cataloged value") {
    const struct {
        int64 d;
        int64 deferred;
    } expected[] = {{3, 0}, {5, 0}, {7, 0}, {9, 2}, {11, 8}, {13, 2}, {15, 14}, {17, 10}};
    for (const auto& e : expected) {
        const RealizedList rl = realize_fixtures(e.d);
        INFO("d=" << e.d);
        CHECK(rl.deferred_count == e.deferred);
        CHECK(rl.realized_count ==
              static_cast<int64>(rl.entries.size()) - e.deferred);
        for (const RealizedFixture& r : rl.entries) {
            INFO("entry " << r.entry.label << " via " << route_name(r.entry.route));
            if (!r.pair) {
                CHECK(r.entry.route == Route::deferred);
                continue;
            }
            CHECK(r.report.relative <= 1e-9);
            CHECK(r.lambda_err <= 1e-9);
        }
    }
}

TEST_CASE("theorem routes build theta families with the right values") {
    const FixtureEntry pos{"2 + i*sqrt(3)", {2.0, std::sqrt(3.0)}, Route::theorem, 4, 3};
    const CriticalPair p = build_fixture(7, pos);
    CHECK_THAT(p.lambda, close_to({2.0, std::sqrt(3.0)}, 1e-15));
    CHECK(residual_report(p.f, p.lambda).relative <= 1e-10);
    CHECK(p.provenance.find("k=0,p=1") != std::string::npos);

    const FixtureEntry neg{"-2 - i*sqrt(3)", {-2.0, -std::sqrt(3.0)}, Route::theorem_neg, 4, 3};
    const CriticalPair q = build_fixture(7, neg);
    CHECK_THAT(q.lambda, close_to({-2.0, -std::sqrt(3.0)}, 1e-15));
    CHECK(residual_report(q.f, q.lambda).relative <= 1e-10);
    CHECK(q.provenance.find("k=1,p=2") != std::string::npos);

    const FixtureEntry bad{"x", {0.0, 0.0}, Route::deferred};
    CHECK_THROWS_AS(build_fixture(7, bad), std::logic_error);
}

TEST_CASE("composed routes recurse through their source catalogs") {
    // d = 9 subgroup entries lift the two parabolic values from d = 3.
    const FixtureList nine = fixture_list(9);
    for (const FixtureEntry& e : nine.entries)
        if (e.route == Route::subgroup) {
            const CriticalPair p = build_fixture(9, e);
            CHECK(p.modulus() == 9);
            CHECK_THAT(p.lambda, close_to(e.lambda, 1e-12));
        }
    // d = 15 products multiply d = 3 and d = 5 values.
    const FixtureList fifteen = fixture_list(15);
    int64 products = 0;
    for (const FixtureEntry& e : fifteen.entries)
        if (e.route == Route::product) {
            ++products;
            CHECK(e.p1 == 3);
            CHECK(e.p3 == 5);
        }
    CHECK(products == 18);
}

TEST_CASE("realized pairs are dual to realized pairs") {
    const RealizedList rl = realize_fixtures(5);
    for (const RealizedFixture& r : rl.entries) {
        REQUIRE(r.pair.has_value());
        const cplx dual = 5.0 / r.pair->lambda;
        INFO("entry " << r.entry.label);
        CHECK(residual_report(dft(r.pair->f), dual).relative <= 1e-8);
    }
}

TEST_CASE("catalog labels match their values") {
    // Spot checks that the rendered labels track the numeric entries.
    const FixtureList five = fixture_list(5);
    std::set<std::string> labels;
    for (const auto& e : five.entries) labels.insert(e.label);
    CHECK(labels.count("1"));
    CHECK(labels.count("5"));  // constant_one's lambda = d renders plainly
    CHECK(labels.count("sqrt(5)"));
    CHECK(labels.count("-sqrt(5)"));
    CHECK(labels.count("1 + 2i"));
    CHECK(labels.count("1 - 2i"));
}

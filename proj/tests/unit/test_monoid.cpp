#include "affmon/monoid.hpp"

#include "affmon/catalog.hpp"
#include "affmon/json_io.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace affmon;
using testutil::make_poly;

namespace {

// Example 5.6 of the dimension-3 table, entered by hand: multiplication in
// Q[a]/(a^3 + a + 1).
MonoidStructure hand_coded_a3_a_1() {
    std::vector<Poly> mult = {
        make_poly(6, {{{1, 0, 0, 1, 0, 0}, 1}, {{0, 1, 0, 0, 0, 1}, -1}, {{0, 0, 1, 0, 1, 0}, -1}}),
        make_poly(6, {{{1, 0, 0, 0, 1, 0}, 1},
                      {{0, 1, 0, 1, 0, 0}, 1},
                      {{0, 1, 0, 0, 0, 1}, -1},
                      {{0, 0, 1, 0, 1, 0}, -1},
                      {{0, 0, 1, 0, 0, 1}, -1}}),
        make_poly(6, {{{1, 0, 0, 0, 0, 1}, 1},
                      {{0, 1, 0, 0, 1, 0}, 1},
                      {{0, 0, 1, 1, 0, 0}, 1},
                      {{0, 0, 1, 0, 0, 1}, -1}}),
    };
    return MonoidStructure::create(3, std::move(mult), {1, 0, 0});
}

}  // namespace

TEST_CASE("verify_axioms accepts the classified structures") {
    auto r3a = verify_axioms(build_rank0(3));
    CHECK(r3a.associative);
    CHECK(r3a.commutative);
    CHECK(r3a.unital);
    CHECK_FALSE(r3a.witness.has_value());

    // M+A with b = 1: (x1y1, x1y2 + y1x2)
    auto ma = MonoidStructure::create(
        2,
        {make_poly(4, {{{1, 0, 1, 0}, 1}}),
         make_poly(4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}})},
        {1, 0});
    CHECK(verify_axioms(ma).all());

    CHECK(verify_axioms(hand_coded_a3_a_1()).all());
}

TEST_CASE("broken unit is reported with witness 1") {
    // (x1y1, x2 + y2 + 1) with claimed unit (1,0)
    auto m = MonoidStructure::create(
        2,
        {make_poly(4, {{{1, 0, 1, 0}, 1}}),
         make_poly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{0, 0, 0, 0}, 1}})},
        {1, 0});
    auto report = verify_axioms(m);
    CHECK(report.associative);
    CHECK(report.commutative);
    CHECK_FALSE(report.unital);
    REQUIRE(report.witness.has_value());
    CHECK(*report.witness == Poly::constant(4, Rational(1)));
}

TEST_CASE("associativity failure yields a nonzero witness") {
    // x + y + x^2 y^2 is commutative and unital (unit 0) but not associative.
    auto m = MonoidStructure::create(
        1, {make_poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{2, 2}, 1}})}, {0});
    auto report = verify_axioms(m);
    CHECK_FALSE(report.associative);
    CHECK(report.commutative);
    CHECK(report.unital);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(report.witness->is_zero());
    CHECK(report.witness->nvars() == 3);
}

TEST_CASE("commutativity failure yields a witness") {
    auto m = MonoidStructure::create(
        2,
        {make_poly(4, {{{1, 0, 1, 0}, 1}}), make_poly(4, {{{1, 0, 0, 1}, 1}})},  // (x1y1, x1y2)
        {1, 1});
    auto report = verify_axioms(m);
    CHECK_FALSE(report.commutative);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(report.witness->is_zero());
}

TEST_CASE("mutating the unit breaks the unit axiom") {
    MonoidStructure m = build_corank0(split_algebra(2));
    CHECK(verify_axioms(m).all());
    m.unit[1] = Rational(2);
    auto report = verify_axioms(m);
    CHECK_FALSE(report.unital);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(report.witness->is_zero());
}

TEST_CASE("monoid_equal is coordinate-level identity") {
    auto mm = build_corank0(split_algebra(2));
    CHECK(monoid_equal(mm, mm));

    auto msqrt2 = build_corank0(EtaleAlgebra::create({quadratic_field(2)}));
    CHECK_FALSE(monoid_equal(mm, msqrt2));

    // labels and rank metadata are ignored
    MonoidStructure relabeled = mm;
    relabeled.label = "something else";
    relabeled.rank.reset();
    relabeled.corank.reset();
    CHECK(monoid_equal(mm, relabeled));

    auto catalog_cbrt2 = build_corank0(EtaleAlgebra::create({FieldExtension::create({-2, 0, 0, 1})}));
    std::vector<Poly> example_5_5 = {
        make_poly(6, {{{1, 0, 0, 1, 0, 0}, 1}, {{0, 1, 0, 0, 0, 1}, 2}, {{0, 0, 1, 0, 1, 0}, 2}}),
        make_poly(6, {{{1, 0, 0, 0, 1, 0}, 1}, {{0, 1, 0, 1, 0, 0}, 1}, {{0, 0, 1, 0, 0, 1}, 2}}),
        make_poly(6, {{{1, 0, 0, 0, 0, 1}, 1}, {{0, 1, 0, 0, 1, 0}, 1}, {{0, 0, 1, 1, 0, 0}, 1}}),
    };
    CHECK(monoid_equal(catalog_cbrt2,
                       MonoidStructure::create(3, std::move(example_5_5), {1, 0, 0})));
}

TEST_CASE("monoid json round trip is byte-identical") {
    for (const MonoidStructure& m :
         {build_rank0(3),
          build_corank1(CorankOneSpec::create({EtaleAlgebra::create({quadratic_field(5)})}, {2}))}) {
        std::string bytes = monoid_to_json_string(m);
        MonoidStructure back = monoid_from_json_string(bytes);
        CHECK(monoid_equal(back, m));
        CHECK(back.rank == m.rank);
        CHECK(back.corank == m.corank);
        CHECK(back.label == m.label);
        CHECK(monoid_to_json_string(back) == bytes);
    }
}

TEST_CASE("monoid json rejects malformed input") {
    using nlohmann::json;
    json good = monoid_to_json(build_rank0(2));

    json bad_exps = good;
    bad_exps["mult"][0]["terms"][0]["exps"] = {1, 0, 0};
    CHECK_THROWS_AS(monoid_from_json(bad_exps), SchemaError);

    json bad_order = good;
    REQUIRE(bad_order["mult"][0]["terms"].size() == 2);
    std::swap(bad_order["mult"][0]["terms"][0], bad_order["mult"][0]["terms"][1]);
    CHECK_THROWS_AS(monoid_from_json(bad_order), SchemaError);

    json short_unit = good;
    short_unit["unit"] = {"0"};
    CHECK_THROWS_AS(monoid_from_json(short_unit), SchemaError);

    json bad_rank = good;
    bad_rank["rank"] = 2;
    bad_rank["corank"] = 2;
    CHECK_THROWS_AS(monoid_from_json(bad_rank), SchemaError);

    CHECK_THROWS_AS(monoid_from_json_string("not json"), json::parse_error);
}

TEST_CASE("structure validation") {
    CHECK_THROWS_AS(MonoidStructure::create(2, {Poly(4)}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(MonoidStructure::create(2, {Poly(3), Poly(3)}, {0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MonoidStructure::create(2, {Poly(4), Poly(4)}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(MonoidStructure::create(2, {Poly(4), Poly(4)}, {0, 0}, 1, 2),
                    std::invalid_argument);
}

#include "affmon/etale.hpp"

#include "affmon/json_io.hpp"
#include "affmon/monoid.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace affmon;
using testutil::make_poly;

namespace {

EtaleAlgebra cbrt2() { return EtaleAlgebra::create({FieldExtension::create({-2, 0, 0, 1})}); }

EtaleAlgebra cubic_a3_a_1() {  // Q[a]/(a^3 + a + 1)
    return EtaleAlgebra::create({FieldExtension::create({1, 1, 0, 1})});
}

}  // namespace

TEST_CASE("field extension validation") {
    CHECK_NOTHROW(FieldExtension::create({0, 1}));        // a
    CHECK_NOTHROW(FieldExtension::create({Rational(7), Rational(1)}));  // a + 7
    CHECK_NOTHROW(FieldExtension::create({-2, 0, 1}));    // a^2 - 2
    CHECK_NOTHROW(FieldExtension::create({1, 1, 0, 1}));  // a^3 + a + 1
    CHECK_THROWS_AS(FieldExtension::create({-4, 0, 1}), std::invalid_argument);   // (a-2)(a+2)
    CHECK_THROWS_AS(FieldExtension::create({2, 3, 1}), std::invalid_argument);    // (a+1)(a+2)
    CHECK_THROWS_AS(FieldExtension::create({-1, 0, 0, 1}), std::invalid_argument);  // root 1
    CHECK_THROWS_AS(FieldExtension::create({0, 0, 1}), std::invalid_argument);    // root 0
    CHECK_THROWS_AS(FieldExtension::create({Rational(1)}), std::invalid_argument);  // degree 0
    CHECK_THROWS_AS(FieldExtension::create({0, 0, 2}), std::invalid_argument);    // not monic
    // rational but non-integer root 1/2 of a^2 + (1/2)a - 1/2
    CHECK_THROWS_AS(FieldExtension::create({Rational(-1, 2), Rational(1, 2), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FieldExtension::create({1, 0, 0, 0, 1}), std::invalid_argument);  // degree 4
    CHECK_NOTHROW(FieldExtension::create({1, 0, 0, 0, 1}, /*assume_irreducible=*/true));
}

TEST_CASE("ext_multiply") {
    // Q itself: componentwise, independent of the (monic linear) minpoly
    auto q = rational_field().multiplication();
    REQUIRE(q.size() == 1);
    CHECK(q[0] == make_poly(2, {{{1, 1}, 1}}));

    // a^2 - 5: (x1y1 + 5x2y2, x1y2 + x2y1)
    auto quad = quadratic_field(5).multiplication();
    REQUIRE(quad.size() == 2);
    CHECK(quad[0] == make_poly(4, {{{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, 5}}));
    CHECK(quad[1] == make_poly(4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}}));

    // a^3 - 2: (x1y1 + 2x2y3 + 2x3y2, x1y2 + x2y1 + 2x3y3, x1y3 + x2y2 + x3y1)
    auto cb = FieldExtension::create({-2, 0, 0, 1}).multiplication();
    REQUIRE(cb.size() == 3);
    CHECK(cb[0] == make_poly(6, {{{1, 0, 0, 1, 0, 0}, 1},
                                 {{0, 1, 0, 0, 0, 1}, 2},
                                 {{0, 0, 1, 0, 1, 0}, 2}}));
    CHECK(cb[1] == make_poly(6, {{{1, 0, 0, 0, 1, 0}, 1},
                                 {{0, 1, 0, 1, 0, 0}, 1},
                                 {{0, 0, 1, 0, 0, 1}, 2}}));
    CHECK(cb[2] == make_poly(6, {{{1, 0, 0, 0, 0, 1}, 1},
                                 {{0, 1, 0, 0, 1, 0}, 1},
                                 {{0, 0, 1, 1, 0, 0}, 1}}));
}

TEST_CASE("a^3 + a + 1 multiplication matches the hand reduction") {
    // a^3 = -a - 1, a^4 = -a^2 - a
    auto mult = cubic_a3_a_1().multiplication();
    REQUIRE(mult.size() == 3);
    CHECK(mult[0] == make_poly(6, {{{1, 0, 0, 1, 0, 0}, 1},
                                   {{0, 1, 0, 0, 0, 1}, -1},
                                   {{0, 0, 1, 0, 1, 0}, -1}}));
    CHECK(mult[1] == make_poly(6, {{{1, 0, 0, 0, 1, 0}, 1},
                                   {{0, 1, 0, 1, 0, 0}, 1},
                                   {{0, 1, 0, 0, 0, 1}, -1},
                                   {{0, 0, 1, 0, 1, 0}, -1},
                                   {{0, 0, 1, 0, 0, 1}, -1}}));
    CHECK(mult[2] == make_poly(6, {{{1, 0, 0, 0, 0, 1}, 1},
                                   {{0, 1, 0, 0, 1, 0}, 1},
                                   {{0, 0, 1, 1, 0, 0}, 1},
                                   {{0, 0, 1, 0, 0, 1}, -1}}));
}

TEST_CASE("algebra_multiply block assembly") {
    auto qq = split_algebra(2).multiplication();
    REQUIRE(qq.size() == 2);
    CHECK(qq[0] == make_poly(4, {{{1, 0, 1, 0}, 1}}));
    CHECK(qq[1] == make_poly(4, {{{0, 1, 0, 1}, 1}}));

    // Q x Q(sqrt(d)), d = 7: (x1y1, x2y2 + 7x3y3, x2y3 + x3y2)
    auto mixed = EtaleAlgebra::create({rational_field(), quadratic_field(7)});
    CHECK(mixed.dim() == 3);
    auto mm = mixed.multiplication();
    REQUIRE(mm.size() == 3);
    CHECK(mm[0] == make_poly(6, {{{1, 0, 0, 1, 0, 0}, 1}}));
    CHECK(mm[1] == make_poly(6, {{{0, 1, 0, 0, 1, 0}, 1}, {{0, 0, 1, 0, 0, 1}, 7}}));
    CHECK(mm[2] == make_poly(6, {{{0, 1, 0, 0, 0, 1}, 1}, {{0, 0, 1, 0, 1, 0}, 1}}));

    CHECK(mixed.unit() == std::vector<Rational>{1, 1, 0});
}

TEST_CASE("norm forms") {
    CHECK(norm_form(split_algebra(2)).poly == make_poly(2, {{{1, 1}, 1}}));
    CHECK(norm_form(split_algebra(3)).poly == make_poly(3, {{{1, 1, 1}, 1}}));

    CHECK(norm_form(EtaleAlgebra::create({quadratic_field(3)})).poly ==
          make_poly(2, {{{2, 0}, 1}, {{0, 2}, -3}}));

    CHECK(norm_form(cbrt2()).poly == make_poly(3, {{{3, 0, 0}, 1},
                                                   {{0, 3, 0}, 2},
                                                   {{0, 0, 3}, 4},
                                                   {{1, 1, 1}, -6}}));
}

TEST_CASE("norm is multiplicative and 1 on the unit") {
    for (const EtaleAlgebra& a :
         {split_algebra(3), EtaleAlgebra::create({quadratic_field(-1)}),
          EtaleAlgebra::create({rational_field(), quadratic_field(5)}), cbrt2(),
          cubic_a3_a_1()}) {
        const int n = a.dim();
        NormForm nf = norm_form(a);
        auto mult = a.multiplication();

        std::vector<LaurentPoly> xy;
        for (const Poly& p : mult) xy.push_back(p.to_laurent());
        LaurentPoly lhs = nf.poly.subst(xy);

        std::vector<LaurentPoly> xs, ys;
        for (int i = 0; i < n; ++i) xs.push_back(LaurentPoly::variable(2 * n, i));
        for (int i = 0; i < n; ++i) ys.push_back(LaurentPoly::variable(2 * n, n + i));
        LaurentPoly rhs = nf.poly.subst(xs) * nf.poly.subst(ys);
        CHECK(lhs == rhs);

        std::vector<LaurentPoly> unit_images;
        for (const Rational& u : a.unit()) unit_images.push_back(LaurentPoly::constant(0, u));
        CHECK(nf.poly.subst(unit_images) == LaurentPoly::constant(0, Rational(1)));
    }
}

TEST_CASE("algebra multiplication is a commutative monoid") {
    for (const EtaleAlgebra& a :
         {split_algebra(2), EtaleAlgebra::create({quadratic_field(2)}), cbrt2(),
          EtaleAlgebra::create({rational_field(), quadratic_field(-7)})}) {
        auto report = verify_axioms(MonoidStructure::create(a.dim(), a.multiplication(), a.unit()));
        CHECK(report.associative);
        CHECK(report.commutative);
        CHECK(report.unital);
    }
}

TEST_CASE("quadratic_iso") {
    CHECK(quadratic_iso(8, 2));
    CHECK_FALSE(quadratic_iso(2, 3));
    CHECK(quadratic_iso(Rational(1, 2), 2));  // (1/2)/2 = 1/4
    CHECK_FALSE(quadratic_iso(-2, 2));
    CHECK_THROWS_AS(quadratic_iso(4, 2), std::domain_error);
    CHECK_THROWS_AS(quadratic_iso(2, 0), std::domain_error);
    CHECK_THROWS_AS(quadratic_iso(Rational(9, 4), 5), std::domain_error);
}

TEST_CASE("algebra json round trip") {
    auto a = EtaleAlgebra::create({rational_field(), quadratic_field(Rational(-1, 2))});
    auto j = algebra_to_json(a);
    auto back = algebra_from_json(j);
    CHECK(back == a);
    CHECK(canonical_dump(algebra_to_json(back)) == canonical_dump(j));

    nlohmann::json reducible = {{"factors", {{{"minpoly_coeffs", {"-4", "0", "1"}}}}}};
    CHECK_THROWS_AS(algebra_from_json(reducible), std::invalid_argument);
    nlohmann::json empty = {{"factors", nlohmann::json::array()}};
    CHECK_THROWS_AS(algebra_from_json(empty), SchemaError);
}

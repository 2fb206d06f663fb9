#include "affmon/poly.hpp"

#include "affmon/json_io.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace affmon;
using testutil::make_poly;
using testutil::random_poly;

TEST_CASE("rational basics") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::from_string("8/2") == Rational(4));
    CHECK(Rational::from_string("-7").str() == "-7");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(1, 3) + Rational(2, 3) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(4).is_square());
    CHECK(Rational(4, 9).is_square());
    CHECK_FALSE(Rational(2).is_square());
    CHECK_FALSE(Rational(-4).is_square());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(" 1"), std::invalid_argument);
}

TEST_CASE("poly_add identities") {
    // dimension-1 x,y space
    Poly x1 = Poly::variable(2, 0), y1 = Poly::variable(2, 1);
    CHECK(x1 + y1 + Poly(2) == x1 + y1);

    Poly p = x1 * x1 - Poly::constant(2, Rational(1));
    CHECK(p + Poly::constant(2, Rational(1)) == x1 * x1);

    // like-term merge in the dimension-2 space (x1,x2,y1,y2)
    Poly t = make_poly(4, {{{0, 1, 0, 1}, 2}});
    Poly u = make_poly(4, {{{0, 1, 0, 1}, 1}});
    CHECK(t + u == make_poly(4, {{{0, 1, 0, 1}, 3}}));

    CHECK_THROWS_AS(Poly::variable(2, 0) + Poly::variable(3, 0), std::invalid_argument);
}

TEST_CASE("poly_mul") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    CHECK((x - y) * (x + y) == x * x - y * y);

    std::mt19937_64 rng(7);
    Poly p = random_poly(rng, 2, 3, 5);
    CHECK(p * Poly::constant(2, Rational(1)) == p);

    // (x1*y2 + y1*x2)^2, frozen from the direct expansion
    Poly s = make_poly(4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}});
    Poly expected =
        make_poly(4, {{{2, 0, 0, 2}, 1}, {{1, 1, 1, 1}, 2}, {{0, 2, 2, 0}, 1}});
    CHECK(s * s == expected);
}

TEST_CASE("poly_pow") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    CHECK(x1.pow(0) == Poly::constant(2, Rational(1)));
    CHECK((x1 + x2).pow(2) == x1 * x1 + Poly::constant(2, Rational(2)) * x1 * x2 + x2 * x2);

    Poly s = make_poly(4, {{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, 1}});
    Poly expected = make_poly(4, {{{3, 0, 0, 3}, 1},
                                  {{2, 1, 1, 2}, 3},
                                  {{1, 2, 2, 1}, 3},
                                  {{0, 3, 3, 0}, 1}});
    CHECK(s.pow(3) == expected);
    CHECK(s.pow(3) == s * s * s);  // repeated-multiplication oracle
}

TEST_CASE("poly_subst") {
    // x1*x2 with images [x, x^-1]
    Poly p = Poly::variable(2, 0) * Poly::variable(2, 1);
    LaurentPoly x = LaurentPoly::variable(1, 0);
    CHECK(p.subst({x, x.pow(-1)}) == LaurentPoly::constant(1, Rational(1)));

    // x1^2 * v with images [t, t^-2 * x]: the i o i^-1 cancellation
    Poly q = Poly::variable(2, 0).pow(2) * Poly::variable(2, 1);
    LaurentPoly t = LaurentPoly::variable(2, 0);
    LaurentPoly xv = LaurentPoly::variable(2, 1);
    CHECK(q.subst({t, t.pow(-2) * xv}) == xv);

    // x1 + x2 with images [y1^2, y2^2]
    Poly r = Poly::variable(2, 0) + Poly::variable(2, 1);
    LaurentPoly y1 = LaurentPoly::variable(2, 0), y2 = LaurentPoly::variable(2, 1);
    CHECK(r.subst({y1 * y1, y2 * y2}) == (y1 * y1 + y2 * y2));

    CHECK_THROWS_AS(r.subst({y1}), std::invalid_argument);
    // negative power of a two-term image
    LaurentPoly bad = LaurentPoly::variable(1, 0) + LaurentPoly::constant(1, Rational(1));
    LaurentPoly xinv = LaurentPoly::variable(1, 0).pow(-1);
    CHECK_THROWS_AS(xinv.subst({bad}), std::invalid_argument);
}

TEST_CASE("poly_divexact") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    auto q1 = (x * x - y * y).divexact(x - y);
    REQUIRE(q1.has_value());
    CHECK(*q1 == x + y);

    Poly num = make_poly(4, {{{1, 1, 1, 1}, 2}});
    Poly den = make_poly(4, {{{1, 0, 1, 0}, 1}});
    auto q2 = num.divexact(den);
    REQUIRE(q2.has_value());
    CHECK(*q2 == make_poly(4, {{{0, 1, 0, 1}, 2}}));

    Poly one = Poly::constant(2, Rational(1));
    CHECK_FALSE((x + one).divexact(x).has_value());
    CHECK_THROWS_AS(x.divexact(Poly(2)), std::domain_error);
}

TEST_CASE("polymat_det") {
    Poly one3 = Poly::constant(3, Rational(1)), zero3(3);
    PolyMatrix id(3, 3, {one3, zero3, zero3, zero3, one3, zero3, zero3, zero3, one3});
    CHECK(polymat_det(id) == one3);

    // [[x1, 5*x2], [x2, x1]] in (x1,x2)
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    PolyMatrix q(2, 2, {x1, Poly::constant(2, Rational(5)) * x2, x2, x1});
    CHECK(polymat_det(q) == x1 * x1 - Poly::constant(2, Rational(5)) * x2 * x2);

    // left multiplication in Q(cbrt(2)): frozen value plus the cofactor oracle
    Poly a1 = Poly::variable(3, 0), a2 = Poly::variable(3, 1), a3 = Poly::variable(3, 2);
    Poly two = Poly::constant(3, Rational(2));
    PolyMatrix cbrt(3, 3, {a1, two * a3, two * a2, a2, a1, two * a3, a3, a2, a1});
    Poly expected = a1.pow(3) + two * a2.pow(3) + two * two * a3.pow(3) -
                    Poly::constant(3, Rational(6)) * a1 * a2 * a3;
    CHECK(polymat_det(cbrt) == expected);
    CHECK(testutil::cofactor_det(cbrt) == expected);

    CHECK_THROWS_AS(polymat_det(PolyMatrix(1, 2, {x1, x2})), std::invalid_argument);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        std::vector<Poly> entries;
        for (int i = 0; i < n * n; ++i) entries.push_back(random_poly(rng, 2, 2, 3));
        PolyMatrix m(n, n, std::move(entries));
        CHECK(polymat_det(m) == testutil::cofactor_det(m));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const int nvars = 1 + static_cast<int>(rng() % 4);
        Poly a = random_poly(rng, nvars, 4, 6);
        Poly b = random_poly(rng, nvars, 4, 6);
        Poly c = random_poly(rng, nvars, 4, 6);
        Poly one = Poly::constant(nvars, Rational(1));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Poly(nvars) == a);
        CHECK(a * one == a);
        CHECK(a - a == Poly(nvars));
    }
}

TEST_CASE("divexact inverts multiplication") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int nvars = 1 + static_cast<int>(rng() % 3);
        Poly q = random_poly(rng, nvars, 3, 4);
        Poly d = random_poly(rng, nvars, 3, 4);
        if (d.is_zero()) continue;
        Poly p = q * d;
        auto back = p.divexact(d);
        REQUIRE(back.has_value());
        CHECK(*back == q);
        CHECK(*back * d == p);
    }
}

TEST_CASE("subst with identity images is the identity") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int nvars = 1 + static_cast<int>(rng() % 4);
        Poly p = random_poly(rng, nvars, 4, 6);
        std::vector<LaurentPoly> ids;
        for (int i = 0; i < nvars; ++i) ids.push_back(LaurentPoly::variable(nvars, i));
        CHECK(p.subst(ids) == p.to_laurent());
    }
}

TEST_CASE("laurent to poly conversion") {
    LaurentPoly x = LaurentPoly::variable(2, 0), y = LaurentPoly::variable(2, 1);
    LaurentPoly ok = x * y + y;
    auto p = ok.to_poly();
    REQUIRE(p.has_value());
    CHECK(p->to_laurent() == ok);

    LaurentPoly bad = x.pow(-1) + y;
    CHECK_FALSE(bad.to_poly().has_value());
    CHECK(bad.min_exponent(0) == -1);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Poly q = random_poly(rng, 3, 4, 5);
        CHECK(*q.to_laurent().to_poly() == q);
    }
}

TEST_CASE("canonical serialization equality") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        Poly a = random_poly(rng, 3, 3, 5);
        Poly b = random_poly(rng, 3, 3, 5);
        bool same_json = canonical_dump(poly_to_json(a)) == canonical_dump(poly_to_json(b));
        CHECK(same_json == (a == b));
        CHECK(poly_from_json(poly_to_json(a)) == a);
    }
}

TEST_CASE("poly json rejects non-canonical input") {
    using nlohmann::json;
    Poly p = make_poly(2, {{{1, 0}, 1}, {{0, 1}, 2}});
    json j = poly_to_json(p);
    REQUIRE(j["terms"].size() == 2);

    json swapped = j;
    std::swap(swapped["terms"][0], swapped["terms"][1]);
    CHECK_THROWS_AS(poly_from_json(swapped), SchemaError);

    json bad_len = j;
    bad_len["terms"][0]["exps"] = {1, 0, 0};
    CHECK_THROWS_AS(poly_from_json(bad_len), SchemaError);

    json not_reduced = j;
    not_reduced["terms"][0]["num"] = "2";
    not_reduced["terms"][0]["den"] = "4";
    CHECK_THROWS_AS(poly_from_json(not_reduced), SchemaError);

    json zero_coeff = j;
    zero_coeff["terms"][0]["num"] = "0";
    CHECK_THROWS_AS(poly_from_json(zero_coeff), SchemaError);

    json negative_exp = j;
    negative_exp["terms"][0]["exps"] = {-1, 0};
    CHECK_THROWS_AS(poly_from_json(negative_exp), SchemaError);
}

TEST_CASE("poly rendering") {
    Poly p = make_poly(2, {{{2, 0}, 1}, {{0, 0}, -3}});
    CHECK(p.str({"x", "y"}) == "x^2 - 3");
    CHECK(Poly(2).str({"x", "y"}) == "0");
    Poly q = make_poly(2, {{{1, 1}, -1}});
    CHECK(q.str({"x", "y"}) == "-x*y");
}

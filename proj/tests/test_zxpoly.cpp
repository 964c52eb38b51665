#include "montes/zxpoly.hpp"

#include <doctest.h>

#include <random>

using namespace montes;

namespace {

ZxPoly random_zx(std::mt19937_64& rng, long maxdeg, long coeff_range, bool monic) {
    long deg = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(maxdeg));
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c)
        x = Int(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * coeff_range + 1)) -
                coeff_range);
    if (monic || c.back() == 0) c.back() = 1;
    return ZxPoly(std::move(c));
}

}  // namespace

TEST_CASE("parse_poly basics") {
    ZxPoly f = parse_poly("x^30 - 7");
    CHECK(f.degree() == 30);
    CHECK(f.coeff(30) == 1);
    CHECK(f.coeff(0) == -7);

    CHECK(parse_poly("x^2+x+1") == ZxPoly({1, 1, 1}));
    CHECK(parse_poly("x^4 + 2x^2 - x^2") == ZxPoly({0, 0, 1, 0, 1}));
    CHECK(parse_poly("2*x^3 - x + 5") == ZxPoly({5, -1, 0, 2}));
    CHECK(parse_poly("-x + 3") == ZxPoly({3, -1}));
    CHECK(parse_poly("  42 ") == ZxPoly::constant(42));
    CHECK(parse_poly("x - x") == ZxPoly::zero());
    CHECK(parse_poly("123456789012345678901234567890") ==
          ZxPoly::constant(Int("123456789012345678901234567890")));
}

TEST_CASE("parse_poly errors carry offsets") {
    CHECK_THROWS_AS(parse_poly(""), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x^"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x + + 1"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("y + 1"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("3*"), PolyParseError);
    try {
        parse_poly("x^2 + @");
        CHECK(false);
    } catch (const PolyParseError& e) {
        CHECK(e.offset() == 6);
    }
}

TEST_CASE("print/parse round trip") {
    CHECK(parse_poly(ZxPoly({-7, 0, 1}).to_string()) == ZxPoly({-7, 0, 1}));
    CHECK(ZxPoly({0, -1, 0, 2}).to_string() == "2*x^3 - x");
    CHECK(ZxPoly::zero().to_string() == "0");
    CHECK(parse_poly("0") == ZxPoly::zero());

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        ZxPoly f = random_zx(rng, 12, 50, false);
        CHECK(parse_poly(f.to_string()) == f);
    }
}

TEST_CASE("phi_expand fixed examples") {
    SUBCASE("base x") {
        PhiExpansion e = phi_expand(ZxPoly::power_minus(3, Int(9)), ZxPoly::variable());
        REQUIRE(e.terms.size() == 4);
        CHECK(e.terms[0] == ZxPoly::constant(-9));
        CHECK(e.terms[1] == ZxPoly::zero());
        CHECK(e.terms[2] == ZxPoly::zero());
        CHECK(e.terms[3] == ZxPoly::constant(1));
    }
    SUBCASE("x^4+1 in base x^2+1") {
        PhiExpansion e = phi_expand(ZxPoly({1, 0, 0, 0, 1}), ZxPoly({1, 0, 1}));
        REQUIRE(e.terms.size() == 3);
        CHECK(e.terms[0] == ZxPoly::constant(2));
        CHECK(e.terms[1] == ZxPoly::constant(-2));
        CHECK(e.terms[2] == ZxPoly::constant(1));
        CHECK(e.reconstruct() == ZxPoly({1, 0, 0, 0, 1}));
    }
    SUBCASE("x^4+1 in base x+1") {
        PhiExpansion e = phi_expand(ZxPoly({1, 0, 0, 0, 1}), ZxPoly({1, 1}));
        REQUIRE(e.terms.size() == 5);
        CHECK(e.terms[0] == ZxPoly::constant(2));
        CHECK(e.terms[1] == ZxPoly::constant(-4));
        CHECK(e.terms[2] == ZxPoly::constant(6));
        CHECK(e.terms[3] == ZxPoly::constant(-4));
        CHECK(e.terms[4] == ZxPoly::constant(1));
    }
    CHECK_THROWS_AS(phi_expand(ZxPoly({1, 1}), ZxPoly({1, 2})), std::domain_error);
    CHECK_THROWS_AS(phi_expand(ZxPoly({1, 1}), ZxPoly::constant(3)), std::domain_error);
}

TEST_CASE("phi_expand reconstruction on random pairs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        ZxPoly f = random_zx(rng, 64, 100, false);
        ZxPoly phi = random_zx(rng, 6, 10, true);
        PhiExpansion e = phi_expand(f, phi);
        CHECK(e.reconstruct() == f);
        for (const ZxPoly& a : e.terms) CHECK(a.degree() < phi.degree());
        if (!e.terms.empty()) CHECK(!e.terms.back().is_zero());
    }
}

TEST_CASE("reduce_mod_p") {
    ZxPoly f = ZxPoly::power_minus(30, Int(7));
    FpPoly f2 = reduce_mod_p(f, 2);
    CHECK(f2.degree() == 30);
    CHECK(f2.coeff(0) == 1);

    FpPoly f7 = reduce_mod_p(f, 7);
    CHECK(f7.degree() == 30);
    CHECK(f7.coeff(0) == 0);

    // x^4 + 1 = (x+1)^4 over F_2
    auto factors = factor(reduce_mod_p(ZxPoly({1, 0, 0, 0, 1}), 2));
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first.coeffs() == std::vector<std::int64_t>{1, 1});
    CHECK(factors[0].second == 4);
}

TEST_CASE("content_vp") {
    CHECK(content_vp(ZxPoly({8, 12}), Int(2)) == Valuation::finite(2));
    CHECK(content_vp(ZxPoly({8, 3}), Int(2)) == Valuation::finite(0));
    CHECK(content_vp(ZxPoly::zero(), Int(2)).is_infinite());
}

TEST_CASE("discriminant fixed values") {
    for (long m : {2L, 3L, -5L, 11L})
        CHECK(discriminant(ZxPoly::power_minus(2, Int(m))) == 4 * m);
    CHECK(discriminant(ZxPoly::power_minus(3, Int(2))) == -108);
    CHECK_THROWS_AS(discriminant(ZxPoly({1, 1})), std::domain_error);
    CHECK_THROWS_AS(discriminant(ZxPoly({1, 0, 2})), std::domain_error);
}

TEST_CASE("discriminant of x^n - m matches the closed form") {
    for (long n : {6L, 10L, 15L, 30L}) {
        for (long m : {2L, -2L, 3L, -3L, 7L, -7L, 10L, -10L}) {
            Int d = discriminant(ZxPoly::power_minus(n, Int(m)));
            Int expected = int_pow(n, static_cast<unsigned long>(n));
            Int mm;
            mpz_pow_ui(mm.get_mpz_t(), Int(std::abs(m)).get_mpz_t(),
                       static_cast<unsigned long>(n - 1));
            expected *= mm;
            CHECK(abs(d) == expected);
        }
    }
}

TEST_CASE("resultant basics") {
    // res(x^2 - 1, x - 2) = value of x^2 - 1 at 2 (monic linear divisor)
    CHECK(resultant(ZxPoly({-1, 0, 1}), ZxPoly({-2, 1})) == 3);
    CHECK(resultant(ZxPoly({-1, 0, 1}), ZxPoly({1, 1})) == 0);  // shared root -1
    CHECK(resultant(ZxPoly::constant(3), ZxPoly({1, 0, 1})) == 9);
}

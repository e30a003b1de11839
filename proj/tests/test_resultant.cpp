#include "test_helpers.hpp"

#include <muttjeff/chebyshev.hpp>
#include <muttjeff/resultant.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace muttjeff;
using mjtest::PolyGen;

namespace {
RatPoly ipoly(std::initializer_list<long> cs) {
    std::vector<BigRat> v;
    for (long c : cs) v.emplace_back(c);
    return RatPoly(std::move(v));
}
} // namespace

TEST_CASE("resultant: worked examples") {
    CHECK(resultant(ipoly({-1, 0, 1}), ipoly({-1, 1})) == 0);
    CHECK(resultant(ipoly({-1, 0, 1}), ipoly({0, 1})) == -1);
    CHECK(resultant(cheb_u(4), cheb_u(3)) == 4096);
    CHECK_THROWS_AS(resultant(RatPoly(), ipoly({1, 1})), std::domain_error);
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
    PolyGen gen;
    for (int i = 0; i < 80; ++i) {
        RatPoly p = gen.poly(7, true), q = gen.poly(7, true);
        CHECK(resultant(p, q) == sylvester_resultant(p, q));
    }
}

TEST_CASE("resultant symmetry and multiplicativity") {
    PolyGen gen;
    for (int i = 0; i < 50; ++i) {
        RatPoly p = gen.poly(5, true), q = gen.poly(5, true), r = gen.poly(4, true);
        BigRat sym = resultant(q, p);
        if ((p.degree() * q.degree()) % 2) sym = -sym;
        CHECK(resultant(p, q) == sym);
        CHECK(resultant(p, q * r) == resultant(p, q) * resultant(p, r));
    }
}

TEST_CASE("discriminant: worked examples and conventions") {
    CHECK(disc(cheb_t(2)) == 8);
    CHECK(disc(cheb_u(3)) == 2048);
    CHECK(disc(ipoly({1, 0, 1})) == -4);
    CHECK(disc(ipoly({5, 3})) == 1); // degree 1 convention
    CHECK_THROWS_AS(disc(RatPoly(7)), std::domain_error);
}

TEST_CASE("discriminant matches the explicit quadratic and cubic formulas") {
    PolyGen gen;
    for (int i = 0; i < 50; ++i) {
        BigRat a = gen.coeff(), b = gen.coeff(), c = gen.coeff(), d = gen.coeff();
        if (a == 0) a = 1;
        CHECK(disc(RatPoly{c, b, a}) == b * b - 4 * a * c);
        // disc(ax^3+bx^2+cx+d) = 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2
        CHECK(disc(RatPoly{d, c, b, a}) ==
              18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                  27 * a * a * d * d);
    }
}

TEST_CASE("bivariate resultant via interpolation matches direct substitution") {
    PolyGen gen;
    for (int i = 0; i < 20; ++i) {
        // z-polynomials with degree-<=2 x-coefficients and constant leading terms
        std::vector<RatPoly> ac, bc;
        int da = 1 + gen.small_int(1, 3), db = 1 + gen.small_int(1, 3);
        for (int k = 0; k < da; ++k) ac.push_back(gen.poly(2));
        ac.push_back(RatPoly(BigRat(1 + gen.small_int(0, 8))));
        for (int k = 0; k < db; ++k) bc.push_back(gen.poly(2));
        bc.push_back(RatPoly(BigRat(1 + gen.small_int(0, 8))));
        BivarPoly a{ac}, b{bc};
        RatPoly res = resultant_z(a, b);
        for (int pt = -2; pt <= 2; ++pt) {
            BigRat x0(pt);
            CHECK(res(x0) == resultant(eval_x(a, x0), eval_x(b, x0)));
        }
    }
}

TEST_CASE("bivariate discriminant of a quadratic in z") {
    // disc_z(-2z^2 + 2x) = b^2 - 4ac scaled: equals 16x
    BivarPoly a{RatPoly{BigRat(0), BigRat(2)}, RatPoly(), RatPoly(BigRat(-2))};
    CHECK(disc_z(a) == RatPoly{BigRat(0), BigRat(16)});
}

#include "test_helpers.hpp"

#include <muttjeff/checks.hpp>
#include <muttjeff/transform.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace muttjeff;

namespace {
RatPoly ipoly(std::initializer_list<long> cs) {
    std::vector<BigRat> v;
    for (long c : cs) v.emplace_back(c);
    return RatPoly(std::move(v));
}
} // namespace

TEST_CASE("transform_su at n = 1") {
    BivarPoly su = transform_su(1);
    // 2xz - (2/3)z^3
    CHECK(su.degree() == 3);
    CHECK(su[1] == ipoly({0, 2}));
    CHECK(su[3] == RatPoly(BigRat(-2, 3)));
    CHECK(su[0].is_zero());
    CHECK(su[2].is_zero());
}

TEST_CASE("transform_su: routes, derivative and leading coefficient, n = 1..15") {
    for (int n = 1; n <= 15; ++n) {
        BivarPoly su = transform_su(n); // throws if the two routes disagree
        CHECK(su.degree() == 2 * n + 1);
        CHECK(su.derivative() == detail::integrand(n));
        CHECK(su.lc() ==
              RatPoly(BigRat(-(2L * n - 1), 2L * n + 1) * rat_pow(BigRat(2), 2 * n - 1)));
    }
}

TEST_CASE("poly_r: examples and structure") {
    CHECK(poly_r(1) == ipoly({0, 0, 0, 4}));
    CHECK(poly_r(2) == ipoly({0, 0, 0, -40, 0, 48}));
    for (int n = 1; n <= 10; ++n) {
        RatPoly r = poly_r(n);
        CHECK(r.degree() == 2 * n + 1);
        CHECK(r[0] == 0);
        CHECK(r[1] == 0);
        CHECK(r[2] == 0);
        CHECK(checks::sum_t(n).pass);
        CHECK(checks::linear_comb(n).pass);
    }
}

TEST_CASE("mutt: examples and invariants") {
    CHECK(mutt_raw(2) == ipoly({-40, 48}));
    CHECK(mutt_raw(1) == RatPoly(4));
    CHECK(mutt_prim(6) == ipoly({-143, 2002, -9152, 18304, -16640, 5632}));
    CHECK(content_primitive(mutt_raw(6)).first == 8);
    for (int n = 1; n <= 15; ++n) {
        CHECK(checks::mutt_props(n).pass);
        CHECK(abs(mutt_raw(n)(BigRat(0))) == BigRat(4L * (2 * n - 1) * (2 * n + 1) * n, 3));
    }
}

TEST_CASE("uprime_sqrt: examples") {
    CHECK(uprime_sqrt(1) == RatPoly(2));
    CHECK(uprime_sqrt(3) == ipoly({6, -96, 160}));
    for (int n = 1; n <= 15; ++n) {
        RatPoly u = uprime_sqrt(n);
        CHECK(u.degree() == n - 1);
        CHECK(u.lc() == BigRat(2L * n - 1) * rat_pow(BigRat(2), 2 * n - 1));
    }
}

TEST_CASE("jeff: examples and shift consistency") {
    CHECK(jeff(1) == RatPoly(1));
    CHECK(jeff(2) == ipoly({-1, 30}));
    CHECK(jeff(3) == ipoly({127, -9520, 19600}));
    CHECK(jeff(6) == RatPoly{BigRat("-2606483707"), BigRat("826014609706"),
                             BigRat("-10410224034496"), BigRat("40393170792832"),
                             BigRat("-60482893968640"), BigRat("30616119778816")});
    for (int n = 2; n <= 15; ++n) {
        CHECK(jeff(n).degree() == n - 1);
        CHECK(content_primitive(jeff(n)).first == 1);
        CHECK(checks::jeff_shift(n).pass);
    }
}

TEST_CASE("jeff oracle: resultant route equals the shift construction squared") {
    DecompositionResult d2 = jeff_oracle(2);
    CHECK(d2.parts.size() == 1);
    CHECK(d2.parts[0].first == jeff(2));
    CHECK(d2.parts[0].second == 2);
    CHECK(d2.product() == resultant_z(transform_su_int(2),
                                      lift_to_bivar(cheb_u(3).derivative())));
    for (int n = 3; n <= 6; ++n) CHECK_NOTHROW(jeff_oracle(n));
}

TEST_CASE("disc_z decomposes as constant * x^3 * M^2 * J^2") {
    DecompositionResult d = disc_z_structure(2);
    CHECK(d.parts[1].first == ipoly({-40, 48}));
    CHECK(d.parts[2].first == ipoly({-1, 30}));
    for (int n = 2; n <= 5; ++n) {
        DecompositionResult dn = disc_z_structure(n);
        RatPoly dz = disc_z(transform_su_int(n));
        CHECK(dz.degree() == 3 + 4 * (n - 1));
        CHECK(dn.product() == dz);
    }
}

TEST_CASE("point-mass discriminant decomposes as constant * x * U'^4") {
    DecompositionResult d1 = pointmass_disc_check(1);
    CHECK(d1.constant * rat_pow(BigRat(2), 4) == 16);
    for (int n = 1; n <= 4; ++n) {
        DecompositionResult d = pointmass_disc_check(n);
        CHECK(d.parts[1].first == uprime_sqrt(n));
        CHECK(d.parts[1].second == 4);
    }
}

TEST_CASE("J and M are squarefree") {
    for (int n = 2; n <= 15; ++n) CHECK(checks::squarefree(n).pass);
}

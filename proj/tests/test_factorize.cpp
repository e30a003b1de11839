#include <muttjeff/factorize.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace muttjeff;

TEST_CASE("factor_int: worked examples") {
    FactoredInt f16 = factor_int(16);
    CHECK(f16.sign == 1);
    CHECK(f16.factors == std::map<BigInt, unsigned>{{2, 4}});

    FactoredInt f = factor_int(21504);
    CHECK(f.factors == std::map<BigInt, unsigned>{{2, 10}, {3, 1}, {7, 1}});

    FactoredInt g = factor_int(80673600);
    CHECK(g.factors == std::map<BigInt, unsigned>{{2, 6}, {3, 1}, {5, 2}, {7, 5}});

    CHECK(factor_int(0).sign == 0);
    CHECK(factor_int(-12).sign == -1);
    CHECK(factor_int(-12).value() == -12);
    CHECK_THROWS_AS(factor_int(10, {BigInt(4)}), std::invalid_argument);
}

TEST_CASE("factor_int round-trip on random values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        BigInt v = BigInt(rng() % 1000000000ULL) - 500000000;
        FactoredInt f = factor_int(v);
        CHECK(f.value() == v);
        for (const auto& [p, e] : f.factors) {
            CHECK(is_probable_prime(p));
            CHECK(e >= 1);
        }
    }
}

TEST_CASE("factor_int splits a large semiprime") {
    BigInt p("1000003"), q("1000033");
    FactoredInt f = factor_int(p * q);
    CHECK(f.factors == std::map<BigInt, unsigned>{{p, 1}, {q, 1}});
}

TEST_CASE("hint primes are applied first") {
    FactoredInt f = factor_int(BigInt(11) * 11 * 13, {BigInt(11), BigInt(13)});
    CHECK(f.factors == std::map<BigInt, unsigned>{{11, 2}, {13, 1}});
}

TEST_CASE("support_check") {
    FactoredInt j6 = factor_int(BigInt(1)); // placeholder shape
    j6.sign = 1;
    j6.factors = {{2, 40}, {3, 4}, {11, 35}, {13, 44}};
    SupportVerdict v = support_check(j6, 6);
    CHECK(v.subset_ok);
    CHECK(v.allowed == std::set<BigInt>{2, 3, 11, 13});

    FactoredInt f2;
    f2.sign = 1;
    f2.factors = {{2, 1}};
    CHECK(support_check(f2, 2).subset_ok);

    FactoredInt bad;
    bad.sign = 1;
    bad.factors = {{2, 1}, {17, 1}};
    SupportVerdict vb = support_check(bad, 6);
    CHECK_FALSE(vb.subset_ok);
    CHECK(vb.excess == std::set<BigInt>{17});
}

TEST_CASE("expected_support covers factors of n, 2n-1, 2n+1") {
    CHECK(expected_support(3) == std::set<BigInt>{2, 3, 5, 7});
    CHECK(expected_support(6) == std::set<BigInt>{2, 3, 11, 13});
}

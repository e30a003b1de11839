#ifndef MUTTJEFF_TEST_HELPERS_HPP
#define MUTTJEFF_TEST_HELPERS_HPP

#include <muttjeff/poly.hpp>

#include <random>
#include <string>
#include <vector>

namespace mjtest {

using muttjeff::BigRat;
using muttjeff::RatPoly;

/// Deterministic small random polynomials: coefficients in [-9, 9],
/// degree at most max_deg.
class PolyGen {
public:
    explicit PolyGen(unsigned seed = 20240817) : rng_(seed) {}

    BigRat coeff() { return BigRat(std::uniform_int_distribution<int>(-9, 9)(rng_)); }

    RatPoly poly(int max_deg, bool nonzero = false) {
        for (;;) {
            int d = std::uniform_int_distribution<int>(0, max_deg)(rng_);
            std::vector<BigRat> c;
            for (int i = 0; i <= d; ++i) c.push_back(coeff());
            RatPoly p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    int small_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
};

/// Parse a plain decimal literal like "-0.0032902" into an exact rational.
inline BigRat decimal_rat(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return BigRat(s);
    bool neg = !s.empty() && s[0] == '-';
    std::string digits = s.substr(neg ? 1 : 0, dot - (neg ? 1 : 0)) + s.substr(dot + 1);
    auto first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    muttjeff::BigInt den = muttjeff::ipow(10, static_cast<unsigned long>(s.size() - dot - 1));
    BigRat r(muttjeff::BigInt(digits), den);
    return neg ? -r : r;
}

} // namespace mjtest

#endif

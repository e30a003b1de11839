#ifndef MUTTJEFF_NUMERIC_HPP
#define MUTTJEFF_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace muttjeff {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

inline int sgn(const BigInt& v) { return v.sign(); }
inline int sgn(const BigRat& v) { return v.sign(); }

inline BigInt ipow(BigInt base, unsigned long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Exact rational power; negative exponents allowed for nonzero base.
inline BigRat rat_pow(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return BigRat(0);
    }
    BigInt n = ipow(numerator(base), static_cast<unsigned long>(e < 0 ? -e : e));
    BigInt d = ipow(denominator(base), static_cast<unsigned long>(e < 0 ? -e : e));
    return e > 0 ? BigRat(n, d) : BigRat(d, n);
}

inline BigInt rat_to_int(const BigRat& v) {
    if (denominator(v) != 1)
        throw std::domain_error("expected an integer, got " + v.str());
    return numerator(v);
}

/// Decimal rendering with the given number of significant digits,
/// rounded half away from zero; exact rational arithmetic throughout.
inline std::string decimal_approx(const BigRat& value, int sig = 15) {
    if (value == 0) return "0";
    bool neg = value < 0;
    BigRat v = neg ? BigRat(-value) : value;
    // exponent e with 10^e <= v < 10^{e+1}
    long e = 0;
    while (v < 1) {
        v *= 10;
        --e;
    }
    while (v >= 10) {
        v /= 10;
        ++e;
    }
    // v in [1, 10); digits = round(v * 10^{sig-1})
    BigRat scaled = v * rat_pow(BigRat(10), sig - 1);
    BigInt d = (2 * numerator(scaled) + denominator(scaled)) / (2 * denominator(scaled));
    if (d >= ipow(10, static_cast<unsigned long>(sig))) {
        d /= 10;
        ++e;
    }
    std::string digits = d.str();
    std::string out = neg ? "-" : "";
    if (e >= 0 && e < sig) {
        out += digits.substr(0, static_cast<std::size_t>(e) + 1);
        std::string frac = digits.substr(static_cast<std::size_t>(e) + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else if (e < 0 && e >= -6) {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        while (!digits.empty() && digits.back() == '0') digits.pop_back();
        out += digits;
    } else {
        std::string mant = digits.substr(1);
        while (!mant.empty() && mant.back() == '0') mant.pop_back();
        out += digits.substr(0, 1);
        if (!mant.empty()) out += "." + mant;
        out += "e" + std::to_string(e);
    }
    return out;
}

} // namespace muttjeff

#endif

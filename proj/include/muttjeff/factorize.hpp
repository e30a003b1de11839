#ifndef MUTTJEFF_FACTORIZE_HPP
#define MUTTJEFF_FACTORIZE_HPP

#include "numeric.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace muttjeff {

/// sign * prod p^e; zero is sign 0 with an empty map.
struct FactoredInt {
    int sign = 0;
    std::map<BigInt, unsigned> factors;

    BigInt value() const {
        if (sign == 0) return 0;
        BigInt v = sign;
        for (const auto& [p, e] : factors) v *= ipow(p, e);
        return v;
    }

    std::set<BigInt> prime_support() const {
        std::set<BigInt> s;
        for (const auto& [p, e] : factors) s.insert(p);
        return s;
    }

    std::string to_string() const {
        if (sign == 0) return "0";
        std::string s = sign < 0 ? "-" : "";
        if (factors.empty()) return s + "1";
        bool first = true;
        for (const auto& [p, e] : factors) {
            if (!first) s += " ";
            first = false;
            s += p.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 40);
}

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
    // Brent's cycle-finding variant; n odd composite, not a prime power of 2
    for (BigInt c = 1; ; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto step = [&](const BigInt& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(BigInt v, std::map<BigInt, unsigned>& out, int depth = 0) {
    if (v == 1) return;
    if (depth > 64) throw std::runtime_error("factor_int: unfactored residual " + v.str());
    if (is_probable_prime(v)) {
        ++out[v];
        return;
    }
    BigInt d = pollard_rho(v);
    factor_into(d, out, depth + 1);
    factor_into(v / d, out, depth + 1);
}

} // namespace detail

/// Complete factorization: hint primes first, then trial division, then
/// Pollard rho on whatever composite remains.
inline FactoredInt factor_int(BigInt v, const std::set<BigInt>& hint_primes = {}) {
    FactoredInt f;
    if (v == 0) return f;
    f.sign = v < 0 ? -1 : 1;
    if (v < 0) v = -v;
    for (const auto& p : hint_primes) {
        if (p < 2 || !is_probable_prime(p))
            throw std::invalid_argument("factor_int: hint " + p.str() + " is not prime");
        while (v % p == 0) {
            v /= p;
            ++f.factors[p];
        }
    }
    for (BigInt p = 2; p * p <= v && p < 100000; p += (p == 2 ? 1 : 2)) {
        while (v % p == 0) {
            v /= p;
            ++f.factors[p];
        }
    }
    if (v > 1) detail::factor_into(v, f.factors);
    return f;
}

/// Prime factors of |v| by trial division only; for the small hint numbers
/// n, 2n-1, 2n+1.
inline std::set<BigInt> small_prime_factors(BigInt v) {
    std::set<BigInt> s;
    if (v < 0) v = -v;
    for (BigInt p = 2; p * p <= v; p += (p == 2 ? 1 : 2))
        while (v % p == 0) {
            v /= p;
            s.insert(p);
        }
    if (v > 1) s.insert(v);
    return s;
}

/// {2, 3} together with the prime factors of n, 2n-1 and 2n+1.
inline std::set<BigInt> expected_support(int n) {
    std::set<BigInt> s{2, 3};
    for (const auto& p : small_prime_factors(n)) s.insert(p);
    for (const auto& p : small_prime_factors(2 * n - 1)) s.insert(p);
    for (const auto& p : small_prime_factors(2 * n + 1)) s.insert(p);
    return s;
}

struct SupportVerdict {
    bool subset_ok = false;
    std::set<BigInt> primes;
    std::set<BigInt> allowed;
    std::set<BigInt> excess; // primes outside the allowed set
};

/// Is the prime support of f contained in {2,3} u primes(n(2n-1)(2n+1))?
inline SupportVerdict support_check(const FactoredInt& f, int n) {
    SupportVerdict v;
    v.primes = f.prime_support();
    v.allowed = expected_support(n);
    for (const auto& p : v.primes)
        if (!v.allowed.count(p)) v.excess.insert(p);
    v.subset_ok = v.excess.empty();
    return v;
}

} // namespace muttjeff

#endif

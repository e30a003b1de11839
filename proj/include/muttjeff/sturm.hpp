#ifndef MUTTJEFF_STURM_HPP
#define MUTTJEFF_STURM_HPP

#include "poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace muttjeff {

/// Rational interval with exactly one real root of the tracked polynomial
/// in (lo, hi].
struct RootInterval {
    BigRat lo, hi;
    BigRat width() const { return hi - lo; }
    BigRat midpoint() const { return (lo + hi) / 2; }
};

namespace detail {

/// Scale by a positive rational so coefficients are coprime integers;
/// signs (and so Sturm variations) are unchanged.
inline RatPoly primitive_scale(const RatPoly& p) {
    if (p.is_zero()) return p;
    auto content = content_primitive(p).first;
    if (sgn(content) < 0) content = -content;
    return p * (BigRat(1) / content);
}

/// Sign of p(a/b) for p with integer coefficients, via integer Horner.
inline int int_sign_at(const RatPoly& p, const BigRat& x0) {
    if (p.is_zero()) return 0;
    const BigInt& num = numerator(x0);
    const BigInt& den = denominator(x0);
    BigInt acc = numerator(p.lc());
    BigInt den_pow = 1;
    for (int i = p.degree() - 1; i >= 0; --i) {
        den_pow *= den;
        acc = acc * num + numerator(p[static_cast<std::size_t>(i)]) * den_pow;
    }
    return acc.sign();
}

} // namespace detail

/// Sturm chain of a squarefree polynomial, with exact root counting on
/// half-open rational intervals (a, b].
class SturmChain {
public:
    explicit SturmChain(RatPoly p) : poly_(std::move(p)) {
        if (poly_.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
        chain_.push_back(detail::primitive_scale(poly_));
        if (poly_.degree() >= 1)
            chain_.push_back(detail::primitive_scale(poly_.derivative()));
        while (chain_.back().degree() > 0) {
            RatPoly rem = divmod(chain_[chain_.size() - 2], chain_.back()).second;
            if (rem.is_zero()) break;
            chain_.push_back(detail::primitive_scale(-rem));
        }
        if (chain_.back().degree() > 0)
            throw std::domain_error("sturm_chain: polynomial is not squarefree");
    }

    const RatPoly& poly() const { return poly_; }
    const std::vector<RatPoly>& chain() const { return chain_; }

    /// Sign variations at t, zeros ignored.
    int variations(const BigRat& t) const {
        int count = 0, prev = 0;
        for (const auto& s : chain_) {
            int sg = detail::int_sign_at(s, t);
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    }

    /// Number of real roots in (a, b].
    int count(const BigRat& a, const BigRat& b) const {
        if (a >= b) throw std::invalid_argument("count: empty interval");
        return variations(a) - variations(b);
    }

    /// Disjoint isolating intervals for every root in (lo, hi], ascending.
    std::vector<RootInterval> isolate(const BigRat& lo, const BigRat& hi) const {
        std::vector<RootInterval> out;
        isolate_rec(lo, hi, count(lo, hi), out);
        return out;
    }

    /// All real roots, ascending, via the Cauchy bound.
    std::vector<RootInterval> isolate_all() const {
        BigRat bound = root_bound();
        return isolate(-bound, bound);
    }

    /// Nested bisection until hi - lo <= width.
    RootInterval refine(RootInterval iv, const BigRat& width) const {
        while (iv.width() > width) {
            BigRat mid = iv.midpoint();
            if (count(iv.lo, mid) == 1)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
        return iv;
    }

    /// 1 + max |c_i| / |lc|: every real root lies in [-bound, bound].
    BigRat root_bound() const {
        BigRat m = 0;
        for (const auto& c : poly_.coeffs()) {
            BigRat a = abs(c / poly_.lc());
            if (a > m) m = a;
        }
        return m + 1;
    }

private:
    void isolate_rec(const BigRat& a, const BigRat& b, int cnt,
                     std::vector<RootInterval>& out) const {
        if (cnt == 0) return;
        if (cnt == 1) {
            out.push_back({a, b});
            return;
        }
        BigRat mid = (a + b) / 2;
        int left = count(a, mid);
        isolate_rec(a, mid, left, out);
        isolate_rec(mid, b, cnt - left, out);
    }

    RatPoly poly_;
    std::vector<RatPoly> chain_;
};

/// p with repeated factors removed: p / gcd(p, p').
inline RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() < 1) return p;
    return div_exact(p, poly_gcd(p, p.derivative()));
}

inline std::vector<RatPoly> sturm_chain(const RatPoly& p) { return SturmChain(p).chain(); }

inline std::vector<RootInterval> isolate_roots(const RatPoly& p, const BigRat& lo,
                                               const BigRat& hi) {
    return SturmChain(p).isolate(lo, hi);
}

inline RootInterval refine_root(const RatPoly& p, const RootInterval& iv, const BigRat& width) {
    return SturmChain(p).refine(iv, width);
}

} // namespace muttjeff

#endif

#ifndef MUTTJEFF_POLY_HPP
#define MUTTJEFF_POLY_HPP

#include "numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace muttjeff {

/// Dense univariate polynomial over an exact coefficient ring T,
/// coefficients stored ascending by degree.  The zero polynomial is the
/// empty coefficient vector; otherwise the last entry is nonzero.
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(const T& constant) { coeffs_.push_back(constant); trim(); }
    Poly(int constant) : Poly(T(constant)) {}
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly monomial(const T& c, std::size_t degree) {
        std::vector<T> v(degree + 1, T(0));
        v[degree] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const T& operator[](std::size_t i) const {
        static const T zero{0};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const T& lc() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    const std::vector<T>& coeffs() const { return coeffs_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }

    friend Poly operator*(const T& s, const Poly& p) {
        Poly r(p);
        for (auto& c : r.coeffs_) c = s * c;
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& p, const T& s) { return s * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Horner evaluation at a point of the coefficient ring.
    T operator()(const T& x0) const {
        T acc{0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x0 + *it;
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<T> v(coeffs_.size() - 1, T(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            v[i - 1] = coeffs_[i] * T(static_cast<int>(i));
        return Poly(std::move(v));
    }

    Poly pow(unsigned e) const {
        Poly r{T(1)};
        Poly b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    template <class F>
    auto map_coeffs(F&& f) const -> Poly<decltype(f(std::declval<T>()))> {
        using U = decltype(f(std::declval<T>()));
        std::vector<U> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(f(c));
        return Poly<U>(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }
    std::vector<T> coeffs_;
};

using RatPoly = Poly<BigRat>;
/// Polynomial in an outer variable whose coefficients are polynomials in x.
using BivarPoly = Poly<RatPoly>;

enum class Parity { Even, Odd };

/// Formal antiderivative with zero constant term.
inline RatPoly integrate(const RatPoly& p) {
    if (p.is_zero()) return RatPoly();
    std::vector<BigRat> v(static_cast<std::size_t>(p.degree()) + 2, BigRat(0));
    for (int i = 0; i <= p.degree(); ++i)
        v[static_cast<std::size_t>(i) + 1] = p[static_cast<std::size_t>(i)] / BigRat(i + 1);
    return RatPoly(std::move(v));
}

/// Quotient and remainder over the rationals; q must be nonzero.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    RatPoly rem = p;
    std::vector<BigRat> quot;
    if (p.degree() >= q.degree())
        quot.assign(static_cast<std::size_t>(p.degree() - q.degree()) + 1, BigRat(0));
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        std::size_t k = static_cast<std::size_t>(rem.degree() - q.degree());
        BigRat c = rem.lc() / q.lc();
        quot[k] = c;
        rem -= RatPoly::monomial(c, k) * q;
    }
    return {RatPoly(std::move(quot)), rem};
}

/// Exact quotient; throws if q does not divide p.
inline RatPoly div_exact(const RatPoly& p, const RatPoly& q) {
    auto [quot, rem] = divmod(p, q);
    if (!rem.is_zero())
        throw std::domain_error("inexact polynomial division, remainder of degree " +
                                std::to_string(rem.degree()));
    return quot;
}

/// Monic gcd over the rationals.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (BigRat(1) / a.lc());
}

/// content * primitive = p, where primitive has coprime integer
/// coefficients and positive leading coefficient.
inline std::pair<BigRat, RatPoly> content_primitive(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("zero has no primitive part");
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    BigRat content(num_gcd, den_lcm);
    if (sgn(p.lc()) < 0) content = -content;
    return {content, p * (BigRat(1) / content)};
}

/// Given p(z) = z^drop * q(z^2) with the declared parity, recover q.
inline RatPoly even_part_extract(const RatPoly& p, Parity parity, unsigned drop) {
    if (p.is_zero()) return RatPoly();
    unsigned par = parity == Parity::Even ? 0u : 1u;
    std::vector<BigRat> v((static_cast<std::size_t>(p.degree()) + 2) / 2 + 1, BigRat(0));
    for (int i = 0; i <= p.degree(); ++i) {
        const BigRat& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (static_cast<unsigned>(i) % 2 != par % 2)
            throw std::domain_error("parity violation at monomial of degree " + std::to_string(i));
        if (static_cast<unsigned>(i) < drop)
            throw std::domain_error("not divisible by z^" + std::to_string(drop) +
                                    ": nonzero monomial of degree " + std::to_string(i));
        v[(static_cast<unsigned>(i) - drop) / 2] = c;
    }
    return RatPoly(std::move(v));
}

/// p(x + c), computed exactly.
inline RatPoly shift(const RatPoly& p, const BigRat& c) {
    RatPoly r;
    RatPoly xc{c, BigRat(1)}; // x + c
    for (int i = p.degree(); i >= 0; --i)
        r = r * xc + RatPoly(p[static_cast<std::size_t>(i)]);
    return r;
}

/// q(x^2): coefficient spreading, no arithmetic.
inline RatPoly substitute_square(const RatPoly& q) {
    if (q.is_zero()) return RatPoly();
    std::vector<BigRat> v(2 * static_cast<std::size_t>(q.degree()) + 1, BigRat(0));
    for (int i = 0; i <= q.degree(); ++i) v[2 * static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)];
    return RatPoly(std::move(v));
}

/// Evaluate a bivariate polynomial (in z, coefficients in x) at x = x0,
/// leaving a univariate polynomial in z.
inline RatPoly eval_x(const BivarPoly& p, const BigRat& x0) {
    return p.map_coeffs([&](const RatPoly& c) { return c(x0); });
}

/// Lift a polynomial in z to a BivarPoly with constant x-coefficients.
inline BivarPoly lift_to_bivar(const RatPoly& p) {
    return p.map_coeffs([](const BigRat& c) { return RatPoly(c); });
}

/// Max degree in x over the z-coefficients.
inline int x_degree(const BivarPoly& p) {
    int d = -1;
    for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
    return d;
}

} // namespace muttjeff

#endif

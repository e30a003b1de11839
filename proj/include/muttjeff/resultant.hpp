#ifndef MUTTJEFF_RESULTANT_HPP
#define MUTTJEFF_RESULTANT_HPP

#include "poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace muttjeff {

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B.
inline RatPoly prem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("prem: division by zero polynomial");
    int e = a.degree() - b.degree() + 1;
    RatPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        r = b.lc() * r - RatPoly::monomial(r.lc(), static_cast<std::size_t>(r.degree() - b.degree())) * b;
        --e;
    }
    if (e > 0) r = rat_pow(b.lc(), e) * r;
    return r;
}

namespace detail {

/// Resultant of two primitive-scaled integer polynomials of degree >= 1,
/// by the subresultant polynomial remainder sequence.
inline BigRat subresultant_res(RatPoly a, RatPoly b) {
    int s = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        std::swap(a, b);
    }
    // res(c*P, Q) = c^{deg Q} res(P, Q): split off contents first
    BigRat ca = content_primitive(a).first;
    BigRat cb = content_primitive(b).first;
    RatPoly A = a * (BigRat(1) / ca);
    RatPoly B = b * (BigRat(1) / cb);
    BigRat t = rat_pow(ca, b.degree()) * rat_pow(cb, a.degree());

    BigRat g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        RatPoly R = prem(A, B);
        if (R.is_zero()) return BigRat(0);
        A = std::move(B);
        B = R * (BigRat(1) / (g * rat_pow(h, delta)));
        g = A.lc();
        h = delta == 0 ? h : rat_pow(g, delta) / rat_pow(h, delta - 1);
        if (B.degree() == 0) break;
    }
    BigRat res = rat_pow(B.lc(), A.degree()) / rat_pow(h, A.degree() - 1);
    return BigRat(s) * t * res;
}

} // namespace detail

/// Exact resultant over the rationals (subresultant PRS).
inline BigRat resultant(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of the zero polynomial");
    if (p.degree() == 0) return rat_pow(p.lc(), q.degree());
    if (q.degree() == 0) return rat_pow(q.lc(), p.degree());
    return detail::subresultant_res(p, q);
}

/// Sylvester-determinant resultant via rational Gaussian elimination.
/// Slower; kept as an independent oracle.
inline BigRat sylvester_resultant(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("resultant of the zero polynomial");
    int n = p.degree(), m = q.degree();
    if (n == 0) return rat_pow(p.lc(), m);
    if (m == 0) return rat_pow(q.lc(), n);
    std::size_t k = static_cast<std::size_t>(n + m);
    std::vector<std::vector<BigRat>> a(k, std::vector<BigRat>(k, BigRat(0)));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                p[static_cast<std::size_t>(n - j)];
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            a[static_cast<std::size_t>(m + row)][static_cast<std::size_t>(row + j)] =
                q[static_cast<std::size_t>(m - j)];
    BigRat det = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        if (piv == k) return BigRat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < k; ++row) {
            if (a[row][col] == 0) continue;
            BigRat f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < k; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

/// Discriminant: (-1)^{d(d-1)/2} Res(p, p') / lc(p).  Degree 1 is 1 by
/// convention (empty root-difference product); degree 0 is an error.
inline BigRat disc(const RatPoly& p) {
    int d = p.degree();
    if (d <= 0) throw std::domain_error("discriminant requires degree >= 1");
    if (d == 1) return BigRat(1);
    BigRat r = resultant(p, p.derivative()) / p.lc();
    return (static_cast<long>(d) * (d - 1) / 2) % 2 ? -r : r;
}

namespace detail {

/// Exact Newton interpolation through (xs[i], ys[i]).
inline RatPoly interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
    std::size_t k = xs.size();
    std::vector<BigRat> dd = ys; // divided differences, updated in place
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RatPoly r;
    for (std::size_t i = k; i-- > 0;)
        r = r * RatPoly{-xs[i], BigRat(1)} + RatPoly(dd[i]);
    return r;
}

} // namespace detail

/// Resultant in the outer variable of two bivariate polynomials, as a
/// polynomial in x, by evaluation at rational points and interpolation.
/// Sample points where a leading coefficient vanishes are skipped, so the
/// specialized resultants agree with the specialization of the resultant.
inline RatPoly resultant_z(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("resultant of the zero polynomial");
    if (b.degree() == 0) return b.lc().pow(static_cast<unsigned>(a.degree()));
    if (a.degree() == 0) return a.lc().pow(static_cast<unsigned>(b.degree()));
    int bound = x_degree(a) * b.degree() + x_degree(b) * a.degree();
    std::vector<BigRat> xs, ys;
    xs.reserve(static_cast<std::size_t>(bound) + 1);
    for (BigRat x0 = 0; static_cast<int>(xs.size()) <= bound; x0 += 1) {
        if (a.lc()(x0) == 0 || b.lc()(x0) == 0) continue;
        xs.push_back(x0);
        ys.push_back(resultant(eval_x(a, x0), eval_x(b, x0)));
    }
    return detail::interpolate(xs, ys);
}

/// Discriminant in the outer variable, as a polynomial in x.
inline RatPoly disc_z(const BivarPoly& a) {
    int d = a.degree();
    if (d <= 0) throw std::domain_error("discriminant requires degree >= 1 in z");
    if (d == 1) return RatPoly(BigRat(1));
    RatPoly r = div_exact(resultant_z(a, a.derivative()), a.lc());
    return (static_cast<long>(d) * (d - 1) / 2) % 2 ? -r : r;
}

} // namespace muttjeff

#endif

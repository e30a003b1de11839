#ifndef MUTTJEFF_SCHUR_HPP
#define MUTTJEFF_SCHUR_HPP

#include "poly.hpp"

#include <stdexcept>
#include <vector>

namespace muttjeff {

/// Coefficients of the three-term recurrence
///   p_k = (a_k x + b_k) p_{k-1} - c_k p_{k-2},  p_0 = 1.
/// Sequences are 1-indexed through at(); c_1 is never used.
struct Recurrence {
    std::vector<BigRat> a, b, c;

    const BigRat& a_at(int j) const { return a.at(static_cast<std::size_t>(j) - 1); }
    const BigRat& b_at(int j) const { return b.at(static_cast<std::size_t>(j) - 1); }
    const BigRat& c_at(int j) const { return c.at(static_cast<std::size_t>(j) - 1); }

    void check_hypothesis(int n) const {
        for (int j = 1; j <= n; ++j)
            if (a_at(j) == 0)
                throw std::domain_error("recurrence hypothesis violated: a_" + std::to_string(j) + " = 0");
        for (int j = 2; j <= n; ++j)
            if (c_at(j) == 0)
                throw std::domain_error("recurrence hypothesis violated: c_" + std::to_string(j) + " = 0");
    }
};

/// p_0 .. p_n generated from the recurrence.
inline std::vector<RatPoly> recurrence_polys(const Recurrence& r, int n) {
    std::vector<RatPoly> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    p.push_back(RatPoly(BigRat(1)));
    for (int k = 1; k <= n; ++k) {
        RatPoly lin{r.b_at(k), r.a_at(k)};
        RatPoly next = lin * p.back();
        if (k >= 2) next -= r.c_at(k) * p[static_cast<std::size_t>(k) - 2];
        p.push_back(std::move(next));
    }
    return p;
}

/// Closed form for prod_{p_n(x_i)=0} p_{n-1}(x_i):
///   (-1)^{n(n-1)/2} prod_{j=1}^{n} a_j^{n-2j+1} c_j^{j-1}.
inline BigRat schur_product(const Recurrence& r, int n) {
    if (n < 1) throw std::invalid_argument("schur_product: n >= 1 required");
    r.check_hypothesis(n);
    BigRat prod = 1;
    for (int j = 1; j <= n; ++j) {
        prod *= rat_pow(r.a_at(j), n - 2 * j + 1);
        if (j >= 2) prod *= rat_pow(r.c_at(j), j - 1);
    }
    return (static_cast<long>(n) * (n - 1) / 2) % 2 ? -prod : prod;
}

/// The Chebyshev second-kind instance a_j = 2, b_j = 0, c_j = 1.
inline Recurrence chebyshev_u_recurrence(int n) {
    Recurrence r;
    r.a.assign(static_cast<std::size_t>(n), BigRat(2));
    r.b.assign(static_cast<std::size_t>(n), BigRat(0));
    r.c.assign(static_cast<std::size_t>(n), BigRat(1));
    return r;
}

} // namespace muttjeff

#endif

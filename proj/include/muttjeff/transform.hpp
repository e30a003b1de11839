#ifndef MUTTJEFF_TRANSFORM_HPP
#define MUTTJEFF_TRANSFORM_HPP

#include "chebyshev.hpp"
#include "poly.hpp"
#include "resultant.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace muttjeff {

/// A polynomial decomposed exactly as constant * prod parts[i]^exp[i].
struct DecompositionResult {
    int n = 0;
    BigRat constant;
    std::vector<std::pair<RatPoly, unsigned>> parts;

    RatPoly product() const {
        RatPoly p(constant);
        for (const auto& [f, e] : parts) p *= f.pow(e);
        return p;
    }
};

namespace detail {

/// U'_{2n-1}(t) * (x - t^2) as a polynomial in t with coefficients in x.
inline BivarPoly integrand(int n) {
    BivarPoly up = lift_to_bivar(cheb_u(2 * n - 1).derivative());
    BivarPoly x_minus_t2{RatPoly{BigRat(0), BigRat(1)}, RatPoly(), RatPoly(BigRat(-1))};
    return up * x_minus_t2;
}

} // namespace detail

/// The transform (S U_{2n-1})(z) = (1/2) int_{-z}^{z} U'_{2n-1}(t)(x - t^2) dt,
/// built both from the closed form
///   (x - z^2) U_{2n-1}(z) + T_{2n+1}(z)/(2n+1) + T_{2n-1}(z)/(2n-1)
/// and by direct formal integration; the two must agree exactly.
inline BivarPoly transform_su(int n) {
    if (n < 1) throw std::invalid_argument("transform_su: n >= 1 required");
    BivarPoly closed =
        BivarPoly{RatPoly{BigRat(0), BigRat(1)}, RatPoly(), RatPoly(BigRat(-1))} *
            lift_to_bivar(cheb_u(2 * n - 1)) +
        lift_to_bivar(cheb_t(2 * n + 1) * BigRat(1, 2 * n + 1) +
                      cheb_t(2 * n - 1) * BigRat(1, 2 * n - 1));

    // (F(z) - F(-z))/2 for F the antiderivative: odd-degree terms of F survive
    BivarPoly g = detail::integrand(n);
    std::vector<RatPoly> v(static_cast<std::size_t>(g.degree()) + 2);
    for (int k = 0; k <= g.degree(); k += 2)
        v[static_cast<std::size_t>(k) + 1] =
            g[static_cast<std::size_t>(k)] * BigRat(1, k + 1);
    BivarPoly integrated{std::move(v)};

    if (closed != integrated)
        throw std::runtime_error("transform_su: closed form and integration route disagree at n=" +
                                 std::to_string(n));
    return closed;
}

/// R(x) = (2n-1) T_{2n+1}(x) + (2n+1) T_{2n-1}(x); odd, divisible by x^3.
inline RatPoly poly_r(int n) {
    if (n < 1) throw std::invalid_argument("poly_r: n >= 1 required");
    return cheb_t(2 * n + 1) * BigRat(2 * n - 1) + cheb_t(2 * n - 1) * BigRat(2 * n + 1);
}

/// The Mutt polynomial: raw = R(z) with z^3 removed and z^2 -> x, and its
/// primitive part.
inline std::pair<RatPoly, RatPoly> mutt(int n) {
    RatPoly raw = even_part_extract(poly_r(n), Parity::Odd, 3);
    return {raw, content_primitive(raw).second};
}

inline RatPoly mutt_raw(int n) { return mutt(n).first; }
inline RatPoly mutt_prim(int n) { return mutt(n).second; }

/// U'_{2n-1}(sqrt(x)): the even polynomial U'_{2n-1} rewritten in x = z^2.
inline RatPoly uprime_sqrt(int n) {
    if (n < 1) throw std::invalid_argument("uprime_sqrt: n >= 1 required");
    return even_part_extract(cheb_u(2 * n - 1).derivative(), Parity::Even, 0);
}

/// Shift constant 2/((2n+1)(2n-1)) separating the Jeff roots from the
/// squared critical points of U_{2n-1}.
inline BigRat jeff_shift_constant(int n) {
    return BigRat(2, static_cast<long>(2 * n + 1) * (2 * n - 1));
}

/// The Jeff polynomial: primitive integer polynomial, positive leading
/// coefficient, with roots zeta_i^2 - 2/((2n+1)(2n-1)).
inline RatPoly jeff(int n) {
    if (n < 1) throw std::invalid_argument("jeff: n >= 1 required");
    return content_primitive(shift(uprime_sqrt(n), jeff_shift_constant(n))).second;
}

/// (S U_{2n-1})(z) scaled by (2n+1)(2n-1) so all coefficients are integers.
inline BivarPoly transform_su_int(int n) {
    return transform_su(n) * RatPoly(BigRat(static_cast<long>(2 * n + 1) * (2 * n - 1)));
}

namespace detail {

inline DecompositionResult decompose(int n, RatPoly value,
                                     std::vector<std::pair<RatPoly, unsigned>> parts,
                                     const char* what) {
    RatPoly q = std::move(value);
    for (const auto& [f, e] : parts)
        for (unsigned i = 0; i < e; ++i) {
            auto [quot, rem] = divmod(q, f);
            if (!rem.is_zero())
                throw std::runtime_error(std::string(what) + ": expected factor of degree " +
                                         std::to_string(f.degree()) + " does not divide at n=" +
                                         std::to_string(n));
            q = std::move(quot);
        }
    if (q.degree() != 0)
        throw std::runtime_error(std::string(what) + ": residual factor of degree " +
                                 std::to_string(q.degree()) + " at n=" + std::to_string(n));
    return {n, q.lc(), std::move(parts)};
}

} // namespace detail

/// Res_z of the integer-scaled transform against U'_{2n-1}(z), which must
/// decompose as constant * jeff(n)^2.
inline DecompositionResult jeff_oracle(int n) {
    if (n < 2) throw std::invalid_argument("jeff_oracle: n >= 2 required");
    RatPoly res = resultant_z(transform_su_int(n), lift_to_bivar(cheb_u(2 * n - 1).derivative()));
    return detail::decompose(n, std::move(res), {{jeff(n), 2}}, "Jeff oracle mismatch");
}

/// Disc_z of the integer-scaled transform, which must decompose as
/// constant * x^3 * mutt_raw(n)^2 * jeff(n)^2.
inline DecompositionResult disc_z_structure(int n) {
    if (n < 2) throw std::invalid_argument("disc_z_structure: n >= 2 required");
    RatPoly d = disc_z(transform_su_int(n));
    return detail::decompose(n, std::move(d),
                             {{RatPoly{BigRat(0), BigRat(1)}, 3},
                              {mutt_raw(n), 2},
                              {jeff(n), 2}},
                             "Disc_z structure mismatch");
}

/// Disc_t of U'_{2n-1}(t)(x - t^2), which must decompose as
/// constant * x * uprime_sqrt(n)^4.
inline DecompositionResult pointmass_disc_check(int n) {
    if (n < 1) throw std::invalid_argument("pointmass_disc_check: n >= 1 required");
    RatPoly d = disc_z(detail::integrand(n));
    return detail::decompose(n, std::move(d),
                             {{RatPoly{BigRat(0), BigRat(1)}, 1}, {uprime_sqrt(n), 4}},
                             "point-mass discriminant mismatch");
}

} // namespace muttjeff

#endif

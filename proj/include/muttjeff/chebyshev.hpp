#ifndef MUTTJEFF_CHEBYSHEV_HPP
#define MUTTJEFF_CHEBYSHEV_HPP

#include "poly.hpp"

#include <stdexcept>

namespace muttjeff {

enum class ChebKind { FirstKind, SecondKind };

/// Chebyshev polynomial of the given kind by the three-term recurrence
/// p_k = 2x p_{k-1} - p_{k-2}.
inline RatPoly cheb(ChebKind kind, int n) {
    if (n < 0) throw std::invalid_argument("cheb: negative degree");
    RatPoly prev{BigRat(1)};
    if (n == 0) return prev;
    RatPoly cur = kind == ChebKind::FirstKind ? RatPoly{BigRat(0), BigRat(1)}
                                              : RatPoly{BigRat(0), BigRat(2)};
    RatPoly two_x{BigRat(0), BigRat(2)};
    for (int k = 2; k <= n; ++k) {
        RatPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline RatPoly cheb_t(int n) { return cheb(ChebKind::FirstKind, n); }
inline RatPoly cheb_u(int n) { return cheb(ChebKind::SecondKind, n); }

} // namespace muttjeff

#endif

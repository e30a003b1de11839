#ifndef MUTTJEFF_CLOSED_FORM_HPP
#define MUTTJEFF_CLOSED_FORM_HPP

#include "numeric.hpp"

#include <stdexcept>

namespace muttjeff {

enum class ClosedFormKind {
    DiscT,          // 2^{(n-1)^2} n^n
    DiscU,          // 2^{n^2} (n+1)^{n-2}
    DiscUprimeSqrt, // 3 (2n+1)^{n-2} (2n-1)^{n-3} n^{n-3} 2^{2n^2-3n-1}
    DiscMuttRaw,    // (2n-1)^{n-3} (2n+1)^{n-2} 2^{2n^2-n-5} 3 n^{n-3}, magnitude
};

/// Exact rational value of the named closed-form discriminant; negative
/// exponents at small n are evaluated as exact rationals.
inline BigRat closed_form(ClosedFormKind kind, int n) {
    if (n < 1) throw std::invalid_argument("closed_form: n >= 1 required");
    long ln = n;
    switch (kind) {
    case ClosedFormKind::DiscT:
        return rat_pow(BigRat(2), (ln - 1) * (ln - 1)) * rat_pow(BigRat(n), ln);
    case ClosedFormKind::DiscU:
        return rat_pow(BigRat(2), ln * ln) * rat_pow(BigRat(n + 1), ln - 2);
    case ClosedFormKind::DiscUprimeSqrt:
        return BigRat(3) * rat_pow(BigRat(2 * n + 1), ln - 2) * rat_pow(BigRat(2 * n - 1), ln - 3) *
               rat_pow(BigRat(n), ln - 3) * rat_pow(BigRat(2), 2 * ln * ln - 3 * ln - 1);
    case ClosedFormKind::DiscMuttRaw:
        return rat_pow(BigRat(2 * n - 1), ln - 3) * rat_pow(BigRat(2 * n + 1), ln - 2) *
               rat_pow(BigRat(2), 2 * ln * ln - ln - 5) * BigRat(3) * rat_pow(BigRat(n), ln - 3);
    }
    throw std::invalid_argument("closed_form: unknown kind");
}

} // namespace muttjeff

#endif

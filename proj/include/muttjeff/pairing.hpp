#ifndef MUTTJEFF_PAIRING_HPP
#define MUTTJEFF_PAIRING_HPP

#include "sturm.hpp"
#include "transform.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace muttjeff {

struct RootPair {
    RootInterval j_root;
    RootInterval m_root;
    bool in_window = false;
    BigRat gap_upper_bound;
};

/// Per-n record matching Jeff roots to Mutt roots: every Jeff root except
/// the smallest must own a Mutt root in [x0 - 3/(10n^2), x0 + 1/(2n^2)).
struct PairingReport {
    int n = 0;
    std::vector<RootPair> pairs;
    RootInterval unpaired_j; // smallest Jeff root
    RootInterval unpaired_m; // largest Mutt root

    bool all_in_window() const {
        for (const auto& p : pairs)
            if (!p.in_window) return false;
        return true;
    }
};

namespace detail {

enum class Membership { In, Out, Undecided };

/// Does the Mutt root (interval m) certainly lie in
/// [x0 - lo_off, x0 + hi_off) for the Jeff root x0 in interval j?
inline Membership window_membership(const RootInterval& j, const RootInterval& m,
                                    const BigRat& lo_off, const BigRat& hi_off) {
    if (m.lo >= j.hi - lo_off && m.hi < j.lo + hi_off) return Membership::In;
    if (m.hi < j.lo - lo_off || m.lo >= j.hi + hi_off) return Membership::Out;
    return Membership::Undecided;
}

} // namespace detail

/// Isolate all roots of jeff(n) and mutt_raw(n), drop the smallest Jeff
/// root and the largest Mutt root, and decide window membership for each
/// remaining pair by exact rational comparison.
inline PairingReport pair_roots(int n, BigRat width = 0) {
    if (n < 2) throw std::invalid_argument("pair_roots: n >= 2 required");
    if (width == 0) width = BigRat(1, 100L * n * n);
    const BigRat width_floor = rat_pow(BigRat(10), -50);
    const BigRat lo_off(3, 10L * n * n);
    const BigRat hi_off(1, 2L * n * n);

    SturmChain jchain(jeff(n));
    SturmChain mchain(mutt_raw(n));
    auto jroots = jchain.isolate_all();
    auto mroots = mchain.isolate_all();
    if (static_cast<int>(jroots.size()) != n - 1 || static_cast<int>(mroots.size()) != n - 1)
        throw std::runtime_error("pair_roots: unexpected real root count at n=" + std::to_string(n));
    for (auto& r : jroots) r = jchain.refine(r, width);
    for (auto& r : mroots) r = mchain.refine(r, width);

    PairingReport rep;
    rep.n = n;
    rep.unpaired_j = jroots.front();
    rep.unpaired_m = mroots.back();

    // greedy by sort order: k-th remaining Jeff root vs k-th Mutt root
    for (int k = 0; k < n - 2; ++k) {
        RootPair pr;
        pr.j_root = jroots[static_cast<std::size_t>(k) + 1];
        pr.m_root = mroots[static_cast<std::size_t>(k)];
        auto verdict = detail::window_membership(pr.j_root, pr.m_root, lo_off, hi_off);
        while (verdict == detail::Membership::Undecided) {
            if (pr.j_root.width() <= width_floor && pr.m_root.width() <= width_floor)
                throw std::runtime_error("pair_roots: membership undecidable at n=" +
                                         std::to_string(n));
            pr.j_root = jchain.refine(pr.j_root, pr.j_root.width() / 4);
            pr.m_root = mchain.refine(pr.m_root, pr.m_root.width() / 4);
            verdict = detail::window_membership(pr.j_root, pr.m_root, lo_off, hi_off);
        }
        pr.in_window = verdict == detail::Membership::In;
        if (!pr.in_window) {
            // the guarantee is per-Jeff-root existence: scan the other Mutt roots
            for (const auto& m : mroots) {
                auto v = detail::window_membership(pr.j_root, m, lo_off, hi_off);
                if (v == detail::Membership::In) {
                    pr.m_root = m;
                    pr.in_window = true;
                    break;
                }
            }
        }
        BigRat up = pr.m_root.hi - pr.j_root.lo;
        BigRat down = pr.j_root.hi - pr.m_root.lo;
        pr.gap_upper_bound = up > down ? up : down;
        rep.pairs.push_back(std::move(pr));
    }
    return rep;
}

} // namespace muttjeff

#endif

#ifndef MUTTJEFF_SERIALIZE_HPP
#define MUTTJEFF_SERIALIZE_HPP

#include "factorize.hpp"
#include "pairing.hpp"
#include "poly.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace muttjeff {

using json = nlohmann::json;

/// Rationals always travel as exact strings ("7", "-3/4"), never as
/// binary floating point.
inline std::string rat_string(const BigRat& v) { return v.str(); }

inline BigRat parse_rat(const std::string& s) { return BigRat(s); }

inline json poly_to_json(const RatPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rat_string(c));
    return coeffs;
}

inline json bivar_to_json(const BivarPoly& p) {
    json zcoeffs = json::array();
    for (const auto& c : p.coeffs()) zcoeffs.push_back(poly_to_json(c));
    return zcoeffs;
}

inline json factored_to_json(const FactoredInt& f) {
    json factors = json::object();
    for (const auto& [p, e] : f.factors) factors[p.str()] = e;
    return json{{"sign", f.sign}, {"factors", factors}};
}

inline json interval_to_json(const RootInterval& iv) {
    return json{rat_string(iv.lo), rat_string(iv.hi)};
}

inline json pairing_to_json(const PairingReport& rep) {
    json pairs = json::array();
    for (const auto& p : rep.pairs) {
        pairs.push_back(json{{"j", interval_to_json(p.j_root)},
                             {"m", interval_to_json(p.m_root)},
                             {"in_window", p.in_window},
                             {"gap_le", rat_string(p.gap_upper_bound)},
                             {"j_approx", decimal_approx(p.j_root.midpoint(), 15)},
                             {"m_approx", decimal_approx(p.m_root.midpoint(), 15)}});
    }
    return json{{"n", rep.n},
                {"pairs", pairs},
                {"unpaired_j", interval_to_json(rep.unpaired_j)},
                {"unpaired_m", interval_to_json(rep.unpaired_m)},
                {"unpaired_j_approx", decimal_approx(rep.unpaired_j.midpoint(), 15)},
                {"unpaired_m_approx", decimal_approx(rep.unpaired_m.midpoint(), 15)},
                {"all_in_window", rep.all_in_window()}};
}

} // namespace muttjeff

#endif

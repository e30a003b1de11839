#ifndef MUTTJEFF_CHECKS_HPP
#define MUTTJEFF_CHECKS_HPP

#include "chebyshev.hpp"
#include "closed_form.hpp"
#include "factorize.hpp"
#include "resultant.hpp"
#include "schur.hpp"
#include "serialize.hpp"
#include "transform.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace muttjeff {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool applicable = true;
    std::string details;
    json values = json::object();
};

struct CheckDef {
    std::string name;
    int min_n;
    std::function<CheckResult(int)> run;
};

namespace checks {

inline CheckResult cheb_identities(int n) {
    CheckResult r{"cheb_identities"};
    RatPoly tn = cheb_t(n), tn1 = cheb_t(n + 1);
    RatPoly un = cheb_u(n), un1 = cheb_u(n - 1), un2 = cheb_u(n - 2);
    RatPoly x{BigRat(0), BigRat(1)};
    RatPoly x2m1{BigRat(-1), BigRat(0), BigRat(1)};
    bool dif_t = tn.derivative() == un1 * BigRat(n);
    bool dif_u = x2m1 * un.derivative() == tn1 * BigRat(n + 1) - x * un;
    bool tu1 = tn == (un - un2) * BigRat(1, 2);
    bool tu2 = tn == un - x * un1;
    bool tu3 = tn == x * cheb_t(n - 1) - (RatPoly(BigRat(1)) - RatPoly{BigRat(0), BigRat(0), BigRat(1)}) * un2;
    r.pass = dif_t && dif_u && tu1 && tu2 && tu3;
    r.details = r.pass ? "difT, difU, TU1, TU2, TU3 hold"
                       : std::string("failed:") + (dif_t ? "" : " difT") + (dif_u ? "" : " difU") +
                             (tu1 ? "" : " TU1") + (tu2 ? "" : " TU2") + (tu3 ? "" : " TU3");
    return r;
}

/// (z^2-1) U''_{2n-1}(z) = -3z U'_{2n-1}(z) + ((2n)^2-1) U_{2n-1}(z).
inline CheckResult difj_identity(int n) {
    CheckResult r{"difj_identity"};
    RatPoly u = cheb_u(2 * n - 1);
    RatPoly z{BigRat(0), BigRat(1)};
    RatPoly z2m1{BigRat(-1), BigRat(0), BigRat(1)};
    r.pass = z2m1 * u.derivative().derivative() ==
             z * u.derivative() * BigRat(-3) + u * BigRat(4L * n * n - 1);
    r.details = r.pass ? "second-derivative identity holds" : "identity failed";
    return r;
}

inline CheckResult disc_t(int n) {
    CheckResult r{"disc_t"};
    BigRat got = disc(cheb_t(n)), want = closed_form(ClosedFormKind::DiscT, n);
    r.pass = got == want;
    r.values["disc"] = rat_string(got);
    r.details = r.pass ? "disc(T_n) = 2^{(n-1)^2} n^n" : "got " + got.str() + ", want " + want.str();
    return r;
}

inline CheckResult disc_u(int n) {
    CheckResult r{"disc_u"};
    BigRat got = disc(cheb_u(n)), want = closed_form(ClosedFormKind::DiscU, n);
    r.pass = got == want;
    r.values["disc"] = rat_string(got);
    r.details = r.pass ? "disc(U_n) = 2^{n^2} (n+1)^{n-2}" : "got " + got.str() + ", want " + want.str();
    return r;
}

/// prod_{U_{2n}(x)=0} U_{2n-1}(x): Schur closed form vs resultant ratio.
/// The magnitude is 1; the sign is (-1)^n (direct computation at n = 1:
/// U_1(1/2) U_1(-1/2) = -1), so only |product| = 1 is asserted here.
inline CheckResult schur_resu(int n) {
    CheckResult r{"schur_resu"};
    int m = 2 * n;
    BigRat closed = schur_product(chebyshev_u_recurrence(m), m);
    RatPoly u2n = cheb_u(m), u2n1 = cheb_u(m - 1);
    BigRat brute = resultant(u2n, u2n1) / rat_pow(u2n.lc(), m - 1);
    r.pass = abs(closed) == 1 && closed == brute;
    r.values["product"] = rat_string(closed);
    r.details = r.pass ? "Schur product over U_{2n} roots is (-1)^n, matches resultant ratio"
                       : "closed " + closed.str() + ", brute " + brute.str();
    return r;
}

/// The two transform routes already cross-check inside transform_su;
/// verify the z-derivative identity and the leading coefficient here.
inline CheckResult transform_routes(int n) {
    CheckResult r{"transform_routes"};
    BivarPoly su = transform_su(n);
    BivarPoly expect_deriv = detail::integrand(n); // U'_{2n-1}(z)(x - z^2)
    bool deriv_ok = su.derivative() == expect_deriv;
    RatPoly lc = su.lc();
    bool lc_ok = lc.degree() == 0 &&
                 lc.lc() == BigRat(-(2L * n - 1), 2L * n + 1) * rat_pow(BigRat(2), 2 * n - 1);
    r.pass = deriv_ok && lc_ok;
    r.details = r.pass ? "integration route agrees; dSU/dz and leading coefficient verified"
                       : std::string("failed:") + (deriv_ok ? "" : " dSU/dz") +
                             (lc_ok ? "" : " leading coefficient");
    return r;
}

/// R(x) = 2(2n-1)(2n+1) int_0^x t U_{2n-1}(t) dt.
inline CheckResult sum_t(int n) {
    CheckResult r{"sum_t"};
    RatPoly x{BigRat(0), BigRat(1)};
    RatPoly rhs = integrate(x * cheb_u(2 * n - 1)) * BigRat(2L * (2 * n - 1) * (2 * n + 1));
    r.pass = poly_r(n) == rhs;
    r.details = r.pass ? "R equals the scaled integral of t U_{2n-1}" : "identity failed";
    return r;
}

/// R(z) = 4nz U_{2n}(z) - (2z^2(2n+1) - 2) U_{2n-1}(z).
inline CheckResult linear_comb(int n) {
    CheckResult r{"linear_comb"};
    RatPoly z{BigRat(0), BigRat(1)};
    RatPoly rhs = z * cheb_u(2 * n) * BigRat(4L * n) -
                  (RatPoly{BigRat(-2), BigRat(0), BigRat(2L * (2 * n + 1))}) * cheb_u(2 * n - 1);
    r.pass = poly_r(n) == rhs;
    r.details = r.pass ? "U_{2n}/U_{2n-1} linear combination holds" : "identity failed";
    return r;
}

inline CheckResult mutt_props(int n) {
    CheckResult r{"mutt_props"};
    auto [raw, prim] = mutt(n);
    bool deg_ok = raw.degree() == n - 1;
    bool lc_ok = raw.lc() == BigRat(2L * n - 1) * rat_pow(BigRat(2), 2 * n);
    BigRat at0 = raw(BigRat(0));
    bool m0_ok = abs(at0) == BigRat(4L * (2 * n - 1) * (2 * n + 1) * n, 3);
    auto [content, check_prim] = content_primitive(raw);
    bool prim_ok = check_prim == prim && prim * content == raw && sgn(prim.lc()) > 0;
    r.pass = deg_ok && lc_ok && m0_ok && prim_ok;
    r.values["content"] = rat_string(content);
    r.values["m0"] = rat_string(at0);
    r.details = r.pass ? "degree, leading coefficient, |M(0)| and primitive part verified"
                       : std::string("failed:") + (deg_ok ? "" : " degree") + (lc_ok ? "" : " lc") +
                             (m0_ok ? "" : " M(0)") + (prim_ok ? "" : " primitive");
    return r;
}

/// shift(jeff(n), -2/((2n+1)(2n-1))) must be proportional to uprime_sqrt(n).
inline CheckResult jeff_shift(int n) {
    CheckResult r{"jeff_shift"};
    RatPoly back = shift(jeff(n), -jeff_shift_constant(n));
    RatPoly u = uprime_sqrt(n);
    BigRat ratio = back.lc() / u.lc();
    r.pass = back == u * ratio;
    r.values["ratio"] = rat_string(ratio);
    r.details = r.pass ? "Jeff shifts back to a multiple of U'_{2n-1}(sqrt x)" : "proportionality failed";
    return r;
}

inline CheckResult theorem2(int n) {
    CheckResult r{"theorem2"};
    BigRat got = disc(uprime_sqrt(n)), want = closed_form(ClosedFormKind::DiscUprimeSqrt, n);
    r.pass = got == want;
    r.values["disc"] = rat_string(got);
    r.details = r.pass ? "disc(U'_{2n-1}(sqrt x)) matches the closed form"
                       : "got " + got.str() + ", want " + want.str();
    return r;
}

inline CheckResult theorem3(int n) {
    CheckResult r{"theorem3"};
    BigRat got = disc(mutt_raw(n)), want = closed_form(ClosedFormKind::DiscMuttRaw, n);
    r.pass = abs(got) == want;
    r.values["disc"] = rat_string(got);
    r.details = r.pass ? "|disc(M)| matches the closed form"
                       : "got " + got.str() + ", want +-" + want.str();
    return r;
}

inline CheckResult defj_oracle(int n) {
    CheckResult r{"defj_oracle"};
    try {
        DecompositionResult d = jeff_oracle(n);
        r.pass = true;
        r.values["constant"] = rat_string(d.constant);
        r.details = "Res_z(SU, U'_{2n-1}) = constant * J^2";
    } catch (const std::exception& e) {
        r.pass = false;
        r.details = e.what();
    }
    return r;
}

inline CheckResult disc_z_structure_check(int n) {
    CheckResult r{"disc_z_structure"};
    try {
        DecompositionResult d = disc_z_structure(n);
        r.pass = true;
        r.values["constant"] = rat_string(d.constant);
        r.details = "Disc_z(SU) = constant * x^3 * M^2 * J^2";
    } catch (const std::exception& e) {
        r.pass = false;
        r.details = e.what();
    }
    return r;
}

inline CheckResult pointmass_disc(int n) {
    CheckResult r{"pointmass_disc"};
    try {
        DecompositionResult d = pointmass_disc_check(n);
        r.pass = true;
        r.values["constant"] = rat_string(d.constant);
        r.details = "Disc_t(U'_{2n-1}(t)(x-t^2)) = constant * x * U'_{2n-1}(sqrt x)^4";
    } catch (const std::exception& e) {
        r.pass = false;
        r.details = e.what();
    }
    return r;
}

namespace detail_support {

inline std::string set_string(const std::set<BigInt>& s) {
    std::string out = "{";
    for (const auto& p : s) {
        if (out.size() > 1) out += ",";
        out += p.str();
    }
    return out + "}";
}

} // namespace detail_support

inline CheckResult support_jeff(int n) {
    CheckResult r{"support_jeff"};
    FactoredInt f = factor_int(rat_to_int(disc(jeff(n))), expected_support(n));
    SupportVerdict v = support_check(f, n);
    // equality of supports against the uprime_sqrt closed-form value is
    // reported, not asserted: it can fail at small n (e.g. n = 3)
    FactoredInt t2 = factor_int(rat_to_int(closed_form(ClosedFormKind::DiscUprimeSqrt, n)),
                                expected_support(n));
    bool supports_equal = v.primes == t2.prime_support();
    r.pass = v.subset_ok;
    r.values["disc_factored"] = f.to_string();
    r.values["primes"] = detail_support::set_string(v.primes);
    r.values["allowed"] = detail_support::set_string(v.allowed);
    r.values["equal_to_theorem2_support"] = supports_equal;
    r.details = (v.subset_ok ? "support within {2,3} u primes(n(2n-1)(2n+1))"
                             : "excess primes " + detail_support::set_string(v.excess)) +
                (supports_equal ? "; equals closed-form support" : "; differs from closed-form support");
    return r;
}

inline CheckResult support_mutt(int n) {
    CheckResult r{"support_mutt"};
    FactoredInt f = factor_int(rat_to_int(disc(mutt_raw(n))), expected_support(n));
    SupportVerdict v = support_check(f, n);
    r.pass = v.subset_ok;
    r.values["disc_factored"] = f.to_string();
    r.values["primes"] = detail_support::set_string(v.primes);
    r.values["allowed"] = detail_support::set_string(v.allowed);
    r.details = v.subset_ok ? "support within {2,3} u primes(n(2n-1)(2n+1))"
                            : "excess primes " + detail_support::set_string(v.excess);
    return r;
}

inline CheckResult squarefree(int n) {
    CheckResult r{"squarefree"};
    bool j_sf = poly_gcd(jeff(n), jeff(n).derivative()).degree() == 0;
    bool m_sf = poly_gcd(mutt_raw(n), mutt_raw(n).derivative()).degree() == 0;
    r.pass = j_sf && m_sf;
    r.details = r.pass ? "J and M are squarefree" : "repeated factor found";
    return r;
}

} // namespace checks

inline const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> registry = {
        {"cheb_identities", 2, checks::cheb_identities},
        {"difj_identity", 1, checks::difj_identity},
        {"disc_t", 1, checks::disc_t},
        {"disc_u", 1, checks::disc_u},
        {"schur_resu", 1, checks::schur_resu},
        {"transform_routes", 1, checks::transform_routes},
        {"sum_t", 1, checks::sum_t},
        {"linear_comb", 1, checks::linear_comb},
        {"mutt_props", 1, checks::mutt_props},
        {"jeff_shift", 2, checks::jeff_shift},
        {"theorem2", 2, checks::theorem2},
        {"theorem3", 2, checks::theorem3},
        {"defj_oracle", 2, checks::defj_oracle},
        {"disc_z_structure", 2, checks::disc_z_structure_check},
        {"pointmass_disc", 1, checks::pointmass_disc},
        {"support_jeff", 2, checks::support_jeff},
        {"support_mutt", 2, checks::support_mutt},
        {"squarefree", 2, checks::squarefree},
    };
    return registry;
}

/// Run the registered checks at this n; checks whose minimum n exceeds n
/// are reported as not applicable (and count as passing).
inline std::vector<CheckResult> run_checks(int n, const std::set<std::string>& subset = {}) {
    std::vector<CheckResult> out;
    for (const auto& def : check_registry()) {
        if (!subset.empty() && !subset.count(def.name)) continue;
        if (n < def.min_n) {
            CheckResult r{def.name};
            r.pass = true;
            r.applicable = false;
            r.details = "not applicable below n=" + std::to_string(def.min_n);
            out.push_back(std::move(r));
            continue;
        }
        out.push_back(def.run(n));
    }
    return out;
}

} // namespace muttjeff

#endif

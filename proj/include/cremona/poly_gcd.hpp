// Exact multivariate gcd over the integers: recursive content/primitive-part
// reduction on the last variable with a subresultant pseudo-remainder
// sequence for the elimination step. Inputs at the public boundary are
// homogeneous, but the recursion works on general sparse integer polynomials.
#ifndef CREMONA_POLY_GCD_HPP
#define CREMONA_POLY_GCD_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "cremona/homog_poly.hpp"

namespace cremona {
namespace detail {

// General (not necessarily homogeneous) sparse polynomial, canonical map
// representation keyed by exponent vector.
using NPoly = std::map<std::array<std::uint16_t, kNumVars>, Int>;

inline bool np_is_zero(const NPoly& p) { return p.empty(); }

inline NPoly np_constant(const Int& c)
{
    NPoly p;
    if (c != 0) p[{0, 0, 0, 0}] = c;
    return p;
}

inline bool np_is_constant(const NPoly& p)
{
    return p.empty() || (p.size() == 1 && p.begin()->first == std::array<std::uint16_t, kNumVars>{0, 0, 0, 0});
}

inline void np_add_term(NPoly& p, const std::array<std::uint16_t, kNumVars>& m, const Int& c)
{
    auto it = p.find(m);
    if (it == p.end()) {
        if (c != 0) p.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline NPoly np_add(const NPoly& a, const NPoly& b)
{
    NPoly r = a;
    for (const auto& [m, c] : b) np_add_term(r, m, c);
    return r;
}

inline NPoly np_mul(const NPoly& a, const NPoly& b)
{
    NPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::array<std::uint16_t, kNumVars> m;
            for (int i = 0; i < kNumVars; ++i) m[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)]);
            np_add_term(r, m, ca * cb);
        }
    return r;
}

inline NPoly np_neg(NPoly a)
{
    for (auto& [m, c] : a) c = -c;
    return a;
}

inline Int np_int_content(const NPoly& p)
{
    Int c = 0;
    for (const auto& [m, x] : p) {
        c = gcd(c, x);
        if (c == 1) break;
    }
    return c;
}

inline int np_deg_in(const NPoly& p, int v)
{
    int d = -1;
    for (const auto& [m, c] : p) d = std::max(d, static_cast<int>(m[static_cast<std::size_t>(v)]));
    return p.empty() ? -1 : d;
}

inline int np_total_degree(const NPoly& p)
{
    int d = -1;
    for (const auto& [m, c] : p) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

// Grlex-maximal term (for canonical long division / sign normalization).
inline NPoly::const_iterator np_leading(const NPoly& p)
{
    auto best = p.begin();
    for (auto it = p.begin(); it != p.end(); ++it)
        if (grlex_less(Monomial{best->first}, Monomial{it->first})) best = it;
    return best;
}

// Exact division by a single divisor via grlex long division.
// Throws NotDivisible on a nonzero remainder.
inline NPoly np_divexact(NPoly a, const NPoly& b)
{
    if (np_is_zero(b)) fail(errc::precondition, "division by zero polynomial");
    NPoly q;
    auto lb = np_leading(b);
    Monomial lbm{lb->first};
    while (!np_is_zero(a)) {
        auto la = np_leading(a);
        Monomial lam{la->first};
        if (!lbm.divides(lam) || !divides(lb->second, la->second))
            fail(errc::not_divisible, "multivariate remainder nonzero");
        Monomial t = lbm.quotient_of(lam);
        Int c = divexact(la->second, lb->second);
        np_add_term(q, t.e, c);
        NPoly tb;
        tb[t.e] = -c;
        a = np_add(a, np_mul(tb, b));
    }
    return q;
}

inline NPoly np_pow(const NPoly& a, int n)
{
    NPoly r = np_constant(1);
    NPoly base = a;
    for (int k = n; k > 0; k >>= 1) {
        if (k & 1) r = np_mul(r, base);
        if (k > 1) base = np_mul(base, base);
    }
    return r;
}

// Univariate-in-v view: v-degree -> coefficient polynomial in the other vars.
inline std::map<int, NPoly> np_univar(const NPoly& p, int v)
{
    std::map<int, NPoly> r;
    for (const auto& [m, c] : p) {
        auto key = m;
        int e = key[static_cast<std::size_t>(v)];
        key[static_cast<std::size_t>(v)] = 0;
        r[e][key] = c;
    }
    return r;
}

inline NPoly np_from_univar(const std::map<int, NPoly>& u, int v)
{
    NPoly r;
    for (const auto& [e, coef] : u)
        for (const auto& [m, c] : coef) {
            auto key = m;
            key[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
            r[key] = c;
        }
    return r;
}

inline NPoly np_lc_in(const NPoly& p, int v)
{
    auto u = np_univar(p, v);
    return u.empty() ? NPoly{} : u.rbegin()->second;
}

// Multiplies by v^k.
inline NPoly np_shift(const NPoly& p, int v, int k)
{
    NPoly r;
    for (const auto& [m, c] : p) {
        auto key = m;
        key[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(key[static_cast<std::size_t>(v)] + k);
        r[key] = c;
    }
    return r;
}

// Pseudo-remainder with respect to variable v, exact scaling lc^(da-db+1).
inline NPoly np_prem(NPoly a, const NPoly& b, int v)
{
    int da = np_deg_in(a, v), db = np_deg_in(b, v);
    if (da < db) return a;
    NPoly lb = np_lc_in(b, v);
    int e = da - db + 1;
    while (!np_is_zero(a) && np_deg_in(a, v) >= db) {
        int k = np_deg_in(a, v) - db;
        NPoly la = np_lc_in(a, v);
        a = np_add(np_mul(a, lb), np_neg(np_mul(np_shift(la, v, k), b)));
        --e;
    }
    if (e > 0) a = np_mul(a, np_pow(lb, e));
    return a;
}

NPoly np_gcd(const NPoly& A, const NPoly& B);

// gcd of the v-coefficients of p.
inline NPoly np_content_in(const NPoly& p, int v)
{
    NPoly c;
    for (const auto& [e, coef] : np_univar(p, v)) c = np_gcd(c, coef);
    return c;
}

inline NPoly np_gcd(const NPoly& A, const NPoly& B)
{
    if (np_is_zero(A)) return B;
    if (np_is_zero(B)) return A;
    if (np_is_constant(A) || np_is_constant(B)) {
        Int c = gcd(np_int_content(A), np_int_content(B));
        return np_constant(c);
    }
    int v = kNumVars - 1;
    while (v > 0 && np_deg_in(A, v) == 0 && np_deg_in(B, v) == 0) --v;
    if (np_deg_in(A, v) == 0 || np_deg_in(B, v) == 0) {
        // one input free of the main variable: gcd divides its v-content
        const NPoly& free_one = np_deg_in(A, v) == 0 ? A : B;
        const NPoly& other = np_deg_in(A, v) == 0 ? B : A;
        return np_gcd(free_one, np_content_in(other, v));
    }
    NPoly contA = np_content_in(A, v);
    NPoly contB = np_content_in(B, v);
    NPoly gamma = np_gcd(contA, contB);
    NPoly a = np_divexact(A, contA);
    NPoly b = np_divexact(B, contB);
    if (np_deg_in(a, v) < np_deg_in(b, v)) std::swap(a, b);
    NPoly g = np_constant(1), h = np_constant(1);
    while (true) {
        int delta = np_deg_in(a, v) - np_deg_in(b, v);
        NPoly r = np_prem(a, b, v);
        if (np_is_zero(r)) break;
        if (np_deg_in(r, v) == 0) return gamma; // coprime up to content
        a = std::move(b);
        NPoly divisor = np_mul(g, np_pow(h, delta));
        b = np_divexact(r, divisor);
        g = np_lc_in(a, v);
        if (delta >= 1) h = np_divexact(np_pow(g, delta), np_pow(h, delta - 1));
    }
    NPoly pp = np_divexact(b, np_content_in(b, v));
    return np_mul(gamma, pp);
}

// --- heuristic gcd -----------------------------------------------------------
//
// Evaluation at a large integer maps the polynomial gcd to an integer gcd
// whose balanced base-xi digits reconstruct the candidate; a candidate that
// survives exact trial division at two independent evaluation points is
// accepted. Falls back to the subresultant recursion when the heuristic keeps
// missing (tiny inputs skip it entirely).

inline bool np_try_divexact(const NPoly& a, const NPoly& b, NPoly* q_out = nullptr)
{
    try {
        NPoly q = np_divexact(a, b);
        if (q_out) *q_out = std::move(q);
        return true;
    } catch (const error& e) {
        if (e.code() == errc::not_divisible) return false;
        throw;
    }
}

inline NPoly np_eval_var(const NPoly& p, int v, const Int& xi)
{
    NPoly r;
    for (const auto& [m, c] : p) {
        auto key = m;
        int e = key[static_cast<std::size_t>(v)];
        key[static_cast<std::size_t>(v)] = 0;
        np_add_term(r, key, c * pow(xi, static_cast<unsigned long>(e)));
    }
    return r;
}

inline Int np_max_abs_coeff(const NPoly& p)
{
    Int m = 0;
    for (const auto& [mono, c] : p) {
        Int a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

// Balanced base-xi digits of every integer coefficient, as polynomials in the
// remaining variables attached to powers of v.
inline NPoly np_reconstruct_var(NPoly g, int v, const Int& xi, int max_deg)
{
    NPoly out;
    Int half = xi / 2;
    for (int e = 0; !np_is_zero(g); ++e) {
        if (e > max_deg) return {}; // reconstruction ran away: signal failure
        NPoly digit;
        for (auto& [m, c] : g) {
            Int d = c % xi;
            if (d < 0) d += xi;
            if (d > half) d -= xi;
            if (d != 0) digit[m] = d;
            c = divexact(c - d, xi);
        }
        for (auto it = g.begin(); it != g.end();) {
            if (it->second == 0) it = g.erase(it);
            else ++it;
        }
        for (const auto& [m, c] : digit) {
            auto key = m;
            key[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
            out[key] = c;
        }
    }
    return out;
}

inline NPoly np_primitive_int(NPoly p)
{
    Int c = np_int_content(p);
    if (c > 1)
        for (auto& [m, x] : p) x = divexact(x, c);
    return p;
}

inline std::optional<NPoly> np_gcd_heuristic_try(const NPoly& a, const NPoly& b, int var, const Int& xi, int depth)
{
    if (depth > 8) return std::nullopt;
    int da = np_deg_in(a, var), db = np_deg_in(b, var);
    NPoly ea = np_eval_var(a, var, xi);
    NPoly eb = np_eval_var(b, var, xi);
    NPoly g_eval;
    bool lower = false;
    for (int v = var - 1; v >= 0; --v)
        if (np_deg_in(ea, v) > 0 || np_deg_in(eb, v) > 0) {
            lower = true;
            // recurse on the next active variable
            auto sub = np_gcd_heuristic_try(ea, eb, v, xi, depth + 1);
            if (!sub) return std::nullopt;
            g_eval = std::move(*sub);
            break;
        }
    if (!lower) {
        Int ga = np_int_content(ea), gb = np_int_content(eb);
        g_eval = np_constant(gcd(ga, gb));
    }
    NPoly cand = np_reconstruct_var(std::move(g_eval), var, xi, std::max(da, db));
    if (np_is_zero(cand)) return std::nullopt;
    cand = np_primitive_int(std::move(cand));
    if (!np_try_divexact(a, cand) || !np_try_divexact(b, cand)) return std::nullopt;
    return cand;
}

inline NPoly np_gcd_dispatch(const NPoly& A, const NPoly& B)
{
    if (np_is_zero(A) || np_is_zero(B) || np_is_constant(A) || np_is_constant(B)) return np_gcd(A, B);
    if (A.size() + B.size() <= 24 && np_total_degree(A) <= 8 && np_total_degree(B) <= 8) return np_gcd(A, B);
    int var = kNumVars - 1;
    while (var > 0 && np_deg_in(A, var) == 0 && np_deg_in(B, var) == 0) --var;
    Int bound = std::max(np_max_abs_coeff(A), np_max_abs_coeff(B));
    Int xi = 2 * bound + 29;
    std::optional<NPoly> first;
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto cand = np_gcd_heuristic_try(A, B, var, xi, 0);
        xi = xi * 2 + 1;
        if (!cand) continue;
        if (!first) {
            first = std::move(cand);
            continue; // confirm at an independent evaluation point
        }
        if (np_primitive_int(*first) == np_primitive_int(*cand)) return *first;
        first = std::move(cand);
    }
    return np_gcd(A, B);
}

inline NPoly np_from_homog(const HomogPoly& p)
{
    NPoly r;
    for (const auto& t : p.terms()) r[t.mono.e] = t.coef;
    return r;
}

inline HomogPoly np_to_homog(const NPoly& p)
{
    std::vector<HomogPoly::Term> ts;
    for (const auto& [m, c] : p) ts.push_back(HomogPoly::Term{Monomial{m}, c});
    return HomogPoly::from_terms(std::move(ts));
}

} // namespace detail

// gcd of homogeneous polynomials, normalized to a positive leading
// coefficient, with integer content equal to the gcd of the contents.
// gcd(f, 0) = f sign-normalized.
inline HomogPoly gcd_multivariate(const HomogPoly& a, const HomogPoly& b)
{
    if (a.is_zero()) return b.normalized_sign();
    if (b.is_zero()) return a.normalized_sign();
    Int c = gcd(a.content(), b.content());
    HomogPoly pa = a.divide_by_content();
    HomogPoly pb = b.divide_by_content();

    // split off the common monomial factor cheaply
    std::array<std::uint16_t, kNumVars> ma = pa.terms().front().mono.e, mb = pb.terms().front().mono.e;
    for (const auto& t : pa.terms())
        for (int i = 0; i < kNumVars; ++i) ma[static_cast<std::size_t>(i)] = std::min(ma[static_cast<std::size_t>(i)], t.mono.e[static_cast<std::size_t>(i)]);
    for (const auto& t : pb.terms())
        for (int i = 0; i < kNumVars; ++i) mb[static_cast<std::size_t>(i)] = std::min(mb[static_cast<std::size_t>(i)], t.mono.e[static_cast<std::size_t>(i)]);
    Monomial common;
    for (int i = 0; i < kNumVars; ++i) common.e[static_cast<std::size_t>(i)] = std::min(ma[static_cast<std::size_t>(i)], mb[static_cast<std::size_t>(i)]);
    pa = pa.divide_exact(HomogPoly::monomial(Monomial{ma}, 1));
    pb = pb.divide_exact(HomogPoly::monomial(Monomial{mb}, 1));

    detail::NPoly g = detail::np_gcd_dispatch(detail::np_from_homog(pa), detail::np_from_homog(pb));
    Int gc = detail::np_int_content(g);
    if (gc != 0 && gc != 1)
        for (auto& [m, x] : g) x = divexact(x, gc);
    HomogPoly result = detail::np_to_homog(g) * HomogPoly::monomial(common, 1);
    return (result * c).normalized_sign();
}

inline HomogPoly gcd_multivariate(const std::vector<HomogPoly>& ps)
{
    HomogPoly g = HomogPoly::zero();
    for (const auto& p : ps) {
        g = gcd_multivariate(g, p);
        if (!g.is_zero() && g.degree() == 0 && g.leading_coefficient() == 1) break;
    }
    return g;
}

} // namespace cremona

#endif

// Dense univariate polynomials over arbitrary-precision integers: exact gcd
// (small-prime modular images with CRT and a verified trial division, plus a
// subresultant PRS fallback), Sturm-sequence real-root isolation, and
// cyclotomic polynomial generation. This is the workhorse behind degree
// sequences restricted to a line and behind algebraic-entropy certificates.
#ifndef CREMONA_UNIPOLY_HPP
#define CREMONA_UNIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

// Coefficients little-endian: c[k] is the coefficient of t^k. No trailing
// zeros are stored; the zero polynomial is the empty vector.
using UniPoly = std::vector<Int>;

inline void uni_trim(UniPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline UniPoly uni_from(std::vector<long> cs)
{
    UniPoly p;
    p.reserve(cs.size());
    for (long c : cs) p.emplace_back(c);
    uni_trim(p);
    return p;
}

inline UniPoly uni_add(const UniPoly& a, const UniPoly& b)
{
    UniPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}

inline UniPoly uni_sub(const UniPoly& a, const UniPoly& b)
{
    UniPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uni_trim(r);
    return r;
}

inline UniPoly uni_neg(UniPoly a)
{
    for (auto& c : a) c = -c;
    return a;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    uni_trim(r);
    return r;
}

inline UniPoly uni_scale(UniPoly a, const Int& c)
{
    if (c == 0) return {};
    for (auto& x : a) x *= c;
    return a;
}

inline Int uni_content(const UniPoly& p)
{
    Int c = 0;
    for (const auto& x : p) {
        c = gcd(c, x);
        if (c == 1) break;
    }
    return c;
}

inline UniPoly uni_primitive(const UniPoly& p)
{
    Int c = uni_content(p);
    if (c == 0 || c == 1) return p;
    UniPoly r = p;
    for (auto& x : r) x = divexact(x, c);
    return r;
}

inline UniPoly uni_normalized(const UniPoly& p)
{
    UniPoly r = uni_primitive(p);
    if (!r.empty() && sign(r.back()) < 0)
        for (auto& x : r) x = -x;
    return r;
}

// Exact division; throws NotDivisible on a nonzero remainder.
inline UniPoly uni_divexact(const UniPoly& a, const UniPoly& b)
{
    if (b.empty()) fail(errc::precondition, "univariate division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) fail(errc::not_divisible, "univariate remainder nonzero");
    UniPoly r = a;
    UniPoly q(a.size() - b.size() + 1, Int(0));
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        std::size_t top = b.size() - 1 + static_cast<std::size_t>(k);
        if (r.size() <= top || r[top] == 0) continue;
        if (!divides(b.back(), r[top])) fail(errc::not_divisible, "univariate remainder nonzero");
        Int c = divexact(r[top], b.back());
        q[static_cast<std::size_t>(k)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[static_cast<std::size_t>(k) + j] -= c * b[j];
    }
    uni_trim(r);
    if (!r.empty()) fail(errc::not_divisible, "univariate remainder nonzero");
    uni_trim(q);
    return q;
}

inline bool uni_divides(const UniPoly& b, const UniPoly& a)
{
    try {
        (void)uni_divexact(a, b);
        return true;
    } catch (const error& e) {
        if (e.code() == errc::not_divisible) return false;
        throw;
    }
}

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b,
// with the scaling power applied exactly.
inline UniPoly uni_prem(UniPoly a, const UniPoly& b)
{
    int da = uni_degree(a), db = uni_degree(b);
    if (db < 0) fail(errc::precondition, "prem by zero");
    if (da < db) return a;
    const Int lb = b.back();
    int e = da - db + 1;
    while (!uni_is_zero(a) && uni_degree(a) >= db) {
        Int lead = a.back();
        int k = uni_degree(a) - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(k) + j] -= lead * b[j];
        uni_trim(a);
        --e;
    }
    if (e > 0) {
        Int f = pow(lb, static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

// Subresultant polynomial remainder sequence gcd (always exact; can be slow
// for large degrees, used as the reference path).
inline UniPoly uni_gcd_subresultant(UniPoly a, UniPoly b)
{
    a = uni_primitive(a);
    b = uni_primitive(b);
    if (uni_is_zero(a)) return uni_normalized(b);
    if (uni_is_zero(b)) return uni_normalized(a);
    if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
    Int g = 1, h = 1;
    while (true) {
        int delta = uni_degree(a) - uni_degree(b);
        UniPoly r = uni_prem(a, b);
        if (uni_is_zero(r)) break;
        if (uni_degree(r) == 0) return {Int(1)};
        a = std::move(b);
        Int divisor = g * pow(h, static_cast<unsigned long>(delta));
        b = std::move(r);
        for (auto& c : b) c = divexact(c, divisor);
        g = a.back();
        if (delta >= 1)
            h = divexact(pow(g, static_cast<unsigned long>(delta)), pow(h, static_cast<unsigned long>(delta - 1)));
        else
            h = h * pow(g, 0);
    }
    return uni_normalized(b);
}

namespace detail {

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (__uint128_t(r) * b) % p;
        b = (__uint128_t(b) * b) % p;
        e >>= 1;
    }
    return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

using ModPoly = std::vector<std::uint64_t>;

inline void mod_trim(ModPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ModPoly mod_reduce(const UniPoly& f, std::uint64_t p)
{
    ModPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::uint64_t m = mpz_fdiv_ui(f[i].get_mpz_t(), p);
        r[i] = m;
    }
    mod_trim(r);
    return r;
}

inline ModPoly mod_gcd_monic(ModPoly a, ModPoly b, std::uint64_t p)
{
    mod_trim(a);
    mod_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        std::uint64_t inv = mod_inv(b.back(), p);
        for (auto& c : b) c = (__uint128_t(c) * inv) % p;
        while (a.size() >= b.size()) {
            std::uint64_t lead = a.back();
            if (lead != 0) {
                std::size_t off = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j) {
                    __uint128_t t = __uint128_t(lead) * b[j] % p;
                    std::uint64_t& c = a[off + j];
                    c = (c + p - static_cast<std::uint64_t>(t)) % p;
                }
            }
            a.pop_back();
            mod_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    mod_trim(a);
    if (!a.empty()) {
        std::uint64_t inv = mod_inv(a.back(), p);
        for (auto& c : a) c = (__uint128_t(c) * inv) % p;
    }
    return a;
}

} // namespace detail

// Primitive gcd via modular images + CRT, verified by exact trial division.
// Falls back to the subresultant path if the inputs are tiny.
inline UniPoly uni_gcd(const UniPoly& a_in, const UniPoly& b_in)
{
    if (uni_is_zero(a_in)) return uni_normalized(b_in);
    if (uni_is_zero(b_in)) return uni_normalized(a_in);
    UniPoly a = uni_primitive(a_in), b = uni_primitive(b_in);
    if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
    if (uni_degree(b) == 0) return {Int(1)};
    if (uni_degree(a) <= 8) return uni_gcd_subresultant(a, b);

    const Int lc_g = gcd(a.back(), b.back());
    Int prime(1);
    prime <<= 62;
    int best_deg = uni_degree(b) + 1;
    UniPoly crt;      // candidate, coefficients in symmetric range mod `modulus`
    Int modulus = 1;
    for (int iter = 0; iter < 512; ++iter) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        std::uint64_t p = prime.get_ui();
        if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
        detail::ModPoly g = detail::mod_gcd_monic(detail::mod_reduce(a, p), detail::mod_reduce(b, p), p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) return {Int(1)};
        if (dg > best_deg) continue; // unlucky prime
        // scale image so its leading coefficient matches lc_g mod p
        std::uint64_t scale = mpz_fdiv_ui(lc_g.get_mpz_t(), p);
        for (auto& c : g) c = (__uint128_t(c) * scale) % p;
        if (dg < best_deg) {
            best_deg = dg;
            crt.assign(g.size(), Int(0));
            for (std::size_t i = 0; i < g.size(); ++i) crt[i] = Int(static_cast<unsigned long>(g[i]));
            modulus = prime;
        } else {
            // CRT-combine with the accumulated candidate
            Int pz = prime;
            Int inv;
            mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            for (std::size_t i = 0; i < crt.size(); ++i) {
                Int gi(static_cast<unsigned long>(g[i]));
                Int diff = ((gi - crt[i]) % pz + pz) % pz;
                crt[i] = crt[i] + modulus * ((diff * inv) % pz);
            }
            modulus *= pz;
        }
        // symmetric lift + verification
        UniPoly cand = crt;
        Int half = modulus / 2;
        for (auto& c : cand) {
            c %= modulus;
            if (c < 0) c += modulus;
            if (c > half) c -= modulus;
        }
        uni_trim(cand);
        if (static_cast<int>(cand.size()) - 1 != best_deg) continue;
        cand = uni_normalized(cand);
        if (uni_divides(cand, a) && uni_divides(cand, b)) return cand;
    }
    return uni_gcd_subresultant(a, b);
}

inline Int uni_eval(const UniPoly& p, const Int& x)
{
    Int acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline Rat uni_eval(const UniPoly& p, const Rat& x)
{
    Rat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
    return acc;
}

inline UniPoly uni_derivative(const UniPoly& p)
{
    if (p.size() <= 1) return {};
    UniPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Int(static_cast<unsigned long>(i));
    return r;
}

// --- Sturm sequences and real-root counting ---------------------------------

inline std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
    std::vector<UniPoly> seq;
    seq.push_back(uni_primitive(p));
    seq.push_back(uni_primitive(uni_derivative(p)));
    while (!uni_is_zero(seq.back())) {
        const UniPoly& s0 = seq[seq.size() - 2];
        const UniPoly& s1 = seq.back();
        // prem = lc(s1)^e * rem(s0, s1); the chain needs -rem up to a
        // positive factor, so negate unless lc(s1)^e is already negative.
        int e = uni_degree(s0) - uni_degree(s1) + 1;
        bool lc_pow_negative = sign(s1.back()) < 0 && (e % 2 == 1);
        UniPoly r = uni_prem(s0, s1);
        if (!lc_pow_negative) r = uni_neg(r);
        seq.push_back(uni_primitive(r));
    }
    seq.pop_back();
    return seq;
}

inline int sturm_sign_changes(const std::vector<UniPoly>& seq, const Rat& x)
{
    int changes = 0, last = 0;
    for (const auto& f : seq) {
        int s = sign(uni_eval(f, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Number of distinct real roots in the half-open interval (lo, hi].
inline int uni_count_roots(const std::vector<UniPoly>& sturm, const Rat& lo, const Rat& hi)
{
    return sturm_sign_changes(sturm, lo) - sturm_sign_changes(sturm, hi);
}

// Cauchy-style bound: every real root has |x| <= 1 + max |c_i / c_n|.
inline Rat uni_root_bound(const UniPoly& p)
{
    Rat m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rat q(abs(p[i]), abs(p.back()));
        q.canonicalize();
        if (q > m) m = q;
    }
    return m + 1;
}

// Largest real root strictly greater than `threshold`, isolated by bisection
// to width <= tol. Returns nullopt when no such root exists.
inline std::optional<std::pair<Rat, Rat>> uni_largest_root_above(const UniPoly& p, const Rat& threshold, const Rat& tol)
{
    // squarefree part, with any root exactly at the threshold removed so the
    // Sturm counts are taken at a non-root endpoint
    UniPoly sf = uni_divexact(p, uni_gcd(p, uni_derivative(p)));
    while (!uni_is_zero(sf) && uni_eval(sf, threshold) == 0) {
        UniPoly lin{-Int(threshold.get_num()), Int(threshold.get_den())};
        sf = uni_divexact(sf, lin);
    }
    if (uni_degree(sf) < 1) return std::nullopt;
    auto sturm = sturm_sequence(sf);
    Rat lo = threshold, hi = uni_root_bound(sf);
    if (hi <= lo) return std::nullopt;
    if (uni_count_roots(sturm, lo, hi) == 0) return std::nullopt;
    // keep the topmost root: bisect, preferring the upper half when it
    // contains any root
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        if (uni_count_roots(sturm, mid, hi) > 0) lo = mid;
        else hi = mid;
    }
    return std::make_pair(lo, hi);
}

// --- cyclotomic polynomials --------------------------------------------------

inline const UniPoly& cyclotomic(int n)
{
    static std::vector<UniPoly> cache{UniPoly{}}; // index 0 unused
    for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
        // x^k - 1 divided by the product of Phi_d for proper divisors d of k
        UniPoly f(static_cast<std::size_t>(k) + 1, Int(0));
        f[0] = -1;
        f[static_cast<std::size_t>(k)] = 1;
        for (int d = 1; d < k; ++d)
            if (k % d == 0) f = uni_divexact(f, cache[static_cast<std::size_t>(d)]);
        cache.push_back(std::move(f));
    }
    return cache[static_cast<std::size_t>(n)];
}

} // namespace cremona

#endif

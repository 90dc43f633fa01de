// Algebraic-entropy certificates: either exactly zero, or log of an algebraic
// number given by an integer minimal polynomial, a rational isolating
// interval for the dominant root, and a floating-point approximation.
#ifndef CREMONA_ENTROPY_VALUE_HPP
#define CREMONA_ENTROPY_VALUE_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "cremona/errors.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

struct EntropyValue {
    enum class Kind { zero, log_algebraic };
    Kind kind = Kind::zero;
    UniPoly minimal_polynomial;       // empty when kind == zero
    std::pair<Rat, Rat> isolating_interval{Rat(0), Rat(0)};
    double float_approx = 0.0;

    bool is_zero() const { return kind == Kind::zero; }
};

namespace detail {

inline bool has_rational_root_2(const UniPoly& p)
{
    // candidates num | p[0], den | lc
    std::vector<Int> nums, dens;
    auto divisors = [](const Int& n) {
        std::vector<Int> d;
        Int a = abs(n);
        for (Int i = 1; i * i <= a; ++i)
            if (divides(i, a)) {
                d.push_back(i);
                d.push_back(divexact(a, i));
            }
        return d;
    };
    for (const Int& n : divisors(p.front()))
        for (const Int& d : divisors(p.back()))
            for (int s : {1, -1}) {
                Rat x(s * n, d);
                x.canonicalize();
                if (uni_eval(p, x) == 0) return true;
            }
    return false;
}

// Irreducibility over F_p for degree <= 4: no roots in F_p and no factor of
// degree 2, tested via gcd(f, z^(p^2) - z). Irreducibility mod a prime not
// dividing the leading coefficient certifies irreducibility over Q.
inline bool irreducible_mod_p(const UniPoly& f, std::uint64_t q)
{
    ModPoly fp = mod_reduce(f, q);
    if (static_cast<int>(fp.size()) - 1 != uni_degree(f)) return false; // lc vanished
    for (std::uint64_t x = 0; x < q; ++x) {
        std::uint64_t acc = 0;
        for (std::size_t i = fp.size(); i-- > 0;) acc = ((__uint128_t(acc) * x) + fp[i]) % q;
        if (acc == 0) return false;
    }
    if (fp.size() - 1 <= 3) return true;
    // z^(q^2) mod f by repeated squaring of z^q mod f
    auto mulmod = [&](const ModPoly& a, const ModPoly& b) {
        ModPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + __uint128_t(a[i]) * b[j]) % q;
        // reduce mod fp (monic-ize fp first)
        ModPoly m = fp;
        std::uint64_t inv = mod_inv(m.back(), q);
        for (auto& c : m) c = (__uint128_t(c) * inv) % q;
        while (r.size() >= m.size()) {
            std::uint64_t lead = r.back();
            if (lead) {
                std::size_t off = r.size() - m.size();
                for (std::size_t j = 0; j < m.size(); ++j)
                    r[off + j] = (r[off + j] + q - static_cast<std::uint64_t>(__uint128_t(lead) * m[j] % q)) % q;
            }
            r.pop_back();
            mod_trim(r);
            if (r.empty()) break;
        }
        return r;
    };
    ModPoly zq{0, 1}; // z
    std::uint64_t e = q * q;
    ModPoly acc{1};
    while (e) {
        if (e & 1) acc = mulmod(acc, zq);
        zq = mulmod(zq, zq);
        e >>= 1;
    }
    // gcd(f, z^(q^2) - z)
    ModPoly diff = acc;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + q - 1) % q;
    mod_trim(diff);
    ModPoly g = mod_gcd_monic(fp, diff, q);
    return g.size() <= 1;
}

// Irreducibility over Q for degree <= 4 with small coefficients; enough for
// the dominant factors arising from 13x13 lattice automorphisms.
inline bool is_irreducible_small(const UniPoly& p)
{
    int d = uni_degree(p);
    if (d <= 1) return d == 1;
    if (p.front() == 0) return false; // divisible by z
    if (has_rational_root_2(p)) return false;
    if (d <= 3) return true;
    if (d == 4) {
        for (std::uint64_t q : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
            if (irreducible_mod_p(p, q)) return true;
        // no small prime certified irreducibility: search integer quadratic
        // factorizations directly
        auto divisors_signed = [](const Int& n) {
            std::vector<Int> r;
            Int a = abs(n);
            for (Int i = 1; i * i <= a; ++i)
                if (divides(i, a)) {
                    Int j = divexact(a, i);
                    r.push_back(i);
                    r.push_back(-i);
                    if (j != i) {
                        r.push_back(j);
                        r.push_back(-j);
                    }
                }
            return r;
        };
        for (const Int& a : divisors_signed(p[4]))
            for (const Int& c : divisors_signed(p[0])) {
                Int e = divexact(p[4], a);
                Int g = divexact(p[0], c);
                // (a z^2 + b z + c)(e z^2 + f z + g): solve for b, f
                Int det = a * g - e * c;
                if (det == 0) continue;
                if (!divides(det, p[3] * g - e * p[1]) || !divides(det, a * p[1] - p[3] * c)) continue;
                Int f = divexact(p[3] * g - e * p[1], det);
                Int b = divexact(a * p[1] - p[3] * c, det);
                if (a * g + b * f + c * e == p[2]) return false;
            }
        fail(errc::precondition, "cannot certify irreducibility of the dominant quartic factor");
    }
    fail(errc::precondition, "irreducibility test limited to degree <= 4");
}

} // namespace detail

// Entropy certificate from an integer polynomial whose roots are the
// eigenvalues of a lattice automorphism (or the reciprocal roots of a
// recurrence denominator). Strips cyclotomic factors; if nothing remains the
// spectral radius is 1 and the entropy is zero, otherwise the dominant real
// root > 1 of the residual factor is isolated.
inline EntropyValue entropy_from_eigenpoly(UniPoly p, const Rat& tol = Rat(1, 100000000))
{
    if (uni_is_zero(p)) fail(errc::precondition, "empty polynomial");
    p = uni_normalized(p);
    // strip powers of z (zero eigenvalues do not contribute)
    while (p.size() > 1 && p.front() == 0) p.erase(p.begin());
    int max_k = 3;
    for (int k = 3; k <= 120; ++k)
        if (uni_degree(cyclotomic(k)) <= uni_degree(p)) max_k = k;
    for (int k = 1; k <= max_k; ++k) {
        const UniPoly& c = cyclotomic(k);
        if (uni_degree(c) > uni_degree(p)) continue;
        while (uni_degree(p) >= uni_degree(c) && uni_divides(c, p)) p = uni_divexact(p, c);
    }
    if (uni_degree(p) < 1) return EntropyValue{};
    auto iso = uni_largest_root_above(p, Rat(1), tol);
    if (!iso) fail(errc::precondition, "non-cyclotomic factor without a real root above 1: " + std::string("degree ") + std::to_string(uni_degree(p)));
    if (!detail::is_irreducible_small(p))
        fail(errc::precondition, "dominant factor is reducible; refine the certificate");
    EntropyValue v;
    v.kind = EntropyValue::Kind::log_algebraic;
    v.minimal_polynomial = p;
    v.isolating_interval = *iso;
    Rat mid = (iso->first + iso->second) / 2;
    v.float_approx = std::log(to_double(mid));
    return v;
}

} // namespace cremona

#endif

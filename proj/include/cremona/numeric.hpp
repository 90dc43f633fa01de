// Exact scalar arithmetic used throughout: arbitrary-precision integers and
// rationals on top of GMP, plus the handful of helpers (exact square roots,
// string parsing) the rest of the library needs.
#ifndef CREMONA_NUMERIC_HPP
#define CREMONA_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a)
{
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int pow(const Int& a, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Rat pow(const Rat& a, unsigned long e)
{
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), a.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), a.get_den().get_mpz_t(), e);
    return r;
}

inline bool divides(const Int& d, const Int& a)
{
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; the caller guarantees divisibility.
inline Int divexact(const Int& a, const Int& d)
{
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

// Integer square root when a is a perfect square.
inline std::optional<Int> sqrt_exact(const Int& a)
{
    if (sign(a) < 0) return std::nullopt;
    if (mpz_perfect_square_p(a.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Rational square root when the (canonicalized) value is a square of a rational.
inline std::optional<Rat> sqrt_exact(const Rat& a)
{
    auto n = sqrt_exact(Int(a.get_num()));
    auto d = sqrt_exact(Int(a.get_den()));
    if (!n || !d) return std::nullopt;
    Rat r(*n, *d);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" with optional sign.
inline Rat parse_rational(std::string_view s)
{
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + std::string(s));
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

inline double to_double(const Rat& a) { return a.get_d(); }

} // namespace cremona

#endif

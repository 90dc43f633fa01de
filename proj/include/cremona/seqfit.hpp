// Minimal linear recurrences for degree sequences via Berlekamp-Massey over
// exact rationals, generating-function reconstruction, and algebraic-entropy
// estimates from the denominator's reciprocal roots.
#ifndef CREMONA_SEQFIT_HPP
#define CREMONA_SEQFIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "cremona/entropy_value.hpp"
#include "cremona/errors.hpp"
#include "cremona/numeric.hpp"
#include "cremona/proj_map.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

struct Recurrence {
    int order = 0;
    std::vector<Rat> coefficients; // d_n = sum_i c_i d_{n-i}
    int valid_from = 0;            // the relation holds for n >= valid_from
};

namespace detail {

// Berlekamp-Massey over Q: shortest LFSR generating the whole sequence.
// Returns the connection coefficients c_1..c_L with s_n = sum c_i s_{n-i}.
inline std::vector<Rat> berlekamp_massey(const std::vector<Int>& s)
{
    std::vector<Rat> C{Rat(1)}, B{Rat(1)};
    int L = 0, m = 1;
    Rat b(1);
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rat delta(s[n]);
        for (int i = 1; i <= L; ++i)
            if (static_cast<std::size_t>(i) < C.size()) delta += C[static_cast<std::size_t>(i)] * Rat(s[n - static_cast<std::size_t>(i)]);
        if (delta == 0) {
            ++m;
        } else if (2 * L <= static_cast<int>(n)) {
            std::vector<Rat> T = C;
            Rat f = delta / b;
            if (C.size() < B.size() + static_cast<std::size_t>(m)) C.resize(B.size() + static_cast<std::size_t>(m), Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + static_cast<std::size_t>(m)] -= f * B[i];
            L = static_cast<int>(n) + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            Rat f = delta / b;
            if (C.size() < B.size() + static_cast<std::size_t>(m)) C.resize(B.size() + static_cast<std::size_t>(m), Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + static_cast<std::size_t>(m)] -= f * B[i];
            ++m;
        }
    }
    C.resize(static_cast<std::size_t>(L) + 1, Rat(0));
    std::vector<Rat> coeffs;
    for (int i = 1; i <= L; ++i) coeffs.push_back(-C[static_cast<std::size_t>(i)]);
    return coeffs;
}

} // namespace detail

// Minimal-order linear recurrence fitting the sequence. Fails when the
// minimal order is not confirmed by enough data: an order-r recurrence needs
// at least 2r + 2 terms, i.e. r <= |seq|/2 - 1.
inline Recurrence min_recurrence(const std::vector<Int>& seq)
{
    if (seq.size() < 4) fail(errc::precondition, "need at least 4 terms");
    std::vector<Rat> c = detail::berlekamp_massey(seq);
    int L = static_cast<int>(c.size());
    if (L == 0) fail(errc::no_recurrence_found, "zero sequence");
    if (static_cast<std::size_t>(2 * L + 2) > seq.size())
        fail(errc::no_recurrence_found, "minimal order " + std::to_string(L) + " not confirmed by " +
                                            std::to_string(seq.size()) + " terms (need " + std::to_string(2 * L + 2) + ")");
    // defensive replay: the recurrence must reproduce the tail exactly
    for (std::size_t n = static_cast<std::size_t>(L); n < seq.size(); ++n) {
        Rat acc(0);
        for (int i = 1; i <= L; ++i) acc += c[static_cast<std::size_t>(i - 1)] * Rat(seq[n - static_cast<std::size_t>(i)]);
        if (acc != Rat(seq[n])) fail(errc::no_recurrence_found, "recurrence fails to reproduce the sequence");
    }
    return Recurrence{L, std::move(c), L};
}

struct GeneratingFunction {
    UniPoly numerator, denominator; // coprime integer polynomials

    // Series expansion to `count` terms (must be exact integers for the
    // sequences in scope).
    std::vector<Int> expand(int count) const
    {
        std::vector<Int> out;
        const Int& d0 = denominator.front();
        for (int n = 0; n < count; ++n) {
            Int acc = (static_cast<std::size_t>(n) < numerator.size()) ? numerator[static_cast<std::size_t>(n)] : Int(0);
            for (std::size_t i = 1; i < denominator.size() && i <= static_cast<std::size_t>(n); ++i)
                acc -= denominator[i] * out[static_cast<std::size_t>(n) - i];
            if (!divides(d0, acc)) fail(errc::precondition, "series expansion leaves the integers");
            out.push_back(divexact(acc, d0));
        }
        return out;
    }
};

// Rational generating function whose power series reproduces the sequence;
// denominator normalized with positive constant term.
inline GeneratingFunction generating_function(const std::vector<Int>& seq)
{
    Recurrence rec = min_recurrence(seq);
    Int den_lcm = 1;
    for (const auto& c : rec.coefficients) den_lcm = lcm(den_lcm, Int(c.get_den()));
    UniPoly den(static_cast<std::size_t>(rec.order) + 1, Int(0));
    den[0] = den_lcm;
    for (int i = 1; i <= rec.order; ++i) {
        Rat s = -rec.coefficients[static_cast<std::size_t>(i - 1)] * Rat(den_lcm);
        s.canonicalize();
        den[static_cast<std::size_t>(i)] = Int(s.get_num());
    }
    UniPoly series;
    for (const auto& v : seq) series.push_back(v);
    UniPoly num = uni_mul(series, den);
    num.resize(std::max<std::size_t>(static_cast<std::size_t>(rec.order), 1), Int(0));
    uni_trim(num);
    UniPoly g = uni_gcd(num, den);
    if (uni_degree(g) > 0 || uni_content(num) > 1 || uni_content(den) > 1) {
        Int c = gcd(uni_content(num), uni_content(den));
        num = uni_divexact(num, g);
        den = uni_divexact(den, g);
        if (c > 1) {
            for (auto& x : num) x = divexact(x, c);
            for (auto& x : den) x = divexact(x, c);
        }
    }
    if (sign(den.front()) < 0) {
        for (auto& x : num) x = -x;
        for (auto& x : den) x = -x;
    }
    GeneratingFunction gf{std::move(num), std::move(den)};
    std::vector<Int> replay = gf.expand(static_cast<int>(seq.size()));
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (replay[i] != seq[i]) fail(errc::no_recurrence_found, "generating function fails to reproduce the sequence");
    return gf;
}

// Entropy from sequence data: log of the reciprocal of the smallest-modulus
// denominator root, i.e. the dominant root of the reversed denominator.
inline EntropyValue entropy_estimate(const std::vector<Int>& seq)
{
    GeneratingFunction gf = generating_function(seq);
    UniPoly rev(gf.denominator.rbegin(), gf.denominator.rend());
    uni_trim(rev);
    return entropy_from_eigenpoly(rev);
}

struct SequenceFit {
    Recurrence recurrence;
    GeneratingFunction gf;
    EntropyValue entropy;
    bool provisional = false; // set when fitted on a truncated prefix
};

inline SequenceFit fit_sequence(const std::vector<Int>& seq, bool truncated = false)
{
    SequenceFit out{min_recurrence(seq), generating_function(seq), entropy_estimate(seq), truncated};
    return out;
}

inline std::vector<Int> to_int_sequence(const DegreeSequence& d)
{
    std::vector<Int> out;
    for (long long v : d.values) out.emplace_back(static_cast<long>(v));
    return out;
}

inline SequenceFit fit_sequence(const DegreeSequence& d) { return fit_sequence(to_int_sequence(d), d.truncated); }

} // namespace cremona

#endif

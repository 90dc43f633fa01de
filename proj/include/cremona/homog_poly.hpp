// Sparse homogeneous polynomials in four variables over arbitrary-precision
// integers. Terms are kept in descending graded-lex order (x1 > x2 > x3 > x4),
// zero coefficients are never stored, and every stored monomial has the same
// total degree. The zero polynomial is the empty term list.
#ifndef CREMONA_HOMOG_POLY_HPP
#define CREMONA_HOMOG_POLY_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

inline constexpr int kNumVars = 4;

struct Monomial {
    std::array<std::uint16_t, kNumVars> e{0, 0, 0, 0};

    int degree() const
    {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return r;
    }

    bool divides(const Monomial& o) const
    {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Quotient o / this; caller checks divisibility.
    Monomial quotient_of(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic order with x1 > x2 > x3 > x4.
inline bool grlex_less(const Monomial& a, const Monomial& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

class HomogPoly {
public:
    struct Term {
        Monomial mono;
        Int coef;
    };

    HomogPoly() = default;

    // From an unsorted list of (monomial, coefficient) pairs; like terms are
    // merged and zero coefficients dropped.
    static HomogPoly from_terms(std::vector<Term> ts)
    {
        std::map<std::array<std::uint16_t, kNumVars>, Int> acc;
        for (auto& t : ts) {
            if (t.coef == 0) continue;
            acc[t.mono.e] += t.coef;
        }
        HomogPoly p;
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
            if (it->second == 0) continue;
            p.terms_.push_back(Term{Monomial{it->first}, it->second});
        }
        p.check_homogeneous();
        return p;
    }

    static HomogPoly zero() { return HomogPoly{}; }

    static HomogPoly constant(Int c)
    {
        if (c == 0) return zero();
        HomogPoly p;
        p.terms_.push_back(Term{Monomial{}, std::move(c)});
        return p;
    }

    static HomogPoly variable(int i, int exp = 1)
    {
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(exp);
        HomogPoly p;
        p.terms_.push_back(Term{m, Int(1)});
        return p;
    }

    static HomogPoly monomial(const Monomial& m, Int c)
    {
        if (c == 0) return zero();
        HomogPoly p;
        p.terms_.push_back(Term{m, std::move(c)});
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

    // Total degree; -1 marks the zero polynomial ("undefined/any").
    int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Int& leading_coefficient() const { return terms_.front().coef; }

    bool operator==(const HomogPoly& o) const
    {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
        return true;
    }
    bool operator!=(const HomogPoly& o) const { return !(*this == o); }

    HomogPoly operator-() const
    {
        HomogPoly r = *this;
        for (auto& t : r.terms_) t.coef = -t.coef;
        return r;
    }

    HomogPoly operator+(const HomogPoly& o) const { return add_sub(o, false); }
    HomogPoly operator-(const HomogPoly& o) const { return add_sub(o, true); }

    HomogPoly operator*(const HomogPoly& o) const
    {
        if (is_zero() || o.is_zero()) return zero();
        std::map<std::array<std::uint16_t, kNumVars>, Int> acc;
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) acc[(a.mono * b.mono).e] += a.coef * b.coef;
        HomogPoly r;
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0) r.terms_.push_back(Term{Monomial{it->first}, it->second});
        return r;
    }

    HomogPoly operator*(const Int& c) const
    {
        if (c == 0) return zero();
        HomogPoly r = *this;
        for (auto& t : r.terms_) t.coef *= c;
        return r;
    }

    HomogPoly pow(int n) const
    {
        HomogPoly r = constant(1);
        HomogPoly base = *this;
        for (int k = n; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    // gcd of all coefficients, non-negative.
    Int content() const
    {
        Int c = 0;
        for (const auto& t : terms_) {
            c = cremona::gcd(c, t.coef);
            if (c == 1) break;
        }
        return c;
    }

    HomogPoly divide_by_content() const
    {
        Int c = content();
        if (c == 0 || c == 1) return *this;
        HomogPoly r = *this;
        for (auto& t : r.terms_) t.coef = divexact(t.coef, c);
        return r;
    }

    // Canonical sign: leading (graded-lex) coefficient positive.
    HomogPoly normalized_sign() const
    {
        if (is_zero() || sign(leading_coefficient()) > 0) return *this;
        return -*this;
    }

    // Primitive part with positive leading coefficient.
    HomogPoly normalized() const { return divide_by_content().normalized_sign(); }

    Int evaluate(const std::array<Int, kNumVars>& x) const
    {
        Int acc = 0;
        for (const auto& t : terms_) {
            Int m = t.coef;
            for (int i = 0; i < kNumVars; ++i)
                for (int k = 0; k < t.mono.e[static_cast<std::size_t>(i)]; ++k) m *= x[static_cast<std::size_t>(i)];
            acc += m;
        }
        return acc;
    }

    Rat evaluate(const std::array<Rat, kNumVars>& x) const
    {
        Rat acc = 0;
        for (const auto& t : terms_) {
            Rat m(t.coef);
            for (int i = 0; i < kNumVars; ++i)
                for (int k = 0; k < t.mono.e[static_cast<std::size_t>(i)]; ++k) m *= x[static_cast<std::size_t>(i)];
            acc += m;
        }
        return acc;
    }

    // Substitutes the four given polynomials for the variables. The inputs
    // must share a common degree so the result is homogeneous.
    HomogPoly substitute(const std::array<HomogPoly, kNumVars>& f) const
    {
        if (is_zero()) return zero();
        std::array<std::vector<HomogPoly>, kNumVars> powers;
        for (int i = 0; i < kNumVars; ++i) powers[static_cast<std::size_t>(i)].push_back(constant(1));
        auto power = [&](int i, int e) -> const HomogPoly& {
            auto& tab = powers[static_cast<std::size_t>(i)];
            while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * f[static_cast<std::size_t>(i)]);
            return tab[static_cast<std::size_t>(e)];
        };
        HomogPoly acc = zero();
        for (const auto& t : terms_) {
            HomogPoly m = constant(t.coef);
            for (int i = 0; i < kNumVars; ++i)
                if (t.mono.e[static_cast<std::size_t>(i)] > 0) m = m * power(i, t.mono.e[static_cast<std::size_t>(i)]);
            acc = acc.is_zero() ? m : acc + m;
        }
        return acc;
    }

    HomogPoly derivative(int var) const
    {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            int e = t.mono.e[static_cast<std::size_t>(var)];
            if (e == 0) continue;
            Monomial m = t.mono;
            m.e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e - 1);
            out.push_back(Term{m, t.coef * e});
        }
        return from_terms(std::move(out));
    }

    // Quotient of an exact division; throws NotDivisible otherwise.
    HomogPoly divide_exact(const HomogPoly& d) const
    {
        if (d.is_zero()) fail(errc::precondition, "division by zero polynomial");
        if (is_zero()) return zero();
        HomogPoly r = *this;
        std::vector<Term> q;
        while (!r.is_zero()) {
            const Term& lr = r.terms_.front();
            const Term& ld = d.terms_.front();
            if (!ld.mono.divides(lr.mono) || !cremona::divides(ld.coef, lr.coef))
                fail(errc::not_divisible, "remainder is nonzero");
            Term t{ld.mono.quotient_of(lr.mono), divexact(lr.coef, ld.coef)};
            q.push_back(t);
            r = r - d * monomial(t.mono, t.coef);
        }
        return from_terms(std::move(q));
    }

    bool is_divisible_by(const HomogPoly& d) const
    {
        try {
            (void)divide_exact(d);
            return true;
        } catch (const error& e) {
            if (e.code() == errc::not_divisible) return false;
            throw;
        }
    }

    // Square root of a perfect-square polynomial, if one exists over Z.
    std::optional<HomogPoly> sqrt() const
    {
        if (is_zero()) return zero();
        if (degree() % 2 != 0) return std::nullopt;
        auto lc = sqrt_exact(leading_coefficient());
        if (!lc) return std::nullopt;
        Monomial lm = leading_monomial();
        for (auto x : lm.e)
            if (x % 2 != 0) return std::nullopt;
        Monomial hm;
        for (int i = 0; i < kNumVars; ++i) hm.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(lm.e[static_cast<std::size_t>(i)] / 2);
        HomogPoly root = monomial(hm, *lc);
        HomogPoly rem = *this - root * root;
        // Peel off one term of the root at a time: the leading term of the
        // remainder must be divisible by twice the root's leading term.
        while (!rem.is_zero()) {
            const Term& lt = rem.terms_.front();
            Int two_lc = 2 * (*lc);
            if (!hm.divides(lt.mono) || !cremona::divides(two_lc, lt.coef)) return std::nullopt;
            HomogPoly t = monomial(hm.quotient_of(lt.mono), divexact(lt.coef, two_lc));
            rem = rem - (root * t) * Int(2) - t * t;
            root = root + t;
        }
        return root.normalized_sign();
    }

    std::string to_string() const;

    static HomogPoly parse(std::string_view text);

private:
    std::vector<Term> terms_;

    void check_homogeneous() const
    {
        if (terms_.empty()) return;
        int d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) fail(errc::degree_mismatch, "terms of unequal total degree");
    }

    HomogPoly add_sub(const HomogPoly& o, bool sub) const
    {
        if (is_zero()) return sub ? -o : o;
        if (o.is_zero()) return *this;
        if (degree() != o.degree()) fail(errc::degree_mismatch, "adding polynomials of different degree");
        HomogPoly r;
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && grlex_less(o.terms_[j].mono, terms_[i].mono))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || grlex_less(terms_[i].mono, o.terms_[j].mono)) {
                r.terms_.push_back(o.terms_[j]);
                if (sub) r.terms_.back().coef = -r.terms_.back().coef;
                ++j;
            } else {
                Int c = terms_[i].coef;
                if (sub) c -= o.terms_[j].coef;
                else c += o.terms_[j].coef;
                if (c != 0) r.terms_.push_back(Term{terms_[i].mono, std::move(c)});
                ++i, ++j;
            }
        }
        return r;
    }
};

inline HomogPoly operator*(const Int& c, const HomogPoly& p) { return p * c; }

// --- text grammar -----------------------------------------------------------
//
// sum of terms "c*x1^a*x2^b*x3^c*x4^d" with "^1" and "*1" elided, e.g.
// "x1^2*x2-3*x3*x4^2". Coefficients may be integers or integer fractions
// "p/q"; fractional input is cleared to a primitive integer polynomial times
// a positive rational, which is discarded (polynomials are projective data
// everywhere this grammar is used).

inline std::string HomogPoly::to_string() const
{
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Int c = t.coef;
        if (first) {
            if (sign(c) < 0) out += "-";
        } else {
            out += sign(c) < 0 ? "-" : "+";
        }
        first = false;
        Int a = cremona::abs(c);
        bool printed_coef = false;
        if (a != 1 || t.mono.degree() == 0) {
            out += a.get_str();
            printed_coef = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            int e = t.mono.e[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (printed_coef || out.size() > 0) {
                char last = out.empty() ? '\0' : out.back();
                if (last != '+' && last != '-' && !out.empty()) out += "*";
            }
            out += "x" + std::to_string(i + 1);
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const HomogPoly& p) { return os << p.to_string(); }

namespace detail {

struct PolyParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void die(const std::string& msg)
    {
        fail(errc::parse_error, msg + " at position " + std::to_string(pos) + " in \"" + std::string(s) + "\"");
    }

    Int parse_uint()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) die("expected integer");
        return Int(std::string(s.substr(start, pos - start)), 10);
    }

    // One term: [coefficient] [* var[^exp]]*
    void parse_term(int term_sign, std::vector<std::pair<Monomial, Rat>>& terms)
    {
        Rat coef(term_sign);
        bool any = false;
        Monomial mono;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_uint();
            Int den = 1;
            if (peek() == '/') {
                ++pos;
                den = parse_uint();
                if (den == 0) die("zero denominator");
            }
            coef *= Rat(num, den);
            coef.canonicalize();
            any = true;
            if (peek() == '*') ++pos;
        }
        while (peek() == 'x') {
            ++pos;
            Int v = parse_uint();
            if (v < 1 || v > kNumVars) die("variable index out of range");
            int exp = 1;
            if (peek() == '^') {
                ++pos;
                Int e = parse_uint();
                exp = static_cast<int>(e.get_si());
            }
            std::size_t idx = static_cast<std::size_t>(v.get_si() - 1);
            mono.e[idx] = static_cast<std::uint16_t>(mono.e[idx] + exp);
            any = true;
            if (peek() == '*') ++pos;
        }
        if (!any) die("expected term");
        terms.emplace_back(mono, coef);
    }
};

} // namespace detail

inline HomogPoly HomogPoly::parse(std::string_view text)
{
    detail::PolyParser p{text};
    std::vector<std::pair<Monomial, Rat>> raw;
    int sgn = 1;
    if (p.peek() == '+') ++p.pos;
    else if (p.peek() == '-') {
        sgn = -1;
        ++p.pos;
    }
    p.parse_term(sgn, raw);
    while (!p.eof()) {
        char c = p.peek();
        if (c == '+') sgn = 1;
        else if (c == '-') sgn = -1;
        else p.die("expected + or -");
        ++p.pos;
        p.parse_term(sgn, raw);
    }
    // Clear denominators to integer coefficients.
    Int den_lcm = 1;
    for (auto& [m, c] : raw) den_lcm = lcm(den_lcm, Int(c.get_den()));
    std::vector<Term> terms;
    for (auto& [m, c] : raw) {
        Rat scaled = c * Rat(den_lcm);
        scaled.canonicalize();
        terms.push_back(Term{m, Int(scaled.get_num())});
    }
    return from_terms(std::move(terms));
}

} // namespace cremona

#endif

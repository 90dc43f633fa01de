#ifndef CREMONA_LINEAR_FORM_HPP
#define CREMONA_LINEAR_FORM_HPP

#include <array>
#include <ostream>
#include <string>

#include "cremona/homog_poly.hpp"
#include "cremona/numeric.hpp"
#include "cremona/proj_point.hpp"

namespace cremona {

// Linear form a1*x1 + ... + a4*x4, stored with coprime integer coefficients
// and positive first nonzero entry. Rational input is cleared on construction.
class LinearForm {
public:
    explicit LinearForm(std::array<Rat, 4> q)
    {
        Int den = 1;
        for (const auto& x : q) den = lcm(den, Int(x.get_den()));
        for (int i = 0; i < 4; ++i) {
            Rat scaled = q[static_cast<std::size_t>(i)] * Rat(den);
            scaled.canonicalize();
            c_[static_cast<std::size_t>(i)] = Int(scaled.get_num());
        }
        normalize();
    }

    LinearForm(long a1, long a2, long a3, long a4) : c_{Int(a1), Int(a2), Int(a3), Int(a4)} { normalize(); }

    explicit LinearForm(std::array<Int, 4> c) : c_(std::move(c)) { normalize(); }

    // The coordinate form x_{i+1}.
    static LinearForm coordinate(int i)
    {
        std::array<Int, 4> c{Int(0), Int(0), Int(0), Int(0)};
        c[static_cast<std::size_t>(i)] = 1;
        return LinearForm(std::move(c));
    }

    static LinearForm from_poly(const HomogPoly& p)
    {
        if (p.degree() != 1) fail(errc::precondition, "not a linear form");
        std::array<Int, 4> c{Int(0), Int(0), Int(0), Int(0)};
        for (const auto& t : p.terms())
            for (int i = 0; i < kNumVars; ++i)
                if (t.mono.e[static_cast<std::size_t>(i)] == 1) c[static_cast<std::size_t>(i)] = t.coef;
        return LinearForm(std::move(c));
    }

    const std::array<Int, 4>& coefficients() const { return c_; }

    HomogPoly to_poly() const
    {
        std::vector<HomogPoly::Term> ts;
        for (int i = 0; i < 4; ++i) {
            if (c_[static_cast<std::size_t>(i)] == 0) continue;
            Monomial m;
            m.e[static_cast<std::size_t>(i)] = 1;
            ts.push_back(HomogPoly::Term{m, c_[static_cast<std::size_t>(i)]});
        }
        return HomogPoly::from_terms(std::move(ts));
    }

    Int evaluate(const ProjPoint& p) const
    {
        Int s = 0;
        for (int i = 0; i < 4; ++i) s += c_[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
        return s;
    }

    bool operator==(const LinearForm& o) const { return c_ == o.c_; }
    bool operator<(const LinearForm& o) const { return c_ < o.c_; }

    std::string to_string() const { return to_poly().to_string(); }

private:
    std::array<Int, 4> c_{};

    void normalize()
    {
        Int g = 0;
        for (const auto& x : c_) g = gcd(g, x);
        if (g == 0) fail(errc::precondition, "zero linear form");
        for (auto& x : c_) x = divexact(x, g);
        for (const auto& x : c_) {
            if (x == 0) continue;
            if (sign(x) < 0)
                for (auto& y : c_) y = -y;
            break;
        }
    }
};

inline std::ostream& operator<<(std::ostream& os, const LinearForm& f) { return os << f.to_string(); }

} // namespace cremona

#endif

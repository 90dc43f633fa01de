#ifndef CREMONA_PROJ_POINT_HPP
#define CREMONA_PROJ_POINT_HPP

#include <array>
#include <ostream>
#include <string>

#include "cremona/errors.hpp"
#include "cremona/numeric.hpp"

namespace cremona {

// Point of projective 3-space with coprime integer coordinates, first nonzero
// entry positive. Normalization is idempotent, so equality is coordinatewise.
class ProjPoint {
public:
    ProjPoint() : c_{Int(1), Int(0), Int(0), Int(0)} {}

    explicit ProjPoint(std::array<Int, 4> c) : c_(std::move(c)) { normalize(); }

    ProjPoint(long x1, long x2, long x3, long x4) : c_{Int(x1), Int(x2), Int(x3), Int(x4)} { normalize(); }

    static ProjPoint from_rationals(const std::array<Rat, 4>& q)
    {
        Int den = 1;
        for (const auto& x : q) den = lcm(den, Int(x.get_den()));
        std::array<Int, 4> c;
        for (int i = 0; i < 4; ++i) {
            Rat scaled = q[static_cast<std::size_t>(i)] * Rat(den);
            scaled.canonicalize();
            c[static_cast<std::size_t>(i)] = Int(scaled.get_num());
        }
        return ProjPoint(std::move(c));
    }

    const std::array<Int, 4>& coords() const { return c_; }
    const Int& operator[](std::size_t i) const { return c_[i]; }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const { return c_ < o.c_; }

    std::string to_string() const
    {
        std::string s = "[";
        for (int i = 0; i < 4; ++i) {
            if (i) s += ":";
            s += c_[static_cast<std::size_t>(i)].get_str();
        }
        return s + "]";
    }

private:
    std::array<Int, 4> c_;

    void normalize()
    {
        Int g = 0;
        for (const auto& x : c_) g = gcd(g, x);
        if (g == 0) fail(errc::precondition, "projective point needs a nonzero coordinate");
        for (auto& x : c_) x = divexact(x, g);
        for (const auto& x : c_) {
            if (x == 0) continue;
            if (sign(x) < 0)
                for (auto& y : c_) y = -y;
            break;
        }
    }
};

inline std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.to_string(); }

} // namespace cremona

#endif

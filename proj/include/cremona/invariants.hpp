// Rational-function invariance machinery: pullbacks, the
// invariant/anti-invariant/k-invariant trichotomy via exact cross-multiplied
// identities, D-covariance of linear systems, conjugation transfer within the
// signed-permutation subgroup, and the symmetrized lift R + cremona*(R).
#ifndef CREMONA_INVARIANTS_HPP
#define CREMONA_INVARIANTS_HPP

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/cubes.hpp"
#include "cremona/errors.hpp"
#include "cremona/homog_poly.hpp"
#include "cremona/poly_gcd.hpp"
#include "cremona/proj_map.hpp"
#include "cremona/rat_linalg.hpp"

namespace cremona {

// Degree-zero rational function num/den with gcd(num, den) = 1, joint integer
// content 1, and a positive leading coefficient in the denominator. This
// makes the representation of a fixed function unique, so == is exact.
class RationalFunction {
public:
    RationalFunction() : num_(HomogPoly::zero()), den_(HomogPoly::constant(1)) {}

    RationalFunction(HomogPoly num, HomogPoly den)
    {
        if (den.is_zero()) fail(errc::precondition, "zero denominator");
        if (num.is_zero()) {
            num_ = HomogPoly::zero();
            den_ = HomogPoly::constant(1);
            return;
        }
        if (num.degree() != den.degree()) fail(errc::degree_mismatch, "numerator and denominator degrees differ");
        HomogPoly g = gcd_multivariate(num, den);
        num = num.divide_exact(g);
        den = den.divide_exact(g);
        Int c = gcd(num.content(), den.content());
        if (c > 1) {
            num = num.divide_exact(HomogPoly::constant(c));
            den = den.divide_exact(HomogPoly::constant(c));
        }
        if (sign(den.leading_coefficient()) < 0) {
            num = -num;
            den = -den;
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    static RationalFunction parse(const std::string& text)
    {
        auto slash = text.find('/');
        if (slash == std::string::npos) fail(errc::parse_error, "expected \"<poly>/<poly>\"");
        return RationalFunction(HomogPoly::parse(text.substr(0, slash)), HomogPoly::parse(text.substr(slash + 1)));
    }

    const HomogPoly& num() const { return num_; }
    const HomogPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_zero() || num_.degree() == 0; }
    int degree() const { return num_.is_zero() ? 0 : num_.degree(); }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const
    {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RationalFunction operator+(const RationalFunction& o) const
    {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }

    RationalFunction operator*(const RationalFunction& o) const
    {
        if (is_zero() || o.is_zero()) return RationalFunction();
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }

    RationalFunction squared() const { return *this * *this; }

    std::string to_string() const { return num_.to_string() + "/" + den_.to_string(); }

private:
    HomogPoly num_, den_;
};

// R o Phi, reduced.
inline RationalFunction pullback_rational(const ProjMap& phi, const RationalFunction& r)
{
    if (r.is_zero()) return r;
    HomogPoly n = r.num().substitute(phi.components());
    HomogPoly d = r.den().substitute(phi.components());
    if (d.is_zero()) {
        if (n.is_zero()) fail(errc::indeterminate_result, "numerator and denominator both vanish under pullback");
        fail(errc::indeterminate_result, "denominator vanishes identically under pullback");
    }
    return RationalFunction(std::move(n), std::move(d));
}

struct InvarianceClass {
    enum class Kind { invariant, anti_invariant, k_invariant, none };
    Kind kind = Kind::none;
    int k = 0; // set for k_invariant

    std::string to_string() const
    {
        switch (kind) {
            case Kind::invariant: return "invariant";
            case Kind::anti_invariant: return "anti";
            case Kind::k_invariant: return "k:" + std::to_string(k);
            case Kind::none: return "none";
        }
        return "?";
    }
};

namespace detail {

// Strips the common monomial factor and the joint integer content from an
// unreduced numerator/denominator pair. Equality tests downstream are by
// cross-multiplication, so partial reduction is sound; this keeps the degree
// of the cycling table functions from growing without paying for a full
// multivariate gcd at every step.
inline void strip_cheap(HomogPoly& n, HomogPoly& d)
{
    if (n.is_zero() || d.is_zero()) return;
    std::array<std::uint16_t, kNumVars> lo;
    lo.fill(std::numeric_limits<std::uint16_t>::max());
    for (const HomogPoly* p : {&n, &d})
        for (const auto& t : p->terms())
            for (int i = 0; i < kNumVars; ++i)
                lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], t.mono.e[static_cast<std::size_t>(i)]);
    Monomial m{lo};
    if (m.degree() > 0) {
        HomogPoly mono = HomogPoly::monomial(m, 1);
        n = n.divide_exact(mono);
        d = d.divide_exact(mono);
    }
    Int c = gcd(n.content(), d.content());
    if (c > 1) {
        n = n.divide_exact(HomogPoly::constant(c));
        d = d.divide_exact(HomogPoly::constant(c));
    }
}

} // namespace detail

// Tests R o Phi = c R for c = +1, -1 as an exact cross-multiplied polynomial
// identity, then R o Phi^k = R for k up to k_max. Iterates are only lightly
// reduced (common monomial and content); comparisons cross-multiply, so the
// verdicts are exact, and the cap on the substitution degree makes hopeless
// iterations bail out instead of exploding.
inline InvarianceClass invariance_class(const ProjMap& phi, const RationalFunction& r, int k_max = 6,
                                        int degree_cap = 64)
{
    if (k_max < 1) fail(errc::precondition, "k_max must be >= 1");
    if (r.is_constant()) return InvarianceClass{InvarianceClass::Kind::invariant, 1};
    HomogPoly a = r.num().substitute(phi.components());
    HomogPoly b = r.den().substitute(phi.components());
    if (a * r.den() == b * r.num()) return InvarianceClass{InvarianceClass::Kind::invariant, 1};
    if (a * r.den() == -(b * r.num())) return InvarianceClass{InvarianceClass::Kind::anti_invariant, 1};
    for (int k = 2; k <= k_max; ++k) {
        detail::strip_cheap(a, b);
        if (a.is_zero() || b.is_zero()) break;
        if (a.degree() * phi.degree() > degree_cap) break;
        a = a.substitute(phi.components());
        b = b.substitute(phi.components());
        detail::strip_cheap(a, b);
        if (a * r.den() == b * r.num()) return InvarianceClass{InvarianceClass::Kind::k_invariant, k};
    }
    return InvarianceClass{};
}

// Linear system: a space of degree-d forms given by a linearly independent
// basis.
struct LinearSystem {
    int degree = 0;
    std::vector<HomogPoly> basis;
    std::string label;

    static LinearSystem make(std::vector<HomogPoly> basis, std::string label)
    {
        if (basis.empty()) fail(errc::precondition, "empty linear system");
        int deg = basis.front().degree();
        for (const auto& b : basis)
            if (b.degree() != deg) fail(errc::degree_mismatch, "mixed degrees in a linear system");
        if (matrix_rank(coefficient_matrix(basis)) != static_cast<int>(basis.size()))
            fail(errc::precondition, "linear system basis is dependent");
        return LinearSystem{deg, std::move(basis), std::move(label)};
    }

    std::size_t dim() const { return basis.size(); }
};

// Divisor supported on coordinate planes (exponent vector), optionally with
// extra declared factors. The CLI surface uses the coordinate form; the
// KHK families contract non-coordinate planes and pass them as extras.
struct DivisorSpec {
    std::array<int, 4> exponents{0, 0, 0, 0};
    std::vector<std::pair<HomogPoly, int>> extra;

    static DivisorSpec coordinate_planes(std::array<int, 4> e) { return DivisorSpec{e, {}}; }

    static DivisorSpec from_poly_power(HomogPoly p, int mult) { return DivisorSpec{{0, 0, 0, 0}, {{std::move(p), mult}}}; }

    int degree() const
    {
        int d = exponents[0] + exponents[1] + exponents[2] + exponents[3];
        for (const auto& [p, m] : extra) d += p.degree() * m;
        return d;
    }

    HomogPoly to_poly() const
    {
        Monomial m;
        for (int i = 0; i < 4; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(exponents[static_cast<std::size_t>(i)]);
        HomogPoly p = HomogPoly::monomial(m, 1);
        for (const auto& [f, mult] : extra) p = p * f.pow(mult);
        return p;
    }
};

// The matrix of the correspondence W |-> Phi_* W - D on a D-covariant linear
// system. Computationally the shift identity reads F o Phi = D * F' with F'
// back in the system and D supported on the planes Phi contracts (for the
// Euler map, F o Phi = kappa_1..kappa_4 * F'); each basis substitution must
// be exactly divisible by the divisor, the quotient must lie in the span, and
// the induced square rational matrix must be invertible. Columns hold the
// coordinates of the images.
inline RatMatrix check_covariance(const ProjMap& phi, const LinearSystem& system, const DivisorSpec& divisor)
{
    if (!phi.has_inverse()) fail(errc::precondition, "covariance needs a map with declared inverse");
    int lhs = system.degree * phi.degree();
    int rhs = system.degree + divisor.degree();
    if (lhs != rhs)
        fail(errc::precondition, "degree bookkeeping fails: " + std::to_string(lhs) + " != " + std::to_string(rhs));
    // the quotient is taken over Q: divide primitive parts (exact over Z by
    // Gauss's lemma whenever the division is exact over Q) and carry the
    // content ratio separately
    HomogPoly raw_div = divisor.to_poly();
    Int div_content = raw_div.content();
    HomogPoly div_prim = raw_div.divide_by_content();
    RatMatrix mat(system.dim(), std::vector<Rat>(system.dim(), Rat(0)));
    for (std::size_t j = 0; j < system.dim(); ++j) {
        HomogPoly g = system.basis[j].substitute(phi.components());
        Int g_content = g.content();
        HomogPoly q;
        try {
            q = g.divide_by_content().divide_exact(div_prim);
        } catch (const error& e) {
            if (e.code() == errc::not_divisible)
                fail(errc::not_divisible_by_divisor, "pullback of basis element " + std::to_string(j) + " not divisible by the divisor");
            throw;
        }
        auto coords = coordinates_in_span(system.basis, q);
        if (!coords) fail(errc::not_in_span, "pullback of basis element " + std::to_string(j) + " leaves the system");
        Rat factor(g_content, div_content);
        factor.canonicalize();
        for (std::size_t i = 0; i < system.dim(); ++i) mat[i][j] = (*coords)[i] * factor;
    }
    if (rat_det(mat) == 0) fail(errc::singular_automorphism, "induced correspondence is singular");
    return mat;
}

// Symmetrized lift R~ = cremona^*(R) + R; if R is invariant for g o cremona
// with g a signed permutation, the lift is invariant for g^k o cremona for
// every k.
inline RationalFunction k_invariant_lift(const RationalFunction& r)
{
    return pullback_rational(ProjMap::cremona(), r) + r;
}

// Invariant transfer along conjugation by a signed permutation h:
// R o h^{-1} is invariant for (h g h^{-1}) o cremona when R is invariant for
// g o cremona.
inline RationalFunction conjugate_invariant(const RationalFunction& r, const GroupElement& h)
{
    if (!h.is_signed_permutation()) fail(errc::type_mismatch, "conjugation transfer needs a type-B element");
    ProjMap hinv = h.inverse().as_map();
    if (r.is_zero()) return r;
    return RationalFunction(r.num().substitute(hinv.components()), r.den().substitute(hinv.components()));
}

// Dimension of the space of quadrics through a point set (exact nullspace
// dimension of the evaluation matrix on the 10 degree-2 monomials).
inline int quadrics_through_points_dim(const std::vector<ProjPoint>& pts)
{
    std::vector<Monomial> monos;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Monomial m;
            m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(i)] + 1);
            m.e[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(j)] + 1);
            monos.push_back(m);
        }
    RatMatrix eval(pts.size(), std::vector<Rat>(monos.size(), Rat(0)));
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Int v = HomogPoly::monomial(monos[c], 1).evaluate(pts[r].coords());
            eval[r][c] = Rat(v);
        }
    return static_cast<int>(monos.size()) - matrix_rank(std::move(eval));
}

// Rank of the Jacobian of (R_1, ..., R_k) at a rational point, with each
// gradient evaluated exactly as den * grad(num) - num * grad(den).
inline int jacobian_rank_at(const std::vector<RationalFunction>& rs, const ProjPoint& p)
{
    RatMatrix m(rs.size(), std::vector<Rat>(4, Rat(0)));
    for (std::size_t i = 0; i < rs.size(); ++i) {
        Int den_v = rs[i].den().evaluate(p.coords());
        Int num_v = rs[i].num().evaluate(p.coords());
        for (int j = 0; j < 4; ++j) {
            Int dn = rs[i].num().derivative(j).evaluate(p.coords());
            Int dd = rs[i].den().derivative(j).evaluate(p.coords());
            m[i][static_cast<std::size_t>(j)] = Rat(den_v * dn - num_v * dd);
        }
    }
    return matrix_rank(std::move(m));
}

} // namespace cremona

#endif

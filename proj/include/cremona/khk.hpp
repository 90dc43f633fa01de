// Constructors for the concrete map families: the Kahan-Hirota-Kimura
// discretisation of the Euler top (with its linear-times-Cremona-times-linear
// decomposition), the quadratic Nambu KHK map, and the degree-two map theta
// that contracts a plane onto a line. Square-root parameters are kept exact
// by requiring the Euler coefficients to be squares of rationals.
#ifndef CREMONA_KHK_HPP
#define CREMONA_KHK_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/cubes.hpp"
#include "cremona/errors.hpp"
#include "cremona/homog_poly.hpp"
#include "cremona/invariants.hpp"
#include "cremona/linear_form.hpp"
#include "cremona/numeric.hpp"
#include "cremona/proj_map.hpp"
#include "cremona/proj_point.hpp"

namespace cremona {

// --- small helpers for rational-coefficient construction ---------------------

namespace detail {

struct RatPolyBuilder {
    std::vector<std::pair<Monomial, Rat>> terms;

    void add(const Rat& c, int e1, int e2, int e3, int e4)
    {
        if (c == 0) return;
        Monomial m;
        m.e = {static_cast<std::uint16_t>(e1), static_cast<std::uint16_t>(e2), static_cast<std::uint16_t>(e3),
               static_cast<std::uint16_t>(e4)};
        terms.emplace_back(m, c);
    }
};

// Clears a family of rational-coefficient polynomials by one joint factor, so
// ratios between them are preserved exactly.
inline std::vector<HomogPoly> clear_jointly(const std::vector<RatPolyBuilder>& polys)
{
    Int den = 1;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms) den = lcm(den, Int(c.get_den()));
    std::vector<HomogPoly> out;
    for (const auto& p : polys) {
        std::vector<HomogPoly::Term> ts;
        for (const auto& [m, c] : p.terms) {
            Rat s = c * Rat(den);
            s.canonicalize();
            ts.push_back(HomogPoly::Term{m, Int(s.get_num())});
        }
        out.push_back(HomogPoly::from_terms(std::move(ts)));
    }
    return out;
}

inline RationalFunction rational_function_of(const RatPolyBuilder& num, const RatPolyBuilder& den)
{
    auto v = clear_jointly({num, den});
    return RationalFunction(v[0], v[1]);
}

} // namespace detail

// --- the Euler top -----------------------------------------------------------

struct EulerParams {
    Rat a1, a2, a3; // positive squares of rationals
    Rat h;          // nonzero step
    Rat alpha1, alpha2, alpha3; // positive square roots of the a_i

    static EulerParams make(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& h)
    {
        if (h == 0) fail(errc::precondition, "step h must be nonzero");
        EulerParams p;
        p.a1 = a1;
        p.a2 = a2;
        p.a3 = a3;
        p.h = h;
        auto root = [](const Rat& a, const char* name) {
            if (sign(a) <= 0) fail(errc::non_square_parameter, std::string(name) + " must be a positive rational square");
            auto r = sqrt_exact(a);
            if (!r) fail(errc::non_square_parameter, std::string(name) + " is not a rational square");
            return *r;
        };
        p.alpha1 = root(a1, "a1");
        p.alpha2 = root(a2, "a2");
        p.alpha3 = root(a3, "a3");
        return p;
    }
};

// Components of the Euler-top discretisation for arbitrary rational
// parameters (no square-root requirement at this level):
//   x1' = -(a1a2 x3^2 + a1a3 x2^2 - a2a3 x1^2) h^2 x1 - 4a1 h x2x3x4 - 4 x1x4^2
//   x2' = -(a1a2 x3^2 - a1a3 x2^2 + a2a3 x1^2) h^2 x2 - 4a2 h x1x3x4 - 4 x2x4^2
//   x3' =  (a1a2 x3^2 - a1a3 x2^2 - a2a3 x1^2) h^2 x3 - 4a3 h x1x2x4 - 4 x3x4^2
//   x4' =  a1a2a3 h^3 x1x2x3 + (a1a2 x3^2 + a1a3 x2^2 + a2a3 x1^2) h^2 x4 - 4 x4^3
inline std::array<HomogPoly, 4> euler_components(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& h)
{
    Rat h2 = h * h, h3 = h2 * h;
    Rat a12 = a1 * a2, a13 = a1 * a3, a23 = a2 * a3;
    detail::RatPolyBuilder c1, c2, c3, c4;
    c1.add(-a12 * h2, 1, 0, 2, 0);
    c1.add(-a13 * h2, 1, 2, 0, 0);
    c1.add(a23 * h2, 3, 0, 0, 0);
    c1.add(Rat(-4) * a1 * h, 0, 1, 1, 1);
    c1.add(Rat(-4), 1, 0, 0, 2);
    c2.add(-a12 * h2, 0, 1, 2, 0);
    c2.add(a13 * h2, 0, 3, 0, 0);
    c2.add(-a23 * h2, 2, 1, 0, 0);
    c2.add(Rat(-4) * a2 * h, 1, 0, 1, 1);
    c2.add(Rat(-4), 0, 1, 0, 2);
    c3.add(a12 * h2, 0, 0, 3, 0);
    c3.add(-a13 * h2, 0, 2, 1, 0);
    c3.add(-a23 * h2, 2, 0, 1, 0);
    c3.add(Rat(-4) * a3 * h, 1, 1, 0, 1);
    c3.add(Rat(-4), 0, 0, 1, 2);
    c4.add(a12 * a3 * h3, 1, 1, 1, 0);
    c4.add(a12 * h2, 0, 0, 2, 1);
    c4.add(a13 * h2, 0, 2, 0, 1);
    c4.add(a23 * h2, 2, 0, 0, 1);
    c4.add(Rat(-4), 0, 0, 0, 3);
    auto v = detail::clear_jointly({c1, c2, c3, c4});
    return {v[0], v[1], v[2], v[3]};
}

// Degree-3 map with declared inverse obtained by h -> -h.
inline ProjMap build_euler(const EulerParams& p)
{
    ProjMap fwd(euler_components(p.a1, p.a2, p.a3, p.h), "euler");
    ProjMap bwd(euler_components(p.a1, p.a2, p.a3, -p.h), "euler^-1");
    return fwd.with_inverse(bwd);
}

// The four linear forms kappa_i with kappa = prod kappa_i^2 for Psi o Phi,
// and the lambda_i for Phi o Psi (the same forms with the x4 sign flipped).
inline std::array<LinearForm, 4> euler_kappa_forms(const EulerParams& p)
{
    Rat m12 = p.alpha1 * p.alpha2 * p.h;
    Rat m13 = p.alpha1 * p.alpha3 * p.h;
    Rat m23 = p.alpha2 * p.alpha3 * p.h;
    return {LinearForm({-m23, -m13, m12, Rat(-2)}), LinearForm({-m23, m13, m12, Rat(2)}),
            LinearForm({m23, -m13, m12, Rat(2)}), LinearForm({m23, m13, m12, Rat(-2)})};
}

inline std::array<LinearForm, 4> euler_lambda_forms(const EulerParams& p)
{
    Rat m12 = p.alpha1 * p.alpha2 * p.h;
    Rat m13 = p.alpha1 * p.alpha3 * p.h;
    Rat m23 = p.alpha2 * p.alpha3 * p.h;
    return {LinearForm({-m23, -m13, m12, Rat(2)}), LinearForm({-m23, m13, m12, Rat(-2)}),
            LinearForm({m23, -m13, m12, Rat(-2)}), LinearForm({m23, m13, m12, Rat(2)})};
}

// All sign combinations; a superset of the kappa and lambda forms, used as
// the trial-division candidate set.
inline std::vector<LinearForm> euler_candidate_forms(const EulerParams& p)
{
    Rat m12 = p.alpha1 * p.alpha2 * p.h;
    Rat m13 = p.alpha1 * p.alpha3 * p.h;
    Rat m23 = p.alpha2 * p.alpha3 * p.h;
    std::vector<LinearForm> out;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                for (int s4 : {1, -1}) out.push_back(LinearForm({Rat(s1) * m23, Rat(s2) * m13, Rat(s3) * m12, Rat(4 * s4) / 2}));
    return out;
}

// The contracted-plane images s_i and their forward images s_i', at the
// chosen rational square roots.
inline std::array<std::pair<ProjPoint, ProjPoint>, 4> euler_singular_points(const EulerParams& p)
{
    Rat w = p.alpha1 * p.alpha2 * p.alpha3 * p.h;
    auto pt = [&](int s1, int s2, int s3, const Rat& x4) {
        return ProjPoint::from_rationals({Rat(2 * s1) * p.alpha1, Rat(2 * s2) * p.alpha2, Rat(2 * s3) * p.alpha3, x4});
    };
    return {std::make_pair(pt(1, 1, -1, -w), pt(1, 1, -1, w)), std::make_pair(pt(1, -1, -1, w), pt(1, -1, -1, -w)),
            std::make_pair(pt(1, -1, 1, -w), pt(1, -1, 1, w)), std::make_pair(pt(1, 1, 1, w), pt(1, 1, 1, -w))};
}

// Euler invariants and the classical pair they transform into:
//   I1 = (x1^2 - a1 x3^2 / a3) / (x4^2 - a1 a2 h^2 x3^2 / 4)
//   I2 = (x2^2 - a2 x3^2 / a3) / (x4^2 - a1 a2 h^2 x3^2 / 4)
//   F1 = (x4^2 - a1 a3 h^2 x2^2 / 4) / (x4^2 - a1 a2 h^2 x3^2 / 4)
//   F2 = (x4^2 - a1 a2 h^2 x3^2 / 4) / (x4^2 - a2 a3 h^2 x1^2 / 4)
inline RationalFunction euler_invariant_I1(const EulerParams& p)
{
    detail::RatPolyBuilder num, den;
    num.add(Rat(1), 2, 0, 0, 0);
    num.add(-p.a1 / p.a3, 0, 0, 2, 0);
    den.add(Rat(1), 0, 0, 0, 2);
    den.add(-p.a1 * p.a2 * p.h * p.h / 4, 0, 0, 2, 0);
    return detail::rational_function_of(num, den);
}

inline RationalFunction euler_invariant_I2(const EulerParams& p)
{
    detail::RatPolyBuilder num, den;
    num.add(Rat(1), 0, 2, 0, 0);
    num.add(-p.a2 / p.a3, 0, 0, 2, 0);
    den.add(Rat(1), 0, 0, 0, 2);
    den.add(-p.a1 * p.a2 * p.h * p.h / 4, 0, 0, 2, 0);
    return detail::rational_function_of(num, den);
}

inline RationalFunction euler_invariant_F1(const EulerParams& p)
{
    detail::RatPolyBuilder num, den;
    num.add(Rat(1), 0, 0, 0, 2);
    num.add(-p.a1 * p.a3 * p.h * p.h / 4, 0, 2, 0, 0);
    den.add(Rat(1), 0, 0, 0, 2);
    den.add(-p.a1 * p.a2 * p.h * p.h / 4, 0, 0, 2, 0);
    return detail::rational_function_of(num, den);
}

inline RationalFunction euler_invariant_F2(const EulerParams& p)
{
    detail::RatPolyBuilder num, den;
    num.add(Rat(1), 0, 0, 0, 2);
    num.add(-p.a1 * p.a2 * p.h * p.h / 4, 0, 0, 2, 0);
    den.add(Rat(1), 0, 0, 0, 2);
    den.add(-p.a2 * p.a3 * p.h * p.h / 4, 2, 0, 0, 0);
    return detail::rational_function_of(num, den);
}

// Multiplies a rational function by an exact rational constant.
inline RationalFunction scale(const Rat& c, const RationalFunction& r)
{
    if (c == 0 || r.is_zero()) return RationalFunction();
    detail::RatPolyBuilder one_num, one_den;
    one_num.add(c, 0, 0, 0, 0);
    one_den.add(Rat(1), 0, 0, 0, 0);
    return detail::rational_function_of(one_num, one_den) * r;
}

inline RationalFunction constant_function(const Rat& c)
{
    detail::RatPolyBuilder num, den;
    num.add(c, 0, 0, 0, 0);
    den.add(Rat(1), 0, 0, 0, 0);
    return detail::rational_function_of(num, den);
}

// The covariant net of quadrics through the eight points s_i, s_i':
//   x4^2 - (a1 a2 h^2/4) x3^2,   x2^2 - (a2/a3) x3^2,   x1^2 - (a1/a3) x3^2.
inline LinearSystem euler_net(const EulerParams& p)
{
    detail::RatPolyBuilder g1, g2, g3;
    g1.add(Rat(1), 0, 0, 0, 2);
    g1.add(-p.a1 * p.a2 * p.h * p.h / 4, 0, 0, 2, 0);
    g2.add(Rat(1), 0, 2, 0, 0);
    g2.add(-p.a2 / p.a3, 0, 0, 2, 0);
    g3.add(Rat(1), 2, 0, 0, 0);
    g3.add(-p.a1 / p.a3, 0, 0, 2, 0);
    std::vector<HomogPoly> basis;
    for (auto* b : {&g1, &g2, &g3}) {
        auto v = detail::clear_jointly({*b});
        basis.push_back(v[0].normalized());
    }
    return LinearSystem::make(std::move(basis), "euler-net");
}

// --- decomposition of the Euler map ------------------------------------------

struct EulerDecomposition {
    RatMatrix ell1, ell2;     // Phi_h = ell2 o cremona o ell1
    bool product_is_g0;       // ell1 * ell2 = g0 up to scalar
    bool recomposes;          // ell2 o cremona o ell1 = Phi_h projectively
    bool conjugates_to_g0c3;  // ell1 o Phi_h o ell1^{-1} = g0 o cremona
    bool pass() const { return product_is_g0 && recomposes && conjugates_to_g0c3; }
};

namespace detail {

inline ProjMap map_of_rat_matrix(const RatMatrix& m, const std::string& label)
{
    Int den = 1;
    for (const auto& row : m)
        for (const auto& x : row) den = lcm(den, Int(x.get_den()));
    IntMat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat s = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rat(den);
            s.canonicalize();
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Int(s.get_num());
        }
    return ProjMap::linear(a, label);
}

inline RatMatrix rat_inverse(const RatMatrix& m)
{
    RatMatrix aug(4, std::vector<Rat>(8, Rat(0)));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(4 + i)] = 1;
    }
    if (rref(aug) != 4) fail(errc::singular_matrix, "matrix not invertible");
    RatMatrix inv(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(4 + j)];
    return inv;
}

inline RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix r(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return r;
}

// m2 = c * m1 for some nonzero rational c?
inline bool rat_proportional(const RatMatrix& m1, const RatMatrix& m2)
{
    Rat c = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rat& x = m1[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const Rat& y = m2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (x == 0 && y == 0) continue;
            if (x == 0 || y == 0) return false;
            Rat q = y / x;
            if (c == 0) c = q;
            else if (c != q) return false;
        }
    return c != 0;
}

// Extracts the matrix of a degree-1 map.
inline RatMatrix matrix_of_linear_map(const ProjMap& m)
{
    if (m.degree() != 1) fail(errc::decomposition_mismatch, "expected a linear map");
    RatMatrix r(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i)
        for (const auto& t : m.components()[static_cast<std::size_t>(i)].terms())
            for (int j = 0; j < 4; ++j)
                if (t.mono.e[static_cast<std::size_t>(j)] == 1) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(t.coef);
    return r;
}

} // namespace detail

// Builds ell1 with rows spanning the four contracted planes kappa_i = 0 and
// derives ell2 from the decomposition identity; the signed-permutation gauge
// is then fixed so that ell1 * ell2 equals g0 exactly (up to scalar).
inline EulerDecomposition verify_euler_decomposition(const EulerParams& p)
{
    ProjMap phi = build_euler(p);
    ProjMap c3 = ProjMap::cremona();
    auto kappas = euler_kappa_forms(p);
    RatMatrix ell1_base(4, std::vector<Rat>(4, Rat(0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ell1_base[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(kappas[static_cast<std::size_t>(i)].coefficients()[static_cast<std::size_t>(j)]);
    // derive the linear factor on the left: phi o ell1^{-1} o cremona
    ProjMap ell1_base_map = detail::map_of_rat_matrix(ell1_base, "ell1");
    Composition step1 = compose(phi, ell1_base_map.inverse());
    Composition step2 = compose(step1.map, c3);
    if (step2.map.degree() != 1) fail(errc::decomposition_mismatch, "phi o ell1^{-1} o cremona is not linear");
    RatMatrix ell2_base = detail::matrix_of_linear_map(step2.map);

    // gauge search: a signed permutation S with (S ell1) (ell2 S^{-1}) = g0
    RatMatrix g0m(4, std::vector<Rat>(4, Rat(0)));
    {
        auto m = g0().matrix();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g0m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    RatMatrix prod = detail::rat_mul(ell1_base, ell2_base);
    std::optional<RatMatrix> gauge;
    std::array<int, 4> idx{0, 1, 2, 3};
    do {
        for (int signs = 0; signs < 16 && !gauge; ++signs) {
            RatMatrix s(4, std::vector<Rat>(4, Rat(0)));
            for (int i = 0; i < 4; ++i) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = ((signs >> i) & 1) ? Rat(-1) : Rat(1);
            RatMatrix cand = detail::rat_mul(detail::rat_mul(s, prod), detail::rat_inverse(s));
            if (detail::rat_proportional(g0m, cand)) gauge = s;
        }
    } while (!gauge && std::next_permutation(idx.begin(), idx.end()));

    EulerDecomposition out;
    if (!gauge) {
        // no gauge reproduces g0: report the base pair and fail the check
        out.ell1 = ell1_base;
        out.ell2 = ell2_base;
        out.product_is_g0 = false;
    } else {
        out.ell1 = detail::rat_mul(*gauge, ell1_base);
        out.ell2 = detail::rat_mul(ell2_base, detail::rat_inverse(*gauge));
        out.product_is_g0 = detail::rat_proportional(g0m, detail::rat_mul(out.ell1, out.ell2));
    }

    // identity (1): ell2 o cremona o ell1 = phi projectively
    ProjMap ell1_map = detail::map_of_rat_matrix(out.ell1, "ell1");
    ProjMap ell2_map = detail::map_of_rat_matrix(out.ell2, "ell2");
    ProjMap recomposed = compose(ell2_map, compose(c3, ell1_map).map).map;
    out.recomposes = recomposed.same_map_as(phi);

    // identity (3): ell1 o phi o ell1^{-1} = g0 o cremona projectively
    ProjMap conj = compose(ell1_map, compose(phi, ell1_map.inverse()).map).map;
    ProjMap g0c3 = compose(g0().as_map("g0"), c3).map;
    out.conjugates_to_g0c3 = conj.same_map_as(g0c3);
    return out;
}

// --- the degree-two map theta -------------------------------------------------

// theta = [x2x3 : x1x3 : x1x2 : x3x4]. Solving theta o psi = kappa * Id gives
// psi = [y2y3 : y1y3 : y1y2 : y3y4], which is theta's own formula: theta is an
// involution with theta o theta = x1x2x3 * Id.
inline ProjMap build_theta()
{
    auto mono = [](int a, int b) {
        Monomial m;
        m.e[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(a)] + 1);
        m.e[static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(m.e[static_cast<std::size_t>(b)] + 1);
        return HomogPoly::monomial(m, 1);
    };
    ProjMap fwd({mono(1, 2), mono(0, 2), mono(0, 1), mono(2, 3)}, "theta");
    return fwd.with_self_inverse();
}

// --- quadratic Nambu systems ---------------------------------------------------

struct NambuParams {
    // A2 = [[a1, a2/2, a3/2], [a2/2, a4, a5/2], [a3/2, a5/2, a6]]; A1 = Id
    std::array<Rat, 6> a;
    Rat h;
};

inline std::array<std::array<Rat, 3>, 3> nambu_a2_matrix(const NambuParams& np)
{
    const Rat &a1 = np.a[0], &a2 = np.a[1], &a3 = np.a[2], &a4 = np.a[3], &a5 = np.a[4], &a6 = np.a[5];
    return {{{a1, a2 / 2, a3 / 2}, {a2 / 2, a4, a5 / 2}, {a3 / 2, a5 / 2, a6}}};
}

namespace detail {

// f = grad(H1) x grad(H2) = 4 (x cross A2 x) as integer quadratics, together
// with the clearing factor L (the integer components equal L * f).
inline std::pair<std::array<HomogPoly, 3>, Int> nambu_field(const NambuParams& np)
{
    auto A2 = nambu_a2_matrix(np);
    std::array<RatPolyBuilder, 3> fb;
    auto add_quad = [](RatPolyBuilder& b, const Rat& c, int i, int j) {
        if (c == 0) return;
        int e[4] = {0, 0, 0, 0};
        e[i]++;
        e[j]++;
        b.add(c, e[0], e[1], e[2], e[3]);
    };
    for (int k = 0; k < 3; ++k) {
        int u = (k + 1) % 3, v = (k + 2) % 3;
        for (int j = 0; j < 3; ++j) {
            add_quad(fb[static_cast<std::size_t>(k)], Rat(4) * A2[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)], u, j);
            add_quad(fb[static_cast<std::size_t>(k)], Rat(-4) * A2[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)], v, j);
        }
    }
    Int L = 1;
    for (const auto& b : fb)
        for (const auto& [m, c] : b.terms) L = lcm(L, Int(c.get_den()));
    auto v = clear_jointly({fb[0], fb[1], fb[2]});
    return {{v[0], v[1], v[2]}, L};
}

// KHK components for the field f/L at step h, kept integral throughout:
// with h_eff = h/L,  mu = 2 L den(h),  B = mu*(x4 I - (h_eff/2) Jf_int),
//   x_i' = x_i det B + 2 num(h) (adj B . f_int)_i,    x_4' = x4 det B.
inline std::array<HomogPoly, 4> nambu_components(const NambuParams& np)
{
    auto [f, L] = nambu_field(np);
    Int h_num = Int(np.h.get_num());
    Int h_den = Int(np.h.get_den());
    auto var = [](int i) { return HomogPoly::variable(i); };
    std::array<std::array<HomogPoly, 3>, 3> B;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            HomogPoly entry = f[static_cast<std::size_t>(i)].derivative(j) * (-h_num);
            if (i == j) entry = entry + var(3) * (2 * L * h_den);
            B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry;
        }
    HomogPoly detB = B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1]) - B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0]) +
                     B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0]);
    std::array<std::array<HomogPoly, 3>, 3> adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                B[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * B[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
                B[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * B[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)];
        }
    std::array<HomogPoly, 4> comps;
    for (int i = 0; i < 3; ++i) {
        HomogPoly s = var(i) * detB;
        for (int j = 0; j < 3; ++j) {
            HomogPoly t = adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(j)];
            s = s + t * (2 * h_num);
        }
        comps[static_cast<std::size_t>(i)] = s;
    }
    comps[3] = var(3) * detB;
    return comps;
}

} // namespace detail

// KHK discretisation of x' = grad(H1) x grad(H2) with H1 = |x|^2 and
// H2 = x^T A2 x, homogenized to degree-3 components; inverse via h -> -h.
inline ProjMap build_nambu(const NambuParams& np)
{
    if (np.h == 0) fail(errc::precondition, "step h must be nonzero");
    ProjMap fwd(detail::nambu_components(np), "nambu");
    if (fwd.degree() != 3) fail(errc::degenerate_parameters, "components collapse to degree " + std::to_string(fwd.degree()));
    NambuParams rev = np;
    rev.h = -np.h;
    ProjMap bwd(detail::nambu_components(rev), "nambu^-1");
    return fwd.with_inverse(bwd);
}

// The net generated by the modified Nambu-Hamiltonians: H1, H2, and
// x4^2 + 4 h^2 H3 with H3 = x^T adj(A2) x.
inline LinearSystem nambu_net(const NambuParams& np)
{
    auto A2 = nambu_a2_matrix(np);
    auto quad_of = [](const std::array<std::array<Rat, 3>, 3>& M) {
        detail::RatPolyBuilder b;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
                int e[4] = {0, 0, 0, 0};
                e[i]++;
                e[j]++;
                b.add(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], e[0], e[1], e[2], e[3]);
            }
        return b;
    };
    std::array<std::array<Rat, 3>, 3> id{{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}};
    std::array<std::array<Rat, 3>, 3> adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                A2[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * A2[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
                A2[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * A2[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)];
        }
    detail::RatPolyBuilder h1 = quad_of(id);
    detail::RatPolyBuilder h2 = quad_of(A2);
    detail::RatPolyBuilder h3 = quad_of(adj);
    detail::RatPolyBuilder third;
    third.add(Rat(1), 0, 0, 0, 2);
    for (const auto& [m, c] : h3.terms) third.terms.emplace_back(m, Rat(4) * np.h * np.h * c);
    std::vector<HomogPoly> basis;
    for (auto* b : {&h1, &h2, &third}) {
        auto v = detail::clear_jointly({*b});
        basis.push_back(v[0].normalized());
    }
    return LinearSystem::make(std::move(basis), "nambu-net");
}

} // namespace cremona

#endif

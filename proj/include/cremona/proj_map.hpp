// Birational maps of projective 3-space given by four homogeneous components
// of a common degree, gcd-reduced and sign-normalized, with an optionally
// declared inverse. Degree sequences are computed by iterating on generic
// rational lines and clearing common factors at every step, so that the
// degree of the n-th iterate is read off exactly without composing full
// four-variable iterates.
#ifndef CREMONA_PROJ_MAP_HPP
#define CREMONA_PROJ_MAP_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/homog_poly.hpp"
#include "cremona/numeric.hpp"
#include "cremona/poly_gcd.hpp"
#include "cremona/proj_point.hpp"
#include "cremona/unipoly.hpp"

namespace cremona {

using IntMat4 = std::array<std::array<Int, 4>, 4>;

inline IntMat4 mat4_identity()
{
    IntMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j) ? 1 : 0;
    return m;
}

inline IntMat4 mat4_mul(const IntMat4& a, const IntMat4& b)
{
    IntMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int s = 0;
            for (int k = 0; k < 4; ++k) s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
        }
    return r;
}

inline Int mat4_det(const IntMat4& m)
{
    auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) -> Int {
        const auto& a = m;
        return a[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * (a[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] * a[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] - a[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)] * a[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)]) -
               a[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * (a[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)] * a[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] - a[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)] * a[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c0)]) +
               a[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c2)] * (a[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)] * a[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)] - a[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] * a[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c0)]);
    };
    Int det = 0;
    int rows[3] = {1, 2, 3};
    for (int j = 0; j < 4; ++j) {
        int cols[3];
        int k = 0;
        for (int c = 0; c < 4; ++c)
            if (c != j) cols[k++] = c;
        Int m3 = minor3(rows[0], rows[1], rows[2], cols[0], cols[1], cols[2]);
        Int term = m[0][static_cast<std::size_t>(j)] * m3;
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Adjugate: mat * adj = det * Id. Integer inverse up to scale.
inline IntMat4 mat4_adjugate(const IntMat4& m)
{
    IntMat4 adj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            // cofactor C_ji
            int rr[3], cc[3];
            int a = 0, b = 0;
            for (int r = 0; r < 4; ++r)
                if (r != j) rr[a++] = r;
            for (int c = 0; c < 4; ++c)
                if (c != i) cc[b++] = c;
            Int det3 = 0;
            for (int p = 0; p < 3; ++p) {
                Int m2 = m[static_cast<std::size_t>(rr[1])][static_cast<std::size_t>(cc[(p + 1) % 3])] * m[static_cast<std::size_t>(rr[2])][static_cast<std::size_t>(cc[(p + 2) % 3])] -
                         m[static_cast<std::size_t>(rr[1])][static_cast<std::size_t>(cc[(p + 2) % 3])] * m[static_cast<std::size_t>(rr[2])][static_cast<std::size_t>(cc[(p + 1) % 3])];
                det3 += m[static_cast<std::size_t>(rr[0])][static_cast<std::size_t>(cc[p])] * m2;
            }
            Int sgn = ((i + j) % 2 == 0) ? 1 : -1;
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sgn * det3;
        }
    return adj;
}

inline ProjPoint mat4_apply(const IntMat4& m, const ProjPoint& p)
{
    std::array<Int, 4> y;
    for (int i = 0; i < 4; ++i) {
        Int s = 0;
        for (int j = 0; j < 4; ++j) s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return ProjPoint(std::move(y));
}

class ProjMap {
public:
    // Reduces the components by their common gcd and normalizes the global
    // sign so that the first nonzero component has a positive leading
    // coefficient.
    explicit ProjMap(std::array<HomogPoly, 4> comps, std::string label = "")
        : label_(std::move(label))
    {
        bool all_zero = true;
        int deg = -1;
        for (const auto& c : comps) {
            if (c.is_zero()) continue;
            all_zero = false;
            if (deg < 0) deg = c.degree();
            else if (deg != c.degree()) fail(errc::precondition, "components of unequal degree");
        }
        if (all_zero) fail(errc::degenerate_composition, "all components vanish identically");
        HomogPoly g = gcd_multivariate({comps[0], comps[1], comps[2], comps[3]});
        for (auto& c : comps) c = c.is_zero() ? c : c.divide_exact(g);
        for (const auto& c : comps) {
            if (c.is_zero()) continue;
            if (sign(c.leading_coefficient()) < 0)
                for (auto& x : comps) x = -x;
            break;
        }
        comps_ = std::move(comps);
    }

    static ProjMap identity()
    {
        return ProjMap({HomogPoly::variable(0), HomogPoly::variable(1), HomogPoly::variable(2), HomogPoly::variable(3)}, "id").with_self_inverse();
    }

    // Linear map whose i-th component is the i-th row of the matrix; the
    // declared inverse is the adjugate.
    static ProjMap linear(const IntMat4& m, std::string label = "")
    {
        if (mat4_det(m) == 0) fail(errc::singular_matrix, "linear map from a singular matrix");
        ProjMap fwd(components_of(m), label);
        ProjMap bwd(components_of(mat4_adjugate(m)), label.empty() ? "" : label + "^-1");
        fwd.inverse_ = std::make_shared<ProjMap>(std::move(bwd));
        return fwd;
    }

    // The standard Cremona transformation [x2x3x4 : x1x3x4 : x1x2x4 : x1x2x3],
    // an involution.
    static ProjMap cremona()
    {
        auto mono = [](int a, int b, int c) {
            Monomial m;
            m.e[static_cast<std::size_t>(a)] = 1;
            m.e[static_cast<std::size_t>(b)] = 1;
            m.e[static_cast<std::size_t>(c)] = 1;
            return HomogPoly::monomial(m, 1);
        };
        ProjMap m({mono(1, 2, 3), mono(0, 2, 3), mono(0, 1, 3), mono(0, 1, 2)}, "cremona");
        return m.with_self_inverse();
    }

    ProjMap with_self_inverse() const
    {
        ProjMap r = *this;
        ProjMap mirror = *this;
        r.inverse_ = std::make_shared<ProjMap>(std::move(mirror));
        return r;
    }

    ProjMap with_inverse(ProjMap inv) const
    {
        ProjMap r = *this;
        inv.inverse_.reset();
        r.inverse_ = std::make_shared<ProjMap>(std::move(inv));
        return r;
    }

    const std::array<HomogPoly, 4>& components() const { return comps_; }
    int degree() const
    {
        for (const auto& c : comps_)
            if (!c.is_zero()) return c.degree();
        return -1;
    }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    bool has_inverse() const { return inverse_ != nullptr; }
    const ProjMap& inverse() const
    {
        if (!inverse_) fail(errc::precondition, "no declared inverse");
        return *inverse_;
    }

    bool same_map_as(const ProjMap& o) const { return comps_ == o.comps_; }

    bool is_linear_identity() const
    {
        return degree() == 1 && same_map_as(identity());
    }

    ProjPoint apply(const ProjPoint& p) const
    {
        std::array<Int, 4> y;
        bool all_zero = true;
        for (int i = 0; i < 4; ++i) {
            y[static_cast<std::size_t>(i)] = comps_[static_cast<std::size_t>(i)].evaluate(p.coords());
            if (y[static_cast<std::size_t>(i)] != 0) all_zero = false;
        }
        if (all_zero) fail(errc::base_locus, "point lies in the base locus: " + p.to_string());
        return ProjPoint(std::move(y));
    }

    bool in_base_locus(const ProjPoint& p) const
    {
        for (int i = 0; i < 4; ++i)
            if (comps_[static_cast<std::size_t>(i)].evaluate(p.coords()) != 0) return false;
        return true;
    }

    // Pullback of a homogeneous polynomial of degree >= 1: substitution of the
    // components, no reduction.
    HomogPoly pullback(const HomogPoly& f) const
    {
        if (f.is_zero() || f.degree() < 1) fail(errc::precondition, "pullback needs a homogeneous polynomial of degree >= 1");
        return f.substitute(comps_);
    }

private:
    static std::array<HomogPoly, 4> components_of(const IntMat4& m)
    {
        std::array<HomogPoly, 4> comps;
        for (int i = 0; i < 4; ++i) {
            std::vector<HomogPoly::Term> ts;
            for (int j = 0; j < 4; ++j) {
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
                Monomial mono;
                mono.e[static_cast<std::size_t>(j)] = 1;
                ts.push_back(HomogPoly::Term{mono, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
            }
            comps[static_cast<std::size_t>(i)] = HomogPoly::from_terms(std::move(ts));
        }
        return comps;
    }

    std::array<HomogPoly, 4> comps_;
    std::shared_ptr<const ProjMap> inverse_;
    std::string label_;
};

struct Composition {
    ProjMap map;
    HomogPoly removed_factor; // common factor cleared during reduction
};

// outer(inner(x)) with the common factor divided out; the removed gcd is
// returned alongside (the kappa factor of a single step). Inverses compose in
// reverse order when both are declared.
inline Composition compose(const ProjMap& outer, const ProjMap& inner)
{
    std::array<HomogPoly, 4> raw;
    for (int i = 0; i < 4; ++i) raw[static_cast<std::size_t>(i)] = outer.components()[static_cast<std::size_t>(i)].substitute(inner.components());
    bool all_zero = true;
    for (const auto& c : raw)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) fail(errc::degenerate_composition, "all components vanish identically");
    HomogPoly g = gcd_multivariate({raw[0], raw[1], raw[2], raw[3]});
    ProjMap m(raw); // constructor re-reduces; raw/g has gcd 1
    std::string label;
    if (!outer.label().empty() || !inner.label().empty()) label = outer.label() + "*" + inner.label();
    m.set_label(label);
    if (outer.has_inverse() && inner.has_inverse()) {
        Composition inv = compose(inner.inverse(), outer.inverse());
        m = m.with_inverse(inv.map);
    }
    return Composition{std::move(m), g.normalized_sign()};
}

// Raw composition without any reduction, for kappa/lambda extraction.
inline std::array<HomogPoly, 4> compose_unreduced(const ProjMap& outer, const ProjMap& inner)
{
    std::array<HomogPoly, 4> raw;
    for (int i = 0; i < 4; ++i) raw[static_cast<std::size_t>(i)] = outer.components()[static_cast<std::size_t>(i)].substitute(inner.components());
    return raw;
}

// --- degree sequences --------------------------------------------------------

struct DegreeSequence {
    std::vector<long long> values; // d_0 = 1, d_1 = deg(map), ...
    std::string map_label;
    bool truncated = false;
};

namespace detail {

// Homogeneous bivariate polynomial in (t, s), stored as the dense univariate
// coefficient vector in t; the formal degree tracks the implicit s-padding.
struct BiPoly {
    UniPoly c;
    int formal_degree = 0;
};

// One run of the reduced-iterate degree computation along the rational line
// a*t + b*s. Returns nullopt if the line degenerates (lands in a base locus).
inline std::optional<DegreeSequence> degree_run(const ProjMap& map, int n_max, long long degree_cap,
                                                const std::array<long, 4>& a, const std::array<long, 4>& b)
{
    const int m = map.degree();
    std::array<BiPoly, 4> cur;
    for (int i = 0; i < 4; ++i) cur[static_cast<std::size_t>(i)] = BiPoly{uni_from({b[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)]}), 1};
    DegreeSequence out;
    out.map_label = map.label();
    out.values.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        const long long raw_formal = static_cast<long long>(m) * cur[0].formal_degree;
        std::array<UniPoly, 4> next;
        for (int i = 0; i < 4; ++i) {
            // evaluate the i-th component at the current bivariate tuple
            std::array<std::vector<UniPoly>, 4> powers;
            auto pw = [&](int v, int e) -> const UniPoly& {
                auto& tab = powers[static_cast<std::size_t>(v)];
                if (tab.empty()) tab.push_back(UniPoly{Int(1)});
                while (static_cast<int>(tab.size()) <= e) tab.push_back(uni_mul(tab.back(), cur[static_cast<std::size_t>(v)].c));
                return tab[static_cast<std::size_t>(e)];
            };
            UniPoly acc;
            for (const auto& t : map.components()[static_cast<std::size_t>(i)].terms()) {
                UniPoly term{t.coef};
                for (int v = 0; v < 4; ++v) {
                    int e = t.mono.e[static_cast<std::size_t>(v)];
                    if (e > 0) term = uni_mul(term, pw(v, e));
                }
                acc = uni_add(acc, term);
            }
            next[static_cast<std::size_t>(i)] = std::move(acc);
        }
        bool all_zero = true;
        for (const auto& f : next)
            if (!uni_is_zero(f)) all_zero = false;
        if (all_zero) return std::nullopt;

        // clear the integer content, the common power of s (formal-degree
        // slack), and the polynomial gcd in t
        Int icont = 0;
        for (const auto& f : next) icont = gcd(icont, uni_content(f));
        if (icont > 1)
            for (auto& f : next)
                for (auto& x : f) x = divexact(x, icont);
        long long s_val = raw_formal;
        for (const auto& f : next)
            if (!uni_is_zero(f)) s_val = std::min(s_val, raw_formal - uni_degree(f));
        UniPoly g;
        for (const auto& f : next) {
            g = uni_gcd(g, f);
            if (uni_degree(g) == 0) break;
        }
        long long new_formal = raw_formal - s_val - std::max(uni_degree(g), 0);
        if (new_formal > degree_cap) {
            out.truncated = true;
            return out;
        }
        for (int i = 0; i < 4; ++i) {
            cur[static_cast<std::size_t>(i)].c = uni_is_zero(next[static_cast<std::size_t>(i)]) ? UniPoly{} : uni_divexact(next[static_cast<std::size_t>(i)], g);
            cur[static_cast<std::size_t>(i)].formal_degree = static_cast<int>(new_formal);
        }
        out.values.push_back(new_formal);
    }
    return out;
}

} // namespace detail

// Degrees of the reduced iterates map^n for n = 0..n_max, computed on generic
// rational lines; two independent lines are used and the termwise maximum
// taken (a special line can only lower a degree, never raise it).
inline DegreeSequence degree_sequence(const ProjMap& map, int n_max, long long degree_cap = 300)
{
    if (n_max < 1) fail(errc::precondition, "n_max must be >= 1");
    static const std::array<std::array<long, 4>, 6> line_points = {{{3, 1, 7, 2},
                                                                    {5, 11, 4, 9},
                                                                    {2, 9, 5, 3},
                                                                    {7, 4, 13, 8},
                                                                    {10, 3, 1, 6},
                                                                    {1, 8, 12, 5}}};
    std::vector<DegreeSequence> runs;
    for (std::size_t k = 0; k + 1 < line_points.size() && runs.size() < 2; k += 2) {
        auto r = detail::degree_run(map, n_max, degree_cap, line_points[k], line_points[k + 1]);
        if (r) runs.push_back(std::move(*r));
    }
    if (runs.empty()) fail(errc::base_locus, "all probe lines degenerate for this map");
    DegreeSequence out = runs.front();
    for (std::size_t k = 1; k < runs.size(); ++k) {
        const auto& r = runs[k];
        if (r.values.size() > out.values.size()) {
            bool prefix_le = true;
            for (std::size_t i = 0; i < out.values.size(); ++i)
                if (r.values[i] < out.values[i]) prefix_le = false;
            if (prefix_le) out = r;
            continue;
        }
        for (std::size_t i = 0; i < r.values.size(); ++i) out.values[i] = std::max(out.values[i], r.values[i]);
    }
    return out;
}

} // namespace cremona

#endif

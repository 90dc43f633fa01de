// The Cremona-cubes group: projectivities with entries in {-1,0,1} (up to a
// global scalar) preserving the twelve special points R = E u P u Q, where E
// holds the coordinate points and P u Q the fixed points of the standard
// Cremona transformation. Provides membership, closure enumeration, the
// A/B/C type classification by the orbit of E, element orders, and the
// conjugacy classes of the signed-permutation subgroup.
#ifndef CREMONA_CUBES_HPP
#define CREMONA_CUBES_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/proj_map.hpp"
#include "cremona/proj_point.hpp"

namespace cremona {

struct SpecialPoints {
    std::array<ProjPoint, 4> E, P, Q;

    static const SpecialPoints& instance()
    {
        static const SpecialPoints sp = [] {
            SpecialPoints s;
            s.E = {ProjPoint(1, 0, 0, 0), ProjPoint(0, 1, 0, 0), ProjPoint(0, 0, 1, 0), ProjPoint(0, 0, 0, 1)};
            s.P = {ProjPoint(1, -1, -1, -1), ProjPoint(-1, 1, -1, -1), ProjPoint(-1, -1, 1, -1),
                   ProjPoint(-1, -1, -1, 1)};
            s.Q = {ProjPoint(1, -1, -1, 1), ProjPoint(-1, 1, -1, 1), ProjPoint(1, 1, -1, -1), ProjPoint(1, 1, 1, 1)};
            return s;
        }();
        return sp;
    }

    std::vector<ProjPoint> all() const
    {
        std::vector<ProjPoint> r;
        for (const auto& p : E) r.push_back(p);
        for (const auto& p : P) r.push_back(p);
        for (const auto& p : Q) r.push_back(p);
        return r;
    }
};

enum class ElemType { A, B, C };

inline const char* to_string(ElemType t)
{
    switch (t) {
        case ElemType::A: return "A";
        case ElemType::B: return "B";
        case ElemType::C: return "C";
    }
    return "?";
}

struct ElementType {
    ElemType tag;
    int orbit_size; // 8 for A, 4 for B, 12 for C
};

// A projectivity represented by an integer matrix, canonicalized by dividing
// out the integer content and fixing the sign of the first nonzero entry in
// row-major order.
class GroupElement {
public:
    using Mat = std::array<std::array<long, 4>, 4>;

    explicit GroupElement(Mat m) : m_(m) { canonicalize(); }

    static GroupElement identity()
    {
        Mat m{};
        for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return GroupElement(m);
    }

    const Mat& matrix() const { return m_; }

    bool operator==(const GroupElement& o) const { return m_ == o.m_; }
    bool operator!=(const GroupElement& o) const { return m_ != o.m_; }
    bool operator<(const GroupElement& o) const { return m_ < o.m_; }

    GroupElement operator*(const GroupElement& o) const
    {
        Mat r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                long s = 0;
                for (int k = 0; k < 4; ++k) s += m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * o.m_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            }
        return GroupElement(r);
    }

    GroupElement inverse() const
    {
        IntMat4 a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (mat4_det(a) == 0) fail(errc::singular_matrix, "singular group element");
        IntMat4 adj = mat4_adjugate(a);
        Mat r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long>(adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_si());
        return GroupElement(r);
    }

    ProjPoint apply(const ProjPoint& p) const
    {
        std::array<Int, 4> y;
        for (int i = 0; i < 4; ++i) {
            Int s = 0;
            for (int j = 0; j < 4; ++j) s += Int(m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * p[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        return ProjPoint(std::move(y));
    }

    ProjMap as_map(std::string label = "") const
    {
        IntMat4 a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return ProjMap::linear(a, std::move(label));
    }

    // Row-major flattening, handy as a canonical tie-breaker.
    std::array<long, 16> flat() const
    {
        std::array<long, 16> f{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) f[static_cast<std::size_t>(4 * i + j)] = m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return f;
    }

    // true when the matrix has exactly one nonzero entry (+-1) per row and
    // column: the signed permutations, i.e. the type-B shape.
    bool is_signed_permutation() const
    {
        for (int i = 0; i < 4; ++i) {
            int nz = 0;
            for (int j = 0; j < 4; ++j)
                if (m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) ++nz;
            if (nz != 1) return false;
        }
        for (int j = 0; j < 4; ++j) {
            int nz = 0;
            for (int i = 0; i < 4; ++i)
                if (m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) ++nz;
            if (nz != 1) return false;
        }
        return true;
    }

    // For signed permutations: the underlying permutation sigma with
    // g(e_i) = +- e_{sigma(i)}.
    std::array<int, 4> permutation() const
    {
        if (!is_signed_permutation()) fail(errc::type_mismatch, "not a signed permutation");
        std::array<int, 4> sigma{};
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i)
                if (m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) sigma[static_cast<std::size_t>(j)] = i;
        return sigma;
    }

private:
    Mat m_;

    void canonicalize()
    {
        long g = 0;
        for (const auto& row : m_)
            for (long x : row) g = std::gcd(g, std::abs(x));
        if (g == 0) fail(errc::singular_matrix, "zero matrix");
        if (g > 1)
            for (auto& row : m_)
                for (auto& x : row) x /= g;
        for (const auto& row : m_)
            for (long x : row) {
                if (x == 0) continue;
                if (x < 0)
                    for (auto& r : m_)
                        for (auto& y : r) y = -y;
                return;
            }
    }
};

// The generator g0 whose rows and columns are the points of P; conjugating
// the Euler-top discretisation by a projectivity lands on g0 o cremona.
inline GroupElement g0()
{
    return GroupElement(GroupElement::Mat{{{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}}});
}

// Generators of the signed-permutation subgroup C_B.
inline std::vector<GroupElement> cb_generators()
{
    return {
        GroupElement(GroupElement::Mat{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}}),
        GroupElement(GroupElement::Mat{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}}),
        GroupElement(GroupElement::Mat{{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}}),
        GroupElement(GroupElement::Mat{{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}),
    };
}

inline bool point_in_R(const ProjPoint& p)
{
    const auto& sp = SpecialPoints::instance();
    for (const auto& x : sp.E)
        if (x == p) return true;
    for (const auto& x : sp.P)
        if (x == p) return true;
    for (const auto& x : sp.Q)
        if (x == p) return true;
    return false;
}

// Membership in the Cremona-cubes group: the induced projectivity maps each
// of the twelve points of R to a point of R.
inline bool is_member(const GroupElement::Mat& m)
{
    IntMat4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (mat4_det(a) == 0) fail(errc::singular_matrix, "membership test needs an invertible matrix");
    GroupElement g(m);
    for (const auto& p : SpecialPoints::instance().all())
        if (!point_in_R(g.apply(p))) return false;
    return true;
}

// Closure of {C_B generators, g0} under multiplication modulo global sign.
inline const std::vector<GroupElement>& enumerate_group()
{
    static const std::vector<GroupElement> elems = [] {
        std::vector<GroupElement> gens = cb_generators();
        gens.push_back(g0());
        std::set<GroupElement> seen(gens.begin(), gens.end());
        seen.insert(GroupElement::identity());
        std::vector<GroupElement> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<GroupElement> next;
            for (const auto& f : frontier)
                for (const auto& g : gens) {
                    GroupElement h = f * g;
                    if (seen.insert(h).second) next.push_back(h);
                    if (seen.size() > 4096) fail(errc::closure_overflow, "group closure exceeded safety bound");
                }
            frontier = std::move(next);
        }
        return std::vector<GroupElement>(seen.begin(), seen.end());
    }();
    return elems;
}

// Orbit of the four coordinate points under powers of g.
inline std::set<ProjPoint> orbit_of_E(const GroupElement& g)
{
    std::set<ProjPoint> orbit;
    std::vector<ProjPoint> frontier;
    for (const auto& e : SpecialPoints::instance().E) {
        orbit.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<ProjPoint> next;
        for (const auto& p : frontier) {
            ProjPoint q = g.apply(p);
            if (orbit.insert(q).second) next.push_back(q);
            if (orbit.size() > 16) fail(errc::unexpected_orbit_size, "orbit of E escaped R");
        }
        frontier = std::move(next);
    }
    return orbit;
}

inline ElementType classify(const GroupElement& g)
{
    std::size_t n = orbit_of_E(g).size();
    switch (n) {
        case 4: return ElementType{ElemType::B, 4};
        case 8: return ElementType{ElemType::A, 8};
        case 12: return ElementType{ElemType::C, 12};
        default: fail(errc::unexpected_orbit_size, "orbit of E has size " + std::to_string(n));
    }
}

inline int element_order(const GroupElement& g)
{
    GroupElement id = GroupElement::identity();
    GroupElement h = g;
    for (int k = 1; k <= 64; ++k) {
        if (h == id) return k;
        h = h * g;
    }
    fail(errc::unexpected_orbit_size, "element order exceeds bound");
}

// The 192 signed permutations, i.e. the subgroup C_B.
inline const std::vector<GroupElement>& enumerate_cb()
{
    static const std::vector<GroupElement> elems = [] {
        std::vector<GroupElement> r;
        for (const auto& g : enumerate_group())
            if (g.is_signed_permutation()) r.push_back(g);
        return r;
    }();
    return elems;
}

struct ConjugacyClass {
    GroupElement representative; // least canonical form in row-major order
    std::vector<GroupElement> members;
    int order; // common order of the members
};

// Conjugacy classes of C_B under conjugation within C_B.
inline std::vector<ConjugacyClass> conjugacy_classes_B()
{
    const auto& cb = enumerate_cb();
    std::set<GroupElement> remaining(cb.begin(), cb.end());
    std::vector<ConjugacyClass> classes;
    while (!remaining.empty()) {
        GroupElement seed = *remaining.begin();
        std::set<GroupElement> cls;
        for (const auto& h : cb) cls.insert(h * seed * h.inverse());
        ConjugacyClass c{*cls.begin(), std::vector<GroupElement>(cls.begin(), cls.end()), element_order(seed)};
        for (const auto& x : cls) remaining.erase(x);
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(),
              [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
    return classes;
}

// Which of the families E, P, Q a group element sends a family to, and the
// index permutation it induces; the image family is determined pointwise.
struct FamilyAction {
    char target;              // 'E', 'P', or 'Q'
    std::array<int, 4> perm;  // g(X_i) = Target_{perm[i]}
};

inline FamilyAction family_action(const GroupElement& g, const std::array<ProjPoint, 4>& family)
{
    const auto& sp = SpecialPoints::instance();
    auto locate = [&](const ProjPoint& p) -> std::optional<std::pair<char, int>> {
        for (int i = 0; i < 4; ++i) {
            if (sp.E[static_cast<std::size_t>(i)] == p) return std::make_pair('E', i);
            if (sp.P[static_cast<std::size_t>(i)] == p) return std::make_pair('P', i);
            if (sp.Q[static_cast<std::size_t>(i)] == p) return std::make_pair('Q', i);
        }
        return std::nullopt;
    };
    FamilyAction act{};
    char target = 0;
    for (int i = 0; i < 4; ++i) {
        auto loc = locate(g.apply(family[static_cast<std::size_t>(i)]));
        if (!loc) fail(errc::unexpected_orbit_size, "image of a special point left R");
        if (i == 0) target = loc->first;
        else if (loc->first != target) fail(errc::unexpected_orbit_size, "family image split across E/P/Q");
        act.perm[static_cast<std::size_t>(i)] = loc->second;
    }
    act.target = target;
    return act;
}

} // namespace cremona

#endif

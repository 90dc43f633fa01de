// Built-in linear systems and invariant tables for the three conjugacy types:
// the nets of quadrics through the coordinate points and the fixed points,
// the five-dimensional system of quadrics through the coordinate points, the
// desmic pencil of quartics, and the tabulated invariants paired with
// representative group elements, keyed by (case, row).
#ifndef CREMONA_CATALOG_HPP
#define CREMONA_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "cremona/cubes.hpp"
#include "cremona/invariants.hpp"

namespace cremona {
namespace catalog {

inline HomogPoly P(const std::string& s) { return HomogPoly::parse(s); }

inline RationalFunction RF(const HomogPoly& num, const HomogPoly& den) { return RationalFunction(num, den); }

// --- linear systems -----------------------------------------------------------

// Net of quadrics through the coordinate points and the points of P.
inline LinearSystem sigma_P()
{
    return LinearSystem::make({P("x1*x2+x3*x4"), P("x1*x3+x2*x4"), P("x1*x4+x2*x3")}, "sigmaP");
}

// Net of quadrics through the coordinate points and the points of Q.
inline LinearSystem sigma_Q()
{
    return LinearSystem::make({P("x1*x2-x3*x4"), P("x1*x3-x2*x4"), P("x1*x4-x2*x3")}, "sigmaQ");
}

// Quadrics through the four coordinate points (projective dimension 5).
inline LinearSystem sigma_B()
{
    return LinearSystem::make({P("x1*x2"), P("x1*x3"), P("x1*x4"), P("x2*x3"), P("x2*x4"), P("x3*x4")}, "sigmaB");
}

// The three reducible members of the pencil of quartics nodal at all twelve
// special points; any two span the pencil and they sum to zero with signs
// A - B + C = 0.
inline HomogPoly desmic_A() { return P("x1^2-x2^2") * P("x3^2-x4^2"); }
inline HomogPoly desmic_B() { return P("x1^2-x3^2") * P("x2^2-x4^2"); }
inline HomogPoly desmic_C() { return P("x1^2-x4^2") * P("x2^2-x3^2"); }

inline LinearSystem desmic_pencil() { return LinearSystem::make({desmic_A(), desmic_B()}, "desmic"); }

// --- type A -------------------------------------------------------------------

struct CaseARow {
    std::string label; // "i".."v"
    std::vector<GroupElement> matrices;
    std::vector<RationalFunction> invariants;
};

inline GroupElement GE(std::array<std::array<long, 4>, 4> m) { return GroupElement(m); }

inline const std::vector<CaseARow>& case_a_rows()
{
    static const std::vector<CaseARow> rows = [] {
        std::vector<CaseARow> r;
        r.push_back({"i",
                     {GE({{{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}}})},
                     {RF(P("x3+x4") * P("x1+x2"), P("x2-x3") * P("x1-x4")),
                      RF(P("x2+x3") * P("x1+x4"), P("x2-x3") * P("x1-x4"))}});
        r.push_back({"ii",
                     {GE({{{1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {-1, 1, 1, 1}}}),
                      GE({{{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, 1, -1}, {1, 1, -1, 1}}})},
                     {RF(P("x1*x2+x3*x4"), P("x3+x4") * P("x1+x2")),
                      RF((P("x3-x4") * P("x1-x2")).pow(2), (P("x3+x4") * P("x1+x2")).pow(2))}});
        r.push_back({"iii",
                     {GE({{{-1, 1, -1, -1}, {1, -1, -1, -1}, {1, 1, 1, -1}, {1, 1, -1, 1}}})},
                     {RF(P("x3+x4") * P("x1+x2"), P("x3-x4") * P("x1-x2")),
                      RF((P("x1*x2+x3*x4")).pow(2), (P("x3-x4") * P("x1-x2")).pow(2))}});
        r.push_back({"iv",
                     {GE({{{-1, 1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}}})},
                     {RF(P("x1*x2+x1*x3+x1*x4+x2*x3+x2*x4+x3*x4").pow(2),
                         P("x1*x2+x3*x4").pow(2) + P("x1*x3+x2*x4").pow(2) + P("x1*x4+x2*x3").pow(2)),
                      RF(P("x3+x4") * P("x1+x2") * P("x2+x4") * P("x1+x3") * P("x2+x3") * P("x1+x4"),
                         P("x3-x4") * P("x2-x4") * P("x2-x3") * P("x1-x4") * P("x1-x3") * P("x1-x2"))}});
        // denominator of the second case-(v) invariant: the signed sum over
        // the two independent sign choices
        HomogPoly vden = HomogPoly::zero();
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
                auto lin = [&](int a, int b, int s) {
                    return s > 0 ? P("x" + std::to_string(a) + "+x" + std::to_string(b))
                                 : P("x" + std::to_string(a) + "-x" + std::to_string(b));
                };
                HomogPoly t = lin(1, 2, s1) * lin(3, 4, s1) * lin(1, 4, s2) * lin(2, 3, s2);
                vden = vden.is_zero() ? (s1 > 0 ? t : -t) : (s1 > 0 ? vden + t : vden - t);
            }
        r.push_back({"v",
                     {GE({{{-1, 1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, -1, -1}}})},
                     {RF((P("x2+x4") * P("x1+x3")).pow(2) + (P("x2-x4") * P("x1-x3")).pow(2),
                         P("x3+x4") * P("x1+x2") * P("x3-x4") * P("x1-x2") -
                             P("x2+x3") * P("x1+x4") * P("x2-x3") * P("x1-x4")),
                      RF(P("x2+x4") * P("x1+x3") * P("x2-x4") * P("x1-x3"), vden)}});
        return r;
    }();
    return rows;
}

// Anti-invariants for the case-A rows (ii) and (iii): each is the square root
// of the row's printed quartic invariant, and changes sign under the map.
inline RationalFunction anti_invariant_ii() { return RF(P("x3-x4") * P("x1-x2"), P("x3+x4") * P("x1+x2")); }
inline RationalFunction anti_invariant_iii() { return RF(P("x1*x2+x3*x4"), P("x3-x4") * P("x1-x2")); }

// The 3-cycled triple for row (iv) and the 4-cycled pair for row (v).
inline std::vector<RationalFunction> cyclic_triple_iv()
{
    return {RF(P("x1+x2") * P("x3+x4"), P("x1-x4") * P("x2-x3")),
            RF(-(P("x1+x4") * P("x2+x3")), P("x1-x3") * P("x2-x4")),
            RF(P("x1+x3") * P("x2+x4"), P("x1-x2") * P("x3-x4"))};
}

inline std::vector<RationalFunction> cyclic_pair_v()
{
    return {RF(P("x1+x4") * P("x2+x3"), P("x1-x4") * P("x2-x3")),
            RF(P("x1+x2") * P("x3+x4"), P("x1-x2") * P("x3-x4"))};
}

// --- type B -------------------------------------------------------------------

struct CaseBRow {
    std::string label; // "i".."xiv"
    GroupElement matrix;
    int order;
    std::vector<RationalFunction> invariants; // empty when the table has no row
};

inline const std::vector<CaseBRow>& case_b_rows()
{
    static const std::vector<CaseBRow> rows = [] {
        std::vector<CaseBRow> r;
        r.push_back({"i", GroupElement::identity(), 1, {}});
        r.push_back({"ii", GE({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}}), 2,
                     {RF(P("x2^2-x4^2") * P("x1+x3").pow(2), P("x3^2-x4^2") * P("x1+x2").pow(2)),
                      RF(P("x2-x3").pow(2) * P("x1^2-x4^2"), P("x3^2-x4^2") * P("x1+x2").pow(2)),
                      RF(P("x2+x3").pow(2) * P("x1^2-x4^2"), P("x3^2-x4^2") * P("x1+x2").pow(2))}});
        r.push_back({"iii", GE({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}}), 2,
                     {RF(P("x2-x4") * P("x1+x3") + P("x2-x3") * P("x1+x4"), P("x3-x4") * P("x1-x2")),
                      RF(P("x2-x3") * P("x1-x4") + P("x2-x4") * P("x1-x3"), P("x3+x4") * P("x1+x2")),
                      RF(P("x2-x4") * P("x1+x3") - P("x2-x3") * P("x1+x4"), P("x3+x4") * P("x1+x2"))}});
        r.push_back({"iv", GE({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}}), 2, {}});
        r.push_back({"v", GE({{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}}), 2, {}});
        r.push_back({"vi", GE({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}}), 2,
                     {RF(P("x2-x3") * P("x1-x4"), P("x3+x4") * P("x1+x2")),
                      RF(P("x2+x3") * P("x1+x4"), P("x3+x4") * P("x1+x2")),
                      RF(P("x2-x4") * P("x1+x3") - P("x2+x4") * P("x1-x3"), P("x3+x4") * P("x1+x2"))}});
        r.push_back({"vii", GE({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}}), 2, {}});
        r.push_back({"viii", GE({{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}}}), 3, {}});
        r.push_back({"ix", GE({{{0, 0, 0, 1}, {0, 0, -1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}}), 4,
                     {RF(P("2x1*x2+x1*x3-x1*x4-x2*x3-x2*x4"), P("2x1*x2-x1*x3+x1*x4+x2*x3+x2*x4")),
                      RF(P("x2+x4") * P("x1+x3") * P("x2-x3") * P("x1+x4"), P("x3^2+x4^2") * P("x1^2+x2^2")),
                      RF(P("x2-x4") * P("x1-x3") * P("x2+x3") * P("x1-x4"), P("x3^2+x4^2") * P("x1^2+x2^2"))}});
        // The source table prints the row-(ix) functions again for row (x);
        // they are only 4-invariant here. These three are rebuilt from the
        // eigenvectors of the induced automorphism on the quadrics through
        // the coordinate points and verify as honest invariants.
        r.push_back({"x", GE({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}}), 4,
                     {RF(P("x1+x2") * P("x3"), P("x1-x2") * P("x4")),
                      RF(P("x1-x2") * P("x3"), P("x1+x2") * P("x4")),
                      RF(P("x1^2*x2^2+x3^2*x4^2"), P("x1^2-x2^2") * P("x3*x4"))}});
        r.push_back({"xi", GE({{{-1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}}}), 4,
                     {RF(P("x1*x4-x2*x3").pow(2), P("x1*x4+x2*x3").pow(2)),
                      RF(P("x1^2*x2^2+x1^2*x3^2+4x1*x2*x3*x4+x2^2*x4^2+x3^2*x4^2"), P("x1*x4+x2*x3").pow(2)),
                      RF(P("x1^2*x2^2-2x1^2*x2*x3-x1^2*x3^2+x2^2*x4^2+2x2*x3*x4^2-x3^2*x4^2"),
                         P("x1*x4+x2*x3").pow(2))}});
        r.push_back({"xii", GE({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}}), 4,
                     {RF(P("x1-x2"), P("x1+x2")),
                      RF(Int(2) * (P("x2^2+x4^2") * P("x1^2+x3^2")), P("x1+x2").pow(2) * P("x3^2+x4^2")),
                      RF(Int(2) * (P("x2^2+x3^2") * P("x1^2+x4^2")), P("x1+x2").pow(2) * P("x3^2+x4^2"))}});
        r.push_back({"xiii", GE({{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}}), 4,
                     {RF(P("x2+x4") * P("x1+x3"), P("x1*x2+2x1*x3+x1*x4+x2*x3+2x2*x4+x3*x4")),
                      RF(P("x1*x3-x2*x4"), P("x1*x2+2x1*x3+x1*x4+x2*x3+2x2*x4+x3*x4")),
                      RF(P("x1^2*x2^2+x1^2*x4^2-4x1*x2*x3*x4+x2^2*x3^2+x3^2*x4^2"),
                         P("x1^2*x2^2+2x1^2*x3^2+x1^2*x4^2-8x1*x2*x3*x4+x2^2*x3^2+2x2^2*x4^2+x3^2*x4^2"))}});
        {
            // row (xiv): symmetric sums over {i,j,k} = {2,3,4}
            auto sum_a = [&](bool plus) {
                HomogPoly acc = HomogPoly::zero();
                int triples[3][3] = {{2, 3, 4}, {3, 2, 4}, {4, 2, 3}};
                for (auto& t : triples) {
                    HomogPoly term = P("x1^2+x" + std::to_string(t[0]) + "^2") *
                                     (plus ? P("x" + std::to_string(t[1]) + "+x" + std::to_string(t[2]))
                                           : P("x" + std::to_string(t[1]) + "-x" + std::to_string(t[2])))
                                         .pow(2);
                    acc = acc.is_zero() ? term : acc + term;
                }
                return acc;
            };
            auto sum_b = [&](bool plus) {
                HomogPoly acc = HomogPoly::zero();
                int triples[3][3] = {{2, 3, 4}, {3, 2, 4}, {4, 2, 3}};
                for (auto& t : triples) {
                    HomogPoly term = P("x1*x" + std::to_string(t[0])) *
                                     (plus ? P("x" + std::to_string(t[1]) + "+x" + std::to_string(t[2]))
                                           : P("x" + std::to_string(t[1]) + "-x" + std::to_string(t[2])))
                                         .pow(2);
                    acc = acc.is_zero() ? term : acc + term;
                }
                return acc;
            };
            r.push_back({"xiv", GE({{{-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}}), 6,
                         {RF(sum_a(false), sum_a(true)), RF(sum_b(false), sum_b(true)),
                          RF(P("x1*x2+x1*x3+x1*x4+x2*x3+x2*x4+x3*x4") * P("x1*x2+x1*x3+x1*x4-x2*x3-x2*x4-x3*x4"),
                             sum_b(true))}});
        }
        return r;
    }();
    return rows;
}

// Combinations of the row invariants that stay invariant for every power
// g^k o cremona: "lift" marks R~ = cremona^*(R) + R, "square" marks R^2.
struct RelationBRow {
    std::string source;       // case whose invariants are combined
    std::string square_class; // conjugacy class of the square
    std::array<char, 3> ops;  // 'l' lift, 's' square, 'k' keep, per invariant
};

inline const std::vector<RelationBRow>& relation_b()
{
    // Two deviations from the printed table: row (x) carries rebuilt
    // invariants whose first two transfer by the lift (their squares do not),
    // and the square of the row-(xiii) matrix is an unsigned double
    // transposition, hence lands in class (vi), not (v).
    static const std::vector<RelationBRow> rows = {
        {"ix", "vii", {'l', 's', 's'}},  {"x", "iv", {'l', 'l', 's'}},   {"xi", "iv", {'k', 'k', 's'}},
        {"xii", "iv", {'s', 'k', 'k'}},  {"xiii", "vi", {'k', 'l', 's'}}, {"xiv", "viii", {'k', 'k', 's'}},
    };
    return rows;
}

inline RationalFunction apply_relation_op(char op, const RationalFunction& r)
{
    switch (op) {
        case 'l': return k_invariant_lift(r);
        case 's': return r.squared();
        default: return r;
    }
}

// --- type C -------------------------------------------------------------------

struct CaseCRow {
    std::string label; // fixed locus on the desmic pencil
    GroupElement matrix;
    RationalFunction invariant;
};

inline const std::vector<CaseCRow>& case_c_rows()
{
    static const std::vector<CaseCRow> rows = [] {
        HomogPoly A = desmic_A(), B = desmic_B(), C = desmic_C();
        std::vector<CaseCRow> r;
        r.push_back({"pencil", GE({{{1, -1, -1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}}}),
                     RF(A, B)});
        r.push_back({"S12_34", GE({{{1, -1, 1, -1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}}}),
                     RF(B * C, A.pow(2))});
        r.push_back({"S13_24", GE({{{1, 1, -1, -1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, -1, -1}}}),
                     RF(A * C, B.pow(2))});
        r.push_back({"S14_23", GE({{{1, 1, -1, -1}, {-1, 1, 1, -1}, {-1, -1, -1, -1}, {-1, 1, -1, 1}}}),
                     RF(A * B, C.pow(2))});
        // this element cycles the desmic trio as A -> -B -> C -> A (with the
        // signs shown), fixing the cubic combination below
        r.push_back({"none", GE({{{1, 1, -1, -1}, {-1, 1, 1, -1}, {-1, 1, -1, 1}, {-1, -1, -1, -1}}}),
                     RF(A * B * C, A.pow(2) * B - B.pow(2) * C - C.pow(2) * A)});
        return r;
    }();
    return rows;
}

// First matrix of the type-C invariant table, the representative used in the
// growth and entropy checks.
inline GroupElement type_c_representative() { return case_c_rows().front().matrix; }

} // namespace catalog
} // namespace cremona

#endif

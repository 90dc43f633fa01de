#include "doctest.h"

#include <set>

#include "cremona/catalog.hpp"
#include "cremona/cubes.hpp"
#include "cremona/invariants.hpp"
#include "cremona/khk.hpp"
#include "cremona/lattice.hpp"

using namespace cremona;

namespace {
HomogPoly P(const std::string& s) { return HomogPoly::parse(s); }
ProjMap composite(const GroupElement& g) { return compose(g.as_map(), ProjMap::cremona()).map; }
} // namespace

TEST_CASE("rational functions normalize to a unique representation")
{
    RationalFunction r(P("x2*x3*x4") * P("2*x1"), P("x1*x3*x4") * P("2*x1"));
    CHECK(r.num() == P("x2"));
    CHECK(r.den() == P("x1"));
    CHECK(RationalFunction(P("x1"), P("-x2")) == RationalFunction(P("-x1"), P("x2")));
    CHECK_THROWS_AS(RationalFunction(P("x1"), P("x2^2")), error);
}

TEST_CASE("pullbacks of rational functions reduce")
{
    ProjMap c3 = ProjMap::cremona();
    RationalFunction r(P("x1"), P("x2"));
    CHECK(pullback_rational(c3, r) == RationalFunction(P("x2"), P("x1")));
    RationalFunction same = pullback_rational(ProjMap::identity(), r);
    CHECK(same == r);
}

TEST_CASE("invariance classes: constants, anti-invariants, cycles")
{
    ProjMap c3 = ProjMap::cremona();
    CHECK(invariance_class(c3, RationalFunction(P("2*x1"), P("3*x1"))).kind == InvarianceClass::Kind::invariant);
    // x1/x2 maps to x2/x1 under the Cremona involution: a 2-invariant
    InvarianceClass two = invariance_class(c3, RationalFunction(P("x1"), P("x2")));
    CHECK(two.kind == InvarianceClass::Kind::k_invariant);
    CHECK(two.k == 2);
    // sigma_P members are invariant under cremona, sigma_Q members flip sign
    CHECK(invariance_class(c3, RationalFunction(P("x1*x2+x3*x4"), P("x1*x3+x2*x4"))).kind ==
          InvarianceClass::Kind::invariant);
    CHECK(invariance_class(c3, RationalFunction(P("x1*x2-x3*x4"), P("x1*x2+x3*x4"))).kind ==
          InvarianceClass::Kind::anti_invariant);
}

TEST_CASE("every printed type-A invariant verifies against its matrices")
{
    for (const auto& row : catalog::case_a_rows()) {
        for (const auto& g : row.matrices) {
            REQUIRE(classify(g).tag == ElemType::A);
            ProjMap phi = composite(g);
            for (const auto& r : row.invariants) {
                CAPTURE(row.label);
                CHECK(invariance_class(phi, r).kind == InvarianceClass::Kind::invariant);
            }
        }
    }
}

TEST_CASE("type-A invariance depends only on the action on the Q family")
{
    // spot check: elements sharing a table matrix's permutation of Q inherit
    // the row's invariants, whatever they do on E u P
    const auto& sp = SpecialPoints::instance();
    const auto& rows = catalog::case_a_rows();
    auto q_perm = [&](const GroupElement& g) { return family_action(g, sp.Q).perm; };
    int checked = 0;
    for (const auto& g : enumerate_group()) {
        if (checked >= 10) break;
        if (classify(g).tag != ElemType::A) continue;
        if (family_action(g, sp.E).target != 'P') continue;
        for (const auto& row : rows) {
            bool same_q_action = false;
            bool is_table_matrix = false;
            for (const auto& m : row.matrices) {
                if (q_perm(m) == q_perm(g)) same_q_action = true;
                if (m == g) is_table_matrix = true;
            }
            if (!same_q_action || is_table_matrix) continue;
            ProjMap phi = composite(g);
            for (const auto& r : row.invariants) {
                CAPTURE(row.label);
                CHECK(invariance_class(phi, r).kind == InvarianceClass::Kind::invariant);
            }
            ++checked;
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("anti-invariants and cycled families of type A")
{
    const auto& rows = catalog::case_a_rows();
    for (const auto& g : rows[1].matrices)
        CHECK(invariance_class(composite(g), catalog::anti_invariant_ii()).kind ==
              InvarianceClass::Kind::anti_invariant);
    CHECK(invariance_class(composite(rows[2].matrices[0]), catalog::anti_invariant_iii()).kind ==
          InvarianceClass::Kind::anti_invariant);

    // the three row-(iv) functions are cyclically permuted: each is a
    // 3-invariant and the pullback of one is the next, up to the cycle order
    ProjMap phi4 = composite(rows[3].matrices[0]);
    auto triple = catalog::cyclic_triple_iv();
    std::set<int> seen;
    for (const auto& j : triple) {
        InvarianceClass c = invariance_class(phi4, j, 3);
        CHECK(c.kind == InvarianceClass::Kind::k_invariant);
        CHECK(c.k == 3);
        RationalFunction img = pullback_rational(phi4, j);
        for (int t = 0; t < 3; ++t)
            if (img == triple[static_cast<std::size_t>(t)]) seen.insert(t);
    }
    CHECK(seen.size() == 3); // a genuine 3-cycle on the triple

    // the row-(v) pair: J_i -> J_{i+1} -> 1/J_i gives 4-invariants
    ProjMap phi5 = composite(rows[4].matrices[0]);
    for (const auto& j : catalog::cyclic_pair_v()) {
        InvarianceClass c = invariance_class(phi5, j, 4);
        CHECK(c.kind == InvarianceClass::Kind::k_invariant);
        CHECK(c.k == 4);
    }
}

TEST_CASE("type-B rows of order at most three verify as printed")
{
    for (const auto& row : catalog::case_b_rows()) {
        if (row.invariants.empty() || row.order > 3) continue;
        ProjMap phi = composite(row.matrix);
        for (const auto& r : row.invariants) {
            CAPTURE(row.label);
            CHECK(invariance_class(phi, r).kind == InvarianceClass::Kind::invariant);
        }
    }
}

TEST_CASE("the printed order-4 and order-6 rows are invariant for their own maps")
{
    for (const auto& row : catalog::case_b_rows()) {
        if (row.invariants.empty() || row.order <= 3) continue;
        ProjMap phi = composite(row.matrix);
        for (const auto& r : row.invariants) {
            CAPTURE(row.label);
            CHECK(invariance_class(phi, r).kind == InvarianceClass::Kind::invariant);
        }
    }
}

TEST_CASE("the lift-and-square combinations transfer to the square classes")
{
    // find a case-B row by label
    auto row_by_label = [](const std::string& l) -> const catalog::CaseBRow& {
        for (const auto& r : catalog::case_b_rows())
            if (r.label == l) return r;
        FAIL("missing row");
        return catalog::case_b_rows()[0];
    };
    for (const auto& rel : catalog::relation_b()) {
        const auto& src = row_by_label(rel.source);
        REQUIRE(src.invariants.size() == 3);
        GroupElement square = src.matrix * src.matrix;
        ProjMap phi_self = composite(src.matrix);
        ProjMap phi_square = composite(square);
        for (int i = 0; i < 3; ++i) {
            RationalFunction combo = catalog::apply_relation_op(rel.ops[static_cast<std::size_t>(i)],
                                                                src.invariants[static_cast<std::size_t>(i)]);
            if (combo.is_zero()) continue; // a vanishing lift carries no content
            CAPTURE(rel.source);
            CHECK(invariance_class(phi_self, combo).kind == InvarianceClass::Kind::invariant);
            CHECK(invariance_class(phi_square, combo).kind == InvarianceClass::Kind::invariant);
        }
        // the square lands in the announced conjugacy class
        const auto& target = row_by_label(rel.square_class);
        bool conjugate = false;
        for (const auto& h : enumerate_cb())
            conjugate = conjugate || (h * square * h.inverse()) == target.matrix;
        CHECK(conjugate);
    }
}

TEST_CASE("every printed type-C invariant verifies")
{
    for (const auto& row : catalog::case_c_rows()) {
        REQUIRE(classify(row.matrix).tag == ElemType::C);
        ProjMap phi = composite(row.matrix);
        CAPTURE(row.label);
        CHECK(invariance_class(phi, row.invariant).kind == InvarianceClass::Kind::invariant);
    }
}

TEST_CASE("conjugation transfers invariants within the signed-permutation subgroup")
{
    // R invariant for g o cremona implies R o h^-1 invariant for (h g h^-1) o cremona
    const auto& row = catalog::case_b_rows()[5]; // row vi
    REQUIRE_FALSE(row.invariants.empty());
    GroupElement h = catalog::case_b_rows()[7].matrix; // an order-3 conjugator
    GroupElement conj = h * row.matrix * h.inverse();
    ProjMap phi2 = composite(conj);
    for (const auto& r : row.invariants) {
        RationalFunction moved = conjugate_invariant(r, h);
        CHECK(invariance_class(phi2, moved).kind == InvarianceClass::Kind::invariant);
    }
    CHECK_THROWS_AS(conjugate_invariant(row.invariants[0], g0()), error);
    // h = identity leaves the function alone
    CHECK(conjugate_invariant(row.invariants[0], GroupElement::identity()) == row.invariants[0]);
}

TEST_CASE("the symmetrized lift")
{
    // for R invariant under cremona itself the lift is projectively R
    RationalFunction r(P("x1*x2+x3*x4"), P("x1*x3+x2*x4"));
    RationalFunction lift = k_invariant_lift(r);
    CHECK(lift == scale(Rat(2), r));
    // x1/x2 lifts to (x1^2+x2^2)/(x1x2)
    RationalFunction lift2 = k_invariant_lift(RationalFunction(P("x1"), P("x2")));
    CHECK(lift2 == RationalFunction(P("x1^2+x2^2"), P("x1*x2")));
}

TEST_CASE("functional independence at a sample point for the type-A pairs")
{
    ProjPoint sample(3, 5, 7, 11);
    for (const auto& row : catalog::case_a_rows()) {
        CAPTURE(row.label);
        CHECK(jacobian_rank_at(row.invariants, sample) == 2);
    }
}

TEST_CASE("covariance of the built-in systems")
{
    DivisorSpec hbar = DivisorSpec::coordinate_planes({1, 1, 1, 1});
    // sigma_P under g0 o cremona
    RatMatrix mp = check_covariance(composite(g0()), catalog::sigma_P(), hbar);
    CHECK(mp.size() == 3);
    // sigma_B under cremona itself and under the four C_B generators
    CHECK(check_covariance(ProjMap::cremona(), catalog::sigma_B(), hbar).size() == 6);
    for (const auto& gen : cb_generators())
        CHECK(check_covariance(composite(gen), catalog::sigma_B(), hbar).size() == 6);
    // the desmic pencil under every type-C table matrix, with the doubled divisor
    DivisorSpec two_hbar = DivisorSpec::coordinate_planes({2, 2, 2, 2});
    for (const auto& row : catalog::case_c_rows()) {
        RatMatrix m = check_covariance(composite(row.matrix), catalog::desmic_pencil(), two_hbar);
        CHECK(m.size() == 2);
    }
}

TEST_CASE("no quadric passes through all twelve special points")
{
    CHECK(quadrics_through_points_dim(SpecialPoints::instance().all()) == 0);
    // sanity: through the four coordinate points the space is six-dimensional
    const auto& sp = SpecialPoints::instance();
    std::vector<ProjPoint> e(sp.E.begin(), sp.E.end());
    CHECK(quadrics_through_points_dim(e) == 6);
}

TEST_CASE("the three desmic quartics are linearly dependent")
{
    HomogPoly a = catalog::desmic_A(), b = catalog::desmic_B(), c = catalog::desmic_C();
    CHECK(a - b + c == HomogPoly::zero());
    CHECK(matrix_rank(coefficient_matrix({a, b, c})) == 2);
    // and each is nodal through all twelve points (vanishes there)
    for (const auto& p : SpecialPoints::instance().all())
        for (const auto& q : {a, b, c}) CHECK(q.evaluate(p.coords()) == 0);
}

TEST_CASE("the two nets span disjoint subspaces of the space of quadrics")
{
    std::vector<HomogPoly> both = catalog::sigma_P().basis;
    for (const auto& q : catalog::sigma_Q().basis) both.push_back(q);
    CHECK(matrix_rank(coefficient_matrix(both)) == 6);
}

TEST_CASE("degree bookkeeping is enforced")
{
    DivisorSpec wrong = DivisorSpec::coordinate_planes({1, 1, 1, 0});
    CHECK_THROWS_AS(check_covariance(composite(g0()), catalog::sigma_P(), wrong), error);
    // sigma_Q is not sigma_P-covariant for g0 o cremona: the image leaves the span
    DivisorSpec hbar = DivisorSpec::coordinate_planes({1, 1, 1, 1});
    CHECK_THROWS_AS(check_covariance(composite(g0()), catalog::sigma_Q(), hbar), error);
}

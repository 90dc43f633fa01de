#include "doctest.h"

#include "cremona/catalog.hpp"
#include "cremona/lattice.hpp"
#include "cremona/proj_map.hpp"

using namespace cremona;

TEST_CASE("pushforward of the identity is the standard 5x5 Cremona action")
{
    PushforwardMatrix m = pushforward_matrix(GroupElement::identity());
    REQUIRE(m.basis.size() == 5);
    IntMatrix expect = {{Int(3), Int(1), Int(1), Int(1), Int(1)},
                        {Int(-2), Int(0), Int(-1), Int(-1), Int(-1)},
                        {Int(-2), Int(-1), Int(0), Int(-1), Int(-1)},
                        {Int(-2), Int(-1), Int(-1), Int(0), Int(-1)},
                        {Int(-2), Int(-1), Int(-1), Int(-1), Int(0)}};
    CHECK(m.entries == expect);
}

TEST_CASE("pushforward of g0 realizes the nine-class action with identity index matching")
{
    PushforwardMatrix m = pushforward_matrix(g0());
    REQUIRE(m.basis.size() == 9);
    CHECK(m.type == ElemType::A);
    CHECK(m.partner == 'P');
    // H -> 3H - 2 sum P_j
    CHECK(m.entries[0][0] == 3);
    for (std::size_t r = 1; r <= 4; ++r) CHECK(m.entries[r][0] == 0);
    for (std::size_t r = 5; r <= 8; ++r) CHECK(m.entries[r][0] == -2);
    // E_i -> H - sum_{j != i} P_j
    for (std::size_t c = 1; c <= 4; ++c) {
        CHECK(m.entries[0][c] == 1);
        for (std::size_t r = 5; r <= 8; ++r) CHECK(m.entries[r][c] == ((r - 4 == c) ? 0 : -1));
    }
    // P_i -> E_i
    for (std::size_t c = 5; c <= 8; ++c)
        for (std::size_t r = 0; r <= 8; ++r) CHECK(m.entries[r][c] == ((r == c - 4) ? 1 : 0));
}

TEST_CASE("pushforward matrices are lattice automorphisms")
{
    for (const GroupElement& g :
         {GroupElement::identity(), g0(), catalog::type_c_representative(), catalog::case_b_rows()[13].matrix}) {
        PushforwardMatrix m = pushforward_matrix(g);
        Int d = matrix_det(m.entries);
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("lattice degrees per type")
{
    CHECK(lattice_degree(g0(), 5) == 51);
    GroupElement id = GroupElement::identity();
    CHECK(lattice_degree(id, 7) == 3);
    CHECK(lattice_degree(id, 8) == 1);
    CHECK(lattice_degree(catalog::type_c_representative(), 4) == 73);
}

TEST_CASE("closed forms match matrix powers")
{
    CHECK(closed_form_check(g0(), 12).pass);
    CHECK(closed_form_check(GroupElement::identity(), 12).pass);
    CHECK(closed_form_check(catalog::case_b_rows()[13].matrix, 12).pass); // order-6 sigma
    CHECK(closed_form_check(catalog::type_c_representative(), 8).pass);
    // the inverse of the representative cycles the families the other way
    CHECK(closed_form_check(catalog::type_c_representative().inverse(), 6).pass);
    // n = 0 is the hyperplane class itself
    auto v = lattice_vector(pushforward_matrix(g0()), 0);
    CHECK(v[0] == 1);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] == 0);
}

TEST_CASE("type-C closed form quadruples: recurrence versus Lucas solution")
{
    for (int n = 0; n <= 15; ++n) {
        GrowthQuadruple a = type_c_quadruple(n);
        GrowthQuadruple b = type_c_quadruple_closed(n);
        CHECK(a.d == b.d);
        CHECK(a.f == b.f);
        CHECK(a.b == b.b);
        CHECK(a.c == b.c);
    }
    CHECK(type_c_quadruple(4).d == 73);
    CHECK(type_c_quadruple(4).f == 6);
    CHECK(type_c_quadruple(4).b == 48);
    CHECK(type_c_quadruple(4).c == 18);
    CHECK(type_c_quadruple(5).d == 195);
}

TEST_CASE("the anticanonical vector is fixed in the type-A lattice")
{
    PushforwardMatrix m = pushforward_matrix(g0());
    std::vector<Int> v(9, Int(-2));
    v[0] = 4;
    CHECK(matrix_apply(m.entries, v) == v);
}

TEST_CASE("type-B pushforwards have order lcm(2, ord sigma)")
{
    for (const auto& row : catalog::case_b_rows()) {
        PushforwardMatrix m = pushforward_matrix(row.matrix);
        auto sigma = row.matrix.permutation();
        int ord_sigma = 1;
        {
            std::array<int, 4> p{0, 1, 2, 3};
            for (int k = 1; k <= 12; ++k) {
                std::array<int, 4> q;
                for (int i = 0; i < 4; ++i) q[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
                p = q;
                if (p == std::array<int, 4>{0, 1, 2, 3}) {
                    ord_sigma = k;
                    break;
                }
            }
        }
        int expect = std::lcm(2, ord_sigma);
        CHECK(matrix_order(m.entries) == expect);
        CHECK((expect == 2 || expect == 4 || expect == 6));
    }
}

TEST_CASE("type-C characteristic polynomial is divisible by z^2 - 3z + 1")
{
    PushforwardMatrix m = pushforward_matrix(catalog::type_c_representative());
    REQUIRE(m.basis.size() == 13);
    UniPoly cp = charpoly(m.entries);
    CHECK(uni_degree(cp) == 13);
    CHECK(uni_divides(uni_from({1, -3, 1}), cp));
}

TEST_CASE("exact entropy per type")
{
    EntropyValue a = exact_entropy(g0());
    CHECK(a.is_zero());
    EntropyValue b = exact_entropy(GroupElement::identity());
    CHECK(b.is_zero());
    EntropyValue c = exact_entropy(catalog::type_c_representative());
    REQUIRE_FALSE(c.is_zero());
    CHECK(c.minimal_polynomial == uni_from({1, -3, 1}));
    CHECK(c.isolating_interval.first > Rat(2));
    CHECK(c.isolating_interval.second < Rat(3));
    CHECK(c.float_approx == doctest::Approx(0.9624236501192069).epsilon(1e-9));
}

TEST_CASE("agreement oracle: lattice degrees equal heuristic degrees")
{
    struct Case {
        GroupElement g;
        int n_max;
    };
    // one representative per type; the caps match the acceptance scales
    std::vector<Case> cases{{GroupElement::identity(), 12}, {g0(), 12}, {catalog::type_c_representative(), 5}};
    for (const auto& c : cases) {
        ProjMap phi = compose(c.g.as_map(), ProjMap::cremona()).map;
        DegreeSequence heur = degree_sequence(phi, c.n_max, 1000);
        PushforwardMatrix m = pushforward_matrix(c.g);
        for (int n = 0; n <= c.n_max; ++n) {
            CHECK(Int(static_cast<long>(heur.values[static_cast<std::size_t>(n)])) == lattice_degree(m, n));
        }
    }
}

#include "doctest.h"

#include "cremona/cubes.hpp"
#include "cremona/poly_gcd.hpp"
#include "cremona/proj_map.hpp"

using namespace cremona;

namespace {
HomogPoly P(const std::string& s) { return HomogPoly::parse(s); }
} // namespace

TEST_CASE("standard Cremona transformation basics")
{
    ProjMap c3 = ProjMap::cremona();
    CHECK(c3.degree() == 3);
    CHECK(c3.apply(ProjPoint(1, 1, 1, 1)) == ProjPoint(1, 1, 1, 1));
    CHECK(c3.apply(ProjPoint(1, 2, 3, 6)) == ProjPoint(6, 3, 2, 1));
    CHECK_THROWS_AS(c3.apply(ProjPoint(1, 0, 0, 0)), error);
    CHECK(c3.in_base_locus(ProjPoint(1, 0, 0, 0)));
}

TEST_CASE("apply through g0 o cremona hits the coordinate point")
{
    ProjMap phi = compose(g0().as_map("g0"), ProjMap::cremona()).map;
    CHECK(phi.degree() == 3);
    CHECK(phi.apply(ProjPoint(1, -1, -1, -1)) == ProjPoint(1, 0, 0, 0));
    ProjMap id = ProjMap::identity();
    ProjPoint p(3, -5, 7, 11);
    CHECK(id.apply(p) == p);
}

TEST_CASE("composition reduces common factors and reports them")
{
    ProjMap c3 = ProjMap::cremona();
    Composition cc = compose(c3, c3);
    CHECK(cc.map.same_map_as(ProjMap::identity()));
    HomogPoly expected = (P("x1*x2*x3*x4") * P("x1*x2*x3*x4")).normalized_sign();
    CHECK(cc.removed_factor == expected);

    ProjMap phi = compose(g0().as_map(), c3).map;
    Composition idc = compose(ProjMap::identity(), phi);
    CHECK(idc.map.same_map_as(phi));
    CHECK(idc.removed_factor == HomogPoly::constant(1));
}

TEST_CASE("declared inverses compose to the identity with the kappa factor removed")
{
    ProjMap phi = compose(g0().as_map(), ProjMap::cremona()).map;
    REQUIRE(phi.has_inverse());
    Composition round = compose(phi.inverse(), phi);
    CHECK(round.map.same_map_as(ProjMap::identity()));
    CHECK(round.removed_factor.degree() == 8);
}

TEST_CASE("identically vanishing components are rejected")
{
    std::array<HomogPoly, 4> zeros{HomogPoly::zero(), HomogPoly::zero(), HomogPoly::zero(), HomogPoly::zero()};
    CHECK_THROWS_AS(ProjMap{zeros}, error);
}

TEST_CASE("pullback is plain substitution")
{
    ProjMap c3 = ProjMap::cremona();
    CHECK(c3.pullback(P("x1")) == P("x2*x3*x4"));
    CHECK_THROWS_AS(c3.pullback(HomogPoly::constant(3)), error);
}

TEST_CASE("degree sequences: identity and first-entry invariant")
{
    DegreeSequence id_seq = degree_sequence(ProjMap::identity(), 5);
    CHECK(id_seq.values == std::vector<long long>{1, 1, 1, 1, 1, 1});
    CHECK_FALSE(id_seq.truncated);

    ProjMap phi = compose(g0().as_map(), ProjMap::cremona()).map;
    DegreeSequence s = degree_sequence(phi, 4);
    CHECK(s.values[0] == 1);
    CHECK(s.values[1] == phi.degree());
}

TEST_CASE("degree cap truncates instead of erroring")
{
    GroupElement g = GroupElement(GroupElement::Mat{{{1, -1, -1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}}});
    ProjMap phi = compose(g.as_map(), ProjMap::cremona()).map;
    DegreeSequence s = degree_sequence(phi, 10, 100);
    CHECK(s.truncated);
    CHECK(s.values == std::vector<long long>{1, 3, 9, 27, 73});
}

TEST_CASE("heuristic degrees are invariant under signed-permutation conjugation")
{
    ProjMap phi = compose(g0().as_map(), ProjMap::cremona()).map;
    DegreeSequence base = degree_sequence(phi, 5);
    const auto& cb = enumerate_cb();
    // a couple of fixed conjugators from the signed-permutation subgroup
    for (std::size_t pick : {7u, 101u, 45u}) {
        const GroupElement& ell = cb[pick % cb.size()];
        ProjMap conj = compose(ell.as_map(), compose(phi, ell.inverse().as_map()).map).map;
        DegreeSequence s = degree_sequence(conj, 5);
        CHECK(s.values == base.values);
    }
}

TEST_CASE("apply commutes with composition away from base loci")
{
    ProjMap c3 = ProjMap::cremona();
    ProjMap g = g0().as_map();
    ProjMap both = compose(g, c3).map;
    ProjPoint p(2, 3, 5, 7);
    CHECK(both.apply(p) == g.apply(c3.apply(p)));
}

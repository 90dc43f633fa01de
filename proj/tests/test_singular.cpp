#include "doctest.h"

#include "cremona/catalog.hpp"
#include "cremona/cubes.hpp"
#include "cremona/khk.hpp"
#include "cremona/singular.hpp"

using namespace cremona;

namespace {
HomogPoly P(const std::string& s) { return HomogPoly::parse(s); }
} // namespace

TEST_CASE("kappa and lambda of the standard Cremona transformation")
{
    auto [kappa, lambda] = kappa_lambda(ProjMap::cremona());
    HomogPoly expect = P("x1*x2*x3*x4") * P("x1*x2*x3*x4");
    CHECK(kappa.normalized_sign() == expect);
    CHECK(lambda.normalized_sign() == expect);
}

TEST_CASE("kappa of any g o cremona composite is the squared coordinate product")
{
    // Psi o Phi collapses to cremona o cremona whatever g is; lambda instead
    // sees the conjugated coordinate planes, i.e. the squared rows of g^{-1}
    HomogPoly expect = P("x1*x2*x3*x4") * P("x1*x2*x3*x4");
    for (const GroupElement& g : {g0(), catalog::type_c_representative(), catalog::case_b_rows()[8].matrix}) {
        ProjMap phi = compose(g.as_map(), ProjMap::cremona()).map;
        auto [kappa, lambda] = kappa_lambda(phi);
        CHECK(kappa.normalized() == expect);
        CHECK(kappa.degree() == phi.degree() * phi.inverse().degree() - 1);
        CHECK(lambda.degree() == 8);
        std::vector<LinearForm> rows;
        for (int i = 0; i < 4; ++i) {
            const auto& r = g.inverse().matrix()[static_cast<std::size_t>(i)];
            rows.push_back(LinearForm(r[0], r[1], r[2], r[3]));
        }
        KappaFactorization lf = factor_linear_forms(lambda, rows);
        for (const auto& [form, mult] : lf.factors) CHECK(mult == 2);
        CHECK(lf.factors.size() == 4);
    }
}

TEST_CASE("composing a map with its inverse removes exactly kappa")
{
    for (const GroupElement& g : {g0(), catalog::type_c_representative()}) {
        ProjMap phi = compose(g.as_map(), ProjMap::cremona()).map;
        auto [kappa, lambda] = kappa_lambda(phi);
        Composition round = compose(phi.inverse(), phi);
        CHECK(round.map.same_map_as(ProjMap::identity()));
        CHECK(round.removed_factor.normalized() == kappa.normalized());
    }
}

TEST_CASE("kappa of a signed permutation pair is constant")
{
    ProjMap ell = catalog::case_b_rows()[5].matrix.as_map();
    auto [kappa, lambda] = kappa_lambda(ell);
    CHECK(kappa.is_constant());
    CHECK(lambda.is_constant());
}

TEST_CASE("a wrong declared inverse is rejected")
{
    ProjMap c3 = ProjMap::cremona();
    ProjMap wrong = c3.with_inverse(g0().as_map());
    CHECK_THROWS_AS(kappa_lambda(wrong), error);
}

TEST_CASE("linear-form factorization of monomial kappas")
{
    HomogPoly kappa = P("x1*x2*x3*x4") * P("x1*x2*x3*x4");
    KappaFactorization f = factor_linear_forms(kappa, {});
    REQUIRE(f.factors.size() == 4);
    for (const auto& [form, mult] : f.factors) CHECK(mult == 2);
    CHECK(f.residual.is_constant());
    CHECK(f.total_degree == 8);
}

TEST_CASE("irreducible quadratics do not factor")
{
    CHECK_THROWS_AS(factor_linear_forms(P("x1^2+x2^2"), {}), error);
    KappaFactorization partial = factor_linear_forms_partial(P("x1^2+x2^2"), {});
    CHECK_FALSE(partial.complete());
    CHECK(partial.residual.degree() == 2);
}

TEST_CASE("probe points land on the plane and off the base locus")
{
    ProjMap phi = compose(g0().as_map(), ProjMap::cremona()).map;
    LinearForm plane = LinearForm::coordinate(0);
    auto probes = plane_probes(plane, phi, 3, 0);
    REQUIRE(probes.size() == 3);
    for (const auto& p : probes) {
        CHECK(plane.evaluate(p) == 0);
        CHECK_FALSE(phi.in_base_locus(p));
    }
}

TEST_CASE("singular orbits of g0 o cremona: all four planes confine in two steps")
{
    ProjMap phi = compose(g0().as_map(), ProjMap::cremona()).map;
    const auto& sp = SpecialPoints::instance();
    for (int i = 0; i < 4; ++i) {
        SingularOrbit orbit = trace_singular_orbit(phi, LinearForm::coordinate(i));
        CHECK(orbit.outcome == OrbitOutcome::confined_into_base_locus);
        REQUIRE(orbit.length() == 2);
        CHECK(orbit.chain[0] == sp.P[static_cast<std::size_t>(i)]);
        CHECK(orbit.chain[1] == sp.E[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("singular orbits of a type-C composite have three interior points")
{
    ProjMap phi = compose(catalog::type_c_representative().as_map(), ProjMap::cremona()).map;
    SingularOrbit orbit = trace_singular_orbit(phi, LinearForm::coordinate(0));
    CHECK(orbit.outcome == OrbitOutcome::confined_into_base_locus);
    REQUIRE(orbit.length() == 3);
    auto is_in = [](const ProjPoint& p, const std::array<ProjPoint, 4>& fam) {
        for (const auto& q : fam)
            if (p == q) return true;
        return false;
    };
    const auto& sp = SpecialPoints::instance();
    CHECK(is_in(orbit.chain[0], sp.P));
    CHECK(is_in(orbit.chain[1], sp.Q));
    CHECK(is_in(orbit.chain[2], sp.E));
}

TEST_CASE("the theta map contracts the x3 plane to a point but x1 to a line")
{
    ProjMap theta = build_theta();
    SingularOrbit to_point = trace_singular_orbit(theta, LinearForm::coordinate(2));
    CHECK(to_point.outcome == OrbitOutcome::confined_into_base_locus);
    REQUIRE(to_point.length() >= 1);
    CHECK(to_point.chain[0] == ProjPoint(0, 0, 1, 0));
    SingularOrbit to_line = trace_singular_orbit(theta, LinearForm::coordinate(0));
    CHECK(to_line.outcome == OrbitOutcome::not_contracted_to_point);
    CHECK(to_line.length() == 0);
}

TEST_CASE("a plane contracted straight into the base locus confines with length 1")
{
    ProjMap c3 = ProjMap::cremona();
    SingularOrbit orbit = trace_singular_orbit(c3, LinearForm::coordinate(0));
    CHECK(orbit.outcome == OrbitOutcome::confined_into_base_locus);
    REQUIRE(orbit.length() == 1);
    CHECK(orbit.chain[0] == ProjPoint(1, 0, 0, 0));
}

TEST_CASE("maps that do not contract a plane report it as such")
{
    ProjMap id = ProjMap::identity();
    LinearForm plane = LinearForm::coordinate(3);
    SingularOrbit orbit = trace_singular_orbit(id, plane, 10);
    CHECK(orbit.outcome == OrbitOutcome::not_contracted_to_point);
}

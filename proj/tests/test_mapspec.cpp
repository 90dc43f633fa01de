#include "doctest.h"

#include "cremona/cubes.hpp"
#include "cremona/mapspec.hpp"

using namespace cremona;

TEST_CASE("map specs resolve with declared inverses")
{
    ProjMap c3 = parse_map_spec(std::string(R"({"cremona": 3})"));
    CHECK(c3.degree() == 3);
    CHECK(c3.has_inverse());

    ProjMap m = parse_map_spec(std::string(R"({"matrix": [[1,-1,-1,-1],[-1,1,-1,-1],[-1,-1,1,-1],[-1,-1,-1,1]]})"));
    CHECK(m.degree() == 1);
    CHECK(m.has_inverse());

    ProjMap phi = parse_map_spec(std::string(
        R"({"compose": [{"matrix": [[1,-1,-1,-1],[-1,1,-1,-1],[-1,-1,1,-1],[-1,-1,-1,1]]}, {"cremona": 3}]})"));
    CHECK(phi.degree() == 3);
    CHECK(phi.same_map_as(compose(g0().as_map(), ProjMap::cremona()).map));
    CHECK(phi.has_inverse());

    ProjMap e = parse_map_spec(std::string(R"({"euler": {"a": ["1","4","9"], "h": "1"}})"));
    CHECK(e.degree() == 3);
    CHECK(e.has_inverse());

    ProjMap t = parse_map_spec(std::string(R"({"theta": true})"));
    CHECK(t.degree() == 2);
}

TEST_CASE("compose applies right to left")
{
    // cremona then g0: the plane x1 = 0 contracts to p1 under g0 o cremona
    ProjMap phi = parse_map_spec(std::string(
        R"({"compose": [{"matrix": [[1,-1,-1,-1],[-1,1,-1,-1],[-1,-1,1,-1],[-1,-1,-1,1]]}, {"cremona": 3}]})"));
    CHECK(phi.apply(ProjPoint(0, 1, 2, 3)) == compose(g0().as_map(), ProjMap::cremona()).map.apply(ProjPoint(0, 1, 2, 3)));
    // round trip with the declared inverse
    Composition round = compose(phi.inverse(), phi);
    CHECK(round.map.same_map_as(ProjMap::identity()));
}

TEST_CASE("bad specs are rejected with parse errors")
{
    CHECK_THROWS_AS(parse_map_spec(std::string("not json")), error);
    CHECK_THROWS_AS(parse_map_spec(std::string(R"({"cremona": 2})")), error);
    CHECK_THROWS_AS(parse_map_spec(std::string(R"({"matrix": [[1,0],[0,1]]})")), error);
    CHECK_THROWS_AS(parse_map_spec(std::string(R"({"compose": []})")), error);
    CHECK_THROWS_AS(parse_map_spec(std::string(R"({"euler": {"a": ["1","4"], "h": "1"}})")), error);
    CHECK_THROWS_AS(parse_map_spec(std::string(R"({"unknown": 1})")), error);
    CHECK_THROWS_AS(parse_map_spec(std::string(R"({"matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,0]]})")), error);
}

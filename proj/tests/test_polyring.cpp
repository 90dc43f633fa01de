#include "doctest.h"

#include <cstdint>

#include "cremona/homog_poly.hpp"
#include "cremona/linear_form.hpp"
#include "cremona/poly_gcd.hpp"
#include "cremona/unipoly.hpp"

using namespace cremona;

namespace {

HomogPoly P(const std::string& s) { return HomogPoly::parse(s); }

// deterministic small random homogeneous polynomials
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next()
    {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

HomogPoly random_poly(Rng& rng, int degree, int terms)
{
    std::vector<HomogPoly::Term> ts;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int left = degree;
        for (int i = 0; i < 3; ++i) {
            int e = static_cast<int>(rng.range(0, left));
            m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
            left -= e;
        }
        m.e[3] = static_cast<std::uint16_t>(left);
        long c = rng.range(-5, 5);
        if (c == 0) c = 1;
        ts.push_back(HomogPoly::Term{m, Int(c)});
    }
    HomogPoly p = HomogPoly::from_terms(std::move(ts));
    return p.is_zero() ? HomogPoly::variable(0, degree) : p;
}

} // namespace

TEST_CASE("arithmetic on the worked examples")
{
    CHECK(P("x1+x2") * P("x1-x2") == P("x1^2-x2^2"));
    HomogPoly f = P("x1*x2*x3");
    CHECK(f + HomogPoly::zero() == f);
    CHECK(P("x1*x2+x3*x4") * P("x1*x2-x3*x4") == P("x1^2*x2^2-x3^2*x4^2"));
    CHECK_THROWS_AS(P("x1") + P("x1*x2"), error);
}

TEST_CASE("parse and print round-trip, canonical order")
{
    HomogPoly p = P("3*x2*x1 - x3^2 + 2*x4*x3");
    CHECK(p.to_string() == "3*x1*x2-x3^2+2*x3*x4");
    CHECK(HomogPoly::parse(p.to_string()) == p);
    CHECK(P("0").is_zero());
    CHECK(P("1/2*x1+x2") == P("x1+2*x2")); // denominators cleared projectively
}

TEST_CASE("gcd on the worked examples")
{
    CHECK(gcd_multivariate(P("x1^2*x2"), P("x1*x3")) == P("x1"));
    HomogPoly a = P("x1+x2") * P("x1+x2") * P("x3-x4");
    HomogPoly b = P("x1+x2") * P("x3+x4");
    CHECK(gcd_multivariate(a, b) == P("x1+x2"));
    HomogPoly f = P("-2*x1*x2+4*x3^2");
    CHECK(gcd_multivariate(f, HomogPoly::zero()) == -f); // sign normalization only
    CHECK(gcd_multivariate(HomogPoly::zero(), HomogPoly::zero()).is_zero());
}

TEST_CASE("exact division on the worked examples")
{
    CHECK(P("x1^2-x2^2").divide_exact(P("x1-x2")) == P("x1+x2"));
    CHECK((P("x1*x2*x3*x4") * P("x1*x2*x3*x4")).divide_exact(P("x1^2")) == P("x2^2*x3^2*x4^2"));
    CHECK_THROWS_AS(P("x1^2+x2^2").divide_exact(P("x1+x2")), error);
}

TEST_CASE("ring axioms and gcd properties on random inputs")
{
    Rng rng(12345);
    for (int iter = 0; iter < 25; ++iter) {
        HomogPoly a = random_poly(rng, 2, 4);
        HomogPoly b = random_poly(rng, 2, 4);
        HomogPoly c = random_poly(rng, 2, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).divide_exact(b) == a);
        CHECK((a * b).degree() == a.degree() + b.degree());

        HomogPoly g = random_poly(rng, 1, 2);
        HomogPoly d1 = gcd_multivariate(a, b);
        CHECK(a.is_divisible_by(d1));
        CHECK(b.is_divisible_by(d1));
        HomogPoly d2 = gcd_multivariate(a * g, b * g);
        // gcd(ag, bg) = gcd(a,b) * g up to integer unit/content
        CHECK(d2.is_divisible_by(g.normalized()));
        CHECK((d1 * g).is_divisible_by(d2.divide_by_content()));
    }
}

TEST_CASE("heuristic multivariate gcd agrees with the subresultant recursion")
{
    // inputs large enough to take the evaluation-heuristic path
    Rng rng(424242);
    for (int iter = 0; iter < 10; ++iter) {
        HomogPoly g = random_poly(rng, 3, 5);
        HomogPoly a = random_poly(rng, 3, 6) * g;
        HomogPoly b = random_poly(rng, 3, 6) * g;
        HomogPoly fast = gcd_multivariate(a, b);
        detail::NPoly slow = detail::np_gcd(detail::np_from_homog(a.normalized()), detail::np_from_homog(b.normalized()));
        HomogPoly slow_h = detail::np_to_homog(slow).normalized();
        CHECK(fast.divide_by_content().normalized_sign() == slow_h);
        CHECK(a.is_divisible_by(fast));
        CHECK(b.is_divisible_by(fast));
    }
}

TEST_CASE("polynomial square root")
{
    HomogPoly s = P("x1*x2-3*x3*x4+x4^2");
    auto r = (s * s).sqrt();
    REQUIRE(r.has_value());
    CHECK(*r == s.normalized_sign());
    CHECK_FALSE(P("x1^2+x2^2").sqrt().has_value());
}

TEST_CASE("linear forms normalize to coprime integers")
{
    LinearForm f({Rat(1, 2), Rat(-3, 4), Rat(0), Rat(1)});
    CHECK(f.coefficients() == std::array<Int, 4>{2, -3, 0, 4});
    LinearForm g(-2, 4, 0, -6);
    CHECK(g.coefficients() == std::array<Int, 4>{1, -2, 0, 3});
    CHECK_THROWS_AS(LinearForm(0, 0, 0, 0), error);
}

TEST_CASE("univariate gcd: modular path agrees with subresultant path")
{
    Rng rng(777);
    for (int iter = 0; iter < 20; ++iter) {
        auto rand_uni = [&](int deg) {
            UniPoly p;
            for (int i = 0; i <= deg; ++i) p.emplace_back(rng.range(-9, 9));
            uni_trim(p);
            if (p.empty()) p = UniPoly{Int(1)};
            return p;
        };
        UniPoly g = rand_uni(3);
        UniPoly a = uni_mul(rand_uni(5), g);
        UniPoly b = uni_mul(rand_uni(5), g);
        UniPoly via_mod = uni_gcd(a, b);
        UniPoly via_prs = uni_gcd_subresultant(a, b);
        CHECK(via_mod == via_prs);
        CHECK(uni_divides(uni_normalized(g), via_mod));
    }
}

TEST_CASE("sturm isolation finds the dominant root of z^2-3z+1")
{
    UniPoly p = uni_from({1, -3, 1});
    auto iso = uni_largest_root_above(p, Rat(1), Rat(1, 1000000000));
    REQUIRE(iso.has_value());
    double mid = to_double((iso->first + iso->second) / 2);
    CHECK(mid == doctest::Approx(2.618033988749895).epsilon(1e-8));
    CHECK_FALSE(uni_largest_root_above(uni_from({1, 1}), Rat(1), Rat(1, 1000)).has_value());
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == uni_from({-1, 1}));
    CHECK(cyclotomic(2) == uni_from({1, 1}));
    CHECK(cyclotomic(6) == uni_from({1, -1, 1}));
    CHECK(cyclotomic(12) == uni_from({1, 0, -1, 0, 1}));
}

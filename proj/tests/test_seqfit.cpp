#include "doctest.h"

#include "cremona/lattice.hpp"
#include "cremona/rat_linalg.hpp"
#include "cremona/seqfit.hpp"

using namespace cremona;

namespace {
std::vector<Int> ints(std::initializer_list<long> v)
{
    std::vector<Int> r;
    for (long x : v) r.emplace_back(x);
    return r;
}
} // namespace

TEST_CASE("minimal recurrence of the quadratic-growth degrees")
{
    auto rec = min_recurrence(ints({1, 3, 9, 19, 33, 51, 73, 99, 129}));
    CHECK(rec.order == 3);
    CHECK(rec.coefficients == std::vector<Rat>{Rat(3), Rat(-3), Rat(1)});
    // no smaller order fits the same data
    for (int smaller = 1; smaller < rec.order; ++smaller) {
        std::vector<Int> seq = ints({1, 3, 9, 19, 33, 51, 73, 99, 129});
        bool fits = true;
        // try to solve the first `smaller` relations and replay
        RatMatrix a(smaller, std::vector<Rat>(smaller, Rat(0)));
        std::vector<Rat> b(smaller, Rat(0));
        for (int r = 0; r < smaller; ++r) {
            for (int c = 0; c < smaller; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Rat(seq[static_cast<std::size_t>(smaller + r - 1 - c)]);
            b[static_cast<std::size_t>(r)] = Rat(seq[static_cast<std::size_t>(smaller + r)]);
        }
        auto sol = solve_linear(a, b);
        if (!sol) continue;
        for (std::size_t n = static_cast<std::size_t>(smaller); n < seq.size() && fits; ++n) {
            Rat acc(0);
            for (int i = 1; i <= smaller; ++i) acc += (*sol)[static_cast<std::size_t>(i - 1)] * Rat(seq[n - static_cast<std::size_t>(i)]);
            fits = acc == Rat(seq[n]);
        }
        CHECK_FALSE(fits);
    }
}

TEST_CASE("constant sequences and short input")
{
    auto rec = min_recurrence(ints({1, 1, 1, 1}));
    CHECK(rec.order == 1);
    CHECK(rec.coefficients == std::vector<Rat>{Rat(1)});
    CHECK_THROWS_AS(min_recurrence(ints({1, 1, 1})), error);
}

TEST_CASE("confirmation rule rejects underdetermined fits")
{
    // two-periodic degrees need six terms to confirm the order-2 recurrence
    CHECK_THROWS_AS(min_recurrence(ints({1, 3, 1, 3})), error);
    auto rec = min_recurrence(ints({1, 3, 1, 3, 1, 3}));
    CHECK(rec.order == 2);
    CHECK_THROWS_AS(min_recurrence(ints({1, 2, 4, 8, 16, 31})), error);
}

TEST_CASE("type-C degrees satisfy the order-4 recurrence with the expected characteristic")
{
    std::vector<Int> seq;
    for (int n = 0; n <= 12; ++n) seq.push_back(type_c_quadruple(n).d);
    CHECK(seq[3] == 27);
    CHECK(seq[5] == 195);
    auto rec = min_recurrence(seq);
    CHECK(rec.order == 4);
    // z^4 - c1 z^3 - c2 z^2 - c3 z - c4 = (z^2 - 3z + 1)(z - 1)(z + 1)
    UniPoly expect = uni_mul(uni_mul(uni_from({1, -3, 1}), uni_from({-1, 1})), uni_from({1, 1}));
    UniPoly got{-rec.coefficients[3].get_num(), -rec.coefficients[2].get_num(), -rec.coefficients[1].get_num(),
                -rec.coefficients[0].get_num(), Int(1)};
    CHECK(uni_normalized(got) == uni_normalized(expect));
}

TEST_CASE("generating functions")
{
    GeneratingFunction euler = generating_function(ints({1, 3, 9, 19, 33, 51, 73, 99, 129}));
    CHECK(euler.numerator == uni_from({1, 0, 3}));
    CHECK(euler.denominator == uni_from({1, -3, 3, -1})); // (1 - s)^3
    GeneratingFunction ones = generating_function(ints({1, 1, 1, 1, 1, 1}));
    CHECK(ones.numerator == uni_from({1}));
    CHECK(ones.denominator == uni_from({1, -1}));
}

TEST_CASE("generating function round trip")
{
    std::vector<Int> seq;
    for (int n = 0; n <= 14; ++n) seq.push_back(type_c_quadruple(n).d);
    GeneratingFunction gf = generating_function(seq);
    CHECK(gf.expand(static_cast<int>(seq.size())) == seq);
}

TEST_CASE("entropy estimates")
{
    CHECK(entropy_estimate(ints({1, 3, 9, 19, 33, 51, 73, 99, 129})).is_zero());
    CHECK(entropy_estimate(ints({1, 3, 1, 3, 1, 3, 1, 3})).is_zero());
    std::vector<Int> seq;
    for (int n = 0; n <= 19; ++n) seq.push_back(type_c_quadruple(n).d);
    EntropyValue e = entropy_estimate(seq);
    REQUIRE_FALSE(e.is_zero());
    CHECK(e.minimal_polynomial == uni_from({1, -3, 1}));
    CHECK(e.float_approx == doctest::Approx(2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-8));
}

TEST_CASE("the printed theta-map degree data fits its generating function")
{
    std::vector<Int> theta = ints({1, 2, 4, 7, 12, 18, 25, 34, 44, 55, 68, 82, 97, 114, 132, 151});
    auto rec = min_recurrence(theta);
    CHECK(rec.order == 5);
    GeneratingFunction gf = generating_function(theta);
    // -(2z^4 + z^2 + 1) / ((z-1)^3 (z^2+z+1)) up to sign normalization
    UniPoly target_num = uni_from({-1, 0, -1, 0, -2});
    UniPoly target_den = uni_mul(uni_mul(uni_mul(uni_from({-1, 1}), uni_from({-1, 1})), uni_from({-1, 1})),
                                uni_from({1, 1, 1}));
    CHECK(uni_mul(gf.numerator, target_den) == uni_mul(target_num, gf.denominator));
    CHECK(entropy_estimate(theta).is_zero());
}

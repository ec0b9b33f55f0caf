#include "doctest.h"
#include "oracles.hpp"

#include "gsq/slope.hpp"

#include <random>

using namespace gsq;

namespace {

oracle::Frac frac(const Slope& s) { return {s.num().convert_to<long long>(), s.den().convert_to<long long>()}; }

Slope random_slope(std::mt19937_64& rng, long long bound)
{
    std::uniform_int_distribution<long long> A(-bound, bound), B(0, bound);
    for (;;) {
        long long a = A(rng), b = B(rng);
        if (std::gcd(std::llabs(a), b) == 1 && !(b == 0 && a != 1))
            return Slope(a, b);
    }
}

} // namespace

TEST_CASE("slope normalization")
{
    CHECK(Slope(2, -4) == Slope(-1, 2));
    CHECK(Slope(-3, 0) == slope_inf());
    CHECK(Slope::parse("inf") == slope_inf());
    CHECK(Slope::parse("-4/6") == Slope(-2, 3));
    CHECK_THROWS_AS(Slope(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Slope::parse("4/-5"), ParseError);
    CHECK_THROWS_AS(Slope::parse("x"), ParseError);
}

TEST_CASE("intersection numbers")
{
    CHECK(intersection_number(slope_zero(), slope_inf()) == 2);
    CHECK(intersection_number(Slope(2, 3), Slope(4, 5)) == 4);
    CHECK(intersection_number(Slope(5, 7), Slope(5, 7)) == 0);
}

TEST_CASE("twist examples")
{
    for (long long n = -5; n <= 5; ++n) {
        if (n == 0)
            continue;
        CHECK(apply_twist({slope_inf(), n}, slope_zero()) == Slope(2 * n, 1));
        CHECK(apply_twist({slope_zero(), n}, slope_inf()) == Slope(-1, 2 * n));
        CHECK(apply_twist({slope_one(), n}, slope_zero()) == Slope(2 * n, 2 * n + 1));
    }
}

TEST_CASE("twists agree with the torus double-cover oracle")
{
    std::mt19937_64 rng(7);
    for (int it = 0; it < 3000; ++it) {
        Slope ax = random_slope(rng, 9), s = random_slope(rng, 30);
        long long n = std::uniform_int_distribution<long long>(-3, 3)(rng);
        if (n == 0)
            continue;
        CHECK(frac(apply_twist({ax, n}, s)) == oracle::twist(frac(ax), n, frac(s)));
    }
}

TEST_CASE("twist properties")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 3000; ++it) {
        Slope ax = random_slope(rng, 20), s1 = random_slope(rng, 50), s2 = random_slope(rng, 50);
        BigInt n = std::uniform_int_distribution<long long>(-4, 4)(rng);
        if (n == 0)
            continue;
        TwistMove m{ax, n};
        Slope t1 = apply_twist(m, s1);
        CHECK(apply_twist(m.inverse(), t1) == s1);
        CHECK(t1.numerator_even() == s1.numerator_even());
        CHECK(intersection_number(t1, apply_twist(m, s2)) == intersection_number(s1, s2));
        CHECK(intersection_number(s1, s2) == intersection_number(s2, s1));
        CHECK((intersection_number(s1, s2) == 0) == (s1 == s2));
    }
}

TEST_CASE("twist words")
{
    TwistWord w;
    w.push({slope_inf(), 2});
    w.push({slope_inf(), -2});
    CHECK(w.empty());
    w.push({slope_zero(), 1});
    w.push({slope_zero(), 3});
    REQUIRE(w.size() == 1);
    CHECK(w.moves()[0].power == 4);
    CHECK(apply_word(TwistWord{}, Slope(5, 7)) == Slope(5, 7));
    TwistWord one;
    one.push({slope_inf(), 1});
    CHECK(apply_word(one, slope_zero()) == Slope(2, 1));
    w.push({slope_inf(), -1});
    w.push({slope_one(), 2});
    Slope s(3, 11);
    CHECK(apply_word(w.inverse(), apply_word(w, s)) == s);
}

TEST_CASE("reduce examples")
{
    Reduction z = reduce(slope_zero());
    CHECK(z.terminal == slope_zero());
    CHECK(z.word.empty());
    Reduction two = reduce(Slope(2, 1));
    CHECK(two.terminal == slope_zero());
    REQUIRE(two.word.size() == 1);
    CHECK(two.word.moves()[0] == TwistMove{slope_inf(), -1});
    Reduction r = reduce(Slope(-4, 5));
    CHECK(r.terminal == slope_zero());
    CHECK(apply_word(r.word, Slope(-4, 5)) == slope_zero());
}

TEST_CASE("reduce against the breadth-first oracle")
{
    for (long long b = 0; b <= 9; ++b)
        for (long long a = -9; a <= 9; ++a) {
            if (std::gcd(std::llabs(a), b) != 1 || (b == 0 && a != 1))
                continue;
            Slope s(a, b);
            Reduction r = reduce(s);
            CAPTURE(s.str());
            CHECK(apply_word(r.word, s) == r.terminal);
            for (const auto& m : r.word.moves())
                CHECK((m.axis == slope_zero() || m.axis == slope_inf()));
            if (s.numerator_even())
                CHECK(r.terminal == slope_zero());
            else
                CHECK((r.terminal == slope_inf() || r.terminal == slope_one()));
            // the oracle must reach a terminal of the same kind
            CHECK(oracle::reduce_depth(frac(s), 14).has_value());
        }
}

TEST_CASE("reduce round-trips on large slopes")
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 500; ++it) {
        Slope s = random_slope(rng, 1000000);
        Reduction r = reduce(s);
        CHECK(apply_word(r.word, s) == r.terminal);
        SmallReduction sr;
        reduce_small(s.num().convert_to<std::int64_t>(), s.den().convert_to<std::int64_t>(), sr);
        CHECK(Slope(sr.a, sr.b) == r.terminal);
    }
}

TEST_CASE("move parsing")
{
    TwistMove m = parse_move("inf^1");
    CHECK(m.axis == slope_inf());
    CHECK(m.power == 1);
    CHECK(parse_move("0/1^-3").power == -3);
    CHECK_THROWS(parse_move("inf^0"));
    CHECK_THROWS(parse_move("inf"));
}

#include "doctest.h"
#include "oracles.hpp"

#include "gsq/fiber.hpp"

#include <numeric>

using namespace gsq;

namespace {

const std::vector<TorusParams> kSmallGrid = {{3, 2}, {4, 3}, {5, 2}};

std::vector<Slope> slopes_up_to(long long bound)
{
    std::vector<Slope> out;
    for (long long d = 0; d <= bound; ++d)
        for (long long c = -bound; c <= bound; ++c)
            if (std::gcd(std::llabs(c), d) == 1 && !(d == 0 && c != 1))
                out.emplace_back(c, d);
    return out;
}

std::vector<std::vector<long long>> coordinate_multiset(const FiberComplex& fc, const std::vector<Path>& paths)
{
    std::vector<std::vector<long long>> v;
    for (const auto& p : paths)
        v.push_back(oracle::crossings_per_edge(fc, p));
    std::sort(v.begin(), v.end());
    return v;
}

int count_pieces(const std::vector<ComplementPiece>& pieces, int genus, int boundary)
{
    return static_cast<int>(std::count_if(pieces.begin(), pieces.end(), [&](const ComplementPiece& c) {
        return c.genus == genus && c.boundary == boundary;
    }));
}

} // namespace

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(build_fiber({3, 3}), ParameterError);
    CHECK_THROWS_AS(build_fiber({2, 3}), ParameterError);
    CHECK_THROWS_AS(build_fiber({6, 4}), ParameterError);
    CHECK_THROWS_AS(build_fiber({5, 1}), ParameterError);
    CHECK_NOTHROW(TorusParams{7, 3}.validate());
}

TEST_CASE("fiber complex examples")
{
    FiberComplex a = build_fiber({3, 2});
    CHECK(a.genus() == 2);
    CHECK(a.N == 6);
    FiberComplex b = build_fiber({4, 3});
    CHECK(b.genus() == 6);
    CHECK(b.N == 12);
    FiberComplex c = build_fiber({5, 2});
    int order5 = 0, order2 = 0;
    for (const auto& v : c.vertices) {
        order5 += v.cone_order == 5;
        order2 += v.cone_order == 2;
    }
    CHECK(order5 == 2 * 2); // two order-5 cone points, q preimages each
    CHECK(order2 == 2 * 5);
}

TEST_CASE("fiber complex invariants")
{
    for (TorusParams t : {TorusParams{3, 2}, TorusParams{4, 3}, TorusParams{5, 3}, TorusParams{7, 2}}) {
        FiberComplex fc = build_fiber(t);
        CAPTURE(t.str());
        long long chi = static_cast<long long>(fc.vertices.size()) - static_cast<long long>(fc.edges.size()) +
                        static_cast<long long>(fc.faces.size());
        CHECK(chi == 2 - 2 * t.genus());
        CHECK(fc.basis.size() == static_cast<std::size_t>(2 * t.genus()));
        CHECK((determinant(fc.intersection) == 1));
        // the deck map has order pq and is free on faces
        std::vector<int> f(fc.faces.size());
        std::iota(f.begin(), f.end(), 0);
        for (int k = 1; k <= fc.N; ++k) {
            for (auto& x : f)
                x = fc.deck_face[static_cast<std::size_t>(x)];
            bool identity = true;
            for (std::size_t i = 0; i < f.size(); ++i)
                identity = identity && f[i] == static_cast<int>(i);
            bool fixes = false;
            for (std::size_t i = 0; i < f.size(); ++i)
                fixes = fixes || f[i] == static_cast<int>(i);
            CHECK(identity == (k == fc.N));
            CHECK(fixes == (k == fc.N));
        }
        // quotient orbifold: chi(F) = pq * chi_orb with four cone points of orders p, q, p, q
        double chi_orb = 2.0 - 2 * (1.0 - 1.0 / t.p) - 2 * (1.0 - 1.0 / t.q);
        CHECK(static_cast<double>(chi) == doctest::Approx(fc.N * chi_orb));
    }
}

TEST_CASE("base lifts")
{
    FiberComplex fc = build_fiber({4, 3});
    BaseLifts b = lift_base_multicurves(fc);
    CHECK(b.L0.size() == 12);
    CHECK(b.LambdaInf.size() == 1);
    CHECK(b.Lambda1.size() == 1);
    FiberComplex small = build_fiber({3, 2});
    CHECK(lift_base_multicurves(small).Lambda1.size() == 1);
    for (TorusParams t : {TorusParams{3, 2}, TorusParams{5, 3}}) {
        FiberComplex f = build_fiber(t);
        auto pieces = complement_components(f, lift_base_multicurves(f).LambdaInf);
        REQUIRE(pieces.size() == 2);
        for (const auto& pc : pieces) {
            CHECK(pc.genus == t.genus() / 2);
            CHECK(pc.boundary == 1);
        }
    }
}

TEST_CASE("complement census")
{
    FiberComplex fc = build_fiber({3, 2});
    auto pieces = complement_components(fc, fc.refs->L0);
    CHECK(pieces.size() == 5);
    CHECK(count_pieces(pieces, 0, 3) == 2);
    CHECK(count_pieces(pieces, 0, 2) == 3);
    auto whole = complement_components(fc, Multicurve{});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].genus == 2);
    CHECK(whole[0].boundary == 0);
}

TEST_CASE("lift examples")
{
    FiberComplex fc = build_fiber({4, 3});
    CHECK(lift_slope(fc, slope_one()).size() == 1);
    Multicurve m = lift_slope(fc, Slope(2, 3));
    REQUIRE(m.size() == 12);
    auto perm = deck_permutation(fc, m, 1);
    // one orbit
    std::size_t len = 0;
    for (int j = 0;;) {
        j = perm[static_cast<std::size_t>(j)];
        ++len;
        if (j == 0)
            break;
    }
    CHECK(len == 12);

    FiberComplex small = build_fiber({3, 2});
    Multicurve l0 = lift_slope(small, slope_zero());
    REQUIRE(l0.size() == 6);
    auto p3 = deck_permutation(small, l0, 3);
    for (std::size_t i = 0; i < p3.size(); ++i) {
        CHECK(p3[i] != static_cast<int>(i));
        CHECK(p3[static_cast<std::size_t>(p3[i])] == static_cast<int>(i));
        // the swapped curves are parallel
        auto ci = homology_class(small, l0.components[i]);
        auto cj = homology_class(small, l0.components[static_cast<std::size_t>(p3[i])]);
        bool same = true, opposite = true;
        for (std::size_t k = 0; k < ci.size(); ++k) {
            same = same && cj[k] == ci[k];
            opposite = opposite && cj[k] == -ci[k];
        }
        CHECK((same || opposite));
    }
}

TEST_CASE("lift agrees with the straight-line path-lifting oracle")
{
    for (TorusParams t : kSmallGrid) {
        FiberComplex fc = build_fiber(t);
        for (const Slope& s : slopes_up_to(4)) {
            CAPTURE(t.str());
            CAPTURE(s.str());
            auto ref = oracle::line_lift(fc, s.num().convert_to<long long>(), s.den().convert_to<long long>());
            Multicurve m = lift_slope(fc, s);
            CHECK(m.size() == ref.size());
            CHECK(coordinate_multiset(fc, m.components) == coordinate_multiset(fc, ref));
        }
    }
}

TEST_CASE("lift properties on a small grid")
{
    for (TorusParams t : kSmallGrid) {
        FiberComplex fc = build_fiber(t);
        std::size_t pq = static_cast<std::size_t>(t.order());
        for (const Slope& s : slopes_up_to(5)) {
            CAPTURE(t.str());
            CAPTURE(s.str());
            Multicurve m = lift_slope(fc, s);
            CHECK(m.size() == (s.numerator_even() ? pq : 1));
            CHECK_NOTHROW(validate_multicurve(fc, m));
            CHECK(recognize_slope(fc, m) == s);
            CHECK(same_component_set(deck_apply(fc, m, 1), m));
            CHECK(recognize_slope(fc, deck_apply(fc, m, 1)) == s);
            if (t.q == 2 && s.numerator_even()) {
                auto pieces = complement_components(fc, m);
                CHECK(count_pieces(pieces, 0, 2) == t.p);
            }
        }
    }
}

TEST_CASE("lifted twists")
{
    for (TorusParams t : kSmallGrid) {
        FiberComplex fc = build_fiber(t);
        CHECK(same_component_set(apply_tilde_tau0(fc, fc.refs->L0, 1), fc.refs->L0));
        CHECK(same_component_set(apply_tilde_tau_inf(fc, fc.refs->LambdaInf, 1), fc.refs->LambdaInf));
        CHECK(recognize_slope(fc, apply_tilde_tau0(fc, lift_slope(fc, slope_inf()), 1)) == Slope(-1, 2));
        for (const Slope& s : slopes_up_to(3)) {
            CAPTURE(t.str());
            CAPTURE(s.str());
            Multicurve m = lift_slope(fc, s);
            Multicurve a = apply_tilde_tau0(fc, m, 1);
            Multicurve b = apply_tilde_tau_inf(fc, m, 1);
            CHECK(recognize_slope(fc, a) == apply_twist({slope_zero(), 1}, s));
            CHECK(recognize_slope(fc, b) == apply_twist({slope_inf(), 1}, s));
            if (!s.is_inf())
                CHECK(recognize_slope(fc, apply_tilde_tau_inf(fc, m, -1)) == Slope(s.num() - 2 * s.den(), s.den()));
            CHECK(same_component_set(apply_tilde_tau0(fc, a, -1), m));
            CHECK(same_component_set(apply_tilde_tau_inf(fc, b, -1), m));
        }
    }
}

TEST_CASE("intersection scaling")
{
    FiberComplex fc = build_fiber({3, 2});
    auto s = slopes_up_to(2);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            CAPTURE(s[i].str());
            CAPTURE(s[j].str());
            long long n = intersection_count(fc, lift_slope(fc, s[i]), lift_slope(fc, s[j]));
            CHECK(BigInt(n) == BigInt(fc.N) * intersection_number(s[i], s[j]));
        }
}

TEST_CASE("homology classes")
{
    FiberComplex fc = build_fiber({3, 2});
    IntMatrix inf = homology_classes(fc, fc.refs->LambdaInf);
    CHECK(is_zero(inf));
    IntMatrix l0 = homology_classes(fc, fc.refs->L0);
    CHECK(rank_q(l0) == 2);
    FiberComplex big = build_fiber({5, 3});
    CHECK(rank_q(homology_classes(big, big.refs->L0)) == 8);
}

TEST_CASE("not a slope lift")
{
    FiberComplex fc = build_fiber({3, 2});
    Multicurve m = fc.refs->L0;
    m.components.resize(1);
    CHECK_THROWS_AS(recognize_slope(fc, m), NotASlopeLift);
}

#include "doctest.h"

#include "gsq/derivative.hpp"

#include <numeric>

using namespace gsq;

TEST_CASE("Seifert matrix of the trefoil")
{
    SeifertData sd = compute_seifert_matrix({3, 2});
    REQUIRE(sd.matrix.size() == 2);
    CHECK(babs(determinant(add(sd.matrix, transpose(sd.matrix)))) == 3);
    CHECK(alexander_polynomial(sd.matrix) == IntPoly{1, -1, 1});
    CHECK(poly_str(alexander_polynomial(sd.matrix)) == "t^2 - t + 1");
}

TEST_CASE("Seifert matrices on the grid")
{
    for (TorusParams t : {TorusParams{3, 2}, TorusParams{4, 3}, TorusParams{5, 2}, TorusParams{5, 3},
                          TorusParams{5, 4}, TorusParams{7, 2}, TorusParams{7, 3}}) {
        CAPTURE(t.str());
        SeifertData sd = compute_seifert_matrix(t);
        std::size_t n = static_cast<std::size_t>(t.genus());
        CHECK(sd.matrix.size() == n);
        CHECK(babs(determinant(add(sd.matrix, negate(transpose(sd.matrix))))) == 1);
        CHECK(determinant(add(sd.matrix, transpose(sd.matrix))) != 0);
        CHECK(alexander_polynomial(sd.matrix) == torus_knot_alexander(t.p, t.q));
    }
}

TEST_CASE("linking oracle on unlinked and Hopf-linked squares")
{
    std::vector<Vec3> a{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    std::vector<Vec3> far{{5, 5, 0}, {6, 5, 0}, {6, 6, 0}, {5, 6, 0}};
    std::vector<Vec3> hopf{{0.5, 0.5, -1}, {0.5, 0.5, 1}, {2, 0.5, 1}, {2, 0.5, -1}};
    CHECK(linking_number(a, far, {0.1, 0.2, 1}) == 0.0);
    double h1 = linking_number(a, hopf, {0.1, 0.2, 1});
    double h2 = linking_number(a, hopf, {0.3, -0.1, 1});
    CHECK(std::fabs(h1) == 1.0);
    CHECK(h1 == h2);
}

TEST_CASE("derivative examples")
{
    FiberComplex fc = build_fiber({3, 2});
    SeifertData sd = match_seifert(fc, compute_seifert_matrix({3, 2}));
    DerivativeReport r = derivative_for(fc, sd, slope_zero());
    CHECK(r.verdict);
    CHECK(r.subset.size() == 2);
    for (const Slope& s : {Slope(-2, 3), Slope(-4, 5), Slope(-6, 7), Slope(2, 1)}) {
        CAPTURE(s.str());
        DerivativeReport d = derivative_for(fc, sd, s);
        CHECK(d.verdict);
        CHECK(d.linking_zero);
    }
    DerivativeReport two = derivative_for(fc, sd, Slope(2, 1));
    REQUIRE(two.complement.size() == 1);
    CHECK(two.complement[0].genus == 0);
    CHECK(two.complement[0].boundary == 4);
    // with the knot puncture the planar piece has 2n+1 boundary circles
    Multicurve sub = sub_multicurve(lift_slope(fc, Slope(2, 1)), two.subset);
    auto punctured = complement_components(fc, sub, Puncture{fc.front(0), {Q(37, 71), Q(29, 61)}});
    REQUIRE(punctured.size() == 1);
    CHECK(punctured[0].genus == 0);
    CHECK(punctured[0].boundary == 5);
    CHECK_THROWS_AS(derivative_for(fc, sd, slope_one()), UnsupportedSlope);
}

TEST_CASE("parallel components fail the derivative test")
{
    FiberComplex fc = build_fiber({3, 2});
    SeifertData sd = match_seifert(fc, compute_seifert_matrix({3, 2}));
    Multicurve lift = lift_slope(fc, slope_zero());
    auto pair = deck_permutation(fc, lift, 3);
    DerivativeReport r = verify_derivative(fc, lift, {0, pair[0]}, sd);
    CHECK_FALSE(r.verdict);
    CHECK(r.homology_rank < 2);
}

TEST_CASE("selected sublink is the least valid subset")
{
    FiberComplex fc = build_fiber({4, 3});
    SeifertData sd = match_seifert(fc, compute_seifert_matrix({4, 3}));
    Multicurve lift = lift_slope(fc, slope_zero());
    auto sub = select_sublink(fc, lift);
    CHECK(sub.size() == 6);
    CHECK(std::is_sorted(sub.begin(), sub.end()));
    CHECK(verify_derivative(fc, lift, sub, sd).verdict);
    // every lexicographically smaller subset of the same size fails
    std::vector<int> idx(lift.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<char> mask(lift.size(), 0);
    std::fill(mask.begin(), mask.begin() + 6, 1);
    do {
        std::vector<int> cand;
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i])
                cand.push_back(static_cast<int>(i));
        if (!(cand < sub))
            continue;
        auto pieces = complement_components(fc, sub_multicurve(lift, cand));
        CHECK_FALSE((pieces.size() == 1 && pieces[0].genus == 0));
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

TEST_CASE("disjoint curves pair symmetrically under the Seifert form")
{
    FiberComplex fc = build_fiber({5, 2});
    SeifertData sd = match_seifert(fc, compute_seifert_matrix({5, 2}));
    Multicurve lift = lift_slope(fc, Slope(2, 3));
    IntMatrix A = homology_classes(fc, lift);
    IntMatrix M = multiply(multiply(A, sd.block), transpose(A));
    CHECK(M == transpose(M));
    for (std::size_t i = 0; i < M.size(); ++i)
        CHECK(M[i][i] == 0);
}

TEST_CASE("framed link report")
{
    FramedLinkReport r = framed_link_report({3, 2}, slope_zero());
    CHECK(r.n == 2);
    CHECK(r.framings == std::vector<long long>{0, 0});
    CHECK(r.verdict);
    FramedLinkReport s = framed_link_report({4, 3}, Slope(2, 1));
    CHECK(s.n == 6);
    CHECK(s.components == 12);
    CHECK(s.closure.brieskorn.has_value());
    CHECK_THROWS_AS(framed_link_report({3, 2}, slope_one()), UnsupportedSlope);
}

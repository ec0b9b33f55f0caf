#include "doctest.h"

#include "gsq/io.hpp"

using namespace gsq;

namespace {

struct Built {
    FiberComplex fc;
    ArcSystem arcs;
    TrisectionDiagram d;
};

Built build(TorusParams t, const Slope& s)
{
    FiberComplex fc = build_fiber(t);
    SeifertData sd = match_seifert(fc, compute_seifert_matrix(t));
    DerivativeReport rep = derivative_for(fc, sd, s);
    Multicurve lift = lift_slope(fc, s);
    ArcSystem arcs = find_dualizing_arcs(fc, sub_multicurve(lift, rep.subset), s, rep.subset);
    TrisectionDiagram d = build_trisection_diagram(fc, arcs);
    return {std::move(fc), std::move(arcs), std::move(d)};
}

} // namespace

TEST_CASE("dualizing arcs")
{
    for (TorusParams t : {TorusParams{3, 2}, TorusParams{4, 3}}) {
        Built b = build(t, slope_zero());
        std::size_t g = static_cast<std::size_t>(t.genus());
        CHECK(b.arcs.a.size() == g);
        CHECK(b.arcs.b.size() == g);
        ArcSystemCheck c = check_arc_system(b.fc, b.arcs);
        CHECK(c.ok());
        for (const auto& f : c.failures)
            MESSAGE(f);
        for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < g; ++j) {
                auto a = count_intersections(b.fc, b.arcs.a[i], b.arcs.sublink.components[j]);
                CHECK(a.crossings == (i == j ? 1 : 0));
                CHECK(count_intersections(b.fc, b.arcs.b[i], b.arcs.sublink.components[j]).crossings == 0);
            }
        }
    }
}

TEST_CASE("diagram examples")
{
    Built b = build({3, 2}, slope_zero());
    CHECK(b.d.genus == 4);
    CHECK(b.d.fiber_genus == 2);
    for (const auto& sys : b.d.systems)
        CHECK(sys.size() == 4);
    TrisectionReport r = verify_trisection_diagram(b.fc, b.d);
    CHECK(r.ok);
    CHECK(r.shared == 2);
    CHECK(r.standard_beta_gamma);
    CHECK(babs(r.det_ab) == 1);
    // gamma contains the sublink itself
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(path_key(b.d.systems[kGamma][i].f0, false) == path_key(b.arcs.sublink.components[i], false));
    // (beta, gamma): identity on the shared block, a permutation on the sublink block
    for (std::size_t i = 0; i < 4; ++i) {
        long long row = 0;
        for (std::size_t j = 0; j < 4; ++j)
            row += r.geo_bg[i][j].convert_to<long long>();
        CHECK(row <= 1);
    }
}

TEST_CASE("verification on the grid at desk scale")
{
    for (TorusParams t : {TorusParams{3, 2}, TorusParams{5, 2}, TorusParams{4, 3}})
        for (const Slope& s : {slope_zero(), Slope(2, 1), Slope(-2, 1), Slope(2, 3), Slope(-2, 3)}) {
            CAPTURE(t.str());
            CAPTURE(s.str());
            Built b = build(t, s);
            TrisectionReport r = verify_trisection_diagram(b.fc, b.d);
            CHECK(r.ok);
            for (const auto& f : r.failures)
                MESSAGE(f);
        }
}

TEST_CASE("corrupted diagrams are rejected")
{
    Built b = build({3, 2}, slope_zero());
    TrisectionDiagram dup = b.d;
    dup.systems[kGamma][1] = dup.systems[kGamma][0];
    TrisectionReport r = verify_trisection_diagram(b.fc, dup);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.cut_system[kGamma]);

    TrisectionDiagram shortd = b.d;
    shortd.systems[kAlpha].pop_back();
    CHECK_FALSE(verify_trisection_diagram(b.fc, shortd).ok);

    TrisectionDiagram swapped = b.d;
    // beta curves in place of alpha: alpha/beta pairing degenerates
    swapped.systems[kAlpha] = swapped.systems[kBeta];
    CHECK_FALSE(verify_trisection_diagram(b.fc, swapped).ok);
}

TEST_CASE("monodromy moves the puncture back to itself")
{
    Built b = build({3, 2}, slope_zero());
    for (const auto& a : b.arcs.a) {
        Path m = apply_monodromy(b.fc, b.arcs.puncture, a);
        REQUIRE(!m.pts.empty());
        CHECK(m.pts.front() == a.pts.front());
        CHECK(m.pts.back() == a.pts.back());
    }
}

#pragma once

#include "gsq/derivative.hpp"
#include "gsq/fiber.hpp"

#include <array>
#include <string>
#include <vector>

namespace gsq {

// Arcs on the punctured fiber, all starting and ending at the puncture.
struct ArcSystem {
    TorusParams params;
    Slope slope;
    std::vector<int> subset;
    Puncture puncture;
    Multicurve sublink;      // L_1..L_g
    std::vector<Path> a, b;  // open paths puncture -> puncture
};

struct ArcSystemCheck {
    bool embedded = false;         // each arc simple away from its endpoints
    bool disjoint = false;         // arcs meet only at the puncture
    bool dual = false;             // |a_i n L_j| = delta_ij
    bool b_avoid = false;          // b_i n L empty
    bool distinct = false;         // closed-up classes pairwise distinct and nonzero
    bool basis = false;            // closed-up classes form a basis of H_1
    std::vector<std::string> failures;
    bool ok() const { return embedded && disjoint && dual && b_avoid && distinct && basis; }
};

ArcSystem find_dualizing_arcs(const FiberComplex& fc, const Multicurve& sublink, const Slope& slope,
                              const std::vector<int>& subset);
ArcSystemCheck check_arc_system(const FiberComplex& fc, const ArcSystem& arcs);

// The loop obtained by joining both ends of an arc through the puncture.
Path close_at_puncture(const Path& arc);
std::vector<BigInt> loop_class(const FiberComplex& fc, const Path& path);

// Monodromy of the punctured fiber: deck rotation followed by a point push back to the puncture.
Path apply_monodromy(const FiberComplex& fc, const Puncture& puncture, const Path& path);

// A curve on the doubled surface F_0 u F_1/2: f0 lies in F_0, f1 (if present) is an arc in F_1/2.
struct DiagramCurve {
    std::string name;
    Path f0;
    bool has_f1 = false;
    Path f1;
    bool pushed = false; // f1 is a pushoff of the stored arc
};

enum : int { kAlpha = 0, kBeta = 1, kGamma = 2 };

struct TrisectionDiagram {
    TorusParams params;
    Slope slope;
    std::vector<int> subset;
    int fiber_genus = 0;
    int genus = 0;
    Puncture puncture;
    std::array<std::vector<DiagramCurve>, 3> systems;
};

TrisectionDiagram build_trisection_diagram(const FiberComplex& fc, const ArcSystem& arcs);

struct CurveMeeting {
    long long count = 0;
    bool identical = false;
    bool transverse = true;
};
CurveMeeting geometric_intersection(const FiberComplex& fc, const Puncture& puncture, const DiagramCurve& c1,
                                    const DiagramCurve& c2);
// Class in H_1(F_0) + H_1(F_1/2), the second copy carries the reversed orientation.
std::vector<BigInt> diagram_class(const FiberComplex& fc, const DiagramCurve& c);
BigInt diagram_pairing(const FiberComplex& fc, const std::vector<BigInt>& u, const std::vector<BigInt>& w);

struct TrisectionReport {
    int genus = 0;
    int fiber_genus = 0;
    bool sizes_ok = false;
    std::array<bool, 3> cut_system{};
    std::array<std::size_t, 3> rank_gf2{};
    std::size_t shared = 0;
    bool standard_beta_gamma = false;
    IntMatrix alg_ab, geo_ab, alg_bg, geo_bg, alg_ag, geo_ag;
    BigInt det_ab = 0;
    bool unimodular = false;
    bool parity_consistent = false;
    std::vector<std::string> failures;
    bool ok = false;
};

TrisectionReport verify_trisection_diagram(const FiberComplex& fc, const TrisectionDiagram& d);

// Lift, select the sublink, find arcs and build the diagram.
TrisectionDiagram trisection_for(const FiberComplex& fc, const SeifertData& seifert, const Slope& s);

} // namespace gsq

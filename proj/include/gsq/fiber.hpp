#pragma once

#include "gsq/matrix.hpp"
#include "gsq/params.hpp"
#include "gsq/qrational.hpp"
#include "gsq/slope.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gsq {

// Pillowcase corners in torus coordinates: C00=(0,0), C10=(1,0), C11=(1,1), C01=(0,1).
enum class Corner : int { C00 = 0, C10 = 1, C11 = 2, C01 = 3 };
enum class EdgeKind : int { H = 0, L = 1, R = 2 };

const char* corner_name(Corner c);
const char* edge_kind_name(EdgeKind k);

// Square sides in counterclockwise order; side s runs from corner s to corner s+1.
enum Side : int { Bottom = 0, Right = 1, Top = 2, Left = 3 };

struct CellVertex {
    Corner corner;
    int label;      // index i (mod p) or j (mod q)
    int cone_order; // order of the cone point below
    std::vector<std::pair<int, int>> corners; // (face, corner)
};

struct FaceSide {
    int face;
    int side;
    bool flip; // local coordinate along the side is 1 - t
};

struct CellEdge {
    EdgeKind kind;
    int index;
    std::array<FaceSide, 2> sides;
    int tail, head; // vertices at t = 0 and t = 1
};

struct CellFace {
    int sheet; // k in Z/pq
    bool back;
    std::array<int, 4> edge;
    std::array<bool, 4> flip;
};

// A point of a path: on an edge (edge >= 0, parameter t) or inside a face.
struct Station {
    int edge = -1;
    Q t;
    int face = -1;
    Vec2 p;

    static Station on(int e, const Q& t)
    {
        Station s;
        s.edge = e;
        s.t = t;
        return s;
    }
    static Station inside(int f, const Vec2& p)
    {
        Station s;
        s.face = f;
        s.p = p;
        return s;
    }
    bool on_edge() const { return edge >= 0; }
    friend bool operator==(const Station& a, const Station& b)
    {
        if (a.edge != b.edge)
            return false;
        return a.edge >= 0 ? a.t == b.t : (a.face == b.face && a.p == b.p);
    }
};

// Polyline; faces[i] holds the segment pts[i] -> pts[i+1] (cyclically when closed).
struct Path {
    std::vector<Station> pts;
    std::vector<int> faces;
    bool closed = true;
    std::size_t segments() const { return closed ? pts.size() : (pts.empty() ? 0 : pts.size() - 1); }
};

struct Multicurve {
    std::vector<Path> components;
    std::optional<Slope> slope;
    std::size_t size() const { return components.size(); }
};

struct Puncture {
    int face;
    Vec2 p;
};

struct ComplementPiece {
    long long euler = 0;
    int boundary = 0;
    int genus = 0;
    friend bool operator==(const ComplementPiece&, const ComplementPiece&) = default;
    friend bool operator<(const ComplementPiece& a, const ComplementPiece& b)
    {
        if (a.genus != b.genus)
            return a.genus < b.genus;
        if (a.boundary != b.boundary)
            return a.boundary < b.boundary;
        return a.euler < b.euler;
    }
};

struct ReferenceCurves;

class FiberComplex {
public:
    TorusParams params;
    int N = 0;        // pq
    int shift = 0;    // m = ap mod pq with ap = -1 mod q
    int mirror = 0;   // shift used on the right-hand folds
    std::vector<CellVertex> vertices;
    std::vector<CellEdge> edges;
    std::vector<CellFace> faces;
    std::vector<int> deck_vertex, deck_edge, deck_face;

    // Gamma graphs: vertex ids v_i, v'_j and edge ids e_{i,j} (indexed i*q + j).
    std::vector<int> gp_v, gp_vp, gp_e;
    std::vector<int> gm_v, gm_vp, gm_e;

    // Lattice basis of H_1: each cycle is a list of (edge, coefficient).
    std::vector<std::vector<std::pair<int, int>>> basis;
    std::vector<std::string> basis_names;
    IntMatrix intersection;        // J[k][l] = z_k . z_l
    IntMatrix intersection_inv_t;  // (J^T)^{-1}

    std::shared_ptr<const ReferenceCurves> refs;

    int genus() const { return params.genus(); }
    int edge_H(int j) const { return ((j % (2 * N)) + 2 * N) % (2 * N); }
    int edge_L(int k) const { return 2 * N + ((k % N) + N) % N; }
    int edge_R(int k) const { return 3 * N + ((k % N) + N) % N; }
    int front(int k) const { return 2 * (((k % N) + N) % N); }
    int back(int k) const { return 2 * (((k % N) + N) % N) + 1; }

    int side_of(int face, int edge) const;
    // Local coordinates of a station inside the given face (station must lie on its closure).
    Vec2 local(int face, const Station& s) const;
    // Station for a boundary point of a face given in local coordinates.
    Station boundary_station(int face, const Vec2& p) const;
    // The face across a side, and the map of local coordinates into that face.
    std::pair<int, int> across(int face, int side) const;
    Vec2 transfer(int from_face, int from_side, const Vec2& p) const;
    // Local coordinates of a point of face g expressed in the frame of adjacent face f across side s of f.
    Vec2 to_neighbour_frame(int f, int s, const Vec2& p_in_g) const;

    int half_edge_next_ccw(int edge, int vertex) const;

    std::vector<std::pair<int, int>> vertex_rotation(int vertex) const;

    std::vector<int> next_ccw_; // indexed edge*2 + end
};

struct ReferenceCurves {
    Multicurve L0, LambdaInf, Lambda1, LambdaMinus1;
    long long scale = 1; // calibrated k
};

FiberComplex build_fiber(const TorusParams& params);

struct BaseLifts {
    Multicurve L0, LambdaInf, Lambda1;
};
BaseLifts lift_base_multicurves(const FiberComplex& fc);

Multicurve apply_tilde_tau0(const FiberComplex& fc, const Multicurve& m, long long n);
Multicurve apply_tilde_tau_inf(const FiberComplex& fc, const Multicurve& m, long long n);
Path apply_tilde_tau0(const FiberComplex& fc, const Path& path, long long n);
Path apply_tilde_tau_inf(const FiberComplex& fc, const Path& path, long long n);

// Piecewise-linear map in the annulus chart (x, Y) with face f at Y in [f, f+1], Y taken mod 2pq.
// The callback returns the image polyline of one segment given its endpoints in that chart.
using BandSegmentMap = std::function<std::vector<Vec2>(const Vec2&, const Vec2&)>;
Path apply_band_map(const FiberComplex& fc, const Path& path, const BandSegmentMap& segment_image);

Multicurve lift_slope(const FiberComplex& fc, const Slope& s);
Slope recognize_slope(const FiberComplex& fc, const Multicurve& m);

struct NotASlopeLift : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<ComplementPiece> complement_components(const FiberComplex& fc, const Multicurve& m,
                                                   const std::optional<Puncture>& puncture = std::nullopt);
// Component index of the cut surface containing each side of each curve component, plus piece data.
struct CutSurface {
    std::vector<ComplementPiece> pieces;
    std::vector<int> left_piece, right_piece;
};
CutSurface cut_surface(const FiberComplex& fc, const Multicurve& m,
                       const std::optional<Puncture>& puncture = std::nullopt);

IntMatrix homology_classes(const FiberComplex& fc, const Multicurve& m);
std::vector<BigInt> homology_class(const FiberComplex& fc, const Path& path);
// Algebraic intersection numbers with the basis cycles.
std::vector<BigInt> crossing_cochain(const FiberComplex& fc, const Path& path);
BigInt algebraic_intersection(const FiberComplex& fc, const std::vector<BigInt>& a, const std::vector<BigInt>& b);

// Geometry on multicurves.
Path deck_apply(const FiberComplex& fc, const Path& path, int power = 1);
Multicurve deck_apply(const FiberComplex& fc, const Multicurve& m, int power = 1);
std::vector<int> deck_permutation(const FiberComplex& fc, const Multicurve& m, int power = 1);

struct IntersectionCount {
    long long crossings = 0;
    long long touchings = 0;
    long long signed_sum = 0; // crossings counted with orientation sign
    bool coincident = false;
};
IntersectionCount count_intersections(const FiberComplex& fc, const Path& a, const Path& b, bool same_path = false);
IntersectionCount count_multicurves(const FiberComplex& fc, const Multicurve& a, const Multicurve& b);
long long intersection_count(const FiberComplex& fc, const Multicurve& a, const Multicurve& b);

// Normal coordinates: number of crossings per edge.
std::vector<long long> normal_coordinates(const FiberComplex& fc, const Path& path);
std::vector<long long> normal_coordinates(const FiberComplex& fc, const Multicurve& m);

// Canonical oriented and unoriented keys used for set comparisons.
std::string path_key(const Path& path, bool oriented);
bool same_component_set(const Multicurve& a, const Multicurve& b);

// Self-consistency of a closed multicurve: stations match faces, no returns, pairwise disjoint.
void validate_multicurve(const FiberComplex& fc, const Multicurve& m);

Path trace_line(const FiberComplex& fc, int face, const Vec2& start, const Vec2& dir);

} // namespace gsq

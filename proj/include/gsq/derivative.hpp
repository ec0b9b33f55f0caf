#pragma once

#include "gsq/farey.hpp"
#include "gsq/fiber.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsq {

using Vec3 = std::array<double, 3>;

// Polygonal model of the torus-knot fiber: p horizontal disks, q meridian disks, pq quarter-twisted bands.
struct DiskBandModel {
    TorusParams params;
    double tube = 0.5;
    std::vector<double> heights; // c_i
    std::vector<double> angles;  // theta_j

    explicit DiskBandModel(const TorusParams& t);
    Vec3 disk_centre(int i) const;
    Vec3 meridian_centre(int j) const;
    Vec3 band_point(int i, int j) const;
    // Closed polygon of the lattice cycle C(i,j); pushed along the surface normal when eps > 0.
    std::vector<Vec3> cycle(int i, int j, double eps = 0.0) const;
};

// Linking number of two disjoint closed polygons from signed crossings in the projection along dir.
double linking_number(const std::vector<Vec3>& a, const std::vector<Vec3>& b, const Vec3& dir);

struct SeifertData {
    TorusParams params;
    std::vector<std::string> basis;  // lattice cycles of Gamma+
    IntMatrix matrix;                // V, size (p-1)(q-1)
    IntMatrix minus;                 // Seifert form on Gamma-
    IntMatrix block;                 // diag(matrix, minus) in the fiber basis order
    int form_sign = 0;               // V - V^T = form_sign * J restricted to Gamma+
    bool minus_transposed = false;   // minus = -V^T rather than -V
};

// Seifert matrix of T(p,q) from the disk-band model.
SeifertData compute_seifert_matrix(const TorusParams& params);
// Match V and its mirror against the intersection form of the fiber complex.
SeifertData match_seifert(const FiberComplex& fc, SeifertData sd);

IntPoly alexander_polynomial(const IntMatrix& V);
IntPoly torus_knot_alexander(int p, int q);
std::string poly_str(const IntPoly& p);

struct DerivativeReport {
    TorusParams params;
    Slope slope;
    std::size_t components = 0;
    std::vector<int> subset;
    std::size_t homology_rank = 0;
    std::vector<ComplementPiece> complement;
    bool complement_planar_connected = false;
    bool deck_invariant = false;
    IntMatrix linking;
    bool linking_zero = false;
    bool verdict = false;
};

struct UnsupportedSlope : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> select_sublink(const FiberComplex& fc, const Multicurve& lift);
Multicurve sub_multicurve(const Multicurve& m, const std::vector<int>& subset);
DerivativeReport verify_derivative(const FiberComplex& fc, const Multicurve& lift, const std::vector<int>& subset,
                                   const SeifertData& seifert);
// Convenience: build, lift, select and verify.
DerivativeReport derivative_for(const FiberComplex& fc, const SeifertData& seifert, const Slope& s);

// The surface-framed sublink together with its Farey and closure data.
struct FramedLinkReport {
    TorusParams params;
    Slope slope;
    int n = 0;
    std::size_t components = 0;
    std::vector<int> subset;
    std::vector<long long> framings;
    std::pair<SummandSlope, SummandSlope> summands;
    ClosureReport closure;
    bool verdict = false;
};

FramedLinkReport framed_link_report(const TorusParams& params, const Slope& s);

} // namespace gsq

#include "gsq/derivative.hpp"

#include <cmath>
#include <sstream>

namespace gsq {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 scale(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross3(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 unit(const Vec3& a) { return scale(1.0 / std::sqrt(dot(a, a)), a); }

} // namespace

DiskBandModel::DiskBandModel(const TorusParams& t) : params(t)
{
    for (int i = 0; i < t.p; ++i)
        heights.push_back(tube * 0.8 * (2.0 * i / (t.p - 1) - 1.0));
    for (int j = 0; j < t.q; ++j)
        angles.push_back(2.0 * kPi * j / t.q + 0.1);
}

Vec3 DiskBandModel::disk_centre(int i) const { return {0.0, 0.0, heights[static_cast<std::size_t>(i)]}; }

Vec3 DiskBandModel::meridian_centre(int j) const
{
    double th = angles[static_cast<std::size_t>(j)];
    return {std::cos(th), std::sin(th), 0.0};
}

Vec3 DiskBandModel::band_point(int i, int j) const
{
    double c = heights[static_cast<std::size_t>(i)];
    double rho = 1.0 - std::sqrt(tube * tube - c * c);
    double th = angles[static_cast<std::size_t>(j)];
    return {rho * std::cos(th), rho * std::sin(th), c};
}

std::vector<Vec3> DiskBandModel::cycle(int i, int j, double eps) const
{
    const Vec3 z{0.0, 0.0, 1.0};
    auto theta_hat = [&](int jj) {
        double th = angles[static_cast<std::size_t>(jj)];
        return Vec3{-std::sin(th), std::cos(th), 0.0};
    };
    auto on_disk = [&](int ii) { return add(disk_centre(ii), scale(eps, z)); };
    auto on_meridian = [&](int jj) { return add(meridian_centre(jj), scale(eps, theta_hat(jj))); };
    auto on_band = [&](int ii, int jj) {
        return add(band_point(ii, jj), scale(eps, unit(add(z, theta_hat(jj)))));
    };
    return {on_disk(i),         on_band(i, j),         on_meridian(j),     on_band(i + 1, j),
            on_disk(i + 1),     on_band(i + 1, j + 1), on_meridian(j + 1), on_band(i, j + 1)};
}

double linking_number(const std::vector<Vec3>& a, const std::vector<Vec3>& b, const Vec3& dir)
{
    Vec3 u = unit(dir);
    Vec3 helper = std::fabs(u[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    Vec3 e1 = unit(cross3(u, helper));
    Vec3 e2 = cross3(u, e1);
    auto proj = [&](const Vec3& v) { return std::array<double, 2>{dot(v, e1), dot(v, e2)}; };
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Vec3& a0 = a[i];
        const Vec3& a1 = a[(i + 1) % a.size()];
        auto p0 = proj(a0), p1 = proj(a1);
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Vec3& b0 = b[j];
            const Vec3& b1 = b[(j + 1) % b.size()];
            auto q0 = proj(b0), q1 = proj(b1);
            double dx = p1[0] - p0[0], dy = p1[1] - p0[1];
            double ex = q1[0] - q0[0], ey = q1[1] - q0[1];
            double den = dx * ey - dy * ex;
            if (std::fabs(den) < 1e-14)
                continue;
            double fx = q0[0] - p0[0], fy = q0[1] - p0[1];
            double s = (fx * ey - fy * ex) / den;
            double t = (fx * dy - fy * dx) / den;
            if (s < 0.0 || s >= 1.0 || t < 0.0 || t >= 1.0)
                continue;
            double ha = dot(add(a0, scale(s, sub(a1, a0))), u);
            double hb = dot(add(b0, scale(t, sub(b1, b0))), u);
            if (std::fabs(ha - hb) < 1e-12)
                throw std::runtime_error("polygons meet in space");
            // positive crossing: (over x under) points at the viewer
            double sgn = den > 0 ? 1.0 : -1.0;
            total += ha > hb ? sgn : -sgn;
        }
    }
    return total / 2.0;
}

SeifertData compute_seifert_matrix(const TorusParams& params)
{
    params.validate();
    DiskBandModel model(params);
    SeifertData sd;
    sd.params = params;
    const int p = params.p, q = params.q;
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i + 1 < p; ++i)
        for (int j = 0; j + 1 < q; ++j) {
            idx.emplace_back(i, j);
            sd.basis.push_back("C+(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    std::size_t n = idx.size();
    const double eps = 0.02;
    const Vec3 dirs[2] = {{0.31, 0.17, 0.93}, {-0.23, 0.41, 0.88}};
    sd.matrix = zeros(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        auto pushed = model.cycle(idx[k].first, idx[k].second, eps);
        for (std::size_t l = 0; l < n; ++l) {
            auto base = model.cycle(idx[l].first, idx[l].second, 0.0);
            double v0 = linking_number(pushed, base, dirs[0]);
            double v1 = linking_number(pushed, base, dirs[1]);
            long long r0 = std::llround(v0);
            if (std::fabs(v0 - static_cast<double>(r0)) > 1e-9 || std::fabs(v1 - v0) > 1e-9)
                throw std::logic_error("linking number oracle is not stable under change of projection");
            sd.matrix[k][l] = r0;
        }
    }
    BigInt d = determinant(add(sd.matrix, negate(transpose(sd.matrix))));
    if (d != 1 && d != -1)
        throw std::logic_error("Seifert form is not unimodular");
    return sd;
}

SeifertData match_seifert(const FiberComplex& fc, SeifertData sd)
{
    if (!(fc.params == sd.params))
        throw std::invalid_argument("Seifert data for different parameters");
    std::size_t n = sd.matrix.size();
    std::size_t N2 = fc.basis.size();
    if (N2 != 2 * n)
        throw std::logic_error("basis size mismatch");
    IntMatrix Jp = zeros(n, n), Jm = zeros(n, n);
    for (std::size_t a = 0; a < N2; ++a)
        for (std::size_t b = 0; b < N2; ++b) {
            if ((a < n) != (b < n)) {
                if (fc.intersection[a][b] != 0)
                    throw std::logic_error("Gamma+ and Gamma- cycles intersect");
                continue;
            }
            (a < n ? Jp : Jm)[a % n][b % n] = fc.intersection[a][b];
        }
    IntMatrix form = add(sd.matrix, negate(transpose(sd.matrix)));
    if (form == Jp)
        sd.form_sign = 1;
    else if (form == negate(Jp))
        sd.form_sign = -1;
    else
        throw std::logic_error("Seifert form does not match the intersection form on Gamma+");
    IntMatrix mv = negate(sd.matrix), mvt = negate(transpose(sd.matrix));
    auto fits = [&](const IntMatrix& M) {
        IntMatrix f = add(M, negate(transpose(M)));
        return sd.form_sign > 0 ? f == Jm : f == negate(Jm);
    };
    if (fits(mvt)) {
        sd.minus = mvt;
        sd.minus_transposed = true;
    } else if (fits(mv)) {
        sd.minus = mv;
    } else {
        throw std::logic_error("mirror Seifert form does not match the intersection form on Gamma-");
    }
    sd.block = zeros(N2, N2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            sd.block[a][b] = sd.matrix[a][b];
            sd.block[n + a][n + b] = sd.minus[a][b];
        }
    return sd;
}

IntPoly alexander_polynomial(const IntMatrix& V)
{
    return poly_normalize_units(det_pencil(V, transpose(V)));
}

IntPoly torus_knot_alexander(int p, int q)
{
    auto tn_minus_1 = [](int n) {
        IntPoly r(static_cast<std::size_t>(n) + 1, 0);
        r[0] = -1;
        r[static_cast<std::size_t>(n)] = 1;
        return r;
    };
    IntPoly num = poly_mul(tn_minus_1(p * q), tn_minus_1(1));
    IntPoly den = poly_mul(tn_minus_1(p), tn_minus_1(q));
    return poly_normalize_units(poly_divide(num, den));
}

std::string poly_str(const IntPoly& p)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        const BigInt& c = p[k];
        if (c == 0)
            continue;
        BigInt a = babs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1 || k == 0)
            os << a.str();
        if (k >= 1)
            os << "t";
        if (k >= 2)
            os << "^" << k;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace gsq

#include "gsq/fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace gsq {

namespace {

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

bool in_unit(const Vec2& p) { return p.x >= Q(0) && p.x <= Q(1) && p.y >= Q(0) && p.y <= Q(1); }

bool on_boundary(const Vec2& p)
{
    return p.x == Q(0) || p.x == Q(1) || p.y == Q(0) || p.y == Q(1);
}

Station station_at(const FiberComplex& fc, int face, const Vec2& p)
{
    if (!in_unit(p))
        throw std::logic_error("point outside its face");
    return on_boundary(p) ? fc.boundary_station(face, p) : Station::inside(face, p);
}

using StationKey = std::tuple<int, __int128, __int128, __int128, __int128>;

StationKey key_of(const Station& s)
{
    if (s.on_edge())
        return {s.edge, s.t.num(), s.t.den(), 0, 0};
    return {-1 - s.face, s.p.x.num(), s.p.x.den(), s.p.y.num(), s.p.y.den()};
}

std::string token(const Station& s)
{
    if (s.on_edge())
        return "e" + std::to_string(s.edge) + "@" + s.t.str();
    return "f" + std::to_string(s.face) + ":" + s.p.x.str() + "," + s.p.y.str();
}

// Remove interior vertices that are neither bends nor face changes.
Path simplify(const FiberComplex& fc, const Path& in)
{
    std::size_t n = in.pts.size();
    Path out;
    out.closed = in.closed;
    for (std::size_t i = 0; i < n; ++i) {
        const Station& s = in.pts[i];
        bool has_prev = in.closed || i > 0;
        bool has_next = in.closed || i + 1 < n;
        if (!s.on_edge() && has_prev && has_next) {
            std::size_t ip = (i + n - 1) % n, in_ = (i + 1) % n;
            int fp = in.faces[ip], fn = in.faces[i];
            if (fp != s.face || fn != s.face)
                throw std::logic_error("interior vertex outside its face");
            if (orient(fc.local(s.face, in.pts[ip]), s.p, fc.local(s.face, in.pts[in_])) == 0)
                continue;
        }
        if (s.on_edge() && has_prev && has_next) {
            std::size_t ip = (i + n - 1) % n;
            if (in.faces[ip] == in.faces[i])
                throw std::runtime_error("path touches an edge without crossing");
        }
        out.pts.push_back(s);
        if (i < in.faces.size())
            out.faces.push_back(in.faces[i]);
    }
    if (!out.closed && !out.faces.empty() && out.faces.size() == out.pts.size())
        out.faces.pop_back();
    return out;
}

// Band charts in which a lifted twist is one affine map.
struct InfChart {
    const FiberComplex& fc;
    long long n;
    static constexpr int axis = 1;
    int band_of(int) const { return 0; }
    Vec2 to_band(int f, const Vec2& p) const { return {p.x, Q(f) + p.y}; }
    Vec2 map(const Vec2& P) const { return {P.x, P.y + Q(2 * n) * (P.x - Q(1))}; }
    std::vector<Vec2> map_segment(const Vec2& a, const Vec2& b) const { return {map(a), map(b)}; }
    std::pair<int, Vec2> from_band(int, long long cell, const Vec2& P) const
    {
        return {mod(cell, 2LL * fc.N), {P.x, P.y - Q(cell)}};
    }
};

struct FunctionChart {
    const FiberComplex& fc;
    const BandSegmentMap& fn;
    static constexpr int axis = 1;
    int band_of(int) const { return 0; }
    Vec2 to_band(int f, const Vec2& p) const { return {p.x, Q(f) + p.y}; }
    std::vector<Vec2> map_segment(const Vec2& a, const Vec2& b) const { return fn(a, b); }
    std::pair<int, Vec2> from_band(int, long long cell, const Vec2& P) const
    {
        return {mod(cell, 2LL * fc.N), {P.x, P.y - Q(cell)}};
    }
};

struct ZeroChart {
    const FiberComplex& fc;
    long long n;
    static constexpr int axis = 0;
    ZeroChart(const FiberComplex& f, long long k) : fc(f), n(k)
    {
        if (fc.mirror != fc.shift)
            throw std::logic_error("zero twist needs both folds with the same shift");
    }
    int band_of(int f) const
    {
        int sheet = fc.faces[static_cast<std::size_t>(f)].sheet;
        return f % 2 == 0 ? sheet : mod(sheet - fc.shift, fc.N);
    }
    Vec2 to_band(int f, const Vec2& p) const
    {
        if (f % 2 == 0)
            return p;
        return {Q(2) - p.x, Q(1) - p.y};
    }
    Vec2 map(const Vec2& P) const { return {P.x - Q(2 * n) * P.y, P.y}; }
    std::vector<Vec2> map_segment(const Vec2& a, const Vec2& b) const { return {map(a), map(b)}; }
    std::pair<int, Vec2> from_band(int band, long long cell, const Vec2& P) const
    {
        if (mod(cell, 2) == 0)
            return {fc.front(band), {P.x - Q(cell), P.y}};
        return {fc.back(band + fc.shift), {Q(cell + 1) - P.x, Q(1) - P.y}};
    }
};

template <class Chart>
Path retrace(const FiberComplex& fc, const Chart& chart, const Path& path)
{
    Path out;
    out.closed = path.closed;
    std::size_t segs = path.segments();
    std::optional<Station> pending_end;
    auto coord = [](const Vec2& v) { return Chart::axis == 0 ? v.x : v.y; };
    for (std::size_t i = 0; i < segs; ++i) {
        int f = path.faces[i];
        const Station& s0 = path.pts[i];
        const Station& s1 = path.pts[(i + 1) % path.pts.size()];
        int band = chart.band_of(f);
        std::vector<Vec2> image =
            chart.map_segment(chart.to_band(f, fc.local(f, s0)), chart.to_band(f, fc.local(f, s1)));
        for (std::size_t piece = 0; piece + 1 < image.size(); ++piece) {
            const Vec2& q0 = image[piece];
            const Vec2& q1 = image[piece + 1];
            Q c0 = coord(q0), c1 = coord(q1);
            if (c0 == c1 && c0.is_integer())
                throw std::runtime_error("image segment runs along an edge");
            std::vector<Vec2> pts{q0};
            if (c0 != c1) {
                Q lo = c0 < c1 ? c0 : c1, hi = c0 < c1 ? c1 : c0;
                long long g_lo = static_cast<long long>(lo.floor()) + 1;
                long long g_hi = static_cast<long long>(hi.is_integer() ? hi.floor() - 1 : hi.floor());
                std::vector<Vec2> cuts;
                for (long long g = g_lo; g <= g_hi; ++g) {
                    Q s = (Q(g) - c0) / (c1 - c0);
                    cuts.push_back(q0 + s * (q1 - q0));
                }
                if (c1 < c0)
                    std::reverse(cuts.begin(), cuts.end());
                pts.insert(pts.end(), cuts.begin(), cuts.end());
            }
            pts.push_back(q1);
            for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
                Vec2 mid = Q(1, 2) * (pts[j] + pts[j + 1]);
                long long cell = static_cast<long long>(coord(mid).floor());
                auto [face, a] = chart.from_band(band, cell, pts[j]);
                Vec2 b = chart.from_band(band, cell, pts[j + 1]).second;
                Station sa = station_at(fc, face, a);
                if (pending_end && !(*pending_end == sa))
                    throw std::logic_error("retraced segments do not join");
                out.pts.push_back(sa);
                out.faces.push_back(face);
                pending_end = station_at(fc, face, b);
            }
        }
    }
    if (path.closed) {
        if (!(out.pts.front() == *pending_end))
            throw std::logic_error("retraced curve does not close");
    } else if (pending_end) {
        out.pts.push_back(*pending_end);
    }
    return simplify(fc, out);
}

std::vector<std::string> keys_of(const Multicurve& m)
{
    std::vector<std::string> k;
    for (const auto& c : m.components)
        k.push_back(path_key(c, false));
    return k;
}

Multicurve deck_orbit(const FiberComplex& fc, const Path& seed)
{
    Multicurve m;
    std::set<std::string> seen;
    for (int k = 0; k < fc.N; ++k) {
        Path img = deck_apply(fc, seed, k);
        if (seen.insert(path_key(img, false)).second)
            m.components.push_back(std::move(img));
    }
    return m;
}

// direction comparisons for the alternation test
int half_of(const Vec2& u, const Vec2& v)
{
    int c = cross_sign(u, v);
    return (c > 0 || (c == 0 && dot_sign(u, v) > 0)) ? 0 : 1;
}

bool same_dir(const Vec2& u, const Vec2& v)
{
    return cross_sign(u, v) == 0 && dot_sign(u, v) > 0;
}

// v strictly inside the ccw arc from u to w
bool between(const Vec2& u, const Vec2& v, const Vec2& w)
{
    int hv = half_of(u, v), hw = half_of(u, w);
    if (same_dir(u, v))
        return false;
    if (hv != hw)
        return hv < hw;
    return cross_sign(v, w) > 0;
}

struct Seg {
    Vec2 a, b;
    const Path* path;
    std::size_t idx;
};

enum class SegRel { None, Proper, Touch, Overlap };

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p)
{
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

SegRel relate(const Seg& s, const Seg& t, int& sign)
{
    bool share = s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
    int o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
    int o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap beyond a single shared point?
        auto key = [&](const Vec2& p) { return s.a.x != s.b.x ? p.x : p.y; };
        Q smin = std::min(key(s.a), key(s.b)), smax = std::max(key(s.a), key(s.b));
        Q tmin = std::min(key(t.a), key(t.b)), tmax = std::max(key(t.a), key(t.b));
        Q lo = std::max(smin, tmin), hi = std::min(smax, tmax);
        if (lo < hi)
            return SegRel::Overlap;
        if (lo == hi && !share)
            return SegRel::Touch;
        return SegRel::None;
    }
    if (share)
        return SegRel::None;
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        if (o1 != o2 && o3 != o4) {
            sign = cross_sign(s.b - s.a, t.b - t.a);
            return SegRel::Proper;
        }
        return SegRel::None;
    }
    if ((o1 == 0 && on_segment(s.a, s.b, t.a)) || (o2 == 0 && on_segment(s.a, s.b, t.b)) ||
        (o3 == 0 && on_segment(t.a, t.b, s.a)) || (o4 == 0 && on_segment(t.a, t.b, s.b)))
        return SegRel::Touch;
    return SegRel::None;
}

struct Occ {
    const Path* path;
    std::size_t idx;
};

struct Neighbours {
    bool ok = false;
    Station prev, next;
    int fprev = -1, fnext = -1;
};

Neighbours neighbours(const Occ& o)
{
    Neighbours nb;
    const Path& p = *o.path;
    std::size_t n = p.pts.size();
    if (!p.closed && (o.idx == 0 || o.idx + 1 == n))
        return nb;
    std::size_t ip = (o.idx + n - 1) % n, in_ = (o.idx + 1) % n;
    nb.ok = true;
    nb.prev = p.pts[ip];
    nb.next = p.pts[in_];
    nb.fprev = p.faces[ip];
    nb.fnext = p.faces[o.idx];
    return nb;
}

Vec2 in_frame(const FiberComplex& fc, int f0, const Station& at, int g, const Station& s)
{
    if (g == f0)
        return fc.local(f0, s);
    if (!at.on_edge())
        throw std::logic_error("interior shared point with neighbours in different faces");
    int side = fc.side_of(f0, at.edge);
    if (fc.across(f0, side).first != g)
        throw std::logic_error("neighbour face is not adjacent");
    return fc.to_neighbour_frame(f0, side, fc.local(g, s));
}

void shared_point(const FiberComplex& fc, const Station& x, const Occ& a, const Occ& b, IntersectionCount& out)
{
    Neighbours na = neighbours(a), nb = neighbours(b);
    if (!na.ok || !nb.ok) {
        ++out.touchings;
        return;
    }
    int f0 = na.fprev;
    Vec2 X = fc.local(f0, x);
    Vec2 u1 = in_frame(fc, f0, x, na.fprev, na.prev) - X;
    Vec2 u2 = in_frame(fc, f0, x, na.fnext, na.next) - X;
    Vec2 w1 = in_frame(fc, f0, x, nb.fprev, nb.prev) - X;
    Vec2 w2 = in_frame(fc, f0, x, nb.fnext, nb.next) - X;
    bool d1 = same_dir(w1, u1) || same_dir(w1, u2);
    bool d2 = same_dir(w2, u1) || same_dir(w2, u2);
    if (d1 || d2) {
        ++out.touchings;
        if (d1 && d2)
            out.coincident = true;
        return;
    }
    bool s1 = between(u1, w1, u2), s2 = between(u1, w2, u2);
    if (s1 == s2) {
        ++out.touchings;
        return;
    }
    ++out.crossings;
    out.signed_sum += between(u2, w2, u1) ? 1 : -1;
}

IntersectionCount count_engine(const FiberComplex& fc, const std::vector<const Path*>& A,
                               const std::vector<const Path*>& B, bool self)
{
    IntersectionCount out;
    std::vector<std::vector<Seg>> fa(fc.faces.size()), fb(fc.faces.size());
    auto bucket = [&](const std::vector<const Path*>& P, std::vector<std::vector<Seg>>& into) {
        for (const Path* p : P)
            for (std::size_t i = 0; i < p->segments(); ++i) {
                int f = p->faces[i];
                into[static_cast<std::size_t>(f)].push_back(
                    {fc.local(f, p->pts[i]), fc.local(f, p->pts[(i + 1) % p->pts.size()]), p, i});
            }
    };
    bucket(A, fa);
    if (!self)
        bucket(B, fb);
    for (std::size_t f = 0; f < fc.faces.size(); ++f) {
        const auto& sa = fa[f];
        const auto& sb = self ? fa[f] : fb[f];
        for (std::size_t i = 0; i < sa.size(); ++i)
            for (std::size_t j = self ? i + 1 : 0; j < sb.size(); ++j) {
                int sign = 0;
                SegRel r = relate(sa[i], sb[j], sign);
                if (r == SegRel::Proper) {
                    ++out.crossings;
                    out.signed_sum += sign;
                } else if (r == SegRel::Touch) {
                    ++out.touchings;
                } else if (r == SegRel::Overlap) {
                    out.coincident = true;
                }
            }
    }
    std::map<StationKey, std::vector<Occ>> at;
    for (const Path* p : A)
        for (std::size_t i = 0; i < p->pts.size(); ++i)
            at[key_of(p->pts[i])].push_back({p, i});
    if (self) {
        for (const auto& [k, occ] : at)
            if (occ.size() > 1)
                out.touchings += static_cast<long long>(occ.size() - 1);
        return out;
    }
    for (const Path* p : B)
        for (std::size_t i = 0; i < p->pts.size(); ++i) {
            auto it = at.find(key_of(p->pts[i]));
            if (it == at.end())
                continue;
            for (const auto& o : it->second)
                shared_point(fc, p->pts[i], o, {p, i}, out);
        }
    return out;
}

} // namespace

Path trace_line(const FiberComplex& fc, int face, const Vec2& start, const Vec2& dir)
{
    Path path;
    Station first = fc.boundary_station(face, start);
    int f = face;
    Vec2 P = start, d = dir;
    std::size_t guard = 0;
    for (;;) {
        std::optional<Q> best;
        auto consider = [&](const Q& s) {
            if (s.sign() > 0 && (!best || s < *best))
                best = s;
        };
        if (d.x.sign() > 0)
            consider((Q(1) - P.x) / d.x);
        if (d.x.sign() < 0)
            consider((Q(0) - P.x) / d.x);
        if (d.y.sign() > 0)
            consider((Q(1) - P.y) / d.y);
        if (d.y.sign() < 0)
            consider((Q(0) - P.y) / d.y);
        if (!best)
            throw std::logic_error("trace direction is zero");
        Vec2 E = P + *best * d;
        path.pts.push_back(fc.boundary_station(f, P));
        path.faces.push_back(f);
        Station se = fc.boundary_station(f, E);
        int side = fc.side_of(f, se.edge);
        auto [g, gs] = fc.across(f, side);
        (void)gs;
        if (fc.edges[static_cast<std::size_t>(se.edge)].kind != EdgeKind::H)
            d = {-d.x, -d.y};
        P = fc.local(g, se);
        f = g;
        if (f == face && se == first)
            break;
        if (++guard > 4 * fc.edges.size() * static_cast<std::size_t>(fc.N + 4))
            throw std::runtime_error("trace does not close");
    }
    return path;
}

BaseLifts lift_base_multicurves(const FiberComplex& fc)
{
    BaseLifts b;
    b.L0 = deck_orbit(fc, trace_line(fc, fc.front(0), {Q(0), Q(3, 7)}, {Q(1), Q(0)}));
    b.LambdaInf = deck_orbit(fc, trace_line(fc, fc.front(0), {Q(5, 11), Q(0)}, {Q(0), Q(1)}));
    b.Lambda1 = deck_orbit(fc, trace_line(fc, fc.front(0), {Q(0), Q(6, 13)}, {Q(1), Q(1)}));
    b.L0.slope = slope_zero();
    b.LambdaInf.slope = slope_inf();
    b.Lambda1.slope = slope_one();
    return b;
}

void attach_reference_curves(FiberComplex& fc)
{
    fc.refs.reset();
    BaseLifts b = lift_base_multicurves(fc);
    if (static_cast<int>(b.L0.size()) != fc.N)
        throw std::runtime_error("lift of 0/1 must have pq components");
    if (b.LambdaInf.size() != 1 || b.Lambda1.size() != 1)
        throw std::runtime_error("lifts of odd slopes must be connected");
    validate_multicurve(fc, b.L0);
    validate_multicurve(fc, b.LambdaInf);
    validate_multicurve(fc, b.Lambda1);
    auto refs = std::make_shared<ReferenceCurves>();
    refs->L0 = b.L0;
    refs->LambdaInf = b.LambdaInf;
    refs->Lambda1 = b.Lambda1;
    refs->LambdaMinus1 = apply_tilde_tau_inf(fc, b.Lambda1, -1);
    if (refs->LambdaMinus1.size() != 1)
        throw std::runtime_error("lift of -1/1 must be connected");
    long long base = intersection_count(fc, refs->L0, refs->LambdaInf);
    long long unit = 2LL * fc.N;
    if (base <= 0 || base % unit != 0)
        throw std::runtime_error("reference intersection is not a multiple of 2pq");
    long long k = base / unit;
    struct Expect {
        const Multicurve* a;
        const Multicurve* b;
        long long factor;
    };
    for (const auto& e : {Expect{&refs->L0, &refs->Lambda1, 1}, Expect{&refs->LambdaInf, &refs->Lambda1, 1},
                          Expect{&refs->L0, &refs->LambdaMinus1, 1},
                          Expect{&refs->LambdaInf, &refs->LambdaMinus1, 1},
                          Expect{&refs->Lambda1, &refs->LambdaMinus1, 2}})
        if (intersection_count(fc, *e.a, *e.b) != e.factor * unit * k)
            throw std::runtime_error("reference curves do not meet minimally");
    refs->scale = k;
    fc.refs = refs;
}

Path apply_tilde_tau_inf(const FiberComplex& fc, const Path& path, long long n)
{
    if (n == 0)
        return path;
    return retrace(fc, InfChart{fc, n}, path);
}

Path apply_band_map(const FiberComplex& fc, const Path& path, const BandSegmentMap& segment_image)
{
    return retrace(fc, FunctionChart{fc, segment_image}, path);
}

Path apply_tilde_tau0(const FiberComplex& fc, const Path& path, long long n)
{
    if (n == 0)
        return path;
    return retrace(fc, ZeroChart(fc, n), path);
}

namespace {

template <class F>
Multicurve map_components(const Multicurve& m, F&& f)
{
    Multicurve out;
    for (const auto& c : m.components)
        out.components.push_back(f(c));
    return out;
}

} // namespace

Multicurve apply_tilde_tau_inf(const FiberComplex& fc, const Multicurve& m, long long n)
{
    Multicurve out = map_components(m, [&](const Path& p) { return apply_tilde_tau_inf(fc, p, n); });
    if (m.slope)
        out.slope = apply_twist({slope_inf(), BigInt(n)}, *m.slope);
    return out;
}

Multicurve apply_tilde_tau0(const FiberComplex& fc, const Multicurve& m, long long n)
{
    Multicurve out = map_components(m, [&](const Path& p) { return apply_tilde_tau0(fc, p, n); });
    if (m.slope)
        out.slope = apply_twist({slope_zero(), BigInt(n)}, *m.slope);
    return out;
}

Multicurve lift_slope(const FiberComplex& fc, const Slope& s)
{
    if (!fc.refs)
        throw std::logic_error("fiber complex has no reference curves");
    Reduction r = reduce(s);
    Multicurve m = r.terminal == slope_zero() ? fc.refs->L0
                   : r.terminal == slope_inf() ? fc.refs->LambdaInf
                                               : fc.refs->Lambda1;
    TwistWord back = r.word.inverse();
    for (const auto& mv : back.moves()) {
        if (babs(mv.power) > BigInt(1) << 60)
            throw std::out_of_range("twist power too large");
        long long n = mv.power.convert_to<long long>();
        m = mv.axis == slope_zero() ? apply_tilde_tau0(fc, m, n) : apply_tilde_tau_inf(fc, m, n);
    }
    m.slope = s;
    return m;
}

Slope recognize_slope(const FiberComplex& fc, const Multicurve& m)
{
    if (!fc.refs)
        throw std::logic_error("fiber complex has no reference curves");
    const auto& R = *fc.refs;
    long long unit = 2LL * fc.N * R.scale;
    auto measure = [&](const Multicurve& ref) {
        long long c = intersection_count(fc, m, ref);
        if (c % unit != 0)
            throw NotASlopeLift("intersection count " + std::to_string(c) + " is not a multiple of " +
                                std::to_string(unit));
        return c / unit;
    };
    long long d = measure(R.LambdaInf);
    long long c = measure(R.L0);
    long long cm = measure(R.Lambda1);
    long long cp = measure(R.LambdaMinus1);
    if (c == 0 && d == 0)
        throw NotASlopeLift("multicurve misses both reference lifts");
    if (std::gcd(c, d) != 1)
        throw NotASlopeLift("intersection profile is not primitive");
    long long sc = c;
    if (c != 0 && d != 0) {
        if (cm == std::llabs(c - d) && cp == c + d)
            sc = c;
        else if (cm == c + d && cp == std::llabs(c - d))
            sc = -c;
        else
            throw NotASlopeLift("intersection profile is inconsistent");
    } else if (cm != c + d || cp != c + d) {
        throw NotASlopeLift("intersection profile is inconsistent");
    }
    Slope s(sc, d);
    std::size_t expect = s.numerator_even() ? static_cast<std::size_t>(fc.N) : 1;
    if (m.size() != expect)
        throw NotASlopeLift("component count does not match the slope parity");
    return s;
}

Path deck_apply(const FiberComplex& fc, const Path& path, int power)
{
    int k = mod(power, fc.N);
    Path out = path;
    for (int r = 0; r < k; ++r) {
        for (auto& s : out.pts) {
            if (s.on_edge())
                s.edge = fc.deck_edge[static_cast<std::size_t>(s.edge)];
            else
                s.face = fc.deck_face[static_cast<std::size_t>(s.face)];
        }
        for (auto& f : out.faces)
            f = fc.deck_face[static_cast<std::size_t>(f)];
    }
    return out;
}

Multicurve deck_apply(const FiberComplex& fc, const Multicurve& m, int power)
{
    Multicurve out = map_components(m, [&](const Path& p) { return deck_apply(fc, p, power); });
    out.slope = m.slope;
    return out;
}

std::vector<int> deck_permutation(const FiberComplex& fc, const Multicurve& m, int power)
{
    std::unordered_map<std::string, int> where;
    auto k = keys_of(m);
    for (std::size_t i = 0; i < k.size(); ++i)
        where[k[i]] = static_cast<int>(i);
    std::vector<int> perm;
    for (const auto& c : m.components) {
        auto it = where.find(path_key(deck_apply(fc, c, power), false));
        if (it == where.end())
            throw std::runtime_error("multicurve is not deck invariant");
        perm.push_back(it->second);
    }
    return perm;
}

IntersectionCount count_intersections(const FiberComplex& fc, const Path& a, const Path& b, bool same_path)
{
    if (same_path)
        return count_engine(fc, {&a}, {&a}, true);
    return count_engine(fc, {&a}, {&b}, false);
}

IntersectionCount count_multicurves(const FiberComplex& fc, const Multicurve& a, const Multicurve& b)
{
    std::vector<const Path*> A, B;
    for (const auto& c : a.components)
        A.push_back(&c);
    for (const auto& c : b.components)
        B.push_back(&c);
    return count_engine(fc, A, B, false);
}

long long intersection_count(const FiberComplex& fc, const Multicurve& a, const Multicurve& b)
{
    return count_multicurves(fc, a, b).crossings;
}

std::vector<long long> normal_coordinates(const FiberComplex& fc, const Path& path)
{
    std::vector<long long> n(fc.edges.size(), 0);
    for (const auto& s : path.pts)
        if (s.on_edge())
            ++n[static_cast<std::size_t>(s.edge)];
    return n;
}

std::vector<long long> normal_coordinates(const FiberComplex& fc, const Multicurve& m)
{
    std::vector<long long> n(fc.edges.size(), 0);
    for (const auto& c : m.components) {
        auto v = normal_coordinates(fc, c);
        for (std::size_t i = 0; i < n.size(); ++i)
            n[i] += v[i];
    }
    return n;
}

std::string path_key(const Path& path, bool oriented)
{
    std::size_t n = path.pts.size();
    if (n == 0)
        return "";
    std::vector<std::string> tok(n);
    for (std::size_t i = 0; i < n; ++i)
        tok[i] = token(path.pts[i]);
    auto build = [&](bool forward, std::size_t start) {
        std::string s;
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t i = forward ? (start + r) % n : (start + n - r) % n;
            std::size_t fi = forward ? i : (i + n - 1) % n;
            s += tok[i];
            if (path.closed || (forward ? r + 1 < n : i > 0))
                s += "|" + std::to_string(path.faces[fi]);
            s += ";";
        }
        return s;
    };
    if (!path.closed) {
        std::string f = build(true, 0);
        if (oriented)
            return "o:" + f;
        return "o:" + std::min(f, build(false, n - 1));
    }
    std::size_t start = static_cast<std::size_t>(std::min_element(tok.begin(), tok.end()) - tok.begin());
    std::string f = build(true, start);
    if (oriented)
        return "c:" + f;
    return "c:" + std::min(f, build(false, start));
}

bool same_component_set(const Multicurve& a, const Multicurve& b)
{
    auto ka = keys_of(a), kb = keys_of(b);
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

void validate_multicurve(const FiberComplex& fc, const Multicurve& m)
{
    for (const auto& c : m.components) {
        if (c.segments() == 0 || c.faces.size() != c.segments())
            throw std::logic_error("path without segments");
        for (std::size_t i = 0; i < c.segments(); ++i) {
            int f = c.faces[i];
            const Station& a = c.pts[i];
            const Station& b = c.pts[(i + 1) % c.pts.size()];
            Vec2 pa = fc.local(f, a), pb = fc.local(f, b);
            if (pa == pb)
                throw std::logic_error("degenerate segment");
            if (a.on_edge() && b.on_edge() && a.edge == b.edge)
                throw std::logic_error("segment returns to its own edge");
            if (a.on_edge() && b.on_edge()) {
                int sa = fc.side_of(f, a.edge), sb = fc.side_of(f, b.edge);
                if (sa == sb)
                    throw std::logic_error("segment runs along a side");
            }
        }
        auto self = count_intersections(fc, c, c, true);
        if (self.crossings || self.touchings || self.coincident)
            throw std::logic_error("component is not embedded");
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            auto r = count_intersections(fc, m.components[i], m.components[j]);
            if (r.crossings || r.touchings || r.coincident)
                throw std::logic_error("components are not disjoint");
        }
}

} // namespace gsq

#include "gsq/trisection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

namespace gsq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Q perimeter(const Vec2& v)
{
    if (v.y == Q(0) && v.x < Q(1))
        return v.x;
    if (v.x == Q(1) && v.y < Q(1))
        return Q(1) + v.y;
    if (v.y == Q(1) && v.x > Q(0))
        return Q(3) - v.x;
    return Q(4) - v.y;
}

Vec2 perimeter_point(Q k)
{
    while (k >= Q(4))
        k -= Q(4);
    if (k < Q(1))
        return {k, Q(0)};
    if (k < Q(2))
        return {Q(1), k - Q(1)};
    if (k < Q(3))
        return {Q(3) - k, Q(1)};
    return {Q(0), Q(4) - k};
}

Q dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// +1 when walking ccw around the face along this side increases the edge parameter
int ccw_t_dir(const FiberComplex& fc, int face, int side)
{
    bool inc = side == Bottom || side == Right;
    bool flip = fc.faces[static_cast<std::size_t>(face)].flip[static_cast<std::size_t>(side)];
    return inc == !flip ? 1 : -1;
}

struct DSU {
    std::vector<int> p;
    explicit DSU(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x)
    {
        while (p[static_cast<std::size_t>(x)] != x)
            x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

struct CChord {
    int comp;
    std::size_t seg;
    int pa = -1, pb = -1;
    Vec2 a, b;
};

struct FaceData {
    std::vector<Q> keys;
    std::vector<int> chord_at;
    std::vector<int> partner;
    std::vector<CChord> chords;
    std::vector<int> region;
    int regions = 1;
    int base = 0;
    int narcs() const { return keys.empty() ? 1 : static_cast<int>(keys.size()); }
    int arc_of(const Q& key) const
    {
        if (keys.empty())
            return 0;
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it != keys.end() && *it == key)
            throw std::logic_error("boundary query hits a curve");
        if (it == keys.begin())
            return static_cast<int>(keys.size()) - 1;
        return static_cast<int>(it - keys.begin()) - 1;
    }
    Q arc_start(int i) const { return keys.empty() ? Q(0) : keys[static_cast<std::size_t>(i)]; }
    Q arc_mid(int i) const
    {
        if (keys.empty())
            return Q(1, 2);
        std::size_t n = keys.size(), j = static_cast<std::size_t>(i);
        Q hi = j + 1 < n ? keys[j + 1] : keys[0] + Q(4);
        Q m = Q(1, 2) * (keys[j] + hi);
        return m >= Q(4) ? m - Q(4) : m;
    }
};

struct Interval {
    int edge;
    Q lo, hi;
    std::array<int, 2> face{}, side{}, region{};
    int lo_station = -1, hi_station = -1; // indices into the station table
};

struct LStation {
    int comp;
    std::size_t idx;
    int edge;
    Q t;
    int minus_dir; // +1: the minus side of the curve lies towards larger t
};

struct Region {
    int face = -1;
    int local = -1;
    std::vector<int> adj; // interval ids
    int parent = -1;
    int parent_interval = -1;
    std::vector<int> child_intervals;
    std::vector<int> cycle; // arcs of the face in ccw order around the region
};

using Ordinal = std::pair<int, Q>;

struct Router {
    const FiberComplex& fc;
    const Multicurve& L;
    std::vector<FaceData> fd;
    std::vector<Region> regions;
    std::vector<Interval> intervals;
    std::vector<LStation> stations;
    std::map<std::pair<int, std::size_t>, int> station_of; // (comp, idx) -> station
    std::vector<std::vector<int>> edge_stations;           // sorted by t

    Router(const FiberComplex& f, const Multicurve& l) : fc(f), L(l) {}

    int region_at(int face, const Vec2& boundary_point) const
    {
        const FaceData& d = fd[static_cast<std::size_t>(face)];
        return d.base + d.region[static_cast<std::size_t>(d.arc_of(perimeter(boundary_point)))];
    }

    void build()
    {
        std::size_t F = fc.faces.size();
        fd.assign(F, {});
        for (std::size_t ci = 0; ci < L.size(); ++ci) {
            const Path& p = L.components[ci];
            if (!p.closed)
                throw std::invalid_argument("sublink components must be closed");
            for (std::size_t k = 0; k < p.segments(); ++k) {
                const Station& a = p.pts[k];
                const Station& b = p.pts[(k + 1) % p.pts.size()];
                if (!a.on_edge() || !b.on_edge())
                    throw std::invalid_argument("sublink must have edge stations only");
                int f = p.faces[k];
                fd[static_cast<std::size_t>(f)].chords.push_back(
                    {static_cast<int>(ci), k, -1, -1, fc.local(f, a), fc.local(f, b)});
                int minus_dir = ccw_t_dir(fc, f, fc.side_of(f, a.edge));
                station_of[{static_cast<int>(ci), k}] = static_cast<int>(stations.size());
                stations.push_back({static_cast<int>(ci), k, a.edge, a.t, minus_dir});
            }
        }
        int total = 0;
        for (std::size_t f = 0; f < F; ++f) {
            FaceData& d = fd[f];
            for (const auto& c : d.chords) {
                d.keys.push_back(perimeter(c.a));
                d.keys.push_back(perimeter(c.b));
            }
            std::sort(d.keys.begin(), d.keys.end());
            if (std::adjacent_find(d.keys.begin(), d.keys.end()) != d.keys.end())
                throw std::logic_error("sublink components share a boundary point");
            std::size_t n = d.keys.size();
            d.partner.assign(n, -1);
            d.chord_at.assign(n, -1);
            for (std::size_t c = 0; c < d.chords.size(); ++c) {
                auto& ch = d.chords[c];
                auto pos = [&](const Vec2& v) {
                    return static_cast<int>(std::lower_bound(d.keys.begin(), d.keys.end(), perimeter(v)) -
                                            d.keys.begin());
                };
                ch.pa = pos(ch.a);
                ch.pb = pos(ch.b);
                d.partner[static_cast<std::size_t>(ch.pa)] = ch.pb;
                d.partner[static_cast<std::size_t>(ch.pb)] = ch.pa;
                d.chord_at[static_cast<std::size_t>(ch.pa)] = static_cast<int>(c);
                d.chord_at[static_cast<std::size_t>(ch.pb)] = static_cast<int>(c);
            }
            DSU dsu(static_cast<std::size_t>(d.narcs()));
            for (std::size_t i = 0; i < n; ++i)
                dsu.unite(static_cast<int>(i), d.partner[(i + 1) % n]);
            std::map<int, int> ids;
            d.region.assign(static_cast<std::size_t>(d.narcs()), -1);
            for (int i = 0; i < d.narcs(); ++i)
                d.region[static_cast<std::size_t>(i)] =
                    ids.emplace(dsu.find(i), static_cast<int>(ids.size())).first->second;
            d.regions = static_cast<int>(ids.size());
            if (d.regions != static_cast<int>(d.chords.size()) + 1)
                throw std::logic_error("sublink chords in a face are not disjoint");
            d.base = total;
            for (int r = 0; r < d.regions; ++r) {
                Region R;
                R.face = static_cast<int>(f);
                R.local = r;
                regions.push_back(R);
            }
            total += d.regions;
            // ccw boundary cycle of each region
            std::vector<char> seen(static_cast<std::size_t>(d.narcs()), 0);
            for (int i = 0; i < d.narcs(); ++i) {
                if (seen[static_cast<std::size_t>(i)])
                    continue;
                Region& R = regions[static_cast<std::size_t>(d.base + d.region[static_cast<std::size_t>(i)])];
                int cur = i;
                while (!seen[static_cast<std::size_t>(cur)]) {
                    seen[static_cast<std::size_t>(cur)] = 1;
                    R.cycle.push_back(cur);
                    if (n == 0)
                        break;
                    cur = d.partner[(static_cast<std::size_t>(cur) + 1) % n];
                }
            }
        }
        edge_stations.assign(fc.edges.size(), {});
        for (std::size_t s = 0; s < stations.size(); ++s)
            edge_stations[static_cast<std::size_t>(stations[s].edge)].push_back(static_cast<int>(s));
        for (std::size_t e = 0; e < fc.edges.size(); ++e) {
            auto& v = edge_stations[e];
            std::sort(v.begin(), v.end(), [&](int x, int y) {
                return stations[static_cast<std::size_t>(x)].t < stations[static_cast<std::size_t>(y)].t;
            });
            std::size_t m = v.size();
            for (std::size_t j = 0; j <= m; ++j) {
                Interval I;
                I.edge = static_cast<int>(e);
                I.lo = j == 0 ? Q(0) : stations[static_cast<std::size_t>(v[j - 1])].t;
                I.hi = j == m ? Q(1) : stations[static_cast<std::size_t>(v[j])].t;
                I.lo_station = j == 0 ? -1 : v[j - 1];
                I.hi_station = j == m ? -1 : v[j];
                Q mid = Q(1, 2) * (I.lo + I.hi);
                for (int s = 0; s < 2; ++s) {
                    const FaceSide& fs = fc.edges[e].sides[static_cast<std::size_t>(s)];
                    I.face[static_cast<std::size_t>(s)] = fs.face;
                    I.side[static_cast<std::size_t>(s)] = fs.side;
                    I.region[static_cast<std::size_t>(s)] =
                        region_at(fs.face, fc.local(fs.face, Station::on(static_cast<int>(e), mid)));
                }
                int id = static_cast<int>(intervals.size());
                intervals.push_back(I);
                regions[static_cast<std::size_t>(I.region[0])].adj.push_back(id);
                regions[static_cast<std::size_t>(I.region[1])].adj.push_back(id);
            }
        }
    }

    int side_index(const Interval& I, int region) const
    {
        if (I.region[0] == region)
            return 0;
        if (I.region[1] == region)
            return 1;
        throw std::logic_error("interval does not bound the region");
    }

    // position of a boundary point of the region's face in the ccw order around the region
    Ordinal boundary_ordinal(int region, const Vec2& p) const
    {
        const Region& R = regions[static_cast<std::size_t>(region)];
        const FaceData& d = fd[static_cast<std::size_t>(R.face)];
        Q key = perimeter(p);
        int arc = d.arc_of(key);
        auto it = std::find(R.cycle.begin(), R.cycle.end(), arc);
        if (it == R.cycle.end())
            throw std::logic_error("point is not on the region boundary");
        Q rel = key - d.arc_start(arc);
        if (rel < Q(0))
            rel += Q(4);
        return {2 * static_cast<int>(it - R.cycle.begin()), rel};
    }

    // position of a point on chord c at fraction s from its a-end
    Ordinal chord_ordinal(int region, int chord, const Q& s) const
    {
        const Region& R = regions[static_cast<std::size_t>(region)];
        const FaceData& d = fd[static_cast<std::size_t>(R.face)];
        std::size_t n = d.keys.size();
        for (std::size_t m = 0; m < R.cycle.size(); ++m) {
            int e = static_cast<int>((static_cast<std::size_t>(R.cycle[m]) + 1) % n);
            if (d.chord_at[static_cast<std::size_t>(e)] != chord)
                continue;
            bool from_a = e == d.chords[static_cast<std::size_t>(chord)].pa;
            return {2 * static_cast<int>(m) + 1, from_a ? s : Q(1) - s};
        }
        throw std::logic_error("chord is not on the region boundary");
    }

    Vec2 interval_point(const Interval& I, int side, const Q& t) const
    {
        return fc.local(I.face[static_cast<std::size_t>(side)], Station::on(I.edge, t));
    }
};

enum StrandKind : int { ADown = 0, AUp = 1, B1 = 2, B2 = 3 };

} // namespace

Path close_at_puncture(const Path& arc)
{
    if (arc.closed || arc.pts.size() < 3 || !(arc.pts.front() == arc.pts.back()))
        throw std::invalid_argument("arc does not start and end at the same point");
    Path out;
    out.pts.assign(arc.pts.begin(), arc.pts.end() - 1);
    out.faces = arc.faces;
    out.closed = true;
    return out;
}

std::vector<BigInt> loop_class(const FiberComplex& fc, const Path& path)
{
    return homology_class(fc, path.closed ? path : close_at_puncture(path));
}

ArcSystem find_dualizing_arcs(const FiberComplex& fc, const Multicurve& sublink, const Slope& slope,
                              const std::vector<int>& subset)
{
    Router rt(fc, sublink);
    rt.build();
    const std::size_t g = sublink.size();

    // puncture candidates in front_0, farthest from the sublink first
    const int f0 = fc.front(0);
    const FaceData& d0 = rt.fd[static_cast<std::size_t>(f0)];
    const Q grid[] = {Q(37, 71), Q(29, 61), Q(43, 97), Q(59, 113), Q(31, 89), Q(67, 131), Q(23, 53), Q(71, 103)};
    struct Candidate {
        Q clearance;
        Puncture P;
        int root;
    };
    std::vector<Candidate> candidates;
    for (const Q& cx : grid)
        for (const Q& cy : grid) {
            Vec2 X{cx, cy};
            Q clearance(2);
            for (const auto& c : d0.chords) {
                Q cr = cross(c.b - c.a, X - c.a);
                Q dist2 = cr * cr / dot(c.b - c.a, c.b - c.a);
                if (dist2 < clearance)
                    clearance = dist2;
            }
            if (clearance.sign() == 0)
                continue;
            int root = -1;
            for (int arc = 0; arc < d0.narcs() && root < 0; ++arc) {
                Vec2 T = perimeter_point(d0.arc_mid(arc));
                bool clear = true;
                for (const auto& c : d0.chords) {
                    int o1 = orient(c.a, c.b, X), o2 = orient(c.a, c.b, T);
                    int o3 = orient(X, T, c.a), o4 = orient(X, T, c.b);
                    if (o1 * o2 <= 0 && o3 * o4 <= 0)
                        clear = false;
                }
                if (clear)
                    root = d0.base + d0.region[static_cast<std::size_t>(arc)];
            }
            if (root >= 0)
                candidates.push_back({clearance, Puncture{f0, X}, root});
        }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return y.clearance < x.clearance; });

    for (const Candidate& cand : candidates) {
        const Puncture* P = &cand.P;
        const int root = cand.root;
        for (auto& R : rt.regions) {
            R.parent = -1;
            R.parent_interval = -1;
            R.child_intervals.clear();
        }

        // spanning tree of the dual graph
        std::vector<int> order{root};
        std::vector<char> reached(rt.regions.size(), 0);
        reached[static_cast<std::size_t>(root)] = 1;
        for (std::size_t h = 0; h < order.size(); ++h) {
            int r = order[h];
            for (int id : rt.regions[static_cast<std::size_t>(r)].adj) {
                const Interval& I = rt.intervals[static_cast<std::size_t>(id)];
                int other = I.region[0] == r ? I.region[1] : I.region[0];
                if (reached[static_cast<std::size_t>(other)])
                    continue;
                reached[static_cast<std::size_t>(other)] = 1;
                rt.regions[static_cast<std::size_t>(other)].parent = r;
                rt.regions[static_cast<std::size_t>(other)].parent_interval = id;
                rt.regions[static_cast<std::size_t>(r)].child_intervals.push_back(id);
                order.push_back(other);
            }
        }
        if (order.size() != rt.regions.size())
            throw std::logic_error("cut fiber is not connected");

        // first chord of each component and the regions on either side
        struct Target {
            int face, chord, plus, minus;
            Vec2 A, B;
        };
        std::vector<Target> tg;
        for (std::size_t i = 0; i < g; ++i) {
            int f = sublink.components[i].faces[0];
            const FaceData& d = rt.fd[static_cast<std::size_t>(f)];
            int ci = -1;
            for (std::size_t c = 0; c < d.chords.size(); ++c)
                if (d.chords[c].comp == static_cast<int>(i) && d.chords[c].seg == 0)
                    ci = static_cast<int>(c);
            const CChord& ch = d.chords[static_cast<std::size_t>(ci)];
            tg.push_back({f, ci, d.base + d.region[static_cast<std::size_t>(ch.pb)],
                          d.base + d.region[static_cast<std::size_t>(ch.pa)], ch.a, ch.b});
        }
        const Q lambda(1, 16);
        // distinct positions per component so deck images of the crossing points miss each other
        auto frac = [&](std::size_t i) { return Q(1, 2) + Q(static_cast<long long>(i), 32 * static_cast<long long>(g + 1)); };
        auto strand_target = [&](int s) {
            const Target& t = tg[static_cast<std::size_t>(s / 4)];
            return s % 4 == ADown ? t.plus : t.minus;
        };

        // order strands along every tree interval, leaves first
        std::vector<std::vector<int>> list(rt.regions.size());
        for (std::size_t h = order.size(); h-- > 1;) {
            int C = order[h];
            const Region& R = rt.regions[static_cast<std::size_t>(C)];
            const Interval& PI = rt.intervals[static_cast<std::size_t>(R.parent_interval)];
            int ps = rt.side_index(PI, C);
            Ordinal pord = rt.boundary_ordinal(C, rt.interval_point(PI, ps, Q(1, 2) * (PI.lo + PI.hi)));
            std::vector<std::pair<std::pair<int, Ordinal>, std::vector<int>>> items;
            auto rotated = [&](const Ordinal& o) { return std::make_pair(o > pord ? 0 : 1, o); };
            for (int id : R.child_intervals) {
                const Interval& I = rt.intervals[static_cast<std::size_t>(id)];
                int child = I.region[0] == C ? I.region[1] : I.region[0];
                std::vector<int> s(list[static_cast<std::size_t>(child)].rbegin(),
                                   list[static_cast<std::size_t>(child)].rend());
                if (s.empty())
                    continue;
                int cs = rt.side_index(I, C);
                items.push_back({rotated(rt.boundary_ordinal(C, rt.interval_point(I, cs, Q(1, 2) * (I.lo + I.hi)))), s});
            }
            for (std::size_t i = 0; i < g; ++i) {
                const Target& t = tg[i];
                int base = 4 * static_cast<int>(i);
                if (t.plus == C)
                    items.push_back({rotated(rt.chord_ordinal(C, t.chord, frac(i))), {base + ADown}});
                if (t.minus == C) {
                    items.push_back({rotated(rt.chord_ordinal(C, t.chord, frac(i) + lambda)), {base + B1}});
                    items.push_back({rotated(rt.chord_ordinal(C, t.chord, frac(i))), {base + AUp}});
                    items.push_back({rotated(rt.chord_ordinal(C, t.chord, frac(i) - lambda)), {base + B2}});
                }
            }
            std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            std::vector<int> D;
            for (const auto& it : items)
                D.insert(D.end(), it.second.begin(), it.second.end());
            list[static_cast<std::size_t>(C)].assign(D.rbegin(), D.rend());
        }

        // slots: hugging strands next to the curve stations, tree strands in between
        std::vector<long long> primes;
        for (long long c = 101; primes.size() < fc.edges.size(); ++c) {
            bool prime = true;
            for (long long d = 2; d * d <= c && prime; ++d)
                prime = c % d != 0;
            if (prime)
                primes.push_back(c);
        }
        std::map<std::pair<int, int>, Q> strand_t;
        std::vector<Q> hug_t(rt.stations.size());
        std::vector<char> hug_set(rt.stations.size(), 0);
        std::vector<std::vector<Vec2>> face_points(fc.faces.size());
        for (std::size_t id = 0; id < rt.intervals.size(); ++id) {
            const Interval& I = rt.intervals[id];
            std::vector<int> bulk;
            for (int r : I.region) {
                const Region& R = rt.regions[static_cast<std::size_t>(r)];
                if (R.parent_interval != static_cast<int>(id))
                    continue;
                bulk = list[static_cast<std::size_t>(r)];
                int s = rt.side_index(I, r);
                if (ccw_t_dir(fc, I.face[static_cast<std::size_t>(s)], I.side[static_cast<std::size_t>(s)]) < 0)
                    std::reverse(bulk.begin(), bulk.end());
            }
            bool hlo = I.lo_station >= 0 && rt.stations[static_cast<std::size_t>(I.lo_station)].minus_dir > 0;
            bool hhi = I.hi_station >= 0 && rt.stations[static_cast<std::size_t>(I.hi_station)].minus_dir < 0;
            std::size_t slots = bulk.size() + (hlo ? 1 : 0) + (hhi ? 1 : 0);
            // offset 1/p with a prime per edge: deck images of slots cannot land on slots
            Q jitter(1, primes[static_cast<std::size_t>(I.edge)]);
            auto at = [&](std::size_t k) {
                return I.lo + (I.hi - I.lo) * (Q(static_cast<long long>(k + 1)) + jitter) /
                                  Q(static_cast<long long>(slots + 1));
            };
            std::size_t k = 0;
            std::vector<Q> used;
            if (hlo) {
                hug_t[static_cast<std::size_t>(I.lo_station)] = at(k);
                hug_set[static_cast<std::size_t>(I.lo_station)] = 1;
                used.push_back(at(k++));
            }
            for (int s : bulk) {
                strand_t[{static_cast<int>(id), s}] = at(k);
                used.push_back(at(k++));
            }
            if (hhi) {
                hug_t[static_cast<std::size_t>(I.hi_station)] = at(k);
                hug_set[static_cast<std::size_t>(I.hi_station)] = 1;
                used.push_back(at(k++));
            }
            for (int s = 0; s < 2; ++s)
                for (const Q& t : used)
                    face_points[static_cast<std::size_t>(I.face[static_cast<std::size_t>(s)])].push_back(
                        rt.interval_point(I, s, t));
        }
        for (std::size_t s = 0; s < rt.stations.size(); ++s)
            if (!hug_set[s])
                throw std::logic_error("station without a hugging slot");
        face_points[static_cast<std::size_t>(f0)].push_back(P->p);

        // crossing points next to the first chord of each component
        struct Local {
            Vec2 zp, zm, y, yp;
        };
        std::vector<Local> loc;
        for (std::size_t i = 0; i < g; ++i) {
            const Target& t = tg[i];
            Vec2 d = t.B - t.A;
            Vec2 nr{d.y, -d.x};
            Q dd = dot(d, d);
            std::vector<Vec2> pts = face_points[static_cast<std::size_t>(t.face)];
            for (const auto& c : rt.fd[static_cast<std::size_t>(t.face)].chords) {
                pts.push_back(c.a);
                pts.push_back(c.b);
            }
            for (Vec2 corner : {Vec2{Q(0), Q(0)}, Vec2{Q(1), Q(0)}, Vec2{Q(1), Q(1)}, Vec2{Q(0), Q(1)}})
                pts.push_back(corner);
            Q best(-1);
            for (const Vec2& p : pts) {
                Q c = cross(d, p - t.A);
                if (c.sign() == 0)
                    continue;
                if (c.sign() < 0)
                    c = -c;
                if (best.sign() < 0 || c < best)
                    best = c;
            }
            Q mu(1, 4);
            while (Q(8) * mu * dd >= best)
                mu = mu * Q(1, 2);
            Vec2 X = t.A + frac(i) * d;
            Vec2 off = mu * nr;
            loc.push_back({X - off, X + off, t.A + (frac(i) + lambda) * d + off, t.A + (frac(i) - lambda) * d + off});
        }

        auto chain_to = [&](int T) {
            std::vector<int> chain; // regions root .. T
            for (int r = T; r >= 0; r = rt.regions[static_cast<std::size_t>(r)].parent)
                chain.push_back(r);
            std::reverse(chain.begin(), chain.end());
            return chain;
        };
        auto face_of = [&](int r) { return rt.regions[static_cast<std::size_t>(r)].face; };
        auto port = [&](int r, int s) {
            int id = rt.regions[static_cast<std::size_t>(r)].parent_interval;
            return Station::on(rt.intervals[static_cast<std::size_t>(id)].edge, strand_t.at({id, s}));
        };
        Station Pst = Station::inside(P->face, P->p);
        auto down = [&](Path& out, int s) {
            auto chain = chain_to(strand_target(s));
            out.pts.push_back(Pst);
            out.faces.push_back(face_of(chain[0]));
            for (std::size_t m = 1; m < chain.size(); ++m) {
                out.pts.push_back(port(chain[m], s));
                out.faces.push_back(face_of(chain[m]));
            }
        };
        auto up = [&](Path& out, int s) {
            auto chain = chain_to(strand_target(s));
            for (std::size_t m = chain.size(); m-- > 1;) {
                out.pts.push_back(port(chain[m], s));
                out.faces.push_back(face_of(chain[m - 1]));
            }
            out.pts.push_back(Pst);
        };

        ArcSystem out;
        out.params = fc.params;
        out.slope = slope;
        out.subset = subset;
        out.puncture = *P;
        out.sublink = sublink;
        for (std::size_t i = 0; i < g; ++i) {
            const Target& t = tg[i];
            const Local& l = loc[i];
            int base = 4 * static_cast<int>(i);
            Path a;
            a.closed = false;
            down(a, base + ADown);
            a.pts.push_back(Station::inside(t.face, l.zp));
            a.faces.push_back(t.face);
            a.pts.push_back(Station::inside(t.face, l.zm));
            a.faces.push_back(t.face);
            up(a, base + AUp);
            out.a.push_back(a);

            const Path& Li = sublink.components[i];
            std::size_t n = Li.pts.size();
            auto hug = [&](std::size_t k) {
                int s = rt.station_of.at({static_cast<int>(i), k});
                return Station::on(rt.stations[static_cast<std::size_t>(s)].edge, hug_t[static_cast<std::size_t>(s)]);
            };
            Path b;
            b.closed = false;
            down(b, base + B1);
            b.pts.push_back(Station::inside(t.face, l.y));
            b.faces.push_back(Li.faces[0]);
            for (std::size_t k = 1; k <= n; ++k) {
                b.pts.push_back(hug(k % n));
                b.faces.push_back(Li.faces[k % n]);
            }
            b.pts.push_back(Station::inside(t.face, l.yp));
            b.faces.push_back(t.face);
            up(b, base + B2);
            out.b.push_back(b);
        }
        // the hugging strips may still enclose the puncture; try the next position then
        if (check_arc_system(fc, out).ok())
            return out;
    }
    throw std::runtime_error("no admissible puncture position");
}

ArcSystemCheck check_arc_system(const FiberComplex& fc, const ArcSystem& arcs)
{
    ArcSystemCheck r;
    std::vector<const Path*> all;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < arcs.a.size(); ++i) {
        all.push_back(&arcs.a[i]);
        names.push_back("a" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < arcs.b.size(); ++i) {
        all.push_back(&arcs.b[i]);
        names.push_back("b" + std::to_string(i + 1));
    }
    std::size_t g = arcs.sublink.size();
    r.embedded = arcs.a.size() == g && arcs.b.size() == g;
    for (std::size_t i = 0; i < all.size(); ++i) {
        auto c = count_intersections(fc, *all[i], *all[i], true);
        if (c.crossings != 0 || c.coincident || c.touchings != 1) {
            r.embedded = false;
            r.failures.push_back(names[i] + " is not embedded");
        }
    }
    r.disjoint = true;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            auto c = count_intersections(fc, *all[i], *all[j]);
            if (c.crossings != 0 || c.coincident || c.touchings != 4) {
                r.disjoint = false;
                r.failures.push_back(names[i] + " meets " + names[j]);
            }
        }
    r.dual = true;
    r.b_avoid = true;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            const Path& Lj = arcs.sublink.components[j];
            auto ca = count_intersections(fc, arcs.a[i], Lj);
            if (ca.crossings != (i == j ? 1 : 0) || ca.touchings != 0 || ca.coincident) {
                r.dual = false;
                r.failures.push_back("a" + std::to_string(i + 1) + " meets L" + std::to_string(j + 1) + " " +
                                     std::to_string(ca.crossings) + " times");
            }
            auto cb = count_intersections(fc, arcs.b[i], Lj);
            if (cb.crossings != 0 || cb.touchings != 0 || cb.coincident) {
                r.b_avoid = false;
                r.failures.push_back("b" + std::to_string(i + 1) + " meets L" + std::to_string(j + 1));
            }
        }
    IntMatrix classes;
    for (const Path* p : all)
        classes.push_back(loop_class(fc, *p));
    r.distinct = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        bool zero = std::all_of(classes[i].begin(), classes[i].end(), [](const BigInt& x) { return x == 0; });
        if (zero)
            r.distinct = false;
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (classes[i] == classes[j])
                r.distinct = false;
    }
    if (!r.distinct)
        r.failures.push_back("closed-up arc classes are not distinct");
    r.basis = classes.size() == fc.basis.size();
    if (r.basis) {
        BigInt d = determinant(classes);
        r.basis = d == 1 || d == -1;
    }
    if (!r.basis)
        r.failures.push_back("closed-up arc classes do not form a basis");
    return r;
}

Path apply_monodromy(const FiberComplex& fc, const Puncture& P, const Path& path)
{
    int f1 = fc.deck_face[static_cast<std::size_t>(P.face)];
    const long long period = 2LL * fc.N;
    Vec2 Pstar{P.p.x, Q(P.face) + P.p.y};
    Vec2 Pimg{P.p.x, Q(f1) + P.p.y};
    if (f1 < P.face || f1 - P.face > 4)
        throw std::logic_error("deck image of the puncture is not above it in the annulus chart");
    const Q xlo(1, 10), xhi(9, 10);
    if (!(xlo < P.p.x && P.p.x < xhi))
        throw std::invalid_argument("puncture too close to a fold");
    const Q ylo = Pstar.y - Q(1), yhi = Pimg.y + Q(1);
    const Q xm = Q(1, 2) * (xlo + xhi), ym = Q(1, 2) * (ylo + yhi);
    const std::array<Vec2, 8> ring{Vec2{xlo, ylo}, Vec2{xm, ylo}, Vec2{xhi, ylo}, Vec2{xhi, ym},
                                   Vec2{xhi, yhi}, Vec2{xm, yhi}, Vec2{xlo, yhi}, Vec2{xlo, ym}};
    auto inside = [&](const Vec2& v) { return xlo < v.x && v.x < xhi && ylo < v.y && v.y < yhi; };
    auto image = [&](const Vec2& X, const Vec2& mid) {
        if (!inside(mid))
            return X;
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const Vec2& b0 = ring[k];
            const Vec2& b1 = ring[(k + 1) % ring.size()];
            Vec2 u = b0 - Pimg, w = b1 - Pimg, m = mid - Pimg;
            if (cross_sign(u, m) < 0 || cross_sign(m, w) < 0)
                continue;
            Q den = cross(u, w);
            Vec2 r = X - Pimg;
            Q s = cross(r, w) / den, t = cross(u, r) / den;
            return Pstar + s * (b0 - Pstar) + t * (b1 - Pstar);
        }
        throw std::logic_error("point push: no sector found");
    };
    BandSegmentMap fn = [&](const Vec2& a0, const Vec2& b0) {
        Q lowY = std::min(a0.y, b0.y);
        Q shift(0);
        if (lowY >= yhi && lowY - Q(period) < yhi)
            shift = Q(-period);
        Vec2 a{a0.x, a0.y + shift}, b{b0.x, b0.y + shift};
        std::vector<Q> cuts{Q(0), Q(1)};
        Vec2 d = b - a;
        auto add_line = [&](const Vec2& p0, const Vec2& p1) {
            Vec2 e = p1 - p0;
            Q den = cross(d, e);
            if (den.sign() == 0)
                return;
            Q s = cross(p0 - a, e) / den;
            Q t = cross(p0 - a, d) / den;
            if (Q(0) < s && s < Q(1) && Q(0) <= t && t <= Q(1))
                cuts.push_back(s);
        };
        for (std::size_t k = 0; k < ring.size(); ++k) {
            add_line(ring[k], ring[(k + 1) % ring.size()]);
            add_line(Pimg, ring[k]);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<Vec2> out;
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
            Vec2 p0 = a + cuts[j] * d, p1 = a + cuts[j + 1] * d;
            Vec2 mid = Q(1, 2) * (p0 + p1);
            if (j == 0)
                out.push_back(image(p0, mid));
            out.push_back(image(p1, mid));
        }
        return out;
    };
    return apply_band_map(fc, deck_apply(fc, path, 1), fn);
}

TrisectionDiagram build_trisection_diagram(const FiberComplex& fc, const ArcSystem& arcs)
{
    TrisectionDiagram d;
    d.params = arcs.params;
    d.slope = arcs.slope;
    d.subset = arcs.subset;
    d.fiber_genus = fc.genus();
    d.genus = 2 * fc.genus();
    d.puncture = arcs.puncture;
    std::vector<std::pair<std::string, const Path*>> xs;
    for (std::size_t i = 0; i < arcs.a.size(); ++i)
        xs.emplace_back("a" + std::to_string(i + 1), &arcs.a[i]);
    for (std::size_t i = 0; i < arcs.b.size(); ++i)
        xs.emplace_back("b" + std::to_string(i + 1), &arcs.b[i]);
    for (const auto& [name, x] : xs) {
        DiagramCurve beta{"D(" + name + ")", *x, true, *x, false};
        DiagramCurve alpha{"D'(" + name + ")", apply_monodromy(fc, arcs.puncture, *x), true, *x, true};
        d.systems[kAlpha].push_back(alpha);
        d.systems[kBeta].push_back(beta);
    }
    for (std::size_t j = 0; j < arcs.sublink.size(); ++j) {
        DiagramCurve c;
        c.name = "L" + std::to_string(j + 1);
        c.f0 = arcs.sublink.components[j];
        d.systems[kGamma].push_back(c);
    }
    for (std::size_t i = 0; i < arcs.b.size(); ++i)
        d.systems[kGamma].push_back(d.systems[kBeta][arcs.a.size() + i]);
    return d;
}

namespace {

bool same_path(const Path& x, const Path& y)
{
    return x.closed == y.closed && x.pts == y.pts && x.faces == y.faces;
}

struct Dir {
    Vec2 v;
    int eta = 0;
};

// signed angle from a to b in (-pi, pi]
double num_angle(const Vec2& a, const Vec2& b)
{
    double x = std::atan2(b.y.to_double(), b.x.to_double()) - std::atan2(a.y.to_double(), a.x.to_double());
    while (x > kTwoPi / 2)
        x -= kTwoPi;
    while (x <= -kTwoPi / 2)
        x += kTwoPi;
    return x;
}

// ccw angle from b to a in [0, 2pi]; pushoffs sit an infinitesimal step ccw
double ccw_gap(const Dir& a, const Dir& b)
{
    int c = cross_sign(b.v, a.v), d = dot_sign(b.v, a.v);
    if (c == 0 && d > 0) {
        if (a.eta > b.eta)
            return 0.0;
        if (a.eta < b.eta)
            return kTwoPi;
        throw std::runtime_error("collar strands share an endpoint");
    }
    if (c == 0)
        return kTwoPi / 2;
    double x = num_angle(b.v, a.v);
    if (c > 0)
        return x > 0 ? x : 0.0;
    return x < 0 ? x + kTwoPi : kTwoPi;
}

double turn(const Dir& u, const Dir& v)
{
    int c = cross_sign(u.v, v.v), d = dot_sign(u.v, v.v);
    if (c == 0) {
        if (d > 0)
            return 0.0;
        throw std::runtime_error("collar strand turns by a half rotation");
    }
    double x = num_angle(u.v, v.v);
    return c > 0 ? std::max(x, 0.0) : std::min(x, 0.0);
}

long long strand_crossings(const Dir& u1, const Dir& v1, const Dir& u2, const Dir& v2)
{
    double total = ccw_gap(u1, u2) + turn(u1, v1) - turn(u2, v2) - ccw_gap(v1, v2);
    return std::llabs(std::llround(total / kTwoPi));
}

std::pair<Vec2, Vec2> end_dirs(const FiberComplex& fc, const Puncture& P, const Path& arc)
{
    std::size_t n = arc.pts.size();
    if (arc.closed || n < 3 || !(arc.pts[0] == Station::inside(P.face, P.p)) || !(arc.pts[n - 1] == arc.pts[0]))
        throw std::invalid_argument("arc does not start and end at the puncture");
    if (arc.faces.front() != P.face || arc.faces.back() != P.face)
        throw std::invalid_argument("arc leaves the puncture through another face");
    return {fc.local(P.face, arc.pts[1]) - P.p, fc.local(P.face, arc.pts[n - 2]) - P.p};
}

} // namespace

CurveMeeting geometric_intersection(const FiberComplex& fc, const Puncture& P, const DiagramCurve& c1,
                                    const DiagramCurve& c2)
{
    CurveMeeting m;
    bool f1_same = c1.has_f1 && c2.has_f1 && same_path(c1.f1, c2.f1);
    if (same_path(c1.f0, c2.f0) && c1.has_f1 == c2.has_f1 && (!c1.has_f1 || (f1_same && c1.pushed == c2.pushed))) {
        m.identical = true;
        return m;
    }
    auto ic = count_intersections(fc, c1.f0, c2.f0);
    long long expect = (!c1.f0.closed && !c2.f0.closed) ? 4 : 0;
    if (ic.coincident || ic.touchings != expect) {
        m.transverse = false;
    }
    m.count += ic.crossings;
    if (c1.has_f1 && c2.has_f1) {
        if (f1_same) {
            if (c1.pushed == c2.pushed)
                m.transverse = false;
        } else {
            auto jc = count_intersections(fc, c1.f1, c2.f1);
            if (jc.coincident || jc.touchings != 4)
                m.transverse = false;
            m.count += jc.crossings;
        }
        auto [s1, e1] = end_dirs(fc, P, c1.f0);
        auto [s2, e2] = end_dirs(fc, P, c2.f0);
        auto [t1, g1] = end_dirs(fc, P, c1.f1);
        auto [t2, g2] = end_dirs(fc, P, c2.f1);
        // a pushoff to the left leaves ccw of the start and arrives cw of the end
        std::array<std::pair<Dir, Dir>, 2> A{std::make_pair(Dir{s1, 0}, Dir{t1, c1.pushed ? 1 : 0}),
                                             std::make_pair(Dir{e1, 0}, Dir{g1, c1.pushed ? -1 : 0})};
        std::array<std::pair<Dir, Dir>, 2> B{std::make_pair(Dir{s2, 0}, Dir{t2, c2.pushed ? 1 : 0}),
                                             std::make_pair(Dir{e2, 0}, Dir{g2, c2.pushed ? -1 : 0})};
        try {
            for (const auto& x : A)
                for (const auto& y : B)
                    m.count += strand_crossings(x.first, x.second, y.first, y.second);
        } catch (const std::runtime_error&) {
            m.transverse = false;
        }
    }
    return m;
}

std::vector<BigInt> diagram_class(const FiberComplex& fc, const DiagramCurve& c)
{
    std::vector<BigInt> u = loop_class(fc, c.f0);
    std::size_t n = u.size();
    u.resize(2 * n, 0);
    if (c.has_f1) {
        auto w = loop_class(fc, c.f1);
        for (std::size_t k = 0; k < n; ++k)
            u[n + k] = -w[k];
    }
    return u;
}

BigInt diagram_pairing(const FiberComplex& fc, const std::vector<BigInt>& u, const std::vector<BigInt>& w)
{
    std::size_t n = fc.basis.size();
    std::vector<BigInt> u0(u.begin(), u.begin() + static_cast<long>(n)), u1(u.begin() + static_cast<long>(n), u.end());
    std::vector<BigInt> w0(w.begin(), w.begin() + static_cast<long>(n)), w1(w.begin() + static_cast<long>(n), w.end());
    return algebraic_intersection(fc, u0, w0) - algebraic_intersection(fc, u1, w1);
}

TrisectionReport verify_trisection_diagram(const FiberComplex& fc, const TrisectionDiagram& d)
{
    TrisectionReport r;
    r.genus = d.genus;
    r.fiber_genus = d.fiber_genus;
    const std::size_t G2 = static_cast<std::size_t>(d.genus);
    r.sizes_ok = d.genus == 2 * fc.genus() && d.fiber_genus == fc.genus() && d.params == fc.params;
    for (const auto& sys : d.systems)
        r.sizes_ok = r.sizes_ok && sys.size() == G2;
    if (!r.sizes_ok) {
        r.failures.push_back("curve systems do not have genus-many curves");
        return r;
    }
    const char* sys_name[3] = {"alpha", "beta", "gamma"};
    std::array<IntMatrix, 3> cls;
    for (int s = 0; s < 3; ++s)
        for (const auto& c : d.systems[static_cast<std::size_t>(s)])
            cls[static_cast<std::size_t>(s)].push_back(diagram_class(fc, c));
    for (int s = 0; s < 3; ++s) {
        const auto& sys = d.systems[static_cast<std::size_t>(s)];
        bool ok = true;
        for (std::size_t i = 0; i < sys.size(); ++i)
            for (std::size_t j = i + 1; j < sys.size(); ++j) {
                auto m = geometric_intersection(fc, d.puncture, sys[i], sys[j]);
                if (m.identical || !m.transverse || m.count != 0) {
                    ok = false;
                    r.failures.push_back(std::string(sys_name[s]) + ": " + sys[i].name + " meets " + sys[j].name);
                }
            }
        r.rank_gf2[static_cast<std::size_t>(s)] = rank_gf2(cls[static_cast<std::size_t>(s)]);
        if (r.rank_gf2[static_cast<std::size_t>(s)] != G2) {
            ok = false;
            r.failures.push_back(std::string(sys_name[s]) + ": curves are dependent mod 2");
        }
        r.cut_system[static_cast<std::size_t>(s)] = ok;
    }
    auto matrices = [&](int s, int t, IntMatrix& alg, IntMatrix& geo, std::vector<std::vector<char>>* same) {
        const auto& A = d.systems[static_cast<std::size_t>(s)];
        const auto& B = d.systems[static_cast<std::size_t>(t)];
        alg = zeros(G2, G2);
        geo = zeros(G2, G2);
        if (same)
            same->assign(G2, std::vector<char>(G2, 0));
        bool parity = true;
        for (std::size_t i = 0; i < G2; ++i)
            for (std::size_t j = 0; j < G2; ++j) {
                alg[i][j] = diagram_pairing(fc, cls[static_cast<std::size_t>(s)][i], cls[static_cast<std::size_t>(t)][j]);
                auto m = geometric_intersection(fc, d.puncture, A[i], B[j]);
                if (!m.transverse) {
                    parity = false;
                    r.failures.push_back(A[i].name + " and " + B[j].name + " are not transverse");
                }
                if (m.identical) {
                    if (same)
                        (*same)[i][j] = 1;
                    continue;
                }
                geo[i][j] = m.count;
                if ((alg[i][j] - geo[i][j]) % 2 != 0) {
                    parity = false;
                    r.failures.push_back(A[i].name + " and " + B[j].name + ": algebraic and geometric counts differ mod 2");
                }
            }
        return parity;
    };
    std::vector<std::vector<char>> same;
    bool p1 = matrices(kAlpha, kBeta, r.alg_ab, r.geo_ab, nullptr);
    bool p2 = matrices(kBeta, kGamma, r.alg_bg, r.geo_bg, &same);
    bool p3 = matrices(kAlpha, kGamma, r.alg_ag, r.geo_ag, nullptr);
    r.parity_consistent = p1 && p2 && p3;

    // (beta, gamma): shared curves plus a permutation block of single crossings
    std::vector<char> row_shared(G2, 0), col_shared(G2, 0);
    bool standard = true;
    for (std::size_t i = 0; i < G2; ++i)
        for (std::size_t j = 0; j < G2; ++j)
            if (same[i][j]) {
                if (row_shared[i] || col_shared[j])
                    standard = false;
                row_shared[i] = col_shared[j] = 1;
                ++r.shared;
            }
    for (std::size_t i = 0; i < G2; ++i) {
        int ones = 0;
        for (std::size_t j = 0; j < G2; ++j) {
            if (same[i][j])
                continue;
            const BigInt& v = r.geo_bg[i][j];
            bool both_free = !row_shared[i] && !col_shared[j];
            if (v == 1 && both_free)
                ++ones;
            else if (v != 0)
                standard = false;
        }
        if (!row_shared[i] && ones != 1)
            standard = false;
    }
    for (std::size_t j = 0; j < G2; ++j) {
        if (col_shared[j])
            continue;
        int ones = 0;
        for (std::size_t i = 0; i < G2; ++i)
            if (!row_shared[i] && r.geo_bg[i][j] == 1)
                ++ones;
        if (ones != 1)
            standard = false;
    }
    r.standard_beta_gamma = standard && r.cut_system[kBeta] && r.cut_system[kGamma];
    if (!r.standard_beta_gamma)
        r.failures.push_back("(beta, gamma) is not a standard pair");
    r.det_ab = determinant(r.alg_ab);
    r.unimodular = r.det_ab == 1 || r.det_ab == -1;
    if (!r.unimodular)
        r.failures.push_back("alpha/beta intersection matrix is not unimodular");
    r.ok = r.sizes_ok && r.cut_system[0] && r.cut_system[1] && r.cut_system[2] && r.standard_beta_gamma &&
           r.unimodular && r.parity_consistent;
    return r;
}

TrisectionDiagram trisection_for(const FiberComplex& fc, const SeifertData& seifert, const Slope& s)
{
    DerivativeReport rep = derivative_for(fc, seifert, s);
    if (!rep.verdict)
        throw std::logic_error("slope " + s.str() + " does not give a derivative");
    Multicurve lift = lift_slope(fc, s);
    ArcSystem arcs = find_dualizing_arcs(fc, sub_multicurve(lift, rep.subset), s, rep.subset);
    return build_trisection_diagram(fc, arcs);
}

} // namespace gsq

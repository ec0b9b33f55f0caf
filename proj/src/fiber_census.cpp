#include "gsq/fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gsq {

namespace {

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

// Position along the ccw boundary of the unit square, in [0,4).
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

bool on_boundary_point(const Vec2& v)
{
    return v.x <= Q(0) || v.x >= Q(1) || v.y <= Q(0) || v.y >= Q(1);
}

struct Chord {
    int comp;
    std::size_t seg;
    int pa, pb; // positions of endpoints in the sorted boundary list
    Vec2 a, b;
};

struct FaceCut {
    std::vector<Q> keys;       // sorted endpoint positions
    std::vector<Chord> chords;
    std::vector<int> region;   // local region of each arc (arc i starts at endpoint i)
    int regions = 1;
    int arc_base = 0;          // offset in the global arc numbering

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
    int narcs() const { return keys.empty() ? 1 : static_cast<int>(keys.size()); }
};

} // namespace

CutSurface cut_surface(const FiberComplex& fc, const Multicurve& m, const std::optional<Puncture>& puncture)
{
    std::size_t F = fc.faces.size();
    std::vector<FaceCut> cut(F);
    for (std::size_t ci = 0; ci < m.size(); ++ci) {
        const Path& p = m.components[ci];
        if (!p.closed)
            throw std::invalid_argument("census needs closed curves");
        for (std::size_t i = 0; i < p.segments(); ++i) {
            const Station& a = p.pts[i];
            const Station& b = p.pts[(i + 1) % p.pts.size()];
            if (!a.on_edge() || !b.on_edge())
                throw std::invalid_argument("census needs curves without interior vertices");
            int f = p.faces[i];
            cut[static_cast<std::size_t>(f)].chords.push_back(
                {static_cast<int>(ci), i, -1, -1, fc.local(f, a), fc.local(f, b)});
        }
    }
    int total_arcs = 0;
    for (auto& fcut : cut) {
        for (auto& c : fcut.chords) {
            fcut.keys.push_back(perimeter(c.a));
            fcut.keys.push_back(perimeter(c.b));
        }
        std::sort(fcut.keys.begin(), fcut.keys.end());
        if (std::adjacent_find(fcut.keys.begin(), fcut.keys.end()) != fcut.keys.end())
            throw std::logic_error("curves share a boundary point");
        std::size_t n = fcut.keys.size();
        std::vector<int> partner(n, -1);
        for (auto& c : fcut.chords) {
            c.pa = static_cast<int>(std::lower_bound(fcut.keys.begin(), fcut.keys.end(), perimeter(c.a)) - fcut.keys.begin());
            c.pb = static_cast<int>(std::lower_bound(fcut.keys.begin(), fcut.keys.end(), perimeter(c.b)) - fcut.keys.begin());
            partner[static_cast<std::size_t>(c.pa)] = c.pb;
            partner[static_cast<std::size_t>(c.pb)] = c.pa;
        }
        DSU local(static_cast<std::size_t>(fcut.narcs()));
        for (std::size_t i = 0; i < n; ++i)
            local.unite(static_cast<int>(i), partner[(i + 1) % n]);
        fcut.region.assign(static_cast<std::size_t>(fcut.narcs()), -1);
        std::map<int, int> ids;
        for (int i = 0; i < fcut.narcs(); ++i) {
            int r = local.find(i);
            auto it = ids.emplace(r, static_cast<int>(ids.size())).first;
            fcut.region[static_cast<std::size_t>(i)] = it->second;
        }
        fcut.regions = static_cast<int>(ids.size());
        if (fcut.regions != static_cast<int>(fcut.chords.size()) + 1)
            throw std::logic_error("chords in a face are not disjoint");
        fcut.arc_base = total_arcs;
        total_arcs += fcut.narcs();
    }
    DSU glob(static_cast<std::size_t>(total_arcs));
    auto gid = [&](int face, int arc) { return cut[static_cast<std::size_t>(face)].arc_base + arc; };
    for (std::size_t f = 0; f < F; ++f) {
        const auto& fcut = cut[f];
        std::vector<int> first(static_cast<std::size_t>(fcut.regions), -1);
        for (int a = 0; a < fcut.narcs(); ++a) {
            int r = fcut.region[static_cast<std::size_t>(a)];
            if (first[static_cast<std::size_t>(r)] < 0)
                first[static_cast<std::size_t>(r)] = a;
            glob.unite(gid(static_cast<int>(f), a), gid(static_cast<int>(f), first[static_cast<std::size_t>(r)]));
        }
    }
    // stations per edge, sorted by t
    std::vector<std::vector<Q>> on_edge(fc.edges.size());
    for (const auto& p : m.components)
        for (const auto& s : p.pts)
            on_edge[static_cast<std::size_t>(s.edge)].push_back(s.t);
    for (auto& v : on_edge)
        std::sort(v.begin(), v.end());
    auto interval_arc = [&](int face, int side, bool flip, const Q& t) {
        Q u = flip ? Q(1) - t : t;
        Vec2 pt = side == Bottom ? Vec2{u, Q(0)} : side == Right ? Vec2{Q(1), u} : side == Top ? Vec2{u, Q(1)} : Vec2{Q(0), u};
        return gid(face, cut[static_cast<std::size_t>(face)].arc_of(perimeter(pt)));
    };
    auto interval_mid = [&](const std::vector<Q>& ts, std::size_t j) {
        Q lo = j == 0 ? Q(0) : ts[j - 1];
        Q hi = j == ts.size() ? Q(1) : ts[j];
        return Q(1, 2) * (lo + hi);
    };
    for (std::size_t e = 0; e < fc.edges.size(); ++e) {
        const auto& ts = on_edge[e];
        const auto& E = fc.edges[e];
        for (std::size_t j = 0; j <= ts.size(); ++j) {
            Q t = interval_mid(ts, j);
            glob.unite(interval_arc(E.sides[0].face, E.sides[0].side, E.sides[0].flip, t),
                       interval_arc(E.sides[1].face, E.sides[1].side, E.sides[1].flip, t));
        }
    }
    std::map<int, int> piece_id;
    auto piece_of_arc = [&](int g) {
        int r = glob.find(g);
        return piece_id.emplace(r, static_cast<int>(piece_id.size())).first->second;
    };
    // number pieces in face order for determinism
    for (int g = 0; g < total_arcs; ++g)
        piece_of_arc(g);
    CutSurface out;
    out.pieces.assign(piece_id.size(), ComplementPiece{});
    auto& P = out.pieces;
    // faces
    for (std::size_t f = 0; f < F; ++f) {
        const auto& fcut = cut[f];
        std::vector<bool> seen(static_cast<std::size_t>(fcut.regions), false);
        for (int a = 0; a < fcut.narcs(); ++a) {
            int r = fcut.region[static_cast<std::size_t>(a)];
            if (seen[static_cast<std::size_t>(r)])
                continue;
            seen[static_cast<std::size_t>(r)] = true;
            P[static_cast<std::size_t>(piece_of_arc(gid(static_cast<int>(f), a)))].euler += 1;
        }
    }
    // vertices of the original complex
    static const Vec2 corner_pt[4] = {{Q(0), Q(0)}, {Q(1), Q(0)}, {Q(1), Q(1)}, {Q(0), Q(1)}};
    for (const auto& v : fc.vertices) {
        int piece = -1;
        for (auto [f, c] : v.corners) {
            int pc = piece_of_arc(gid(f, cut[static_cast<std::size_t>(f)].arc_of(perimeter(corner_pt[c]))));
            if (piece >= 0 && pc != piece)
                throw std::logic_error("vertex split by the cut");
            piece = pc;
        }
        P[static_cast<std::size_t>(piece)].euler += 1;
    }
    // sub-edges and doubled stations
    for (std::size_t e = 0; e < fc.edges.size(); ++e) {
        const auto& ts = on_edge[e];
        const auto& S = fc.edges[e].sides[0];
        std::vector<int> piece(ts.size() + 1);
        for (std::size_t j = 0; j <= ts.size(); ++j) {
            piece[j] = piece_of_arc(interval_arc(S.face, S.side, S.flip, interval_mid(ts, j)));
            P[static_cast<std::size_t>(piece[j])].euler -= 1;
        }
        for (std::size_t j = 0; j < ts.size(); ++j) {
            P[static_cast<std::size_t>(piece[j])].euler += 1;
            P[static_cast<std::size_t>(piece[j + 1])].euler += 1;
        }
    }
    // chords: one edge on each side; sides of each component
    out.left_piece.assign(m.size(), -1);
    out.right_piece.assign(m.size(), -1);
    for (std::size_t f = 0; f < F; ++f) {
        const auto& fcut = cut[f];
        for (const auto& c : fcut.chords) {
            int left = piece_of_arc(gid(static_cast<int>(f), c.pb));
            int right = piece_of_arc(gid(static_cast<int>(f), c.pa));
            P[static_cast<std::size_t>(left)].euler -= 1;
            P[static_cast<std::size_t>(right)].euler -= 1;
            auto& lp = out.left_piece[static_cast<std::size_t>(c.comp)];
            auto& rp = out.right_piece[static_cast<std::size_t>(c.comp)];
            if ((lp >= 0 && lp != left) || (rp >= 0 && rp != right))
                throw std::logic_error("curve sides change piece along the curve");
            lp = left;
            rp = right;
        }
    }
    for (std::size_t c = 0; c < m.size(); ++c) {
        ++P[static_cast<std::size_t>(out.left_piece[c])].boundary;
        ++P[static_cast<std::size_t>(out.right_piece[c])].boundary;
    }
    if (puncture) {
        const auto& fcut = cut[static_cast<std::size_t>(puncture->face)];
        Vec2 x = puncture->p;
        if (on_boundary_point(x))
            throw std::invalid_argument("puncture must be inside a face");
        int arc = -1;
        Q best(-1);
        for (const auto& c : fcut.chords) {
            if (orient(c.a, c.b, x) == 0)
                throw std::invalid_argument("puncture lies on the curve");
            // crossing of the chord with the horizontal segment from (0, y) to x
            if ((c.a.y - x.y).sign() * (c.b.y - x.y).sign() > 0 || c.a.y == c.b.y)
                continue;
            Q s = (x.y - c.a.y) / (c.b.y - c.a.y);
            Q cx = c.a.x + s * (c.b.x - c.a.x);
            if (cx >= x.x || cx < Q(0) || cx <= best)
                continue;
            best = cx;
            arc = orient(c.a, c.b, x) > 0 ? c.pb : c.pa;
        }
        if (arc < 0)
            arc = fcut.arc_of(perimeter({Q(0), x.y}));
        auto& piece = P[static_cast<std::size_t>(piece_of_arc(gid(puncture->face, arc)))];
        piece.euler -= 1;
        piece.boundary += 1;
    }
    for (auto& pc : P) {
        long long g2 = 2 - pc.euler - pc.boundary;
        if (g2 < 0 || g2 % 2 != 0)
            throw std::logic_error("cut piece has inconsistent Euler characteristic");
        pc.genus = static_cast<int>(g2 / 2);
    }
    return out;
}

std::vector<ComplementPiece> complement_components(const FiberComplex& fc, const Multicurve& m,
                                                   const std::optional<Puncture>& puncture)
{
    auto pieces = cut_surface(fc, m, puncture).pieces;
    std::sort(pieces.begin(), pieces.end());
    return pieces;
}

std::vector<BigInt> crossing_cochain(const FiberComplex& fc, const Path& path)
{
    std::size_t G2 = fc.basis.size();
    std::vector<std::vector<std::pair<std::size_t, int>>> coeff(fc.edges.size());
    for (std::size_t k = 0; k < G2; ++k)
        for (auto [e, c] : fc.basis[k])
            coeff[static_cast<std::size_t>(e)].emplace_back(k, c);
    std::vector<BigInt> v(G2, 0);
    std::size_t n = path.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Station& s = path.pts[i];
        if (!s.on_edge())
            continue;
        if (!path.closed && (i == 0 || i + 1 == n))
            continue;
        int from = path.faces[(i + n - 1) % n];
        int to = path.faces[i];
        if (from == to)
            continue;
        int side = fc.side_of(from, s.edge);
        bool ccw_inc = side == Bottom || side == Right;
        bool edge_inc = !fc.faces[static_cast<std::size_t>(from)].flip[static_cast<std::size_t>(side)];
        int sign = ccw_inc == edge_inc ? 1 : -1;
        for (auto [k, c] : coeff[static_cast<std::size_t>(s.edge)])
            v[k] += sign * c;
    }
    return v;
}

std::vector<BigInt> homology_class(const FiberComplex& fc, const Path& path)
{
    if (!path.closed)
        throw std::invalid_argument("homology class of an open path");
    auto v = crossing_cochain(fc, path);
    std::vector<BigInt> a(v.size(), 0);
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
            a[r] += fc.intersection_inv_t[r][c] * v[c];
    return a;
}

IntMatrix homology_classes(const FiberComplex& fc, const Multicurve& m)
{
    IntMatrix out;
    for (const auto& c : m.components)
        out.push_back(homology_class(fc, c));
    return out;
}

BigInt algebraic_intersection(const FiberComplex& fc, const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    BigInt s = 0;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c)
            s += a[r] * fc.intersection[r][c] * b[c];
    return s;
}

} // namespace gsq

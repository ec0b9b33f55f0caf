#pragma once

// Independent reference computations used by the tests.

#include "gsq/fiber.hpp"
#include "gsq/params.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using LL = long long;
using Frac = std::pair<LL, LL>; // a/b with b >= 0, reduced, 1/0 for infinity

inline Frac norm(LL a, LL b)
{
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
    LL g = std::gcd(std::llabs(a), b);
    return {a / g, b / g};
}

// Pillowcase twists through the torus double cover: the square of the torus twist along (a,b).
inline Frac twist(Frac axis, LL n, Frac s)
{
    auto [a, b] = axis;
    LL c = s.first, d = s.second;
    for (LL k = 0; k < std::llabs(n); ++k) {
        LL sg = n > 0 ? 1 : -1;
        LL w = a * d - b * c;
        c += 2 * sg * w * a;
        d += 2 * sg * w * b;
    }
    return norm(c, d);
}

inline LL intersection(Frac x, Frac y) { return 2 * std::llabs(x.first * y.second - x.second * y.first); }

// Shortest words in tau_0^{+-1}, tau_inf^{+-1} reaching a terminal of the right parity.
inline std::optional<int> reduce_depth(Frac s, int max_depth)
{
    bool even = s.first % 2 == 0;
    auto terminal = [&](Frac t) {
        return even ? t == Frac{0, 1} : (t == Frac{1, 0} || t == Frac{1, 1});
    };
    std::map<Frac, int> dist{{s, 0}};
    std::deque<Frac> queue{s};
    while (!queue.empty()) {
        Frac u = queue.front();
        queue.pop_front();
        int du = dist[u];
        if (terminal(u))
            return du;
        if (du == max_depth)
            continue;
        for (Frac ax : {Frac{0, 1}, Frac{1, 0}})
            for (LL n : {1LL, -1LL}) {
                Frac v = twist(ax, n, u);
                if (std::llabs(v.first) > 100000 || v.second > 100000)
                    continue;
                if (dist.emplace(v, du + 1).second)
                    queue.push_back(v);
            }
    }
    return std::nullopt;
}

// Farey edges as ordered pairs of fractions; slides replace one end by a mediant completion.
using Edge = std::pair<Frac, Frac>;

inline Edge edge(Frac x, Frac y) { return x < y ? Edge{x, y} : Edge{y, x}; }

inline std::vector<Edge> slides(const Edge& e)
{
    auto [u, v] = e;
    std::vector<Edge> out;
    for (LL sg : {1LL, -1LL}) {
        Frac w = norm(u.first + sg * v.first, u.second + sg * v.second);
        out.push_back(edge(u, w));
        out.push_back(edge(v, w));
    }
    return out;
}

inline std::optional<int> slide_distance(const Edge& from, const Edge& to, LL bound)
{
    std::map<Edge, int> dist{{from, 0}};
    std::deque<Edge> queue{from};
    while (!queue.empty()) {
        Edge e = queue.front();
        queue.pop_front();
        if (e == to)
            return dist[e];
        for (const Edge& f : slides(e)) {
            bool small = true;
            for (Frac x : {f.first, f.second})
                small = small && std::llabs(x.first) <= bound && x.second <= bound;
            if (small && dist.emplace(f, dist[e] + 1).second)
                queue.push_back(f);
        }
    }
    return std::nullopt;
}

// All unordered pairs (r1,s1),(r2,s2) with 0<r<p, 0<s<q meeting the four determinant conditions.
inline std::vector<std::pair<Frac, Frac>> summand_pairs(LL p, LL q)
{
    std::vector<Frac> cand;
    for (LL r = 1; r < p; ++r)
        for (LL s = 1; s < q; ++s)
            if (std::llabs(p * s - q * r) == 1)
                cand.push_back({r, s});
    std::vector<std::pair<Frac, Frac>> out;
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (std::llabs(cand[i].first * cand[j].second - cand[i].second * cand[j].first) == 1)
                out.push_back({cand[i], cand[j]});
    return out;
}

// Lift of a straight pillowcase line by walking the cells: the edge parameter of the direction is kept,
// the normal part always points into the next face.
inline std::vector<gsq::Path> line_lift(const gsq::FiberComplex& fc, LL c, LL d)
{
    using gsq::Q;
    using gsq::Vec2;
    Vec2 start, dir;
    if (c == 0) {
        start = {Q(0), Q(1, 10007)};
        dir = {Q(1), Q(0)};
    } else {
        start = {Q(1, 10007), Q(0)};
        dir = c > 0 ? Vec2{Q(d), Q(c)} : Vec2{Q(-d), Q(-c)};
    }
    auto edge_axis = [](int side) { return side == 0 || side == 2 ? 0 : 1; };
    std::set<std::string> seen;
    std::vector<gsq::Path> out;
    for (int k = 0; k < fc.N; ++k) {
        int f0 = fc.front(k);
        gsq::Path path;
        int f = f0;
        Vec2 P = start, D = dir;
        gsq::Station first = fc.boundary_station(f0, start);
        for (std::size_t guard = 0;; ++guard) {
            if (guard > 100000)
                throw std::runtime_error("oracle trace does not close");
            Q best(-1);
            auto hit = [&](const Q& s) {
                if (s.sign() > 0 && (best.sign() < 0 || s < best))
                    best = s;
            };
            if (D.x.sign() != 0)
                hit(((D.x.sign() > 0 ? Q(1) : Q(0)) - P.x) / D.x);
            if (D.y.sign() != 0)
                hit(((D.y.sign() > 0 ? Q(1) : Q(0)) - P.y) / D.y);
            Vec2 E = P + best * D;
            path.pts.push_back(fc.boundary_station(f, P));
            path.faces.push_back(f);
            gsq::Station se = fc.boundary_station(f, E);
            int side = fc.side_of(f, se.edge);
            auto [g, gside] = fc.across(f, side);
            const auto& F = fc.faces[static_cast<std::size_t>(f)];
            const auto& G = fc.faces[static_cast<std::size_t>(g)];
            Q along = edge_axis(side) == 0 ? D.x : D.y;
            Q normal = edge_axis(side) == 0 ? D.y : D.x;
            if (normal.sign() < 0)
                normal = -normal;
            Q dt = F.flip[static_cast<std::size_t>(side)] ? -along : along;
            Q ng = G.flip[static_cast<std::size_t>(gside)] ? -dt : dt;
            // inward normal of side s: Bottom +y, Right -x, Top -y, Left +x
            Q inward = gside == 0 || gside == 3 ? normal : -normal;
            D = edge_axis(gside) == 0 ? Vec2{ng, inward} : Vec2{inward, ng};
            P = fc.local(g, se);
            f = g;
            if (f == f0 && se == first)
                break;
        }
        std::string key = gsq::path_key(path, false);
        if (seen.insert(key).second)
            out.push_back(path);
    }
    return out;
}

inline std::vector<LL> crossings_per_edge(const gsq::FiberComplex& fc, const gsq::Path& p)
{
    std::vector<LL> v(fc.edges.size(), 0);
    for (const auto& s : p.pts)
        if (s.on_edge())
            ++v[static_cast<std::size_t>(s.edge)];
    return v;
}

} // namespace oracle

#include "gsq/fiber.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gsq {

const char* corner_name(Corner c)
{
    switch (c) {
    case Corner::C00: return "C00";
    case Corner::C10: return "C10";
    case Corner::C11: return "C11";
    case Corner::C01: return "C01";
    }
    return "?";
}

const char* edge_kind_name(EdgeKind k)
{
    switch (k) {
    case EdgeKind::H: return "H";
    case EdgeKind::L: return "L";
    case EdgeKind::R: return "R";
    }
    return "?";
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

int corner_at(int side, bool at_one)
{
    switch (side) {
    case Bottom: return at_one ? 1 : 0;
    case Right: return at_one ? 2 : 1;
    case Top: return at_one ? 2 : 3;
    default: return at_one ? 3 : 0;
    }
}

Corner corner_type(bool back, int c)
{
    static const Corner front_t[4] = {Corner::C00, Corner::C10, Corner::C11, Corner::C01};
    static const Corner back_t[4] = {Corner::C01, Corner::C11, Corner::C10, Corner::C00};
    return back ? back_t[c] : front_t[c];
}

int mod(int a, int n) { return ((a % n) + n) % n; }

struct BuildFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw BuildFailure(what);
}

} // namespace

int FiberComplex::side_of(int face, int edge) const
{
    const auto& f = faces[static_cast<std::size_t>(face)];
    for (int s = 0; s < 4; ++s)
        if (f.edge[static_cast<std::size_t>(s)] == edge)
            return s;
    throw std::logic_error("edge " + std::to_string(edge) + " is not on face " + std::to_string(face));
}

Vec2 FiberComplex::local(int face, const Station& st) const
{
    if (!st.on_edge()) {
        if (st.face != face)
            throw std::logic_error("interior point used outside its face");
        return st.p;
    }
    int s = side_of(face, st.edge);
    Q u = faces[static_cast<std::size_t>(face)].flip[static_cast<std::size_t>(s)] ? Q(1) - st.t : st.t;
    switch (s) {
    case Bottom: return {u, Q(0)};
    case Right: return {Q(1), u};
    case Top: return {u, Q(1)};
    default: return {Q(0), u};
    }
}

Station FiberComplex::boundary_station(int face, const Vec2& p) const
{
    int s;
    Q u;
    bool x0 = p.x == Q(0), x1 = p.x == Q(1), y0 = p.y == Q(0), y1 = p.y == Q(1);
    if ((x0 || x1) && (y0 || y1))
        throw std::runtime_error("path meets a vertex");
    if (y0) {
        s = Bottom;
        u = p.x;
    } else if (x1) {
        s = Right;
        u = p.y;
    } else if (y1) {
        s = Top;
        u = p.x;
    } else if (x0) {
        s = Left;
        u = p.y;
    } else {
        throw std::logic_error("point is not on the face boundary");
    }
    const auto& f = faces[static_cast<std::size_t>(face)];
    Q t = f.flip[static_cast<std::size_t>(s)] ? Q(1) - u : u;
    return Station::on(f.edge[static_cast<std::size_t>(s)], t);
}

std::pair<int, int> FiberComplex::across(int face, int side) const
{
    const auto& e = edges[static_cast<std::size_t>(faces[static_cast<std::size_t>(face)].edge[static_cast<std::size_t>(side)])];
    for (const auto& fs : e.sides)
        if (!(fs.face == face && fs.side == side))
            return {fs.face, fs.side};
    throw std::logic_error("edge glued to itself");
}

Vec2 FiberComplex::transfer(int from_face, int from_side, const Vec2& p) const
{
    Station st = boundary_station(from_face, p);
    (void)from_side;
    auto [g, s] = across(from_face, side_of(from_face, st.edge));
    (void)s;
    return local(g, st);
}

Vec2 FiberComplex::to_neighbour_frame(int f, int s, const Vec2& p) const
{
    switch (s) {
    case Top: return {p.x, p.y + Q(1)};
    case Bottom: return {p.x, p.y - Q(1)};
    case Left: return {-p.x, Q(1) - p.y};
    default: return {Q(2) - p.x, Q(1) - p.y};
    }
    (void)f;
}

int FiberComplex::half_edge_next_ccw(int edge, int vertex) const
{
    const auto& e = edges[static_cast<std::size_t>(edge)];
    int end = e.tail == vertex ? 0 : 1;
    if (end == 1 && e.head != vertex)
        throw std::logic_error("edge not incident to vertex");
    return next_ccw_[static_cast<std::size_t>(edge * 2 + end)];
}

std::vector<std::pair<int, int>> FiberComplex::vertex_rotation(int vertex) const
{
    std::vector<std::pair<int, int>> out;
    const auto& v = vertices[static_cast<std::size_t>(vertex)];
    auto [f, c] = v.corners.front();
    int start = faces[static_cast<std::size_t>(f)].edge[static_cast<std::size_t>(c)];
    int e = start;
    do {
        const auto& ed = edges[static_cast<std::size_t>(e)];
        out.emplace_back(e, ed.tail == vertex ? 1 : -1);
        e = half_edge_next_ccw(e, vertex);
    } while (e != start && out.size() <= edges.size());
    return out;
}

namespace {

// Lattice cycle e_{ij} - e_{i+1,j} + e_{i+1,j+1} - e_{i,j+1} with e oriented from v_i to v'_j,
// which is against the stored edge direction.
std::vector<std::pair<int, int>> lattice_cycle(const std::vector<int>& e, int q, int i, int j)
{
    return {{e[static_cast<std::size_t>(i * q + j)], -1},
            {e[static_cast<std::size_t>((i + 1) * q + j)], 1},
            {e[static_cast<std::size_t>((i + 1) * q + j + 1)], -1},
            {e[static_cast<std::size_t>(i * q + j + 1)], 1}};
}

IntMatrix pushoff_form(const FiberComplex& fc)
{
    std::size_t n = fc.basis.size();
    std::vector<std::vector<std::pair<int, int>>> coeff(fc.edges.size());
    for (std::size_t k = 0; k < n; ++k)
        for (auto [e, c] : fc.basis[k])
            coeff[static_cast<std::size_t>(e)].emplace_back(static_cast<int>(k), c);
    IntMatrix J = zeros(n, n);
    for (std::size_t l = 0; l < n; ++l) {
        const auto& cyc = fc.basis[l];
        std::size_t len = cyc.size();
        for (std::size_t s = 0; s < len; ++s) {
            auto [e_in, c_in] = cyc[s];
            auto [e_out, c_out] = cyc[(s + 1) % len];
            const auto& ein = fc.edges[static_cast<std::size_t>(e_in)];
            const auto& eout = fc.edges[static_cast<std::size_t>(e_out)];
            int w = c_in > 0 ? ein.head : ein.tail;
            int w2 = c_out > 0 ? eout.tail : eout.head;
            if (w != w2)
                throw std::logic_error("basis cycle is not a closed walk");
            int g = fc.half_edge_next_ccw(e_out, w);
            int guard = 0;
            while (g != e_in) {
                const auto& ge = fc.edges[static_cast<std::size_t>(g)];
                int sign = ge.tail == w ? 1 : -1;
                for (auto [k, c] : coeff[static_cast<std::size_t>(g)])
                    J[l][static_cast<std::size_t>(k)] += sign * c;
                g = fc.half_edge_next_ccw(g, w);
                if (++guard > static_cast<int>(fc.edges.size()))
                    throw std::logic_error("rotation system is not cyclic");
            }
        }
    }
    return J;
}

void build_cells(FiberComplex& fc, int mirror)
{
    const int N = fc.N, p = fc.params.p, q = fc.params.q;
    fc.mirror = mirror;
    fc.faces.assign(static_cast<std::size_t>(2 * N), CellFace{});
    for (int f = 0; f < 2 * N; ++f) {
        fc.faces[static_cast<std::size_t>(f)].sheet = f / 2;
        fc.faces[static_cast<std::size_t>(f)].back = f % 2 == 1;
        fc.faces[static_cast<std::size_t>(f)].edge.fill(-1);
    }
    fc.edges.clear();
    auto add_edge = [&](EdgeKind kind, int index, FaceSide a, FaceSide b) {
        int id = static_cast<int>(fc.edges.size());
        fc.edges.push_back(CellEdge{kind, index, {a, b}, -1, -1});
        for (const auto& fs : {a, b}) {
            auto& face = fc.faces[static_cast<std::size_t>(fs.face)];
            require(face.edge[static_cast<std::size_t>(fs.side)] == -1, "face side glued twice");
            face.edge[static_cast<std::size_t>(fs.side)] = id;
            face.flip[static_cast<std::size_t>(fs.side)] = fs.flip;
        }
    };
    for (int j = 0; j < 2 * N; ++j)
        add_edge(EdgeKind::H, j, {j, Bottom, false}, {mod(j - 1, 2 * N), Top, false});
    for (int k = 0; k < N; ++k)
        add_edge(EdgeKind::L, k, {2 * k, Left, false}, {2 * mod(k + fc.shift, N) + 1, Left, true});
    for (int k = 0; k < N; ++k)
        add_edge(EdgeKind::R, k, {2 * k, Right, false}, {2 * mod(k + mirror, N) + 1, Right, true});
    for (const auto& f : fc.faces)
        for (int e : f.edge)
            require(e >= 0, "face side left unglued");

    UnionFind uf(2 * N * 4);
    auto cid = [](int face, int corner) { return face * 4 + corner; };
    for (const auto& e : fc.edges)
        for (int end = 0; end < 2; ++end) {
            const auto& a = e.sides[0];
            const auto& b = e.sides[1];
            bool ua = (end == 1) != a.flip;
            bool ub = (end == 1) != b.flip;
            uf.unite(cid(a.face, corner_at(a.side, ua)), cid(b.face, corner_at(b.side, ub)));
        }
    std::vector<int> class_of(static_cast<std::size_t>(8 * N), -1);
    fc.vertices.clear();
    for (int f = 0; f < 2 * N; ++f)
        for (int c = 0; c < 4; ++c) {
            int root = uf.find(cid(f, c));
            if (class_of[static_cast<std::size_t>(root)] < 0) {
                class_of[static_cast<std::size_t>(root)] = static_cast<int>(fc.vertices.size());
                fc.vertices.push_back(CellVertex{corner_type(f % 2 == 1, c), -1, 0, {}});
            }
            auto& v = fc.vertices[static_cast<std::size_t>(class_of[static_cast<std::size_t>(root)])];
            require(v.corner == corner_type(f % 2 == 1, c), "vertex class mixes pillowcase corners");
            v.corners.emplace_back(f, c);
        }
    auto vertex_at = [&](int face, int corner) {
        return class_of[static_cast<std::size_t>(uf.find(cid(face, corner)))];
    };
    for (auto& e : fc.edges) {
        const auto& a = e.sides[0];
        e.tail = vertex_at(a.face, corner_at(a.side, a.flip));
        e.head = vertex_at(a.face, corner_at(a.side, !a.flip));
    }

    int counts[4] = {0, 0, 0, 0};
    for (auto& v : fc.vertices) {
        ++counts[static_cast<int>(v.corner)];
        int modulus = (v.corner == Corner::C01 || v.corner == Corner::C11) ? p : q;
        v.cone_order = modulus == p ? q : p;
        for (auto [f, c] : v.corners) {
            if (f % 2 == 1)
                continue;
            int lab = (f / 2) % modulus;
            require(v.label < 0 || v.label == lab, "vertex labels are not residues of the sheet index");
            v.label = lab;
        }
        require(v.label >= 0, "vertex without a front corner");
    }
    require(counts[0] == q && counts[1] == q, "order-p cone points need q preimages each");
    require(counts[2] == p && counts[3] == p, "order-q cone points need p preimages each");

    long long chi = static_cast<long long>(fc.vertices.size()) - static_cast<long long>(fc.edges.size()) +
                    static_cast<long long>(fc.faces.size());
    require(chi == 2 - 2LL * fc.genus(), "Euler characteristic mismatch");
    // orbifold Euler characteristic of the quotient: N * (2/p + 2/q - 2)
    require(chi == 2LL * q + 2LL * p - 2LL * N, "quotient is not a sphere with four cone points");

    // deck transformation: one step of rotation
    fc.deck_face.resize(static_cast<std::size_t>(2 * N));
    for (int f = 0; f < 2 * N; ++f)
        fc.deck_face[static_cast<std::size_t>(f)] = mod(f + 2, 2 * N);
    fc.deck_edge.resize(fc.edges.size());
    for (std::size_t id = 0; id < fc.edges.size(); ++id) {
        const auto& e = fc.edges[id];
        int img = e.kind == EdgeKind::H ? fc.edge_H(e.index + 2)
                                        : (e.kind == EdgeKind::L ? fc.edge_L(e.index + 1) : fc.edge_R(e.index + 1));
        fc.deck_edge[id] = img;
        for (const auto& fs : e.sides) {
            const auto& tgt = fc.faces[static_cast<std::size_t>(fc.deck_face[static_cast<std::size_t>(fs.face)])];
            require(tgt.edge[static_cast<std::size_t>(fs.side)] == img &&
                        tgt.flip[static_cast<std::size_t>(fs.side)] == fs.flip,
                    "deck map does not respect the gluing");
        }
    }
    fc.deck_vertex.assign(fc.vertices.size(), -1);
    for (std::size_t v = 0; v < fc.vertices.size(); ++v)
        for (auto [f, c] : fc.vertices[v].corners) {
            int img = vertex_at(fc.deck_face[static_cast<std::size_t>(f)], c);
            require(fc.deck_vertex[v] < 0 || fc.deck_vertex[v] == img, "deck map is not well defined on vertices");
            fc.deck_vertex[v] = img;
        }
    {
        std::vector<int> cur(static_cast<std::size_t>(2 * N));
        std::iota(cur.begin(), cur.end(), 0);
        for (int k = 1; k <= N; ++k) {
            for (auto& f : cur)
                f = fc.deck_face[static_cast<std::size_t>(f)];
            bool fixed = false;
            for (int f = 0; f < 2 * N; ++f)
                fixed = fixed || cur[static_cast<std::size_t>(f)] == f;
            require(k == N ? fixed : !fixed, "deck action is not free of order pq on faces");
        }
    }

    // rotation system: at corner c the side c precedes side c-1 counterclockwise
    fc.next_ccw_.assign(fc.edges.size() * 2, -1);
    for (std::size_t v = 0; v < fc.vertices.size(); ++v)
        for (auto [f, c] : fc.vertices[v].corners) {
            const auto& face = fc.faces[static_cast<std::size_t>(f)];
            int a = face.edge[static_cast<std::size_t>(c)];
            int b = face.edge[static_cast<std::size_t>((c + 3) % 4)];
            const auto& ea = fc.edges[static_cast<std::size_t>(a)];
            int end = ea.tail == static_cast<int>(v) ? 0 : 1;
            require(fc.next_ccw_[static_cast<std::size_t>(a * 2 + end)] < 0, "rotation system is not a permutation");
            fc.next_ccw_[static_cast<std::size_t>(a * 2 + end)] = b;
        }

    // Gamma graphs
    auto find_vertex = [&](Corner c, int label) {
        for (std::size_t v = 0; v < fc.vertices.size(); ++v)
            if (fc.vertices[v].corner == c && fc.vertices[v].label == label)
                return static_cast<int>(v);
        throw BuildFailure("missing vertex label");
    };
    fc.gp_v.clear();
    fc.gp_vp.clear();
    fc.gm_v.clear();
    fc.gm_vp.clear();
    for (int i = 0; i < p; ++i) {
        fc.gp_v.push_back(find_vertex(Corner::C01, i));
        fc.gm_v.push_back(find_vertex(Corner::C11, i));
    }
    for (int j = 0; j < q; ++j) {
        fc.gp_vp.push_back(find_vertex(Corner::C00, j));
        fc.gm_vp.push_back(find_vertex(Corner::C10, j));
    }
    fc.gp_e.assign(static_cast<std::size_t>(N), -1);
    fc.gm_e.assign(static_cast<std::size_t>(N), -1);
    for (int k = 0; k < N; ++k) {
        int i = k % p, j = k % q;
        int le = fc.edge_L(k), re = fc.edge_R(k);
        require(fc.edges[static_cast<std::size_t>(le)].head == fc.gp_v[static_cast<std::size_t>(i)] &&
                    fc.edges[static_cast<std::size_t>(le)].tail == fc.gp_vp[static_cast<std::size_t>(j)],
                "Gamma+ edge endpoints");
        require(fc.edges[static_cast<std::size_t>(re)].head == fc.gm_v[static_cast<std::size_t>(i)] &&
                    fc.edges[static_cast<std::size_t>(re)].tail == fc.gm_vp[static_cast<std::size_t>(j)],
                "Gamma- edge endpoints");
        fc.gp_e[static_cast<std::size_t>(i * q + j)] = le;
        fc.gm_e[static_cast<std::size_t>(i * q + j)] = re;
    }
    for (int i = 0; i < p; ++i)
        require(fc.deck_vertex[static_cast<std::size_t>(fc.gp_v[static_cast<std::size_t>(i)])] ==
                    fc.gp_v[static_cast<std::size_t>((i + 1) % p)],
                "deck does not rotate v_i");
    for (int j = 0; j < q; ++j)
        require(fc.deck_vertex[static_cast<std::size_t>(fc.gp_vp[static_cast<std::size_t>(j)])] ==
                    fc.gp_vp[static_cast<std::size_t>((j + 1) % q)],
                "deck does not rotate v'_j");
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            require(fc.deck_edge[static_cast<std::size_t>(fc.gp_e[static_cast<std::size_t>(i * q + j)])] ==
                        fc.gp_e[static_cast<std::size_t>(((i + 1) % p) * q + (j + 1) % q)],
                    "deck does not rotate e_ij");

    fc.basis.clear();
    fc.basis_names.clear();
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i + 1 < p; ++i)
            for (int j = 0; j + 1 < q; ++j) {
                fc.basis.push_back(lattice_cycle(side == 0 ? fc.gp_e : fc.gm_e, q, i, j));
                fc.basis_names.push_back(std::string(side == 0 ? "C+" : "C-") + "(" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            }
    fc.intersection = pushoff_form(fc);
    require(is_zero(add(fc.intersection, transpose(fc.intersection))), "intersection form is not antisymmetric");
    BigInt det = determinant(fc.intersection);
    require(det == 1 || det == -1, "lattice cycles are not a basis of H_1");
    fc.intersection_inv_t = integer_inverse(transpose(fc.intersection));
}

} // namespace

void attach_reference_curves(FiberComplex& fc);

FiberComplex build_fiber(const TorusParams& params)
{
    params.validate();
    FiberComplex fc;
    fc.params = params;
    fc.N = params.order();
    const int p = params.p, q = params.q;
    int a = 0;
    while (mod(a * p, q) != q - 1)
        ++a;
    fc.shift = mod(a * p, fc.N);
    std::string failures;
    for (int mirror : {fc.shift, mod(-1 - fc.shift, fc.N)}) {
        try {
            build_cells(fc, mirror);
            attach_reference_curves(fc);
            return fc;
        } catch (const BuildFailure& e) {
            failures += " [mirror " + std::to_string(mirror) + ": " + e.what() + "]";
        } catch (const std::runtime_error& e) {
            failures += " [mirror " + std::to_string(mirror) + ": " + e.what() + "]";
        }
    }
    throw std::logic_error("fiber construction failed for " + params.str() + ":" + failures);
}

} // namespace gsq

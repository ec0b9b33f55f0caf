#include "gsq/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gsq {

namespace {

Json header(const char* kind)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

Json params_json(const TorusParams& t) { return Json{{"p", t.p}, {"q", t.q}}; }

TorusParams params_from(const Json& j) { return TorusParams{j.at("p").get<int>(), j.at("q").get<int>()}; }

void check_header(const Json& j, const char* kind)
{
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("unsupported schema_version");
    if (j.at("kind").get<std::string>() != kind)
        throw std::invalid_argument(std::string("expected a ") + kind + " document");
}

Json slope_json(const Slope& s) { return s.is_inf() ? Json("inf") : Json(s.str()); }

Json bigs(const std::vector<BigInt>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(x.str());
    return a;
}

Json ints(const std::vector<int>& v) { return Json(v); }

Json summand_json(const SummandSlope& s) { return Json{{"r", s.r}, {"s", s.s}}; }

Json curve_json(const DiagramCurve& c)
{
    Json j{{"name", c.name}, {"f0", json_of(c.f0)}, {"pushed", c.pushed}};
    j["f1"] = c.has_f1 ? json_of(c.f1) : Json(nullptr);
    return j;
}

DiagramCurve curve_from(const Json& j)
{
    DiagramCurve c;
    c.name = j.at("name").get<std::string>();
    c.f0 = path_from_json(j.at("f0"));
    c.pushed = j.at("pushed").get<bool>();
    if (!j.at("f1").is_null()) {
        c.has_f1 = true;
        c.f1 = path_from_json(j.at("f1"));
    }
    return c;
}

const char* kSystemNames[3] = {"alpha", "beta", "gamma"};

} // namespace

Json json_of(const Q& v) { return v.str(); }

Json json_of(const Vec2& v) { return Json::array({v.x.str(), v.y.str()}); }

Json json_of(const Station& s)
{
    if (s.on_edge())
        return Json{{"edge", s.edge}, {"t", s.t.str()}};
    return Json{{"face", s.face}, {"p", json_of(s.p)}};
}

Json json_of(const Path& p)
{
    Json pts = Json::array();
    for (const auto& s : p.pts)
        pts.push_back(json_of(s));
    return Json{{"closed", p.closed}, {"stations", pts}, {"faces", p.faces}};
}

Json json_of(const Multicurve& m)
{
    Json comps = Json::array();
    for (const auto& c : m.components)
        comps.push_back(json_of(c));
    Json j{{"components", comps}};
    j["slope"] = m.slope ? slope_json(*m.slope) : Json(nullptr);
    return j;
}

Json json_of(const Puncture& p) { return Json{{"face", p.face}, {"p", json_of(p.p)}}; }

Json json_of(const IntMatrix& m)
{
    Json a = Json::array();
    for (const auto& row : m)
        a.push_back(bigs(row));
    return a;
}

Json json_of(const ComplementPiece& c)
{
    return Json{{"genus", c.genus}, {"boundary", c.boundary}, {"euler", c.euler}};
}

Q q_from_json(const Json& j) { return Q::parse(j.get<std::string>()); }

Vec2 vec2_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("point must be a pair");
    return Vec2{q_from_json(j[0]), q_from_json(j[1])};
}

Station station_from_json(const Json& j)
{
    if (j.contains("edge"))
        return Station::on(j.at("edge").get<int>(), q_from_json(j.at("t")));
    return Station::inside(j.at("face").get<int>(), vec2_from_json(j.at("p")));
}

Path path_from_json(const Json& j)
{
    Path p;
    p.closed = j.at("closed").get<bool>();
    for (const auto& s : j.at("stations"))
        p.pts.push_back(station_from_json(s));
    p.faces = j.at("faces").get<std::vector<int>>();
    if (p.faces.size() != p.segments())
        throw std::invalid_argument("path needs one face per segment");
    return p;
}

Multicurve multicurve_from_json(const Json& j)
{
    Multicurve m;
    for (const auto& c : j.at("components"))
        m.components.push_back(path_from_json(c));
    if (j.contains("slope") && !j.at("slope").is_null())
        m.slope = Slope::parse(j.at("slope").get<std::string>());
    return m;
}

Puncture puncture_from_json(const Json& j) { return Puncture{j.at("face").get<int>(), vec2_from_json(j.at("p"))}; }

Json fiber_document(const FiberComplex& fc)
{
    Json j = header("fiber_complex");
    j["params"] = params_json(fc.params);
    j["genus"] = fc.genus();
    j["order"] = fc.N;
    j["shift"] = fc.shift;
    Json vs = Json::array();
    for (const auto& v : fc.vertices) {
        Json corners = Json::array();
        for (auto [f, c] : v.corners)
            corners.push_back(Json::array({f, c}));
        vs.push_back(Json{{"corner", corner_name(v.corner)},
                          {"label", v.label},
                          {"cone_order", v.cone_order},
                          {"face_corners", corners}});
    }
    Json es = Json::array();
    for (const auto& e : fc.edges) {
        Json sides = Json::array();
        for (const auto& s : e.sides)
            sides.push_back(Json{{"face", s.face}, {"side", s.side}, {"flip", s.flip}});
        es.push_back(Json{{"kind", edge_kind_name(e.kind)},
                          {"index", e.index},
                          {"pairing", sides},
                          {"tail", e.tail},
                          {"head", e.head}});
    }
    Json fs = Json::array();
    for (const auto& f : fc.faces) {
        fs.push_back(Json{{"sheet", f.sheet},
                          {"back", f.back},
                          {"edges", Json(std::vector<int>(f.edge.begin(), f.edge.end()))},
                          {"flip", Json(std::vector<bool>(f.flip.begin(), f.flip.end()))}});
    }
    j["cells"] = Json{{"vertices", vs}, {"edges", es}, {"faces", fs}};
    j["deck"] = Json{{"vertex", fc.deck_vertex}, {"edge", fc.deck_edge}, {"face", fc.deck_face}};
    Json basis = Json::array();
    for (std::size_t k = 0; k < fc.basis.size(); ++k) {
        Json terms = Json::array();
        for (auto [e, c] : fc.basis[k])
            terms.push_back(Json::array({e, c}));
        basis.push_back(Json{{"name", fc.basis_names[k]}, {"chain", terms}});
    }
    j["homology_basis"] = basis;
    j["intersection_form"] = json_of(fc.intersection);
    return j;
}

Json multicurve_document(const FiberComplex& fc, const Multicurve& m)
{
    Json j = header("multicurve");
    j["params"] = params_json(fc.params);
    j["multicurve"] = json_of(m);
    Json coords = Json::array();
    for (const auto& c : m.components)
        coords.push_back(normal_coordinates(fc, c));
    j["normal_coordinates"] = coords;
    return j;
}

Json arcs_document(const ArcSystem& arcs)
{
    Json j = header("arc_system");
    j["params"] = params_json(arcs.params);
    j["slope"] = slope_json(arcs.slope);
    j["subset"] = ints(arcs.subset);
    j["puncture"] = json_of(arcs.puncture);
    j["sublink"] = json_of(arcs.sublink);
    Json a = Json::array(), b = Json::array();
    for (const auto& x : arcs.a)
        a.push_back(json_of(x));
    for (const auto& x : arcs.b)
        b.push_back(json_of(x));
    j["a"] = a;
    j["b"] = b;
    return j;
}

Json diagram_document(const TrisectionDiagram& d)
{
    Json j = header("trisection_diagram");
    j["params"] = params_json(d.params);
    j["slope"] = slope_json(d.slope);
    j["subset"] = ints(d.subset);
    j["fiber_genus"] = d.fiber_genus;
    j["genus"] = d.genus;
    j["puncture"] = json_of(d.puncture);
    Json sys;
    for (int s = 0; s < 3; ++s) {
        Json cs = Json::array();
        for (const auto& c : d.systems[static_cast<std::size_t>(s)])
            cs.push_back(curve_json(c));
        sys[kSystemNames[s]] = cs;
    }
    j["systems"] = sys;
    return j;
}

TrisectionDiagram diagram_from_document(const Json& j)
{
    check_header(j, "trisection_diagram");
    TrisectionDiagram d;
    d.params = params_from(j.at("params"));
    d.params.validate();
    d.slope = Slope::parse(j.at("slope").get<std::string>());
    d.subset = j.at("subset").get<std::vector<int>>();
    d.fiber_genus = j.at("fiber_genus").get<int>();
    d.genus = j.at("genus").get<int>();
    d.puncture = puncture_from_json(j.at("puncture"));
    for (int s = 0; s < 3; ++s)
        for (const auto& c : j.at("systems").at(kSystemNames[s]))
            d.systems[static_cast<std::size_t>(s)].push_back(curve_from(c));
    return d;
}

Json report_json(const Reduction& r, const Slope& input)
{
    Json j = header("slope_reduction");
    j["slope"] = slope_json(input);
    j["terminal"] = slope_json(r.terminal);
    Json w = Json::array();
    for (const auto& m : r.word.moves())
        w.push_back(m.str());
    j["word"] = w;
    j["length"] = r.word.size();
    return j;
}

Json report_json(const DerivativeReport& r)
{
    Json j = header("derivative_report");
    j["params"] = params_json(r.params);
    j["slope"] = slope_json(r.slope);
    j["components"] = r.components;
    j["subset"] = ints(r.subset);
    j["homology_rank"] = r.homology_rank;
    Json pieces = Json::array();
    for (const auto& c : r.complement)
        pieces.push_back(json_of(c));
    j["complement"] = pieces;
    j["complement_planar_connected"] = r.complement_planar_connected;
    j["deck_invariant"] = r.deck_invariant;
    j["linking"] = json_of(r.linking);
    j["linking_zero"] = r.linking_zero;
    j["verdict"] = r.verdict;
    return j;
}

Json report_json(const FramedLinkReport& r)
{
    Json j = header("framed_link_report");
    j["params"] = params_json(r.params);
    j["slope"] = slope_json(r.slope);
    j["n"] = r.n;
    j["lift_components"] = r.components;
    j["subset"] = ints(r.subset);
    j["framings"] = r.framings;
    j["summands"] = Json::array({summand_json(r.summands.first), summand_json(r.summands.second)});
    j["closure"] = report_json(r.closure);
    j["verdict"] = r.verdict;
    return j;
}

Json report_json(const SlidePath& path, bool valid)
{
    Json j = header("slide_path");
    j["from"] = path.from.str();
    j["to"] = path.to.str();
    Json steps = Json::array();
    for (const auto& e : path.steps)
        steps.push_back(e.str());
    j["steps"] = steps;
    j["length"] = path.length();
    j["valid"] = valid;
    return j;
}

Json report_json(const ClosureReport& r)
{
    Json j = header("closure_report");
    j["slope"] = slope_json(r.slope);
    j["components"] = r.components;
    j["two_bridge"] = Json::array({r.bridge_alpha.str(), r.bridge_beta.str()});
    j["unlink"] = r.unlink;
    j["branched_cover"] = r.branched_cover;
    j["brieskorn"] = r.brieskorn ? bigs({(*r.brieskorn)[0], (*r.brieskorn)[1], (*r.brieskorn)[2]}) : Json(nullptr);
    j["cover_reversed"] = r.cover_reversed;
    return j;
}

Json report_json(const TrisectionReport& r)
{
    Json j = header("trisection_report");
    j["genus"] = r.genus;
    j["fiber_genus"] = r.fiber_genus;
    j["trisection_parameters"] = Json::array({r.genus, 0, r.fiber_genus, r.fiber_genus});
    j["sizes_ok"] = r.sizes_ok;
    Json cut;
    for (int s = 0; s < 3; ++s)
        cut[kSystemNames[s]] = Json{{"cut_system", r.cut_system[static_cast<std::size_t>(s)]},
                                    {"rank_gf2", r.rank_gf2[static_cast<std::size_t>(s)]}};
    j["systems"] = cut;
    j["shared_beta_gamma"] = r.shared;
    j["standard_beta_gamma"] = r.standard_beta_gamma;
    j["intersections"] = Json{{"alpha_beta", Json{{"algebraic", json_of(r.alg_ab)}, {"geometric", json_of(r.geo_ab)}}},
                               {"beta_gamma", Json{{"algebraic", json_of(r.alg_bg)}, {"geometric", json_of(r.geo_bg)}}},
                               {"alpha_gamma", Json{{"algebraic", json_of(r.alg_ag)}, {"geometric", json_of(r.geo_ag)}}}};
    j["det_alpha_beta"] = r.det_ab.str();
    j["unimodular"] = r.unimodular;
    j["sphere_recognition"] = "not attempted; unimodularity of the alpha/beta matrix is the proxy";
    j["parity_consistent"] = r.parity_consistent;
    j["failures"] = r.failures;
    j["ok"] = r.ok;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

struct Annulus {
    double cx, cy, r0, w;
    int faces;
};

std::pair<double, double> place(const Annulus& a, double x, double Y)
{
    const double kPi = 3.14159265358979323846;
    double th = 2.0 * kPi * Y / a.faces;
    double r = a.r0 + a.w * x;
    return {a.cx + r * std::cos(th), a.cy - r * std::sin(th)};
}

std::string fmt2(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void draw_grid(std::ostringstream& os, const Annulus& a)
{
    os << "<g id=\"cells\" stroke=\"#bbbbbb\" fill=\"none\" stroke-width=\"0.5\">\n";
    os << "<circle cx=\"" << fmt2(a.cx) << "\" cy=\"" << fmt2(a.cy) << "\" r=\"" << fmt2(a.r0) << "\"/>\n";
    os << "<circle cx=\"" << fmt2(a.cx) << "\" cy=\"" << fmt2(a.cy) << "\" r=\"" << fmt2(a.r0 + a.w) << "\"/>\n";
    for (int f = 0; f < a.faces; ++f) {
        auto [x0, y0] = place(a, 0.0, f);
        auto [x1, y1] = place(a, 1.0, f);
        os << "<line x1=\"" << fmt2(x0) << "\" y1=\"" << fmt2(y0) << "\" x2=\"" << fmt2(x1) << "\" y2=\"" << fmt2(y1)
           << "\"/>\n";
    }
    os << "</g>\n";
}

void draw_path(std::ostringstream& os, const FiberComplex& fc, const Annulus& a, const Path& p)
{
    os << "<polyline fill=\"none\" points=\"";
    bool first = true;
    std::size_t n = p.pts.size();
    for (std::size_t i = 0; i < p.segments(); ++i) {
        int f = p.faces[i];
        Vec2 u = fc.local(f, p.pts[i]);
        Vec2 v = fc.local(f, p.pts[(i + 1) % n]);
        for (int k = first ? 0 : 1; k <= 8; ++k) {
            double s = k / 8.0;
            double x = (1 - s) * u.x.to_double() + s * v.x.to_double();
            double y = (1 - s) * u.y.to_double() + s * v.y.to_double();
            auto [px, py] = place(a, x, f + y);
            os << (first && k == 0 ? "" : " ") << fmt2(px) << "," << fmt2(py);
        }
        first = false;
    }
    os << "\"/>\n";
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

} // namespace

std::string multicurve_svg(const FiberComplex& fc, const Multicurve& m)
{
    Annulus a{300, 300, 120, 150, static_cast<int>(fc.faces.size())};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    draw_grid(os, a);
    os << "<g id=\"curves\" stroke-width=\"1.2\">\n";
    for (std::size_t c = 0; c < m.size(); ++c) {
        os << "<g id=\"component-" << c << "\" stroke=\"" << kPalette[c % 8] << "\">\n";
        draw_path(os, fc, a, m.components[c]);
        os << "</g>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string diagram_svg(const FiberComplex& fc, const TrisectionDiagram& d)
{
    int nf = static_cast<int>(fc.faces.size());
    Annulus left{300, 300, 120, 150, nf}, right{900, 300, 120, 150, nf};
    const char* colour[3] = {"#d62728", "#1f77b4", "#2ca02c"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1200\" height=\"600\" viewBox=\"0 0 1200 600\">\n";
    draw_grid(os, left);
    draw_grid(os, right);
    for (int s = 0; s < 3; ++s) {
        os << "<g id=\"" << kSystemNames[s] << "\" stroke=\"" << colour[s] << "\" stroke-width=\"1\">\n";
        for (const auto& c : d.systems[static_cast<std::size_t>(s)]) {
            draw_path(os, fc, left, c.f0);
            if (c.has_f1)
                draw_path(os, fc, right, c.f1);
        }
        os << "</g>\n";
    }
    Vec2 pl = d.puncture.p;
    for (const Annulus* a : {&left, &right}) {
        auto [px, py] = place(*a, pl.x.to_double(), d.puncture.face + pl.y.to_double());
        os << "<circle id=\"puncture\" cx=\"" << fmt2(px) << "\" cy=\"" << fmt2(py) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace gsq

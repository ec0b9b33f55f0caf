#include "gsq/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

using namespace gsq;

namespace {

struct RunConfig {
    int p = 3, q = 2;
    std::string slope = "0/1";
    std::string format;
    std::string out;
    std::string svg;
};

int emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + cfg.out);
    f << text;
    return 0;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << text;
}

TorusParams params_of(const RunConfig& cfg)
{
    TorusParams t{cfg.p, cfg.q};
    t.validate();
    return t;
}

bool want_json(const RunConfig& cfg, bool json_default)
{
    if (cfg.format.empty())
        return json_default;
    if (cfg.format == "json")
        return true;
    if (cfg.format == "text")
        return false;
    throw ParseError("format must be json or text here, got " + cfg.format);
}

std::string census_str(const std::vector<ComplementPiece>& pieces)
{
    std::map<ComplementPiece, int> count;
    for (const auto& c : pieces)
        ++count[c];
    std::string s;
    for (auto it = count.rbegin(); it != count.rend(); ++it) {
        if (!s.empty())
            s += " + ";
        const ComplementPiece& c = it->first;
        std::string surf = c.genus == 0 ? "sphere" : "genus-" + std::to_string(c.genus);
        s += std::to_string(it->second) + "x(" + surf + "," + std::to_string(c.boundary) + " boundary)";
    }
    return s;
}

std::vector<std::size_t> orbit_lengths(const std::vector<int>& perm)
{
    std::vector<char> seen(perm.size(), 0);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    return out;
}

int cmd_slope(const std::string& op, const std::vector<std::string>& args, const RunConfig& cfg)
{
    bool js = want_json(cfg, false);
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw ParseError("slope " + op + " takes " + std::to_string(n) + " argument(s)");
    };
    if (op == "intersect") {
        need(2);
        Slope a = Slope::parse(args[0]), b = Slope::parse(args[1]);
        BigInt i = intersection_number(a, b);
        if (js) {
            Json j{{"schema_version", kSchemaVersion}, {"kind", "slope_intersection"}};
            j["slopes"] = Json::array({args[0], args[1]});
            j["intersection"] = i.str();
            return emit(cfg, dump(j));
        }
        return emit(cfg, i.str() + "\n");
    }
    if (op == "twist") {
        need(2);
        TwistMove m = parse_move(args[0]);
        Slope s = Slope::parse(args[1]);
        Slope r = apply_twist(m, s);
        std::string rs = r.is_inf() ? "inf" : r.str();
        if (js) {
            Json j{{"schema_version", kSchemaVersion}, {"kind", "slope_twist"}, {"move", m.str()}, {"result", rs}};
            j["slope"] = args[1];
            return emit(cfg, dump(j));
        }
        return emit(cfg, rs + "\n");
    }
    if (op == "reduce") {
        need(1);
        Slope s = Slope::parse(args[0]);
        Reduction r = reduce(s);
        if (apply_word(r.word, s) != r.terminal)
            throw std::logic_error("reduction does not round-trip");
        if (js)
            return emit(cfg, dump(report_json(r, s)));
        std::string t = r.terminal.is_inf() ? "inf" : r.terminal.str();
        return emit(cfg, "terminal " + t + "\nword " + (r.word.empty() ? std::string("1") : r.word.str()) + "\n");
    }
    throw ParseError("unknown slope operation " + op);
}

int cmd_fiber(const RunConfig& cfg)
{
    FiberComplex fc = build_fiber(params_of(cfg));
    return emit(cfg, dump(fiber_document(fc)));
}

int cmd_lift(const RunConfig& cfg, bool census_only, bool curves)
{
    TorusParams t = params_of(cfg);
    FiberComplex fc = build_fiber(t);
    Slope s = Slope::parse(cfg.slope);
    Multicurve m = lift_slope(fc, s);
    validate_multicurve(fc, m);
    auto pieces = complement_components(fc, m);
    std::sort(pieces.begin(), pieces.end());
    auto orbits = orbit_lengths(deck_permutation(fc, m, 1));
    if (!cfg.svg.empty())
        write_file(cfg.svg, multicurve_svg(fc, m));
    if (want_json(cfg, false)) {
        Json j{{"schema_version", kSchemaVersion}, {"kind", "lift_report"}};
        j["params"] = Json{{"p", t.p}, {"q", t.q}};
        j["slope"] = s.is_inf() ? "inf" : s.str();
        j["components"] = m.size();
        Json cj = Json::array();
        for (const auto& c : pieces)
            cj.push_back(json_of(c));
        j["census"] = cj;
        j["deck_orbits"] = orbits;
        if (curves)
            j["multicurve"] = multicurve_document(fc, m);
        return emit(cfg, dump(j));
    }
    std::string text;
    if (!census_only) {
        text += "components " + std::to_string(m.size()) + "\n";
        std::string o;
        for (auto len : orbits)
            o += (o.empty() ? "" : " ") + std::to_string(len);
        text += "deck orbits " + o + "\n";
    }
    text += "census " + census_str(pieces) + "\n";
    return emit(cfg, text);
}

int cmd_derivative(const RunConfig& cfg, bool framed)
{
    TorusParams t = params_of(cfg);
    Slope s = Slope::parse(cfg.slope);
    if (framed) {
        FramedLinkReport r = framed_link_report(t, s);
        emit(cfg, dump(report_json(r)));
        return r.verdict ? 0 : 1;
    }
    FiberComplex fc = build_fiber(t);
    SeifertData sd = match_seifert(fc, compute_seifert_matrix(t));
    DerivativeReport r = derivative_for(fc, sd, s);
    emit(cfg, dump(report_json(r)));
    return r.verdict ? 0 : 1;
}

FareyEdge parse_edge(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("edge must be written a/b,c/d");
    Slope x = Slope::parse(text.substr(0, comma)), y = Slope::parse(text.substr(comma + 1));
    if (!is_edge(x, y))
        throw ParseError(text + " is not a Farey edge");
    return FareyEdge(x, y);
}

int cmd_farey(const std::string& op, const RunConfig& cfg, const std::string& from, const std::string& to)
{
    if (op == "summands") {
        TorusParams t = params_of(cfg);
        auto [x, y] = summand_slopes(t);
        bool ok = summand_conditions(t, x, y);
        if (want_json(cfg, true)) {
            Json j{{"schema_version", kSchemaVersion}, {"kind", "summand_slopes"}};
            j["params"] = Json{{"p", t.p}, {"q", t.q}};
            j["summands"] = Json::array({Json{{"r", x.r}, {"s", x.s}}, Json{{"r", y.r}, {"s", y.s}}});
            j["conditions_hold"] = ok;
            emit(cfg, dump(j));
        } else {
            emit(cfg, "(" + std::to_string(x.r) + "," + std::to_string(x.s) + "),(" + std::to_string(y.r) + "," +
                          std::to_string(y.s) + ")\n");
        }
        return ok ? 0 : 1;
    }
    if (op == "path") {
        FareyEdge a, b = FareyEdge(slope_zero(), slope_inf());
        if (!from.empty()) {
            a = parse_edge(from);
        } else {
            TorusParams t = params_of(cfg);
            auto [x, y] = summand_slopes(t);
            (void)y;
            a = FareyEdge(Slope(t.p, t.q), Slope(x.r, x.s));
        }
        if (!to.empty())
            b = parse_edge(to);
        SlidePath path = slide_path(a, b);
        bool ok = validate_slide_path(path);
        emit(cfg, dump(report_json(path, ok)));
        return ok ? 0 : 1;
    }
    if (op == "closure") {
        Slope s = Slope::parse(cfg.slope);
        ClosureReport r = rational_closure(s, params_of(cfg));
        return emit(cfg, dump(report_json(r)));
    }
    throw ParseError("unknown farey operation " + op);
}

int cmd_trisect(const RunConfig& cfg, const std::string& verify_path, const std::string& diagram_out, bool report)
{
    if (!verify_path.empty()) {
        std::ifstream f(verify_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot read " + verify_path);
        TrisectionDiagram d = diagram_from_document(Json::parse(f));
        FiberComplex fc = build_fiber(d.params);
        TrisectionReport r = verify_trisection_diagram(fc, d);
        emit(cfg, dump(report_json(r)));
        return r.ok ? 0 : 1;
    }
    TorusParams t = params_of(cfg);
    Slope s = Slope::parse(cfg.slope);
    FiberComplex fc = build_fiber(t);
    SeifertData sd = match_seifert(fc, compute_seifert_matrix(t));
    TrisectionDiagram d = trisection_for(fc, sd, s);
    TrisectionReport r = verify_trisection_diagram(fc, d);
    if (!cfg.svg.empty())
        write_file(cfg.svg, diagram_svg(fc, d));
    if (!diagram_out.empty())
        write_file(diagram_out, dump(diagram_document(d)));
    if (cfg.format == "svg") {
        emit(cfg, diagram_svg(fc, d));
    } else {
        Json j = diagram_document(d);
        if (report)
            j = Json{{"schema_version", kSchemaVersion}, {"kind", "trisection"}, {"diagram", j},
                     {"report", report_json(r)}};
        emit(cfg, dump(j));
    }
    if (!r.ok)
        for (const auto& f : r.failures)
            std::cerr << "check failed: " << f << "\n";
    return r.ok ? 0 : 1;
}

const std::vector<TorusParams> kGrid = {{3, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3}};

struct Cell {
    std::size_t grid;
    Slope slope;
};

int cmd_verify_grid(const RunConfig& cfg, int bound, unsigned threads)
{
    if (bound < 0) {
        const char* env = std::getenv("GSQ_GRID_BOUND");
        bound = env ? std::atoi(env) : 4;
    }
    if (bound < 1 || bound > 64)
        throw ParseError("grid bound must lie in 1..64");
    std::vector<FiberComplex> fibers;
    std::vector<SeifertData> seifert;
    for (const auto& t : kGrid) {
        fibers.push_back(build_fiber(t));
        seifert.push_back(match_seifert(fibers.back(), compute_seifert_matrix(t)));
    }
    std::vector<Cell> cells;
    for (std::size_t g = 0; g < kGrid.size(); ++g)
        for (int d = 0; d <= bound; ++d)
            for (int c = -bound; c <= bound; ++c) {
                if (std::gcd(c, d) != 1 || (d == 0 && c != 1))
                    continue;
                cells.push_back({g, Slope(c, d)});
            }
    std::vector<Json> rows(cells.size());
    std::vector<std::string> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            const Cell& cell = cells[i];
            const FiberComplex& fc = fibers[cell.grid];
            const TorusParams& t = kGrid[cell.grid];
            Json row{{"p", t.p}, {"q", t.q}, {"slope", cell.slope.is_inf() ? "inf" : cell.slope.str()}};
            try {
                Multicurve m = lift_slope(fc, cell.slope);
                std::size_t expect = cell.slope.numerator_even() ? static_cast<std::size_t>(fc.N) : 1;
                row["components"] = m.size();
                row["parity"] = m.size() == expect;
                row["recognized"] = recognize_slope(fc, m) == cell.slope;
                bool ok = m.size() == expect && row["recognized"].get<bool>();
                if (cell.slope.numerator_even()) {
                    bool v = verify_derivative(fc, m, select_sublink(fc, m), seifert[cell.grid]).verdict;
                    row["derivative"] = v;
                    ok = ok && v;
                }
                row["ok"] = ok;
            } catch (const std::exception& e) {
                row["ok"] = false;
                errors[i] = e.what();
            }
            rows[i] = row;
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    Json j{{"schema_version", kSchemaVersion}, {"kind", "grid_verification"}, {"bound", bound}};
    Json farey = Json::array();
    bool ok = true;
    for (const auto& t : kGrid) {
        auto [x, y] = summand_slopes(t);
        SlidePath path = slide_path(FareyEdge(Slope(t.p, t.q), Slope(x.r, x.s)), FareyEdge(slope_zero(), slope_inf()));
        bool f = summand_conditions(t, x, y) && validate_slide_path(path);
        ok = ok && f;
        farey.push_back(Json{{"p", t.p}, {"q", t.q}, {"summands_and_path", f}, {"path_length", path.length()}});
    }
    Json failures = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i]["ok"].get<bool>()) {
            ok = false;
            Json f = rows[i];
            if (!errors[i].empty())
                f["error"] = errors[i];
            failures.push_back(f);
        }
    j["cells"] = rows;
    j["farey"] = farey;
    j["failures"] = failures;
    j["ok"] = ok;
    emit(cfg, dump(j));
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized square knot calculus: slopes, fiber lifts, derivatives, Farey paths, trisections"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub, bool params, bool slope) {
        if (params) {
            sub->add_option("-p", cfg.p, "torus knot parameter p")->capture_default_str();
            sub->add_option("-q", cfg.q, "torus knot parameter q")->capture_default_str();
        }
        if (slope)
            sub->add_option("-s,--slope", cfg.slope, "slope c/d, or inf")->capture_default_str();
        sub->add_option("--format", cfg.format, "json or text (svg for trisect)");
        sub->add_option("-o,--out", cfg.out, "write output to this file instead of stdout");
    };

    auto* slope = app.add_subcommand("slope", "slope arithmetic on the pillowcase");
    std::string slope_op;
    std::vector<std::string> slope_args;
    slope->add_option("op", slope_op, "intersect | twist | reduce")->required();
    slope->add_option("args", slope_args, "slopes, or axis^power followed by a slope");
    common(slope, false, false);

    auto* fiber = app.add_subcommand("fiber", "fiber complex as JSON");
    common(fiber, true, false);

    auto* lift = app.add_subcommand("lift", "lift a slope to the fiber");
    bool census_only = false, curves = false;
    lift->add_flag("--census", census_only, "print only the complement census");
    lift->add_flag("--curves", curves, "include the curves in JSON output");
    lift->add_option("--svg", cfg.svg, "render the lift to this SVG file");
    common(lift, true, true);

    auto* deriv = app.add_subcommand("derivative", "verify the derivative conditions for a lift");
    bool framed = false;
    deriv->add_flag("--framed", framed, "emit the framed link report");
    common(deriv, true, true);

    auto* farey = app.add_subcommand("farey", "Farey graph operations");
    std::string farey_op, from, to;
    farey->add_option("op", farey_op, "summands | path | closure")->required();
    farey->add_option("--from", from, "start edge a/b,c/d (default p/q with its summand slope)");
    farey->add_option("--to", to, "target edge (default 0/1,inf)");
    common(farey, true, true);

    auto* tri = app.add_subcommand("trisect", "build and verify a trisection diagram");
    std::string verify_path, diagram_out;
    bool with_report = false;
    tri->add_option("--verify", verify_path, "verify a diagram JSON file instead of building one");
    tri->add_option("--diagram", diagram_out, "also write the diagram JSON to this file");
    tri->add_option("--svg", cfg.svg, "render the diagram to this SVG file");
    tri->add_flag("--report", with_report, "bundle the verification report with the diagram");
    common(tri, true, true);

    auto* grid = app.add_subcommand("verify-grid", "batch property suite over the parameter grid");
    int bound = -1;
    unsigned threads = 0;
    grid->add_option("--bound", bound, "bound on |c| and |d| (default GSQ_GRID_BOUND or 4)");
    grid->add_option("--threads", threads, "worker threads (default: all cores)");
    common(grid, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        if (*slope)
            return cmd_slope(slope_op, slope_args, cfg);
        if (*fiber)
            return cmd_fiber(cfg);
        if (*lift)
            return cmd_lift(cfg, census_only, curves);
        if (*deriv)
            return cmd_derivative(cfg, framed);
        if (*farey)
            return cmd_farey(farey_op, cfg, from, to);
        if (*tri)
            return cmd_trisect(cfg, verify_path, diagram_out, with_report);
        if (*grid)
            return cmd_verify_grid(cfg, bound, threads);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedSlope& e) {
        std::cerr << "unsupported slope: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

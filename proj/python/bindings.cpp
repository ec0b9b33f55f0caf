#include "gsq/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gsq;

namespace {

std::string slope_text(const Slope& s) { return s.is_inf() ? "inf" : s.str(); }

TorusParams checked(int p, int q)
{
    TorusParams t{p, q};
    t.validate();
    return t;
}

struct Fiber {
    FiberComplex fc;
    SeifertData sd;
    explicit Fiber(int p, int q) : fc(build_fiber(checked(p, q))), sd(match_seifert(fc, compute_seifert_matrix({p, q}))) {}
};

} // namespace

PYBIND11_MODULE(_gsq, m)
{
    m.doc() = "Slopes, fiber lifts, derivatives, Farey paths and trisection diagrams";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedSlope>(m, "UnsupportedSlope", PyExc_ValueError);

    m.def("normalize_slope", [](const std::string& s) { return slope_text(Slope::parse(s)); });
    m.def("intersection_number", [](const std::string& a, const std::string& b) {
        return intersection_number(Slope::parse(a), Slope::parse(b)).str();
    });
    m.def("apply_twist", [](const std::string& move, const std::string& s) {
        return slope_text(apply_twist(parse_move(move), Slope::parse(s)));
    });
    m.def("reduce", [](const std::string& s) {
        Reduction r = reduce(Slope::parse(s));
        std::vector<std::string> w;
        for (const auto& mv : r.word.moves())
            w.push_back(mv.str());
        return py::make_tuple(slope_text(r.terminal), w);
    });

    py::class_<Fiber>(m, "Fiber")
        .def(py::init<int, int>(), py::arg("p"), py::arg("q"))
        .def_property_readonly("genus", [](const Fiber& f) { return f.fc.genus(); })
        .def_property_readonly("order", [](const Fiber& f) { return f.fc.N; })
        .def("document", [](const Fiber& f) { return dump(fiber_document(f.fc)); })
        .def("lift_document", [](const Fiber& f, const std::string& s) {
            return dump(multicurve_document(f.fc, lift_slope(f.fc, Slope::parse(s))));
        })
        .def("lift_components", [](const Fiber& f, const std::string& s) {
            return lift_slope(f.fc, Slope::parse(s)).size();
        })
        .def("recognize_lift", [](const Fiber& f, const std::string& s) {
            return slope_text(recognize_slope(f.fc, lift_slope(f.fc, Slope::parse(s))));
        })
        .def("census", [](const Fiber& f, const std::string& s) {
            std::vector<std::tuple<int, int, long long>> out;
            auto pieces = complement_components(f.fc, lift_slope(f.fc, Slope::parse(s)));
            std::sort(pieces.begin(), pieces.end());
            for (const auto& c : pieces)
                out.emplace_back(c.genus, c.boundary, c.euler);
            return out;
        })
        .def("derivative_report", [](const Fiber& f, const std::string& s) {
            return dump(report_json(derivative_for(f.fc, f.sd, Slope::parse(s))));
        })
        .def("trisection_diagram", [](const Fiber& f, const std::string& s) {
            return dump(diagram_document(trisection_for(f.fc, f.sd, Slope::parse(s))));
        })
        .def("seifert_matrix", [](const Fiber& f) { return dump(json_of(f.sd.matrix)); });

    m.def("framed_link_report", [](int p, int q, const std::string& s) {
        return dump(report_json(framed_link_report({p, q}, Slope::parse(s))));
    });
    m.def("summand_slopes", [](int p, int q) {
        auto [x, y] = summand_slopes({p, q});
        return py::make_tuple(py::make_tuple(x.r, x.s), py::make_tuple(y.r, y.s));
    });
    m.def("slide_path", [](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        SlidePath path = slide_path(FareyEdge(Slope::parse(a), Slope::parse(b)), FareyEdge(Slope::parse(c), Slope::parse(d)));
        return dump(report_json(path, validate_slide_path(path)));
    });
    m.def("verify_diagram", [](const std::string& text) {
        TrisectionDiagram d = diagram_from_document(Json::parse(text));
        FiberComplex fc = build_fiber(d.params);
        return dump(report_json(verify_trisection_diagram(fc, d)));
    });
}

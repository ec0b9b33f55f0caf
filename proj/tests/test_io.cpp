#include "doctest.h"

#include "gsq/io.hpp"

using namespace gsq;

TEST_CASE("path JSON round trip")
{
    FiberComplex fc = build_fiber({4, 3});
    Multicurve m = lift_slope(fc, Slope(-2, 3));
    Json j = json_of(m);
    Multicurve back = multicurve_from_json(Json::parse(j.dump()));
    CHECK(json_of(back) == j);
    CHECK(same_component_set(back, m));
    REQUIRE(back.slope.has_value());
    CHECK(*back.slope == Slope(-2, 3));
}

TEST_CASE("diagram serialization round-trips bit-exactly")
{
    FiberComplex fc = build_fiber({3, 2});
    SeifertData sd = match_seifert(fc, compute_seifert_matrix({3, 2}));
    TrisectionDiagram d = trisection_for(fc, sd, Slope(2, 1));
    std::string text = dump(diagram_document(d));
    TrisectionDiagram back = diagram_from_document(Json::parse(text));
    CHECK(dump(diagram_document(back)) == text);
    CHECK(verify_trisection_diagram(fc, back).ok);
}

TEST_CASE("documents are versioned")
{
    FiberComplex fc = build_fiber({3, 2});
    Json f = fiber_document(fc);
    CHECK(f["schema_version"] == kSchemaVersion);
    CHECK(f["cells"]["faces"].size() == fc.faces.size());
    CHECK(f["cells"]["edges"].size() == fc.edges.size());
    Json bad = Json::parse(R"({"schema_version": 99, "kind": "trisection_diagram"})");
    CHECK_THROWS(diagram_from_document(bad));
    Json wrong = Json::parse(R"({"schema_version": 1, "kind": "fiber_complex"})");
    CHECK_THROWS(diagram_from_document(wrong));
}

TEST_CASE("malformed paths are rejected")
{
    Json j = Json::parse(R"({"closed": true, "stations": [{"edge": 0, "t": "1/2"}], "faces": []})");
    CHECK_THROWS(path_from_json(j));
    Json q = Json::parse(R"(["1/0", "1/2"])");
    CHECK_THROWS(vec2_from_json(q));
}

TEST_CASE("svg output")
{
    FiberComplex fc = build_fiber({3, 2});
    SeifertData sd = match_seifert(fc, compute_seifert_matrix({3, 2}));
    TrisectionDiagram d = trisection_for(fc, sd, slope_zero());
    std::string svg = diagram_svg(fc, d);
    CHECK(svg.find("<g id=\"alpha\"") != std::string::npos);
    CHECK(svg.find("<g id=\"beta\"") != std::string::npos);
    CHECK(svg.find("<g id=\"gamma\"") != std::string::npos);
    CHECK(svg == diagram_svg(fc, d));
    std::string m = multicurve_svg(fc, lift_slope(fc, slope_zero()));
    CHECK(m.find("component-5") != std::string::npos);
}

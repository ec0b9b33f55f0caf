#pragma once

#include "gsq/derivative.hpp"
#include "gsq/farey.hpp"
#include "gsq/trisection.hpp"

#include "json.hpp"

#include <string>

namespace gsq {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// Rationals and slopes are strings ("n/d", "inf"); big integers are decimal strings.
Json json_of(const Q& v);
Json json_of(const Vec2& v);
Json json_of(const Station& s);
Json json_of(const Path& p);
Json json_of(const Multicurve& m);
Json json_of(const Puncture& p);
Json json_of(const IntMatrix& m);
Json json_of(const ComplementPiece& c);

Q q_from_json(const Json& j);
Vec2 vec2_from_json(const Json& j);
Station station_from_json(const Json& j);
Path path_from_json(const Json& j);
Multicurve multicurve_from_json(const Json& j);
Puncture puncture_from_json(const Json& j);

// Documents, each carrying schema_version and kind.
Json fiber_document(const FiberComplex& fc);
Json multicurve_document(const FiberComplex& fc, const Multicurve& m);
Json arcs_document(const ArcSystem& arcs);
Json diagram_document(const TrisectionDiagram& d);
TrisectionDiagram diagram_from_document(const Json& j);

Json report_json(const Reduction& r, const Slope& input);
Json report_json(const DerivativeReport& r);
Json report_json(const FramedLinkReport& r);
Json report_json(const SlidePath& path, bool valid);
Json report_json(const ClosureReport& r);
Json report_json(const TrisectionReport& r);

// Deterministic text form used on stdout and in files.
std::string dump(const Json& j);

// Annulus picture of the fiber: x is the radius, the face stack is the angle.
std::string multicurve_svg(const FiberComplex& fc, const Multicurve& m);
// Two annuli (F_0 and F_1/2) with the alpha, beta and gamma systems in separate layers.
std::string diagram_svg(const FiberComplex& fc, const TrisectionDiagram& d);

} // namespace gsq

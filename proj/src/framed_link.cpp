#include "gsq/derivative.hpp"

namespace gsq {

FramedLinkReport framed_link_report(const TorusParams& params, const Slope& s)
{
    params.validate();
    if (!s.numerator_even())
        throw UnsupportedSlope("slope " + s.str() + " has odd numerator; its lift is a single separating curve");
    FiberComplex fc = build_fiber(params);
    SeifertData sd = match_seifert(fc, compute_seifert_matrix(params));
    DerivativeReport d = derivative_for(fc, sd, s);
    FramedLinkReport r;
    r.params = params;
    r.slope = s;
    r.n = fc.genus();
    r.components = d.components;
    r.subset = d.subset;
    // surface framing: linking of each component with its pushoff in the fiber
    for (std::size_t i = 0; i < d.linking.size(); ++i)
        r.framings.push_back(d.linking[i][i].convert_to<long long>());
    r.summands = summand_slopes(params);
    r.closure = rational_closure(s, params);
    r.verdict = d.verdict;
    return r;
}

} // namespace gsq

#include "gsq/derivative.hpp"

#include <algorithm>

namespace gsq {

Multicurve sub_multicurve(const Multicurve& m, const std::vector<int>& subset)
{
    Multicurve out;
    for (int i : subset)
        out.components.push_back(m.components.at(static_cast<std::size_t>(i)));
    return out;
}

std::vector<int> select_sublink(const FiberComplex& fc, const Multicurve& lift)
{
    if (static_cast<int>(lift.size()) != fc.N)
        throw UnsupportedSlope("sublink selection needs a lift with pq components");
    std::size_t g = static_cast<std::size_t>(fc.genus());
    IntMatrix classes = homology_classes(fc, lift);
    // disjoint curves are nonseparating iff independent mod 2, so the greedy basis is the least valid set
    Gf2Basis span(classes.empty() ? 0 : classes[0].size());
    std::vector<int> chosen;
    for (std::size_t i = 0; i < classes.size() && chosen.size() < g; ++i)
        if (span.insert(classes[i]))
            chosen.push_back(static_cast<int>(i));
    if (chosen.size() != g)
        throw std::logic_error("lift does not contain a nonseparating sublink of size g");
    auto pieces = complement_components(fc, sub_multicurve(lift, chosen));
    if (pieces.size() != 1 || pieces[0].genus != 0)
        throw std::logic_error("selected sublink does not cut the fiber into a planar surface");
    return chosen;
}

DerivativeReport verify_derivative(const FiberComplex& fc, const Multicurve& lift, const std::vector<int>& subset,
                                   const SeifertData& seifert)
{
    if (seifert.block.empty())
        throw std::invalid_argument("Seifert data is not matched to the fiber");
    DerivativeReport r;
    r.params = fc.params;
    if (lift.slope)
        r.slope = *lift.slope;
    r.components = lift.size();
    r.subset = subset;
    Multicurve sub = sub_multicurve(lift, subset);
    IntMatrix A = homology_classes(fc, sub);
    r.homology_rank = A.empty() ? 0 : rank_q(A);
    r.complement = complement_components(fc, sub);
    r.complement_planar_connected = r.complement.size() == 1 && r.complement[0].genus == 0;
    try {
        deck_permutation(fc, lift, 1);
        r.deck_invariant = true;
    } catch (const std::runtime_error&) {
        r.deck_invariant = false;
    }
    r.linking = A.empty() ? IntMatrix{} : multiply(multiply(A, seifert.block), transpose(A));
    r.linking_zero = is_zero(r.linking);
    r.verdict = r.homology_rank == static_cast<std::size_t>(fc.genus()) && subset.size() == r.homology_rank &&
                r.complement_planar_connected && r.deck_invariant && r.linking_zero;
    return r;
}

DerivativeReport derivative_for(const FiberComplex& fc, const SeifertData& seifert, const Slope& s)
{
    if (!s.numerator_even())
        throw UnsupportedSlope("slope " + s.str() + " has odd numerator; its lift is a single separating curve");
    Multicurve lift = lift_slope(fc, s);
    return verify_derivative(fc, lift, select_sublink(fc, lift), seifert);
}

} // namespace gsq

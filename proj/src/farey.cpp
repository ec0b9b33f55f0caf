#include "gsq/farey.hpp"

#include <algorithm>
#include <array>

namespace gsq {

void TorusParams::validate() const
{
    if (q < 2 || p <= q)
        throw ParameterError("need 2 <= q < p, got " + str());
    int a = p, b = q;
    while (b != 0) {
        int t = a % b;
        a = b;
        b = t;
    }
    if (a != 1)
        throw ParameterError("p and q must be coprime, got " + str());
    if (p * q > 4096)
        throw ParameterError("pq too large: " + str());
}

FareyEdge::FareyEdge(const Slope& x, const Slope& y) : u(x), v(y)
{
    if (!is_edge(x, y))
        throw std::invalid_argument("not a Farey edge: " + x.str() + ", " + y.str());
    if (v < u)
        std::swap(u, v);
}

bool is_edge(const Slope& s1, const Slope& s2)
{
    return babs(s1.num() * s2.den() - s1.den() * s2.num()) == 1;
}

std::pair<Slope, Slope> mediants(const FareyEdge& e)
{
    return {Slope(e.u.num() + e.v.num(), e.u.den() + e.v.den()),
            Slope(e.u.num() - e.v.num(), e.u.den() - e.v.den())};
}

std::vector<FareyEdge> slide_neighbours(const FareyEdge& e)
{
    auto [m1, m2] = mediants(e);
    return {FareyEdge(e.u, m1), FareyEdge(e.v, m1), FareyEdge(e.u, m2), FareyEdge(e.v, m2)};
}

bool summand_conditions(const TorusParams& params, const SummandSlope& x, const SummandSlope& y)
{
    auto ok = [&](const SummandSlope& z) { return 0 < z.r && z.r < params.p && 0 < z.s && z.s < params.q; };
    auto one = [](long long v) { return v == 1 || v == -1; };
    long long p = params.p, q = params.q;
    return ok(x) && ok(y) && one(p * x.s - q * x.r) && one(p * y.s - q * y.r) &&
           one(x.r * y.s - x.s * y.r) && !(x == y);
}

std::pair<SummandSlope, SummandSlope> summand_slopes(const TorusParams& params)
{
    params.validate();
    long long p = params.p, q = params.q;
    // p*s - q*r = 1 via extended Euclid for the inverse of p mod q
    long long old_r = p % q, r = q, old_s = 1, s = 0;
    while (r != 0) {
        long long t = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - t * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - t * s);
    }
    long long s1 = ((old_s % q) + q) % q;
    long long r1 = (p * s1 - 1) / q;
    SummandSlope x{r1, s1}, y{p - r1, q - s1};
    if (x.r < y.r)
        std::swap(x, y);
    if (!summand_conditions(params, x, y))
        throw std::logic_error("summand slope conditions failed for " + params.str());
    return {x, y};
}

namespace {

BigInt weight(const Slope& s) { return babs(s.num()) + s.den(); }

// Descent toward {0/1, 1/0}: replace the heavier endpoint by the lighter third vertex.
std::vector<FareyEdge> descent(const FareyEdge& start)
{
    const FareyEdge root;
    std::vector<FareyEdge> chain{start};
    while (!(chain.back() == root)) {
        const FareyEdge& e = chain.back();
        BigInt wu = weight(e.u), wv = weight(e.v);
        bool drop_v = wv > wu || (wv == wu && e.v.den() >= e.u.den());
        const Slope& keep = drop_v ? e.u : e.v;
        auto [sum, diff] = mediants(e);
        FareyEdge next(keep, weight(sum) < weight(diff) ? sum : diff);
        if (std::max(weight(next.u), weight(next.v)) >= std::max(wu, wv) && !(next == root))
            throw std::logic_error("Farey descent did not decrease at " + e.str());
        chain.push_back(next);
    }
    return chain;
}

bool share_triangle(const FareyEdge& x, const FareyEdge& y)
{
    if (x == y)
        return false;
    for (const auto& n : slide_neighbours(x))
        if (n == y)
            return true;
    return false;
}

} // namespace

SlidePath slide_path(const FareyEdge& from, const FareyEdge& to)
{
    SlidePath path{from, to, {}};
    if (from == to)
        return path;
    auto up = descent(from);
    auto down = descent(to);
    while (up.size() >= 2 && down.size() >= 2 && up[up.size() - 2] == down[down.size() - 2]) {
        up.pop_back();
        down.pop_back();
    }
    // up.back() == down.back() is the meeting edge
    std::vector<FareyEdge> seq(up.begin(), up.end());
    for (auto it = down.rbegin() + 1; it != down.rend(); ++it)
        seq.push_back(*it);
    std::vector<FareyEdge> trimmed;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!trimmed.empty() && i + 1 < seq.size() && share_triangle(trimmed.back(), seq[i + 1]) &&
            i + 1 == up.size()) {
            continue;
        }
        trimmed.push_back(seq[i]);
    }
    path.steps.assign(trimmed.begin() + 1, trimmed.end());
    return path;
}

bool validate_slide_path(const SlidePath& path)
{
    FareyEdge cur = path.from;
    for (const auto& e : path.steps) {
        if (!share_triangle(cur, e))
            return false;
        cur = e;
    }
    return cur == path.to;
}

ClosureReport rational_closure(const Slope& s, const std::optional<TorusParams>& params)
{
    if (!s.numerator_even())
        throw std::invalid_argument("rational closure needs an even numerator, got " + s.str());
    ClosureReport r;
    r.slope = s;
    r.bridge_alpha = babs(s.num());
    if (s.num() == 0) {
        r.unlink = true;
        r.bridge_beta = 1;
    } else {
        BigInt beta = s.num() > 0 ? BigInt(s.den()) : BigInt(-s.den());
        beta %= r.bridge_alpha;
        if (beta < 0)
            beta += r.bridge_alpha;
        r.bridge_beta = beta;
    }
    if (params) {
        params->validate();
        if (s.num() == 0) {
            r.branched_cover = "#^" + std::to_string(params->genus()) + "(S1xS2)";
        } else if (s.den() == 1) {
            BigInt n = babs(s.num()) / 2;
            r.brieskorn = std::array<BigInt, 3>{BigInt(params->p), BigInt(params->q), n};
            r.cover_reversed = s.num() < 0;
            r.branched_cover = std::string(r.cover_reversed ? "-" : "") + "Sigma(" +
                               std::to_string(params->p) + "," + std::to_string(params->q) + "," +
                               n.str() + ")";
        } else {
            r.branched_cover = "pq-fold cyclic branched cover of K[" + s.str() + "]";
        }
    }
    return r;
}

} // namespace gsq

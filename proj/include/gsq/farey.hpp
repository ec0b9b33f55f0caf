#pragma once

#include <array>

#include "gsq/params.hpp"
#include "gsq/slope.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gsq {

// Unordered pair of adjacent slopes, stored with u < v.
struct FareyEdge {
    Slope u, v;
    FareyEdge() : u(slope_zero()), v(slope_inf()) {}
    FareyEdge(const Slope& x, const Slope& y);
    bool contains(const Slope& s) const { return s == u || s == v; }
    std::string str() const { return "{" + u.str() + ", " + v.str() + "}"; }
    friend bool operator==(const FareyEdge& x, const FareyEdge& y) { return x.u == y.u && x.v == y.v; }
    friend bool operator<(const FareyEdge& x, const FareyEdge& y)
    {
        return x.u < y.u || (x.u == y.u && x.v < y.v);
    }
};

bool is_edge(const Slope& s1, const Slope& s2);

// Third vertices of the two triangles on e: sum and difference.
std::pair<Slope, Slope> mediants(const FareyEdge& e);

// One arc-slide away: the four edges sharing a triangle with e.
std::vector<FareyEdge> slide_neighbours(const FareyEdge& e);

struct SummandSlope {
    long long r, s;
    friend bool operator==(const SummandSlope&, const SummandSlope&) = default;
};

std::pair<SummandSlope, SummandSlope> summand_slopes(const TorusParams& params);
bool summand_conditions(const TorusParams& params, const SummandSlope& x, const SummandSlope& y);

struct SlidePath {
    FareyEdge from, to;
    std::vector<FareyEdge> steps;
    std::size_t length() const { return steps.size(); }
};

SlidePath slide_path(const FareyEdge& from, const FareyEdge& to);
bool validate_slide_path(const SlidePath& path);

struct ClosureReport {
    Slope slope;
    int components = 2;
    BigInt bridge_alpha, bridge_beta;
    bool unlink = false;
    std::string branched_cover;
    std::optional<std::array<BigInt, 3>> brieskorn;
    bool cover_reversed = false;
};

ClosureReport rational_closure(const Slope& s, const std::optional<TorusParams>& params = std::nullopt);

} // namespace gsq

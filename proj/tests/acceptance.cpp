// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "gsq/io.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace gsq;

namespace {

const std::vector<TorusParams> kGrid = {{3, 2}, {4, 3}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3}};

std::vector<Slope> slopes_up_to(long long bound, bool even_only = false)
{
    std::vector<Slope> out;
    for (long long d = 0; d <= bound; ++d)
        for (long long c = -bound; c <= bound; ++c) {
            if (std::gcd(std::llabs(c), d) != 1 || (d == 0 && c != 1))
                continue;
            if (even_only && c % 2 != 0)
                continue;
            out.emplace_back(c, d);
        }
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct Fibers {
    std::vector<FiberComplex> fc;
    std::vector<SeifertData> sd;
    Fibers()
    {
        for (const auto& t : kGrid) {
            fc.push_back(build_fiber(t));
            sd.push_back(match_seifert(fc.back(), compute_seifert_matrix(t)));
        }
    }
};

Outcome lift_parity(const Fibers& F)
{
    Outcome o;
    for (std::size_t g = 0; g < kGrid.size(); ++g)
        for (const Slope& s : slopes_up_to(12)) {
            Multicurve m = lift_slope(F.fc[g], s);
            std::size_t want = s.numerator_even() ? static_cast<std::size_t>(F.fc[g].N) : 1;
            if (m.size() != want)
                o.fail(kGrid[g].str() + " " + s.str() + ": " + std::to_string(m.size()) + " components");
        }
    return o;
}

Outcome genus_census(const Fibers& F)
{
    Outcome o;
    for (std::size_t g = 0; g < kGrid.size(); ++g) {
        const FiberComplex& fc = F.fc[g];
        const TorusParams& t = kGrid[g];
        long long chi = static_cast<long long>(fc.vertices.size()) - static_cast<long long>(fc.edges.size()) +
                        static_cast<long long>(fc.faces.size());
        if (fc.genus() != (t.p - 1) * (t.q - 1) || chi != 2 - 2 * fc.genus())
            o.fail(t.str() + ": genus");
        auto pieces = complement_components(fc, lift_slope(fc, slope_zero()));
        int a = 0, b = 0;
        for (const auto& c : pieces) {
            a += c.genus == 0 && c.boundary == t.p;
            b += c.genus == 0 && c.boundary == t.q;
        }
        if (pieces.size() != static_cast<std::size_t>(t.p + t.q) || a != t.q || b != t.p)
            o.fail(t.str() + ": census");
    }
    return o;
}

Slope random_slope(std::mt19937_64& rng, long long bound)
{
    std::uniform_int_distribution<long long> A(-bound, bound), B(0, bound);
    for (;;) {
        long long a = A(rng), b = B(rng);
        if (std::gcd(std::llabs(a), b) == 1 && !(b == 0 && a != 1))
            return Slope(a, b);
    }
}

Outcome slope_invariants()
{
    Outcome o;
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<long long> P(-5, 5);
    for (int it = 0; it < 10000;) {
        BigInt n = P(rng);
        if (n == 0)
            continue;
        ++it;
        TwistMove m{random_slope(rng, 10), n};
        Slope s = random_slope(rng, 1000), u = random_slope(rng, 1000);
        Slope t = apply_twist(m, s);
        if (apply_twist(m.inverse(), t) != s || t.numerator_even() != s.numerator_even() ||
            intersection_number(t, apply_twist(m, u)) != intersection_number(s, u))
            o.fail("twist invariant at " + m.str() + " on " + s.str());
    }
    // every reduced slope with |a|, b <= 10^4, enumerated as Stern-Brocot mediants
    const std::int64_t N = 10000;
    SmallReduction r;
    long long count = 0;
    auto check = [&](std::int64_t a, std::int64_t b) {
        ++count;
        reduce_small(a, b, r);
        bool even = a % 2 == 0;
        bool terminal_ok = even ? (r.a == 0 && r.b == 1) : ((r.a == 1 && r.b == 0) || (r.a == 1 && r.b == 1));
        std::int64_t x = r.a, y = r.b;
        for (auto it = r.moves.rbegin(); it != r.moves.rend(); ++it)
            apply_small(it->axis, -it->power, x, y);
        if (!terminal_ok || x != a || y != b)
            o.fail("reduce round trip at " + std::to_string(a) + "/" + std::to_string(b));
    };
    check(0, 1);
    check(1, 0);
    struct F {
        std::int64_t a, b;
    };
    std::vector<std::pair<F, F>> stack{{{0, 1}, {1, 0}}};
    while (!stack.empty()) {
        auto [l, rr] = stack.back();
        stack.pop_back();
        F m{l.a + rr.a, l.b + rr.b};
        if (m.a > N || m.b > N)
            continue;
        check(m.a, m.b);
        check(-m.a, m.b);
        stack.push_back({l, m});
        stack.push_back({m, rr});
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count) + " slopes reduced";
    return o;
}

Outcome twist_lift(const Fibers& F)
{
    Outcome o;
    for (std::size_t g = 0; g < kGrid.size(); ++g)
        for (const Slope& s : slopes_up_to(6)) {
            Multicurve m = lift_slope(F.fc[g], s);
            if (recognize_slope(F.fc[g], apply_tilde_tau0(F.fc[g], m, 1)) != apply_twist({slope_zero(), 1}, s))
                o.fail(kGrid[g].str() + " tau0 at " + s.str());
            if (recognize_slope(F.fc[g], apply_tilde_tau_inf(F.fc[g], m, 1)) != apply_twist({slope_inf(), 1}, s))
                o.fail(kGrid[g].str() + " tau_inf at " + s.str());
        }
    return o;
}

Outcome intersection_scaling(const Fibers& F, long long bound)
{
    Outcome o;
    auto s = slopes_up_to(bound);
    for (std::size_t g = 0; g < kGrid.size(); ++g) {
        std::vector<Multicurve> lifts;
        for (const auto& x : s)
            lifts.push_back(lift_slope(F.fc[g], x));
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                long long n = intersection_count(F.fc[g], lifts[i], lifts[j]);
                if (BigInt(n) != BigInt(F.fc[g].N) * intersection_number(s[i], s[j]))
                    o.fail(kGrid[g].str() + " " + s[i].str() + " x " + s[j].str());
            }
    }
    o.detail = "slopes with |c|,|d| <= " + std::to_string(bound) + (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome derivative_grid(const Fibers& F)
{
    Outcome o;
    for (std::size_t g = 0; g < kGrid.size(); ++g)
        for (const Slope& s : slopes_up_to(8, true))
            if (!derivative_for(F.fc[g], F.sd[g], s).verdict)
                o.fail(kGrid[g].str() + " " + s.str());
    for (const Slope& s : {Slope(-2, 3), Slope(-4, 5), Slope(-6, 7)})
        if (!derivative_for(F.fc[0], F.sd[0], s).verdict)
            o.fail("(3,2) " + s.str());
    return o;
}

Outcome alexander(const Fibers& F)
{
    Outcome o;
    for (std::size_t g = 0; g < kGrid.size(); ++g)
        if (alexander_polynomial(F.sd[g].matrix) != torus_knot_alexander(kGrid[g].p, kGrid[g].q))
            o.fail(kGrid[g].str());
    return o;
}

Outcome farey()
{
    Outcome o;
    for (const auto& t : kGrid) {
        auto [x, y] = summand_slopes(t);
        if (!summand_conditions(t, x, y))
            o.fail(t.str() + " summands");
        SlidePath p = slide_path(FareyEdge(Slope(t.p, t.q), Slope(x.r, x.s)), FareyEdge(slope_zero(), slope_inf()));
        if (!validate_slide_path(p))
            o.fail(t.str() + " slide path");
    }
    return o;
}

Outcome trisections(const Fibers& F)
{
    Outcome o;
    for (std::size_t g = 0; g < kGrid.size(); ++g)
        for (const Slope& s : {slope_zero(), Slope(2, 1), Slope(-2, 1), Slope(2, 3), Slope(-2, 3)}) {
            TrisectionDiagram d = trisection_for(F.fc[g], F.sd[g], s);
            TrisectionReport r = verify_trisection_diagram(F.fc[g], d);
            bool params = r.genus == 2 * r.fiber_genus && r.fiber_genus == F.fc[g].genus();
            if (!r.ok || !params || !r.standard_beta_gamma || !r.unimodular)
                o.fail(kGrid[g].str() + " " + s.str() + (r.failures.empty() ? "" : ": " + r.failures[0]));
        }
    return o;
}

std::pair<int, std::string> run(const std::string& cmd)
{
    std::string out;
    FILE* f = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!f)
        return {-1, out};
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0)
        out.append(buf.data(), n);
    int status = pclose(f);
    return {status, out};
}

Outcome cli_determinism(const std::string& cli)
{
    Outcome o;
    const std::vector<std::string> commands = {
        "slope intersect 0/1 inf",
        "slope twist inf^1 0/1",
        "slope reduce -4/5 --format json",
        "fiber -p 3 -q 2",
        "lift -p 4 -q 3 -s 2/3 --format json --curves",
        "lift -p 3 -q 2 -s 0/1 --census",
        "derivative -p 3 -q 2 -s 0/1",
        "derivative --framed -p 4 -q 3 -s 2/1",
        "farey summands -p 5 -q 3",
        "farey path -p 7 -q 3",
        "farey closure -p 5 -q 3 -s 6/1",
        "trisect -p 3 -q 2 -s 0/1 --report",
        "trisect -p 5 -q 2 -s -2/3 --format svg",
        "verify-grid --bound 3 --threads 3",
    };
    for (const auto& c : commands) {
        auto a = run(cli + " " + c);
        auto b = run(cli + " " + c);
        if (a.first != 0 || b.first != 0)
            o.fail("'" + c + "' exited nonzero");
        else if (a.second != b.second || a.second.empty())
            o.fail("'" + c + "' output differs between runs");
    }
    o.detail = std::to_string(commands.size()) + " commands run twice" + (o.pass ? "" : "; " + o.detail);
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    std::string cli = argc > 1 ? argv[1] : GSQ_CLI_PATH;
    bool all = true;
    auto report = [&](int k, const char* what, double limit, const std::function<Outcome()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && sec > limit)
            o.fail("over the time limit");
        all = all && o.pass;
        std::ostringstream line;
        line << "criterion " << k << " " << (o.pass ? "PASS" : "FAIL") << ": " << what;
        char t[64];
        std::snprintf(t, sizeof t, " (%.1f s", sec);
        line << t;
        if (limit > 0)
            line << ", limit " << limit << " s";
        line << ")";
        if (!o.detail.empty())
            line << " [" << o.detail << "]";
        std::cout << line.str() << std::endl;
    };
    Fibers F;
    report(1, "lift parity on the grid, |c|,|d| <= 12", 120, [&] { return lift_parity(F); });
    report(2, "genus (p-1)(q-1) and census of the cut along the lift of 0/1", 0, [&] { return genus_census(F); });
    report(3, "10000 random twist invariants and reduce round trips for |a|,|b| <= 10^4", 60,
           [&] { return slope_invariants(); });
    report(4, "lifted twists commute with recognition, |c|,|d| <= 6", 0, [&] { return twist_lift(F); });
    report(5, "intersection scaling by pq", 0, [&] { return intersection_scaling(F, 6); });
    report(6, "derivative verdicts for even slopes, |c|,|d| <= 8", 600, [&] { return derivative_grid(F); });
    report(7, "Alexander polynomial from the Seifert matrix", 0, [&] { return alexander(F); });
    report(8, "summand slope conditions and slide paths", 0, [&] { return farey(); });
    report(9, "trisection verify after build for 0/1, +-2/1, +-2/3", 300, [&] { return trisections(F); });
    report(10, "CLI output is byte-reproducible", 0, [&] { return cli_determinism(cli); });
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: some criteria fail") << std::endl;
    return all ? 0 : 1;
}

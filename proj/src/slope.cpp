#include "gsq/slope.hpp"

#include <charconv>
#include <cstdlib>

namespace gsq {

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + text);
    }
}

Slope::Slope(const BigInt& a, const BigInt& b) : a_(a), b_(b)
{
    if (a_ == 0 && b_ == 0)
        throw std::invalid_argument("0/0 is not a slope");
    if (b_ < 0) {
        a_ = -a_;
        b_ = -b_;
    }
    if (b_ == 0) {
        a_ = 1;
        return;
    }
    BigInt g = bgcd(babs(a_), b_);
    if (g != 1) {
        a_ /= g;
        b_ /= g;
    }
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Slope Slope::parse(std::string_view text)
{
    if (text == "inf" || text == "1/0")
        return slope_inf();
    std::string_view num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    bool neg = !num.empty() && num[0] == '-';
    std::string_view digits = neg ? num.substr(1) : num;
    if (!all_digits(digits) || !all_digits(den))
        throw ParseError("bad slope: " + std::string(text));
    BigInt a{std::string(digits)}, b{std::string(den)};
    if (neg)
        a = -a;
    if (a == 0 && b == 0)
        throw ParseError("bad slope: " + std::string(text));
    if (b == 0 && a != 1)
        throw ParseError("infinite slope must be written inf or 1/0");
    return Slope(a, b);
}

std::string Slope::str() const { return a_.str() + "/" + b_.str(); }

std::string TwistMove::str() const
{
    std::string ax = axis.is_inf() ? "inf" : axis.str();
    return ax + "^" + power.str();
}

void TwistWord::push(const TwistMove& m)
{
    if (m.power == 0)
        return;
    if (!moves_.empty() && moves_.back().axis == m.axis) {
        moves_.back().power += m.power;
        if (moves_.back().power == 0)
            moves_.pop_back();
        return;
    }
    moves_.push_back(m);
}

TwistWord TwistWord::inverse() const
{
    TwistWord w;
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it)
        w.push(it->inverse());
    return w;
}

std::string TwistWord::str() const
{
    std::string out;
    for (const auto& m : moves_) {
        if (!out.empty())
            out += ' ';
        out += m.str();
    }
    return out;
}

BigInt intersection_number(const Slope& s1, const Slope& s2)
{
    return 2 * babs(s1.num() * s2.den() - s1.den() * s2.num());
}

Slope apply_twist(const TwistMove& move, const Slope& target)
{
    const BigInt& a = move.axis.num();
    const BigInt& b = move.axis.den();
    const BigInt& c = target.num();
    const BigInt& d = target.den();
    BigInt k = 2 * move.power * (a * d - b * c);
    return Slope(c + k * a, d + k * b);
}

Slope apply_word(const TwistWord& word, const Slope& target)
{
    Slope s = target;
    for (const auto& m : word.moves())
        s = apply_twist(m, s);
    return s;
}

namespace {

// Descent on (b,|a|); emit(axis, power) with axis 0 = 0/1 and 1 = 1/0.
// k = 1 is by far the common case, so the division is skipped for it.
template <class Int, class Emit>
void descend(Int& a, Int& b, Emit&& emit)
{
    for (;;) {
        if (b == 0 || a == 0)
            return;
        if (a == b)
            return;
        if (a == -b) {
            emit(1, Int(1));
            a = 1;
            return;
        }
        if (a > b) {
            Int k = a <= 3 * b ? Int(1) : Int((a + b - 1) / (2 * b));
            a -= 2 * k * b;
            emit(1, Int(-k));
        } else if (a < -b) {
            Int k = -a <= 3 * b ? Int(1) : Int((b - a - 1) / (2 * b));
            a += 2 * k * b;
            emit(1, k);
        } else if (a > 0) {
            Int k = b <= 3 * a ? Int(1) : Int((b + a - 1) / (2 * a));
            b -= 2 * k * a;
            emit(0, k);
            if (b < 0) {
                a = -a;
                b = -b;
            }
        } else {
            Int na = -a;
            Int k = b <= 3 * na ? Int(1) : Int((b + na - 1) / (2 * na));
            b -= 2 * k * na;
            emit(0, Int(-k));
            if (b < 0) {
                a = -a;
                b = -b;
            }
        }
    }
}

} // namespace

Reduction reduce(const Slope& s)
{
    BigInt a = s.num(), b = s.den();
    TwistWord w;
    descend<BigInt>(a, b, [&](int axis, const BigInt& n) {
        w.push({axis == 0 ? slope_zero() : slope_inf(), n});
    });
    return {Slope(a, b), w};
}

void reduce_small(std::int64_t a, std::int64_t b, SmallReduction& out)
{
    out.moves.clear();
    descend<std::int64_t>(a, b, [&](int axis, std::int64_t n) {
        if (!out.moves.empty() && out.moves.back().axis == axis) {
            out.moves.back().power += n;
            if (out.moves.back().power == 0)
                out.moves.pop_back();
            return;
        }
        out.moves.push_back({axis, n});
    });
    out.a = b == 0 ? 1 : a;
    out.b = b;
}

TwistMove parse_move(std::string_view text)
{
    auto caret = text.find('^');
    if (caret == std::string_view::npos)
        throw ParseError("twist must be axis^power: " + std::string(text));
    Slope axis = Slope::parse(text.substr(0, caret));
    std::string_view pw = text.substr(caret + 1);
    bool neg = !pw.empty() && (pw[0] == '-' || pw[0] == '+');
    std::string_view digits = neg ? pw.substr(1) : pw;
    if (!all_digits(digits))
        throw ParseError("bad twist power: " + std::string(pw));
    BigInt n{std::string(digits)};
    if (!pw.empty() && pw[0] == '-')
        n = -n;
    if (n == 0)
        throw ParseError("twist power must be nonzero");
    return {axis, n};
}

} // namespace gsq

#pragma once

#include "gsq/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gsq {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduced extended rational a/b with b >= 0; infinity is 1/0.
class Slope {
public:
    Slope() : a_(0), b_(1) {}
    Slope(const BigInt& a, const BigInt& b);
    Slope(long long a, long long b) : Slope(BigInt(a), BigInt(b)) {}

    static Slope parse(std::string_view text);

    const BigInt& num() const { return a_; }
    const BigInt& den() const { return b_; }
    bool numerator_even() const { return !boost::multiprecision::bit_test(babs(a_), 0); }
    bool is_inf() const { return b_ == 0; }
    std::string str() const;

    friend bool operator==(const Slope& x, const Slope& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Slope& x, const Slope& y) { return !(x == y); }
    friend bool operator<(const Slope& x, const Slope& y)
    {
        return x.a_ < y.a_ || (x.a_ == y.a_ && x.b_ < y.b_);
    }

private:
    BigInt a_, b_;
};

inline Slope slope_zero() { return Slope(0, 1); }
inline Slope slope_inf() { return Slope(1, 0); }
inline Slope slope_one() { return Slope(1, 1); }

struct TwistMove {
    Slope axis;
    BigInt power;
    TwistMove inverse() const { return {axis, -power}; }
    std::string str() const;
    friend bool operator==(const TwistMove& x, const TwistMove& y)
    {
        return x.axis == y.axis && x.power == y.power;
    }
};

// Canonical: adjacent moves never share an axis and no power is zero.
class TwistWord {
public:
    TwistWord() = default;
    void push(const TwistMove& m);
    const std::vector<TwistMove>& moves() const { return moves_; }
    bool empty() const { return moves_.empty(); }
    std::size_t size() const { return moves_.size(); }
    TwistWord inverse() const;
    std::string str() const;
    friend bool operator==(const TwistWord& x, const TwistWord& y) { return x.moves_ == y.moves_; }

private:
    std::vector<TwistMove> moves_;
};

BigInt intersection_number(const Slope& s1, const Slope& s2);
Slope apply_twist(const TwistMove& move, const Slope& target);
Slope apply_word(const TwistWord& word, const Slope& target);

struct Reduction {
    Slope terminal;
    TwistWord word;
};

Reduction reduce(const Slope& s);

// Fixed-width descent used by bulk sweeps. Axis 0 is 0/1, axis 1 is 1/0.
struct SmallMove {
    int axis;
    std::int64_t power;
};

struct SmallReduction {
    std::int64_t a = 0, b = 1;
    std::vector<SmallMove> moves; // capacity is reused across calls
};

void reduce_small(std::int64_t a, std::int64_t b, SmallReduction& out);
// Twist on a primitive pair; the result stays primitive, so no gcd is taken.
inline void apply_small(int axis, std::int64_t power, std::int64_t& a, std::int64_t& b)
{
    std::int64_t k = 2 * power * (axis == 0 ? -a : b);
    if (axis == 0)
        b += k;
    else
        a += k;
    if (b < 0 || (b == 0 && a < 0)) {
        a = -a;
        b = -b;
    }
}

TwistMove parse_move(std::string_view text);

} // namespace gsq

#include "gsq/qrational.hpp"

#include <algorithm>

#include <boost/multiprecision/gmp.hpp>

namespace gsq {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("exact rational overflow"); }

using BigQ = boost::multiprecision::mpq_rational;
using BigZ = boost::multiprecision::mpz_int;

BigQ big(const Q& q) { return BigQ(BigZ(int128_str(q.num())), BigZ(int128_str(q.den()))); }

int big_sign(const BigQ& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

Q::I Q::mul(I a, I b)
{
    I r;
    if (__builtin_mul_overflow(a, b, &r))
        overflow();
    return r;
}

Q::I Q::add(I a, I b)
{
    I r;
    if (__builtin_add_overflow(a, b, &r))
        overflow();
    return r;
}

Q::I Q::gcd(I a, I b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        I t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void Q::normalize()
{
    if (d_ == 0)
        throw std::domain_error("zero denominator");
    if (d_ < 0) {
        n_ = -n_;
        d_ = -d_;
    }
    I g = gcd(n_, d_);
    if (g > 1) {
        n_ /= g;
        d_ /= g;
    }
}

Q operator+(const Q& a, const Q& b)
{
    if (a.d_ == b.d_)
        return Q(Q::add(a.n_, b.n_), a.d_);
    Q::I g = Q::gcd(a.d_, b.d_);
    Q::I da = a.d_ / g, db = b.d_ / g;
    return Q(Q::add(Q::mul(a.n_, db), Q::mul(b.n_, da)), Q::mul(a.d_, db));
}

Q operator*(const Q& a, const Q& b)
{
    Q::I g1 = Q::gcd(a.n_, b.d_), g2 = Q::gcd(b.n_, a.d_);
    if (g1 == 0)
        g1 = 1;
    if (g2 == 0)
        g2 = 1;
    return Q::raw(Q::mul(a.n_ / g1, b.n_ / g2), Q::mul(a.d_ / g2, b.d_ / g1));
}

Q operator/(const Q& a, const Q& b)
{
    if (b.n_ == 0)
        throw std::domain_error("division by zero");
    return a * Q(b.d_, b.n_);
}

int Q::cmp(const Q& a, const Q& b)
{
    if (a.d_ == b.d_)
        return a.n_ < b.n_ ? -1 : (a.n_ > b.n_ ? 1 : 0);
    I l, r;
    if (__builtin_mul_overflow(a.n_, b.d_, &l) || __builtin_mul_overflow(b.n_, a.d_, &r)) {
        BigQ x = big(a), y = big(b);
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    return l < r ? -1 : (l > r ? 1 : 0);
}

int cross_sign(const Vec2& a, const Vec2& b)
{
    try {
        return cross(a, b).sign();
    } catch (const std::overflow_error&) {
        return big_sign(big(a.x) * big(b.y) - big(a.y) * big(b.x));
    }
}

int dot_sign(const Vec2& a, const Vec2& b)
{
    try {
        return (a.x * b.x + a.y * b.y).sign();
    } catch (const std::overflow_error&) {
        return big_sign(big(a.x) * big(b.x) + big(a.y) * big(b.y));
    }
}

int orient(const Vec2& a, const Vec2& b, const Vec2& c)
{
    try {
        return cross(b - a, c - a).sign();
    } catch (const std::overflow_error&) {
        BigQ ux = big(b.x) - big(a.x), uy = big(b.y) - big(a.y);
        BigQ vx = big(c.x) - big(a.x), vy = big(c.y) - big(a.y);
        return big_sign(ux * vy - uy * vx);
    }
}

Q::I Q::floor() const
{
    I q = n_ / d_;
    if (n_ % d_ != 0 && n_ < 0)
        --q;
    return q;
}

std::string int128_str(__int128 v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::string Q::str() const
{
    if (d_ == 1)
        return int128_str(n_);
    return int128_str(n_) + "/" + int128_str(d_);
}

Q Q::parse(const std::string& text)
{
    auto conv = [&](const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("bad rational: " + text);
        I v = 0;
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-') {
            neg = true;
            i = 1;
        }
        if (i == s.size())
            throw std::invalid_argument("bad rational: " + text);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad rational: " + text);
            v = add(mul(v, 10), s[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Q(conv(text), 1);
    return Q(conv(text.substr(0, slash)), conv(text.substr(slash + 1)));
}

} // namespace gsq

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsq {

// Exact rational on 128-bit words; throws on overflow instead of wrapping.
class Q {
public:
    using I = __int128;

    Q() = default;
    Q(long long n) : n_(n), d_(1) {}
    Q(I n, I d) : n_(n), d_(d) { normalize(); }

    I num() const { return n_; }
    I den() const { return d_; }

    int sign() const { return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0); }
    bool is_integer() const { return d_ == 1; }
    I floor() const;
    double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }
    std::string str() const;
    static Q parse(const std::string& text);

    Q operator-() const { return raw(-n_, d_); }
    friend Q operator+(const Q& a, const Q& b);
    friend Q operator-(const Q& a, const Q& b) { return a + (-b); }
    friend Q operator*(const Q& a, const Q& b);
    friend Q operator/(const Q& a, const Q& b);
    Q& operator+=(const Q& b) { return *this = *this + b; }
    Q& operator-=(const Q& b) { return *this = *this - b; }
    Q& operator*=(const Q& b) { return *this = *this * b; }

    friend bool operator==(const Q& a, const Q& b) { return a.n_ == b.n_ && a.d_ == b.d_; }
    friend bool operator!=(const Q& a, const Q& b) { return !(a == b); }
    friend bool operator<(const Q& a, const Q& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Q& a, const Q& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Q& a, const Q& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Q& a, const Q& b) { return cmp(a, b) >= 0; }
    static int cmp(const Q& a, const Q& b);

    static I mul(I a, I b);
    static I add(I a, I b);
    static I gcd(I a, I b);

private:
    static Q raw(I n, I d)
    {
        Q r;
        r.n_ = n;
        r.d_ = d;
        return r;
    }
    void normalize();

    I n_ = 0;
    I d_ = 1;
};

std::string int128_str(__int128 v);

struct Vec2 {
    Q x, y;
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Q& s, const Vec2& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

inline Q cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
// Sign predicates; exact even when the 128-bit intermediate values overflow.
int cross_sign(const Vec2& a, const Vec2& b);
int dot_sign(const Vec2& a, const Vec2& b);
int orient(const Vec2& a, const Vec2& b, const Vec2& c);

} // namespace gsq

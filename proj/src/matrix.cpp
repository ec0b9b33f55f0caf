#include "gsq/matrix.hpp"

#include <stdexcept>

namespace gsq {

IntMatrix zeros(std::size_t rows, std::size_t cols)
{
    return IntMatrix(rows, std::vector<BigInt>(cols, BigInt(0)));
}

IntMatrix transpose(const IntMatrix& a)
{
    if (a.empty())
        return {};
    IntMatrix t = zeros(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.empty() || b.empty())
        return zeros(a.size(), b.empty() ? 0 : b[0].size());
    if (a[0].size() != b.size())
        throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c = zeros(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            c[i][j] += b[i][j];
    return c;
}

IntMatrix negate(const IntMatrix& a)
{
    IntMatrix c = a;
    for (auto& row : c)
        for (auto& v : row)
            v = -v;
    return c;
}

bool is_zero(const IntMatrix& a)
{
    for (const auto& row : a)
        for (const auto& v : row)
            if (v != 0)
                return false;
    return true;
}

BigInt determinant(const IntMatrix& a)
{
    // Bareiss fraction-free elimination
    std::size_t n = a.size();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntMatrix integer_inverse(const IntMatrix& a)
{
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = Rational(a[i][j]);
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = c;
        while (r < n && m[r][c] == 0)
            ++r;
        if (r == n)
            throw std::domain_error("singular matrix");
        std::swap(m[c], m[r]);
        Rational piv = m[c][c];
        for (auto& v : m[c])
            v /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    IntMatrix inv = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = m[i][n + j];
            if (boost::multiprecision::denominator(v) != 1)
                throw std::domain_error("inverse is not integral");
            inv[i][j] = boost::multiprecision::numerator(v);
        }
    return inv;
}

std::size_t rank_q(const IntMatrix& a)
{
    if (a.empty())
        return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& row : a) {
        std::vector<Rational> r;
        for (const auto& v : row)
            r.emplace_back(v);
        m.push_back(std::move(r));
    }
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t r = rank;
        while (r < rows && m[r][c] == 0)
            ++r;
        if (r == rows)
            continue;
        std::swap(m[rank], m[r]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> Gf2Basis::pack(const std::vector<BigInt>& row) const
{
    std::vector<std::uint64_t> bits((width_ + 63) / 64, 0);
    for (std::size_t i = 0; i < width_; ++i)
        if (boost::multiprecision::bit_test(babs(row[i]), 0))
            bits[i / 64] |= std::uint64_t(1) << (i % 64);
    return bits;
}

bool Gf2Basis::insert(const std::vector<BigInt>& row)
{
    auto bits = pack(row);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::size_t p = pivots_[k];
        if (bits[p / 64] >> (p % 64) & 1)
            for (std::size_t w = 0; w < bits.size(); ++w)
                bits[w] ^= rows_[k][w];
    }
    for (std::size_t i = 0; i < width_; ++i)
        if (bits[i / 64] >> (i % 64) & 1) {
            rows_.push_back(bits);
            pivots_.push_back(i);
            return true;
        }
    return false;
}

std::size_t rank_gf2(const IntMatrix& a)
{
    if (a.empty())
        return 0;
    Gf2Basis b(a[0].size());
    for (const auto& row : a)
        b.insert(row);
    return b.rank();
}

IntPoly poly_trim(IntPoly p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return poly_trim(c);
}

namespace {

IntPoly poly_neg(IntPoly a)
{
    for (auto& v : a)
        v = -v;
    return a;
}
} // namespace

IntPoly poly_divide(const IntPoly& num, const IntPoly& den)
{
    IntPoly r = poly_trim(num);
    IntPoly d = poly_trim(den);
    if (d.empty())
        throw std::domain_error("polynomial division by zero");
    if (r.size() < d.size())
        return r.empty() ? IntPoly{} : throw std::domain_error("inexact polynomial division");
    IntPoly q(r.size() - d.size() + 1, BigInt(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& lead = r[k + d.size() - 1];
        if (lead % d.back() != 0)
            throw std::domain_error("inexact polynomial division");
        BigInt c = lead / d.back();
        q[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j)
            r[k + j] -= c * d[j];
    }
    if (!poly_trim(r).empty())
        throw std::domain_error("inexact polynomial division");
    return poly_trim(q);
}

IntPoly det_pencil(const IntMatrix& a, const IntMatrix& b)
{
    // det(tA - B) has degree <= n; evaluate at t = 0..n and interpolate (Newton form).
    std::size_t n = a.size();
    std::vector<BigInt> values;
    for (std::size_t t = 0; t <= n; ++t) {
        IntMatrix m = zeros(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = BigInt(t) * a[i][j] - b[i][j];
        values.push_back(determinant(m));
    }
    std::vector<Rational> coef(values.begin(), values.end());
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = n; i >= k; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / Rational(BigInt(k));
            if (i == k)
                break;
        }
    std::vector<Rational> poly(n + 1, Rational(0));
    // expand sum coef[k] * prod_{i<k} (t - i)
    std::vector<Rational> basis{Rational(1)};
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            poly[i] += coef[k] * basis[i];
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= Rational(BigInt(k)) * basis[i];
        }
        basis = next;
    }
    IntPoly out;
    for (const auto& c : poly) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("non-integral determinant polynomial");
        out.push_back(boost::multiprecision::numerator(c));
    }
    return poly_trim(out);
}

IntPoly poly_normalize_units(IntPoly p)
{
    p = poly_trim(p);
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0)
        ++low;
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
    if (!p.empty() && p.back() < 0)
        p = poly_neg(p);
    return p;
}

} // namespace gsq

#pragma once

#include "gsq/numeric.hpp"

#include <cstdint>
#include <vector>

namespace gsq {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix zeros(std::size_t rows, std::size_t cols);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix negate(const IntMatrix& a);
bool is_zero(const IntMatrix& a);

BigInt determinant(const IntMatrix& a);
// Exact inverse; throws unless the inverse is integral.
IntMatrix integer_inverse(const IntMatrix& a);
std::size_t rank_q(const IntMatrix& a);

// Incremental row reduction over GF(2).
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t width) : width_(width) {}
    // Returns true and absorbs the row when it is independent of the current span.
    bool insert(const std::vector<BigInt>& row);
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::uint64_t> pack(const std::vector<BigInt>& row) const;
    std::size_t width_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank_gf2(const IntMatrix& a);

// Polynomials with integer coefficients, index = degree.
using IntPoly = std::vector<BigInt>;
IntPoly poly_trim(IntPoly p);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// det(t*A - B) as a polynomial in t.
IntPoly det_pencil(const IntMatrix& a, const IntMatrix& b);
// Strip powers of t and the sign so that equal-up-to-units polynomials compare equal.
IntPoly poly_normalize_units(IntPoly p);
// Exact division; throws if not exact.
IntPoly poly_divide(const IntPoly& num, const IntPoly& den);

} // namespace gsq

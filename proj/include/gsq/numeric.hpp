#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace gsq {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v)
{
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

Rational parse_rational(const std::string& text);

inline BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt bgcd(const BigInt& a, const BigInt& b)
{
    return boost::multiprecision::gcd(a, b);
}

} // namespace gsq

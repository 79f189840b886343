#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "trop/error.hpp"

namespace trop {

// Exact arbitrary-precision rational scalar. Always stored in lowest terms
// with a positive denominator; every operation is exact.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Exact value of a binary64 input (every finite double is a dyadic rational).
inline Rational rational_from_float(double x) {
    if (!std::isfinite(x)) fail("NonFiniteInput", "cannot convert non-finite double to rational");
    return Rational(x);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Parses a decimal literal ("1", "-1.5", "3/4") into the exact rational it
// denotes; decimal fractions become n/10^k with no rounding.
inline Rational rational_from_decimal(const std::string& text) {
    if (text.empty()) fail("ParseError", "empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) fail("ParseError", "malformed fraction: " + text);
        Rational r(BigInt(num), BigInt(den));
        return r;
    }
    std::string body = text;
    bool negative = false;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    const auto dot = body.find('.');
    std::string digits = body;
    std::size_t frac_len = 0;
    if (dot != std::string::npos) {
        digits = body.substr(0, dot) + body.substr(dot + 1);
        frac_len = body.size() - dot - 1;
    }
    if (digits.empty()) fail("ParseError", "malformed decimal: " + text);
    for (char c : digits) {
        if (c < '0' || c > '9') fail("ParseError", "malformed decimal: " + text);
    }
    BigInt numerator(digits);
    BigInt denominator = 1;
    for (std::size_t i = 0; i < frac_len; ++i) denominator *= 10;
    Rational r(numerator, denominator);
    return negative ? Rational(-r) : r;
}

inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline std::vector<Rational> rationals_from_floats(const std::vector<double>& xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(rational_from_float(x));
    return out;
}

}  // namespace trop

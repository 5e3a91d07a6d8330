#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "ncheeger/errors.hpp"

namespace ncheeger {

// Exact rational arithmetic: values are kept in lowest terms with a positive
// denominator and no operation ever rounds. Conversion to double happens only
// at the spectral boundary.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) {
    return q.template convert_to<double>();
}

// "p" when the denominator is 1, "p/q" otherwise, always in lowest terms.
inline std::string render_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts an optionally signed integer "p", a fraction "p/q", or a finite
// decimal such as "0.5" (parsed exactly via a power-of-ten denominator).
inline Rational parse_rational(std::string_view token) {
    const auto fail = [&](const char* why) -> Rational {
        throw Error(std::string("invalid rational '") + std::string(token) + "': " + why);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
        negative = token[pos] == '-';
        ++pos;
    }
    const auto take_digits = [&]() {
        const std::size_t start = pos;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
        return std::string(token.substr(start, pos - start));
    };
    const std::string integral = take_digits();
    if (pos == token.size()) {
        if (integral.empty()) return fail("no digits");
        BigInt n(integral);
        return negative ? Rational(-n) : Rational(n);
    }
    if (token[pos] == '/') {
        ++pos;
        const std::string denom = take_digits();
        if (integral.empty() || denom.empty() || pos != token.size()) return fail("malformed fraction");
        BigInt n(integral), d(denom);
        if (d == 0) return fail("zero denominator");
        Rational q(n, d);
        return negative ? Rational(-q) : q;
    }
    if (token[pos] == '.') {
        ++pos;
        const std::string fraction = take_digits();
        if (pos != token.size()) return fail("trailing characters");
        if (integral.empty() && fraction.empty()) return fail("no digits");
        BigInt scaled(integral.empty() ? "0" : integral);
        BigInt scale = 1;
        for (char c : fraction) {
            scaled = scaled * 10 + (c - '0');
            scale *= 10;
        }
        Rational q(scaled, scale);
        return negative ? Rational(-q) : q;
    }
    return fail("unexpected character");
}

}  // namespace ncheeger

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ih/errors.hpp"

namespace ih {

// All arithmetic in the engine is exact. Values are normalized to lowest
// terms by the backend; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Renders as "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&]() { throw parse_error("invalid rational literal: '" + text + "'"); };
    if (text.empty()) bad();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty()) bad();
    }
    auto digits_ok = [](const std::string& s, bool sign) {
        std::size_t i = (sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
    Integer d(den);
    if (d == 0) bad();
    return Rational(Integer(num), d);
}

inline Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

} // namespace ih

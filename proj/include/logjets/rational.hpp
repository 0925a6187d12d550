#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace logjets {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_text(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Accepts "n" or "n/d" with optional leading sign.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline Integer ipow(Integer base, unsigned e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational qpow(const Rational& q, int e) {
    if (e == 0) return Rational(1);
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    if (e < 0) {
        if (n == 0) throw std::domain_error("zero to negative power");
        std::swap(n, d);
        e = -e;
    }
    return Rational(ipow(n, unsigned(e)), ipow(d, unsigned(e)));
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline int sign_of(const Rational& q) {
    if (q == 0) return 0;
    return q < 0 ? -1 : 1;
}

// Largest integer <= q.
inline Integer rational_floor(const Rational& q) {
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    Integer t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

} // namespace logjets

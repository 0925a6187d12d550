#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <vector>

namespace logjets {

// Dense univariate polynomial, coefficients ascending, trailing zeros trimmed.
class UniPoly {
public:
    std::vector<Rational> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    UniPoly derivative() const {
        UniPoly d;
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * int(i));
        d.trim();
        return d;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& q : r.c) q = -q;
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.trim();
        return r;
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        UniPoly r;
        r.c.assign(c.size() + o.c.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j)
                r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }

    UniPoly operator*(const Rational& q) const {
        UniPoly r = *this;
        for (auto& x : r.c) x *= q;
        r.trim();
        return r;
    }

    // Polynomial remainder of *this by o (o nonzero).
    UniPoly rem(const UniPoly& o) const {
        if (o.is_zero()) throw std::domain_error("remainder by zero polynomial");
        UniPoly r = *this;
        while (!r.is_zero() && r.degree() >= o.degree()) {
            Rational f = r.c.back() / o.c.back();
            int k = r.degree() - o.degree();
            for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i + k] -= f * o.c[i];
            r.c.pop_back();
            r.trim();
        }
        return r;
    }
};

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        UniPoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

// Sign variations of the chain at x, zero values dropped.
inline int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int vars = 0, prev = 0;
    for (auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// gcd(p, p') square-free companion: same root set, only simple roots.
inline UniPoly square_free_part(const UniPoly& p) {
    UniPoly a = p, b = p.derivative();
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = b;
        b = r;
    }
    // a = gcd(p, p'); divide p by a
    if (a.degree() <= 0) return p;
    UniPoly q;
    UniPoly r = p;
    q.c.assign(std::size_t(p.degree() - a.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= a.degree()) {
        Rational f = r.c.back() / a.c.back();
        int k = r.degree() - a.degree();
        q.c[std::size_t(k)] = f;
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + k] -= f * a.c[i];
        r.c.pop_back();
        r.trim();
    }
    q.trim();
    return q;
}

// Number of distinct real roots in the open interval (a, b).
class RootCounter {
public:
    explicit RootCounter(const UniPoly& p)
        : sf_(square_free_part(p)), chain_(sturm_chain(sf_)) {}

    int count_open(const Rational& a, const Rational& b) const {
        if (!(a < b)) return 0;
        if (sf_.degree() <= 0) return 0;
        int n = sign_variations(chain_, a) - sign_variations(chain_, b);
        if (sf_.eval(b) == 0) --n; // V counts roots in (a, b]
        return n;
    }

    bool is_root(const Rational& x) const { return sf_.degree() > 0 && sf_.eval(x) == 0; }

private:
    UniPoly sf_;
    std::vector<UniPoly> chain_;
};

namespace detail {

// Sign of p on the root-free segment adjoining `from` inside (from, toward):
// bisect until the nearer part is root-free, then sample it.
inline int edge_sign(const UniPoly& p, const RootCounter& rc,
                     Rational from, Rational toward) {
    Rational lo = from, hi = toward;
    for (int it = 0; it < 4096; ++it) {
        Rational m = (lo + hi) / 2;
        if (!rc.is_root(m) && rc.count_open(from, m) == 0)
            return sign_of(p.eval((from + m) / 2));
        hi = m;
    }
    throw std::runtime_error("edge_sign failed to isolate");
}

inline bool positive_decide(const UniPoly& p, const RootCounter& rc,
                            const Rational& a, const Rational& b, int depth) {
    if (depth > 256) throw std::runtime_error("positivity recursion too deep");
    if (p.eval(a) > 0 || p.eval(b) > 0) return true;
    Rational m = (a + b) / 2;
    if (p.eval(m) > 0) return true;
    int n = rc.count_open(a, b);
    if (n == 0) return false; // constant sign, sampled <= 0
    if (n == 1) {
        // one distinct root r: p has constant sign on (a,r) and (r,b)
        int sl = (p.eval(a) != 0) ? sign_of(p.eval(a)) : edge_sign(p, rc, a, b);
        if (sl > 0) return true;
        int sr;
        if (p.eval(b) != 0) sr = sign_of(p.eval(b));
        else {
            Rational lo = a, hi = b;
            for (int it = 0;; ++it) {
                if (it > 4096) throw std::runtime_error("edge isolation failed");
                Rational mm = (lo + hi) / 2;
                if (!rc.is_root(mm) && rc.count_open(mm, b) == 0) {
                    sr = sign_of(p.eval((mm + b) / 2));
                    break;
                }
                lo = mm;
            }
        }
        return sr > 0;
    }
    return positive_decide(p, rc, a, m, depth + 1) || positive_decide(p, rc, m, b, depth + 1);
}

} // namespace detail

// Exact decision: does p take a strictly positive value somewhere in the open
// interval (a, b)? Root locations are isolated with Sturm sequences; signs are
// read off root-free segments.
inline bool exists_positive_on_open(const UniPoly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) return false;
    if (p.is_zero()) return false;
    if (p.degree() == 0) return p.c[0] > 0;
    RootCounter rc(p);
    return detail::positive_decide(p, rc, a, b, 0);
}

// Smallest-denominator rational witness with p > 0 strictly inside (a, b).
inline Rational positive_witness(const UniPoly& p, const Rational& a, const Rational& b,
                                 long max_denominator = 2000000) {
    for (long q = 1; q <= max_denominator; ++q) {
        Integer lo = rational_floor(a * q) + 1;
        Integer hi = rational_floor(b * q);
        if (Rational(hi, Integer(q)) == b) --hi;
        for (Integer num = lo; num <= hi; ++num) {
            Rational x(num, Integer(q));
            if (boost::multiprecision::denominator(x) != q) continue;
            if (x <= a || x >= b) continue;
            if (p.eval(x) > 0) return x;
        }
    }
    throw std::runtime_error("no positive witness found up to denominator bound");
}

} // namespace logjets

#pragma once

#include "rational.hpp"
#include "varpool.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace logjets {

// Sparse exponent vector, sorted by variable id, exponents > 0.
struct Monomial {
    std::vector<std::pair<Var, std::uint32_t>> f;

    int total_degree() const {
        int s = 0;
        for (auto& [v, e] : f) s += int(e);
        return s;
    }

    std::uint32_t exponent(Var v) const {
        for (auto& [w, e] : f)
            if (w == v) return e;
        return 0;
    }

    bool operator==(const Monomial& o) const { return f == o.f; }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.f.reserve(f.size() + o.f.size());
        std::size_t i = 0, j = 0;
        while (i < f.size() && j < o.f.size()) {
            if (f[i].first < o.f[j].first) r.f.push_back(f[i++]);
            else if (f[i].first > o.f[j].first) r.f.push_back(o.f[j++]);
            else {
                r.f.emplace_back(f[i].first, f[i].second + o.f[j].second);
                ++i; ++j;
            }
        }
        while (i < f.size()) r.f.push_back(f[i++]);
        while (j < o.f.size()) r.f.push_back(o.f[j++]);
        return r;
    }

    // Removes e powers of v; requires exponent(v) >= e.
    Monomial without(Var v, std::uint32_t e) const {
        Monomial r;
        r.f.reserve(f.size());
        for (auto& [w, ex] : f) {
            if (w == v) {
                if (ex < e) throw std::logic_error("monomial division underflow");
                if (ex > e) r.f.emplace_back(w, ex - e);
            } else {
                r.f.emplace_back(w, ex);
            }
        }
        return r;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto& [v, e] : m.f) {
            h = (h ^ v) * 1099511628211ull;
            h = (h ^ e) * 1099511628211ull;
        }
        return h;
    }
};

// Graded-lex: higher total degree wins; ties broken by the earliest variable
// id with differing exponent, larger exponent first.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t i = 0, j = 0;
    while (i < a.f.size() && j < b.f.size()) {
        if (a.f[i].first == b.f[j].first) {
            if (a.f[i].second != b.f[j].second) return a.f[i].second < b.f[j].second;
            ++i; ++j;
        } else if (a.f[i].first < b.f[j].first) {
            return false; // a has positive exponent on an earlier var
        } else {
            return true;
        }
    }
    if (i < a.f.size()) return false;
    if (j < b.f.size()) return true;
    return false;
}

class MultiPoly {
public:
    // Terms kept in strictly descending graded-lex order, nonzero coefficients.
    std::vector<std::pair<Monomial, Rational>> terms;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }

    static MultiPoly constant(Rational c) {
        MultiPoly p;
        if (c != 0) p.terms.emplace_back(Monomial{}, std::move(c));
        return p;
    }

    static MultiPoly variable(Var v, std::uint32_t e = 1, Rational c = Rational(1)) {
        MultiPoly p;
        if (c != 0) {
            Monomial m;
            if (e > 0) m.f.emplace_back(v, e);
            p.terms.emplace_back(std::move(m), std::move(c));
        }
        return p;
    }

    static MultiPoly monomial(std::vector<std::pair<Var, std::uint32_t>> pairs, Rational c) {
        MultiPoly p;
        if (c == 0) return p;
        std::map<Var, std::uint32_t> acc;
        for (auto& [v, e] : pairs)
            if (e > 0) acc[v] += e;
        Monomial m;
        m.f.assign(acc.begin(), acc.end());
        p.terms.emplace_back(std::move(m), std::move(c));
        return p;
    }

    template <typename Map>
    static MultiPoly from_map(Map&& acc) {
        MultiPoly p;
        p.terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) p.terms.emplace_back(m, c);
        std::sort(p.terms.begin(), p.terms.end(),
                  [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms[0].first.f.empty());
    }

    Rational constant_value() const {
        if (terms.empty()) return Rational(0);
        if (!is_constant()) throw std::logic_error("polynomial is not constant");
        return terms[0].second;
    }

    bool operator==(const MultiPoly& o) const { return terms == o.terms; }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms) c = -c;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r;
        r.terms.reserve(terms.size() + o.terms.size());
        std::size_t i = 0, j = 0;
        while (i < terms.size() && j < o.terms.size()) {
            if (terms[i].first == o.terms[j].first) {
                Rational c = terms[i].second + o.terms[j].second;
                if (c != 0) r.terms.emplace_back(terms[i].first, std::move(c));
                ++i; ++j;
            } else if (grlex_less(o.terms[j].first, terms[i].first)) {
                r.terms.push_back(terms[i++]);
            } else {
                r.terms.push_back(o.terms[j++]);
            }
        }
        while (i < terms.size()) r.terms.push_back(terms[i++]);
        while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }

    MultiPoly operator*(const Rational& c) const {
        if (c == 0) return MultiPoly();
        MultiPoly r = *this;
        for (auto& [m, q] : r.terms) q *= c;
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        if (is_zero() || o.is_zero()) return MultiPoly();
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(terms.size() * o.terms.size());
        for (auto& [ma, ca] : terms)
            for (auto& [mb, cb] : o.terms)
                acc[ma.times(mb)] += ca * cb;
        return from_map(acc);
    }

    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly pow(std::uint32_t e) const {
        MultiPoly r = constant(Rational(1));
        MultiPoly b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    MultiPoly derivative(Var v) const {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (auto& [m, c] : terms) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            acc[m.without(v, 1)] += c * e;
        }
        return from_map(acc);
    }

    // Replaces one variable by a polynomial.
    MultiPoly substitute(Var v, const MultiPoly& rep) const {
        std::vector<MultiPoly> pows{constant(Rational(1))};
        MultiPoly out;
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (auto& [m, c] : terms) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) {
                acc[m] += c;
                continue;
            }
            while (pows.size() <= e) pows.push_back(pows.back() * rep);
            MultiPoly piece = pows[e] * MultiPoly::monomial({m.without(v, e).f}, c);
            for (auto& [mm, cc] : piece.terms) acc[mm] += cc;
        }
        return from_map(acc);
    }

    // Evaluates a subset of variables at rational values.
    MultiPoly substitute_values(const std::unordered_map<Var, Rational>& vals) const {
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (auto& [m, c] : terms) {
            Rational coef = c;
            Monomial rest;
            for (auto& [v, e] : m.f) {
                auto it = vals.find(v);
                if (it == vals.end()) rest.f.emplace_back(v, e);
                else coef *= qpow(it->second, int(e));
            }
            if (coef != 0) acc[rest] += coef;
        }
        return from_map(acc);
    }

    Rational evaluate(const std::unordered_map<Var, Rational>& vals) const {
        Rational s(0);
        for (auto& [m, c] : terms) {
            Rational t = c;
            for (auto& [v, e] : m.f) {
                auto it = vals.find(v);
                if (it == vals.end()) throw std::invalid_argument("unassigned variable in evaluate");
                t *= qpow(it->second, int(e));
            }
            s += t;
        }
        return s;
    }

    Rational coefficient_of(const Monomial& m) const {
        for (auto& [mm, c] : terms)
            if (mm == m) return c;
        return Rational(0);
    }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms) d = std::max(d, m.total_degree());
        return d;
    }

    int degree_in(Var v) const {
        int d = 0;
        for (auto& [m, c] : terms) d = std::max(d, int(m.exponent(v)));
        return d;
    }

    template <typename Pred>
    int degree_where(Pred pred) const {
        int d = 0;
        for (auto& [m, c] : terms) {
            int s = 0;
            for (auto& [v, e] : m.f)
                if (pred(v)) s += int(e);
            d = std::max(d, s);
        }
        return d;
    }

    std::size_t term_count() const { return terms.size(); }

    std::string to_text(const VarPool& pool) const {
        if (terms.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms) {
            Rational a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            std::string mono;
            for (auto& [v, e] : m.f) {
                if (!mono.empty()) mono += "*";
                mono += pool.name(v);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                out += logjets::to_text(a);
            } else {
                if (a != 1) out += logjets::to_text(a) + "*";
                out += mono;
            }
            first = false;
        }
        return out;
    }
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

} // namespace logjets

#pragma once

#include "rational.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace logjets {

// Polynomial in (x1, x2, x3, delta), exponents as the map key.
using XDExp = std::array<int, 4>;
using XDPoly = std::map<XDExp, Rational>;

inline XDPoly xd_mul(const XDPoly& a, const XDPoly& b) {
    XDPoly c;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            XDExp k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
            auto& slot = c[k];
            slot += va * vb;
        }
    for (auto it = c.begin(); it != c.end();) it = (it->second == 0) ? c.erase(it) : std::next(it);
    return c;
}

inline XDPoly xd_pow(const XDPoly& a, int n) {
    XDPoly r{{XDExp{0, 0, 0, 0}, Rational(1)}};
    for (int i = 0; i < n; ++i) r = xd_mul(r, a);
    return r;
}

inline Rational xd_evaluate(const XDPoly& p, const std::array<Rational, 4>& v) {
    Rational s(0);
    for (auto& [e, c] : p)
        s += c * qpow(v[0], e[0]) * qpow(v[1], e[1]) * qpow(v[2], e[2]) * qpow(v[3], e[3]);
    return s;
}

inline bool xd_homogeneous(const XDPoly& p, int deg) {
    for (auto& [e, c] : p)
        if (c != 0 && e[0] + e[1] + e[2] + e[3] != deg) return false;
    return true;
}

// Polynomial in delta, exponent -> coefficient.
using DeltaPoly = std::map<int, Rational>;

inline DeltaPoly delta_add(DeltaPoly a, const DeltaPoly& b) {
    for (auto& [k, v] : b) a[k] += v;
    return a;
}

// Tetrahedron in the coordinates (x2, x3, g); the remaining coordinate is the
// affine combination x1 = 1 - g - 2 x2 - 3 x3.
struct Simplex3 {
    std::array<std::array<Rational, 3>, 4> v;
};

// Integration domain of the leading-term integrals: the simplex of
// normalized index ratios.
inline Simplex3 standard_region() {
    Simplex3 s;
    s.v = {{{Rational(0), Rational(0), Rational(0)},
            {Rational(1, 3), Rational(0), Rational(0)},
            {Rational(1, 6), Rational(1, 6), Rational(0)},
            {Rational(1, 5), Rational(0), Rational(1, 5)}}};
    return s;
}

inline std::array<Simplex3, 4> centroid_split(const Simplex3& s) {
    std::array<Rational, 3> c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j)
            c[std::size_t(j)] += s.v[std::size_t(i)][std::size_t(j)] * Rational(1, 4);
    std::array<Simplex3, 4> out;
    for (int i = 0; i < 4; ++i) {
        out[std::size_t(i)] = s;
        out[std::size_t(i)].v[std::size_t(i)] = c;
    }
    return out;
}

namespace detail {

using TExp = std::array<int, 3>;
using TPoly = std::map<TExp, Rational>;

inline TPoly t_mul(const TPoly& a, const TPoly& b) {
    TPoly c;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            TExp k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            auto& slot = c[k];
            slot += va * vb;
        }
    return c;
}

inline TPoly t_pow(const TPoly& a, int n) {
    TPoly r{{TExp{0, 0, 0}, Rational(1)}};
    for (int i = 0; i < n; ++i) r = t_mul(r, a);
    return r;
}

// Integral of a polynomial in barycentric coordinates over the standard
// 3-simplex: each monomial contributes a! b! c! / (a+b+c+3)!.
inline Rational t_integral(const TPoly& p) {
    Rational s(0);
    for (auto& [e, c] : p)
        s += c * Rational(factorial(e[0]) * factorial(e[1]) * factorial(e[2]),
                          factorial(e[0] + e[1] + e[2] + 3));
    return s;
}

} // namespace detail

inline Rational simplex_jacobian(const Simplex3& s) {
    std::array<std::array<Rational, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[std::size_t(i)][std::size_t(j)] =
                s.v[std::size_t(i + 1)][std::size_t(j)] - s.v[0][std::size_t(j)];
    Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det < 0 ? -det : det;
}

// Exact integral over the simplex; delta passes through as a formal variable.
inline DeltaPoly integrate_over(const Simplex3& s, const XDPoly& p) {
    const Rational jac = simplex_jacobian(s);

    detail::TPoly X2, X3, G;
    auto coord = [&](int j) {
        detail::TPoly t{{detail::TExp{0, 0, 0}, s.v[0][std::size_t(j)]}};
        for (int i = 1; i <= 3; ++i) {
            detail::TExp e{0, 0, 0};
            e[std::size_t(i - 1)] = 1;
            t[e] += s.v[std::size_t(i)][std::size_t(j)] - s.v[0][std::size_t(j)];
        }
        return t;
    };
    X2 = coord(0);
    X3 = coord(1);
    G = coord(2);
    detail::TPoly X1{{detail::TExp{0, 0, 0}, Rational(1)}};
    for (auto& [k, v] : G) X1[k] -= v;
    for (auto& [k, v] : X2) X1[k] -= 2 * v;
    for (auto& [k, v] : X3) X1[k] -= 3 * v;

    std::map<std::array<int, 3>, Rational> cache;
    DeltaPoly out;
    for (auto& [e, c] : p) {
        std::array<int, 3> key{e[0], e[1], e[2]};
        auto it = cache.find(key);
        if (it == cache.end()) {
            auto tp = detail::t_mul(detail::t_mul(detail::t_pow(X1, e[0]), detail::t_pow(X2, e[1])),
                                    detail::t_pow(X3, e[2]));
            it = cache.emplace(key, detail::t_integral(tp) * jac).first;
        }
        out[e[3]] += c * it->second;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

inline Rational region_volume(const Simplex3& s) {
    auto dp = integrate_over(s, XDPoly{{XDExp{0, 0, 0, 0}, Rational(1)}});
    auto it = dp.find(0);
    return it == dp.end() ? Rational(0) : it->second;
}

} // namespace logjets

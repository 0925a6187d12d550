#pragma once

#include "jets.hpp"
#include "poly.hpp"
#include "varpool.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace logjets {

using MultiIndex = std::array<int, 3>;

// All multi-indices of total degree <= d, three slots.
inline std::vector<MultiIndex> multi_indices(int d) {
    std::vector<MultiIndex> out;
    for (int a1 = 0; a1 <= d; ++a1)
        for (int a2 = 0; a2 + a1 <= d; ++a2)
            for (int a3 = 0; a3 + a2 + a1 <= d; ++a3)
                out.push_back({a1, a2, a3});
    return out;
}

inline std::string index_name(const char* stem, const MultiIndex& a) {
    return std::string(stem) + "[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
           std::to_string(a[2]) + "]";
}

// Variable wiring for one chart of the family: base coordinates z1..z4, their
// order-1..3 jet coordinates, and one coefficient variable per multi-index.
struct FamilyVars {
    VarPool* pool = nullptr;
    int d = 0;
    std::array<Var, 4> z{};
    std::array<std::array<Var, 3>, 4> xi{};
    std::map<MultiIndex, Var> a;

    JetBinding window_binding() const {
        JetBinding b;
        for (int j = 0; j < 3; ++j) {
            b.base.push_back(z[j]);
            b.xi.push_back(xi[j]);
        }
        return b;
    }
};

inline FamilyVars make_family_vars(VarPool& pool, int d, bool with_coefficients = true) {
    FamilyVars f;
    f.pool = &pool;
    f.d = d;
    for (int j = 0; j < 4; ++j) f.z[j] = pool.intern("z" + std::to_string(j + 1));
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 3; ++k)
            f.xi[j][k] = pool.intern("xi" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
    if (with_coefficients)
        for (auto& al : multi_indices(d)) f.a.emplace(al, pool.intern(index_name("a", al)));
    return f;
}

inline MultiPoly z_monomial(const FamilyVars& f, const MultiIndex& al, Rational c = Rational(1)) {
    return MultiPoly::monomial({{f.z[0], std::uint32_t(al[0])},
                                {f.z[1], std::uint32_t(al[1])},
                                {f.z[2], std::uint32_t(al[2])}},
                               std::move(c));
}

// The four defining equations of the vertical 3-jet locus of the chart, plus
// the coefficient sums S, S1, S2, S3 reused by the reduction rules.
struct JetLocus {
    int d = 0;
    std::array<MultiPoly, 4> eq;
    MultiPoly S, S1, S2, S3;
};

namespace detail {

template <typename CoefFactor>
JetLocus build_jet_locus_impl(const FamilyVars& f, CoefFactor&& factor) {
    JetLocus L;
    L.d = f.d;
    const JetBinding bind = f.window_binding();
    for (auto& al : multi_indices(f.d)) {
        MultiPoly fac = factor(al);
        if (fac.is_zero()) continue;
        MultiPoly zm = z_monomial(f, al);
        L.S += fac * zm;
        L.S1 += fac * derivative_along_jet(zm, bind, 1);
        L.S2 += fac * derivative_along_jet(zm, bind, 2);
        L.S3 += fac * derivative_along_jet(zm, bind, 3);
    }
    const int d = f.d;
    MultiPoly z4d = MultiPoly::variable(f.z[3], std::uint32_t(d));
    MultiPoly x41 = MultiPoly::variable(f.xi[3][0]);
    MultiPoly x42 = MultiPoly::variable(f.xi[3][1]);
    MultiPoly x43 = MultiPoly::variable(f.xi[3][2]);
    L.eq[0] = z4d + L.S;
    L.eq[1] = z4d * x41 * Rational(d) + L.S1;
    L.eq[2] = z4d * x42 * Rational(d) + z4d * x41.pow(2) * Rational(d) * Rational(d) + L.S2;
    L.eq[3] = z4d * x43 * Rational(d) + z4d * x41 * x42 * Rational(3 * d * d) +
              z4d * x41.pow(3) * Rational(d) * Rational(d) * Rational(d) + L.S3;
    return L;
}

} // namespace detail

inline JetLocus build_jet_locus(const FamilyVars& f) {
    return detail::build_jet_locus_impl(
        f, [&](const MultiIndex& al) { return MultiPoly::variable(f.a.at(al)); });
}

inline JetLocus build_jet_locus(const FamilyVars& f, const std::map<MultiIndex, Rational>& avals) {
    return detail::build_jet_locus_impl(f, [&](const MultiIndex& al) {
        auto it = avals.find(al);
        return it == avals.end() ? MultiPoly() : MultiPoly::constant(it->second);
    });
}

} // namespace logjets

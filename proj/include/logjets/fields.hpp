#pragma once

#include "family.hpp"
#include "matrix.hpp"
#include "poly.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace logjets {

// A polynomial vector field on the chart: coefficient polynomial per
// coordinate direction (base, jet, or family-coefficient direction).
struct VectorField {
    std::map<Var, MultiPoly> comp;

    void add(Var v, const MultiPoly& p) {
        auto [it, fresh] = comp.emplace(v, p);
        if (!fresh) it->second += p;
        if (it->second.is_zero()) comp.erase(it);
    }
};

// Field moving only family coefficients: the direction a_{alpha-gamma} gets
// the binomial-product coefficient prod_k C(n_k, gamma_k) (-z_k)^{gamma_k}.
// The slot pattern n is distributed over the axes by perm.
inline VectorField binomial_field(const FamilyVars& f, const std::array<int, 3>& pattern,
                                  const MultiIndex& alpha, const std::array<int, 3>& perm) {
    std::array<int, 3> nn{};
    for (int i = 0; i < 3; ++i) {
        if (perm[i] < 1 || perm[i] > 3) throw std::invalid_argument("bad axis permutation");
        nn[perm[i] - 1] = pattern[i];
    }
    VectorField V;
    for (int g1 = 0; g1 <= nn[0]; ++g1)
        for (int g2 = 0; g2 <= nn[1]; ++g2)
            for (int g3 = 0; g3 <= nn[2]; ++g3) {
                MultiIndex tgt{alpha[0] - g1, alpha[1] - g2, alpha[2] - g3};
                if (tgt[0] < 0 || tgt[1] < 0 || tgt[2] < 0)
                    throw std::invalid_argument("target index below the floor pattern");
                Rational c(binomial(nn[0], g1) * binomial(nn[1], g2) * binomial(nn[2], g3));
                if ((g1 + g2 + g3) % 2) c = -c;
                V.add(f.a.at(tgt),
                      MultiPoly::monomial({{f.z[0], std::uint32_t(g1)},
                                           {f.z[1], std::uint32_t(g2)},
                                           {f.z[2], std::uint32_t(g3)}},
                                          c));
            }
    return V;
}

// Field with free direction symbols w1..w4: w_j d/dz_j for j<=3, w4 z4 d/dz4,
// and the induced motion of every family coefficient.
inline VectorField coefficient_flow_field(FamilyVars& f) {
    VarPool& pool = *f.pool;
    std::array<Var, 4> w{};
    for (int j = 0; j < 4; ++j) w[j] = pool.intern("w" + std::to_string(j + 1));
    const int d = f.d;
    VectorField V;
    for (auto& [al, avar] : f.a) {
        MultiPoly p = MultiPoly::variable(avar) * MultiPoly::variable(w[3]) * Rational(d);
        for (int j = 0; j < 3; ++j) {
            MultiIndex up = al;
            up[j] += 1;
            if (up[0] + up[1] + up[2] <= d)
                p -= MultiPoly::variable(f.a.at(up)) * MultiPoly::variable(w[j]) *
                     Rational(al[j] + 1);
        }
        V.add(avar, p);
    }
    for (int j = 0; j < 3; ++j) V.add(f.z[j], MultiPoly::variable(w[j]));
    V.add(f.z[3], MultiPoly::variable(w[3]) * MultiPoly::variable(f.z[3]));
    return V;
}

// The 20 multi-indices of degree <= 3, graded order, lexicographic descending
// within a degree. Shared by the window systems and the head solver.
inline std::vector<MultiIndex> cubic_window() {
    std::vector<MultiIndex> out;
    for (int t = 0; t <= 3; ++t)
        for (int b1 = t; b1 >= 0; --b1)
            for (int b2 = t - b1; b2 >= 0; --b2)
                out.push_back({b1, b2, t - b1 - b2});
    return out;
}

// Local field around a family point: window directions a_{rho-beta} move with
// marker symbols v[beta] z^beta, and the jet directions move by the slant
// matrix A (4x3): the xi_j^(k) direction gets sum_p A(j,p) xi_p^(k).
inline VectorField window_field(FamilyVars& f, const MultiIndex& rho,
                                const Matrix<Rational>& slant) {
    if (slant.rows() != 4 || slant.cols() != 3) throw std::invalid_argument("slant matrix must be 4x3");
    VarPool& pool = *f.pool;
    VectorField V;
    for (auto& b : cubic_window()) {
        MultiIndex tgt{rho[0] - b[0], rho[1] - b[1], rho[2] - b[2]};
        if (tgt[0] < 0 || tgt[1] < 0 || tgt[2] < 0)
            throw std::invalid_argument("window leaves the coefficient family");
        Var vb = pool.intern(index_name("v", b));
        V.add(f.a.at(tgt),
              MultiPoly::variable(vb) * MultiPoly::monomial({{f.z[0], std::uint32_t(b[0])},
                                                             {f.z[1], std::uint32_t(b[1])},
                                                             {f.z[2], std::uint32_t(b[2])}},
                                                            Rational(1)));
    }
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 3; ++k) {
            MultiPoly wjk;
            for (int p = 0; p < 3; ++p)
                wjk += MultiPoly::variable(f.xi[p][k]) * slant.at(j, p);
            V.add(f.xi[j][k], wjk);
        }
    return V;
}

} // namespace logjets

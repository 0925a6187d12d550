#pragma once

#include "family.hpp"
#include "fields.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "tangency.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace logjets {

inline Integer falling(long x, int n) {
    Integer r = 1;
    for (int i = 0; i < n; ++i) r *= Integer(x - i);
    return r;
}

// Closed-form coefficient matrix of a window system: row sigma, column beta,
// entry = d^sigma z^(rho-beta) evaluated at z = (1,1,1).
inline Matrix<Rational> falling_matrix(const MultiIndex& rho) {
    auto B = cubic_window();
    Matrix<Rational> M(B.size(), B.size());
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) {
            Integer v = 1;
            for (int t = 0; t < 3; ++t) v *= falling(rho[t] - B[j][t], B[i][t]);
            M.at(i, j) = Rational(v);
        }
    return M;
}

struct WindowSystem {
    MultiIndex rho{};
    std::vector<Var> vvars;           // marker variables v[beta], window order
    std::array<MultiPoly, 4> reduced; // reduced tangency conditions
    Matrix<Rational> extracted;       // 20x20 marker coefficient rows
    std::vector<MultiPoly> rhs;       // negated marker-free slot parts
    std::vector<Rational> row_scale;  // extracted = diag(row_scale) * falling_matrix
};

namespace detail {

// A term of a reduced condition, split by variable kind.
struct SplitTerm {
    MultiIndex zexp{0, 0, 0};
    Monomial ximono;  // jet variables
    Monomial rest;    // family-coefficient variables
    int vcount = 0;
    std::size_t vslot = 0;
    bool has_z4 = false;
};

inline SplitTerm split_term(const Monomial& m, const FamilyVars& f, const std::vector<Var>& vvars) {
    SplitTerm s;
    for (auto& [v, e] : m.f) {
        if (v == f.z[3]) { s.has_z4 = true; continue; }
        bool done = false;
        for (int j = 0; j < 3 && !done; ++j)
            if (v == f.z[j]) { s.zexp[j] = int(e); done = true; }
        for (int j = 0; j < 4 && !done; ++j)
            for (int k = 0; k < 3 && !done; ++k)
                if (v == f.xi[j][k]) { s.ximono.f.emplace_back(v, e); done = true; }
        for (std::size_t vi = 0; vi < vvars.size() && !done; ++vi)
            if (v == vvars[vi]) {
                s.vcount += int(e);
                s.vslot = vi;
                done = true;
            }
        if (!done) s.rest.f.emplace_back(v, e);
    }
    return s;
}

// The slot of row sigma: condition |sigma|, z-exponents rho - sigma, and the
// first-order jet variables with multiplicity sigma.
struct SlotPattern {
    int cond;
    MultiIndex zexp{};
    Monomial ximono;
};

inline SlotPattern slot_for_sigma(const FamilyVars& f, const MultiIndex& rho,
                                  const MultiIndex& sigma) {
    SlotPattern s;
    s.cond = sigma[0] + sigma[1] + sigma[2];
    s.zexp = {rho[0] - sigma[0], rho[1] - sigma[1], rho[2] - sigma[2]};
    std::map<Var, std::uint32_t> acc;
    for (int i = 0; i < 3; ++i)
        if (sigma[i] > 0) acc[f.xi[i][0]] += std::uint32_t(sigma[i]);
    s.ximono.f.assign(acc.begin(), acc.end());
    return s;
}

} // namespace detail

// Builds the per-window linear system at rho: Lie derivative of the locus
// equations along the window field, coefficients substituted, reduced, rows
// extracted at the slots z^(rho-sigma) xi^sigma. Works with numeric family
// coefficients (avals covering every index) or symbolic ones (avals empty).
inline WindowSystem window_system(FamilyVars& f, const JetLocus& locus_symbolic,
                                  const JetLocus& locus_reduction,
                                  const std::map<MultiIndex, Rational>& avals,
                                  const MultiIndex& rho, const Matrix<Rational>& slant) {
    VectorField V = window_field(f, rho, slant);

    std::unordered_map<Var, Rational> asub;
    for (auto& [al, c] : avals) asub.emplace(f.a.at(al), c);

    WindowSystem W;
    W.rho = rho;
    auto B = cubic_window();
    for (auto& b : B) W.vvars.push_back(f.pool->lookup(index_name("v", b)));

    for (int i = 0; i < 4; ++i) {
        MultiPoly cond = lie_derivative(V, locus_symbolic.eq[std::size_t(i)]);
        if (!asub.empty()) cond = cond.substitute_values(asub);
        W.reduced[std::size_t(i)] = reduce_modulo_locus(cond, locus_reduction, f, false).reduced;
    }

    const std::size_t n = B.size();
    W.extracted = Matrix<Rational>(n, n);
    W.rhs.assign(n, MultiPoly());

    std::vector<detail::SlotPattern> slots;
    for (auto& sigma : B) slots.push_back(detail::slot_for_sigma(f, rho, sigma));

    for (int i = 0; i < 4; ++i) {
        for (auto& [m, c] : W.reduced[std::size_t(i)].terms) {
            auto t = detail::split_term(m, f, W.vvars);
            std::size_t row = n;
            for (std::size_t r = 0; r < n; ++r) {
                if (slots[r].cond != i) continue;
                if (t.zexp == slots[r].zexp && t.ximono == slots[r].ximono && !t.has_z4) {
                    row = r;
                    break;
                }
            }
            if (t.vcount > 1) throw std::logic_error("window marker appears nonlinearly");
            if (row == n) continue;
            if (t.vcount == 1) {
                if (!t.rest.f.empty())
                    throw std::logic_error("window marker coefficient is not a pure number");
                W.extracted.at(row, t.vslot) += c;
            } else {
                W.rhs[row] -= MultiPoly::monomial({t.rest.f}, c);
            }
        }
    }

    Matrix<Rational> F = falling_matrix(rho);
    W.row_scale.assign(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r) {
        Rational fac(0);
        for (std::size_t c = 0; c < n; ++c)
            if (F.at(r, c) != 0) { fac = W.extracted.at(r, c) / F.at(r, c); break; }
        if (fac == 0) throw std::logic_error("window row has no reference entry");
        for (std::size_t c = 0; c < n; ++c)
            if (W.extracted.at(r, c) != fac * F.at(r, c))
                throw std::logic_error("window row does not factor through the closed form");
        W.row_scale[r] = fac;
    }
    return W;
}

struct WindowSolution {
    Rational det;                  // determinant of the closed-form matrix
    std::vector<MultiPoly> values; // marker values, window order
    bool window_rows_vanish = false;
};

// Solves the window system and substitutes the solution back: with the system
// satisfied, every window slot coefficient of the reduced conditions is zero.
inline WindowSolution window_solve(const FamilyVars& f, const WindowSystem& W) {
    auto B = cubic_window();
    const std::size_t n = B.size();
    Matrix<Rational> F = falling_matrix(W.rho);

    WindowSolution S;
    S.det = bareiss_determinant(F);

    std::vector<MultiPoly> scaled_rhs(n);
    for (std::size_t r = 0; r < n; ++r)
        scaled_rhs[r] = W.rhs[r] * (Rational(1) / W.row_scale[r]);
    S.values = linear_solve_exact(F, scaled_rhs);

    S.window_rows_vanish = true;
    for (int i = 0; i < 4; ++i) {
        MultiPoly resid = W.reduced[std::size_t(i)];
        for (std::size_t vi = 0; vi < n; ++vi) resid = resid.substitute(W.vvars[vi], S.values[vi]);
        for (std::size_t r = 0; r < n; ++r) {
            auto slot = detail::slot_for_sigma(f, W.rho, B[r]);
            if (slot.cond != i) continue;
            for (auto& [m, c] : resid.terms) {
                auto t = detail::split_term(m, f, W.vvars);
                if (!t.has_z4 && t.zexp == slot.zexp && t.ximono == slot.ximono)
                    S.window_rows_vanish = false;
            }
        }
    }
    return S;
}

} // namespace logjets

#pragma once

#include "family.hpp"
#include "fields.hpp"
#include "matrix.hpp"
#include "poly.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace logjets {

// Head directions: the constant and the three linear coefficient slots.
inline std::vector<MultiIndex> head_indices() {
    return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
}

inline std::vector<MultiIndex> tail_indices() {
    std::vector<MultiIndex> out;
    auto heads = head_indices();
    for (auto& b : cubic_window()) {
        bool is_head = false;
        for (auto& h : heads) is_head = is_head || h == b;
        if (!is_head) out.push_back(b);
    }
    return out;
}

// det of the 3x3 jet matrix [xi_j^(k)].
inline MultiPoly wronskian(const FamilyVars& f) {
    Matrix<MultiPoly> m(3, 3);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) m.at(k, j) = MultiPoly::variable(f.xi[j][k]);
    return poly_determinant(m);
}

struct HeadSolution {
    MultiIndex tail{};
    std::array<MultiPoly, 4> numerator; // head values are numerator/denominator
    MultiPoly denominator;              // the jet wronskian
};

// Sets the given tail coefficient direction to 1 and solves the four induced
// linear conditions for the head directions, by Cramer over the polynomial
// ring. Returns exact numerators over the wronskian.
inline HeadSolution head_solve(const FamilyVars& f, const MultiIndex& tail) {
    const JetBinding bind = f.window_binding();
    auto heads = head_indices();

    Matrix<MultiPoly> H(4, 4);
    for (int col = 0; col < 4; ++col) {
        MultiPoly zc = z_monomial(f, heads[std::size_t(col)]);
        H.at(0, col) = zc;
        for (int k = 1; k <= 3; ++k) H.at(std::size_t(k), col) = derivative_along_jet(zc, bind, k);
    }

    std::array<MultiPoly, 4> rhs;
    MultiPoly zt = z_monomial(f, tail);
    rhs[0] = -zt;
    for (int k = 1; k <= 3; ++k) rhs[std::size_t(k)] = -derivative_along_jet(zt, bind, k);

    HeadSolution sol;
    sol.tail = tail;
    sol.denominator = poly_determinant(H);
    for (int col = 0; col < 4; ++col) {
        Matrix<MultiPoly> Hc = H;
        for (int r = 0; r < 4; ++r) Hc.at(std::size_t(r), std::size_t(col)) = rhs[std::size_t(r)];
        sol.numerator[std::size_t(col)] = poly_determinant(Hc);
    }
    return sol;
}

// H . numerator == denominator . rhs, checked as a polynomial identity.
inline bool head_solution_verifies(const FamilyVars& f, const HeadSolution& sol) {
    const JetBinding bind = f.window_binding();
    auto heads = head_indices();
    MultiPoly zt = z_monomial(f, sol.tail);
    for (int k = 0; k <= 3; ++k) {
        MultiPoly lhs;
        for (int col = 0; col < 4; ++col) {
            MultiPoly zc = z_monomial(f, heads[std::size_t(col)]);
            MultiPoly entry = (k == 0) ? zc : derivative_along_jet(zc, bind, k);
            lhs += entry * sol.numerator[std::size_t(col)];
        }
        MultiPoly rhs_entry = (k == 0) ? zt : derivative_along_jet(zt, bind, k);
        if (!(lhs + sol.denominator * rhs_entry).is_zero()) return false;
    }
    return true;
}

// Weight of a monomial: base variables count 1, order-k jet variables k+1.
inline int pole_weight(const Monomial& m, const FamilyVars& f) {
    int w = 0;
    for (auto& [v, e] : m.f) {
        int unit = 0;
        for (int j = 0; j < 4; ++j) {
            if (v == f.z[j]) unit = 1;
            for (int k = 0; k < 3; ++k)
                if (v == f.xi[j][k]) unit = k + 2;
        }
        if (unit == 0) throw std::invalid_argument("pole_weight saw a non-chart variable");
        w += unit * int(e);
    }
    return w;
}

struct MonomialShape {
    int z_degree = 0;
    std::array<int, 3> xi_degree{}; // per jet order
};

inline MonomialShape monomial_shape(const Monomial& m, const FamilyVars& f) {
    MonomialShape s;
    for (auto& [v, e] : m.f) {
        for (int j = 0; j < 4; ++j) {
            if (v == f.z[j]) s.z_degree += int(e);
            for (int k = 0; k < 3; ++k)
                if (v == f.xi[j][k]) s.xi_degree[std::size_t(k)] += int(e);
        }
    }
    return s;
}

// The four admissible monomial shapes of solved head numerators.
inline bool shape_admissible(const MonomialShape& s) {
    auto& x = s.xi_degree;
    if (s.z_degree <= 3 && x[0] <= 1 && x[1] <= 1 && x[2] <= 1) return true;
    if (s.z_degree <= 2 && x[0] <= 3 && x[1] == 0 && x[2] <= 1) return true;
    if (s.z_degree <= 2 && x[0] <= 2 && x[1] <= 2 && x[2] == 0) return true;
    if (s.z_degree <= 1 && x[0] <= 4 && x[1] <= 1 && x[2] == 0) return true;
    return false;
}

struct PoleAudit {
    int max_weight = 0;
    bool shapes_ok = true;
};

inline PoleAudit pole_order_audit(const std::vector<const MultiPoly*>& polys, const FamilyVars& f,
                                  bool check_shapes) {
    PoleAudit audit;
    for (auto* p : polys)
        for (auto& [m, c] : p->terms) {
            audit.max_weight = std::max(audit.max_weight, pole_weight(m, f));
            if (check_shapes && !shape_admissible(monomial_shape(m, f))) audit.shapes_ok = false;
        }
    return audit;
}

} // namespace logjets

#pragma once

#include "family.hpp"
#include "fields.hpp"
#include "poly.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>

namespace logjets {

inline MultiPoly lie_derivative(const VectorField& V, const MultiPoly& p) {
    MultiPoly out;
    for (auto& [v, coef] : V.comp) {
        MultiPoly d = p.derivative(v);
        if (!d.is_zero()) out += coef * d;
    }
    return out;
}

struct ReductionOutcome {
    MultiPoly reduced;
    int passes = 0;
    bool with_certificate = false;
    std::array<MultiPoly, 4> multiplier; // input == sum multiplier[i] * eq[i] + reduced
};

// Rewrites every monomial carrying z4^d using the locus equations, highest
// jet order first, until none remains. Each rewrite subtracts an explicit
// polynomial multiple of a locus equation, so a certificate can be kept.
inline ReductionOutcome reduce_modulo_locus(const MultiPoly& input, const JetLocus& locus,
                                            const FamilyVars& f, bool want_certificate = false) {
    const int d = locus.d;
    const Var z4 = f.z[3];
    const Var x41 = f.xi[3][0], x42 = f.xi[3][1], x43 = f.xi[3][2];
    const Rational rd(d);

    MultiPoly z4d = MultiPoly::variable(z4, std::uint32_t(d));
    // replacement for z4^d * xi4_k, per rule
    MultiPoly rep3 = locus.S3 * Rational(-1, d) +
                     z4d * MultiPoly::variable(x41) * MultiPoly::variable(x42) * Rational(-3 * d) +
                     z4d * MultiPoly::monomial({{x41, 3}}, Rational(1)) * (-rd * rd);
    MultiPoly rep2 = locus.S2 * Rational(-1, d) +
                     z4d * MultiPoly::monomial({{x41, 2}}, Rational(1)) * (-rd);
    MultiPoly rep1 = locus.S1 * Rational(-1, d);
    MultiPoly rep0 = locus.S * Rational(-1);

    ReductionOutcome out;
    out.with_certificate = want_certificate;

    MultiPoly cur = input;
    while (true) {
        bool changed = false;
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        for (auto& [m, c] : cur.terms) {
            std::uint32_t e4 = m.exponent(z4);
            if (e4 < std::uint32_t(d)) {
                acc[m] += c;
                continue;
            }
            changed = true;
            Monomial rest = m.without(z4, std::uint32_t(d));
            const MultiPoly* rep = nullptr;
            int eq_index = 0;
            Rational mult_scale(1);
            if (rest.exponent(x43) >= 1) {
                rest = rest.without(x43, 1);
                rep = &rep3;
                eq_index = 3;
                mult_scale = Rational(1, d);
            } else if (rest.exponent(x42) >= 1) {
                rest = rest.without(x42, 1);
                rep = &rep2;
                eq_index = 2;
                mult_scale = Rational(1, d);
            } else if (rest.exponent(x41) >= 1) {
                rest = rest.without(x41, 1);
                rep = &rep1;
                eq_index = 1;
                mult_scale = Rational(1, d);
            } else {
                rep = &rep0;
                eq_index = 0;
            }
            MultiPoly base = MultiPoly::monomial({rest.f}, c);
            for (auto& [mm, cc] : (base * *rep).terms) acc[mm] += cc;
            if (want_certificate) out.multiplier[eq_index] += base * mult_scale;
        }
        cur = MultiPoly::from_map(acc);
        ++out.passes;
        if (!changed) break;
        if (out.passes > 400) throw std::runtime_error("locus reduction did not terminate");
    }
    out.reduced = cur;
    return out;
}

// The four tangency conditions of a field: Lie derivative of each equation.
inline std::array<MultiPoly, 4> tangency_conditions(const VectorField& V, const JetLocus& locus) {
    return {lie_derivative(V, locus.eq[0]), lie_derivative(V, locus.eq[1]),
            lie_derivative(V, locus.eq[2]), lie_derivative(V, locus.eq[3])};
}

// True iff all four conditions reduce to zero modulo the locus.
inline bool field_is_tangent(const VectorField& V, const JetLocus& locus, const FamilyVars& f) {
    for (auto& cond : tangency_conditions(V, locus)) {
        if (!reduce_modulo_locus(cond, locus, f).reduced.is_zero()) return false;
    }
    return true;
}

} // namespace logjets

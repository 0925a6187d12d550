#pragma once

#include "poly.hpp"
#include "rational.hpp"
#include "series.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

namespace logjets {

struct PoleAtBasepoint : std::domain_error {
    PoleAtBasepoint() : std::domain_error("jet conversion at a boundary basepoint") {}
};

// xi are successive derivatives of log z along a germ.
struct LogJet3 {
    Rational z;
    std::array<Rational, 3> xi;
    bool operator==(const LogJet3&) const = default;
};

// xi are successive derivatives of z itself.
struct StdJet3 {
    Rational z;
    std::array<Rational, 3> xi;
    bool operator==(const StdJet3&) const = default;
};

inline StdJet3 log_to_std(const LogJet3& j) {
    const Rational& x1 = j.xi[0];
    const Rational& x2 = j.xi[1];
    const Rational& x3 = j.xi[2];
    StdJet3 r;
    r.z = j.z;
    r.xi[0] = j.z * x1;
    r.xi[1] = j.z * (x2 + x1 * x1);
    r.xi[2] = j.z * (x3 + 3 * x1 * x2 + x1 * x1 * x1);
    return r;
}

inline LogJet3 std_to_log(const StdJet3& j) {
    if (j.z == 0) throw PoleAtBasepoint();
    LogJet3 r;
    r.z = j.z;
    Rational x1 = j.xi[0] / j.z;
    Rational x2 = j.xi[1] / j.z - x1 * x1;
    Rational x3 = j.xi[2] / j.z - 3 * x1 * x2 - x1 * x1 * x1;
    r.xi = {x1, x2, x3};
    return r;
}

// Pulls the form dz/z back along a germ z(t) and reports the value and the
// first two derivatives of z'(t)/z(t) at t = 0. Independent oracle for the
// jet conversions above.
inline std::array<Rational, 3> pullback_form_derivatives(const TruncatedSeries& germ) {
    if (germ.c[0] == 0) throw PoleAtBasepoint();
    TruncatedSeries w = germ.derivative() * germ.reciprocal();
    TruncatedSeries w1 = w.derivative();
    TruncatedSeries w2 = w1.derivative();
    return {w.c[0], w1.c[0], w2.c[0]};
}

// Wiring between base variables and their jet variables in a pool.
struct JetBinding {
    std::vector<Var> base;
    std::vector<std::array<Var, 3>> xi; // xi[i][k-1] is the order-k jet of base[i]
};

// Derivative of p along a formal curve whose jets are the bound variables.
// Orders 1..3, standard chain-rule expansion.
inline MultiPoly derivative_along_jet(const MultiPoly& p, const JetBinding& bind, int order) {
    if (order < 1 || order > 3) throw std::invalid_argument("jet derivative order must be 1..3");
    const std::size_t n = bind.base.size();
    std::vector<MultiPoly> d1(n);
    for (std::size_t j = 0; j < n; ++j) d1[j] = p.derivative(bind.base[j]);

    MultiPoly out;
    if (order == 1) {
        for (std::size_t j = 0; j < n; ++j)
            out += d1[j] * MultiPoly::variable(bind.xi[j][0]);
        return out;
    }
    if (order == 2) {
        for (std::size_t j = 0; j < n; ++j) {
            out += d1[j] * MultiPoly::variable(bind.xi[j][1]);
            for (std::size_t k = 0; k < n; ++k) {
                MultiPoly d2 = d1[j].derivative(bind.base[k]);
                if (d2.is_zero()) continue;
                out += d2 * MultiPoly::variable(bind.xi[j][0]) * MultiPoly::variable(bind.xi[k][0]);
            }
        }
        return out;
    }
    for (std::size_t j = 0; j < n; ++j) {
        out += d1[j] * MultiPoly::variable(bind.xi[j][2]);
        for (std::size_t k = 0; k < n; ++k) {
            MultiPoly d2 = d1[j].derivative(bind.base[k]);
            if (d2.is_zero()) continue;
            out += d2 * MultiPoly::variable(bind.xi[j][1]) * MultiPoly::variable(bind.xi[k][0]) * Rational(3);
            for (std::size_t l = 0; l < n; ++l) {
                MultiPoly d3 = d2.derivative(bind.base[l]);
                if (d3.is_zero()) continue;
                out += d3 * MultiPoly::variable(bind.xi[j][0]) * MultiPoly::variable(bind.xi[k][0]) *
                       MultiPoly::variable(bind.xi[l][0]);
            }
        }
    }
    return out;
}

// Deterministic small-rational sampler for property tests.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

    Rational small(int num_lo = -9, int num_hi = 9, int den_hi = 9) {
        std::uniform_int_distribution<int> dn(num_lo, num_hi);
        std::uniform_int_distribution<int> dd(1, den_hi);
        return Rational(dn(rng_), dd(rng_));
    }

    Rational small_nonzero() {
        while (true) {
            Rational q = small();
            if (q != 0) return q;
        }
    }

    LogJet3 log_jet() {
        LogJet3 j;
        j.z = small_nonzero();
        j.xi = {small(), small(), small()};
        return j;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace logjets

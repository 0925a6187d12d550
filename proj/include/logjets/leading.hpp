#pragma once

#include "cohomology.hpp"
#include "interpolate.hpp"
#include "polytope.hpp"
#include "unipoly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace logjets {

// Leading-order data of the graded Euler characteristic: coefficient tables
// indexed by delta power, each entry cubic in d.
struct LeadingTables {
    std::map<int, DCoeffs> chi_leading; // m^9-order coefficient of the graded sum
    DeltaPoly h2_factor;                // multiplies (d+14) in the correction term
    std::map<int, DCoeffs> alpha;       // chi_leading minus the correction
};

inline XDPoly shifted_power(int i, int j, int k) {
    const XDPoly y1{{XDExp{1, 0, 0, 0}, Rational(1)}, {XDExp{0, 0, 0, 1}, Rational(-1)}};
    const XDPoly y2{{XDExp{0, 1, 0, 0}, Rational(1)}, {XDExp{0, 0, 0, 1}, Rational(-1)}};
    const XDPoly y3{{XDExp{0, 0, 1, 0}, Rational(1)}, {XDExp{0, 0, 0, 1}, Rational(-1)}};
    return xd_mul(xd_mul(xd_pow(y1, i), xd_pow(y2, j)), xd_pow(y3, k));
}

// 3/2 |x|^3 times the Vandermonde of (x1, x2, x3), with each x shifted by
// delta; its integral drives the correction term.
inline XDPoly correction_integrand() {
    XDPoly s{{XDExp{1, 0, 0, 0}, Rational(1)},
             {XDExp{0, 1, 0, 0}, Rational(1)},
             {XDExp{0, 0, 1, 0}, Rational(1)},
             {XDExp{0, 0, 0, 1}, Rational(-3)}};
    const XDPoly d12{{XDExp{1, 0, 0, 0}, Rational(1)}, {XDExp{0, 1, 0, 0}, Rational(-1)}};
    const XDPoly d13{{XDExp{1, 0, 0, 0}, Rational(1)}, {XDExp{0, 0, 1, 0}, Rational(-1)}};
    const XDPoly d23{{XDExp{0, 1, 0, 0}, Rational(1)}, {XDExp{0, 0, 1, 0}, Rational(-1)}};
    XDPoly h = xd_mul(xd_mul(xd_mul(xd_pow(s, 3), d12), d13), d23);
    for (auto& [e, c] : h) c *= Rational(3, 2);
    return h;
}

inline LeadingTables leading_tables(const EulerPolynomial& P) {
    const Simplex3 region = standard_region();
    LeadingTables T;

    EulerPolynomial top = P.part_of_lambda_degree(6);
    for (auto& [e, cs] : top.terms) {
        XDPoly term = shifted_power(e[0], e[1], e[2]);
        if (!xd_homogeneous(term, 6))
            throw std::logic_error("leading integrand is not homogeneous of degree 6");
        for (auto& [ddeg, val] : integrate_over(region, term)) {
            auto& slot = T.chi_leading[ddeg];
            slot = slot + cs * val;
        }
    }
    for (auto it = T.chi_leading.begin(); it != T.chi_leading.end();)
        it = it->second.is_zero() ? T.chi_leading.erase(it) : std::next(it);

    T.h2_factor = integrate_over(region, correction_integrand());

    for (int k = 0; k < 4; ++k) {
        DCoeffs a{};
        if (auto it = T.chi_leading.find(k); it != T.chi_leading.end()) a = it->second;
        if (auto it = T.h2_factor.find(k); it != T.h2_factor.end()) {
            a.c[0] -= 14 * it->second;
            a.c[1] -= it->second;
        }
        if (!a.is_zero()) T.alpha[k] = a;
    }
    return T;
}

// The published coefficient table for the positivity polynomial: numerators
// over the common denominator 408240000000, rows by delta power.
inline std::map<int, DCoeffs> reference_alpha_table() {
    const Rational den(Integer("408240000000"));
    auto row = [&](long c0, long c1, long c2, long c3) {
        return DCoeffs{{Rational(c0) / den, Rational(c1) / den, Rational(c2) / den,
                        Rational(c3) / den}};
    };
    return {{0, row(-968320, 604704, -82956, 1945)},
            {1, row(12165120, -8579520, 1804680, -105030)},
            {2, row(-50181120, 37635840, -9408960, 784080)},
            {3, row(67737600, -50803200, 12700800, -1058400)}};
}

// The published leading-coefficient display for the graded Euler
// characteristic at delta = 0, exactly as printed.
inline DCoeffs reference_chi_leading_display() {
    return DCoeffs{{Rational(-1513, Integer("63787500")),
                    Rational(6299, Integer("4252500000")),
                    Rational(-6913, Integer("34020000000")),
                    Rational(389, Integer("81648000000"))}};
}

// Cubic in delta obtained by fixing d in a coefficient table.
inline UniPoly delta_cubic(const std::map<int, DCoeffs>& table, long d) {
    std::vector<Rational> cs(4, Rational(0));
    for (auto& [k, row] : table)
        if (k >= 0 && k < 4) cs[std::size_t(k)] = row.at(d);
    return UniPoly(cs);
}

// Exact sum of n^k for n = 0..N, k <= 6.
inline Rational power_sum(long N, int k) {
    if (N < 0) return Rational(0);
    Integer n(N);
    switch (k) {
    case 0: return Rational(n + 1);
    case 1: return Rational(n * (n + 1), 2);
    case 2: return Rational(n * (n + 1) * (2 * n + 1), 6);
    case 3: return Rational(n * n * (n + 1) * (n + 1), 4);
    case 4: return Rational(n * (n + 1) * (2 * n + 1) * (3 * n * n + 3 * n - 1), 30);
    case 5: return Rational(n * n * (n + 1) * (n + 1) * (2 * n * n + 2 * n - 1), 12);
    case 6:
        return Rational(n * (n + 1) * (2 * n + 1) * (3 * n * n * n * n + 6 * n * n * n - 3 * n + 1),
                        42);
    default: throw std::invalid_argument("power_sum limited to k <= 6");
    }
}

// Graded Euler characteristic at weight m via closed-form index sums: the
// inner l2 sum is collapsed with power_sum instead of being enumerated.
// Coefficient denominators are cleared up front so the hot loops run on
// integers.
inline Rational graded_sum_fast(const EulerPolynomial& P, long m, long d) {
    std::vector<std::pair<LamExp, Rational>> Pd;
    Integer den(1);
    for (auto& [e, cs] : P.terms) {
        Rational v = cs.at(d);
        if (v == 0) continue;
        Pd.emplace_back(e, v);
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    }
    std::vector<std::pair<LamExp, Integer>> Pi;
    for (auto& [e, v] : Pd)
        Pi.emplace_back(e, boost::multiprecision::numerator(v) *
                               (den / boost::multiprecision::denominator(v)));

    Rational total(0);
    for (long g = 0; 5 * g <= m; ++g) {
        const long w = m - g;
        if (w - 4 * g < 0) break;
        for (long l3 = 0; l3 <= (w - 4 * g) / 6; ++l3) {
            const long lo = l3 + g, hi = (w - g - 3 * l3) / 3;
            if (hi < lo) continue;
            const long u = w - 3 * l3;
            std::array<Integer, 7> coef{};
            std::array<Integer, 7> l3p, upow;
            l3p[0] = 1;
            upow[0] = 1;
            for (int k = 1; k < 7; ++k) {
                l3p[std::size_t(k)] = l3p[std::size_t(k - 1)] * l3;
                upow[std::size_t(k)] = upow[std::size_t(k - 1)] * u;
            }
            for (auto& [e, c] : Pi) {
                Integer cc = c * l3p[std::size_t(e[2])];
                Integer pw(1); // (-2)^t
                for (int t = 0; t <= e[0]; ++t) {
                    // l1^i = (u - 2 l2)^i expanded binomially in l2
                    coef[std::size_t(t + e[1])] +=
                        cc * binomial(e[0], t) * upow[std::size_t(e[0] - t)] * pw;
                    pw *= -2;
                }
            }
            for (int k2 = 0; k2 < 7; ++k2)
                if (coef[std::size_t(k2)] != 0)
                    total += Rational(coef[std::size_t(k2)]) *
                             (power_sum(hi, k2) - power_sum(lo - 1, k2));
        }
    }
    return total / Rational(den);
}

// Ninth finite difference of the graded sum over an arithmetic progression of
// step 60, normalized to expose the m^9 coefficient.
inline Rational ninth_difference_leading(const EulerPolynomial& P, long d, long m0) {
    Rational diff(0);
    for (int k = 0; k <= 9; ++k) {
        Rational v = graded_sum_fast(P, m0 + 60 * k, d);
        Integer sgn = ((9 - k) % 2 == 0) ? Integer(1) : Integer(-1);
        diff += Rational(sgn * binomial(9, k)) * v;
    }
    return diff / Rational(factorial(9) * ipow(Integer(60), 9));
}

} // namespace logjets

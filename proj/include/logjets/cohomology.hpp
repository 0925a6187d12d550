#pragma once

#include "rational.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace logjets {

using Partition = std::array<long, 3>;

// Chern coefficients (e1, e2, e3) of the rank-3 bundle whose Schur functors
// are being counted, as polynomials in the surface degree d.
inline std::array<Rational, 3> chern_coefficients(long d) {
    return {Rational(d - 4), Rational(d * d - 4 * d + 6),
            Rational(d * d * d - 4 * d * d + 6 * d - 4)};
}

struct WeightMoments {
    Integer count{0};
    Integer s1{0}, s2{0}, s11{0};
    Integer s3{0}, s21{0}, s111{0};
};

// Power sums of the weights (m1, m2, m3) enumerated by triangular patterns
// p in [l2, l1], q in [l3, l2], r in [q, p].
inline WeightMoments weight_moments(const Partition& lam) {
    auto [l1, l2, l3] = lam;
    if (l1 < l2 || l2 < l3) throw std::invalid_argument("weights must be non-increasing");
    WeightMoments w;
    const long tot = l1 + l2 + l3;
    for (long p = l2; p <= l1; ++p)
        for (long q = l3; q <= l2; ++q)
            for (long r = q; r <= p; ++r) {
                Integer m1(r), m2(p + q - r), m3(tot - p - q);
                w.count += 1;
                w.s1 += m1;
                w.s2 += m1 * m1;
                w.s11 += m1 * m2;
                w.s3 += m1 * m1 * m1;
                w.s21 += m1 * m1 * m2;
                w.s111 += m1 * m2 * m3;
            }
    return w;
}

inline Integer weyl_dim(const Partition& lam) {
    auto [l1, l2, l3] = lam;
    return Integer(l1 - l2 + 1) * Integer(l1 - l3 + 2) * Integer(l2 - l3 + 1) / 2;
}

// Pairing of a Chern character (a0, a1, a2, a3) against the Todd class of
// projective 3-space.
inline Rational todd_contraction(const std::array<Rational, 4>& ch) {
    return ch[3] + 2 * ch[2] + Rational(11, 6) * ch[1] + ch[0];
}

// Euler characteristic of the Schur-functor twist: the Chern character
// components are assembled from power sums of the weight decomposition and
// paired against the Todd class.
inline Rational euler_characteristic(const Partition& lam, long d) {
    WeightMoments w = weight_moments(lam);
    auto [e1, e2, e3] = chern_coefficients(d);
    Rational a0 = Rational(w.count);
    Rational a1 = Rational(w.s1) * e1;
    Rational a2 = Rational(w.s2) / 2 * (e1 * e1 - 2 * e2) + Rational(w.s11) * e2;
    Rational a3 = Rational(w.s3) / 6 * (e1 * e1 * e1 - 3 * e1 * e2 + 3 * e3) +
                  Rational(w.s21) / 2 * (e1 * e2 - 3 * e3) + Rational(w.s111) * e3;
    return todd_contraction({a0, a1, a2, a3});
}

// chi of O(k) on projective 3-space through the same Todd pairing; the
// binomial identity C(k+3, 3) is left to the callers as a cross-check.
inline Rational euler_characteristic_line(long k) {
    Rational kk(k);
    return todd_contraction({Rational(1), kk, kk * kk / 2, kk * kk * kk / 6});
}

struct GradedSummand {
    long twist = 0;
    Partition lam{};
    bool operator==(const GradedSummand&) const = default;
    auto operator<=>(const GradedSummand&) const = default;
};

// Summands of the weight-m graded decomposition, enumerated in closed form:
// twist g with 5g <= m, l3 up to (m-5g)/6, l2 in [l3+g, (m-g-3*l3)/3],
// l1 determined by the weight.
inline std::vector<GradedSummand> graded_summands(long m) {
    std::vector<GradedSummand> out;
    for (long g = 0; 5 * g <= m; ++g) {
        const long w = m - g;
        if (w - 4 * g < 0) continue;
        for (long l3 = 0; l3 <= (w - 4 * g) / 6; ++l3) {
            const long lo = l3 + g, hi = (w - g - 3 * l3) / 3;
            for (long l2 = lo; l2 <= hi; ++l2)
                out.push_back({g, {w - 2 * l2 - 3 * l3, l2, l3}});
        }
    }
    return out;
}

// Same set by exhaustive scan over the defining inequalities; oracle for
// graded_summands.
inline std::vector<GradedSummand> graded_summands_brute(long m) {
    std::vector<GradedSummand> out;
    for (long g = 0; g <= m; ++g) {
        const long w = m - g;
        for (long l1 = 0; l1 <= w; ++l1)
            for (long l2 = 0; l2 <= l1; ++l2)
                for (long l3 = 0; l3 <= l2; ++l3)
                    if (l1 + 2 * l2 + 3 * l3 == w && l1 - l2 >= g && l2 - l3 >= g &&
                        l1 - l3 >= g && 5 * g <= m)
                        out.push_back({g, {l1, l2, l3}});
    }
    return out;
}

// Cardinality of graded_summands(m) without materializing it; the inner l2
// range collapses to its length.
inline Integer graded_summand_count(long m) {
    Integer n(0);
    for (long g = 0; 5 * g <= m; ++g) {
        const long w = m - g;
        if (w - 4 * g < 0) continue;
        for (long l3 = 0; l3 <= (w - 4 * g) / 6; ++l3) {
            const long lo = l3 + g, hi = (w - g - 3 * l3) / 3;
            if (hi >= lo) n += hi - lo + 1;
        }
    }
    return n;
}

inline Rational euler_characteristic_graded(long m, long d) {
    Rational total(0);
    for (auto& s : graded_summands(m)) total += euler_characteristic(s.lam, d);
    return total;
}

} // namespace logjets

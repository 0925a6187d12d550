#pragma once

#include "cohomology.hpp"
#include "rational.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace logjets {

// Coefficients of a polynomial of degree <= 3 in d, low to high.
struct DCoeffs {
    std::array<Rational, 4> c{};

    DCoeffs operator+(const DCoeffs& o) const {
        DCoeffs r;
        for (int i = 0; i < 4; ++i) r.c[std::size_t(i)] = c[std::size_t(i)] + o.c[std::size_t(i)];
        return r;
    }
    DCoeffs operator-(const DCoeffs& o) const {
        DCoeffs r;
        for (int i = 0; i < 4; ++i) r.c[std::size_t(i)] = c[std::size_t(i)] - o.c[std::size_t(i)];
        return r;
    }
    DCoeffs operator*(const Rational& x) const {
        DCoeffs r;
        for (int i = 0; i < 4; ++i) r.c[std::size_t(i)] = c[std::size_t(i)] * x;
        return r;
    }
    bool operator==(const DCoeffs&) const = default;

    bool is_zero() const {
        for (auto& v : c)
            if (v != 0) return false;
        return true;
    }
    Rational at(long d) const {
        Rational D(d);
        return ((c[3] * D + c[2]) * D + c[1]) * D + c[0];
    }
};

// Newton divided differences on distinct nodes; returns monomial coefficients
// low to high. T needs +, -, *Rational and a zero default state.
template <typename T>
std::vector<T> newton_coefficients(const std::vector<long>& xs, std::vector<T> ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw std::invalid_argument("newton_coefficients size mismatch");
    std::vector<std::vector<T>> table{ys};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<T> row;
        for (std::size_t i = 0; i + k < n; ++i)
            row.push_back((table[k - 1][i + 1] - table[k - 1][i]) *
                          Rational(1, Integer(xs[i + k] - xs[i])));
        table.push_back(std::move(row));
    }
    std::vector<T> coeffs(n);
    std::vector<Rational> basis{Rational(1)};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            coeffs[i] = coeffs[i] + table[k][0] * basis[i];
        std::vector<Rational> nb(basis.size() + 1, Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            nb[i + 1] += basis[i];
            nb[i] -= Rational(xs[k]) * basis[i];
        }
        basis = std::move(nb);
    }
    return coeffs;
}

using LamExp = std::array<int, 3>;

// Closed form of euler_characteristic as a polynomial in (l1, l2, l3, d):
// terms keyed by the lambda exponents, values cubic in d.
struct EulerPolynomial {
    std::map<LamExp, DCoeffs> terms;

    Rational evaluate(const Partition& lam, long d) const {
        Rational s(0);
        for (auto& [e, cs] : terms) {
            Rational mono = qpow(Rational(lam[0]), e[0]) * qpow(Rational(lam[1]), e[1]) *
                            qpow(Rational(lam[2]), e[2]);
            s += mono * cs.at(d);
        }
        return s;
    }

    // Terms of the given total degree in lambda.
    EulerPolynomial part_of_lambda_degree(int deg) const {
        EulerPolynomial out;
        for (auto& [e, cs] : terms)
            if (e[0] + e[1] + e[2] == deg) out.terms.emplace(e, cs);
        return out;
    }

    int max_lambda_degree() const {
        int m = 0;
        for (auto& [e, cs] : terms) m = std::max(m, e[0] + e[1] + e[2]);
        return m;
    }
};

namespace detail {

using ExpPoly = std::map<LamExp, Rational>;

inline ExpPoly exp_mul(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly c;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) {
            LamExp k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]};
            c[k] += va * vb;
        }
    return c;
}

inline ExpPoly exp_pow(ExpPoly a, int n) {
    ExpPoly r{{LamExp{0, 0, 0}, Rational(1)}};
    for (int i = 0; i < n; ++i) r = exp_mul(r, a);
    return r;
}

} // namespace detail

// Fits the Euler characteristic on the grid of successive-difference
// coordinates (mu grid 0..6 cubed, d grid 10..14), checks the degree bounds,
// and rewrites the result in the lambda coordinates themselves.
inline EulerPolynomial euler_polynomial() {
    const std::vector<long> dgrid{10, 11, 12, 13, 14};
    const std::vector<long> mu{0, 1, 2, 3, 4, 5, 6};
    const std::size_t M = mu.size();

    auto idx = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * M + j) * M + k; };
    std::vector<DCoeffs> node(M * M * M);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j)
            for (std::size_t k = 0; k < M; ++k) {
                const long l3 = mu[k], l2 = mu[k] + mu[j], l1 = mu[k] + mu[j] + mu[i];
                std::vector<Rational> ys;
                for (long d : dgrid) ys.push_back(euler_characteristic({l1, l2, l3}, d));
                auto cs = newton_coefficients(dgrid, ys);
                if (cs[4] != 0) throw std::logic_error("degree in d exceeds 3");
                node[idx(i, j, k)] = DCoeffs{{cs[0], cs[1], cs[2], cs[3]}};
            }

    // Interpolate the innermost index first, then the middle, then the outer.
    std::vector<DCoeffs> c3(M * M * M), c2(M * M * M), c1(M * M * M);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j) {
            std::vector<DCoeffs> ys;
            for (std::size_t k = 0; k < M; ++k) ys.push_back(node[idx(i, j, k)]);
            auto cs = newton_coefficients(mu, ys);
            for (std::size_t k = 0; k < M; ++k) c3[idx(i, j, k)] = cs[k];
        }
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t k = 0; k < M; ++k) {
            std::vector<DCoeffs> ys;
            for (std::size_t j = 0; j < M; ++j) ys.push_back(c3[idx(i, j, k)]);
            auto cs = newton_coefficients(mu, ys);
            for (std::size_t j = 0; j < M; ++j) c2[idx(i, j, k)] = cs[j];
        }
    for (std::size_t j = 0; j < M; ++j)
        for (std::size_t k = 0; k < M; ++k) {
            std::vector<DCoeffs> ys;
            for (std::size_t i = 0; i < M; ++i) ys.push_back(c2[idx(i, j, k)]);
            auto cs = newton_coefficients(mu, ys);
            for (std::size_t i = 0; i < M; ++i) c1[idx(i, j, k)] = cs[i];
        }

    // mu1 = l1 - l2, mu2 = l2 - l3, mu3 = l3.
    const detail::ExpPoly L1{{LamExp{1, 0, 0}, Rational(1)}, {LamExp{0, 1, 0}, Rational(-1)}};
    const detail::ExpPoly L2{{LamExp{0, 1, 0}, Rational(1)}, {LamExp{0, 0, 1}, Rational(-1)}};
    const detail::ExpPoly L3{{LamExp{0, 0, 1}, Rational(1)}};

    EulerPolynomial P;
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j)
            for (std::size_t k = 0; k < M; ++k) {
                const DCoeffs& cs = c1[idx(i, j, k)];
                if (cs.is_zero()) continue;
                if (i + j + k > 6) throw std::logic_error("degree in the index grid exceeds 6");
                auto mono = detail::exp_mul(
                    detail::exp_mul(detail::exp_pow(L1, int(i)), detail::exp_pow(L2, int(j))),
                    detail::exp_pow(L3, int(k)));
                for (auto& [key, coef] : mono) {
                    auto& slot = P.terms[key];
                    slot = slot + cs * coef;
                }
            }
    for (auto it = P.terms.begin(); it != P.terms.end();)
        it = it->second.is_zero() ? P.terms.erase(it) : std::next(it);
    if (P.max_lambda_degree() > 6) throw std::logic_error("lambda degree exceeds 6");
    return P;
}

} // namespace logjets

#include <catch2/catch_amalgamated.hpp>

#include <logjets/family.hpp>
#include <logjets/jets.hpp>
#include <logjets/series.hpp>

using namespace logjets;

namespace {

// Germ z(t) = j.z * exp-like series whose log-derivatives at 0 are exactly
// j.xi: built directly from the standard jet, since z^(k)(0)/k! = c_k.
TruncatedSeries germ_from_std(const StdJet3& s, const Rational& c4) {
    TruncatedSeries g;
    g.c[0] = s.z;
    g.c[1] = s.xi[0];
    g.c[2] = s.xi[1] / 2;
    g.c[3] = s.xi[2] / 6;
    g.c[4] = c4;
    return g;
}

} // namespace

TEST_CASE("log to standard jet conversion on worked values") {
    LogJet3 a{Rational(2), {Rational(3), Rational(0), Rational(0)}};
    StdJet3 sa = log_to_std(a);
    CHECK(sa.z == 2);
    CHECK(sa.xi[0] == 6);
    CHECK(sa.xi[1] == 18);
    CHECK(sa.xi[2] == 54);

    LogJet3 b{Rational(1), {Rational(1), Rational(1), Rational(1)}};
    StdJet3 sb = log_to_std(b);
    CHECK(sb.xi[0] == 1);
    CHECK(sb.xi[1] == 2);
    CHECK(sb.xi[2] == 5);
}

TEST_CASE("jet conversion round trips on seeded samples") {
    RationalSampler gen(20240917);
    for (int i = 0; i < 400; ++i) {
        LogJet3 j = gen.log_jet();
        CHECK(std_to_log(log_to_std(j)) == j);

        StdJet3 s{gen.small_nonzero(), {gen.small(), gen.small(), gen.small()}};
        CHECK(log_to_std(std_to_log(s)) == s);
    }
}

TEST_CASE("conversion at a boundary basepoint throws") {
    StdJet3 s{Rational(0), {Rational(1), Rational(2), Rational(3)}};
    CHECK_THROWS_AS(std_to_log(s), PoleAtBasepoint);
    TruncatedSeries dead;
    CHECK_THROWS_AS(pullback_form_derivatives(dead), PoleAtBasepoint);
}

TEST_CASE("series pullback oracle agrees with the algebraic conversion") {
    RationalSampler gen(7);
    for (int i = 0; i < 300; ++i) {
        StdJet3 s{gen.small_nonzero(), {gen.small(), gen.small(), gen.small()}};
        TruncatedSeries germ = germ_from_std(s, gen.small());
        auto w = pullback_form_derivatives(germ);
        LogJet3 lg = std_to_log(s);
        CHECK(lg.xi[0] == w[0]);
        CHECK(lg.xi[1] == w[1]);
        CHECK(lg.xi[2] == w[2]);
    }
}

TEST_CASE("truncated series arithmetic") {
    TruncatedSeries f;
    f.c = {Rational(2), Rational(-1), Rational(1, 2), Rational(0), Rational(3)};
    TruncatedSeries r = f.reciprocal();
    TruncatedSeries prod = f * r;
    CHECK(prod.c[0] == 1);
    for (int k = 1; k <= TruncatedSeries::order; ++k) CHECK(prod.c[std::size_t(k)] == 0);

    TruncatedSeries g;
    g.c = {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)};
    TruncatedSeries lhs = (f * g).derivative();
    TruncatedSeries rhs = f.derivative() * g + f * g.derivative();
    // Leibniz holds below the truncation boundary.
    for (int k = 0; k < TruncatedSeries::order; ++k) CHECK(lhs.c[std::size_t(k)] == rhs.c[std::size_t(k)]);
}

TEST_CASE("chain rule operator on a cubic monomial") {
    VarPool pool;
    FamilyVars f = make_family_vars(pool, 1, false);
    JetBinding bind = f.window_binding();

    MultiPoly z1 = MultiPoly::variable(f.z[0]);
    MultiPoly x1 = MultiPoly::variable(f.xi[0][0]);
    MultiPoly x2 = MultiPoly::variable(f.xi[0][1]);
    MultiPoly x3 = MultiPoly::variable(f.xi[0][2]);

    MultiPoly p = z1.pow(3);
    CHECK(derivative_along_jet(p, bind, 1) == z1.pow(2) * x1 * Rational(3));
    CHECK(derivative_along_jet(p, bind, 2) == z1.pow(2) * x2 * Rational(3) + z1 * x1.pow(2) * Rational(6));
    CHECK(derivative_along_jet(p, bind, 3) ==
          z1.pow(2) * x3 * Rational(3) + z1 * x2 * x1 * Rational(18) + x1.pow(3) * Rational(6));
}

TEST_CASE("chain rule orders compose like iterated series derivatives") {
    // Evaluate D_k(p) on a sampled jet and compare against derivatives of
    // p(z(t)) for a concrete germ z(t).
    VarPool pool;
    FamilyVars f = make_family_vars(pool, 1, false);
    JetBinding bind = f.window_binding();
    RationalSampler gen(99);

    MultiPoly z1 = MultiPoly::variable(f.z[0]);
    MultiPoly z2 = MultiPoly::variable(f.z[1]);
    MultiPoly p = z1.pow(2) * z2 + z2.pow(3) * Rational(1, 3) + z1 * Rational(-2);

    for (int trial = 0; trial < 40; ++trial) {
        std::array<TruncatedSeries, 3> germ;
        for (auto& g : germ)
            g.c = {gen.small(), gen.small(), gen.small(), gen.small(), gen.small()};

        // p composed with the germs, then differentiated as a series
        TruncatedSeries comp;
        auto sq = [](const TruncatedSeries& s) { return s * s; };
        comp = sq(germ[0]) * germ[1] + sq(germ[1]) * germ[1] * Rational(1, 3) +
               germ[0] * Rational(-2);

        std::unordered_map<Var, Rational> at;
        for (int j = 0; j < 3; ++j) {
            at[f.z[std::size_t(j)]] = germ[std::size_t(j)].c[0];
            at[f.xi[std::size_t(j)][0]] = germ[std::size_t(j)].c[1];
            at[f.xi[std::size_t(j)][1]] = germ[std::size_t(j)].c[2] * 2;
            at[f.xi[std::size_t(j)][2]] = germ[std::size_t(j)].c[3] * 6;
        }

        TruncatedSeries d1 = comp.derivative();
        TruncatedSeries d2 = d1.derivative();
        TruncatedSeries d3 = d2.derivative();
        CHECK(derivative_along_jet(p, bind, 1).evaluate(at) == d1.c[0]);
        CHECK(derivative_along_jet(p, bind, 2).evaluate(at) == d2.c[0]);
        CHECK(derivative_along_jet(p, bind, 3).evaluate(at) == d3.c[0]);
    }
}

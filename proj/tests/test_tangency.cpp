#include <catch2/catch_amalgamated.hpp>

#include <logjets/family.hpp>
#include <logjets/fields.hpp>
#include <logjets/tangency.hpp>

using namespace logjets;

namespace {

struct Chart {
    VarPool pool;
    FamilyVars f;
    JetLocus locus;
    Chart(int d) : f(make_family_vars(pool, d)), locus(build_jet_locus(f)) {}
};

} // namespace

TEST_CASE("locus equations carry the expected leading jet terms") {
    Chart c(2);
    auto& f = c.f;

    Monomial z4d = MultiPoly::variable(f.z[3], 2).terms[0].first;
    CHECK(c.locus.eq[0].coefficient_of(z4d) == 1);
    CHECK(c.locus.eq[0].term_count() == std::size_t(1 + multi_indices(2).size()));

    Monomial m1 = (MultiPoly::variable(f.z[3], 2) * MultiPoly::variable(f.xi[3][0])).terms[0].first;
    CHECK(c.locus.eq[1].coefficient_of(m1) == 2);

    Monomial m2sq =
        (MultiPoly::variable(f.z[3], 2) * MultiPoly::variable(f.xi[3][0], 2)).terms[0].first;
    CHECK(c.locus.eq[2].coefficient_of(m2sq) == 4);

    Monomial m3cu =
        (MultiPoly::variable(f.z[3], 2) * MultiPoly::variable(f.xi[3][0], 3)).terms[0].first;
    CHECK(c.locus.eq[3].coefficient_of(m3cu) == 8);

    Monomial cross = (MultiPoly::variable(f.z[3], 2) * MultiPoly::variable(f.xi[3][0]) *
                      MultiPoly::variable(f.xi[3][1]))
                         .terms[0]
                         .first;
    CHECK(c.locus.eq[3].coefficient_of(cross) == 12);
}

TEST_CASE("reduction eliminates the pivot power and returns a certificate") {
    Chart c(3);
    auto& f = c.f;

    MultiPoly input = MultiPoly::variable(f.z[3], 3) * MultiPoly::variable(f.xi[3][2]) *
                          MultiPoly::variable(f.z[0]) +
                      MultiPoly::variable(f.z[3], 6) * MultiPoly::variable(f.xi[3][0], 2) +
                      MultiPoly::variable(f.z[3], 4) * Rational(5) +
                      MultiPoly::variable(f.a.at({1, 1, 1}));

    ReductionOutcome out = reduce_modulo_locus(input, c.locus, f, true);

    for (auto& [m, coef] : out.reduced.terms) CHECK(m.exponent(f.z[3]) < 3);

    MultiPoly recombined = out.reduced;
    for (int i = 0; i < 4; ++i)
        recombined += out.multiplier[std::size_t(i)] * c.locus.eq[std::size_t(i)];
    CHECK(recombined == input);
}

TEST_CASE("reduction certificate on every locus equation is the equation itself") {
    Chart c(2);
    for (int i = 0; i < 4; ++i) {
        ReductionOutcome out = reduce_modulo_locus(c.locus.eq[std::size_t(i)], c.locus, c.f, true);
        CHECK(out.reduced.is_zero());
        MultiPoly recombined = out.reduced;
        for (int k = 0; k < 4; ++k)
            recombined += out.multiplier[std::size_t(k)] * c.locus.eq[std::size_t(k)];
        CHECK(recombined == c.locus.eq[std::size_t(i)]);
    }
}

TEST_CASE("binomial coefficient fields are tangent at degree 4") {
    Chart c(4);
    auto& f = c.f;

    CHECK(field_is_tangent(binomial_field(f, {4, 0, 0}, {4, 0, 0}, {1, 2, 3}), c.locus, f));
    CHECK(field_is_tangent(binomial_field(f, {3, 1, 0}, {3, 1, 0}, {1, 2, 3}), c.locus, f));
    CHECK(field_is_tangent(binomial_field(f, {2, 2, 0}, {2, 2, 0}, {1, 2, 3}), c.locus, f));
    CHECK(field_is_tangent(binomial_field(f, {2, 1, 1}, {2, 1, 1}, {1, 2, 3}), c.locus, f));
}

TEST_CASE("binomial field tangency survives slot permutation and alpha shifts") {
    Chart c(4);
    auto& f = c.f;

    // pattern slots sent to axes (3, 2, 1): floor (0, 2, 2)
    CHECK(field_is_tangent(binomial_field(f, {2, 2, 0}, {0, 2, 2}, {3, 2, 1}), c.locus, f));
    CHECK(field_is_tangent(binomial_field(f, {3, 1, 0}, {3, 1, 0}, {1, 2, 3}), c.locus, f));

    // alpha strictly above the floor needs one more degree of room
    Chart c5(5);
    CHECK(field_is_tangent(binomial_field(c5.f, {2, 1, 1}, {2, 2, 1}, {1, 2, 3}), c5.locus,
                           c5.f));
    CHECK(field_is_tangent(binomial_field(c5.f, {2, 2, 0}, {1, 2, 2}, {2, 3, 1}), c5.locus,
                           c5.f));
}

TEST_CASE("the six-term literal variant of the 220 field is not tangent") {
    Chart c(4);
    auto& f = c.f;

    auto zmono = [&](int e1, int e2, Rational coef) {
        return MultiPoly::monomial({{f.z[0], std::uint32_t(e1)}, {f.z[1], std::uint32_t(e2)}},
                                   std::move(coef));
    };
    VectorField bad;
    bad.add(f.a.at({2, 2, 0}), MultiPoly::constant(Rational(1)));
    bad.add(f.a.at({2, 1, 0}), zmono(0, 1, Rational(-1)));
    bad.add(f.a.at({1, 2, 0}), zmono(1, 0, Rational(-1)));
    bad.add(f.a.at({1, 0, 0}), zmono(1, 2, Rational(1)));
    bad.add(f.a.at({0, 1, 0}), zmono(2, 1, Rational(1)));
    bad.add(f.a.at({0, 0, 0}), zmono(2, 2, Rational(-1)));

    CHECK_FALSE(field_is_tangent(bad, c.locus, f));
}

TEST_CASE("binomial field construction rejects out-of-family targets") {
    Chart c(4);
    CHECK_THROWS_AS(binomial_field(c.f, {4, 0, 0}, {3, 0, 0}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(binomial_field(c.f, {2, 2, 0}, {2, 2, 0}, {0, 2, 3}), std::invalid_argument);
}

TEST_CASE("coefficient flow field is tangent with symbolic direction weights") {
    for (int d : {2, 3}) {
        Chart c(d);
        VectorField V = coefficient_flow_field(c.f);
        CHECK(field_is_tangent(V, c.locus, c.f));
    }
}

TEST_CASE("coefficient flow components are affine in the family coefficients") {
    Chart c(3);
    VectorField V = coefficient_flow_field(c.f);
    for (auto& [al, avar] : c.f.a) {
        auto it = V.comp.find(avar);
        REQUIRE(it != V.comp.end());
        int adeg = it->second.degree_where(
            [&](Var v) { return c.pool.name(v).starts_with("a["); });
        CHECK(adeg <= 1);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <logjets/poly.hpp>
#include <logjets/rational.hpp>
#include <logjets/varpool.hpp>

using namespace logjets;

TEST_CASE("rational text round trip") {
    CHECK(to_text(Rational(3, 4)) == "3/4");
    CHECK(to_text(Rational(-6, 8)) == "-3/4");
    CHECK(to_text(Rational(5)) == "5");
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("rational helpers") {
    CHECK(qpow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(qpow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(qpow(Rational(7), 0) == 1);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(4, 7) == 0);
    CHECK(factorial(6) == 720);
    CHECK(rational_floor(Rational(7, 2)) == 3);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_floor(Rational(4)) == 4);
}

TEST_CASE("graded-lex term order and canonical text") {
    VarPool pool;
    Var z1 = pool.intern("z1"), z2 = pool.intern("z2");

    MultiPoly p = MultiPoly::monomial({{z1, 2}, {z2, 1}}, Rational(3)) +
                  MultiPoly::constant(Rational(-1, 2));
    CHECK(p.to_text(pool) == "3*z1^2*z2 - 1/2");

    MultiPoly q = MultiPoly::variable(z2, 2) + MultiPoly::variable(z1, 1) * MultiPoly::variable(z2, 1) +
                  MultiPoly::variable(z1, 2);
    CHECK(q.to_text(pool) == "z1^2 + z1*z2 + z2^2");

    Monomial a = MultiPoly::variable(z1, 2).terms[0].first;
    Monomial b = (MultiPoly::variable(z1) * MultiPoly::variable(z2)).terms[0].first;
    CHECK(grlex_less(b, a));
    CHECK_FALSE(grlex_less(a, b));
}

TEST_CASE("polynomial arithmetic") {
    VarPool pool;
    Var x = pool.intern("x"), y = pool.intern("y");
    MultiPoly px = MultiPoly::variable(x), py = MultiPoly::variable(y);

    MultiPoly s = (px + py).pow(3);
    CHECK(s.coefficient_of((px * px * py).terms[0].first) == 3);
    CHECK(s.term_count() == 4);

    MultiPoly diff = s.derivative(x);
    MultiPoly expect = (px + py).pow(2) * Rational(3);
    CHECK(diff == expect);

    MultiPoly zero = s - s;
    CHECK(zero.is_zero());
    CHECK(zero.to_text(pool) == "0");

    CHECK((px * Rational(0)).is_zero());
    CHECK(s.degree() == 3);
    CHECK(s.degree_in(x) == 3);
}

TEST_CASE("substitution and evaluation") {
    VarPool pool;
    Var x = pool.intern("x"), y = pool.intern("y");
    MultiPoly p = MultiPoly::variable(x, 2) + MultiPoly::variable(y) * Rational(2);

    MultiPoly shifted = p.substitute(x, MultiPoly::variable(x) - MultiPoly::constant(Rational(1)));
    std::unordered_map<Var, Rational> at{{x, Rational(1)}, {y, Rational(0)}};
    CHECK(shifted.evaluate(at) == 0);

    MultiPoly partial = p.substitute_values({{y, Rational(5)}});
    CHECK(partial == MultiPoly::variable(x, 2) + MultiPoly::constant(Rational(10)));

    CHECK(p.evaluate({{x, Rational(3)}, {y, Rational(1, 2)}}) == Rational(10));
    CHECK_THROWS_AS(p.evaluate({{x, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("degree by variable class") {
    VarPool pool;
    Var x = pool.intern("x"), y = pool.intern("y"), t = pool.intern("t");
    MultiPoly p = MultiPoly::monomial({{x, 2}, {y, 1}}, Rational(1)) +
                  MultiPoly::monomial({{y, 3}, {t, 4}}, Rational(7));
    CHECK(p.degree_where([&](Var v) { return v == x || v == y; }) == 3);
    CHECK(p.degree_where([&](Var v) { return v == t; }) == 4);
}

#include <catch2/catch_amalgamated.hpp>

#include <logjets/heads.hpp>
#include <logjets/tangency.hpp>

#include <algorithm>

using namespace logjets;

TEST_CASE("head and tail directions partition the cubic window") {
    auto heads = head_indices();
    auto tails = tail_indices();
    REQUIRE(heads.size() == 4);
    REQUIRE(tails.size() == 16);

    auto window = cubic_window();
    std::vector<MultiIndex> joined = heads;
    joined.insert(joined.end(), tails.begin(), tails.end());
    std::sort(joined.begin(), joined.end());
    std::sort(window.begin(), window.end());
    CHECK(joined == window);
}

TEST_CASE("jet wronskian is the signed sum over order assignments") {
    VarPool pool;
    FamilyVars f = make_family_vars(pool, 4);
    MultiPoly wr = wronskian(f);
    CHECK(wr.term_count() == 6);

    auto mono = [&](int j0, int j1, int j2) {
        return (MultiPoly::variable(f.xi[j0][0]) * MultiPoly::variable(f.xi[j1][1]) *
                MultiPoly::variable(f.xi[j2][2]))
            .terms[0]
            .first;
    };
    CHECK(wr.coefficient_of(mono(0, 1, 2)) == 1);
    CHECK(wr.coefficient_of(mono(1, 0, 2)) == -1);
    CHECK(wr.coefficient_of(mono(2, 0, 1)) == 1);
    for (auto& [m, c] : wr.terms) CHECK(pole_weight(m, f) == 9);
}

TEST_CASE("pole weight counts jet order plus one per factor") {
    VarPool pool;
    FamilyVars f = make_family_vars(pool, 4);

    Monomial m = (MultiPoly::variable(f.z[0], 2) * MultiPoly::variable(f.xi[0][0])).terms[0].first;
    CHECK(pole_weight(m, f) == 4);
    CHECK(pole_weight(MultiPoly::variable(f.xi[2][2]).terms[0].first, f) == 4);
    CHECK(pole_weight(MultiPoly::variable(f.z[3]).terms[0].first, f) == 1);
    CHECK(pole_weight(Monomial{}, f) == 0);

    Monomial avar = MultiPoly::variable(f.a.at({4, 0, 0})).terms[0].first;
    CHECK_THROWS_AS(pole_weight(avar, f), std::invalid_argument);
}

TEST_CASE("admissible shapes accept the four solved cases and nothing wider") {
    auto shape = [](int zdeg, int x1, int x2, int x3) {
        MonomialShape s;
        s.z_degree = zdeg;
        s.xi_degree = {x1, x2, x3};
        return s;
    };
    CHECK(shape_admissible(shape(3, 1, 1, 1)));
    CHECK(shape_admissible(shape(2, 3, 0, 1)));
    CHECK(shape_admissible(shape(2, 2, 2, 0)));
    CHECK(shape_admissible(shape(1, 4, 1, 0)));
    CHECK(shape_admissible(shape(0, 4, 1, 0)));

    CHECK_FALSE(shape_admissible(shape(4, 1, 1, 1)));
    CHECK_FALSE(shape_admissible(shape(0, 0, 0, 2)));
    CHECK_FALSE(shape_admissible(shape(2, 3, 1, 0)));
    CHECK_FALSE(shape_admissible(shape(0, 5, 0, 0)));
    CHECK_FALSE(shape_admissible(shape(2, 0, 2, 1)));
}

TEST_CASE("every tail solves over the wronskian with bounded poles") {
    VarPool pool;
    FamilyVars f = make_family_vars(pool, 4);
    MultiPoly wr = wronskian(f);

    for (auto& tail : tail_indices()) {
        HeadSolution sol = head_solve(f, tail);
        CHECK(sol.denominator == wr);
        CHECK(head_solution_verifies(f, sol));

        std::vector<const MultiPoly*> nums;
        for (auto& n : sol.numerator) nums.push_back(&n);
        PoleAudit audit = pole_order_audit(nums, f, true);
        CHECK(audit.shapes_ok);

        int tail_degree = tail[0] + tail[1] + tail[2];
        CHECK(audit.max_weight == (tail_degree == 2 ? 11 : 12));
    }
}

TEST_CASE("coefficient-direction fields carry only low-weight components") {
    VarPool pool;
    FamilyVars f = make_family_vars(pool, 5);
    VectorField V = binomial_field(f, {4, 0, 0}, {4, 0, 0}, {1, 2, 3});

    std::vector<const MultiPoly*> comps;
    for (auto& [var, p] : V.comp) comps.push_back(&p);
    PoleAudit audit = pole_order_audit(comps, f, false);
    CHECK(audit.max_weight == 4);
    CHECK(audit.shapes_ok);
}

#include <catch2/catch_amalgamated.hpp>

#include <logjets/leading.hpp>
#include <logjets/threshold.hpp>

#include <random>

using namespace logjets;

namespace {

const EulerPolynomial& fitted() {
    static const EulerPolynomial P = euler_polynomial();
    return P;
}

const LeadingTables& tables() {
    static const LeadingTables T = leading_tables(fitted());
    return T;
}

DCoeffs row(const char* c0, const char* c1, const char* c2, const char* c3) {
    return DCoeffs{{parse_rational(c0), parse_rational(c1), parse_rational(c2),
                    parse_rational(c3)}};
}

Rational delta_entry(const DeltaPoly& p, int k) {
    auto it = p.find(k);
    return it == p.end() ? Rational(0) : it->second;
}

} // namespace

TEST_CASE("newton coefficients recover a quadratic through three nodes") {
    std::vector<Rational> ys{Rational(1), Rational(2), Rational(5)};
    auto cs = newton_coefficients<Rational>({0, 1, 2}, ys);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == 1);
    CHECK(cs[1] == 0);
    CHECK(cs[2] == 1);
}

TEST_CASE("fitted characteristic polynomial matches direct values off the grid") {
    const EulerPolynomial& P = fitted();
    CHECK(P.terms.size() == 73);
    CHECK(P.part_of_lambda_degree(6).terms.size() == 18);
    CHECK(P.max_lambda_degree() == 6);

    CHECK(P.evaluate({20, 3, 1}, 17) == euler_characteristic({20, 3, 1}, 17));
    CHECK(P.evaluate({9, 8, 7}, 3) == euler_characteristic({9, 8, 7}, 3));
    CHECK(P.evaluate({31, 14, 2}, 40) == euler_characteristic({31, 14, 2}, 40));
}

TEST_CASE("one hundred sampled points outside the grid evaluate exactly") {
    const EulerPolynomial& P = fitted();
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 100; ++i) {
        long l3 = long(rng() % 12);
        long l2 = l3 + 7 + long(rng() % 9);
        long l1 = l2 + 7 + long(rng() % 9);
        long d = 15 + long(rng() % 80);
        CHECK(P.evaluate({l1, l2, l3}, d) == euler_characteristic({l1, l2, l3}, d));
    }
}

TEST_CASE("integration region has the expected volume and splits cleanly") {
    Simplex3 region = standard_region();
    CHECK(region_volume(region) == Rational(1, 540));

    auto pieces = centroid_split(region);
    Rational vol(0);
    for (auto& s : pieces) vol += region_volume(s);
    CHECK(vol == Rational(1, 540));

    XDPoly g = correction_integrand();
    DeltaPoly whole = integrate_over(region, g);
    DeltaPoly parts;
    for (auto& s : pieces) parts = delta_add(parts, integrate_over(s, g));
    for (int k = 0; k <= 6; ++k) CHECK(delta_entry(whole, k) == delta_entry(parts, k));
}

TEST_CASE("correction integrand is homogeneous with known special values") {
    XDPoly g = correction_integrand();
    CHECK(xd_homogeneous(g, 6));
    CHECK(xd_evaluate(g, {Rational(3), Rational(2), Rational(1), Rational(0)}) == 648);
    CHECK(xd_evaluate(g, {Rational(1), Rational(1), Rational(1), Rational(5)}) == 0);
}

TEST_CASE("leading coefficient tables take their frozen exact values") {
    const LeadingTables& T = tables();
    REQUIRE(T.chi_leading.size() == 4);

    CHECK(T.chi_leading.at(0) == row("-1513/637875000", "6299/4252500000",
                                     "-6913/34020000000", "389/81648000000"));
    CHECK(T.chi_leading.at(1) == row("88/2953125", "-331/15750000",
                                     "557/126000000", "-389/1512000000"));
    CHECK(T.chi_leading.at(2) == row("-121/984375", "121/1312500",
                                     "-121/5250000", "121/63000000"));
    CHECK(T.chi_leading.at(3) == row("14/84375", "-7/56250",
                                     "7/225000", "-7/2700000"));

    CHECK(delta_entry(T.h2_factor, 0) == parse_rational("49403/2520000000"));
    CHECK(delta_entry(T.h2_factor, 1) == parse_rational("-261/1120000"));
    CHECK(delta_entry(T.h2_factor, 2) == parse_rational("3267/3500000"));
    CHECK(delta_entry(T.h2_factor, 3) == parse_rational("-63/50000"));

    REQUIRE(T.alpha.size() == 4);
    CHECK(T.alpha.at(0) == row("-28253581/102060000000", "-1233097/68040000000",
                               "-6913/34020000000", "389/81648000000"));
    CHECK(T.alpha.at(1) == row("1244489/378000000", "53429/252000000",
                               "557/126000000", "-389/1512000000"));
    CHECK(T.alpha.at(2) == row("-207757/15750000", "-8833/10500000",
                               "-121/5250000", "121/63000000"));
    CHECK(T.alpha.at(3) == row("12019/675000", "511/450000",
                               "7/225000", "-7/2700000"));
}

TEST_CASE("published positivity table coincides with the uncorrected leading table") {
    const LeadingTables& T = tables();
    auto ref = reference_alpha_table();
    REQUIRE(ref.size() == 4);
    for (auto& [k, cs] : ref) CHECK(cs == T.chi_leading.at(k));
}

TEST_CASE("published leading display differs from the derived table only in the constant") {
    const LeadingTables& T = tables();
    DCoeffs display = reference_chi_leading_display();
    const DCoeffs& derived = T.chi_leading.at(0);
    CHECK(display.c[3] == derived.c[3]);
    CHECK(display.c[2] == derived.c[2]);
    CHECK(display.c[1] == derived.c[1]);
    CHECK(display.c[0] != derived.c[0]);
    CHECK(display.c[0] == derived.c[0] * 10);
}

TEST_CASE("positivity window opens at degree 221") {
    CHECK_FALSE(positivity_window(4).has_value());
    CHECK_FALSE(positivity_window(220).has_value());
    auto w = positivity_window(221);
    REQUIRE(w.has_value());
    CHECK(w->first == Rational(12, 217));
    CHECK(w->second == Rational(1, 18));
}

TEST_CASE("degree sweep on the derived table settles at 586") {
    ThresholdResult r = threshold_search(tables().alpha);
    CHECK(r.minimal_d == 586);
    CHECK(r.previous_d_fails);
    CHECK(r.witness == Rational(11, 533));
    CHECK(r.window_lo < r.witness);
    CHECK(r.witness < r.window_hi);
    CHECK(r.weight_threshold == 16802);

    UniPoly cubic = delta_cubic(tables().alpha, r.minimal_d);
    CHECK(cubic.eval(r.witness) > 0);
}

TEST_CASE("degree sweep on the published table settles at 579") {
    ThresholdResult r = threshold_search(reference_alpha_table());
    CHECK(r.minimal_d == 579);
    CHECK(r.previous_d_fails);
    CHECK(r.witness == Rational(9, 431));
    CHECK(r.weight_threshold == 16718);
}

TEST_CASE("weight threshold is the least weight clearing the slope bound") {
    Rational delta(11, 533);
    long d = 586;
    long m = least_weight_above(delta, d);
    CHECK(m == 16802);
    Rational slope = Rational(1, 6) - 3 * delta;
    CHECK(Rational(m) * slope > Rational(3 * d + 2));
    CHECK_FALSE(Rational(m - 1) * slope > Rational(3 * d + 2));
    CHECK_THROWS_AS(least_weight_above(Rational(1, 18), 5), std::domain_error);
}

TEST_CASE("closed power sums match direct accumulation") {
    CHECK(power_sum(10, 0) == 11);
    CHECK(power_sum(10, 1) == 55);
    CHECK(power_sum(10, 2) == 385);
    CHECK(power_sum(10, 6) == 1978405);
    CHECK(power_sum(0, 3) == 0);
}

TEST_CASE("collapsed graded sums agree with direct enumeration") {
    const EulerPolynomial& P = fitted();
    for (long d : {5L, 20L})
        for (long m : {0L, 7L, 23L, 40L})
            CHECK(graded_sum_fast(P, m, d) == euler_characteristic_graded(m, d));
    CHECK(graded_sum_fast(P, 23, 5) == 10033480);
}

TEST_CASE("ninth difference of the graded sum recovers the leading coefficient") {
    const EulerPolynomial& P = fitted();
    Rational lead = tables().chi_leading.at(0).at(20);
    CHECK(lead == parse_rational("-10151/637875000"));
    CHECK(ninth_difference_leading(P, 20, 400) == lead);
}

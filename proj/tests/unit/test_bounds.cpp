#include "doctest.h"
#include "kneser/bounds.hpp"
#include "kneser/constructions.hpp"

using namespace kneser;

TEST_CASE("main lower bound pinned values") {
    auto r = main_lower_bound(10000, 1, 1, Rat(3, 2));
    CHECK(r.hypothesis_ok);
    // 3/4 - 11 (1/100 + 1/10000) is exactly 0.6389
    CHECK(r.value.cmp(Rat(6389, 10000)) == 0);
    CHECK(r.value.decimal(Round::up).substr(0, 6) == "0.6389");
    CHECK(r.value.decimal(Round::down).substr(0, 8) == "0.638899");

    auto big = main_lower_bound(1000000, 1, 1, Rat(2));
    CHECK(big.value.cmp(Rat(988989, 1000000)) == 0);

    auto weak = main_lower_bound(50, 2, 1, Rat(3, 2));
    CHECK_FALSE(weak.hypothesis_ok);
    CHECK_THROWS_AS(main_lower_bound(100, 2, 1, Rat(3)), std::invalid_argument);
}

TEST_CASE("construction upper bound") {
    auto r = construction_upper_bound(24, 2, 1, Rat(3, 2));
    CHECK(r.hypothesis_ok);
    CHECK(r.value.rational_value() == Rat(91, 4));

    CHECK_THROWS_AS(construction_upper_bound(20, 2, 1, Rat(3, 2)), std::invalid_argument);
    auto forced = construction_upper_bound(20, 2, 1, Rat(3, 2), true);
    CHECK(forced.forced);
    CHECK_FALSE(forced.hypothesis_ok);

    // exceeds the measured maximum degree of the explicit construction
    auto [fam, t] = explicit_family(ConstructionSpec{24, 2, 1, Rat(3, 2), {}});
    CHECK(Rat(degree_profile(fam).max_degree) < r.value.rational_value());
}

TEST_CASE("random expected degree closed form") {
    CHECK(random_expected_degree(40, 2, 1, Rat(3, 2)) == Rat(111, 4));
    // s = 1 reduces to (lambda/2) C(n-k-1, k-1)
    CHECK(random_expected_degree(30, 3, 1, Rat(4, 3)) == Rat(2, 3) * Rat(binom(26, 2)));
    // k = 1: only the first term survives
    CHECK(random_expected_degree(100, 1, 2, Rat(5, 2)) == Rat(5, 3));
}

TEST_CASE("stars_max_degree matches measured degrees") {
    CHECK(stars_max_degree(5, 2, 1) == 0);
    CHECK(stars_max_degree(9, 2, 2) == 6);
    CHECK(stars_max_degree(10, 2, 8) == binom(8, 2));  // second binomial vanishes

    for (int s = 1; s <= 3; ++s)
        for (int k = 1; k <= 4; ++k)
            for (int n = 2 * k + s; n <= 14; ++n) {
                SubsetCode h(n);
                for (int e = 1; e <= s; ++e) h.insert(e);
                CHECK(stars_max_degree(n, k, s) ==
                      Int(degree_profile(union_of_stars(n, k, h)).max_degree));
            }
}

TEST_CASE("threshold evaluators") {
    auto m = threshold_evaluator(ThresholdKind::manylem3, 200, 1, 1, Rat(2));
    CHECK(m.hypothesis_ok);
    // 39/40 - sqrt(2/5)
    CHECK(m.value > Rat(3425, 10000));
    CHECK(m.value < Rat(3426, 10000));
    CHECK(m.value.decimal(Round::down).substr(0, 8) == "0.342544");

    auto e = threshold_evaluator(ThresholdKind::extlem3, 48, 2, 2, Rat(5, 2), Rat(5, 4));
    CHECK(e.hypothesis_ok);
    CHECK(e.value < Rat(5, 6));  // always below lambda/(s+1)
    CHECK_THROWS_AS(threshold_evaluator(ThresholdKind::extlem3, 48, 2, 2, Rat(5, 2), Rat(0)),
                    std::invalid_argument);
}

TEST_CASE("binomial ratio inequality") {
    auto r = binomratio_report(10, 8, 2);
    CHECK(r.value.rational_value() == Rat(28, 45));
    CHECK(r.comparison->measured == Rat(5, 9));
    CHECK(r.comparison->holds);

    auto eq = binomratio_report(12, 12, 3);
    CHECK(eq.value.rational_value() == 1);
    CHECK(eq.comparison->measured == 1);
    CHECK(eq.comparison->holds);

    CHECK_THROWS_AS(binomratio_report(10, 11, 2), std::invalid_argument);
}

TEST_CASE("star density conversion sandwich") {
    Family star = sets_meeting(8, 2, SubsetCode(8, {1}));
    auto r = convert_report(star, 1);
    CHECK(r.value.rational_value() == 1);  // gamma~ = 1
    CHECK(r.comparison->measured == 1);    // gamma = 1
    CHECK(r.comparison->holds);

    auto f = full_family(9, 3);
    CHECK(convert_report(f, 2).comparison->holds);
    CHECK_THROWS_AS(convert_report(star, 3), std::invalid_argument);
}

TEST_CASE("almost intersecting predicate") {
    CHECK(almost_intersecting(sets_meeting(5, 2, SubsetCode(5, {1})), 0));

    std::vector<SubsetCode> m;
    for (int j = 2; j <= 5; ++j) m.emplace_back(5, std::vector<int>{1, j});
    m.emplace_back(5, std::vector<int>{2, 3});
    Family g(5, 2, std::move(m));
    CHECK_FALSE(almost_intersecting(g, 1));
    CHECK(almost_intersecting(g, 2));
    CHECK(almost_intersecting(full_family(5, 2), 3));
}

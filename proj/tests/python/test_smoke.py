from fractions import Fraction

import pytest

import kneser


def test_combinatorics():
    assert kneser.binom(24, 2) == 276
    assert kneser.binom(1000000, 2) == 499999500000
    assert kneser.falling_ratio(5, 2, 2) == Fraction(1, 10)
    assert kneser.size_parameter(5, 2, 5) == (1, Fraction(4, 3))
    assert kneser.count_from_lambda(5, 2, 1, Fraction(4, 3)) == 5
    with pytest.raises(ValueError):
        kneser.count_from_lambda(5, 2, 1, Fraction(5, 4))


def test_family_and_degrees():
    f = kneser.Family(5, 2, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 3]])
    assert len(f) == 5
    assert f.contains([2, 3])
    assert not f.contains([4, 5])
    p = kneser.degree_profile(f)
    assert p["max_degree"] == 2
    assert p["edge_count"] == 2
    assert kneser.degree_profile(f, "naive") == kneser.degree_profile(f, "zeta")

    star = kneser.sets_meeting(5, 2, [1])
    assert kneser.degree_profile(star)["max_degree"] == 0
    assert kneser.star_densities(star)[0] == 1

    sliced, labels = kneser.slice(f, [1], [1])
    assert len(sliced) == 4
    assert labels == [2, 3, 4, 5]

    with pytest.raises(ValueError):
        kneser.Family(5, 2, [[1, 2], [1, 2]])


def test_spectral():
    ev, mult = kneser.spectrum(5, 2)
    assert ev == [3, -2, 1]
    assert mult == [1, 4, 5]

    star = kneser.sets_meeting(5, 2, [1])
    prof = kneser.linear_profile(star)
    assert prof["alpha"] == Fraction(2, 5)
    assert prof["eta"] == Fraction(3, 5)
    assert kneser.eigencomponent_norms(star) == [Fraction(8, 5), Fraction(12, 5), 0]

    assert kneser.singular_ratio_bound(5, 2, 2) == Fraction(2, 3)
    sq = kneser.bipartite_singular_sq(5, 2, 2)
    assert sq == [9, 4, 1]


def test_constructions_and_bounds():
    fam, t = kneser.explicit_family(24, 2, 1, "3/2")
    assert t == 19
    assert len(fam) == 34
    assert kneser.degree_profile(fam)["max_degree"] == 16

    rnd = kneser.random_family(24, 2, 1, Fraction(3, 2), seed=99)
    assert len(rnd) == 34

    seg = kneser.order_segment("lex", 5, 2, 5)
    assert seg.members()[0] == [1, 2]

    lower = kneser.main_lower_bound(10000, 1, 1, "3/2")
    assert lower["hypothesis_ok"]
    assert lower["value_down"].startswith("0.6388999")
    assert lower["value_up"].startswith("0.6389")

    upper = kneser.construction_upper_bound(24, 2, 1, "3/2")
    assert upper["value_exact"] == Fraction(91, 4)

    assert kneser.random_expected_degree(40, 2, 1, "3/2") == Fraction(111, 4)
    assert kneser.stars_max_degree(9, 2, 2) == 6

    with pytest.raises(TypeError):
        kneser.main_lower_bound(10000, 1, 1, 1.5)


def test_search_and_matching():
    r = kneser.exact_minimize(5, 2, 5, objective="edge_count")
    assert r["optimum"] == 2
    assert r["proven_optimal"]
    assert r["witness"].members() == kneser.order_segment("colex", 5, 2, 5).members()

    f = kneser.Family(5, 2, [[1, 2], [1, 3], [1, 4], [1, 5], [2, 3]])
    matching = kneser.greedy_matching(f)
    assert matching == [[2, 3], [1, 4]]


def test_verification_wiring():
    assert kneser.suite_criteria("oracle") == [6, 10]
    result = kneser.run_criterion(2)
    assert result["pass"]

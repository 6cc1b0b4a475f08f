"""Smoke tests for the kolchin extension module."""

import pytest

import kolchin


def test_dimension_polynomial_of_the_pair_family():
    E = kolchin.unbounded_constants_family(5)
    w = kolchin.dimension_polynomial(E)
    assert str(w) == "2*C(s+1,1) + 3"
    assert w.standard == [2, 3]
    assert [w(s) for s in range(4)] == [5, 7, 9, 11]
    assert kolchin.minimizing_coefficients(w) == [2, 4]
    assert kolchin.macaulay_constants(w) == [2, 6]
    assert kolchin.is_kolchin(w)


def test_three_methods_agree():
    E = kolchin.ExponentSet(3, [[1, 0, 2], [0, 2, 1], [1, 1, 1]])
    w = kolchin.dimension_polynomial(E)
    assert kolchin.dimension_polynomial_rec(E) == w
    assert kolchin.dimension_polynomial_ie(E) == w
    bound = kolchin.stabilization_bound(E)
    for s in range(bound, bound + 4):
        assert w(s) == kolchin.count_free_points(E, s)


def test_counting_oracle():
    E = kolchin.ExponentSet(2, [[1, 1]])
    assert kolchin.count_free_points(E, 2) == 5
    assert kolchin.count_free_points(E, -1) == 0
    assert kolchin.minimal_elements(
        kolchin.ExponentSet(2, [[1, 0], [2, 0], [1, 2]])
    ).rows == [[1, 0]]


def test_roundtrip_with_large_integers():
    p = kolchin.NumPoly.from_standard([10**30, -(10**25), 7])
    c = kolchin.macaulay_constants(p)
    assert kolchin.reconstruct(c) == p
    assert p(10**12) == sum(
        a * kolchin.binomial(10**12 + i, i)
        for i, a in enumerate(reversed([10**30, -(10**25), 7]))
    )


def test_sit_order():
    s_plus_1 = kolchin.NumPoly.from_standard([1, 0])
    s_plus_2 = kolchin.NumPoly.from_standard([1, 1])
    assert kolchin.sit_compare(s_plus_1, s_plus_2) == -1
    assert kolchin.sit_compare(s_plus_2, s_plus_1) == 1
    assert kolchin.sit_compare(s_plus_1, s_plus_1) == 0
    assert kolchin.sit_compare(kolchin.NumPoly(5), s_plus_1) == -1


def test_system_polynomial():
    sys = kolchin.DifferentialSystem(
        2, [kolchin.ExponentSet(2, [[1, 1]]), kolchin.ExponentSet(2, [[1, 1]])]
    )
    w = kolchin.system_dimension_polynomial(sys)
    assert str(w) == "4*C(s+1,1) - 2"  # 4s+2


def test_classification():
    w = kolchin.single_equation_poly(3, 2)
    cand = kolchin.classify_minimal_candidate(w, 3)
    assert cand.constant_macaulay and cand.degree_matches and cand.order == 2


def test_report_rows():
    rows = kolchin.standard_coefficient_report(4)
    assert [r.m for r in rows] == [1, 2, 3, 4]
    assert all(r.identity_ok for r in rows)
    assert rows[1].standard == [1, 2]  # s+3
    assert rows[1].claimed_standard == [1, 1]
    assert not rows[1].standard_matches_claim


def test_errors():
    big = kolchin.ExponentSet(3, [[2, 2, 2]])
    with pytest.raises(kolchin.ResourceError):
        kolchin.count_free_points(big, 1000, 1000)
    with pytest.raises(ValueError):
        kolchin.ExponentSet(2, [[1, -1]])
    with pytest.raises(ValueError):
        kolchin.unbounded_constants_family(1)

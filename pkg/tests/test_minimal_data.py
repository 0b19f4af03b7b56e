"""Minimal grading, g^natural, induced levels, and the classification.

Oracles: bracket-grading compatibility checked from the bracket itself,
dimension bookkeeping, and the closed-form central charge.
"""

from fractions import Fraction

import pytest

from minvert.chevalley import bracket, build_lie_algebra, normalized_form
from minvert.exact import Poly
from minvert.minimal_data import (
    DELIGNE_SERIES,
    central_charge,
    collapse_verdict,
    deligne_level,
    g_natural,
    k_natural,
    lisse_verdict,
    minimal_grading,
)
from minvert.rootsys import SimpleType, build_root_system

TYPES = [("A", 2), ("A", 3), ("A", 5), ("B", 3), ("B", 4), ("C", 2), ("C", 3),
         ("D", 4), ("D", 5), ("G", 2), ("F", 4), ("E", 6), ("E", 7)]


def _alg(series, l):
    return build_lie_algebra(build_root_system(SimpleType(series, l)))


@pytest.mark.parametrize("series,l", TYPES)
def test_grading_shape(series, l):
    L = _alg(series, l)
    g = minimal_grading(L)
    assert sum(len(p) for p in g.pieces.values()) == L.dim
    assert len(g.pieces[2]) == len(g.pieces[-2]) == 1
    assert len(g.pieces[1]) == len(g.pieces[-1])
    # dim g(1/2) = 2h - 4 (the minimal orbit has dimension dim g(1/2) + 2)
    assert len(g.pieces[1]) == 2 * L.rs.h_dual - 4
    assert g.pieces[2] == [("e", L.rs.theta)]


@pytest.mark.parametrize("series,l", [("A", 3), ("B", 3), ("C", 3), ("D", 4),
                                      ("G", 2)])
def test_grading_bracket_compatibility(series, l):
    L = _alg(series, l)
    g = minimal_grading(L)
    of = {b: j for j, p in g.pieces.items() for b in p}
    for x in L.basis:
        for y in L.basis:
            jxy = of[x] + of[y]
            for b, c in L.bracket_basis(x, y).items():
                if c:
                    assert of[b] == jxy


@pytest.mark.parametrize("series,l", TYPES)
def test_sl2_triple_of_theta(series, l):
    L = _alg(series, l)
    g = minimal_grading(L)
    assert bracket(L, g.e_theta, g.f_theta) == g.h_theta
    assert bracket(L, g.h_theta, g.e_theta) == {("e", L.rs.theta): Fraction(2)}


@pytest.mark.parametrize("series,l", TYPES)
def test_g_natural_dimensions(series, l):
    L = _alg(series, l)
    g = minimal_grading(L)
    summands = g_natural(L)
    # g(0) = C h_theta + center + simple summands
    assert 1 + sum(s.dim for s in summands) == len(g.pieces[0])
    for s in summands:
        if s.index == 0:
            assert s.type == "center"
            assert s.dim in (0, 1)
        else:
            # the summand basis is closed under the bracket and commutes
            # with the sl2-triple of theta
            for x in s.basis:
                assert not bracket(L, g.e_theta, x)
                assert not bracket(L, g.f_theta, x)


def test_g_natural_types():
    expected = {
        ("G", 2): ["A1"], ("F", 4): ["C3"], ("E", 6): ["A5"],
        ("E", 7): ["D6"], ("B", 3): ["A1", "A1"], ("D", 4): ["A1", "A1", "A1"],
        ("C", 3): ["C2"], ("A", 5): ["A3"],
    }
    for (series, l), names in expected.items():
        L = _alg(series, l)
        got = [str(s.type) for s in g_natural(L) if s.index > 0]
        assert sorted(got) == sorted(names)


def test_k_natural_values():
    # spot entries, exact affine polynomials in k
    assert k_natural(_alg("G", 2), 1) == Poly((5, 3))
    assert k_natural(_alg("F", 4), 1) == Poly((Fraction(5, 2), 1))
    assert k_natural(_alg("C", 3), 1) == Poly((Fraction(1, 2), 1))
    assert k_natural(_alg("B", 3), 2) == Poly((4, 2))
    assert k_natural(_alg("A", 3), 0) == Poly((2, 1))
    with pytest.raises(IndexError):
        k_natural(_alg("G", 2), 5)


def test_k_natural_matches_form_ratio():
    """k_i is determined by the natural form against the summand's own
    normalized form on an e/f pair of the summand's highest root."""
    for series, l, i in (("B", 3, 1), ("D", 4, 2), ("F", 4, 1)):
        L = _alg(series, l)
        su = next(s for s in g_natural(L) if s.index == i)
        assert su.theta_i in L.rs.positive_roots
        assert su.level_poly.degree == 1


def test_central_charge_closed_form():
    for series, l in TYPES:
        rs = build_root_system(SimpleType(series, l))
        h = rs.h_dual
        dim = rs.rank + 2 * len(rs.positive_roots)
        for k in (Fraction(1), Fraction(-5, 2), Fraction(7, 3)):
            if k == -h:
                continue
            assert central_charge(rs, k) == k * dim / (k + h) - 6 * k + h - 4
    with pytest.raises(ValueError):
        central_charge(build_root_system(SimpleType("A", 2)), -3)


def test_deligne_levels():
    want = {("A", 1): Fraction(-4, 3), ("A", 2): Fraction(-3, 2),
            ("G", 2): Fraction(-5, 3), ("D", 4): Fraction(-2),
            ("F", 4): Fraction(-5, 2), ("E", 6): Fraction(-3),
            ("E", 7): Fraction(-4), ("E", 8): Fraction(-6)}
    for (series, l), k in want.items():
        rs = build_root_system(SimpleType(series, l))
        assert (series, l) in DELIGNE_SERIES
        assert deligne_level(rs) == k
        assert central_charge(rs, k) == 0
    with pytest.raises(ValueError):
        deligne_level(build_root_system(SimpleType("B", 3)))


def test_collapse_verdict():
    assert collapse_verdict(build_root_system(SimpleType("D", 4)), Fraction(-2))
    assert collapse_verdict(build_root_system(SimpleType("C", 3)), Fraction(-1, 2))
    assert not collapse_verdict(build_root_system(SimpleType("C", 3)), Fraction(1, 2))
    assert not collapse_verdict(build_root_system(SimpleType("B", 3)), Fraction(-2))
    with pytest.raises(ValueError):
        collapse_verdict(build_root_system(SimpleType("A", 1)), Fraction(-2))


def test_lisse_verdict_clauses():
    cases = [
        ("A1", Fraction(-1, 2), "yes"),
        ("A1", Fraction(0), "no"),
        ("A4", Fraction(1), "no"),
        ("C3", Fraction(3, 2), "yes"),
        ("C3", Fraction(-3, 2), "no"),
        ("B3", Fraction(-3, 2), "yes"),
        ("B4", Fraction(1, 2), "no"),
        ("D5", Fraction(-2), "yes"),
        ("D5", Fraction(-5, 2), "no"),
        ("F4", Fraction(-5, 2), "yes"),
        ("E8", Fraction(-6), "yes"),
        ("E8", Fraction(-13, 2), "no"),
        ("A2", Fraction(-3, 2), "yes"),
        ("A2", Fraction(2), "unknown-conjectural"),
        ("G2", Fraction(-5, 3), "yes"),
        ("G2", Fraction(1), "unknown-conjectural"),
    ]
    for name, k, want in cases:
        rs = build_root_system(SimpleType(name[0], int(name[1:])))
        v = lisse_verdict(rs, k)
        assert v.lisse == want, (name, k, v)
        assert v.reason


def test_collapse_implies_lisse():
    for name, k in (("D4", Fraction(-2)), ("C2", Fraction(-1, 2)),
                    ("E6", Fraction(-3)), ("G2", Fraction(-5, 3))):
        rs = build_root_system(SimpleType(name[0], int(name[1:])))
        v = lisse_verdict(rs, k)
        assert v.collapses_to_trivial
        assert v.lisse == "yes"

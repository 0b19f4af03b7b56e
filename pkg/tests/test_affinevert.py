"""Affine vertex algebra model: PBW calculus, sigma embedding, singular
vectors at symbolic level k.

Oracles: the closed-form sl2 family e(-1)^n singular at k = n-1, operator
commutation relations checked mode by mode, and hand-computed small cases.
"""

import os
import random
from fractions import Fraction

import pytest

from minvert.affinevert import (
    apply_mode,
    degree_budget,
    format_pbw_vector,
    highest_weight_violations,
    is_affine_singular,
    pbw_add,
    pbw_degree,
    pbw_is_zero,
    pbw_multiply,
    pbw_scale,
    sigma_embed,
    singular_level_of_power,
    solve_affine_singular,
)
from minvert.chevalley import bracket, build_lie_algebra, normalized_form
from minvert.exact import POLY_K, Poly
from minvert.minimal_data import g_natural
from minvert.rootsys import SimpleType, build_root_system
from minvert.symmod import solve_highest_weight_vector

RNG = random.Random(3)


def _alg(series, l):
    return build_lie_algebra(build_root_system(SimpleType(series, l)))


def _hw(L, i):
    rs = L.rs
    su = next(s for s in g_natural(L) if s.index == i)
    mu = rs.root_to_weight(tuple(a + b for a, b in zip(rs.theta, su.theta_i)))
    return solve_highest_weight_vector(L, mu)


def _rand_pbw(L, rng):
    out = {}
    for _ in range(3):
        word = tuple(sorted((rng.choice([-2, -1]), rng.randrange(L.dim))
                            for _ in range(rng.randint(1, 2))))
        out[word] = out.get(word, Poly.const(0)) + Poly.const(rng.randint(-2, 2))
    return {k: v for k, v in out.items() if not v.is_zero()}


# ---------------------------------------------------------------------------
# PBW calculus


def test_pbw_vector_utilities():
    L = _alg("A", 1)
    v = {((-1, 1),): Poly.const(2)}
    assert pbw_degree(v) == 1
    assert pbw_is_zero(pbw_add(v, pbw_scale(v, -1)))
    assert not pbw_is_zero(v)
    assert pbw_degree({((-2, 1), (-1, 0)): Poly.const(1)}) == 3


def test_commutation_relations_sampled():
    """x(n)y(m) - y(m)x(n) = [x,y](n+m) + n (x|y) k delta_{n+m,0}."""
    for series, l in (("A", 1), ("A", 2), ("B", 2)):
        L = _alg(series, l)
        for _ in range(40):
            v = _rand_pbw(L, RNG)
            x = L.basis[RNG.randrange(L.dim)]
            y = L.basis[RNG.randrange(L.dim)]
            n, m = RNG.choice([-1, 0, 1]), RNG.choice([-1, 0, 1])
            lhs = pbw_add(
                apply_mode(L, x, n, apply_mode(L, y, m, v)),
                pbw_scale(apply_mode(L, y, m, apply_mode(L, x, n, v)), -1))
            xy = bracket(L, {x: Fraction(1)}, {y: Fraction(1)})
            rhs = apply_mode(L, xy, n + m, v) if xy else {}
            if n + m == 0:
                c = n * normalized_form(L, {x: Fraction(1)}, {y: Fraction(1)})
                if c:
                    rhs = pbw_add(rhs, pbw_scale(v, POLY_K * Poly.const(c)))
            assert pbw_is_zero(pbw_add(lhs, pbw_scale(rhs, -1)))


def test_pbw_multiply_associative():
    L = _alg("A", 1)
    for _ in range(30):
        u, v, w = (_rand_pbw(L, RNG) for _ in range(3))
        lhs = pbw_multiply(L, pbw_multiply(L, u, v), w)
        rhs = pbw_multiply(L, u, pbw_multiply(L, v, w))
        assert pbw_is_zero(pbw_add(lhs, pbw_scale(rhs, -1)))


def test_sigma_is_module_map():
    for series, l in (("A", 1), ("A", 2)):
        L = _alg(series, l)
        w = _hw(L, 1) if series != "A" else None
        if w is None:
            # any symmetric element works; use e_theta^2
            w = {(("e", L.rs.theta), ("e", L.rs.theta)): Fraction(1)}
        sw = sigma_embed(L, w)
        from minvert.symmod import ad_sym
        for x in L.basis:
            lhs = apply_mode(L, x, 0, sw)
            rhs = sigma_embed(L, ad_sym(L, {x: Fraction(1)}, w))
            assert pbw_is_zero(pbw_add(lhs, pbw_scale(rhs, -1)))


# ---------------------------------------------------------------------------
# singular vectors


def test_sl2_power_family():
    """In V^k(sl2), e(-1)^n is singular exactly at k = n - 1."""
    L = _alg("A", 1)
    for n in (1, 2, 3):
        sols = solve_affine_singular(L, (2 * n,), n)
        assert [s.level for s in sols] == [Fraction(n - 1)]
        vec = sols[0].vector
        word = tuple((-1, L.index[("e", (1,))]) for _ in range(n))
        assert set(vec) == {word}


def test_sl2_no_spurious_solutions():
    L = _alg("A", 1)
    # weight 2 at degree 2: h(-1)e(-1) and e(-2) span the space; no level
    # admits a singular vector there
    assert solve_affine_singular(L, (2,), 2) == []


@pytest.mark.parametrize("name,i,level", [
    ("D4", 1, Fraction(-2)), ("D4", 2, Fraction(-2)), ("D4", 3, Fraction(-2)),
    ("G2", 1, Fraction(-5, 3)), ("F4", 1, Fraction(-5, 2)),
    ("C2", 1, Fraction(-1, 2)), ("B3", 1, Fraction(-3, 2)),
    ("B3", 2, Fraction(-2)),
])
def test_degree2_singular_levels(name, i, level):
    L = _alg(name[0], int(name[1]))
    sols = is_affine_singular(L, sigma_embed(L, _hw(L, i)))
    assert [s.level for s in sols] == [level]


def test_highest_weight_violations_detect_failure():
    L = _alg("A", 2)
    # f_theta(-1) is not a g-highest vector: some e_s(0) moves it
    v = {((-1, L.index[("f", L.rs.theta)]),): Poly.const(1)}
    assert highest_weight_violations(L, v)
    # while e_theta(-1) is g-highest
    hw = {((-1, L.index[("e", L.rs.theta)]),): Poly.const(1)}
    assert highest_weight_violations(L, hw) == []


@pytest.mark.parametrize("name,i,n,level", [
    ("D4", 1, 1, Fraction(-1)), ("D4", 1, 2, Fraction(0)),
    ("C2", 1, 1, Fraction(1, 2)), ("B4", 2, 1, Fraction(-1)),
    ("D5", 2, 1, Fraction(-1)),
])
def test_singular_level_of_power(name, i, n, level):
    L = _alg(name[0], int(name[1]))
    assert singular_level_of_power(L, _hw(L, i), n) == level


def test_solver_matches_power_construction():
    # the general solver at the doubled weight recovers sigma(w_1)^2 for D4
    L = _alg("D", 4)
    rs = L.rs
    su = next(s for s in g_natural(L) if s.index == 1)
    mu = rs.root_to_weight(tuple(2 * (a + b) for a, b in zip(rs.theta, su.theta_i)))
    sols = solve_affine_singular(L, mu, 4)
    assert Fraction(-1) in [s.level for s in sols]


def test_budget_env(monkeypatch):
    monkeypatch.setenv("MINVERT_BUDGET", "5")
    assert degree_budget() == 5
    monkeypatch.delenv("MINVERT_BUDGET")
    assert degree_budget() == 8
    L = _alg("A", 1)
    monkeypatch.setenv("MINVERT_BUDGET", "2")
    with pytest.raises(ValueError):
        solve_affine_singular(L, (6,), 3)


def test_format_pbw_vector_deterministic():
    L = _alg("A", 1)
    sols = solve_affine_singular(L, (4,), 2)
    s = format_pbw_vector(L, sols[0].vector)
    assert s == "1 e[1](-1) e[1](-1)"
    assert format_pbw_vector(L, {}) == "0"

"""Chevalley bases: structure constants, Jacobi, and the invariant form.

Oracles: the root-string bound |N_{a,b}| = p+1 computed directly from the
root system, the sl2-triple relations, and dimension counts.
"""

import random
from fractions import Fraction

import pytest

from minvert.chevalley import (
    basis_label,
    bracket,
    build_lie_algebra,
    centralizer_dim,
    normalized_form,
)
from minvert.rootsys import SimpleType, build_root_system

RNG = random.Random(7)

SMALL = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3),
         ("D", 4), ("G", 2), ("F", 4)]


def _alg(series, l):
    return build_lie_algebra(build_root_system(SimpleType(series, l)))


@pytest.mark.parametrize("series,l", SMALL)
def test_dimension(series, l):
    L = _alg(series, l)
    assert L.dim == 2 * len(L.rs.positive_roots) + l


@pytest.mark.parametrize("series,l", [("A", 2), ("B", 2), ("G", 2)])
def test_jacobi_exhaustive(series, l):
    L = _alg(series, l)
    for x in L.basis:
        for y in L.basis:
            for z in L.basis:
                ex, ey, ez = {x: Fraction(1)}, {y: Fraction(1)}, {z: Fraction(1)}
                acc = bracket(L, ex, bracket(L, ey, ez))
                for b, c in bracket(L, ey, bracket(L, ez, ex)).items():
                    acc[b] = acc.get(b, Fraction(0)) + c
                for b, c in bracket(L, ez, bracket(L, ex, ey)).items():
                    acc[b] = acc.get(b, Fraction(0)) + c
                assert not any(acc.values())


@pytest.mark.parametrize("series,l", SMALL)
def test_structure_constant_magnitude(series, l):
    """|N_{a,b}| = p+1 where a-pa, ..., b is the a-string through b."""
    L = _alg(series, l)
    rs = L.rs
    signed = sorted(L._signed_roots)
    rootset = set(signed)
    for a in signed:
        for b in signed:
            s = tuple(x + y for x, y in zip(a, b))
            if s not in rootset:
                continue
            p = 0
            while tuple(y - (p + 1) * x for x, y in zip(a, b)) in rootset:
                p += 1
            n = L.structure_constant(a, b)
            assert abs(n) == p + 1
            # antisymmetry
            assert L.structure_constant(b, a) == -n


@pytest.mark.parametrize("series,l", SMALL)
def test_sl2_triples(series, l):
    L = _alg(series, l)
    rs = L.rs
    for alpha in rs.positive_roots:
        e = {("e", alpha): Fraction(1)}
        f = {("f", alpha): Fraction(1)}
        h = bracket(L, e, f)
        assert h == {k: v for k, v in L.coroot(alpha).items() if v}
        # [h_alpha, e_alpha] = 2 e_alpha, [h_alpha, f_alpha] = -2 f_alpha
        assert bracket(L, h, e) == {("e", alpha): Fraction(2)}
        assert bracket(L, h, f) == {("f", alpha): Fraction(-2)}


@pytest.mark.parametrize("series,l", SMALL)
def test_form_normalization(series, l):
    L = _alg(series, l)
    rs = L.rs
    e = {("e", rs.theta): Fraction(1)}
    f = {("f", rs.theta): Fraction(1)}
    # (theta|theta) = 2 forces (e_theta|f_theta) = 1
    assert normalized_form(L, e, f) == 1
    for alpha in rs.positive_roots:
        ea = {("e", alpha): Fraction(1)}
        fa = {("f", alpha): Fraction(1)}
        assert normalized_form(L, ea, fa) == 2 / rs.inner(alpha, alpha)
        # root spaces pair only against their opposites
        assert normalized_form(L, ea, ea) == 0
        assert normalized_form(L, ea, {("h", 1): Fraction(1)}) == 0


@pytest.mark.parametrize("series,l", [("B", 3), ("C", 3), ("D", 4), ("F", 4)])
def test_form_invariance_sampled(series, l):
    L = _alg(series, l)
    for _ in range(300):
        x, y, z = (L.basis[RNG.randrange(L.dim)] for _ in range(3))
        ex, ey, ez = {x: Fraction(1)}, {y: Fraction(1)}, {z: Fraction(1)}
        assert (normalized_form(L, bracket(L, ex, ey), ez)
                == -normalized_form(L, ey, bracket(L, ex, ez)))


def test_dual_coxeter_via_casimir_trace():
    """tr(ad e_theta ad f_theta) = 2 h_dual with this normalization."""
    for series, l in (("A", 3), ("B", 3), ("G", 2), ("D", 4)):
        L = _alg(series, l)
        e = {("e", L.rs.theta): Fraction(1)}
        f = {("f", L.rs.theta): Fraction(1)}
        tr = Fraction(0)
        for b in L.basis:
            v = bracket(L, e, bracket(L, f, {b: Fraction(1)}))
            tr += v.get(b, Fraction(0))
        assert tr == 2 * L.rs.h_dual


def test_centralizer_of_cartan():
    # the centralizer of a regular Cartan element is the Cartan itself
    L = _alg("A", 3)
    h = {("h", 1): Fraction(1), ("h", 2): Fraction(5), ("h", 3): Fraction(11)}
    assert centralizer_dim(L, h) == 3
    # and of zero it is everything
    assert centralizer_dim(L, {}) == L.dim


def test_basis_label_format():
    assert basis_label(("h", 2)) == "h2"
    assert basis_label(("e", (1, 0, 1))) == "e[101]"
    assert basis_label(("f", (0, 1, 1))) == "f[011]"


def test_integer_structure_constants():
    for series, l in (("G", 2), ("F", 4), ("B", 3)):
        L = _alg(series, l)
        for (x, y), elem in L.bracket_table.items():
            kinds = {x[0], y[0]}
            if kinds == {"e"} or kinds == {"f"} or kinds == {"e", "f"}:
                for b, c in elem.items():
                    if b[0] != "h":
                        assert c.denominator == 1

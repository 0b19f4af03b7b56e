"""Root-system combinatorics for the finite simple Lie algebras.

Conventions, fixed once for the whole package:

* Bourbaki numbering of the simple roots for every series A-G.
* Roots are tuples of integers: coordinates in the simple-root basis.
* Weights are tuples of Fractions: coordinates in the fundamental-weight
  basis.
* The Cartan matrix is ``cartan[i][j] = <alpha_j, alpha_i^vee>`` with
  0-based indices internally; the public API uses 1-based simple-root
  indices like the literature.
* The invariant form on the root space is normalized so that long roots
  have squared length 2; in particular (theta|theta) = 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

Root = tuple  # integer coordinates in the simple-root basis
Weight = tuple  # Fraction coordinates in the fundamental-weight basis

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_POSITIVE_ROOT_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
    "E": lambda l: {6: 36, 7: 63, 8: 120}[l],
    "F": lambda l: 24,
    "G": lambda l: 6,
}


@dataclass(frozen=True)
class SimpleType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _RANK_BOUNDS:
            raise ValueError(f"unknown series {self.series!r}")
        lo, hi = _RANK_BOUNDS[self.series]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"invalid rank {self.rank} for series {self.series}")

    def __str__(self):
        return f"{self.series}{self.rank}"


def _dynkin_data(t: SimpleType):
    """Edges of the Dynkin diagram (0-based) and half-norms d_i = (a_i,a_i)/2."""
    l = t.rank
    s = t.series
    one = Fraction(1)
    half = Fraction(1, 2)
    if s in ("A",):
        edges = [(i, i + 1) for i in range(l - 1)]
        d = [one] * l
    elif s == "B":
        edges = [(i, i + 1) for i in range(l - 1)]
        d = [one] * (l - 1) + [half]
    elif s == "C":
        edges = [(i, i + 1) for i in range(l - 1)]
        d = [half] * (l - 1) + [one]
    elif s == "D":
        edges = [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
        d = [one] * l
    elif s == "E":
        edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)]
        edges += [(5, 6)] if l >= 7 else []
        edges += [(6, 7)] if l == 8 else []
        d = [one] * l
    elif s == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
        d = [one, one, half, half]
    else:  # G
        edges = [(0, 1)]
        d = [Fraction(1, 3), one]
    return edges, d


def _cartan_matrix(t: SimpleType):
    edges, d = _dynkin_data(t)
    l = t.rank
    a = [[0] * l for _ in range(l)]
    for i in range(l):
        a[i][i] = 2
    for i, j in edges:
        # (alpha_i, alpha_j) = -max(d_i, d_j) for adjacent simple roots
        ip = -max(d[i], d[j])
        aij = ip / d[i]
        aji = ip / d[j]
        assert aij.denominator == 1 and aji.denominator == 1
        a[i][j] = int(aij)
        a[j][i] = int(aji)
    return tuple(tuple(row) for row in a), tuple(d)


@dataclass(frozen=True)
class RootSystem:
    type: SimpleType
    cartan: tuple  # cartan[i][j] = <alpha_j, alpha_i^vee>, 0-based
    positive_roots: tuple  # sorted by (height, lex coords)
    rho: Weight
    theta: Root
    h_dual: int
    simple_norms: tuple = field(repr=False)  # d_i = (alpha_i, alpha_i)/2
    cartan_inv: tuple = field(repr=False)  # exact inverse, Fractions

    @property
    def rank(self) -> int:
        return self.type.rank

    # -- pairings -----------------------------------------------------------

    def simple_pairing(self, root: Root, i: int) -> int:
        """<root, alpha_i^vee> for a 1-based simple root index."""
        row = self.cartan[i - 1]
        return sum(a * c for a, c in zip(row, root))

    def inner(self, r1: Root, r2) -> Fraction:
        """(r1|r2) in root coordinates, normalized so (theta|theta)=2."""
        total = Fraction(0)
        for i, c1 in enumerate(r1):
            if not c1:
                continue
            for j, c2 in enumerate(r2):
                if c2:
                    total += c1 * c2 * self.simple_norms[i] * self.cartan[i][j]
        return total

    def coroot_coords(self, root: Root):
        """Coordinates of root^vee in the simple-coroot basis."""
        d_root = self.inner(root, root) / 2
        return tuple(Fraction(c) * self.simple_norms[j] / d_root for j, c in enumerate(root))

    def coroot_pairing(self, lam: Weight, root: Root) -> Fraction:
        """<lam, root^vee> for lam in fundamental-weight coordinates."""
        cv = self.coroot_coords(root)
        return sum(m * c for m, c in zip(lam, cv))

    # -- coordinate conversions --------------------------------------------

    def root_to_weight(self, root) -> Weight:
        """Fundamental-weight coordinates of an element of the root lattice."""
        return tuple(
            sum(Fraction(self.cartan[i][j]) * Fraction(c) for j, c in enumerate(root))
            for i in range(self.rank)
        )

    def weight_to_root_coords(self, lam: Weight):
        """Simple-root coordinates (Fractions) of a weight."""
        return tuple(
            sum(self.cartan_inv[i][j] * Fraction(m) for j, m in enumerate(lam))
            for i in range(self.rank)
        )

    def is_root(self, coords) -> bool:
        pos = tuple(int(c) for c in coords)
        if any(Fraction(c) != p for c, p in zip(coords, pos)):
            return False
        neg = tuple(-c for c in pos)
        return pos in self._root_set or neg in self._root_set

    @property
    def _root_set(self):
        return _positive_root_set(self)


@lru_cache(maxsize=None)
def _positive_root_set(rs: RootSystem):
    return frozenset(rs.positive_roots)


def height(root: Root) -> int:
    return sum(root)


def _matrix_inverse(a, n):
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        pr = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[pr] = aug[pr], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def _build(series: str, rank: int) -> RootSystem:
    t = SimpleType(series, rank)
    cartan, d = _cartan_matrix(t)
    l = rank

    roots = set()
    layer = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots.update(layer)
    while layer:
        nxt = set()
        for alpha in layer:
            for i in range(l):
                simple = tuple(int(i == j) for j in range(l))
                if alpha == simple:
                    continue
                q = sum(cartan[i][j] * c for j, c in enumerate(alpha))
                p = 0
                probe = tuple(c - s for c, s in zip(alpha, simple))
                while probe in roots:
                    p += 1
                    probe = tuple(c - s for c, s in zip(probe, simple))
                if p - q > 0:
                    cand = tuple(c + s for c, s in zip(alpha, simple))
                    if cand not in roots:
                        nxt.add(cand)
        roots.update(nxt)
        layer = sorted(nxt)

    positives = tuple(sorted(roots, key=lambda r: (height(r), r)))
    expected = _POSITIVE_ROOT_COUNT[series](rank)
    if len(positives) != expected:
        raise RuntimeError(
            f"{t}: found {len(positives)} positive roots, expected {expected}")

    max_h = height(positives[-1])
    top = [r for r in positives if height(r) == max_h]
    if len(top) != 1:
        raise RuntimeError(f"{t}: highest root is not unique")
    theta = top[0]

    rho = tuple(Fraction(1) for _ in range(l))
    d_theta = sum(
        Fraction(c1) * Fraction(c2) * d[i] * cartan[i][j]
        for i, c1 in enumerate(theta) for j, c2 in enumerate(theta)) / 2
    if d_theta != 1:
        raise RuntimeError(f"{t}: (theta|theta) != 2, normalization broken")
    h_dual_f = sum(Fraction(c) * d[j] for j, c in enumerate(theta)) + 1
    if h_dual_f.denominator != 1:
        raise RuntimeError(f"{t}: non-integral dual Coxeter number")

    return RootSystem(
        type=t,
        cartan=cartan,
        positive_roots=positives,
        rho=rho,
        theta=theta,
        h_dual=int(h_dual_f),
        simple_norms=d,
        cartan_inv=_matrix_inverse(cartan, l),
    )


def build_root_system(t: SimpleType) -> RootSystem:
    return _build(t.series, t.rank)


def dual_coxeter(rs: RootSystem) -> int:
    return rs.h_dual


def simple_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """s_i acting on a weight in fundamental-weight coordinates, 1-based i."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple reflection index {i} out of range 1..{rs.rank}")
    mi = Fraction(lam[i - 1])
    return tuple(Fraction(m) - mi * rs.cartan[j][i - 1] for j, m in enumerate(lam))


def weyl_action(rs: RootSystem, word, lam: Weight) -> Weight:
    """Apply w = s_{i1} s_{i2} ... s_{ir} to lam (rightmost reflection first)."""
    out = tuple(Fraction(m) for m in lam)
    for i in reversed(tuple(word)):
        out = simple_reflection(rs, i, out)
    return out


def shifted_weyl_action(rs: RootSystem, word, lam: Weight) -> Weight:
    """The dot action: returns w(lam + rho) - rho."""
    shifted = tuple(Fraction(m) + r for m, r in zip(lam, rs.rho))
    moved = weyl_action(rs, word, shifted)
    return tuple(m - r for m, r in zip(moved, rs.rho))


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module with dominant integral highest
    weight lam, by the Weyl dimension formula."""
    lam = tuple(Fraction(m) for m in lam)
    if any(m < 0 for m in lam):
        raise ValueError(f"weight {lam} is not dominant")
    num = Fraction(1)
    den = Fraction(1)
    for alpha in rs.positive_roots:
        cv = rs.coroot_coords(alpha)
        rho_pair = sum(cv)
        lam_pair = sum(m * c for m, c in zip(lam, cv))
        num *= lam_pair + rho_pair
        den *= rho_pair
    dim = num / den
    if dim.denominator != 1:
        raise ValueError(f"non-integral Weyl dimension for weight {lam}")
    return int(dim)

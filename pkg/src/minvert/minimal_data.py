"""Minimal-nilpotent 5-grading, the reductive part g^natural, induced
levels k_i, central charge, and the lisse / collapse classification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chevalley import AlgElement, BasisIndex, LieAlgebra, ad_trace_on_subspace, normalized_form
from .exact import Poly
from .rootsys import RootSystem, SimpleType, height

DELIGNE_SERIES = (
    ("A", 1), ("A", 2), ("G", 2), ("D", 4), ("F", 4), ("E", 6), ("E", 7), ("E", 8),
)


@dataclass
class MinimalGrading:
    pieces: dict  # doubled eigenvalue in {-2,-1,0,1,2} -> list of BasisIndex
    e_theta: AlgElement
    h_theta: AlgElement
    f_theta: AlgElement


@dataclass
class NaturalSummand:
    index: int
    type: object  # SimpleType, or the string "center"
    basis: list  # list of AlgElement
    theta_i: object  # Root of the summand; None for the center
    level_poly: object  # Poly affine in k; None for a zero-dimensional center
    nodes: tuple = ()  # ambient simple-root indices (1-based) spanning the summand

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class ClassificationVerdict:
    lisse: str  # "yes" | "no" | "unknown-conjectural"
    collapses_to_trivial: bool
    reason: str


def minimal_grading(L: LieAlgebra) -> MinimalGrading:
    rs = L.rs
    theta = rs.theta
    pieces = {j: [] for j in (-2, -1, 0, 1, 2)}
    for b in L.basis:
        w = L.weight_of(b)
        ev = rs.coroot_pairing(rs.root_to_weight(w), theta)
        if ev.denominator != 1 or not -2 <= ev <= 2:
            raise RuntimeError(f"unexpected ad h_theta eigenvalue {ev} at {b}")
        pieces[int(ev)].append(b)
    if len(pieces[2]) != 1 or len(pieces[-2]) != 1:
        raise RuntimeError("top and bottom grading pieces must be lines")
    return MinimalGrading(
        pieces=pieces,
        e_theta={("e", theta): Fraction(1)},
        h_theta=L.coroot(theta),
        f_theta={("f", theta): Fraction(1)},
    )


def _perp_simple_nodes(rs: RootSystem):
    """1-based indices of the simple roots perpendicular to theta."""
    return tuple(
        i for i in range(1, rs.rank + 1) if rs.simple_pairing(rs.theta, i) == 0)


def _components(nodes, edges):
    nodes = set(nodes)
    adj = {n: set() for n in nodes}
    for a, b in edges:
        if a in nodes and b in nodes:
            adj[a].add(b)
            adj[b].add(a)
    comps = []
    seen = set()
    for n in sorted(nodes):
        if n in seen:
            continue
        comp = []
        stack = [n]
        seen.add(n)
        while stack:
            c = stack.pop()
            comp.append(c)
            for m in adj[c]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def _classify_subdiagram(rs: RootSystem, comp):
    """SimpleType of the Dynkin subdiagram induced on the given nodes."""
    n = len(comp)
    if n == 1:
        return SimpleType("A", 1)
    norms = [rs.simple_norms[i - 1] for i in comp]
    adj = {i: [] for i in comp}
    for i in comp:
        for j in comp:
            if i < j and rs.cartan[i - 1][j - 1] != 0:
                adj[i].append(j)
                adj[j].append(i)
    degrees = {i: len(adj[i]) for i in comp}
    branch = [i for i in comp if degrees[i] == 3]
    if branch:
        arms = sorted(_arm_lengths(adj, branch[0]))
        if arms[0] == 1 and arms[1] == 1:
            return SimpleType("D", n)
        return SimpleType("E", n)
    dmax, dmin = max(norms), min(norms)
    if dmax == dmin:
        return SimpleType("A", n)
    if dmax / dmin == 3:
        return SimpleType("G", 2)
    n_long = sum(1 for d in norms if d == dmax)
    n_short = n - n_long
    if n_long == 2 and n_short == 2:
        return SimpleType("F", 4)
    if n_long == 1:
        return SimpleType("C", n) if n >= 2 else SimpleType("A", 1)
    return SimpleType("B", n)


def _arm_lengths(adj, center):
    arms = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [m for m in adj[cur] if m != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


def _subsystem_roots(rs: RootSystem, comp):
    """Positive roots of g supported on the given simple-root nodes."""
    idx = set(i - 1 for i in comp)
    return [a for a in rs.positive_roots
            if all(c == 0 or j in idx for j, c in enumerate(a))]


def _center_vector(L: LieAlgebra, perp) -> AlgElement:
    """Cartan vector spanning the center of g^natural, or None."""
    from .exact import nullspace

    rs = L.rs
    l = rs.rank
    # conditions: <alpha_s, v> = 0 for perp simple s, and (v | h_theta) = 0
    rows = []
    for s in perp:
        rows.append([Fraction(rs.cartan[s - 1][j]) for j in range(l)])
    h_theta = L.coroot(rs.theta)
    rows.append([
        sum(L.form_entry(("h", j + 1), ("h", i + 1)) * h_theta.get(("h", i + 1), Fraction(0))
            for i in range(l))
        for j in range(l)
    ])
    basis = nullspace(rows, l)
    if not basis:
        return None
    if len(basis) != 1:
        raise RuntimeError("center of g^natural is not at most one-dimensional")
    vec = basis[0]
    den = 1
    for c in vec:
        den = den * c.denominator // __import__("math").gcd(den, c.denominator)
    return {("h", j + 1): c * den for j, c in enumerate(vec) if c}


@lru_cache(maxsize=None)
def _g_natural_cached(series, rank):
    from .chevalley import build_lie_algebra
    from .rootsys import build_root_system

    L = build_lie_algebra(build_root_system(SimpleType(series, rank)))
    rs = L.rs
    perp = _perp_simple_nodes(rs)
    edges = [(i + 1, j + 1) for i in range(rs.rank) for j in range(i + 1, rs.rank)
             if rs.cartan[i][j] != 0]
    summands = []
    center = _center_vector(L, perp)
    center_basis = [center] if center is not None else []
    center_summand = NaturalSummand(
        index=0, type="center", basis=center_basis, theta_i=None, level_poly=None)
    summands.append(center_summand)
    for n, comp in enumerate(_components(perp, edges), start=1):
        sub_pos = _subsystem_roots(rs, comp)
        theta_i = max(sub_pos, key=lambda a: (height(a), a))
        basis = [{("h", i): Fraction(1)} for i in comp]
        basis += [{("e", a): Fraction(1)} for a in sub_pos]
        basis += [{("f", a): Fraction(1)} for a in sub_pos]
        summands.append(NaturalSummand(
            index=n,
            type=_classify_subdiagram(rs, comp),
            basis=basis,
            theta_i=theta_i,
            level_poly=None,
            nodes=comp,
        ))
    # fill levels (needs the summand list itself for g(0))
    for s in summands:
        if s.index == 0 and not s.basis:
            continue
        s.level_poly = _level_poly(L, s)
    return summands


def g_natural(L: LieAlgebra):
    """Center g_0 followed by the simple summands g_i of g^natural."""
    return _g_natural_cached(L.rs.type.series, L.rs.type.rank)


def _g0_basis(L: LieAlgebra):
    rs = L.rs
    theta = rs.theta
    out = [("h", i) for i in range(1, rs.rank + 1)]
    for a in rs.positive_roots:
        if rs.coroot_pairing(rs.root_to_weight(a), theta) == 0:
            out.append(("e", a))
            out.append(("f", a))
    return out


def _natural_form(L: LieAlgebra, x: AlgElement, y: AlgElement) -> Poly:
    """(x|y)^natural = (k + h/2)(x|y) - 1/4 tr_{g(0)}(ad x ad y), affine in k."""
    g0 = _g0_basis(L)
    base = normalized_form(L, x, y)
    tr = ad_trace_on_subspace(L, x, y, g0)
    return Poly([Fraction(L.rs.h_dual, 2) * base - tr / 4, base])


def _level_poly(L: LieAlgebra, summand: NaturalSummand) -> Poly:
    if summand.index == 0:
        x = summand.basis[0]
        ratio = normalized_form(L, x, x)
        return Poly([c / ratio for c in _natural_form(L, x, x).coeffs])
    th = summand.theta_i
    e = {("e", th): Fraction(1)}
    f = {("f", th): Fraction(1)}
    h = L.coroot(th)
    # (e|f)_i = 1 and (h|h)_i = 2 in the summand's own normalization
    p1 = _natural_form(L, e, f)
    p2 = Poly([c / 2 for c in _natural_form(L, h, h).coeffs])
    if p1 != p2:
        raise RuntimeError(
            f"inconsistent proportionality for summand {summand.index}: {p1} vs {p2}")
    return p1


def k_natural(L: LieAlgebra, i: int) -> Poly:
    """Induced level k_i^natural of the i-th summand, as an affine Poly in k."""
    summands = g_natural(L)
    for s in summands:
        if s.index == i:
            if s.level_poly is None:
                raise ValueError("zero-dimensional center has no level")
            return s.level_poly
    raise IndexError(f"no summand with index {i}")


def central_charge(rs: RootSystem, k) -> Fraction:
    k = Fraction(k)
    h = rs.h_dual
    if k == -h:
        raise ValueError("central charge undefined at the critical level")
    dim = rs.rank + 2 * len(rs.positive_roots)
    return k * dim / (k + h) - 6 * k + h - 4


def deligne_level(rs: RootSystem) -> Fraction:
    t = rs.type
    if (t.series, t.rank) not in DELIGNE_SERIES:
        raise ValueError(f"{t} is not in the Deligne exceptional series")
    return Fraction(-rs.h_dual, 6) - 1


def _is_half_odd(k: Fraction) -> bool:
    return k.denominator == 2


def collapse_verdict(rs: RootSystem, k) -> bool:
    """True iff the simple minimal W-algebra at level k is the trivial
    vertex algebra."""
    k = Fraction(k)
    t = rs.type
    if (t.series, t.rank) == ("A", 1):
        raise ValueError("type A1 is excluded; the minimal reduction is the Virasoro algebra")
    if (t.series, t.rank) in DELIGNE_SERIES and k == deligne_level(rs):
        return True
    if t.series == "C" and k == Fraction(-1, 2):
        return True
    return False


def lisse_verdict(rs: RootSystem, k) -> ClassificationVerdict:
    k = Fraction(k)
    t = rs.type
    series, l = t.series, t.rank

    def verdict(lisse, reason):
        collapses = (collapse_verdict(rs, k) if (series, l) != ("A", 1)
                     else (k + 2) in (Fraction(2, 3), Fraction(3, 2), Fraction(0)))
        return ClassificationVerdict(lisse, collapses, reason)

    if (series, l) == ("A", 1):
        r = k + 2
        ok = r == 0 or (r > 0 and r.numerator >= 2 and r.denominator >= 2)
        return verdict("yes" if ok else "no", "sl2: Virasoro reduction")
    if (series, l) == ("A", 2) or series == "G":
        if collapse_verdict(rs, k):
            return verdict("yes", "collapses to the trivial algebra")
        return verdict("unknown-conjectural", "conjectural classification only")
    if series == "A":  # sl_n, n >= 4
        return verdict("no", "sl_n (n>=4): never lisse (conjectural clause)")
    if series == "C":
        ok = _is_half_odd(k) and k.numerator >= -1
        return verdict("yes" if ok else "no", "sp_2l: admissible with denominator 2, p >= -1")
    if (series, l) == ("B", 3):
        ok = _is_half_odd(k) and k.numerator >= -3
        return verdict("yes" if ok else "no", "so7: admissible with denominator 2, p >= -3")
    if series == "B":
        return verdict("no", "so_{2l+1} (l>=4): never lisse")
    if series == "D":
        ok = k.denominator == 1 and k >= -2
        return verdict("yes" if ok else "no", "so_2l: integer >= -2")
    if series == "F":
        ok = _is_half_odd(k) and k.numerator >= -5
        return verdict("yes" if ok else "no", "F4: admissible with denominator 2, p >= -5")
    # E series
    bound = {6: -3, 7: -4, 8: -6}[l]
    ok = k.denominator == 1 and k >= bound
    return verdict("yes" if ok else "no", f"E{l}: integer >= {bound}")

"""The symmetric square S^2(g) as a g-module: Casimir, weight spaces,
pair enumeration for theta - theta_i, and exact highest-weight solving.

A SymElement is a sparse dict mapping an unordered basis pair (a, b) --
stored with L.index[a] <= L.index[b] -- to the rational coefficient of the
commutative monomial x_a x_b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chevalley import AlgElement, BasisIndex, LieAlgebra, bracket
from .exact import nullspace
from .minimal_data import g_natural
from .rootsys import Weight

SymElement = dict  # (BasisIndex, BasisIndex) canonical pair -> Fraction


@dataclass
class PairList:
    target: tuple  # theta - theta_i, simple-root coords
    pairs: list  # unordered positive-root pairs (beta, delta), beta <= delta


def sym_key(L: LieAlgebra, a: BasisIndex, b: BasisIndex):
    return (a, b) if L.index[a] <= L.index[b] else (b, a)


def sym_add(out: SymElement, key, c: Fraction):
    v = out.get(key, Fraction(0)) + c
    if v:
        out[key] = v
    elif key in out:
        del out[key]


def ad_sym(L: LieAlgebra, x: AlgElement, w: SymElement) -> SymElement:
    """Derivation action of x on S^2(g): x.(ab) = [x,a]b + a[x,b]."""
    out = {}
    for (a, b), c in w.items():
        for z, cz in bracket(L, x, {a: Fraction(1)}).items():
            sym_add(out, sym_key(L, z, b), c * cz)
        for z, cz in bracket(L, x, {b: Fraction(1)}).items():
            sym_add(out, sym_key(L, a, z), c * cz)
    return out


def sym_weight(L: LieAlgebra, key):
    """Weight of a monomial, in simple-root coordinates."""
    a, b = key
    return tuple(x + y for x, y in zip(L.weight_of(a), L.weight_of(b)))


def casimir(L: LieAlgebra) -> SymElement:
    """Casimir element sum x_a x^a over dual bases of the normalized form,
    as a commutative degree-2 monomial sum."""
    n = L.dim
    gram = [[L.form_entry(a, b) for b in L.basis] for a in L.basis]
    inv = _invert(gram, n)
    out = {}
    for i in range(n):
        for j in range(i, n):
            c = inv[i][j] if i == j else 2 * inv[i][j]
            if c:
                sym_add(out, sym_key(L, L.basis[i], L.basis[j]), c)
    return out


def _invert(a, n):
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        pr = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[pr] = aug[pr], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def theta_pairs(L: LieAlgebra, i: int) -> PairList:
    """All unordered pairs of positive roots summing to theta - theta_i."""
    rs = L.rs
    theta_i = next(s.theta_i for s in g_natural(L) if s.index == i)
    target = tuple(x - y for x, y in zip(rs.theta, theta_i))
    pos = set(rs.positive_roots)
    pairs = []
    for beta in rs.positive_roots:
        delta = tuple(t - b for t, b in zip(target, beta))
        if delta in pos and beta <= delta:
            pairs.append((beta, delta))
    pairs.sort()
    return PairList(target=target, pairs=pairs)


def weight_space(L: LieAlgebra, mu: Weight, d: int = 2):
    """All degree-2 monomials of Cartan weight mu (fundamental coords)."""
    if d != 2:
        raise ValueError("only degree 2 is supported")
    rs = L.rs
    target = rs.weight_to_root_coords(mu)
    out = []
    for i, a in enumerate(L.basis):
        wa = L.weight_of(a)
        for b in L.basis[i:]:
            wb = L.weight_of(b)
            if all(Fraction(x + y) == t for x, y, t in zip(wa, wb, target)):
                out.append((a, b))
    return out


def solve_highest_weight_vector(L: LieAlgebra, mu: Weight) -> SymElement:
    """The unique-up-to-scalar weight-mu element of S^2(g) annihilated by
    every ad e_{alpha_s}; normalized so the e_theta e_{theta_i} coefficient
    (else the first monomial coefficient) is 1."""
    basis = weight_space(L, mu)
    if not basis:
        raise ValueError(f"empty weight space for {mu}")
    rs = L.rs
    mat_rows = []
    for s in range(1, rs.rank + 1):
        alpha = tuple(int(j == s - 1) for j in range(rs.rank))
        e_s = {("e", alpha): Fraction(1)}
        images = [ad_sym(L, e_s, {key: Fraction(1)}) for key in basis]
        targets = sorted({t for im in images for t in im},
                         key=lambda p: (L.index[p[0]], L.index[p[1]]))
        for t in targets:
            mat_rows.append([im.get(t, Fraction(0)) for im in images])
    ker = nullspace(mat_rows, len(basis))
    if len(ker) != 1:
        raise RuntimeError(
            f"highest-weight solution space for {mu} has dimension {len(ker)}")
    vec = ker[0]
    sol = {key: c for key, c in zip(basis, vec) if c}
    pivot = None
    for key, c in sol.items():
        a, b = key
        if a[0] == "e" and b[0] == "e" and (a[1] == rs.theta or b[1] == rs.theta):
            pivot = c
            break
    if pivot is None:
        pivot = sol[min(sol, key=lambda p: (L.index[p[0]], L.index[p[1]]))]
    return {key: c / pivot for key, c in sol.items()}


def s2_decomposition_check(L: LieAlgebra) -> dict:
    """dim S^2(g) against dim L(2 theta) + 1 + sum_i dim L(theta+theta_i),
    plus dim L((theta+theta_1)/2) in type C and the extra adjoint summand
    L(theta) in type A (rank >= 2)."""
    from .rootsys import weyl_dimension

    rs = L.rs
    lhs = L.dim * (L.dim + 1) // 2
    terms = [("L(2theta)", weyl_dimension(rs, rs.root_to_weight(
        tuple(2 * c for c in rs.theta))))]
    terms.append(("L(0)", 1))
    for s in g_natural(L):
        if s.index == 0 or s.theta_i is None:
            continue
        mu = rs.root_to_weight(tuple(x + y for x, y in zip(rs.theta, s.theta_i)))
        terms.append((f"L(theta+theta_{s.index})", weyl_dimension(rs, mu)))
    if rs.type.series == "A" and rs.rank >= 2:
        terms.append(("L(theta)", weyl_dimension(rs, rs.root_to_weight(rs.theta))))
    if rs.type.series == "C":
        s1 = next(s for s in g_natural(L) if s.index == 1)
        half = tuple(Fraction(x + y, 2) for x, y in zip(rs.theta, s1.theta_i))
        terms.append(("L((theta+theta_1)/2)", weyl_dimension(rs, rs.root_to_weight(half))))
    rhs = sum(v for _, v in terms)
    return {"ok": lhs == rhs, "dim_s2": lhs, "sum": rhs, "terms": terms}

"""Degree-truncated model of the universal affine vertex algebra V^k(g)
with a symbolic level k.

Vectors live in U(g[t^-1]t^-1)|0>: a PBWMonomial is a tuple of factors
(mode, basis_position) with mode < 0, kept sorted ascending (most negative
mode first, ties by basis position).  A PBWVector maps monomials to Poly
coefficients in k.  The commutation relation is

    [x(m), y(n)] = [x,y](m+n) + m (x|y) delta_{m+n,0} k,

with the central element specialized to the symbolic level k.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .chevalley import AlgElement, BasisIndex, LieAlgebra, basis_label
from .exact import POLY_ONE, POLY_ZERO, Poly, nullspace, nullspace_ratfunc, poly_row_reduce, rref
from .minimal_data import g_natural
from .rootsys import Weight

PBWMonomial = tuple  # ((mode, bpos), ...) sorted ascending
PBWVector = dict  # PBWMonomial -> Poly

DEFAULT_BUDGET = 8


def degree_budget() -> int:
    return int(os.environ.get("MINVERT_BUDGET", DEFAULT_BUDGET))


@dataclass
class SingularSolution:
    level: object  # Fraction, or the string "all k"
    vector: PBWVector


# ---------------------------------------------------------------------------
# PBW reduction


def _add_into(out: PBWVector, mono: PBWMonomial, p: Poly):
    v = out.get(mono, POLY_ZERO) + p
    if v.is_zero():
        out.pop(mono, None)
    else:
        out[mono] = v


def _reduce(L: LieAlgebra, word, coeff: Poly, out: PBWVector):
    """Rewrite a product of negative-mode factors into canonical order."""
    stack = [(tuple(word), coeff)]
    while stack:
        w, c = stack.pop()
        i = _first_inversion(w)
        if i is None:
            _add_into(out, w, c)
            continue
        (m1, b1), (m2, b2) = w[i], w[i + 1]
        stack.append((w[:i] + ((m2, b2), (m1, b1)) + w[i + 2:], c))
        # x1 x2 = x2 x1 + [x1,x2](m1+m2); both modes negative, no central term
        br = L.bracket_basis(L.basis[b1], L.basis[b2])
        for z, cz in br.items():
            stack.append((w[:i] + ((m1 + m2, L.index[z]),) + w[i + 2:], c * cz))
    return out


def _first_inversion(w):
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            return i
    return None


def pbw_scale(v: PBWVector, p) -> PBWVector:
    p = Poly._coerce(p)
    if p.is_zero():
        return {}
    return {m: c * p for m, c in v.items()}


def pbw_add(u: PBWVector, v: PBWVector) -> PBWVector:
    out = dict(u)
    for m, c in v.items():
        _add_into(out, m, c)
    return out


def pbw_is_zero(v: PBWVector) -> bool:
    return not v


def pbw_degree(v: PBWVector) -> int:
    degs = {sum(-m for m, _ in mono) for mono in v}
    if len(degs) > 1:
        raise ValueError(f"inhomogeneous PBW vector, degrees {sorted(degs)}")
    return degs.pop() if degs else 0


# ---------------------------------------------------------------------------
# operations


def sigma_embed(L: LieAlgebra, w) -> PBWVector:
    """sigma_2: S^2(g) -> V^k(g)_2, x y -> 1/2 (x(-1)y(-1) + y(-1)x(-1))."""
    out = {}
    for (a, b), c in w.items():
        ia, ib = L.index[a], L.index[b]
        if ia == ib:
            _reduce(L, ((-1, ia), (-1, ib)), Poly.const(c), out)
        else:
            half = Poly.const(Fraction(c, 2))
            _reduce(L, ((-1, ia), (-1, ib)), half, out)
            _reduce(L, ((-1, ib), (-1, ia)), half, out)
    return out


def pbw_multiply(L: LieAlgebra, u: PBWVector, v: PBWVector) -> PBWVector:
    out = {}
    for mu, cu in u.items():
        for mv, cv in v.items():
            _reduce(L, mu + mv, cu * cv, out)
    return out


def _as_coeff_map(L: LieAlgebra, x):
    """Normalize x (BasisIndex or AlgElement) to {bpos: Fraction}."""
    if isinstance(x, tuple):
        return {L.index[x]: Fraction(1)}
    return {L.index[b]: c for b, c in x.items() if c}


def apply_mode(L: LieAlgebra, x, n: int, v: PBWVector) -> PBWVector:
    """Act by x(n) on v; x is a BasisIndex or an AlgElement."""
    out = {}
    for bpos, cx in _as_coeff_map(L, x).items():
        for mono, c in v.items():
            for w, p in _apply_single(L, bpos, n, mono).items():
                _add_into(out, w, p * c * cx)
    return out


def _apply_single(L: LieAlgebra, bpos: int, n: int, word) -> PBWVector:
    out = {}
    if n < 0:
        return _reduce(L, ((n, bpos),) + tuple(word), POLY_ONE, out)
    if not word:
        return out  # x(n)|0> = 0 for n >= 0
    (m, b), rest = word[0], word[1:]
    xb, yb = L.basis[bpos], L.basis[b]
    # commutator past the first factor
    for z, cz in L.bracket_basis(xb, yb).items():
        for w, p in _apply_single_cached(L, L.index[z], n + m, rest).items():
            _add_into(out, w, p * cz)
    if n + m == 0:
        central = n * L.form_entry(xb, yb)
        if central:
            _add_into(out, tuple(rest), Poly((0, central)))  # central * k
    # pass-through
    for w, p in _apply_single_cached(L, bpos, n, rest).items():
        _reduce(L, ((m, b),) + w, p, out)
    return out


def _apply_single_cached(L: LieAlgebra, bpos: int, n: int, word):
    cache = getattr(L, "_apply_cache", None)
    if cache is None:
        cache = L._apply_cache = {}
    key = (bpos, n, word)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = _apply_single(L, bpos, n, tuple(word))
    return hit


def highest_weight_violations(L: LieAlgebra, v: PBWVector):
    """Simple indices s with e_{alpha_s}(0) v != 0."""
    rs = L.rs
    bad = []
    for s in range(1, rs.rank + 1):
        alpha = tuple(int(j == s - 1) for j in range(rs.rank))
        if apply_mode(L, ("e", alpha), 0, v):
            bad.append(s)
    return bad


def is_affine_singular(L: LieAlgebra, v: PBWVector):
    """Levels k at which the g-highest vector v is singular for V^k(g).

    Returns a list of SingularSolution; [SingularSolution("all k", v)] if
    f_theta(1) v vanishes identically."""
    if pbw_is_zero(v):
        raise ValueError("zero vector")
    bad = highest_weight_violations(L, v)
    if bad:
        raise ValueError(f"vector is not g-highest: e_alpha_s(0) v != 0 for s in {bad}")
    image = apply_mode(L, ("f", L.rs.theta), 1, v)
    if pbw_is_zero(image):
        return [SingularSolution("all k", v)]
    polys = list(image.values())
    g = POLY_ZERO
    for p in polys:
        g = p if g.is_zero() else g.gcd(p)
    if g.degree == 0:
        return []
    out = []
    for root in g.rational_roots():
        spec = {m: p(root) for m, p in image.items()}
        if any(spec.values()):
            continue
        out.append(SingularSolution(root, v))
    return out


def singular_level_of_power(L: LieAlgebra, w, n: int) -> Fraction:
    """The level making sigma(w)^{n+1} singular, via the exact identity
    f_theta(1) sigma(w)^{n+1} = (affine in k) * sigma(w)^n e_{theta_i}(-1)."""
    if 2 * (n + 1) > degree_budget():
        raise ValueError(f"degree {2*(n+1)} exceeds budget {degree_budget()}")
    sv = sigma_embed(L, w)
    theta_i = _summand_root_of(L, w)
    image = apply_mode(L, ("f", L.rs.theta), 1, _power(L, sv, n + 1))
    predicted = pbw_multiply(L, _power(L, sv, n), {((-1, L.index[("e", theta_i)]),): POLY_ONE})
    ratio = None
    for mono, p in predicted.items():
        if not p.is_zero():
            q, r = image.get(mono, POLY_ZERO).divmod(p)
            if not r.is_zero():
                raise RuntimeError("image is not Poly-proportional to the predicted vector")
            if ratio is None:
                ratio = q
            elif ratio != q:
                raise RuntimeError("inconsistent proportionality across monomials")
    diff = pbw_add(image, pbw_scale(predicted, -(ratio if ratio is not None else POLY_ZERO)))
    if not pbw_is_zero(diff):
        raise RuntimeError(f"image minus scalar*predicted is nonzero on {len(diff)} monomials")
    if ratio is None or ratio.degree != 1:
        raise RuntimeError(f"determining scalar {ratio!r} is not affine in k")
    (root,) = ratio.rational_roots()
    return root


def _power(L: LieAlgebra, v: PBWVector, n: int) -> PBWVector:
    out = {(): POLY_ONE}
    for _ in range(n):
        out = pbw_multiply(L, out, v)
    return out


def _summand_root_of(L: LieAlgebra, w):
    """theta_i for a highest-weight vector w of weight theta + theta_i."""
    theta = L.rs.theta
    wt = next(iter(w))
    mu = tuple(sum(x) for x in zip(L.weight_of(wt[0]), L.weight_of(wt[1])))
    cand = tuple(a - b for a, b in zip(mu, theta))
    for s in g_natural(L):
        if s.theta_i == cand:
            return cand
    raise ValueError(f"weight {mu} is not of the form theta + theta_i")


# ---------------------------------------------------------------------------
# general singular-vector solver


def _weight_monomials(L: LieAlgebra, target, d: int):
    """All canonical PBW monomials of degree d with total weight `target`
    (simple-root coords), including Cartan-mode factors."""
    factors = []
    for m in range(-d, 0):
        for bpos in range(L.dim):
            factors.append((m, bpos))
    factors.sort()
    zero = tuple(0 for _ in range(L.rs.rank))
    out = []

    def rec(start, deg_left, wt, acc):
        if deg_left == 0:
            if wt == zero:
                out.append(tuple(acc))
            return
        for fi in range(start, len(factors)):
            m, bpos = factors[fi]
            if -m > deg_left:
                continue
            acc.append((m, bpos))
            w2 = tuple(a - b for a, b in zip(wt, L.weight_of(L.basis[bpos])))
            rec(fi, deg_left + m, w2, acc)
            acc.pop()

    rec(0, d, tuple(target), [])
    return sorted(out)


def solve_affine_singular(L: LieAlgebra, mu: Weight, d: int):
    """All singular vectors of weight mu and degree d in V^k(g).

    Imposes e_{alpha_s}(0) v = 0 for all simple s and f_theta(1) v = 0 over
    the rational function field Q(k); solutions holding for every k are
    reported with level "all k", and levels where the solution space jumps
    are found exactly from the fraction-free elimination witnesses."""
    if d > degree_budget():
        raise ValueError(f"degree {d} exceeds budget {degree_budget()}")
    rs = L.rs
    target = rs.weight_to_root_coords(mu)
    if any(t.denominator != 1 for t in target):
        return []
    target = tuple(int(t) for t in target)
    basis = _weight_monomials(L, target, d)
    if not basis:
        return []
    operators = []
    for s in range(1, rs.rank + 1):
        alpha = tuple(int(j == s - 1) for j in range(rs.rank))
        operators.append((("e", alpha), 0))
    operators.append((("f", rs.theta), 1))
    rows = []
    for x, n in operators:
        images = [apply_mode(L, x, n, {mono: POLY_ONE}) for mono in basis]
        targets = sorted({t for im in images for t in im})
        for t in targets:
            rows.append([im.get(t, POLY_ZERO) for im in images])
    generic = nullspace_ratfunc(rows, len(basis))
    solutions = [
        SingularSolution("all k", {m: p for m, p in zip(basis, vec) if not p.is_zero()})
        for vec in generic
    ]
    _, _, witnesses = poly_row_reduce(rows, len(basis))
    candidates = sorted({r for wp in witnesses if wp.degree > 0 for r in wp.rational_roots()})
    for k0 in candidates:
        spec_rows = [[p(k0) for p in row] for row in rows]
        ker = nullspace(spec_rows, len(basis))
        if len(ker) <= len(generic):
            continue
        # report vectors extending the specialized generic solutions
        known = [[p(k0) for p in vec] for vec in generic]
        base_rank = _rat_rank(known)
        for vec in ker:
            if _rat_rank(known + [vec]) > base_rank:
                known.append(vec)
                base_rank += 1
                sol = {m: Poly.const(c) for m, c in zip(basis, vec) if c}
                solutions.append(SingularSolution(k0, sol))
    return solutions


def _rat_rank(vectors):
    if not vectors:
        return 0
    return len(rref(vectors, len(vectors[0]))[0])


# ---------------------------------------------------------------------------
# rendering


def format_pbw_vector(L: LieAlgebra, v: PBWVector) -> str:
    if not v:
        return "0"
    parts = []
    for mono in sorted(v):
        coeff = v[mono].format()
        if v[mono].degree > 0 or any(c < 0 for c in v[mono].coeffs):
            coeff = f"({coeff})"
        word = " ".join(f"{basis_label(L.basis[b])}({m})" for m, b in mono)
        parts.append(f"{coeff} {word}".strip() if word else coeff)
    return " + ".join(parts)

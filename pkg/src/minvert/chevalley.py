"""Chevalley basis with exact structure constants and the normalized
invariant bilinear form.

Basis indices are tuples:

* ``("h", i)`` -- the simple coroot alpha_i^vee, 1-based i;
* ``("e", alpha)`` -- positive root vector, alpha in simple-root coords;
* ``("f", alpha)`` -- negative root vector for the positive root alpha.

The structure constants N_{alpha,beta} are fixed by the extraspecial-pair
convention: for each non-simple positive root gamma, the decomposition
gamma = alpha + beta with alpha minimal in the (height, lex) root order
gets N_{alpha,beta} = p + 1 > 0, and every other constant follows from the
standard Chevalley-basis identities.  The invariant form is normalized so
that (theta|theta) = 2, equivalently (e_theta|f_theta) = 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rootsys import RootSystem, SimpleType, build_root_system, height

BasisIndex = tuple
AlgElement = dict  # BasisIndex -> Fraction, no explicit zeros


class LieAlgebra:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        l = rs.rank
        self.basis = tuple(
            [("h", i) for i in range(1, l + 1)]
            + [("e", a) for a in rs.positive_roots]
            + [("f", a) for a in rs.positive_roots]
        )
        self.dim = len(self.basis)
        self.index = {b: i for i, b in enumerate(self.basis)}
        self._zero = (0,) * l
        self._pos_order = {a: i for i, a in enumerate(rs.positive_roots)}
        self._signed_roots = frozenset(
            rs.positive_roots + tuple(self._neg(a) for a in rs.positive_roots))
        self._norm_cache = {}
        self._n_pos = _positive_constants(rs, self._pos_order, self._signed_roots)
        self._n_any_cache = dict(self._n_pos)
        self.bracket_table = self._build_bracket_table()
        self.form_table = self._build_form_table()

    # -- roots --------------------------------------------------------------

    @staticmethod
    def _neg(a):
        return tuple(-c for c in a)

    def weight_of(self, b: BasisIndex):
        """Cartan weight of a basis vector, in simple-root coordinates."""
        kind, x = b
        if kind == "h":
            return self._zero
        return x if kind == "e" else self._neg(x)

    def root_vector(self, gamma) -> BasisIndex:
        """Basis index of the root vector for a signed root gamma."""
        if gamma in self._pos_order:
            return ("e", gamma)
        return ("f", self._neg(gamma))

    def _norm(self, a) -> Fraction:
        v = self._norm_cache.get(a)
        if v is None:
            v = self.rs.inner(a, a)
            self._norm_cache[a] = v
        return v

    def structure_constant(self, a, b) -> Fraction:
        """N_{a,b} for signed roots a, b with a+b a root; 0 otherwise."""
        return _n_any(self, a, b)

    def coroot(self, alpha) -> AlgElement:
        """h_alpha = alpha^vee expressed in the simple coroots, as AlgElement."""
        cv = self.rs.coroot_coords(alpha)
        return {("h", j + 1): c for j, c in enumerate(cv) if c}

    # -- tables -------------------------------------------------------------

    def _build_bracket_table(self):
        rs = self.rs
        table = {}

        def put(a, b, elem):
            elem = {k: v for k, v in elem.items() if v}
            if elem:
                table[(a, b)] = elem

        signed = sorted(self._signed_roots, key=lambda a: (height(a), a))
        for i in range(1, rs.rank + 1):
            for gamma in signed:
                pairing = Fraction(rs.simple_pairing(gamma, i))
                if pairing:
                    xg = self.root_vector(gamma)
                    put(("h", i), xg, {xg: pairing})
        for ai, a in enumerate(signed):
            for b in signed[ai + 1:]:
                xa, xb = self.root_vector(a), self.root_vector(b)
                s = tuple(x + y for x, y in zip(a, b))
                if all(c == 0 for c in s):
                    # [e_alpha, f_alpha] = h_alpha; here a = -b
                    pos = a if a in self._pos_order else b
                    sign = 1 if a in self._pos_order else -1
                    put(xa, xb, {k: sign * v for k, v in self.coroot(pos).items()})
                elif s in self._signed_roots:
                    n = _n_any(self, a, b)
                    put(xa, xb, {self.root_vector(s): n})
        return table

    def _build_form_table(self):
        rs = self.rs
        form = {}
        for i in range(1, rs.rank + 1):
            for j in range(i, rs.rank + 1):
                # (alpha_i^vee | alpha_j^vee)
                v = Fraction(rs.cartan[i - 1][j - 1]) / rs.simple_norms[j - 1]
                if v:
                    form[(("h", i), ("h", j))] = v
        for a in rs.positive_roots:
            form[(("e", a), ("f", a))] = 2 / self._norm(a)
        return form

    def form_entry(self, x: BasisIndex, y: BasisIndex) -> Fraction:
        v = self.form_table.get((x, y))
        if v is None:
            v = self.form_table.get((y, x), Fraction(0))
        return v

    def bracket_basis(self, x: BasisIndex, y: BasisIndex) -> AlgElement:
        v = self.bracket_table.get((x, y))
        if v is not None:
            return v
        v = self.bracket_table.get((y, x))
        if v is not None:
            return {k: -c for k, c in v.items()}
        return {}


# ---------------------------------------------------------------------------
# structure constants


def _positive_constants(rs, pos_order, signed):
    """N_{alpha,beta} for ordered pairs of positive roots (Carter's recursion)."""
    table = {}
    holder = _ConstHolder(rs, signed, table)
    for gamma in rs.positive_roots:
        if height(gamma) < 2:
            continue
        specials = []
        for alpha in rs.positive_roots:
            beta = tuple(g - a for g, a in zip(gamma, alpha))
            if beta in pos_order and pos_order[alpha] < pos_order[beta]:
                specials.append((alpha, beta))
        specials.sort(key=lambda p: pos_order[p[0]])
        a1, b1 = specials[0]
        p = _string_down(rs, b1, a1, signed)
        table[(a1, b1)] = Fraction(p + 1)
        table[(b1, a1)] = Fraction(-(p + 1))
        gnorm = holder.norm(gamma)
        for alpha, beta in specials[1:]:
            t2 = Fraction(0)
            d = tuple(x - y for x, y in zip(b1, alpha))
            if d in signed:
                t2 = (holder.n(b1, holder.neg(alpha)) * holder.n(a1, holder.neg(beta))
                      / holder.norm(d))
            t3 = Fraction(0)
            d = tuple(x - y for x, y in zip(a1, alpha))
            if d in signed:
                t3 = (holder.n(holder.neg(alpha), a1) * holder.n(b1, holder.neg(beta))
                      / holder.norm(d))
            val = gnorm * (t2 + t3) / table[(a1, b1)]
            table[(alpha, beta)] = val
            table[(beta, alpha)] = -val
    return table


def _string_down(rs, beta, alpha, signed):
    p = 0
    probe = tuple(b - a for b, a in zip(beta, alpha))
    while probe in signed:
        p += 1
        probe = tuple(b - a for b, a in zip(probe, alpha))
    return p


class _ConstHolder:
    """Resolves N_{a,b} for signed roots from the positive-pair table using
    N_{-a,-b} = -N_{a,b} and the cyclic identity for a+b+c = 0."""

    def __init__(self, rs, signed, pos_table):
        self.rs = rs
        self.signed = signed
        self.table = pos_table
        self.cache = {}
        self._norms = {}

    @staticmethod
    def neg(a):
        return tuple(-c for c in a)

    def norm(self, a):
        v = self._norms.get(a)
        if v is None:
            v = self.rs.inner(a, a)
            self._norms[a] = v
        return v

    def is_pos(self, a):
        return any(c > 0 for c in a)

    def n(self, a, b):
        key = (a, b)
        if key in self.cache:
            return self.cache[key]
        s = tuple(x + y for x, y in zip(a, b))
        if s not in self.signed:
            val = Fraction(0)
        else:
            apos, bpos = self.is_pos(a), self.is_pos(b)
            if apos and bpos:
                val = self.table[(a, b)]
            elif not apos and not bpos:
                val = -self.n(self.neg(a), self.neg(b))
            elif not apos:
                val = -self.n(b, a)
            else:
                # a positive, b = -b' negative, c = a - b'
                bp = self.neg(b)
                if self.is_pos(s):
                    # a = b' + s: N_{a,-b'} = -(s|s) N_{b',s} / (a|a)
                    val = -self.norm(s) * self.n(bp, s) / self.norm(a)
                else:
                    # b' = a + s', s' = -s: N_{a,-b'} = (s'|s') N_{s',a} / (b'|b')
                    sp = self.neg(s)
                    val = self.norm(sp) * self.n(sp, a) / self.norm(bp)
        self.cache[key] = val
        return val


def _n_any(L: LieAlgebra, a, b) -> Fraction:
    key = (a, b)
    cache = L._n_any_cache
    if key in cache:
        return cache[key]
    holder = _ConstHolder(L.rs, L._signed_roots, L._n_pos)
    holder.cache = cache
    return holder.n(a, b)


# ---------------------------------------------------------------------------
# public operations


@lru_cache(maxsize=None)
def _build_cached(series: str, rank: int) -> LieAlgebra:
    return LieAlgebra(build_root_system(SimpleType(series, rank)))


def build_lie_algebra(rs: RootSystem) -> LieAlgebra:
    return _build_cached(rs.type.series, rs.type.rank)


def bracket(L: LieAlgebra, x: AlgElement, y: AlgElement) -> AlgElement:
    out = {}
    for bx, cx in x.items():
        if not cx:
            continue
        for by, cy in y.items():
            if not cy:
                continue
            for bz, cz in L.bracket_basis(bx, by).items():
                v = out.get(bz, Fraction(0)) + cx * cy * cz
                if v:
                    out[bz] = v
                elif bz in out:
                    del out[bz]
    return out


def normalized_form(L: LieAlgebra, x: AlgElement, y: AlgElement) -> Fraction:
    total = Fraction(0)
    for bx, cx in x.items():
        for by, cy in y.items():
            v = L.form_entry(bx, by)
            if v:
                total += cx * cy * v
    return total


def ad_trace_on_subspace(L: LieAlgebra, x: AlgElement, y: AlgElement, S) -> Fraction:
    """Exact trace of (ad x . ad y) restricted to span(S), S a list of BasisIndex."""
    sset = set(S)
    total = Fraction(0)
    for s in S:
        unit = {s: Fraction(1)}
        ys = bracket(L, y, unit)
        if any(b not in sset for b in ys):
            raise ValueError(f"subspace not stable under ad y at {s}")
        xys = bracket(L, x, ys)
        if any(b not in sset for b in xys):
            raise ValueError(f"subspace not stable under ad x at {s}")
        total += xys.get(s, Fraction(0))
    return total


def centralizer_dim(L: LieAlgebra, x: AlgElement) -> int:
    """dim ker(ad x), by exact sparse rank computation."""
    cols = []
    for b in L.basis:
        col = bracket(L, x, {b: Fraction(1)})
        if col:
            cols.append({L.index[z]: c for z, c in col.items()})
    from .exact import rank_sparse

    return L.dim - rank_sparse(cols)


def basis_label(b: BasisIndex) -> str:
    kind, x = b
    if kind == "h":
        return f"h{x}"
    sep = "" if all(c < 10 for c in x) else ","
    return f"{kind}[{sep.join(str(c) for c in x)}]"


def dump_bracket_table(L: LieAlgebra) -> str:
    """Deterministic one-line-per-constant rendering of the bracket table."""
    lines = []
    for a in L.basis:
        for b in L.basis:
            if L.index[a] >= L.index[b]:
                continue
            for z, c in sorted(L.bracket_basis(a, b).items(), key=lambda kv: L.index[kv[0]]):
                lines.append(f"{basis_label(a)} {basis_label(b)} -> {c} {basis_label(z)}")
    return "\n".join(lines) + "\n"

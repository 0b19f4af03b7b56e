"""Exact arithmetic helpers: polynomials in the level variable k and
rational linear algebra.

Everything here works over `fractions.Fraction`; no floating point is used
anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Poly:
    """Polynomial in the formal variable k with exact rational coefficients.

    Coefficients are stored dense, lowest degree first, with no trailing
    zeros.  Immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((_frac(c),))

    @classmethod
    def k(cls) -> "Poly":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return Poly(a)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    @staticmethod
    def _coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    def __call__(self, k) -> Fraction:
        k = _frac(k)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return Poly(tuple(c / lead for c in self.coeffs))

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return Poly(quo), Poly(rem)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def rational_roots(self):
        """All rational roots, ascending, without multiplicity."""
        if self.is_zero():
            raise ValueError("the zero polynomial has every root")
        cs = list(self.coeffs)
        # strip k^m factor: 0 is then a root
        roots = set()
        while cs and cs[0] == 0:
            roots.add(Fraction(0))
            cs.pop(0)
        if len(cs) > 1:
            den = 1
            for c in cs:
                den = den * c.denominator // _igcd(den, c.denominator)
            ics = [int(c * den) for c in cs]
            a0, an = abs(ics[0]), abs(ics[-1])
            for p in _divisors(a0):
                for q in _divisors(an):
                    for cand in (Fraction(p, q), Fraction(-p, q)):
                        if self(cand) == 0:
                            roots.add(cand)
        return sorted(roots)

    def format(self, var: str = "k") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(c) if c > 0 else f"- {-c}"
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                pw = var if i == 1 else f"{var}^{i}"
                term = f"{mag}{pw}" if c > 0 else f"- {mag}{pw}"
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            else:
                parts.append(term)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly[{self.format()}]"


def _divisors(n: int):
    n = abs(n)
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


POLY_ZERO = Poly()
POLY_ONE = Poly.const(1)
POLY_K = Poly.k()


# ---------------------------------------------------------------------------
# rational linear algebra


def rref(rows, ncols):
    """In-place-free reduced row echelon form over Fraction.

    Returns (echelon_rows, pivot_columns).
    """
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows, ncols):
    """Basis of the right nullspace of the matrix given by `rows`."""
    ech, pivots = rref(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in zip(ech, pivots):
            vec[pc] = -r[fc]
        basis.append(vec)
    return basis


def rank_sparse(cols):
    """Rank of a sparse matrix given as a list of column dicts {row: Fraction}."""
    echelon = {}  # leading row index -> column dict, normalized
    rank = 0
    for col in cols:
        col = dict(col)
        while col:
            lead = min(col)
            if lead in echelon:
                f = col[lead]
                for r, v in echelon[lead].items():
                    col[r] = col.get(r, Fraction(0)) - f * v
                    if col[r] == 0:
                        del col[r]
            else:
                pv = col[lead]
                echelon[lead] = {r: v / pv for r, v in col.items()}
                rank += 1
                break
    return rank


# ---------------------------------------------------------------------------
# linear algebra over Q[k]


def poly_row_reduce(rows, ncols):
    """Fraction-free row echelon form of a matrix with Poly entries.

    Returns (echelon_rows, pivot_columns, witness_polys).  The witness list
    contains every pivot polynomial and every polynomial content divided out
    of a row during the reduction.  At any rational k0 where no witness
    vanishes, every elementary operation performed here specializes to an
    invertible operation over Q, so the matrix at k0 has the generic rank;
    hence every k where the rank drops is a root of some witness.
    """
    mat = [list(r) for r in rows]
    pivots = []
    witnesses = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                if best is None or mat[i][c].degree < mat[best][c].degree:
                    best = i
        if best is None:
            continue
        mat[r], mat[best] = mat[best], mat[r]
        piv = mat[r][c]
        witnesses.append(piv)
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [piv * a - f * b for a, b in zip(mat[i], mat[r])]
                mat[i] = _strip_row_content(mat[i], witnesses)
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots, witnesses


def _strip_row_content(row, witnesses):
    g = POLY_ZERO
    for e in row:
        if not e.is_zero():
            g = e if g.is_zero() else g.gcd(e)
        if g == POLY_ONE:
            return row
    if g.is_zero() or g.degree == 0:
        return row
    witnesses.append(g)
    return [e.divmod(g)[0] for e in row]


# ---------------------------------------------------------------------------
# the rational function field Q(k)


class RatFunc:
    """Rational function in k: num/den with den monic and gcd(num,den)=1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE):
        num = Poly._coerce(num)
        den = Poly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = POLY_ONE
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.coeffs[-1]
            if lead != 1:
                num = Poly(tuple(c / lead for c in num.coeffs))
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        return RatFunc(Poly._coerce(x))

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __repr__(self):
        if self.den == POLY_ONE:
            return f"RatFunc[{self.num.format()}]"
        return f"RatFunc[({self.num.format()})/({self.den.format()})]"


def nullspace_ratfunc(rows, ncols):
    """Right nullspace basis of a matrix of Poly/RatFunc entries over Q(k).

    Returned vectors have Poly entries (denominators cleared, content
    stripped)."""
    mat = [[RatFunc._coerce(e) for e in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    ech = mat[:r]
    pivset = set(pivots)
    basis = []
    for fc in (c for c in range(ncols) if c not in pivset):
        vec = [RatFunc(POLY_ZERO)] * ncols
        vec[fc] = RatFunc(POLY_ONE)
        for row, pc in zip(ech, pivots):
            vec[pc] = -row[fc]
        den = POLY_ONE
        for e in vec:
            if e and e.den.degree > 0:
                den = den.divmod(den.gcd(e.den))[0] * e.den
        polys = [(e * RatFunc(den)).num for e in vec]
        g = POLY_ZERO
        for p in polys:
            if not p.is_zero():
                g = p if g.is_zero() else g.gcd(p)
        if g.degree > 0:
            polys = [p.divmod(g)[0] if not p.is_zero() else p for p in polys]
        basis.append(polys)
    return basis

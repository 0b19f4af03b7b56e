"""Reference tables: Joseph-ideal weight data, theta - theta_1 pair data,
and the induced levels k_i^natural for all types, rendered as deterministic
text or JSON.

Table ids:
  1 -- the distinguished level -h/6-1, the weight lambda_0, and the Weyl
       subset W_0 for the non-A Deligne types;
  2 -- pair data (theta, theta_1, the pairs beta_j + delta_j = theta -
       theta_1) for D4, E6, E7, E8;
  3 -- g^natural summands and levels k_i^natural, classical families
       (entries symbolic in the rank, fitted and cross-checked from the
       trace-formula computation);
  4 -- the same for the exceptional types.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .chevalley import build_lie_algebra
from .minimal_data import deligne_level, g_natural, k_natural
from .rootsys import SimpleType, build_root_system, shifted_weyl_action
from .symmod import theta_pairs

# lambda_0 in fundamental-weight coords and W_0 as reduced words (applied
# rightmost first), per Deligne type
TABLE1_DATA = {
    "G2": ((Fraction(1), Fraction(1, 3)), ((), (2,))),
    "D4": ((1, 0, 1, 1), ((), (1,), (3,), (4,))),
    "F4": ((Fraction(1, 2), Fraction(1, 2), 1, 1), ((), (1,), (2,))),
    "E6": ((1, 1, 1, 0, 1, 1),
           ((), (2,), (3,), (1, 3), (5,), (6, 5))),
    "E7": ((1, 1, 1, 0, 1, 1, 1),
           ((), (2,), (3,), (1, 3), (5,), (6, 5), (7, 6, 5))),
    "E8": ((1, 1, 1, 0, 1, 1, 1, 1),
           ((), (2,), (3,), (1, 3), (5,), (6, 5), (7, 6, 5), (8, 7, 6, 5))),
}

_TABLE1_ORDER = ("G2", "D4", "F4", "E6", "E7", "E8")
_TABLE2_ORDER = ("D4", "E6", "E7", "E8")
_TABLE4_ORDER = ("G2", "F4", "E6", "E7", "E8")


@dataclass
class JosephWeightList:
    type: SimpleType
    weights: list


def _parse_type(name: str) -> SimpleType:
    return SimpleType(name[0], int(name[1:]))


def joseph_weights(t: SimpleType) -> JosephWeightList:
    """The weights w o (lambda_0 - rho), w in W_0."""
    name = str(t)
    if name not in TABLE1_DATA:
        raise ValueError(f"no weight data for type {name}")
    rs = build_root_system(t)
    lam0, words = TABLE1_DATA[name]
    base = tuple(Fraction(m) - r for m, r in zip(lam0, rs.rho))
    return JosephWeightList(
        type=t,
        weights=[shifted_weyl_action(rs, word, base) for word in words],
    )


def _frac_str(x) -> str:
    return str(Fraction(x))


def _weight_str(lam) -> str:
    parts = []
    for i, c in enumerate(lam, start=1):
        c = Fraction(c)
        if c == 0:
            continue
        mag = "" if c == 1 else f"{c}*"
        parts.append(f"{mag}w{i}")
    return " + ".join(parts) if parts else "0"


def _root_str(root) -> str:
    sep = "" if all(abs(c) < 10 for c in root) else ","
    return "(" + sep.join(str(c) for c in root) + ")"


def _word_str(word) -> str:
    return " ".join(f"s{i}" for i in word) if word else "1"


# ---------------------------------------------------------------------------
# symbolic level entries for the classical families


class AffineInRank:
    """Value c0 + c1*r where r is the family parameter (rank l or n)."""

    def __init__(self, c0, c1, param):
        self.c0 = Fraction(c0)
        self.c1 = Fraction(c1)
        self.param = param

    def __str__(self):
        parts = []
        if self.c1:
            parts.append(self.param if self.c1 == 1 else f"{self.c1}*{self.param}")
        if self.c0 or not parts:
            s = str(self.c0)
            parts.append(s if not parts else f"+ {s}")
        return " ".join(parts).replace("+ -", "- ")


def _fit_affine(samples, param):
    """Fit c0 + c1*r through (r, value) samples; all must agree exactly."""
    (r1, v1), (r2, v2) = samples[0], samples[-1]
    c1 = Fraction(v2 - v1, r2 - r1) if r2 != r1 else Fraction(0)
    c0 = Fraction(v1) - c1 * r1
    for r, v in samples:
        if c0 + c1 * r != v:
            raise RuntimeError(f"level not affine in {param}: {samples}")
    return AffineInRank(c0, c1, param)


def _level_entry_str(k_coeff: Fraction, const) -> str:
    lead = "k" if k_coeff == 1 else f"{k_coeff}*k"
    cs = str(const)
    if cs == "0":
        return lead
    if cs.startswith("-"):
        return f"{lead} - {cs[1:]}"
    return f"{lead} + {cs}"


def _family_levels(series, ranks, param, param_of_rank, indices):
    """Symbolic k_i^natural entries for a classical family, fitted in the
    family parameter from exact computations at the given ranks."""
    per_index = {}
    for i in indices:
        samples = []
        k_coeffs = set()
        for l in ranks:
            L = build_lie_algebra(build_root_system(SimpleType(series, l)))
            p = k_natural(L, i)
            k_coeffs.add(p.coeffs[1] if p.degree >= 1 else Fraction(0))
            samples.append((param_of_rank(l), p.coeffs[0] if p.coeffs else Fraction(0)))
        if len(k_coeffs) != 1:
            raise RuntimeError(f"k-coefficient varies across the {series} family")
        per_index[i] = (k_coeffs.pop(), _fit_affine(samples, param))
    return per_index


def _table3_rows():
    rows = []

    def entry(kc, const):
        return _level_entry_str(kc, const)

    # sl3: one-dimensional center only
    L = build_lie_algebra(build_root_system(SimpleType("A", 2)))
    p = k_natural(L, 0)
    rows.append({
        "family": "sl3", "g_natural": "g0 = C",
        "levels": [{"i": 0, "summand": "C", "k": entry(p.coeffs[1], p.coeffs[0])}],
    })
    fam = _family_levels("A", (3, 4, 5, 6), "l", lambda l: l, (0, 1))
    rows.append({
        "family": "sl_{l+1}, l>=3", "g_natural": "g0 + g1; g0 = C, g1 = sl_{l-1}",
        "levels": [{"i": 0, "summand": "C", "k": entry(*fam[0])},
                   {"i": 1, "summand": "sl_{l-1}", "k": entry(*fam[1])}],
    })
    fam = _family_levels("C", (2, 3, 4, 5), "l", lambda l: l, (1,))
    rows.append({
        "family": "sp_{2l}, l>=2", "g_natural": "g1 = sp_{2l-2}",
        "levels": [{"i": 1, "summand": "sp_{2l-2}", "k": entry(*fam[1])}],
    })
    L = build_lie_algebra(build_root_system(SimpleType("B", 3)))
    p1, p2 = k_natural(L, 1), k_natural(L, 2)
    rows.append({
        "family": "so7", "g_natural": "g1 + g2; g1 = g2 = sl2",
        "levels": [{"i": 1, "summand": "sl2", "k": entry(p1.coeffs[1], p1.coeffs[0])},
                   {"i": 2, "summand": "sl2", "k": entry(p2.coeffs[1], p2.coeffs[0])}],
    })
    L = build_lie_algebra(build_root_system(SimpleType("D", 4)))
    levels = []
    for i in (1, 2, 3):
        p = k_natural(L, i)
        levels.append({"i": i, "summand": "sl2", "k": entry(p.coeffs[1], p.coeffs[0])})
    rows.append({"family": "so8", "g_natural": "g1 + g2 + g3; gi = sl2",
                 "levels": levels})
    # so_n, n >= 9: interleave B and D ranks so the fit is in n
    samples = {1: [], 2: []}
    k_coeffs = {1: set(), 2: set()}
    for series, l in (("B", 4), ("D", 5), ("B", 5), ("D", 6), ("B", 6), ("D", 7)):
        n = 2 * l + 1 if series == "B" else 2 * l
        L = build_lie_algebra(build_root_system(SimpleType(series, l)))
        for i in (1, 2):
            p = k_natural(L, i)
            k_coeffs[i].add(p.coeffs[1])
            samples[i].append((n, p.coeffs[0]))
    for i in (1, 2):
        if len(k_coeffs[i]) != 1:
            raise RuntimeError("k-coefficient varies across the so_n family")
    rows.append({
        "family": "so_n, n>=9", "g_natural": "g1 + g2; g1 = sl2, g2 = so_{n-4}",
        "levels": [
            {"i": 1, "summand": "sl2",
             "k": _level_entry_str(k_coeffs[1].pop(), _fit_affine(samples[1], "n"))},
            {"i": 2, "summand": "so_{n-4}",
             "k": _level_entry_str(k_coeffs[2].pop(), _fit_affine(samples[2], "n"))},
        ],
    })
    return rows


_NATURAL_NAMES = {"G2": "sl2", "F4": "sp6", "E6": "sl6", "E7": "so12", "E8": "E7"}


def _table4_rows():
    rows = []
    for name in _TABLE4_ORDER:
        L = build_lie_algebra(build_root_system(_parse_type(name)))
        p = k_natural(L, 1)
        rows.append({
            "type": name,
            "g_natural": _NATURAL_NAMES[name],
            "k1": _level_entry_str(p.coeffs[1], p.coeffs[0]),
        })
    return rows


# ---------------------------------------------------------------------------
# emitters


def emit_table(table_id: int, fmt: str = "text") -> str:
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if table_id == 1:
        rows = []
        for name in _TABLE1_ORDER:
            t = _parse_type(name)
            lam0, words = TABLE1_DATA[name]
            rows.append({
                "type": name,
                "level": _frac_str(deligne_level(build_root_system(t))),
                "lambda0": _weight_str(lam0),
                "W0": [_word_str(w) for w in words],
            })
        if fmt == "json":
            return _json({"table": 1, "rows": rows})
        lines = ["table 1: level -h/6-1, lambda_0, W_0"]
        for r in rows:
            lines.append(f"{r['type']}: level {r['level']}; lambda0 = "
                         f"{r['lambda0']}; W0 = {{{', '.join(r['W0'])}}}")
        return "\n".join(lines) + "\n"
    if table_id == 2:
        rows = []
        for name in _TABLE2_ORDER:
            L = build_lie_algebra(build_root_system(_parse_type(name)))
            pl = theta_pairs(L, 1)
            theta_1 = next(s.theta_i for s in g_natural(L) if s.index == 1)
            rows.append({
                "type": name,
                "count": L.rs.h_dual // 6 + 1,
                "theta": _root_str(L.rs.theta),
                "theta1": _root_str(theta_1),
                "pairs": [[_root_str(b), _root_str(d)] for b, d in pl.pairs],
            })
        if fmt == "json":
            return _json({"table": 2, "rows": rows})
        lines = ["table 2: pairs beta_j + delta_j = theta - theta_1"]
        for r in rows:
            lines.append(f"{r['type']}: h/6+1 = {r['count']}; theta = {r['theta']}; "
                         f"theta1 = {r['theta1']}")
            for b, d in r["pairs"]:
                lines.append(f"  {b}, {d}")
        return "\n".join(lines) + "\n"
    if table_id == 3:
        rows = _table3_rows()
        if fmt == "json":
            return _json({"table": 3, "rows": rows})
        lines = ["table 3: g^natural and k_i^natural, classical types"]
        for r in rows:
            lines.append(f"{r['family']}: {r['g_natural']}")
            for lv in r["levels"]:
                lines.append(f"  k_{lv['i']} = {lv['k']}  ({lv['summand']})")
        return "\n".join(lines) + "\n"
    if table_id == 4:
        rows = _table4_rows()
        if fmt == "json":
            return _json({"table": 4, "rows": rows})
        lines = ["table 4: g^natural and k_1^natural, exceptional types"]
        for r in rows:
            lines.append(f"{r['type']}: g^natural = {r['g_natural']}; k_1 = {r['k1']}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table id {table_id}")


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"

"""Brute-force quotient dimensions by exact rank, independent of the rewriter.

The ideal generated by ``S`` is spanned by the S-diwords
``x_{-m} ⊢ ... ⊢ x_0 ⊣ ... ⊣ x_n`` with one letter replaced by a relation.
Rows are built here by multiplying out such product chains with
:func:`dialgebra.core.chain`; nothing from :mod:`dialgebra.rewrite` is used
to form them.  Columns are all normal diwords of length at most ``d``.

Elimination keeps every row's greatest column as its pivot, so the pivots of
a given length count the dimension of ``Id(S)`` truncated at that length;
the quotient dimension in length ``k`` is the number of diwords of length
``k`` minus the number of pivots of length ``k``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import gcd, lcm

from .core import DiPoly, Diword, chain, letter

COLUMN_LIMIT = 10 ** 6


def enumerate_diwords(q: int, d: int) -> list[Diword]:
    """All normal diwords over ``q`` letters of length at most ``d``, ascending."""
    out = []
    for L in range(1, d + 1):
        for c in range(L):
            for w in iproduct(range(q), repeat=L):
                out.append(Diword(w, c))
    return out


def column_count(q: int, d: int) -> int:
    return sum(L * q ** L for L in range(1, d + 1))


def _relation_rows(args):
    s, q, d, field, normal_only = args
    L = s.degree
    norm = s.normedness()
    letters = [letter(x, field) for x in range(q)]
    rows = []
    for extra in range(d - L + 1):
        for la in range(extra + 1):
            lb = extra - la
            for ctx in iproduct(range(q), repeat=extra):
                factors = [letters[x] for x in ctx[:la]] + [s] + [letters[x] for x in ctx[la:]]
                for c in range(len(factors)):
                    if normal_only:
                        if c < la and norm not in ("right", "both"):
                            continue
                        if c > la and norm not in ("left", "both"):
                            continue
                    row = chain(factors, c)
                    if row:
                        rows.append(row)
    return rows


@dataclass
class DegreeSlice:
    """Columns and generated rows for one degree bound."""

    q: int
    d: int
    columns: list
    rows: list


def build_slice(S, d: int, jobs: int = 1, normal_only: bool = False) -> DegreeSlice:
    q = len(S.alphabet)
    cols = enumerate_diwords(q, d)
    tasks = [(s, q, d, S.field, normal_only) for s in S.relations if s.degree <= d]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_relation_rows, tasks))
    else:
        parts = [_relation_rows(t) for t in tasks]
    rows = [r for part in parts for r in part]
    return DegreeSlice(q, d, cols, rows)


# -- exact elimination ---------------------------------------------------

def _integer_row(row: dict) -> dict:
    den = lcm(*(c.denominator for c in row.values()))
    ints = {k: int(c * den) for k, c in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {k: v // g for k, v in ints.items()}


def _pivots_rational(rows: list[dict]) -> dict:
    """Head-reduce fraction-free over the integers; return ``{pivot column: row}``."""
    piv: dict[int, dict] = {}
    for row in rows:
        row = _integer_row(row)
        while row:
            c = max(row)
            p = piv.get(c)
            if p is None:
                piv[c] = row
                break
            a, b = p[c], row[c]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {k: v * ma for k, v in row.items()}
            for k, v in p.items():
                t = new.get(k, 0) - v * mb
                if t:
                    new[k] = t
                else:
                    new.pop(k, None)
            if new:
                cg = 0
                for v in new.values():
                    cg = gcd(cg, v)
                    if cg == 1:
                        break
                if cg > 1:
                    new = {k: v // cg for k, v in new.items()}
            row = new
    return piv


def _pivots_modular(rows: list[dict], p: int) -> dict:
    piv: dict[int, dict] = {}
    for row in rows:
        row = {k: int(v) % p for k, v in row.items()}
        row = {k: v for k, v in row.items() if v}
        while row:
            c = max(row)
            pr = piv.get(c)
            if pr is None:
                inv = pow(row[c], -1, p)
                piv[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            new = dict(row)
            for k, v in pr.items():
                t = (new.get(k, 0) - f * v) % p
                if t:
                    new[k] = t
                else:
                    new.pop(k, None)
            row = new
    return piv


def pivot_columns(S, d: int, jobs: int = 1, normal_only: bool = False):
    """Return ``(columns, pivot column indices)`` of the truncated ideal."""
    sl = build_slice(S, d, jobs, normal_only)
    index = {u: i for i, u in enumerate(sl.columns)}
    seen = set()
    rows = []
    for r in sl.rows:
        key = tuple(r.items())
        if key in seen:
            continue
        seen.add(key)
        rows.append({index[u]: c for u, c in r.items()})
    rows.sort(key=lambda r: (max(r), len(r)))
    if S.field.characteristic == 0:
        piv = _pivots_rational(rows)
    else:
        piv = _pivots_modular(rows, S.field.characteristic)
    return sl.columns, sorted(piv)


def degree_dims(S, d: int, jobs: int = 1, normal_only: bool = False) -> dict[int, int]:
    """Quotient dimension in each exact length ``1..d``."""
    cols, piv = pivot_columns(S, d, jobs, normal_only)
    dims = {k: 0 for k in range(1, d + 1)}
    for u in cols:
        dims[len(u)] += 1
    for i in piv:
        dims[len(cols[i])] -= 1
    return dims


def quotient_dim(S, d: int, jobs: int = 1) -> int:
    """``dim`` of the span of diwords of length ``<= d`` modulo the truncated ideal."""
    return sum(degree_dims(S, d, jobs).values())


@dataclass
class CrossCheck:
    irr: dict
    oracle: dict

    @property
    def agree(self) -> bool:
        return self.irr == self.oracle

    def disagreements(self) -> list[int]:
        return [k for k in self.oracle if self.irr.get(k) != self.oracle[k]]

    def to_json(self) -> dict:
        return {"agree": self.agree,
                "degrees": [{"degree": k, "irr": self.irr[k], "oracle": self.oracle[k],
                             "agree": self.irr[k] == self.oracle[k]} for k in sorted(self.oracle)]}


def cross_check(S, d: int, jobs: int = 1) -> CrossCheck:
    from .rewrite import irr_enumerate

    irr = {k: 0 for k in range(1, d + 1)}
    for u in irr_enumerate(S, d):
        irr[len(u)] += 1
    return CrossCheck(irr, degree_dims(S, d, jobs))

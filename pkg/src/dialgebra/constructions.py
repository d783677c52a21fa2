"""Presentations of enveloping dialgebras, bar extensions, free products and Clifford dialgebras.

Structure constants live in small dense tables indexed by basis position;
every builder validates its input exactly before emitting relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from . import linalg
from .core import Alphabet, DiPoly, Diword
from .field import QQ
from .rewrite import Presentation

OPS = ("vdash", "dashv")


@dataclass
class ValidationReport:
    valid: bool
    problems: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        return {"valid": self.valid, "problems": list(self.problems), **self.details}


def _dense(n, entries, alphabet, field):
    """``entries`` maps ``(i, j)`` (indices or names) to a vector or ``{name: coeff}``."""
    zero = [field.zero()] * n
    tab = [[list(zero) for _ in range(n)] for _ in range(n)]
    for (i, j), val in entries.items():
        i = alphabet.index(i) if isinstance(i, str) else int(i)
        j = alphabet.index(j) if isinstance(j, str) else int(j)
        if isinstance(val, dict):
            vec = list(zero)
            for k, c in val.items():
                k = alphabet.index(k) if isinstance(k, str) else int(k)
                vec[k] = vec[k] + field(c)
        else:
            vec = [field(c) for c in val]
            if len(vec) != n:
                raise ValueError("structure vector has the wrong length")
        tab[i][j] = vec
    return tab


def _bilinear(tab, u, v, field):
    n = len(u)
    out = [field.zero()] * n
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(tab[i][j]):
                if c:
                    out[k] = out[k] + ab * c
    return out


def _linear_poly(vec, field, offset: int = 0) -> DiPoly:
    return DiPoly({Diword((k + offset,), 0): c for k, c in enumerate(vec) if c}, field)


def _mono(word, center, field, coeff=1) -> DiPoly:
    return DiPoly.monomial(Diword(word, center), coeff, field)


# -- Leibniz algebras ------------------------------------------------------

class LeibnizAlgebra:
    """Basis, structure constants of ``{x_i, x_j}`` and the marked indices ``I_0``."""

    def __init__(self, names, bracket, i0=(), field=QQ):
        self.alphabet = names if isinstance(names, Alphabet) else Alphabet(names)
        self.field = field
        self.n = len(self.alphabet)
        self.table = _dense(self.n, dict(bracket), self.alphabet, field)
        idx = {self.alphabet.index(k) if isinstance(k, str) else int(k) for k in i0}
        self.i0 = tuple(sorted(idx))

    @property
    def names(self):
        return list(self.alphabet)

    def basis(self, k):
        return linalg.unit(self.n, k, self.field)

    def bracket(self, u, v):
        return _bilinear(self.table, u, v, self.field)

    def bracket_of(self, i, j):
        return list(self.table[i][j])

    def symmetric_part(self):
        """Spanning set ``{x_i,x_i}`` and ``{x_i,x_j} + {x_j,x_i}`` of ``L_0``."""
        gens = []
        for i in range(self.n):
            gens.append(self.bracket_of(i, i))
            for j in range(i + 1, self.n):
                gens.append(linalg.add(self.bracket_of(i, j), self.bracket_of(j, i)))
        return gens


def check_leibniz(L: LeibnizAlgebra) -> ValidationReport:
    F, n = L.field, L.n
    names = L.names
    problems = []
    e = [L.basis(k) for k in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = L.bracket(L.bracket_of(a, b), e[c])
                rhs = linalg.add(L.bracket(e[a], L.bracket_of(b, c)),
                                 L.bracket(L.bracket_of(a, c), e[b]))
                if lhs != rhs:
                    problems.append(f"Leibniz identity fails on ({names[a]}, {names[b]}, {names[c]})")
                    break
            if problems:
                break
        if problems:
            break
    rows, piv = linalg.rref(L.symmetric_part(), F)
    marked = [L.basis(k) for k in L.i0]
    spans_equal = (len(rows) == len(marked)
                   and all(linalg.in_span(v, rows, piv, F) for v in marked))
    if not spans_equal:
        problems.append("marked generators do not span the square/symmetric subspace")
    mrows, mpiv = linalg.rref(marked, F)
    for i0 in L.i0:
        for j in range(n):
            if any(L.bracket_of(j, i0)):
                problems.append(f"{{{names[j]}, {names[i0]}}} is nonzero")
            if not linalg.in_span(L.bracket_of(i0, j), mrows, mpiv, F):
                problems.append(f"{{{names[i0]}, {names[j]}}} leaves the marked subspace")
    return ValidationReport(not problems, problems,
                            {"l0_basis": [[F.format(c) for c in r] for r in rows]})


def suggest_i0(L: LeibnizAlgebra) -> dict:
    """Echelon basis of ``L_0``; markers are proposed only when it is a coordinate subspace."""
    F = L.field
    rows, piv = linalg.rref(L.symmetric_part(), F)
    coordinate = all(sum(1 for c in r if c) == 1 for r in rows)
    return {
        "dimension": len(rows),
        "basis": [{L.names[k]: F.format(c) for k, c in enumerate(r) if c} for r in rows],
        "i0": [L.names[p] for p in piv] if coordinate else None,
    }


def leibniz_enveloping(L: LeibnizAlgebra, reduced: bool = False) -> Presentation:
    """Relations (a)-(e) of the enveloping dialgebra; ``reduced`` restricts indices."""
    rep = check_leibniz(L)
    if not rep.valid:
        raise ValueError("invalid Leibniz algebra: " + "; ".join(rep.problems))
    F, n = L.field, L.n
    I = range(n)
    free = [i for i in I if i not in L.i0]
    rels = []
    for i in I:
        for j in (free if reduced else I):
            rels.append(_mono((j, i), 1, F) - _mono((i, j), 0, F)
                        + _linear_poly(L.bracket_of(i, j), F))
    pairs = [(i, j) for i in (free if reduced else I) for j in (free if reduced else I) if j > i]
    for i, j in pairs:
        br = _linear_poly(L.bracket_of(i, j), F)
        for t in I:
            xt = _mono((t,), 0, F)
            rels.append(_mono((j, i, t), 2, F) - _mono((i, j, t), 2, F) + br.vdash(xt))
    for i0 in L.i0:
        for t in I:
            rels.append(_mono((i0, t), 1, F))
    for i, j in pairs:
        br = _linear_poly(L.bracket_of(i, j), F)
        for t in I:
            xt = _mono((t,), 0, F)
            rels.append(_mono((t, j, i), 0, F) - _mono((t, i, j), 0, F) + xt.dashv(br))
    for i0 in L.i0:
        for t in I:
            rels.append(_mono((t, i0), 0, F))
    return Presentation(L.alphabet, rels, F)


def pbw_dimension(L: LeibnizAlgebra, d: int) -> int:
    """Number of basis words ``x_j ⊣ x_{i_1} ⊣ ... ⊣ x_{i_{d-1}}`` with nondecreasing free tails."""
    if d < 1:
        raise ValueError("degree must be positive")
    if d == 1:
        return L.n
    r = L.n - len(L.i0)
    return L.n * comb(d - 2 + r, d - 1)


# -- multiplication tables ---------------------------------------------------

class MultiplicationTable:
    """Structure constants of ``⊢`` and ``⊣`` on a finite basis."""

    def __init__(self, names, vdash=None, dashv=None, field=QQ):
        self.alphabet = names if isinstance(names, Alphabet) else Alphabet(names)
        self.field = field
        self.n = len(self.alphabet)
        self.tables = {
            "vdash": _dense(self.n, dict(vdash or {}), self.alphabet, field),
            "dashv": _dense(self.n, dict(dashv or {}), self.alphabet, field),
        }

    @property
    def names(self):
        return list(self.alphabet)

    def basis(self, k):
        return linalg.unit(self.n, k, self.field)

    def mul(self, op, u, v):
        return _bilinear(self.tables[op], u, v, self.field)

    def entry(self, op, i, j):
        return list(self.tables[op][i][j])


_AXIOMS = (
    ("vdash associativity", lambda m, a, b, c: (m("vdash", m("vdash", a, b), c),
                                               m("vdash", a, m("vdash", b, c)))),
    ("dashv associativity", lambda m, a, b, c: (m("dashv", m("dashv", a, b), c),
                                               m("dashv", a, m("dashv", b, c)))),
    ("a-|(b|-c) = a-|b-|c", lambda m, a, b, c: (m("dashv", a, m("vdash", b, c)),
                                              m("dashv", m("dashv", a, b), c))),
    ("(a-|b)|-c = a|-b|-c", lambda m, a, b, c: (m("vdash", m("dashv", a, b), c),
                                              m("vdash", m("vdash", a, b), c))),
    ("a|-(b-|c) = (a|-b)-|c", lambda m, a, b, c: (m("vdash", a, m("dashv", b, c)),
                                                m("dashv", m("vdash", a, b), c))),
)


def check_dialgebra_axioms(T: MultiplicationTable) -> ValidationReport:
    e = [T.basis(k) for k in range(T.n)]
    names = T.names
    for label, ident in _AXIOMS:
        for a in range(T.n):
            for b in range(T.n):
                for c in range(T.n):
                    lhs, rhs = ident(T.mul, e[a], e[b], e[c])
                    if lhs != rhs:
                        msg = f"{label} fails on ({names[a]}, {names[b]}, {names[c]})"
                        return ValidationReport(False, [msg])
    return ValidationReport(True)


def ideal_closure(T: MultiplicationTable, generators=None):
    """Echelon basis ``(rows, pivots)`` of the two-sided ideal generated by ``generators``.

    The default generators are ``x_i ⊣ x_j - x_i ⊢ x_j`` over all basis pairs.
    """
    F = T.field
    if generators is None:
        generators = [linalg.sub(T.entry("dashv", i, j), T.entry("vdash", i, j))
                      for i in range(T.n) for j in range(T.n)]
    rows, piv = linalg.rref(generators, F)
    e = [T.basis(k) for k in range(T.n)]
    while True:
        new = []
        for r in rows:
            for x in e:
                for op in OPS:
                    for prod in (T.mul(op, r, x), T.mul(op, x, r)):
                        if not linalg.in_span(prod, rows, piv, F):
                            new.append(prod)
        if not new:
            return rows, piv
        rows, piv = linalg.rref(rows + new, F)


def _combo_name(vec, names, field):
    parts = []
    for k, c in enumerate(vec):
        if not c:
            continue
        neg = field.characteristic == 0 and c < 0
        mag = -c if neg else c
        coef = "" if mag == field.one() else field.format(mag)
        sign = "-" if neg else "+"
        if not parts and not neg:
            sign = ""
        parts.append(f"{sign}{coef}{names[k]}")
    return "(" + "".join(parts) + ")"


@dataclass
class AdaptedTable:
    """Table rewritten in a basis whose first ``ideal_dim`` vectors span the ideal."""

    table: MultiplicationTable
    ideal_dim: int
    change: list  # new basis vectors in old coordinates


def adapt_basis(T: MultiplicationTable) -> AdaptedTable:
    F = T.field
    rows, piv = ideal_closure(T)
    rest = [k for k in range(T.n) if k not in piv]
    new_basis = [list(r) for r in rows] + [T.basis(k) for k in rest]
    names = []
    for v in new_basis:
        nz = [k for k, c in enumerate(v) if c]
        if len(nz) == 1 and v[nz[0]] == F.one():
            names.append(T.names[nz[0]])
        else:
            names.append(_combo_name(v, T.names, F))

    def coords(v):
        a = [v[p] for p in piv]
        resid = list(v)
        for c, r in zip(a, rows):
            if c:
                resid = linalg.sub(resid, linalg.scale(c, r))
        return a + [resid[k] for k in rest]

    entries = {op: {} for op in OPS}
    for i, u in enumerate(new_basis):
        for j, v in enumerate(new_basis):
            for op in OPS:
                entries[op][(i, j)] = coords(T.mul(op, u, v))
    out = MultiplicationTable(names, entries["vdash"], entries["dashv"], F)
    return AdaptedTable(out, len(rows), new_basis)


def _require_valid(T: MultiplicationTable):
    rep = check_dialgebra_axioms(T)
    if not rep.valid:
        raise ValueError("invalid dialgebra table: " + "; ".join(rep.problems))


def _annihilation_check(T: MultiplicationTable, ideal_dim: int):
    for i0 in range(ideal_dim):
        for t in range(T.n):
            if any(T.entry("dashv", t, i0)) or any(T.entry("vdash", i0, t)):
                raise ValueError(
                    f"inconsistent input: {T.names[t]} -| {T.names[i0]} or "
                    f"{T.names[i0]} |- {T.names[t]} is nonzero for an ideal basis vector")


def _table_relations(T: MultiplicationTable, offset: int = 0):
    F = T.field
    rels = []
    for op, center in (("vdash", 1), ("dashv", 0)):
        for i in range(T.n):
            for j in range(T.n):
                rels.append(_mono((i + offset, j + offset), center, F)
                            - _linear_poly(T.entry(op, i, j), F, offset))
    return rels


def _fresh_name(base: str, taken) -> str:
    name, k = base, 1
    while name in taken:
        name = f"{base}{k}"
        k += 1
    return name


def bar_extension(T: MultiplicationTable, unit: str = "e") -> Presentation:
    """Presentation of the extension by a bar unit, greatest in the order."""
    _require_valid(T)
    ad = adapt_basis(T)
    A = ad.table
    _annihilation_check(A, ad.ideal_dim)
    F = T.field
    n = A.n
    e = n
    names = A.names + [_fresh_name(unit, set(A.names))]
    rels = _table_relations(A)
    for y in range(n + 1):
        rels.append(_mono((e, y), 1, F) - _mono((y,), 0, F))
    for y in range(n + 1):
        rels.append(_mono((y, e), 0, F) - _mono((y,), 0, F))
    for i0 in range(ad.ideal_dim):
        rels.append(_mono((i0, e), 1, F))
    for i0 in range(ad.ideal_dim):
        rels.append(_mono((e, i0), 0, F))
    return Presentation(names, rels, F)


@dataclass(frozen=True)
class FreeProductLayout:
    """Positions of the two factors and of their ideal parts in the joint alphabet."""

    left: tuple
    right: tuple
    left_ideal: frozenset
    right_ideal: frozenset

    def is_basis_word(self, u: Diword) -> bool:
        """Alternation of factors, with ideal letters allowed only at the center."""
        side = [0 if x in self.left else 1 for x in u.word]
        ideal = self.left_ideal | self.right_ideal
        for k, x in enumerate(u.word):
            if k != u.center and x in ideal:
                return False
        return all(side[k] != side[k + 1] for k in range(len(side) - 1))


def free_product(T1: MultiplicationTable, T2: MultiplicationTable):
    """Presentation of ``D_1 * D_2`` and its :class:`FreeProductLayout`."""
    if T1.field != T2.field:
        raise ValueError("tables over different fields")
    _require_valid(T1)
    _require_valid(T2)
    a1, a2 = adapt_basis(T1), adapt_basis(T2)
    X, Y = a1.table, a2.table
    clash = set(X.names) & set(Y.names)
    if clash:
        raise ValueError(f"generator names shared by both factors: {sorted(clash)}")
    _annihilation_check(X, a1.ideal_dim)
    _annihilation_check(Y, a2.ideal_dim)
    F = T1.field
    nx = X.n
    xs = range(nx)
    ys = range(nx, nx + Y.n)
    x0 = range(a1.ideal_dim)
    y0 = range(nx, nx + a2.ideal_dim)
    rels = _table_relations(X) + _table_relations(Y, nx)
    rels += [_mono((i0, l), 1, F) for i0 in x0 for l in ys]
    rels += [_mono((l, i0), 0, F) for i0 in x0 for l in ys]
    rels += [_mono((l0, i), 1, F) for i in xs for l0 in y0]
    rels += [_mono((i, l0), 0, F) for i in xs for l0 in y0]
    layout = FreeProductLayout(tuple(xs), tuple(ys), frozenset(x0), frozenset(y0))
    return Presentation(X.names + Y.names, rels, F), layout


# -- Clifford dialgebras -------------------------------------------------------

class SymmetricForm:
    """Symmetric ``n x n`` matrix over a field of characteristic other than 2."""

    def __init__(self, matrix, field=QQ):
        if field.characteristic == 2:
            raise ValueError("Clifford dialgebras need characteristic other than 2")
        m = [[field(c) for c in row] for row in matrix]
        n = len(m)
        if n == 0 or any(len(row) != n for row in m):
            raise ValueError("matrix must be square and nonempty")
        for i in range(n):
            for j in range(n):
                if m[i][j] != m[j][i]:
                    raise ValueError("matrix is not symmetric")
        self.n = n
        self.matrix = m
        self.field = field

    def is_zero(self) -> bool:
        return not any(c for row in self.matrix for c in row)


def clifford(form: SymmetricForm, names=None, unit: str = "e") -> Presentation:
    """Relations 1-8 for a nonzero form, 1-7 for the zero form; order ``x_1 < ... < x_n < e``."""
    F, n, a = form.field, form.n, form.matrix
    if names is None:
        names = [f"x{k + 1}" for k in range(n)]
    names = list(names)
    if len(names) != n:
        raise ValueError("need one name per generator")
    e = n
    names.append(_fresh_name(unit, set(names)))
    two = F(2)
    X = range(n)
    Y = range(n + 1)

    def m(word, center, coeff=1):
        return _mono(word, center, F, coeff)

    def ye(y, c):
        return DiPoly.monomial(Diword((y,), 0), c, F)

    rels = []
    for i in X:
        for j in X:
            rels.append(m((i, j), 1) + m((j, i), 0) - m((e,), 0, two * a[i][j]))
    rels += [m((e, y), 1) - m((y,), 0) for y in Y]
    rels += [m((y, e), 0) - m((y,), 0) for y in Y]
    for y in Y:
        for i in X:
            for j in X:
                if i > j:
                    rels.append(m((y, i, j), 0) + m((y, j, i), 0) - ye(y, two * a[i][j]))
    for y in Y:
        for i in X:
            rels.append(m((y, i, i), 0) - ye(y, a[i][i]))
    for y in Y:
        for i in X:
            for j in X:
                if i > j:
                    rels.append(m((i, j, y), 2) + m((j, i, y), 2) - ye(y, two * a[i][j]))
    for y in Y:
        for i in X:
            rels.append(m((i, i, y), 2) - ye(y, a[i][i]))
    if not form.is_zero():
        rels += [m((i, e), 1) - m((e, i), 0) for i in X]
    return Presentation(names, rels, F)


def clifford_dimension(n: int) -> int:
    return (n + 1) * 2 ** n

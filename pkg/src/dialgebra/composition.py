"""Compositions of dipolynomials, the Gröbner–Shirshov check, and completion.

Four kinds of compositions are formed from monic relations ``f, g``:

* left multiplication ``x ⊣ f`` for ``f`` not right normed,
* right multiplication ``f ⊢ x`` for ``f`` not left normed,
* inclusion ``f - [agb]`` at ``w = lead(f) = a lead(g) b``,
* intersection ``[fb] - [ag]`` at ``w = lead(f) b = a lead(g)`` with a
  proper overlap.

A multiplication composition is trivial when it reduces to zero using only
right (resp. left) normed s-diwords.  An inclusion or intersection is
trivial when it reduces to zero using s-diwords with leading term below
``w``; if both sides are right (left) normed s-diwords the reduction is
further restricted to right (left) normed s-diwords.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .core import DASHV, VDASH, DiPoly, Diword, letter, poly_product
from .rewrite import (ANY, CENTER, LEFT, LEFT_ONLY, RIGHT, RIGHT_ONLY, Presentation,
                      normal_form, substitute)

INCLUSION, INTERSECTION = "inclusion", "intersection"
TRIVIAL, NONZERO, STUCK = "trivial", "nonzero_remainder", "stuck_above_floor"


@dataclass(frozen=True)
class Ambiguity:
    """Overlap diword ``w`` of ``lead(s_i)`` (at ``offset_i``) and ``lead(s_j)`` (at ``offset_j``).

    ``kind_i``/``kind_j`` are the placement kinds of the two occurrences
    inside ``w``.
    """

    kind: str
    i: int
    j: int
    w: Diword
    offset_i: int
    offset_j: int
    kind_i: str
    kind_j: str

    def describe(self, S: Presentation) -> str:
        return f"{self.kind} ({self.i},{self.j}) at [{S.alphabet.format_diword(self.w)}]"


@dataclass(frozen=True)
class MultComposition:
    """``x ⊣ s_rule`` (side ``"left"``) or ``s_rule ⊢ x`` (side ``"right"``)."""

    side: str
    rule: int
    x: int

    def describe(self, S: Presentation) -> str:
        name = S.alphabet[self.x]
        if self.side == "left":
            return f"left multiplication {name} -| s{self.rule}"
        return f"right multiplication s{self.rule} |- {name}"


@dataclass
class ItemResult:
    item: object
    status: str
    remainder: DiPoly
    seconds: float = 0.0

    @property
    def trivial(self) -> bool:
        return self.status == TRIVIAL


@dataclass
class CompositionReport:
    results: list = dc_field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.trivial for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.trivial]

    def to_json(self, S: Presentation, timings: bool = False) -> dict:
        items = []
        for r in self.results:
            d = {"item": r.item.describe(S), "status": r.status}
            if not r.trivial:
                d["remainder"] = S.format(r.remainder)
            if timings:
                d["seconds"] = r.seconds
            items.append(d)
        out = {"passed": self.passed, "items": items,
               "checked": len(self.results), "failed": len(self.failures())}
        if timings:
            out["seconds"] = self.seconds
        return out


# -- enumeration ---------------------------------------------------------

def mult_compositions(f: DiPoly, alphabet_size: int) -> list:
    """Multiplication compositions of ``f``, as ``((side, x), polynomial)`` pairs."""
    out = []
    norm = f.normedness()
    if norm not in ("right", "both"):
        for x in range(alphabet_size):
            out.append((("left", x), poly_product(DASHV, letter(x, f.field), f)))
    if norm not in ("left", "both"):
        for x in range(alphabet_size):
            out.append((("right", x), poly_product(VDASH, f, letter(x, f.field))))
    return out


def _placement_kind(C: int, p: int, lead: Diword, norm: str) -> str | None:
    L = len(lead.word)
    if C == p + lead.center:
        return CENTER
    if C >= p + L:
        return LEFT if norm in ("left", "both") else None
    if C < p:
        return RIGHT if norm in ("right", "both") else None
    return None


def inclusion_ambiguities(f: DiPoly, g: DiPoly, i: int = 0, j: int = 1) -> list[Ambiguity]:
    """Occurrences of ``lead(g)`` inside ``lead(f)`` forming a normal g-diword.

    When ``i == j`` the identity occurrence is excluded.
    """
    fl, gl = f.lead, g.lead
    F, G = fl.word, gl.word
    out = []
    if len(G) > len(F):
        return out
    gnorm = g.normedness()
    for p in range(len(F) - len(G) + 1):
        if F[p:p + len(G)] != G:
            continue
        if i == j and p == 0 and len(G) == len(F):
            continue
        kind = _placement_kind(fl.center, p, gl, gnorm)
        if kind is None:
            continue
        out.append(Ambiguity(INCLUSION, i, j, fl, 0, p, CENTER, kind))
    return out


def intersection_ambiguities(f: DiPoly, g: DiPoly, i: int = 0, j: int = 1) -> list[Ambiguity]:
    """Proper overlaps ``w = lead(f) b = a lead(g)`` with every compatible center."""
    fl, gl = f.lead, g.lead
    F, G = fl.word, gl.word
    fnorm, gnorm = f.normedness(), g.normedness()
    out = []
    for o in range(1, min(len(F), len(G))):
        if F[len(F) - o:] != G[:o]:
            continue
        word = F + G[o:]
        p = len(F) - o
        for C in range(len(word)):
            kf = _placement_kind(C, 0, fl, fnorm)
            if kf is None:
                continue
            kg = _placement_kind(C, p, gl, gnorm)
            if kg is None:
                continue
            out.append(Ambiguity(INTERSECTION, i, j, Diword(word, C), 0, p, kf, kg))
    return out


def _place(s: DiPoly, lead: Diword, w: Diword, p: int, kind: str) -> DiPoly:
    L = len(lead.word)
    a, b = w.word[:p], w.word[p + L:]
    if kind == LEFT:
        return substitute(s, a, b, LEFT, w.center - p - L)
    if kind == RIGHT:
        return substitute(s, a, b, RIGHT, w.center)
    return substitute(s, a, b, CENTER)


def composition_poly(amb: Ambiguity, S: Presentation) -> DiPoly:
    f, g = S.relations[amb.i], S.relations[amb.j]
    left = _place(f, f.lead, amb.w, amb.offset_i, amb.kind_i)
    right = _place(g, g.lead, amb.w, amb.offset_j, amb.kind_j)
    return left - right


def _both_normed(a: str, b: str, side: str) -> bool:
    ok = (side, "both")
    return a in ok and b in ok


def ambiguity_constraint(amb: Ambiguity, S: Presentation) -> str:
    """Reduction constraint demanded by the normedness of both sides at ``w``."""
    ni, nj = S.normedness(amb.i), S.normedness(amb.j)
    if amb.w.center == 0 and _both_normed(ni, nj, "right"):
        return RIGHT_ONLY
    if amb.w.center == len(amb.w.word) - 1 and _both_normed(ni, nj, "left"):
        return LEFT_ONLY
    return ANY


def all_items(S: Presentation) -> list:
    items: list = []
    q = len(S.alphabet)
    for r, f in enumerate(S.relations):
        norm = f.normedness()
        if norm not in ("right", "both"):
            items.extend(MultComposition("left", r, x) for x in range(q))
        if norm not in ("left", "both"):
            items.extend(MultComposition("right", r, x) for x in range(q))
    rels = S.relations
    for i, f in enumerate(rels):
        for j, g in enumerate(rels):
            items.extend(inclusion_ambiguities(f, g, i, j))
            items.extend(intersection_ambiguities(f, g, i, j))
    return items


def item_poly(item, S: Presentation) -> DiPoly:
    if isinstance(item, MultComposition):
        f = S.relations[item.rule]
        x = letter(item.x, S.field)
        if item.side == "left":
            return poly_product(DASHV, x, f)
        return poly_product(VDASH, f, x)
    return composition_poly(item, S)


def is_trivial(item, S: Presentation) -> ItemResult:
    t0 = time.perf_counter()
    h = item_poly(item, S)
    if isinstance(item, MultComposition):
        constraint = RIGHT_ONLY if item.side == "left" else LEFT_ONLY
        rem, trace = normal_form(h, S, constraint)
    else:
        rem, trace = normal_form(h, S, ambiguity_constraint(item, S), floor=item.w)
    if trace.stuck:
        status = STUCK
    elif rem:
        status = NONZERO
    else:
        status = TRIVIAL
    return ItemResult(item, status, rem, time.perf_counter() - t0)


def _check_chunk(args):
    S, items = args
    return [is_trivial(it, S) for it in items]


def check_gsb(S: Presentation, jobs: int = 1) -> CompositionReport:
    """Evaluate every composition of ``S``; the report order is deterministic."""
    t0 = time.perf_counter()
    items = all_items(S)
    if jobs > 1 and len(items) > 1:
        n = jobs * 4
        chunks = [items[k::n] for k in range(n)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_check_chunk, [(S, c) for c in chunks]))
        by_pos = {}
        for k, part in enumerate(parts):
            for m, res in enumerate(part):
                by_pos[k + m * n] = res
        results = [by_pos[p] for p in range(len(items))]
    else:
        results = [is_trivial(it, S) for it in items]
    return CompositionReport(results, time.perf_counter() - t0)


# -- completion ------------------------------------------------------------

def _constraint_for(r: DiPoly) -> str:
    norm = r.normedness()
    if norm == "right":
        return RIGHT_ONLY
    if norm == "left":
        return LEFT_ONLY
    return ANY


def interreduce(S: Presentation) -> Presentation:
    """Reduce each relation modulo the others until nothing changes.

    A right (left) normed relation is reduced with right (left) normed
    s-diwords only, so it keeps its normedness; relations reducing to zero
    are dropped.
    """
    rels = list(S.relations)
    changed = True
    while changed:
        changed = False
        for k in range(len(rels)):
            r = rels[k]
            others = [s for m, s in enumerate(rels) if m != k and s is not None]
            if not others:
                continue
            T = S.with_relations(others)
            rem, _ = normal_form(r, T, _constraint_for(r))
            if rem == r:
                continue
            changed = True
            rels[k] = rem.monic() if rem else None
            if rem and rels[k] in others:
                rels[k] = None
        rels = [r for r in rels if r is not None]
    rels.sort(key=lambda r: r.lead)
    return S.with_relations(rels)


COMPLETE, DEGREE_CAPPED, ROUND_CAPPED = "complete", "degree_capped", "round_capped"


def complete(S: Presentation, max_deg: int, max_rounds: int = 20, jobs: int = 1):
    """Shirshov-style completion with explicit caps; return ``(presentation, status)``.

    Each round inter-reduces, evaluates all compositions and appends the
    nonzero remainders of degree at most ``max_deg`` in ascending order of
    leading diword, each first reduced against the relations appended before
    it under its own normedness constraint.
    """
    for r in S.relations:
        if r.degree > max_deg:
            raise ValueError("relation degree exceeds max_deg")
    for _ in range(max_rounds):
        S = interreduce(S)
        report = check_gsb(S, jobs)
        capped = False
        pending = []
        for res in report.results:
            if res.trivial:
                continue
            if res.remainder.degree > max_deg:
                capped = True
                continue
            pending.append(res.remainder.monic())
        if not pending:
            return S, (DEGREE_CAPPED if capped else COMPLETE)
        pending = sorted(set(pending), key=lambda r: (r.lead, _poly_key(r)))
        rels = list(S.relations)
        for r in pending:
            T = S.with_relations(rels)
            rem, _ = normal_form(r, T, _constraint_for(r))
            if rem:
                rels.append(rem.monic())
        S = S.with_relations(rels)
    return interreduce(S), ROUND_CAPPED


def _poly_key(r: DiPoly):
    return tuple((u.key, str(c)) for u, c in r.items())

"""Normal S-diwords, elimination of leading diwords and normal forms.

An occurrence of the leading word of a relation ``s`` at offset ``p`` of a
target diword is *admissible* (the target is the leading term of a normal
``s``-diword ``[asb]``) when one of the following holds:

* ``center``: the target center is the center of the occurrence;
* ``left``: the target center lies right of the occurrence and ``s`` is
  left normed;
* ``right``: the target center lies left of the occurrence and ``s`` is
  right normed.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct
from typing import Callable, Sequence

from .core import Alphabet, DiPoly, Diword
from .field import QQ

CENTER, LEFT, RIGHT = "center", "left", "right"
ANY, RIGHT_ONLY, LEFT_ONLY = "any", "right_normed_only", "left_normed_only"
_KIND_RANK = {CENTER: 0, LEFT: 1, RIGHT: 2}


class Presentation:
    """Alphabet, coefficient field and a list of monic relations.

    Relations are monic-normalized on construction and duplicates dropped
    (first occurrence kept).  Zero relations are rejected.
    """

    def __init__(self, alphabet, relations: Sequence[DiPoly] = (), field=QQ):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        self.alphabet = alphabet
        self.field = field
        rels: list[DiPoly] = []
        seen = set()
        for r in relations:
            if r.field != field:
                raise ValueError(f"relation over {r.field!r}, presentation over {field!r}")
            if not r:
                raise ValueError("zero relation in presentation")
            for u in r:
                if not alphabet.owns(u):
                    raise ValueError("relation uses letters outside the alphabet")
            r = r.monic()
            if r in seen:
                continue
            seen.add(r)
            rels.append(r)
        self.relations = tuple(rels)
        self._index()

    def _index(self):
        self._lead = [r.lead for r in self.relations]
        self._norm = [r.normedness() for r in self.relations]
        by_word: dict[tuple, list[int]] = {}
        for i, u in enumerate(self._lead):
            by_word.setdefault(u.word, []).append(i)
        self._by_word = by_word
        self._lengths = sorted({len(u.word) for u in self._lead})
        self._cache: dict = {}

    def __getstate__(self):
        return {"alphabet": self.alphabet, "field": self.field, "relations": self.relations}

    def __setstate__(self, state):
        self.alphabet = state["alphabet"]
        self.field = state["field"]
        self.relations = state["relations"]
        self._index()

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __eq__(self, other):
        return (isinstance(other, Presentation) and other.alphabet == self.alphabet
                and other.field == self.field and other.relations == self.relations)

    def __repr__(self):
        return f"Presentation({list(self.alphabet)!r}, {len(self.relations)} relations, {self.field!r})"

    def with_relations(self, relations: Sequence[DiPoly]) -> "Presentation":
        return Presentation(self.alphabet, relations, self.field)

    def leading(self, i: int) -> Diword:
        return self._lead[i]

    def normedness(self, i: int) -> str:
        return self._norm[i]

    def parse(self, text: str) -> DiPoly:
        return self.alphabet.parse_poly(text, self.field)

    def format(self, f: DiPoly) -> str:
        return self.alphabet.format_poly(f)


@dataclass(frozen=True, order=True)
class Placement:
    """Admissible occurrence of ``leading(relations[rule_index])`` at ``offset``."""

    rule_index: int
    offset: int
    kind: str


def _kind(target_center: int, p: int, lead: Diword, norm: str) -> str | None:
    L = len(lead.word)
    if target_center == p + lead.center:
        return CENTER
    if target_center >= p + L:
        return LEFT if norm in ("left", "both") else None
    if target_center < p:
        return RIGHT if norm in ("right", "both") else None
    return None


def _admissible(u: Diword, S: Presentation, i: int, p: int, constraint: str) -> str | None:
    lead = S._lead[i]
    norm = S._norm[i]
    kind = _kind(u.center, p, lead, norm)
    if kind is None or constraint == ANY:
        return kind
    if constraint == RIGHT_ONLY:
        ok = norm in ("right", "both") and u.center == 0
    elif constraint == LEFT_ONLY:
        ok = norm in ("left", "both") and u.center == len(u.word) - 1
    else:
        raise ValueError(f"unknown constraint {constraint!r}")
    return kind if ok else None


def _occurrences(u: Diword, S: Presentation):
    """Yield ``(rule_index, offset)`` for every occurrence of a leading word."""
    w = u.word
    n = len(w)
    by_word = S._by_word
    for L in S._lengths:
        if L > n:
            break
        for p in range(n - L + 1):
            rules = by_word.get(w[p:p + L])
            if rules:
                for i in rules:
                    yield i, p


def find_placements(u: Diword, S: Presentation, constraint: str = ANY) -> list[Placement]:
    """All admissible placements in ``u``, ordered by ``(rule_index, offset)``."""
    out = []
    for i, p in _occurrences(u, S):
        kind = _admissible(u, S, i, p, constraint)
        if kind is not None:
            out.append(Placement(i, p, kind))
    out.sort()
    return out


def first_placement(u: Diword, S: Presentation, constraint: str = ANY) -> Placement | None:
    key = (u, constraint)
    cache = S._cache
    if key in cache:
        return cache[key]
    best = None
    for i, p in _occurrences(u, S):
        if best is not None and (i, p) >= (best.rule_index, best.offset):
            continue
        kind = _admissible(u, S, i, p, constraint)
        if kind is not None:
            best = Placement(i, p, kind)
    if len(cache) > 500_000:
        cache.clear()
    cache[key] = best
    return best


def is_reducible(u: Diword, S: Presentation, constraint: str = ANY) -> bool:
    return first_placement(u, S, constraint) is not None


def substitute(s: DiPoly, a: Sequence[int], b: Sequence[int], kind: str,
               center_offset: int = 0) -> DiPoly:
    """Build the normal s-diword ``[asb]``.

    For ``kind == "left"`` the ambient center is letter ``center_offset`` of
    ``b``; for ``kind == "right"`` it is letter ``center_offset`` of ``a``.
    """
    a = tuple(a)
    b = tuple(b)
    norm = s.normedness()
    if kind == CENTER:
        def place(t):
            return Diword(a + t.word + b, len(a) + t.center)
    elif kind == LEFT:
        if norm not in ("left", "both"):
            raise ValueError("left placement needs a left normed relation")
        if not 0 <= center_offset < len(b):
            raise ValueError("center offset must lie inside b")
        def place(t):
            return Diword(a + t.word + b, len(a) + len(t.word) + center_offset)
    elif kind == RIGHT:
        if norm not in ("right", "both"):
            raise ValueError("right placement needs a right normed relation")
        if not 0 <= center_offset < len(a):
            raise ValueError("center offset must lie inside a")
        def place(t):
            return Diword(a + t.word + b, center_offset)
    else:
        raise ValueError(f"unknown placement kind {kind!r}")
    return s.map_diwords(place)


def expand(u: Diword, S: Presentation, pl: Placement) -> DiPoly:
    """The normal S-diword whose leading term is ``u`` at placement ``pl``."""
    s = S.relations[pl.rule_index]
    L = len(S._lead[pl.rule_index].word)
    p = pl.offset
    a, b = u.word[:p], u.word[p + L:]
    if pl.kind == LEFT:
        return substitute(s, a, b, LEFT, u.center - p - L)
    if pl.kind == RIGHT:
        return substitute(s, a, b, RIGHT, u.center)
    return substitute(s, a, b, CENTER)


@dataclass
class ReductionTrace:
    """Elimination steps ``(placement, diword, coefficient)`` and the remainder.

    ``stuck`` is set when a diword at or above the floor needed elimination.
    """

    steps: list = dc_field(default_factory=list)
    remainder: DiPoly | None = None
    stuck: bool = False


def _heap_key(u: Diword):
    # max-heap by diword order; equal lengths make letterwise negation valid
    return (-len(u.word), -u.center, tuple(-x for x in u.word))


def normal_form(f: DiPoly, S: Presentation, constraint: str = ANY, floor: Diword | None = None,
                choose: Callable[[list[Placement]], Placement] | None = None):
    """Reduce ``f`` modulo ``S``; return ``(remainder, trace)``.

    The greatest reducible diword is eliminated first, using the first
    admissible placement unless ``choose`` picks among all of them.  With
    ``floor`` set, only diwords strictly below it may be eliminated; a
    reducible diword at or above it is kept and flags ``trace.stuck``.
    """
    field = S.field
    if f.field != field:
        raise ValueError("polynomial and presentation fields differ")
    trace = ReductionTrace()
    if not f:
        trace.remainder = f
        return f, trace
    work = dict(f.items())
    heap = [(_heap_key(u), u) for u in work]
    heapq.heapify(heap)
    rem: dict[Diword, object] = {}
    while heap:
        _, u = heapq.heappop(heap)
        c = work.pop(u, None)
        if c is None:
            continue
        if choose is None:
            pl = first_placement(u, S, constraint)
        else:
            opts = find_placements(u, S, constraint)
            pl = choose(opts) if opts else None
        if pl is None:
            rem[u] = c
            continue
        if floor is not None and u >= floor:
            trace.stuck = True
            rem[u] = c
            continue
        g = expand(u, S, pl)
        trace.steps.append((pl, u, c))
        for t, ct in g.items():
            if t == u:
                continue
            old = work.get(t)
            if old is None:
                work[t] = -c * ct
                heapq.heappush(heap, (_heap_key(t), t))
            else:
                new = old - c * ct
                if new:
                    work[t] = new
                else:
                    del work[t]
    remainder = DiPoly._raw(rem, field)
    trace.remainder = remainder
    return remainder, trace


def replay(f: DiPoly, S: Presentation, trace: ReductionTrace) -> DiPoly:
    """Recompute the remainder from ``f`` by subtracting each traced step."""
    acc = f
    for pl, u, c in trace.steps:
        acc = acc - expand(u, S, pl).scale(c)
    return acc


def reduces_to_zero(f: DiPoly, S: Presentation, constraint: str = ANY) -> bool:
    return not normal_form(f, S, constraint)[0]


def irr_enumerate(S: Presentation, max_deg: int) -> list[Diword]:
    """Irreducible normal diwords of length at most ``max_deg``, ascending."""
    q = len(S.alphabet)
    out = []
    for L in range(1, max_deg + 1):
        for c in range(L):
            for w in iproduct(range(q), repeat=L):
                u = Diword(w, c)
                if first_placement(u, S) is None:
                    out.append(u)
    return out

"""Seeded hypothesis properties, shared by the unit suite and acceptance criterion 8."""

from collections import Counter
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import load_presentation
from dialgebra.composition import (MultComposition, all_items, composition_poly)
from dialgebra.core import DASHV, VDASH, DiPoly, Diword, dashv, letter, poly_product, vdash
from dialgebra.rewrite import Presentation, find_placements, normal_form, replay, substitute

CASES = 1000
CALLS = Counter()

seeded = settings(max_examples=CASES, derandomize=True, deadline=None, database=None,
                  suppress_health_check=list(HealthCheck))

GSB_FIXTURES = ["env_leibniz_2dim.json", "env_heisenberg.json", "env_sl2.json",
                "clifford1_pres.json"]
_LOADED = {}


def gsb(name):
    if name not in _LOADED:
        _LOADED[name] = load_presentation(name)
    return _LOADED[name]


@st.composite
def diwords(draw, q=3, max_len=4):
    n = draw(st.integers(1, max_len))
    word = draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))
    return Diword(word, draw(st.integers(0, n - 1)))


@st.composite
def polys(draw, q=2, max_len=3, max_terms=4, shape="any"):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        n = draw(st.integers(1, max_len))
        word = draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))
        if shape == "left":
            c = n - 1
        elif shape == "right":
            c = 0
        else:
            c = draw(st.integers(0, n - 1))
        terms[Diword(word, c)] = Fraction(draw(st.integers(-3, 3).filter(bool)))
    return DiPoly(terms)


def _tick(name):
    CALLS[name] += 1


# -- ordering ------------------------------------------------------------------

@seeded
@given(diwords(), diwords(), diwords())
def prop_order_is_total(u, v, w):
    _tick("order_total")
    assert (u < v) + (v < u) + (u == v) == 1
    if u <= v and v <= w:
        assert u <= w
    if u <= v and v <= u:
        assert u == v


@seeded
@given(diwords(), diwords(), st.integers(0, 2))
def prop_partial_monotonicity(u, v, x):
    _tick("partial_monotonicity")
    if u == v:
        return
    u, v = min(u, v), max(u, v)
    X = Diword((x,), 0)
    assert vdash(X, u) < vdash(X, v)
    assert dashv(u, X) < dashv(v, X)


@seeded
@given(st.data(), st.sampled_from(["left", "right"]), diwords())
def prop_normed_monotonicity(data, side, w):
    _tick("normed_monotonicity")

    def normed(n, word):
        return Diword(word, n - 1 if side == "left" else 0)

    words = []
    for _ in range(2):
        n = data.draw(st.integers(1, 4))
        words.append(normed(n, data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))))
    u, v = sorted(words)
    if u == v:
        return
    for op in (vdash, dashv):
        assert op(u, w) < op(v, w)
        assert op(w, u) < op(w, v)


# -- dialgebra structure -------------------------------------------------------

@seeded
@given(diwords(), diwords(), diwords())
def prop_dialgebra_axioms(a, b, c):
    _tick("dialgebra_axioms")
    assert vdash(vdash(a, b), c) == vdash(a, vdash(b, c))
    assert dashv(dashv(a, b), c) == dashv(a, dashv(b, c))
    assert dashv(a, vdash(b, c)) == dashv(dashv(a, b), c)
    assert vdash(dashv(a, b), c) == vdash(vdash(a, b), c)
    assert vdash(a, dashv(b, c)) == dashv(vdash(a, b), c)
    assert len(vdash(a, b)) == len(dashv(a, b)) == len(a) + len(b)


@seeded
@given(polys(), polys(), polys())
def prop_dialgebra_axioms_polynomials(f, g, h):
    _tick("dialgebra_axioms_polynomials")
    V, D = VDASH, DASHV
    m = poly_product
    assert m(V, m(V, f, g), h) == m(V, f, m(V, g, h))
    assert m(D, m(D, f, g), h) == m(D, f, m(D, g, h))
    assert m(D, f, m(V, g, h)) == m(D, m(D, f, g), h)
    assert m(V, m(D, f, g), h) == m(V, m(V, f, g), h)
    assert m(V, f, m(D, g, h)) == m(D, m(V, f, g), h)


def _bracket(factors, lo, hi, center, draw):
    if hi - lo == 1:
        return factors[lo]
    k = draw(st.integers(lo + 1, hi - 1))
    left = _bracket(factors, lo, k, center, draw)
    right = _bracket(factors, k, hi, center, draw)
    return dashv(left, right) if center < k else vdash(left, right)


@seeded
@given(st.data(), st.lists(diwords(max_len=3), min_size=1, max_size=6))
def prop_bracketing_independence(data, factors):
    _tick("bracketing_independence")
    c = data.draw(st.integers(0, len(factors) - 1))
    got = _bracket(factors, 0, len(factors), c, data.draw)
    word = tuple(x for f in factors for x in f.word)
    center = sum(len(f) for f in factors[:c]) + factors[c].center
    assert got == Diword(word, center)


# -- rewriting -------------------------------------------------------------------

@seeded
@given(st.data(), st.sampled_from(["center", "left", "right"]))
def prop_leading_term_lemma(data, kind):
    _tick("leading_term_lemma")
    shape = {"center": "any", "left": "left", "right": "right"}[kind]
    s = data.draw(polys(q=3, max_len=3, shape=shape))
    a = tuple(data.draw(st.lists(st.integers(0, 2), max_size=3)))
    b = tuple(data.draw(st.lists(st.integers(0, 2), max_size=3)))
    lead, coeff = s.leading()
    L = len(lead)
    if kind == "left":
        if not b:
            b = (0,)
        off = data.draw(st.integers(0, len(b) - 1))
        expected = Diword(a + lead.word + b, len(a) + L + off)
    elif kind == "right":
        if not a:
            a = (0,)
        off = data.draw(st.integers(0, len(a) - 1))
        expected = Diword(a + lead.word + b, off)
    else:
        off = 0
        expected = Diword(a + lead.word + b, len(a) + lead.center)
    got = substitute(s, a, b, kind, off)
    assert got.leading() == (expected, coeff)


@seeded
@given(st.lists(polys(q=2, max_len=3), min_size=1, max_size=3))
def prop_composition_below_w(rels):
    _tick("composition_below_w")
    rels = [r for r in rels if r]
    if not rels:
        return
    S = Presentation(["a", "b"], rels)
    for item in all_items(S):
        if isinstance(item, MultComposition):
            continue
        h = composition_poly(item, S)
        assert not h or h.lead < item.w


@st.composite
def ideal_elements(draw):
    name = draw(st.sampled_from(GSB_FIXTURES))
    S = gsb(name)
    q = len(S.alphabet)

    def one():
        h = S.relations[draw(st.integers(0, len(S.relations) - 1))]
        return h.scale(draw(st.integers(-2, 2).filter(bool)))

    h = one()
    for _ in range(draw(st.integers(0, 6))):
        step = draw(st.integers(0, 4))
        x = letter(draw(st.integers(0, q - 1)), S.field)
        if step == 0:
            h = poly_product(DASHV, x, h)
        elif step == 1:
            h = poly_product(VDASH, x, h)
        elif step == 2:
            h = poly_product(DASHV, h, x)
        elif step == 3:
            h = poly_product(VDASH, h, x)
        else:
            h = h + one()
    return name, h


@seeded
@given(ideal_elements())
def prop_ideal_membership(sample):
    _tick("ideal_membership")
    name, h = sample
    S = gsb(name)
    assert not normal_form(h, S)[0]


@seeded
@given(st.sampled_from(GSB_FIXTURES), st.data())
def prop_confluence_policy(name, data):
    _tick("confluence_policy")
    S = gsb(name)
    q = len(S.alphabet)
    f = data.draw(polys(q=q, max_len=4, max_terms=5))
    seed = data.draw(st.integers(0, 2 ** 16))
    import random

    rng = random.Random(seed)
    rem_a, _ = normal_form(f, S)
    rem_b, trace = normal_form(f, S, choose=lambda opts: rng.choice(opts))
    assert rem_a == rem_b
    assert replay(f, S, trace) == rem_b


@seeded
@given(st.lists(polys(q=2, max_len=3), min_size=1, max_size=3), polys(q=2, max_len=4, max_terms=5))
def prop_reduction_soundness(rels, f):
    _tick("reduction_soundness")
    S = Presentation(["a", "b"], [r for r in rels if r])
    rem, trace = normal_form(f, S)
    assert replay(f, S, trace) == rem
    assert all(not find_placements(u, S) for u in rem)
    assert not rem or rem.lead <= f.lead


PROPERTIES = {
    "order_total": prop_order_is_total,
    "partial_monotonicity": prop_partial_monotonicity,
    "normed_monotonicity": prop_normed_monotonicity,
    "dialgebra_axioms": prop_dialgebra_axioms,
    "dialgebra_axioms_polynomials": prop_dialgebra_axioms_polynomials,
    "bracketing_independence": prop_bracketing_independence,
    "leading_term_lemma": prop_leading_term_lemma,
    "composition_below_w": prop_composition_below_w,
    "ideal_membership": prop_ideal_membership,
    "confluence_policy": prop_confluence_policy,
    "reduction_soundness": prop_reduction_soundness,
}

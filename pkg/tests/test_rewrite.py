import pytest

from conftest import load_presentation
from dialgebra.core import Alphabet, DiPoly, Diword
from dialgebra.field import GF
from dialgebra.rewrite import (LEFT_ONLY, RIGHT_ONLY, Placement, Presentation, expand,
                               find_placements, irr_enumerate, normal_form, replay, substitute)

A = Alphabet(["a", "b", "c", "d", "p", "q"])
P = A.parse_poly
D = A.parse_diword


def names(S, words):
    return [S.alphabet.format_diword(u) for u in words]


def test_find_placements_examples():
    S = Presentation(A, [P("^a b - ^c")])
    assert find_placements(D("^d a b"), S) == [Placement(0, 1, "right")]
    assert find_placements(D("a b ^c"), S) == []
    T = Presentation(A, [P("a ^b")])
    assert find_placements(D("d a ^b"), T) == [Placement(0, 1, "center")]


def test_find_placements_constraints():
    S = Presentation(A, [P("^a b - ^c"), P("a ^b - ^c"), P("a ^b c")])
    assert find_placements(D("^d a b"), S, RIGHT_ONLY) == [Placement(0, 1, "right")]
    assert find_placements(D("a b ^d"), S, LEFT_ONLY) == [Placement(1, 0, "left")]
    assert find_placements(D("a ^b c"), S) == [Placement(1, 0, "center"), Placement(2, 0, "center")]
    assert find_placements(D("a ^b c"), S, RIGHT_ONLY) == []
    assert find_placements(D("a ^b c"), S, LEFT_ONLY) == []


def test_substitute_examples():
    assert substitute(P("^a b - ^c"), [3], [], "right", 0) == P("^d a b - ^d c")
    assert substitute(P("a ^b"), [4], [5], "center") == P("p a ^b q")
    assert substitute(P("a ^b - ^c"), [], [3], "left", 0) == P("a b ^d - c ^d")


def test_substitute_rejects_normedness_violations():
    with pytest.raises(ValueError):
        substitute(P("a ^b c"), [3], [], "right", 0)
    with pytest.raises(ValueError):
        substitute(P("^a b"), [], [3], "left", 0)
    with pytest.raises(ValueError):
        substitute(P("^a b"), [3], [], "right", 1)


def test_normal_form_examples():
    C = load_presentation("clifford1_pres.json")
    rem, trace = normal_form(C.parse("^x x x"), C)
    assert C.format(rem) == "^x" and len(trace.steps) == 1
    L = load_presentation("env_leibniz_2dim.json")
    assert L.format(normal_form(L.parse("a ^a"), L)[0]) == "^a a - ^b"
    assert not normal_form(L.parse("b ^a"), L)[0]
    zero, trace = normal_form(DiPoly.zero(), L)
    assert not zero and trace.steps == []


def test_trace_replays_to_remainder():
    L = load_presentation("env_sl2.json")
    f = L.parse("e f ^h + 3 h ^e - f ^f e")
    rem, trace = normal_form(f, L)
    assert replay(f, L, trace) == rem
    assert all(not find_placements(u, L) for u in rem)


def test_floor_marks_stuck():
    L = load_presentation("env_leibniz_2dim.json")
    f = L.parse("a ^a")
    rem, trace = normal_form(f, L, floor=D("a ^a"))
    assert trace.stuck and rem == f
    rem, trace = normal_form(f, L, floor=D("a a ^a"))
    assert not trace.stuck


def test_remainder_stays_below_input_lead():
    L = load_presentation("env_heisenberg.json")
    f = L.parse("y x ^z - 2 ^x y")
    rem, _ = normal_form(f, L)
    assert not rem or rem.lead <= f.lead


def test_irr_enumerate_examples():
    L = load_presentation("env_leibniz_2dim.json")
    assert names(L, irr_enumerate(L, 3)) == ["^a", "^b", "^a a", "^b a", "^a a a", "^b a a"]
    C = load_presentation("clifford1_pres.json")
    assert sorted(names(C, irr_enumerate(C, 2))) == sorted(["^x", "^e", "^x x", "^e x"])
    E = Presentation(["x"], [])
    assert names(E, irr_enumerate(E, 2)) == ["^x", "^x x", "x ^x"]


def test_irr_enumerate_is_ascending():
    L = load_presentation("env_sl2.json")
    words = irr_enumerate(L, 3)
    assert words == sorted(words)


def test_presentation_normalizes_relations():
    S = Presentation(A, [P("2 a ^b - ^c"), P("a ^b - 1/2 ^c"), P("^d")])
    assert len(S) == 2 and all(r.is_monic() for r in S)
    with pytest.raises(ValueError):
        Presentation(A, [DiPoly.zero()])
    with pytest.raises(ValueError):
        Presentation(Alphabet(["a"]), [P("^b")])
    with pytest.raises(ValueError):
        Presentation(A, [A.parse_poly("^a", GF(3))])


def test_presentation_pickles():
    import pickle

    L = load_presentation("env_sl2.json")
    M = pickle.loads(pickle.dumps(L))
    assert M == L
    f = L.parse("e ^f")
    assert normal_form(f, M)[0] == normal_form(f, L)[0]


def test_expand_leads_with_target():
    S = Presentation(A, [P("a ^b - ^c")])
    u = D("d a b ^q")
    pl = find_placements(u, S)[0]
    assert pl.kind == "left" and expand(u, S, pl).lead == u

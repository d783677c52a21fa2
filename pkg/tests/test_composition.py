import pytest

from conftest import load_presentation
from dialgebra.composition import (COMPLETE, DEGREE_CAPPED, INCLUSION, NONZERO, TRIVIAL,
                                   MultComposition, all_items, check_gsb, complete,
                                   composition_poly, inclusion_ambiguities,
                                   intersection_ambiguities, interreduce, is_trivial,
                                   mult_compositions)
from dialgebra.constructions import SymmetricForm, clifford
from dialgebra.core import Alphabet
from dialgebra.rewrite import Presentation, irr_enumerate

A = Alphabet(["a", "b", "c"])
P = A.parse_poly


def rule(S, text):
    return [i for i, r in enumerate(S.relations) if S.format(r) == text][0]


def test_mult_compositions_examples():
    assert mult_compositions(P("^a b - ^c"), 3)[0][0] == ("right", 0)
    assert all(side == "right" for (side, _), _ in mult_compositions(P("^a b - ^c"), 3))
    assert mult_compositions(P("^a"), 3) == []
    L = load_presentation("env_leibniz_2dim.json")
    f = L.relations[rule(L, "a ^a - ^a a + ^b")]
    comps = dict(mult_compositions(f, 2))
    assert L.format(comps[("left", 0)]) == "^a b"
    assert L.format(comps[("right", 0)]) == "b ^a"


def test_left_multiplication_is_trivial():
    L = load_presentation("env_leibniz_2dim.json")
    res = is_trivial(MultComposition("left", rule(L, "a ^a - ^a a + ^b"), 0), L)
    assert res.status == TRIVIAL


def test_inclusion_examples_clifford():
    C2 = clifford(SymmetricForm([[1, 0], [0, 1]]))
    rel6 = rule(C2, "x2 x1 ^x1 + x1 x2 ^x1")
    rel1 = rule(C2, "x1 ^x1 + ^x1 x1 - 2 ^e")
    ambs = inclusion_ambiguities(C2.relations[rel6], C2.relations[rel1], rel6, rel1)
    assert [C2.alphabet.format_diword(a.w) for a in ambs] == ["x2 x1 ^x1"]
    C1 = clifford(SymmetricForm([[1]]), names=["x"])
    rel7 = rule(C1, "x x ^e - ^e")
    rel8 = rule(C1, "x ^e - ^e x")
    ambs = inclusion_ambiguities(C1.relations[rel7], C1.relations[rel8], rel7, rel8)
    assert [C1.alphabet.format_diword(a.w) for a in ambs] == ["x x ^e"]
    assert inclusion_ambiguities(P("^a"), P("a ^b")) == []


def test_self_inclusion_excludes_identity():
    f = P("a ^a - ^b")
    assert inclusion_ambiguities(f, f, 0, 0) == []
    g = P("a a ^a")
    assert [a.offset_j for a in inclusion_ambiguities(g, P("a ^a"), 0, 1)] == [0, 1]


def test_intersection_examples():
    ambs = intersection_ambiguities(P("a ^b"), P("^b c"))
    assert [A.format_diword(a.w) for a in ambs] == ["a ^b c"]
    assert intersection_ambiguities(P("a ^b"), P("^c a")) == []


def test_same_lead_case_value():
    L = load_presentation("env_leibniz_2dim.json")
    f, h = rule(L, "b ^a - ^a b"), rule(L, "b ^a")
    ambs = inclusion_ambiguities(L.relations[f], L.relations[h], f, h)
    assert len(ambs) == 1 and ambs[0].kind == INCLUSION
    assert L.format(composition_poly(ambs[0], L)) == "- ^a b"


def test_clifford_compositions_vanish():
    C1 = clifford(SymmetricForm([[1]]), names=["x"])
    rel7, rel8 = rule(C1, "x x ^e - ^e"), rule(C1, "x ^e - ^e x")
    amb = inclusion_ambiguities(C1.relations[rel7], C1.relations[rel8], rel7, rel8)[0]
    assert is_trivial(amb, C1).status == TRIVIAL
    C2 = clifford(SymmetricForm([[1, 0], [0, 1]]))
    rel6 = rule(C2, "x2 x1 ^e + x1 x2 ^e")
    rel8 = rule(C2, "x1 ^e - ^e x1")
    amb = inclusion_ambiguities(C2.relations[rel6], C2.relations[rel8], rel6, rel8)[0]
    assert C2.alphabet.format_diword(amb.w) == "x2 x1 ^e"
    assert is_trivial(amb, C2).status == TRIVIAL


def test_identical_monomial_rules_give_zero():
    S = Presentation(A, [P("a ^b"), P("b ^c")])
    amb = inclusion_ambiguities(P("a ^b"), P("a ^b"), 0, 0)
    assert amb == []
    amb = intersection_ambiguities(P("a a ^b"), P("a ^a b"), 0, 1)
    assert all(a.w.word == (0, 0, 1) for a in amb)


def test_composition_leads_fall_below_w():
    for name in ("env_sl2.json", "env_heisenberg.json", "s1_remark.json"):
        S = load_presentation(name)
        for item in all_items(S):
            if isinstance(item, MultComposition):
                continue
            h = composition_poly(item, S)
            assert not h or h.lead < item.w


def test_check_gsb_examples():
    assert check_gsb(load_presentation("env_leibniz_2dim.json")).passed
    rep = check_gsb(load_presentation("s1_remark.json"))
    assert not rep.passed
    assert any(r.status == NONZERO and r.remainder for r in rep.failures())
    assert check_gsb(Presentation(A, [])).passed


def test_check_gsb_jobs_are_deterministic():
    S = load_presentation("env_sl2.json")
    one = check_gsb(S, jobs=1).to_json(S)
    two = check_gsb(S, jobs=2).to_json(S)
    assert one == two


def test_report_json_lists_witnesses():
    S = load_presentation("s1_remark.json")
    doc = check_gsb(S).to_json(S)
    assert doc["passed"] is False and doc["failed"] == 10
    assert {"item", "status", "remainder"} <= set(next(i for i in doc["items"] if i["status"] != "trivial"))
    assert "seconds" not in doc


def test_complete_raw_leibniz_relations():
    raw = load_presentation("leibniz_2dim_raw.json")
    T, status = complete(raw, 4)
    assert status == COMPLETE
    ref = load_presentation("env_leibniz_2dim.json")
    assert irr_enumerate(T, 4) == irr_enumerate(ref, 4)
    assert check_gsb(T).passed
    again, status2 = complete(T, 4)
    assert status2 == COMPLETE and again == T


def test_complete_on_gsb_keeps_irr():
    ref = load_presentation("env_leibniz_2dim.json")
    T, status = complete(ref, 3)
    assert status == COMPLETE
    assert irr_enumerate(T, 4) == irr_enumerate(ref, 4)


def test_complete_degree_cap():
    S = Presentation(["a", "b"], [Alphabet(["a", "b"]).parse_poly("a ^b - ^b a")])
    _, status = complete(S, 2)
    assert status == DEGREE_CAPPED
    with pytest.raises(ValueError):
        complete(load_presentation("env_leibniz_2dim.json"), 1)


def test_interreduce_drops_redundant_rules():
    S = Presentation(A, [P("a ^b"), P("c a ^b"), P("b ^c - a ^b")])
    T = interreduce(S)
    assert [T.format(r) for r in T] == ["a ^b", "b ^c"]

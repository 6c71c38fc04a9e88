import pytest

from nilorbit.errors import HypothesisError, InvalidTypeError, UnsupportedError
from nilorbit.frobenius import (
    frobenius_classes,
    frobenius_descriptor,
    frobenius_image,
    is_stable,
    orbit_action,
    rationality_report,
)
from nilorbit.orbits import enumerate_orbit_labels, parse_label
from nilorbit.roottypes import DiagramAutomorphism, DynkinType, parse_type
from nilorbit.wdd import WeightedDynkinDiagram

D4 = DynkinType("D", 4)


def L(s):
    return parse_label(s)


def test_class_examples():
    assert [f.name for f in frobenius_classes("C3")] == ["F0"]
    a4 = frobenius_classes("A4")
    assert [f.name for f in a4] == ["F0", "F1"]
    assert a4[1].twist.perm == (4, 3, 2, 1)
    d4 = frobenius_classes("D4")
    assert [f.display for f in d4] == ["F0 (split)", "F1 = (3 4)", "F2 = (1 3)"]


def test_twisted_classes_d_and_e():
    assert frobenius_classes("D6")[1].twist.cycle_notation() == "(5 6)"
    assert frobenius_classes("E6")[1].twist.cycle_notation() == "(1 6)(3 5)"


def test_descriptor_lookup():
    assert frobenius_descriptor("A5", "twisted") == frobenius_classes("A5")[1]
    assert frobenius_descriptor("D4", "F3").twist.cycle_notation() == "(1 4)"
    assert frobenius_descriptor("D4", "(1 3 4)").twist.order == 3
    assert frobenius_descriptor("B3", "split").is_split
    with pytest.raises(UnsupportedError):
        frobenius_descriptor("B3", "twisted")
    with pytest.raises(InvalidTypeError):
        frobenius_descriptor("D4", "twisted")
    with pytest.raises(InvalidTypeError):
        frobenius_descriptor("D4", "(1 2)")
    with pytest.raises(InvalidTypeError):
        frobenius_descriptor("D4", "F7")


def test_is_stable_examples():
    for f in frobenius_classes("D4")[:1] + frobenius_classes("A5")[:1]:
        for x in enumerate_orbit_labels(f.dynkin_type):
            assert is_stable(x, f)
    assert is_stable("A5:[4,2]", frobenius_descriptor("A5", "twisted"))
    assert not is_stable("D4:[4,4]:I", frobenius_descriptor("D4", "F1"))


def test_is_stable_with_supplied_diagram():
    e6 = parse_type("E6")
    f = frobenius_descriptor(e6, "twisted")
    assert is_stable(WeightedDynkinDiagram(e6, (2, 0, 0, 0, 0, 2)), f)
    assert not is_stable(WeightedDynkinDiagram(e6, (2, 0, 0, 0, 0, 0)), f)
    b3 = parse_type("B3")
    assert is_stable(WeightedDynkinDiagram(b3, (1, 0, 1)), frobenius_classes(b3)[0])


def test_is_stable_type_mismatch():
    with pytest.raises(InvalidTypeError):
        is_stable("A3:[2,2]", frobenius_descriptor("A4", "twisted"))


def _swaps(action):
    return {(str(k), str(v)) for k, v in action.items() if k != v}


def test_d4_f2_exchanges():
    action = orbit_action(frobenius_descriptor("D4", "F2"))
    assert _swaps(action) == {
        ("D4:[2,2,2,2]:II", "D4:[3,1,1,1,1,1]"),
        ("D4:[3,1,1,1,1,1]", "D4:[2,2,2,2]:II"),
        ("D4:[4,4]:II", "D4:[5,1,1,1]"),
        ("D4:[5,1,1,1]", "D4:[4,4]:II"),
    }


def test_d4_f3_exchanges():
    action = orbit_action(frobenius_descriptor("D4", "F3"))
    assert action[L("D4:[2^4]:I")] == L("D4:[3,1^5]")
    assert action[L("D4:[4^2]:I")] == L("D4:[5,1^3]")
    assert len(_swaps(action)) == 4


def test_d6_twisted_swaps_very_even_pairs():
    action = orbit_action(frobenius_descriptor("D6", "twisted"))
    assert action[L("D6:[4,4,2,2]:I")] == L("D6:[4,4,2,2]:II")
    for x, y in action.items():
        assert (x != y) == (x.decoration is not None)


@pytest.mark.parametrize("t", ["A3", "A6", "D4", "D5", "D6", "D8"])
def test_orbit_action_is_bijection(t):
    for f in frobenius_classes(t):
        action = orbit_action(f)
        assert sorted(action.values(), key=lambda x: x.sort_key()) == list(enumerate_orbit_labels(t))
        if f.twist.order == 2:
            assert all(action[action[x]] == x for x in action)
        fixed = {x for x, y in action.items() if x == y}
        assert fixed == {x for x in action if is_stable(x, f)}


def test_d4_three_cycle_action():
    f = frobenius_descriptor("D4", "(1 3 4)")
    action = orbit_action(f)
    for x in action:
        assert action[action[action[x]]] == x


def test_d4_composition_matches_node_group():
    t = D4
    names = ("F1", "F2", "F3")
    descs = {n: frobenius_descriptor(t, n) for n in names}
    acts = {n: orbit_action(descs[n]) for n in names}
    for a in names:
        for b in names:
            composed_twist = descs[a].twist.compose(descs[b].twist)
            composed = orbit_action(frobenius_descriptor(t, composed_twist.cycle_notation()))
            assert {x: acts[a][acts[b][x]] for x in acts[b]} == composed
    # (3 4)(1 3)(3 4) = (1 4)
    s1, s2 = descs["F1"].twist, descs["F2"].twist
    assert s1.compose(s2).compose(s1) == descs["F3"].twist


def test_frobenius_image():
    assert frobenius_image("D4:[4,4]:I", frobenius_descriptor("D4", "F1")) == L("D4:[4,4]:II")


def test_orbit_action_unsupported():
    with pytest.raises(UnsupportedError):
        orbit_action(frobenius_descriptor("E6", "twisted"))


def test_rationality_report_a3():
    reports = rationality_report("A3", frobenius_descriptor("A3", "twisted"), 5, 5)
    assert len(reports) == 5
    assert all(r.stable and r.has_rational_point for r in reports)
    # h(A3) = 4 <= 5
    assert all(r.p_at_least_coxeter for r in reports)


def test_rationality_report_d4_f1():
    reports = rationality_report("D4", frobenius_descriptor("D4", "F1"), 5, 25)
    assert sum(r.stable for r in reports) == 8
    for r in reports:
        assert r.stable == (r.image == r.orbit) == r.has_rational_point
    assert reports[3].to_json() == {
        "orbit": "D4:[4,4]:I",
        "frobenius": "F1",
        "stable": False,
        "image": "D4:[4,4]:II",
        "rational_point": False,
        "p_ge_coxeter": False,
    }


@pytest.mark.parametrize(
    "t,p,q",
    [("D4", 3, 3), ("A3", 2, 2), ("A3", 5, 7), ("A3", 5, 10), ("A3", 6, 6), ("D4", 5, 1)],
)
def test_rationality_report_hypotheses(t, p, q):
    with pytest.raises(HypothesisError):
        rationality_report(t, frobenius_classes(t)[0], p, q)


def test_descriptor_rejects_foreign_twist():
    from nilorbit.frobenius import FrobeniusDescriptor

    with pytest.raises(InvalidTypeError):
        FrobeniusDescriptor(D4, DiagramAutomorphism.identity(DynkinType("A", 4)), "bad")

import json

import pytest
from hypothesis import given, settings, strategies as st

from crystal_bialgebra.crystal_core import (
    NEG_INF,
    SL2,
    CartanDatum,
    Monomial,
    build_Bn,
    build_T,
    chain,
    classify_irreducible_sl2,
    component_node_sets,
    disjoint_union,
    dual,
    dumps,
    enumerate_strict_morphisms,
    from_json,
    is_isomorphic,
    make_crystal,
    to_dot,
    to_json,
    validate,
)

unions = st.lists(st.integers(0, 3), min_size=1, max_size=4)


def union(parts):
    return build_Bn(parts[0]) if len(parts) == 1 else disjoint_union(*(build_Bn(n) for n in parts))


def test_Bn_statistics():
    c = build_Bn(3)
    assert [c.weight(b) for b in c.nodes] == [3, 1, -1, -3]
    for b in c.nodes:
        assert c.eps[(b, "1")] == b.i and c.phi[(b, "1")] == b.j
    assert c.fi(Monomial(0, 3), "1") == Monomial(1, 2)
    assert c.ei(Monomial(0, 3), "1") is None


def test_B0_is_a_point():
    c = build_Bn(0)
    assert len(c) == 1 and not c.f and not c.e
    assert to_dot(c).count("->") == 0


def test_T_has_minus_infinity():
    t = build_T(-2)
    b = t.nodes[0]
    assert t.eps[(b, "1")] == NEG_INF and t.weight(b) == -2
    assert validate(t) == []


def test_validate_catches_weight_axiom():
    c = make_crystal(SL2, ["a", "b"], {"a": 1, "b": 1}, {("a", "1"): "b"})
    axioms = {v.axiom for v in validate(c)}
    assert "weight" in axioms


def test_validate_catches_non_injective_f():
    c = make_crystal(
        SL2, ["a", "b", "c"], {"a": 1, "b": 1, "c": -1}, {("a", "1"): "c", ("b", "1"): "c"},
        eps={("a", "1"): 0, ("b", "1"): 0, ("c", "1"): 1}, phi={("a", "1"): 1, ("b", "1"): 1, ("c", "1"): 0},
    )
    assert validate(c)


@given(unions)
def test_unions_validate_and_dual_is_involutive(parts):
    x = union(parts)
    assert validate(x) == []
    assert validate(dual(x)) == []
    assert is_isomorphic(dual(dual(x)), x)


@given(unions)
def test_json_round_trip(parts):
    x = union(parts)
    y = from_json(json.loads(dumps(x)))
    assert is_isomorphic(x, y)
    assert dumps(y) == dumps(from_json(json.loads(dumps(y))))


def test_json_infinite_statistics_round_trip():
    t = from_json(to_json(build_T(3)))
    assert t.eps[(t.nodes[0], "1")] == NEG_INF


def test_components_ordered_by_highest_weight():
    x = disjoint_union(build_Bn(1), build_Bn(3), build_Bn(0))
    sizes = [len(p) for p in component_node_sets(x)]
    assert sizes == [4, 2, 1]


def test_chain_rejects_two_components():
    with pytest.raises(ValueError):
        chain(disjoint_union(build_Bn(1), build_Bn(1)))


def test_classify_irreducible_witness():
    n, lam, w = classify_irreducible_sl2(build_Bn(2))
    assert (n, lam) == (2, 2)
    assert w.is_isomorphism()


def test_strict_morphisms_from_B1_to_B1_plus_B1():
    target = disjoint_union(build_Bn(1), build_Bn(1))
    ms = enumerate_strict_morphisms(build_Bn(1), target)
    assert len(ms) == 3  # zero and the two inclusions
    assert sum(m.is_zero() for m in ms) == 1


@settings(max_examples=30)
@given(unions, unions)
def test_bijective_strict_morphisms_are_isomorphisms(p, q):
    a, b = union(p), union(q)
    if len(a) * len(b) > 64:
        return
    for m in enumerate_strict_morphisms(a, b):
        if len(set(m.assignment.values())) == len(a) == len(b) and len(m.assignment) == len(a):
            assert m.is_isomorphism()


def test_cartan_json():
    c = CartanDatum(("1", "2"), ((2, -1), (-1, 2)))
    assert CartanDatum.from_json(c.to_json()) == c

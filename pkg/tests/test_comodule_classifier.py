import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crystal_bialgebra.comodule_classifier import (
    BasedComodule,
    LinComodule,
    based_tensor,
    based_to_crystal,
    check_based,
    classify,
    compatibility_check,
    compatible_structures,
    crystal_to_based,
    direct_sum,
    first_violation,
    regular_block,
    s_diagram_check,
    standard_comodule,
    verify_transport,
)
from crystal_bialgebra.crystal_core import Monomial, build_Bn, disjoint_union, is_isomorphic
from crystal_bialgebra.linear_bialgebra import naive_swap
from crystal_bialgebra.set_bialgebra import BElem, counterexample_comodule
from crystal_bialgebra.tensor_ops import cg_multiset, tensor

parts = st.lists(st.integers(0, 3), min_size=1, max_size=3)


def union(ps):
    return build_Bn(ps[0]) if len(ps) == 1 else disjoint_union(*(build_Bn(n) for n in ps))


def test_standard_comodule_operators():
    m = standard_comodule(1)
    x, y = Monomial(1, 0), Monomial(0, 1)
    # A_{b,b'} sends e_b to e_b'
    assert m.op(BElem(1, y, x)).tolist() == [[0, 0], [1, 0]]
    assert first_violation(m) is None


def test_relation_violation_reported():
    m = standard_comodule(1)
    ops = dict(m.ops)
    ops[BElem(1, Monomial(0, 1), Monomial(0, 1))] = np.zeros((2, 2), dtype=np.int64)
    assert first_violation(LinComodule(2, ops)) is not None


def test_classify_frozen():
    assert classify(standard_comodule(2)).multiset() == [(2, 1)]
    s = direct_sum(standard_comodule(1), standard_comodule(1), standard_comodule(0))
    assert classify(s).multiset() == [(1, 2), (0, 1)]
    # block 1 of the bialgebra is two copies of B(1) under the coproduct
    assert classify(regular_block(1)).multiset() == [(1, 2)]
    assert classify(regular_block(2)).multiset() == [(2, 3)]


def _unimodular(rng, n):
    t = np.eye(n, dtype=np.int64)
    for _ in range(3 * n):
        i, j = rng.integers(0, n, 2)
        if i != j:
            t[i] += int(rng.integers(-1, 2)) * t[j]
    return t


@settings(max_examples=25, deadline=None)
@given(parts, st.integers(0, 2**31 - 1))
def test_classify_after_random_change_of_basis(ps, seed):
    x = union(ps)
    m = crystal_to_based(x).comodule
    t = _unimodular(np.random.default_rng(seed), m.rank)
    tinv = np.rint(np.linalg.inv(t)).astype(np.int64)
    assert np.array_equal(t @ tinv, np.eye(m.rank, dtype=np.int64))
    conj = LinComodule(m.rank, {k: t @ a @ tinv for k, a in m.ops.items()})
    cl = classify(conj)
    want = {}
    for n in ps:
        want[n] = want.get(n, 0) + 1
    assert cl.multiplicities == want
    assert verify_transport(conj, cl)


@given(parts)
def test_round_trip_crystal_based_crystal(ps):
    x = union(ps)
    bm = crystal_to_based(x)
    assert check_based(bm) is None
    assert is_isomorphic(based_to_crystal(bm), x)


def test_bad_partition_is_rejected():
    bm = crystal_to_based(build_Bn(1))
    broken = BasedComodule(bm.comodule, {k: () for k in bm.partition}, bm.labels)
    assert check_based(broken) is not None
    with pytest.raises(ValueError):
        based_to_crystal(broken)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
def test_based_tensor_is_crystal_tensor(m, n):
    bt = based_tensor(crystal_to_based(build_Bn(m)), crystal_to_based(build_Bn(n)))
    assert check_based(bt) is None
    got = sorted((a for a, r in classify(bt.comodule).multiplicities.items() for _ in range(r)), reverse=True)
    assert got == cg_multiset(m, n)
    assert is_isomorphic(based_to_crystal(bt), tensor(build_Bn(m), build_Bn(n)))


def test_compatibility_of_counterexample():
    # the set comodule admits exactly one compatible based structure, with a below b
    found = compatible_structures(counterexample_comodule())
    assert len(found) == 1
    c = found[0]
    assert c.weight("b") == 1 and c.weight("a") == -1


def test_compatibility_check_on_B1():
    m = counterexample_comodule()
    op = crystal_to_based(build_Bn(1)).comodule
    # basis order is (y, x): labelling y as b and x as a is compatible, the swap is not
    assert compatibility_check(op, ("b", "a"), m)
    assert not compatibility_check(op, ("a", "b"), m)
    assert not compatibility_check(standard_comodule(2), ("a", "b", "c"), m)


def test_s_diagram():
    assert all(s_diagram_check(a) for a in range(4))
    assert s_diagram_check(0, naive_swap)
    assert not any(s_diagram_check(a, naive_swap) for a in range(1, 4))
    assert not s_diagram_check(1, lambda p: p)

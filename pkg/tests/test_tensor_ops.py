import itertools

import oracles
from hypothesis import given, strategies as st

from crystal_bialgebra.crystal_core import Monomial, build_Bn, disjoint_union, dual, is_isomorphic, validate
from crystal_bialgebra.tensor_ops import (
    cg_multiset,
    cg_position,
    commutor,
    commutor_oracle,
    commutor_sl2,
    decompose,
    embed_Bn,
    tensor,
    tensor_Bmn,
    tensor_power,
    zeta,
)

small = st.integers(0, 4)


def test_decompose_B2_B3():
    assert decompose(tensor_Bmn(2, 3)).sizes() == [6, 4, 2]


def test_tensor_rule_on_B1_squared():
    t = tensor(build_Bn(1), build_Bn(1))
    x, y = Monomial(1, 0), Monomial(0, 1)
    assert t.fi((y, y), "1") == (x, y)
    assert t.fi((x, y), "1") == (x, x)
    assert t.fi((y, x), "1") is None and t.ei((y, x), "1") is None
    assert t.phi[((y, x), "1")] == 0


@given(small, small)
def test_cg_matches_weight_peeling_oracle(m, n):
    sizes = decompose(tensor_Bmn(m, n)).sizes()
    assert sorted(sizes) == sorted(oracles.cg_sizes(m, n))
    assert sorted(sizes, reverse=True) == [g + 1 for g in cg_multiset(m, n)]


@given(small, small)
def test_cg_position_matches_word_oracle(m, n):
    pos = cg_position(m, n)
    for (i, r), (g, k) in oracles.cg_position(m, n).items():
        assert pos[(Monomial(i, m - i), Monomial(r, n - r))] == (g, Monomial(*k))


@given(small, small)
def test_commutor_formula_matches_word_oracle(n, m):
    for (a, b), (c, d) in oracles.commutor(n, m).items():
        assert commutor_sl2((Monomial(*a), Monomial(*b))) == (Monomial(*c), Monomial(*d))


@given(small, small)
def test_commutor_is_involutive(n, m):
    for a in build_Bn(n).nodes:
        for b in build_Bn(m).nodes:
            c, d = commutor_oracle((a, b))
            assert commutor_oracle((c, d)) == (a, b)


def test_commutor_frozen_values():
    x, y = Monomial(1, 0), Monomial(0, 1)
    assert commutor_sl2((x, y)) == (x, y)
    assert commutor_sl2((y, x)) == (y, x)
    assert commutor_sl2((Monomial(0, 1), Monomial(0, 2))) == (Monomial(0, 2), Monomial(0, 1))
    assert commutor_sl2((Monomial(1, 0), Monomial(0, 2))) == (Monomial(1, 1), Monomial(0, 1))


@given(st.lists(st.integers(0, 2), min_size=1, max_size=3))
def test_zeta_is_an_involution_reversing_weight(parts):
    x = build_Bn(parts[0]) if len(parts) == 1 else disjoint_union(*(build_Bn(n) for n in parts))
    z = zeta(x)
    for b in x.nodes:
        assert z[z[b]] == b
        assert x.weight(z[b]) == -x.weight(b)


def test_commutor_on_general_crystals_preserves_components():
    c1 = disjoint_union(build_Bn(1), build_Bn(0))
    c2 = build_Bn(2)
    sig = commutor(c1, c2)
    t12, t21 = tensor(c1, c2), tensor(c2, c1)
    d12, d21 = decompose(t12), decompose(t21)
    for node, img in sig.items():
        assert len(d12.parts[d12.part_of(node)].component) == len(d21.parts[d21.part_of(img)].component)


@given(small, small, small)
def test_tensor_is_associative_up_to_iso(a, b, c):
    if (a + 1) * (b + 1) * (c + 1) > 40:
        return
    A, B, C = build_Bn(a), build_Bn(b), build_Bn(c)
    assert is_isomorphic(tensor(tensor(A, B), C), tensor(A, tensor(B, C)))


@given(small, small)
def test_dual_of_tensor_reverses_factors(a, b):
    A, B = build_Bn(a), build_Bn(b)
    assert is_isomorphic(dual(tensor(A, B)), tensor(dual(B), dual(A)))


@given(small, small)
def test_tensor_validates(a, b):
    assert validate(tensor_Bmn(a, b)) == []


def test_embedding_is_strict():
    for n in range(1, 5):
        e = embed_Bn(n)
        assert e.is_strict() and e.is_injective()


def test_tensor_power_size():
    assert len(tensor_power(build_Bn(1), 4)) == 16
    assert sorted(decompose(tensor_power(build_Bn(1), 3)).sizes()) == [2, 2, 4]


def test_decompose_witnesses_are_isomorphisms():
    for m, n in itertools.product(range(3), repeat=2):
        for part in decompose(tensor_Bmn(m, n)).parts:
            assert part.n == len(part.component) - 1
            assert part.witness.is_isomorphism()

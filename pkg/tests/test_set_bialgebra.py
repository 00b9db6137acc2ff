import oracles
from hypothesis import given, strategies as st

from crystal_bialgebra.crystal_core import Monomial, build_Bn, disjoint_union
from crystal_bialgebra.linear_bialgebra import pair_mul
from crystal_bialgebra.set_bialgebra import (
    UNIT,
    BElem,
    associativity_failures,
    bialgebra_square_failures,
    block,
    coaction_Balpha,
    coassociativity_failures,
    counit_candidates,
    counterexample_comodule,
    crystal_coaction,
    elements,
    hatC,
    induced_coaction,
    is_subcomodule,
    sdelta,
    sigma_square,
    smul,
    strict_realizations,
    top_component,
    u,
    verify_comodule,
)

X, Y = Monomial(1, 0), Monomial(0, 1)
elems2 = st.sampled_from(elements(2))


def belem_oracle(p, q):
    """Product through the word oracle for positions."""
    pos = oracles.cg_position(p.alpha, q.alpha)
    g1, k1 = pos[(p.b.i, q.b.i)]
    g2, k2 = pos[(p.bdual.i, q.bdual.i)]
    return BElem(g1, Monomial(*k1), Monomial(*k2)) if g1 == g2 else None


@given(elems2, elems2)
def test_product_matches_word_oracle(p, q):
    assert smul(p, q) == belem_oracle(p, q)


def test_unit_element():
    for p in elements(3):
        assert smul(UNIT, p) == p == smul(p, UNIT)


def test_coassociative():
    assert coassociativity_failures(4) == []


def test_associative():
    assert associativity_failures(2) == []


def test_no_counit_exists():
    assert counit_candidates(2) == []


def test_compatibility_square_frozen_failures():
    bad = bialgebra_square_failures(2)
    assert len(bad) == 19
    for x, y, lhs, rhs in bad:
        xy = smul(x, y)
        # the product is nonzero but leaves the top component, so the right side dies
        assert lhs is not None and rhs is None
        assert xy.alpha < x.alpha + y.alpha


def test_compatibility_square_holds_on_top_component():
    for x, y, lhs, rhs in bialgebra_square_failures(2):
        assert smul(x, y).alpha != x.alpha + y.alpha
    for x in elements(2):
        for y in elements(2):
            xy = smul(x, y)
            if xy is not None and xy.alpha == x.alpha + y.alpha:
                assert sdelta(xy) == (smul(sdelta(x)[0], sdelta(y)[0]), smul(sdelta(x)[1], sdelta(y)[1]))


def test_delta_uses_highest_node():
    x1, x2 = sdelta(BElem(1, X, X))
    assert x1 == BElem(1, X, u(1)) and x2 == BElem(1, u(1), X)


def test_counterexample():
    m = counterexample_comodule()
    assert verify_comodule(m) == []
    assert is_subcomodule(m, {"b"})
    assert not is_subcomodule(m, {"a"})
    assert hatC(m).carrier == ("b",)
    assert strict_realizations(m) == []


def test_crystal_coactions_verify():
    for n in range(4):
        assert verify_comodule(coaction_Balpha(n)) == []
    x = disjoint_union(build_Bn(2), build_Bn(0), build_Bn(1))
    m = crystal_coaction(x)
    assert verify_comodule(m) == []
    assert len(hatC(m).carrier) == 3


def test_induced_coaction_is_zero_off_the_top_component():
    for a in range(3):
        for b in range(3):
            top = top_component(a, b)
            for node, img in induced_coaction(a, b).items():
                assert (img is not None) == (node in top)


def test_sigma_product_breaks_compatibility_for_positive_blocks():
    for n in range(1, 3):
        for m in range(1, 3):
            x = BElem(n, Monomial(n, 0), Monomial(n, 0))
            y = BElem(m, Monomial(m, 0), Monomial(m, 0))
            lhs, rhs = sigma_square(x, y)
            assert lhs != rhs


def test_block_sizes():
    assert [len(block(a)) for a in range(4)] == [1, 4, 9, 16]
    assert pair_mul(BElem(1, Y, Y), BElem(1, X, X)) == UNIT


def test_hatC_of_Balpha_is_the_highest_node():
    for a in range(4):
        assert hatC(coaction_Balpha(a)).carrier == (u(a),)

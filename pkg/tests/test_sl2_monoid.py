import oracles
import pytest
from hypothesis import given, strategies as st

from crystal_bialgebra.crystal_core import Dual, Monomial
from crystal_bialgebra.sl2_monoid import QMonomial, UNIT, dual_mu, duality_failure, mu0, mu0_projection, mu_q

mono = st.builds(lambda i, j: Monomial(i, j), st.integers(0, 4), st.integers(0, 4))


@given(mono, mono)
def test_mu0_matches_word_oracle(a, b):
    want = oracles.mu0((a.i, a.j), (b.i, b.j))
    got = mu0(a, b)
    assert (None if got is None else (got.i, got.j)) == want
    assert got == mu0_projection(a, b)


@given(mono, mono, mono)
def test_mu0_is_associative(a, b, c):
    ab = mu0(a, b)
    bc = mu0(b, c)
    lhs = None if ab is None else mu0(ab, c)
    rhs = None if bc is None else mu0(a, bc)
    assert lhs == rhs


@given(mono)
def test_unit(a):
    assert mu0(UNIT, a) == a == mu0(a, UNIT)


def test_frozen_products():
    assert mu0(Monomial(0, 1), Monomial(1, 0)) is None
    assert mu0(Monomial(1, 0), Monomial(0, 1)) == Monomial(1, 1)
    assert mu_q(Monomial(0, 1), Monomial(1, 0)) == QMonomial(-1, Monomial(1, 1))


@given(mono, mono)
def test_mu_q_exponent_vanishes_exactly_when_mu0_is_nonzero(a, b):
    q = mu_q(a, b)
    assert q.mono == Monomial(a.i + b.i, a.j + b.j)
    assert (q.qexp == 0) == (mu0(a, b) is not None)


def test_dual_product_kills_xy():
    x, y = Monomial(1, 0), Monomial(0, 1)
    assert dual_mu(Dual(y), Dual(x)) == Dual(Monomial(1, 1))
    assert dual_mu(Dual(x), Dual(y)) is None
    with pytest.raises(TypeError):
        dual_mu(x, y)


def test_duality_failure_frozen():
    assert [duality_failure(n) for n in range(5)] == [False, True, True, True, True]

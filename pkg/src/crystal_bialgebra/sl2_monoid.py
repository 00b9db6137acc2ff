"""The monoid object on the sl2 chains B(n).

mu0 multiplies monomials at q = 0, mu_q keeps the power of q, and dual_mu is
the product on the duals, where xy = 0.  ``None`` stands for the zero.

>>> mu0(Monomial(2, 0), Monomial(1, 1))
Monomial(3, 1)
>>> mu0(Monomial(1, 1), Monomial(1, 1)) is None
True
"""

from dataclasses import dataclass

from .crystal_core import Dual, Monomial, build_Bn, component_node_sets, dual
from .tensor_ops import cg_position, tensor

UNIT = Monomial(0, 0)


def mu0(a, b):
    if a.j == 0:
        return Monomial(a.i + b.i, b.j)
    if b.i == 0:
        return Monomial(a.i, a.j + b.j)
    return None


def mu0_projection(a, b):
    """Image of a (x) b under projection of B(n) (x) B(m) onto the top component B(n+m)."""
    g, pos = cg_position(a.degree, b.degree)[(a, b)]
    return pos if g == a.degree + b.degree else None


@dataclass(frozen=True)
class QMonomial:
    qexp: int
    mono: Monomial

    def __str__(self):
        return f"q^{self.qexp} {self.mono}"


def mu_q(a, b):
    """x^i1 y^j1 . x^i2 y^j2 = q^(-j1 i2) x^(i1+i2) y^(j1+j2)."""
    if isinstance(a, QMonomial):
        qa, a = a.qexp, a.mono
    else:
        qa = 0
    if isinstance(b, QMonomial):
        qb, b = b.qexp, b.mono
    else:
        qb = 0
    return QMonomial(qa + qb - a.j * b.i, Monomial(a.i + b.i, a.j + b.j))


def dual_mu(a, b):
    """(x^i y^j)^v . (x^r y^s)^v, with inputs given as Dual(Monomial)."""
    if not (isinstance(a, Dual) and isinstance(b, Dual)):
        raise TypeError("dual_mu expects Dual monomials")
    (i, j), (r, s) = (a.node.i, a.node.j), (b.node.i, b.node.j)
    if i == 0:
        return Dual(Monomial(r, j + s))
    if s == 0:
        return Dual(Monomial(i + r, j))
    return None


def duality_failure(n):
    """True iff B(n) -> B(n) (x) B(n)^v (x) B(n) -> B(n) through the B(0) summands is zero.

    The inclusion picks the unique one-node component of B(n)^v (x) B(n); the
    projection keeps only the one-node component of B(n) (x) B(n)^v.
    """
    bn = build_Bn(n)
    dn = dual(bn)

    def singleton(c):
        parts = [p for p in component_node_sets(c) if len(p) == 1 and c.weight(p[0]) == 0]
        if len(parts) != 1:
            raise ValueError("expected exactly one B(0) summand")
        return parts[0][0]

    p, q = singleton(tensor(dn, bn))
    zero_node = singleton(tensor(bn, dn))
    images = []
    for b in bn.nodes:
        # b (x) b0 -> b (x) p (x) q -> [b (x) p projected to B(0)] (x) q -> q
        images.append(q if (b, p) == zero_node else None)
    return all(v is None for v in images)

"""Tensor products of crystals, decomposition, Clebsch-Gordan and the sl2 commutor.

Tensor nodes are pairs ``(b1, b2)``.  The rule is Kashiwara's: e acts on the
left factor when phi(b1) >= eps(b2), f acts on the left when phi(b1) > eps(b2).

>>> t = tensor(build_Bn(1), build_Bn(1))
>>> [len(p.component) for p in decompose(t).parts]
[3, 1]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .crystal_core import (
    Crystal,
    Monomial,
    StrictMorphism,
    build_Bn,
    chain,
    classify_irreducible_sl2,
    component_node_sets,
)


class TensorCrystal(Crystal):
    """A crystal on pairs of factor nodes; ``factors`` holds (left, right)."""

    @property
    def left(self):
        return self.factors[0]

    @property
    def right(self):
        return self.factors[1]


def tensor(a, b):
    if a.cartan != b.cartan:
        raise ValueError("Cartan mismatch")
    cartan = a.cartan
    nodes = tuple((x, y) for x in a.nodes for y in b.nodes)
    wt, f, e, eps, phi = {}, {}, {}, {}, {}
    for x, y in nodes:
        wt[(x, y)] = tuple(p + q for p, q in zip(a.wt[x], b.wt[y]))
        for i in cartan.index_set:
            ex, px = a.eps[(x, i)], a.phi[(x, i)]
            ey, py = b.eps[(y, i)], b.phi[(y, i)]
            eps[((x, y), i)] = max(ex, ey - cartan.pair(i, a.wt[x]))
            phi[((x, y), i)] = max(py, px + cartan.pair(i, b.wt[y]))
            if px >= ey:
                t = a.ei(x, i)
                te = (t, y) if t is not None else None
            else:
                t = b.ei(y, i)
                te = (x, t) if t is not None else None
            if px > ey:
                t = a.fi(x, i)
                tf = (t, y) if t is not None else None
            else:
                t = b.fi(y, i)
                tf = (x, t) if t is not None else None
            if te is not None:
                e[((x, y), i)] = te
            if tf is not None:
                f[((x, y), i)] = tf
    return TensorCrystal(cartan, nodes, wt, f, e, eps, phi, a.seminormal and b.seminormal, (a, b))


def tensor_power(c, n):
    """Left-nested n-fold tensor power, n >= 1."""
    out = c
    for _ in range(n - 1):
        out = tensor(out, c)
    return out


@dataclass(frozen=True, eq=False)
class DecompPart:
    hw: object
    component: Crystal
    witness: StrictMorphism = None
    n: int = None


@dataclass(frozen=True, eq=False)
class Decomposition:
    crystal: Crystal
    parts: tuple

    def sizes(self):
        return [len(p.component) for p in self.parts]

    def part_of(self, node):
        for k, p in enumerate(self.parts):
            if node in p.component.wt:
                return k
        raise KeyError(node)


def decompose(c):
    """Components with their highest-weight nodes; sl2 components are certified chains."""
    parts = []
    for nodes in component_node_sets(c):
        comp = c.restrict(nodes)
        hws = comp.highest_weight_nodes()
        if c.cartan.rank == 1:
            n, _, witness = classify_irreducible_sl2(comp)
            parts.append(DecompPart(chain(comp)[0], comp, witness, n))
        else:
            parts.append(DecompPart(hws[0] if hws else None, comp))
    return Decomposition(c, tuple(parts))


def cg_multiset(m, n):
    return [m + n - 2 * k for k in range(min(m, n) + 1)]


@lru_cache(maxsize=None)
def tensor_Bmn(m, n):
    return tensor(build_Bn(m), build_Bn(n))


@lru_cache(maxsize=None)
def cg_position(m, n):
    """Map b (x) d in B(m) (x) B(n) to (gamma, position in B(gamma)).

    The position of the k-th node below the component's highest node is
    x^k y^(gamma - k).  Components of sl2 tensor squares are multiplicity free,
    so gamma names the component.
    """
    t = tensor_Bmn(m, n)
    out = {}
    for nodes in component_node_sets(t):
        ch = chain(t.restrict(nodes))
        g = len(ch) - 1
        for k, node in enumerate(ch):
            out[node] = (g, Monomial(k, g - k))
    return out


def embed_Bn(n):
    """B(n) -> B(1)^(x)n, x^i y^j -> x (x) ... (x) x (x) y (x) ... (x) y."""
    if n < 1:
        raise ValueError("n must be at least 1")
    x, y = Monomial(1, 0), Monomial(0, 1)
    target = tensor_power(build_Bn(1), n)

    def nest(letters):
        out = letters[0]
        for l in letters[1:]:
            out = (out, l)
        return out

    src = build_Bn(n)
    assignment = {m: nest([x] * m.i + [y] * m.j) for m in src.nodes}
    return StrictMorphism(src, target, assignment)


def zeta(c):
    """Chain reversal on each component of an sl2 crystal."""
    if c.cartan.rank != 1:
        raise ValueError("zeta is defined for sl2 crystals only")
    out = {}
    for nodes in component_node_sets(c):
        ch = chain(c.restrict(nodes))
        for k, b in enumerate(ch):
            out[b] = ch[-1 - k]
    return out


def _check_elem(elem):
    if (
        not isinstance(elem, tuple)
        or len(elem) != 2
        or not all(isinstance(m, Monomial) for m in elem)
    ):
        raise ValueError("expected a pair of monomials x^i y^j (x) x^r y^s")


def commutor_sl2(elem):
    """Closed four-case formula for sigma: B(n) (x) B(m) -> B(m) (x) B(n)."""
    _check_elem(elem)
    (i, j), (r, s) = (elem[0].i, elem[0].j), (elem[1].i, elem[1].j)
    if j <= r and i <= s:
        return Monomial(i + r - j, s + j - i), Monomial(j, i)
    if j <= r:
        return Monomial(s + r - j, j), Monomial(i + j - s, s)
    if i <= s:
        return Monomial(i, r + s - i), Monomial(r, i + j - r)
    return Monomial(s, r), Monomial(i + r - s, j + s - r)


def commutor(c1, c2):
    """sigma(b1 (x) b2) = zeta(zeta(b2) (x) zeta(b1)) as a dict on c1 (x) c2."""
    z1, z2 = zeta(c1), zeta(c2)
    z21 = zeta(tensor(c2, c1))
    return {(b1, b2): z21[(z2[b2], z1[b1])] for b1 in c1.nodes for b2 in c2.nodes}


@lru_cache(maxsize=None)
def _commutor_table(n, m):
    return commutor(build_Bn(n), build_Bn(m))


def commutor_oracle(elem):
    _check_elem(elem)
    return _commutor_table(elem[0].degree, elem[1].degree)[elem]

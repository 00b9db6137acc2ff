"""The pointed-set object B = disjoint union of B(a) (x) B(-a) over a >= 0 (sl2).

An element is ``BElem(alpha, b, bdual)`` meaning b (x) bdual^v with both slots
in B(alpha); the dual slot is stored undualized.  ``None`` is the zero.  The
distinguished node u_alpha is the highest node y^alpha.

>>> sdelta(BElem(1, Monomial(1, 0), Monomial(1, 0)))
(BElem(1, x^1y^0, x^0y^1), BElem(1, x^0y^1, x^1y^0))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import DEFAULTS
from .crystal_core import (
    Dual,
    Monomial,
    build_Bn,
    chain,
    component_node_sets,
    dual,
    node_label,
)
from .tensor_ops import cg_position, commutor, tensor, tensor_Bmn

DEFAULT_TRUNCATION = DEFAULTS.truncation


@dataclass(frozen=True, order=True)
class BElem:
    alpha: int
    b: Monomial
    bdual: Monomial

    def __post_init__(self):
        if self.b.degree != self.alpha or self.bdual.degree != self.alpha:
            raise ValueError("both slots must lie in B(alpha)")

    def __repr__(self):
        return f"BElem({self.alpha}, {self.b}, {self.bdual})"

    def __str__(self):
        if self.alpha == 0:
            return "1"
        return f"{self.b}⊗({self.bdual})^∨"


def u(alpha):
    return Monomial(0, alpha)


UNIT = BElem(0, Monomial(0, 0), Monomial(0, 0))


def block(alpha):
    nodes = build_Bn(alpha).nodes
    return [BElem(alpha, b, c) for b in nodes for c in nodes]


def elements(max_alpha=DEFAULT_TRUNCATION):
    return [x for a in range(max_alpha + 1) for x in block(a)]


def sdelta(x):
    ua = u(x.alpha)
    return BElem(x.alpha, x.b, ua), BElem(x.alpha, ua, x.bdual)


def smul(x, y):
    """(b (x) b'^v)(d (x) d'^v) = (b.d) (x) (d'.b')^v when both land in the same component."""
    if x is None or y is None:
        return None
    pos = cg_position(x.alpha, y.alpha)
    g1, p1 = pos[(x.b, y.b)]
    g2, p2 = pos[(x.bdual, y.bdual)]
    if g1 != g2:
        return None
    return BElem(g1, p1, p2)


def smul_pair(p, q):
    """Product on B x B, where a pair with a zero entry is zero."""
    if p is None or q is None:
        return None
    a, b = smul(p[0], q[0]), smul(p[1], q[1])
    if a is None or b is None:
        return None
    return a, b


# ---------------------------------------------------------------- comodules


@dataclass(frozen=True, eq=False)
class SetComodule:
    """carrier: tuple of labels; coaction: label -> (BElem, label), or None for zero."""

    carrier: tuple
    coaction: dict

    def __call__(self, c):
        return self.coaction.get(c)


def verify_comodule(m):
    """List of problems; empty means coassociative and nowhere zero."""
    problems = []
    carrier = set(m.carrier)
    for c in m.carrier:
        img = m(c)
        if img is None:
            problems.append(f"{node_label(c)}: coaction is zero")
            continue
        x, c2 = img
        if c2 not in carrier:
            problems.append(f"{node_label(c)}: coaction leaves the carrier")
            continue
        x1, x2 = sdelta(x)
        nxt = m(c2)
        lhs = (x1, x2, c2)
        rhs = None if nxt is None else (x, nxt[0], nxt[1])
        if lhs != rhs:
            problems.append(f"{node_label(c)}: coassociativity fails")
    return problems


def is_subcomodule(m, subset):
    subset = set(subset)
    return all(m(c) is not None and m(c)[1] in subset for c in subset)


def restrict(m, subset):
    if not is_subcomodule(m, subset):
        raise ValueError("subset is not closed under the coaction")
    keep = tuple(c for c in m.carrier if c in set(subset))
    return SetComodule(keep, {c: m(c) for c in keep})


def crystal_coaction(x):
    """Coaction of an sl2 crystal whose components are chains.

    A node at position p of a component of size a+1 with highest node h goes
    to (p (x) u_a^v) (x) h.  For B(a) this is b -> (b (x) u_a^v) (x) u_a.
    """
    co = {}
    for nodes in component_node_sets(x):
        ch = chain(x.restrict(nodes))
        a = len(ch) - 1
        for k, node in enumerate(ch):
            co[node] = (BElem(a, Monomial(k, a - k), u(a)), ch[0])
    return SetComodule(tuple(x.nodes), co)


def coaction_Balpha(alpha):
    return crystal_coaction(build_Bn(alpha))


def hatC(m):
    keep = []
    for c in m.carrier:
        img = m(c)
        if img is not None and img[1] == c and img[0].b == u(img[0].alpha) and img[0].bdual == u(img[0].alpha):
            keep.append(c)
    return SetComodule(tuple(keep), {c: m(c) for c in keep})


def counterexample_comodule():
    """Carrier {a, b}: a -> (x (x) y^v) (x) b and b -> (y (x) y^v) (x) b."""
    x, y = Monomial(1, 0), Monomial(0, 1)
    return SetComodule(("a", "b"), {"a": (BElem(1, x, y), "b"), "b": (BElem(1, y, y), "b")})


def sl2_structures(carrier):
    """Every crystal on the labels that is a disjoint union of chains B(n)."""
    from .crystal_core import make_crystal, SL2

    carrier = list(carrier)

    def set_partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in set_partitions(rest):
            for k in range(len(part)):
                yield part[:k] + [[first] + part[k]] + part[k + 1:]
            yield [[first]] + part

    for parts in set_partitions(carrier):
        for orders in itertools.product(*[itertools.permutations(p) for p in parts]):
            f, wt = {}, {}
            for ch in orders:
                n = len(ch) - 1
                for k, node in enumerate(ch):
                    wt[node] = n - 2 * k
                    if k < n:
                        f[(node, "1")] = ch[k + 1]
            yield make_crystal(SL2, carrier, wt, f)


def strict_realizations(m):
    """Crystal structures inducing m's coaction in which every subcomodule is a subcrystal."""
    out = []
    subsets = [s for r in range(len(m.carrier) + 1) for s in itertools.combinations(m.carrier, r)]
    subs = [set(s) for s in subsets if is_subcomodule(m, s)]
    for c in sl2_structures(m.carrier):
        if crystal_coaction(c).coaction != m.coaction:
            continue
        closed = lambda s: all(
            t in s for b in s for t in (c.fi(b, "1"), c.ei(b, "1")) if t is not None
        )
        if all(closed(s) for s in subs):
            out.append(c)
    return out


# ---------------------------------------------------------------- global checks


def coassociativity_failures(max_alpha=DEFAULT_TRUNCATION):
    bad = []
    for x in elements(max_alpha):
        x1, x2 = sdelta(x)
        if sdelta(x1) + (x2,) != (x1,) + sdelta(x2):
            bad.append(x)
    return bad


def bialgebra_square_failures(max_alpha=2):
    """Pairs where Delta(mu(x, y)) != (mu (x) mu)(id (x) tau (x) id)(Delta x, Delta y)."""
    bad = []
    elems = elements(max_alpha)
    for x in elems:
        for y in elems:
            xy = smul(x, y)
            lhs = None if xy is None else sdelta(xy)
            rhs = smul_pair(sdelta(x), sdelta(y))
            if lhs != rhs:
                bad.append((x, y, lhs, rhs))
    return bad


def counit_candidates(max_alpha=2):
    """All pointed maps eps: B -> {b0, 0} satisfying both counit laws (exhaustive)."""
    elems = elements(max_alpha)
    found = []
    for values in itertools.product((False, True), repeat=len(elems)):
        eps = dict(zip(elems, values))
        ok = True
        for x in elems:
            x1, x2 = sdelta(x)
            left = x2 if eps[x1] else None
            right = x1 if eps[x2] else None
            if left != x or right != x:
                ok = False
                break
        if ok:
            found.append(eps)
    return found


def associativity_failures(max_alpha=2):
    elems = elements(max_alpha)
    bad = []
    for x in elems:
        for y in elems:
            xy = smul(x, y)
            for z in elems:
                if smul(xy, z) != smul(x, smul(y, z)):
                    bad.append((x, y, z))
    return bad


def induced_coaction(alpha, beta):
    """Coaction on B(alpha) (x) B(beta) obtained by multiplying Delta_alpha and Delta_beta."""
    out = {}
    ua, ub = u(alpha), u(beta)
    for node in tensor_Bmn(alpha, beta).nodes:
        b, d = node
        prod = smul(BElem(alpha, b, ua), BElem(beta, d, ub))
        out[node] = None if prod is None else (prod, (ua, ub))
    return out


def top_component(alpha, beta):
    t = tensor_Bmn(alpha, beta)
    return set(next(p for p in component_node_sets(t) if len(p) == alpha + beta + 1))


# ------------------------------------------------- product through the commutor


def _block_crystal(alpha):
    return tensor(build_Bn(alpha), dual(build_Bn(alpha)))


def _as_block_node(x):
    return (x.b, Dual(x.bdual))


def _from_block_node(alpha, node):
    return BElem(alpha, node[0], node[1].node)


def smul_sigma(x, y):
    """Product using the commutor in place of the swap.

    b (x) [b'^v (x) (d (x) d'^v)] -> b (x) [(d~ (x) d~'^v) (x) b~'^v] via sigma, then
    (b (x) d~) and (d~'^v (x) b~'^v) are projected as in ``smul``.
    """
    if x is None or y is None:
        return None
    a, bb = x.alpha, y.alpha
    da = dual(build_Bn(a))
    blk = _block_crystal(bb)
    sig = commutor(da, blk)
    (dd, ddp), bp = sig[(Dual(x.bdual), _as_block_node(y))]
    pos = cg_position(a, bb)
    g1, p1 = pos[(x.b, dd)]
    # d~'^v (x) b~'^v in B(-beta) (x) B(-alpha) is the dual of b~' (x) d~' in B(alpha) (x) B(beta)
    g2, p2 = pos[(bp.node, ddp.node)]
    if g1 != g2:
        return None
    return BElem(g1, p1, p2)


def sigma_square(x, y):
    """Both sides of the compatibility square with sigma in place of tau."""
    xy = smul_sigma(x, y)
    lhs = None if xy is None else sdelta(xy)
    x1, x2 = sdelta(x)
    y1, y2 = sdelta(y)
    c1, c2 = _block_crystal(x.alpha), _block_crystal(y.alpha)
    s2, s1 = commutor(c1, c2)[(_as_block_node(x2), _as_block_node(y1))]
    y1s, x2s = _from_block_node(y.alpha, s2), _from_block_node(x.alpha, s1)
    a, b = smul_sigma(x1, y1s), smul_sigma(x2s, y2)
    rhs = None if a is None or b is None else (a, b)
    return lhs, rhs

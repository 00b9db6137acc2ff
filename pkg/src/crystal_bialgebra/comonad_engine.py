"""Pointed sets, the adjunction F -| G and the comonad U = FG, truncated at a cutoff.

An element of U(A) is ``UElem(alpha, f, node)``: a node of B(alpha) tagged by a
nonzero pointed map f: B(alpha) -> A, stored as the tuple of images in chain
order (``None`` is zero).  Images under Delta have tags that are again UElems,
so U(U(A)) is only ever touched elementwise.

>>> len(U(PointedSet(("*",)), 1))
7
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .config import DEFAULTS
from .crystal_core import (
    SL2,
    GuardError,
    build_Bn,
    component_node_sets,
    enumerate_strict_morphisms,
    find_isomorphism,
    make_crystal,
)
from .set_bialgebra import BElem, SetComodule, u
from .tensor_ops import cg_position

DEFAULT_GUARD = DEFAULTS.guard


@dataclass(frozen=True)
class PointedSet:
    elements: tuple

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("labels must be unique")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def smash(a, b):
    """The monoidal product of pointed sets: pairs of nonzero elements."""
    return PointedSet(tuple((x, y) for x in a for y in b))


UNIT_SET = PointedSet(("*",))


@dataclass(frozen=True)
class UElem:
    alpha: int
    f: tuple
    node: object

    def __post_init__(self):
        if len(self.f) != self.alpha + 1:
            raise ValueError("index map must list one image per node of B(alpha)")
        if all(v is None for v in self.f):
            raise ValueError("index map must be nonzero")

    def index(self, b):
        return self.f[_nodes(self.alpha).index(b)]

    def __str__(self):
        imgs = ",".join("0" if v is None else str(v) for v in self.f)
        return f"({self.node})_[{imgs}]"


@lru_cache(maxsize=None)
def _nodes(alpha):
    return build_Bn(alpha).nodes


def _make(alpha, f, node):
    """UElem, or None when the index map is zero."""
    f = tuple(f)
    return None if all(v is None for v in f) else UElem(alpha, f, node)


def guard_size(n, cutoff):
    return sum((n + 1) ** (a + 1) for a in range(cutoff + 1))


def check_guard(n, cutoff, guard=DEFAULT_GUARD):
    size = guard_size(n, cutoff)
    if size > guard:
        raise GuardError(f"enumeration needs {size} maps, above the bound {guard}")


def nonzero_maps(alpha, a):
    """Pointed maps B(alpha) -> a other than the zero map."""
    for f in itertools.product((None,) + tuple(a), repeat=alpha + 1):
        if any(v is not None for v in f):
            yield f


def U(a, cutoff, guard=DEFAULT_GUARD):
    check_guard(len(a), cutoff, guard)
    return [UElem(al, f, b) for al in range(cutoff + 1) for f in nonzero_maps(al, a) for b in _nodes(al)]


def epsilon(x):
    return None if x is None else x.index(x.node)


def delta(x):
    if x is None:
        return None
    return UElem(x.alpha, tuple(UElem(x.alpha, x.f, b) for b in _nodes(x.alpha)), x.node)


def U_map(g, x):
    """U(g) on one element, for a pointed map g given as a callable."""
    if x is None:
        return None
    return _make(x.alpha, (None if v is None else g(v) for v in x.f), x.node)


def comonad_laws(a, cutoff, delta_fn=delta, guard=DEFAULT_GUARD):
    """Failure counts of the counit laws and coassociativity over U(a)."""
    out = {"counit_left": 0, "counit_right": 0, "coassociativity": 0}
    for x in U(a, cutoff, guard):
        d = delta_fn(x)
        if epsilon(d) != x:
            out["counit_left"] += 1
        if U_map(epsilon, d) != x:
            out["counit_right"] += 1
        if delta_fn(d) != U_map(delta_fn, d):
            out["coassociativity"] += 1
    return out


def delta_constant(x):
    """A corrupted Delta whose index map is constant at the top node's element."""
    top = _nodes(x.alpha)[0]
    return UElem(x.alpha, (UElem(x.alpha, x.f, top),) * (x.alpha + 1), x.node)


def delta_collapsed(x):
    """A corrupted Delta that moves every element to the top node."""
    return UElem(x.alpha, tuple(UElem(x.alpha, x.f, b) for b in _nodes(x.alpha)), _nodes(x.alpha)[0])


# ------------------------------------------------------------- G and adjunction


def G(x, cutoff, guard=DEFAULT_GUARD):
    """The crystal whose nodes are the elements of U(x); copy B(alpha)_f carries B(alpha)."""
    nodes = U(x, cutoff, guard)
    wt, f_edges = {}, {}
    for e in nodes:
        c = build_Bn(e.alpha)
        wt[e] = c.weight(e.node)
        t = c.fi(e.node, "1")
        if t is not None:
            f_edges[(e, "1")] = UElem(e.alpha, e.f, t)
    return make_crystal(SL2, nodes, wt, f_edges)


def G_map(g, x, cutoff):
    """G(g) as an assignment on the nodes of G(x)."""
    return {e: U_map(g, e) for e in U(x, cutoff)}


def pointed_maps(src, tgt):
    for imgs in itertools.product((None,) + tuple(tgt), repeat=len(src)):
        yield dict(zip(src, imgs))


def _component_isos(x, cutoff):
    """(alpha, iota) per component of x with iota: B(alpha) -> component."""
    out = []
    for nodes in component_node_sets(x):
        comp = x.restrict(nodes)
        alpha = len(nodes) - 1
        if alpha > cutoff:
            raise ValueError(f"component B({alpha}) is above the cutoff {cutoff}")
        iso = find_isomorphism(build_Bn(alpha), comp)
        if iso is None:
            raise ValueError("crystal is not a disjoint union of B(alpha)")
        out.append((alpha, iso))
    return out


def rho(psi):
    """Hom(x, G y) -> Hom(F x, y): compose with the counit."""
    return {b: epsilon(psi(b)) for b in psi.source.nodes if epsilon(psi(b)) is not None}


def rho_inverse(h, x, cutoff):
    """Hom(F x, y) -> Hom(x, G y): on a copy of B(alpha) use the index map h . iota."""
    out = {}
    for alpha, iota in _component_isos(x, cutoff):
        f = tuple(h.get(iota(b)) for b in _nodes(alpha))
        for b in _nodes(alpha):
            e = _make(alpha, f, b)
            if e is not None:
                out[iota(b)] = e
    return out


def adjunction_check(x, y, cutoff, y2=None, guard=DEFAULT_GUARD):
    """Bijection between strict morphisms x -> G(y) and pointed maps F(x) -> y, natural in y."""
    gy = G(y, cutoff, guard)
    morphs = enumerate_strict_morphisms(x, gy, bound=guard)
    set_maps = list(pointed_maps(x.nodes, y))
    images = [rho(m) for m in morphs]
    keyed = {tuple(sorted((str(k), str(v)) for k, v in i.items())) for i in images}
    ok = len(morphs) == len(set_maps) == len(keyed)
    for h in set_maps:
        back = rho_inverse({k: v for k, v in h.items() if v is not None}, x, cutoff)
        if rho_to_dict(back) != {k: v for k, v in h.items() if v is not None}:
            ok = False
    if y2 is not None:
        for g in pointed_maps(y.elements, y2):
            gf = lambda v, g=g: g[v]
            for m in morphs:
                lhs = rho(_Assign(x, {b: U_map(gf, m(b)) for b in x.nodes}))
                rhs = {b: gf(v) for b, v in rho(m).items() if gf(v) is not None}
                if lhs != rhs:
                    ok = False
    return ok


def rho_to_dict(assign):
    return {b: epsilon(e) for b, e in assign.items() if epsilon(e) is not None}


@dataclass(frozen=True, eq=False)
class _Assign:
    source: object
    assignment: dict

    def __call__(self, b):
        return self.assignment.get(b)


# --------------------------------------------------------------- coalgebras


def zeta_coalgebra(x, cutoff):
    """b -> (iota^-1 b)_iota where iota includes B(alpha) as b's component."""
    co = {}
    for alpha, iota in _component_isos(x, cutoff):
        f = tuple(iota(b) for b in _nodes(alpha))
        for b in _nodes(alpha):
            co[iota(b)] = UElem(alpha, f, b)
    return co


def coalgebra_failures(carrier, zeta):
    bad = []
    for b in carrier:
        z = zeta.get(b)
        if z is None:
            bad.append((b, "coaction is zero"))
            continue
        if epsilon(z) != b:
            bad.append((b, "counit"))
        if delta(z) != U_map(lambda v: zeta.get(v), z):
            bad.append((b, "coassociativity"))
    return bad


def recover_structure(carrier, zeta):
    """Crystal on the carrier: f(b) = eps(f applied to the node of zeta(b)), wt(b) = wt of that node."""
    carrier = tuple(carrier)
    bad = coalgebra_failures(carrier, zeta)
    if bad:
        raise ValueError(f"not a U-coalgebra: {bad[0][0]} ({bad[0][1]})")
    wt, f_edges = {}, {}
    for b in carrier:
        z = zeta[b]
        c = build_Bn(z.alpha)
        wt[b] = c.weight(z.node)
        t = c.fi(z.node, "1")
        if t is not None:
            img = z.index(t)
            if img is not None:
                f_edges[(b, "1")] = img
    return make_crystal(SL2, carrier, wt, f_edges)


def theta(x):
    """(b)_f -> (b (x) u^v, f(u)) in the set bialgebra times A; None if f(u) is zero."""
    if x is None:
        return None
    top = u(x.alpha)
    v = x.index(top)
    return None if v is None else (BElem(x.alpha, x.node, top), v)


def theta_pushforward(carrier, zeta):
    """The set comodule obtained by composing zeta with theta."""
    return SetComodule(tuple(carrier), {b: theta(zeta[b]) for b in carrier})


def theta_naturality_failures(a, a2, cutoff):
    bad = []
    elems = U(a, cutoff)
    for g in pointed_maps(a.elements, a2):
        gf = g.get
        for x in elems:
            lhs = theta(U_map(gf, x))
            t = theta(x)
            rhs = None if t is None or gf(t[1]) is None else (t[0], gf(t[1]))
            if lhs != rhs:
                bad.append((x, g))
    return bad


# ------------------------------------------------------------ monoidal structure


@lru_cache(maxsize=None)
def _inverse_positions(alpha, beta):
    out = {}
    for pair, (g, c) in cg_position(alpha, beta).items():
        out.setdefault(g, {})[c] = pair
    return out


def chi(x, y):
    """b_f (x) b'_g -> (theta(b (x) b'))_{(f (x) g) . theta^-1} on the component of b (x) b'."""
    if x is None or y is None:
        return None
    g, c = cg_position(x.alpha, y.alpha)[(x.node, y.node)]
    inv = _inverse_positions(x.alpha, y.alpha)[g]
    imgs = []
    for n in _nodes(g):
        p, q = inv[n]
        fp, gq = x.index(p), y.index(q)
        imgs.append(None if fp is None or gq is None else (fp, gq))
    return _make(g, imgs, c)


def chi_unit():
    return UElem(0, ("*",), _nodes(0)[0])


def chi_square_failures(a, b, cutoff):
    """Delta . chi = U(chi) . chi . (Delta (x) Delta) on U(a) x U(b)."""
    bad = []
    for x in U(a, cutoff):
        for y in U(b, cutoff):
            lhs = delta(chi(x, y))
            mid = chi(delta(x), delta(y))
            rhs = U_map(lambda p: chi(*p), mid)
            if lhs != rhs:
                bad.append((x, y))
    return bad


def unit_triangle_failures(a, cutoff):
    """Both triangles: chi(x, unit) and chi(unit, x) are x after dropping the * factor."""
    bad = []
    unit = chi_unit()
    right = lambda p: p[0]
    left = lambda p: p[1]
    for x in U(a, cutoff):
        if U_map(right, chi(x, unit)) != x:
            bad.append(("right", x))
        if U_map(left, chi(unit, x)) != x:
            bad.append(("left", x))
    return bad


def tensor_coaction(zx, zy):
    """Coaction on pairs of carriers: (b, b') -> chi(zeta b, zeta b')."""
    return {(b, c): chi(zb, zc) for b, zb in zx.items() for c, zc in zy.items()}


# ------------------------------------------------------------------ equalisers


def equaliser(f, g):
    """Union of the source components on which f and g agree, with the F-image check."""
    if f.source is not g.source and f.source.nodes != g.source.nodes:
        raise ValueError("morphisms are not parallel")
    if f.target.nodes != g.target.nodes:
        raise ValueError("morphisms are not parallel")
    keep = []
    for nodes in component_node_sets(f.source):
        if all(f(b) == g(b) for b in nodes):
            keep.extend(nodes)
    sub = f.source.restrict(keep)
    pointwise = {b for b in f.source.nodes if f(b) == g(b)}
    return sub, pointwise == set(keep)

"""Finite Kashiwara crystals: Cartan data, validation, strict morphisms, duals.

Nodes are arbitrary hashable values.  The library uses a few node shapes:
``Monomial`` for the sl2 chains B(n), ``Dual`` for dual crystals, plain
2-tuples for tensor products and ``Tagged`` for disjoint unions.  Every node
has a stable string label given by :func:`node_label`.

>>> b = build_Bn(2)
>>> [node_label(n) for n in b.nodes]
['x^0y^2', 'x^1y^1', 'x^2y^0']
>>> validate(b)
[]
"""

from __future__ import annotations

import itertools
import json
import math
from collections import deque
from dataclasses import dataclass, field

from .config import DEFAULTS

NEG_INF = -math.inf


class GuardError(Exception):
    """Raised when an enumeration would exceed its configured size bound."""


@dataclass(frozen=True)
class CartanDatum:
    index_set: tuple
    matrix: tuple

    def __post_init__(self):
        n = len(self.index_set)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("pairing matrix must be |I| x |I|")
        for a in range(n):
            for b in range(n):
                v = self.matrix[a][b]
                if a == b and v != 2:
                    raise ValueError("diagonal entries must equal 2")
                if a != b and v > 0:
                    raise ValueError("off-diagonal entries must be <= 0")

    @property
    def rank(self):
        return len(self.index_set)

    def idx(self, i):
        return self.index_set.index(i)

    def pair(self, i, weight):
        """lambda_i applied to a weight in fundamental-weight coordinates."""
        return weight[self.idx(i)]

    def alpha(self, j):
        """The simple root alpha_j as a coordinate vector."""
        col = self.idx(j)
        return tuple(row[col] for row in self.matrix)

    def to_json(self):
        return {"index_set": list(self.index_set), "matrix": [list(r) for r in self.matrix]}

    @classmethod
    def from_json(cls, d):
        return cls(tuple(str(i) for i in d["index_set"]), tuple(tuple(int(v) for v in r) for r in d["matrix"]))


SL2 = CartanDatum(("1",), ((2,),))


@dataclass(frozen=True, order=True)
class Monomial:
    """The sl2 basis element x^i y^j of B(i+j)."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("exponents must be nonnegative")

    @property
    def degree(self):
        return self.i + self.j

    def __str__(self):
        return f"x^{self.i}y^{self.j}"

    def __repr__(self):
        return f"Monomial({self.i}, {self.j})"


@dataclass(frozen=True)
class Dual:
    node: object

    def __str__(self):
        return f"({node_label(self.node)})^∨"


@dataclass(frozen=True)
class Tagged:
    tag: int
    node: object

    def __str__(self):
        return f"{node_label(self.node)}#{self.tag}"


def node_label(node):
    if isinstance(node, tuple):
        return "⊗".join(node_label(n) for n in node)
    return str(node)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class Crystal:
    """A finite crystal.  ``f``/``e`` map (node, color) to node; absent keys are the zero."""

    cartan: CartanDatum
    nodes: tuple
    wt: dict
    f: dict
    e: dict
    eps: dict
    phi: dict
    seminormal: bool = True
    factors: tuple = field(default=())

    def __len__(self):
        return len(self.nodes)

    @property
    def colors(self):
        return self.cartan.index_set

    def fi(self, b, i):
        return self.f.get((b, i))

    def ei(self, b, i):
        return self.e.get((b, i))

    def weight(self, b):
        """The weight coordinate for sl2, or the full vector otherwise."""
        w = self.wt[b]
        return w[0] if len(w) == 1 else w

    def highest_weight_nodes(self):
        return [b for b in self.nodes if all(self.ei(b, i) is None for i in self.colors)]

    def restrict(self, keep):
        keep = set(keep)
        nodes = tuple(b for b in self.nodes if b in keep)
        return Crystal(
            self.cartan,
            nodes,
            {b: self.wt[b] for b in nodes},
            {k: v for k, v in self.f.items() if k[0] in keep and v in keep},
            {k: v for k, v in self.e.items() if k[0] in keep and v in keep},
            {k: v for k, v in self.eps.items() if k[0] in keep},
            {k: v for k, v in self.phi.items() if k[0] in keep},
            self.seminormal,
            self.factors,
        )


def string_counts(nodes, colors, f, e):
    """Seminormal epsilon/phi: lengths of e- and f-strings."""
    eps, phi = {}, {}
    for b in nodes:
        for i in colors:
            for op, out in ((e, eps), (f, phi)):
                n, c, seen = 0, b, {b}
                while (c, i) in op:
                    c = op[(c, i)]
                    if c in seen:
                        raise ValueError(f"cyclic {i}-string through {node_label(b)}")
                    seen.add(c)
                    n += 1
                out[(b, i)] = n
    return eps, phi


def make_crystal(cartan, nodes, wt, f_edges, eps=None, phi=None, e_edges=None, seminormal=True):
    """Assemble a crystal from f-edges; e is their inverse unless given explicitly.

    ``wt`` values may be ints for rank one.  Missing eps/phi are the string counts.
    """
    nodes = tuple(nodes)
    wt = {b: (w,) if isinstance(w, int) else tuple(w) for b, w in wt.items()}
    f = dict(f_edges)
    if e_edges is None:
        e = {}
        for (b, i), c in f.items():
            e.setdefault((c, i), b)
    else:
        e = dict(e_edges)
    if eps is None or phi is None:
        ce, cp = string_counts(nodes, cartan.index_set, f, e)
        eps = ce if eps is None else eps
        phi = cp if phi is None else phi
    return Crystal(cartan, nodes, wt, f, e, dict(eps), dict(phi), seminormal)


def build_Bn(n):
    """The sl2 crystal B(n) = {x^i y^(n-i)} with highest node y^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    nodes = [Monomial(k, n - k) for k in range(n + 1)]
    f = {(nodes[k], "1"): nodes[k + 1] for k in range(n)}
    wt = {m: n - 2 * m.i for m in nodes}
    eps = {(m, "1"): m.i for m in nodes}
    phi = {(m, "1"): m.j for m in nodes}
    return make_crystal(SL2, nodes, wt, f, eps, phi)


def build_T(lam, cartan=SL2):
    """The singleton crystal T_lambda with eps = phi = -inf."""
    w = (lam,) if isinstance(lam, int) else tuple(lam)
    label = f"t_{lam}" if isinstance(lam, int) else "t_(" + ",".join(map(str, w)) + ")"
    eps = {(label, i): NEG_INF for i in cartan.index_set}
    return make_crystal(cartan, [label], {label: w}, {}, eps, dict(eps), seminormal=False)


def disjoint_union(*crystals):
    if not crystals:
        return make_crystal(SL2, [], {}, {})
    cartan = crystals[0].cartan
    nodes, wt, f, e, eps, phi = [], {}, {}, {}, {}, {}
    for k, c in enumerate(crystals):
        if c.cartan != cartan:
            raise ValueError("Cartan mismatch")
        tag = lambda b, k=k: Tagged(k, b)
        for b in c.nodes:
            nodes.append(tag(b))
            wt[tag(b)] = c.wt[b]
        for (b, i), v in c.f.items():
            f[(tag(b), i)] = tag(v)
        for (b, i), v in c.e.items():
            e[(tag(b), i)] = tag(v)
        for (b, i), v in c.eps.items():
            eps[(tag(b), i)] = v
        for (b, i), v in c.phi.items():
            phi[(tag(b), i)] = v
    return Crystal(cartan, tuple(nodes), wt, f, e, eps, phi, all(c.seminormal for c in crystals))


@dataclass(frozen=True)
class Violation:
    node: str
    color: str
    axiom: str
    detail: str = ""


def validate(c):
    """List every violated crystal axiom; empty means valid."""
    out = []
    node_set = set(c.nodes)
    for (b, i), t in list(c.f.items()) + list(c.e.items()):
        if b not in node_set or t not in node_set:
            out.append(Violation(node_label(b), i, "edge-endpoint", node_label(t)))
    for b in c.nodes:
        w = c.wt.get(b)
        if w is None or len(w) != c.cartan.rank:
            out.append(Violation(node_label(b), "", "weight-shape"))
            continue
        for i in c.colors:
            ep, ph = c.eps.get((b, i)), c.phi.get((b, i))
            if ep is None or ph is None:
                out.append(Violation(node_label(b), i, "eps-phi-missing"))
                continue
            if ph != c.cartan.pair(i, w) + ep:
                out.append(Violation(node_label(b), i, "weight", f"phi={ph} eps={ep} wt={w}"))
            fb, eb = c.fi(b, i), c.ei(b, i)
            if ph == NEG_INF and (fb is not None or eb is not None):
                out.append(Violation(node_label(b), i, "minus-infinity", "operators must vanish"))
            if fb is not None and fb in node_set:
                if c.ei(fb, i) != b:
                    out.append(Violation(node_label(b), i, "bijectivity", f"e(f b) != b for f b = {node_label(fb)}"))
                if c.wt[fb] != _sub(w, c.cartan.alpha(i)):
                    out.append(Violation(node_label(b), i, "f-weight-shift"))
                if c.eps.get((fb, i)) != ep + 1 or c.phi.get((fb, i)) != ph - 1:
                    out.append(Violation(node_label(b), i, "f-string-shift"))
            if eb is not None and eb in node_set:
                if c.fi(eb, i) != b:
                    out.append(Violation(node_label(b), i, "bijectivity", f"f(e b) != b for e b = {node_label(eb)}"))
                if c.wt[eb] != _add(w, c.cartan.alpha(i)):
                    out.append(Violation(node_label(b), i, "e-weight-shift"))
                if c.eps.get((eb, i)) != ep - 1 or c.phi.get((eb, i)) != ph + 1:
                    out.append(Violation(node_label(b), i, "e-string-shift"))
    if c.seminormal and not out:
        try:
            ce, cp = string_counts(c.nodes, c.colors, c.f, c.e)
        except ValueError as exc:
            return out + [Violation("", "", "seminormal", str(exc))]
        for key in ce:
            if c.eps[key] != ce[key] or c.phi[key] != cp[key]:
                out.append(Violation(node_label(key[0]), key[1], "seminormal"))
    return out


def dual(c):
    """Reverse all arrows: e(b^v) = (f b)^v, wt(b^v) = -wt(b), eps and phi swap."""
    d = Dual
    return Crystal(
        c.cartan,
        tuple(d(b) for b in c.nodes),
        {d(b): tuple(-x for x in w) for b, w in c.wt.items()},
        {(d(b), i): d(v) for (b, i), v in c.e.items()},
        {(d(b), i): d(v) for (b, i), v in c.f.items()},
        {(d(b), i): v for (b, i), v in c.phi.items()},
        {(d(b), i): v for (b, i), v in c.eps.items()},
        c.seminormal,
    )


def _neighbours(c, b):
    for i in c.colors:
        for op in (c.f, c.e):
            t = op.get((b, i))
            if t is not None:
                yield t


def _component_sort_key(c, comp):
    hw = [b for b in comp if all(c.ei(b, i) is None for i in c.colors)] or list(comp)
    top = min(hw, key=node_label)
    return tuple(-x for x in c.wt[top]), node_label(top)


def component_node_sets(c):
    seen, parts = set(), []
    for b in c.nodes:
        if b in seen:
            continue
        comp, queue = [], deque([b])
        seen.add(b)
        while queue:
            n = queue.popleft()
            comp.append(n)
            for t in _neighbours(c, n):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        parts.append(comp)
    parts.sort(key=lambda comp: _component_sort_key(c, comp))
    return parts


def components(c):
    """Connected components, ordered by highest weight (descending) then label."""
    return [c.restrict(p) for p in component_node_sets(c)]


@dataclass(frozen=True, eq=False)
class StrictMorphism:
    source: Crystal
    target: Crystal
    assignment: dict

    def __call__(self, b):
        return self.assignment.get(b)

    def is_zero(self):
        return not self.assignment

    def is_strict(self):
        s, t = self.source, self.target
        for b in s.nodes:
            m = self(b)
            if m is not None:
                if s.wt[b] != t.wt[m]:
                    return False
                for i in s.colors:
                    if s.eps[(b, i)] != t.eps[(m, i)] or s.phi[(b, i)] != t.phi[(m, i)]:
                        return False
            for i in s.colors:
                for sop, top in ((s.f, t.f), (s.e, t.e)):
                    sb = sop.get((b, i))
                    lhs = self(sb) if sb is not None else None
                    rhs = top.get((m, i)) if m is not None else None
                    if lhs != rhs:
                        return False
        return True

    def is_injective(self):
        vals = list(self.assignment.values())
        return len(vals) == len(set(vals))

    def is_isomorphism(self):
        return (
            len(self.assignment) == len(self.source) == len(self.target)
            and self.is_injective()
            and self.is_strict()
        )

    def compose(self, other):
        """self after other."""
        a = {}
        for b, m in other.assignment.items():
            v = self(m)
            if v is not None:
                a[b] = v
        return StrictMorphism(other.source, self.target, a)


def _propagate(a, b, root, image):
    """Extend root -> image along edges; None if strictness fails on the component."""
    amap = {root: image}
    queue = deque([root])
    while queue:
        n = queue.popleft()
        m = amap[n]
        if a.wt[n] != b.wt[m]:
            return None
        for i in a.colors:
            if a.eps[(n, i)] != b.eps[(m, i)] or a.phi[(n, i)] != b.phi[(m, i)]:
                return None
            for aop, bop in ((a.f, b.f), (a.e, b.e)):
                n2, m2 = aop.get((n, i)), bop.get((m, i))
                if (n2 is None) != (m2 is None):
                    return None
                if n2 is None:
                    continue
                if n2 in amap:
                    if amap[n2] != m2:
                        return None
                else:
                    amap[n2] = m2
                    queue.append(n2)
    return amap


DEFAULT_MORPHISM_BOUND = DEFAULTS.morphism_bound


def enumerate_strict_morphisms(a, b, bound=DEFAULT_MORPHISM_BOUND):
    """All strict morphisms a -> b, zero first.

    A strict morphism is zero on a whole component or determined by the image
    of any one node, so each component contributes at most |b| + 1 choices.
    """
    if a.cartan != b.cartan:
        raise ValueError("Cartan mismatch")
    if len(a) * len(b) > bound:
        raise GuardError(f"|a|*|b| = {len(a) * len(b)} exceeds bound {bound}")
    per_comp = []
    for comp in component_node_sets(a):
        root = comp[0]
        options = [{}]
        for t in b.nodes:
            m = _propagate(a, b, root, t)
            if m is not None:
                options.append(m)
        per_comp.append(options)
    out = []
    for choice in itertools.product(*per_comp):
        assignment = {}
        for part in choice:
            assignment.update(part)
        out.append(StrictMorphism(a, b, assignment))
    return out


def find_isomorphism(c1, c2):
    """A crystal isomorphism c1 -> c2 as a StrictMorphism, or None."""
    if c1.cartan != c2.cartan or len(c1) != len(c2):
        return None
    comps2 = component_node_sets(c2)
    used = [False] * len(comps2)
    assignment = {}
    for comp in component_node_sets(c1):
        found = False
        for k, comp2 in enumerate(comps2):
            if used[k] or len(comp2) != len(comp):
                continue
            for t in comp2:
                m = _propagate(c1, c2, comp[0], t)
                if m is not None and len(m) == len(comp) and len(set(m.values())) == len(comp):
                    assignment.update(m)
                    used[k] = found = True
                    break
            if found:
                break
        if not found:
            return None
    return StrictMorphism(c1, c2, assignment)


def is_isomorphic(c1, c2):
    return find_isomorphism(c1, c2) is not None


def chain(c):
    """Nodes of a connected sl2 crystal from the top, or raise if it is not a chain."""
    if c.cartan.rank != 1:
        raise ValueError("not an sl2 crystal")
    i = c.colors[0]
    tops = c.highest_weight_nodes()
    if len(tops) != 1:
        raise ValueError(f"expected one highest-weight node, found {len(tops)}")
    out = [tops[0]]
    while c.fi(out[-1], i) is not None:
        out.append(c.fi(out[-1], i))
        if len(out) > len(c):
            raise ValueError("f-string does not terminate")
    if len(out) != len(c):
        raise ValueError("not a single chain")
    return out


def classify_irreducible_sl2(c):
    """Return (n, lam, witness) with c isomorphic to B(n) (x) T_(lam - n).

    n is |c| - 1 and lam is the weight of the highest node; the witness is the
    node assignment from B(n) (x) T_(lam - n) onto c along the chain.
    """
    if len(component_node_sets(c)) != 1:
        raise ValueError("crystal is not connected")
    nodes = chain(c)
    n = len(nodes) - 1
    lam = c.wt[nodes[0]][0]
    from .tensor_ops import tensor

    src = tensor(build_Bn(n), build_T(lam - n))
    t = build_T(lam - n).nodes[0]
    assignment = {(Monomial(k, n - k), t): nodes[k] for k in range(n + 1)}
    return n, lam, StrictMorphism(src, c, assignment)


def _fmt_inf(v):
    return "-inf" if v == NEG_INF else v


def _parse_inf(v):
    if v in ("-inf", "-Infinity", None):
        return NEG_INF
    return int(v)


def to_json(c):
    out = {
        "cartan": c.cartan.to_json(),
        "nodes": [{"id": node_label(b), "wt": list(c.wt[b])} for b in c.nodes],
        "edges": [
            {"i": i, "from": node_label(b), "to": node_label(c.f[(b, i)])}
            for b in c.nodes
            for i in c.colors
            if (b, i) in c.f
        ],
        "seminormal": c.seminormal,
    }
    if not c.seminormal:
        out["eps_phi"] = [
            {"id": node_label(b), "i": i, "eps": _fmt_inf(c.eps[(b, i)]), "phi": _fmt_inf(c.phi[(b, i)])}
            for b in c.nodes
            for i in c.colors
        ]
    return out


def from_json(d):
    """Load the canonical JSON format; nodes become their string ids.

    An optional "e_edges" list makes the e-maps explicit instead of derived.
    """
    cartan = CartanDatum.from_json(d["cartan"])
    nodes = [str(n["id"]) for n in d["nodes"]]
    if len(set(nodes)) != len(nodes):
        raise ValueError("duplicate node ids")
    wt = {str(n["id"]): tuple(int(v) for v in n["wt"]) for n in d["nodes"]}
    f = {(str(x["from"]), str(x["i"])): str(x["to"]) for x in d.get("edges", [])}
    e_edges = None
    if "e_edges" in d:
        e_edges = {(str(x["from"]), str(x["i"])): str(x["to"]) for x in d["e_edges"]}
    eps = phi = None
    if d.get("eps_phi"):
        eps = {(str(x["id"]), str(x["i"])): _parse_inf(x["eps"]) for x in d["eps_phi"]}
        phi = {(str(x["id"]), str(x["i"])): _parse_inf(x["phi"]) for x in d["eps_phi"]}
    for b in nodes:
        if len(wt[b]) != cartan.rank:
            raise ValueError(f"weight of {b} has wrong length")
    for (b, i), t in f.items():
        if b not in wt or t not in wt or i not in cartan.index_set:
            raise ValueError(f"edge {b} -{i}-> {t} references unknown node or color")
    if eps is None:
        # string counts need acyclic strings; fall back to zero on a cycle so validate can report it
        try:
            return make_crystal(cartan, nodes, wt, f, e_edges=e_edges, seminormal=bool(d.get("seminormal", True)))
        except ValueError:
            zero = {(b, i): 0 for b in nodes for i in cartan.index_set}
            return make_crystal(cartan, nodes, wt, f, zero, dict(zero), e_edges, bool(d.get("seminormal", True)))
    return make_crystal(cartan, nodes, wt, f, eps, phi, e_edges, bool(d.get("seminormal", False)))


def dumps(c):
    return json.dumps(to_json(c), ensure_ascii=False, sort_keys=True)


def to_dot(c):
    ids = {b: f"n{k}" for k, b in enumerate(c.nodes)}
    lines = ["digraph crystal {"]
    for b in c.nodes:
        w = c.weight(b)
        lines.append(f'  {ids[b]} [label="{node_label(b)} | {w}"];')
    for b in c.nodes:
        for i in c.colors:
            t = c.fi(b, i)
            if t is not None:
                lines.append(f'  {ids[b]} -> {ids[t]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

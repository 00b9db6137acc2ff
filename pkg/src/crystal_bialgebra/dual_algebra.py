"""The dual of the linear bialgebra as block integer matrices.

An element is a finite set of blocks (alpha -> (a+1) x (a+1) matrix, entry
(b, b') = coefficient of hat(b (x) b'^v), nodes in chain order from y^a) plus an
optional tail: an integer combination of words in the symbolic families
unit, e, f, wt, which supplies every block that is not stored.  With this
convention the product is the literal matrix product in each block.

>>> e, f, wt = kashiwara_elements(cutoff=2)
>>> f.block(1).tolist()
[[0, 0], [1, 0]]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .crystal_core import Dual, Monomial, build_Bn, component_node_sets, dual, find_isomorphism
from .linear_bialgebra import IntCombination, bb_counit
from .set_bialgebra import BElem, smul
from .tensor_ops import cg_position, tensor

FAMILIES = ("unit", "e", "f", "wt")


@lru_cache(maxsize=None)
def _nodes(alpha):
    return build_Bn(alpha).nodes


def _index(alpha, b):
    return _nodes(alpha).index(b)


@lru_cache(maxsize=None)
def family_block(name, alpha, i="1"):
    """The block-alpha matrix of a symbolic family; read-only."""
    c = build_Bn(alpha)
    n = alpha + 1
    m = np.zeros((n, n), dtype=np.int64)
    for k, b in enumerate(c.nodes):
        if name == "unit":
            m[k, k] = 1
        elif name == "wt":
            m[k, k] = c.weight(b)
        elif name == "f":
            t = c.fi(b, i)
            if t is not None:
                m[_index(alpha, t), k] = 1
        elif name == "e":
            t = c.ei(b, i)
            if t is not None:
                m[_index(alpha, t), k] = 1
        else:
            raise ValueError(f"unknown family {name!r}")
    m.setflags(write=False)
    return m


def _word_block(word, alpha):
    out = np.eye(alpha + 1, dtype=np.int64)
    for name in word:
        out = out @ family_block(name, alpha)
    return out


@dataclass(frozen=True, eq=False)
class BlockMatrixElement:
    blocks: dict = field(default_factory=dict)
    tail: dict = None

    def __post_init__(self):
        clean = {}
        for a, m in self.blocks.items():
            m = np.asarray(m, dtype=np.int64)
            if m.shape != (a + 1, a + 1):
                raise ValueError(f"block {a} has shape {m.shape}")
            if self.tail is None:
                if m.any():
                    clean[a] = m
            elif not np.array_equal(m, self._tail_block(a)):
                clean[a] = m
        object.__setattr__(self, "blocks", dict(sorted(clean.items())))
        if self.tail is not None:
            object.__setattr__(self, "tail", {w: c for w, c in sorted(self.tail.items()) if c})

    def _tail_block(self, alpha):
        out = np.zeros((alpha + 1, alpha + 1), dtype=np.int64)
        for word, c in (self.tail or {}).items():
            out = out + c * _word_block(word, alpha)
        return out

    @property
    def finite(self):
        return self.tail is None

    def block(self, alpha):
        if alpha in self.blocks:
            return self.blocks[alpha]
        return self._tail_block(alpha)

    def coefficient(self, p):
        """Value on the basis pair p, i.e. the coefficient of hat(p)."""
        return int(self.block(p.alpha)[_index(p.alpha, p.b), _index(p.alpha, p.bdual)])

    def truncate(self, cutoff):
        return BlockMatrixElement({a: self.block(a) for a in range(cutoff + 1)})

    def support(self):
        if not self.finite:
            raise ValueError("infinite support")
        return [BElem(a, _nodes(a)[r], _nodes(a)[c]) for a, m in self.blocks.items() for r, c in zip(*np.nonzero(m))]

    def __add__(self, other):
        return _combine(self, other, 1)

    def __sub__(self, other):
        return _combine(self, other, -1)

    def scale(self, k):
        tail = None if self.tail is None else {w: k * c for w, c in self.tail.items()}
        return BlockMatrixElement({a: k * m for a, m in self.blocks.items()}, tail)

    def __mul__(self, other):
        return dual_mul(self, other)

    def equal_to(self, other, cutoff):
        return all(np.array_equal(self.block(a), other.block(a)) for a in range(cutoff + 1))

    def __eq__(self, other):
        if not isinstance(other, BlockMatrixElement):
            return NotImplemented
        if (self.tail is None) != (other.tail is None):
            return False
        keys = set(self.blocks) | set(other.blocks)
        if self.tail is not None and self.tail != other.tail:
            return False
        return all(np.array_equal(self.block(a), other.block(a)) for a in keys)

    __hash__ = None

    def to_json(self):
        out = {"blocks": {str(a): m.tolist() for a, m in self.blocks.items()}}
        if self.tail is not None:
            out["tail"] = [{"word": list(w), "coeff": c} for w, c in self.tail.items()]
        return out

    @classmethod
    def from_json(cls, d):
        blocks = {int(a): np.array(m, dtype=np.int64) for a, m in d.get("blocks", {}).items()}
        tail = None
        if d.get("tail") is not None:
            tail = {}
            for t in d["tail"]:
                w = tuple(t["word"])
                if any(n not in FAMILIES for n in w):
                    raise ValueError(f"unknown family in {w}")
                tail[w] = tail.get(w, 0) + int(t["coeff"])
        return cls(blocks, tail)


def _combine(x, y, sign):
    if x.tail is None and y.tail is None:
        tail = None
    else:
        tail = dict(x.tail or {})
        for w, c in (y.tail or {}).items():
            tail[w] = tail.get(w, 0) + sign * c
    keys = set(x.blocks) | set(y.blocks)
    if tail is None:
        blocks = {a: x.block(a) + sign * y.block(a) for a in keys}
    else:
        blocks = {a: x.block(a) + sign * y.block(a) for a in keys}
    return BlockMatrixElement(blocks, tail)


def dual_mul(x, y):
    """Sum over d of a_{b,d} a'_{d,b'} in every block."""
    if x.tail is not None and y.tail is not None:
        tail = {}
        for (w1, c1), (w2, c2) in itertools.product(x.tail.items(), y.tail.items()):
            w = tuple(n for n in w1 + w2 if n != "unit") or ("unit",)
            tail[w] = tail.get(w, 0) + c1 * c2
        keys = set(x.blocks) | set(y.blocks)
    else:
        tail = None
        if x.tail is None and y.tail is None:
            keys = set(x.blocks) & set(y.blocks)
        else:
            keys = set(x.blocks) if x.tail is None else set(y.blocks)
    return BlockMatrixElement({a: x.block(a) @ y.block(a) for a in keys}, tail)


def commutator(x, y):
    return dual_mul(x, y) - dual_mul(y, x)


def hat(p):
    m = np.zeros((p.alpha + 1, p.alpha + 1), dtype=np.int64)
    m[_index(p.alpha, p.b), _index(p.alpha, p.bdual)] = 1
    return BlockMatrixElement({p.alpha: m})


def unit_alpha(alpha):
    return BlockMatrixElement({alpha: np.eye(alpha + 1, dtype=np.int64)})


def unit_sum(cutoff):
    return BlockMatrixElement({a: np.eye(a + 1, dtype=np.int64) for a in range(cutoff + 1)})


def symbolic(name):
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    return BlockMatrixElement({}, {(name,): 1})


ONE = symbolic("unit")


def kashiwara_elements(i="1", cutoff=4):
    """(e, f, wt) with blocks materialized up to cutoff and symbolic tails."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    out = []
    for name in ("e", "f", "wt"):
        blocks = {a: np.array(family_block(name, a, i)) for a in range(cutoff + 1)}
        out.append(BlockMatrixElement(blocks, {(name,): 1}))
    return tuple(out)


def block_part(x, alpha):
    """x . 1_alpha as a finite element."""
    return dual_mul(x, unit_alpha(alpha))


# ------------------------------------------------------------------ relations


def relation_check(cutoff=4, wt=None):
    """Commutator relations blockwise up to cutoff, each with the observed coefficient.

    ``holds`` is per stated relation; ``observed`` is k with [x, wt] = k x on every block.
    """
    e, f, w = kashiwara_elements(cutoff=cutoff)
    if wt is not None:
        w = wt
    report = {}
    for name, x, k in (("[e,wt]=2e", e, 2), ("[f,wt]=-2f", f, -2)):
        c = commutator(x, w).truncate(cutoff)
        observed = None
        for cand in (-2, 2):
            if c.equal_to(x.truncate(cutoff).scale(cand), cutoff):
                observed = cand
        report[name] = {"holds": observed == k, "observed": observed}
    ww = commutator(w, w).truncate(cutoff)
    report["[wt,wt]=0"] = {"holds": not ww.blocks, "observed": 0 if not ww.blocks else None}
    return report


def words(max_len=4, letters=("e", "f")):
    for n in range(max_len + 1):
        yield from itertools.product(letters, repeat=n)


def apply_word(word, b, alpha):
    """The crystal operators of word applied to b, rightmost first; None for zero."""
    c = build_Bn(alpha)
    for name in reversed(word):
        if b is None:
            return None
        b = c.fi(b, "1") if name == "f" else c.ei(b, "1")
    return b


def word_element(word):
    return BlockMatrixElement({}, {tuple(word) or ("unit",): 1})


def word_evaluation_failures(cutoff=4, max_len=4):
    """Words x with x(b (x) b'^v) != [b = x b'] on some basis pair of blocks <= cutoff."""
    bad = []
    for word in words(max_len):
        x = word_element(word)
        for a in range(cutoff + 1):
            for b in _nodes(a):
                for bp in _nodes(a):
                    want = int(apply_word(word, bp, a) == b)
                    if x.coefficient(BElem(a, b, bp)) != want:
                        bad.append((word, BElem(a, b, bp)))
    return bad


def hw_projector(alpha):
    """1_alpha - f e on block alpha, asserted equal to hat(u (x) u^v)."""
    e, f, _ = kashiwara_elements(cutoff=alpha)
    p = unit_alpha(alpha) - dual_mul(block_part(f, alpha), block_part(e, alpha))
    top = _nodes(alpha)[0]
    if p != hat(BElem(alpha, top, top)):
        raise AssertionError(f"projector on block {alpha} is not the highest matrix unit")
    return p


@dataclass(frozen=True)
class Word:
    """f^k . P_alpha . e^m, the generator expression for hat(b (x) b'^v)."""

    alpha: int
    f_power: int
    e_power: int

    def __str__(self):
        parts = ["f"] * self.f_power + [f"(1_{self.alpha}-fe)"] + ["e"] * self.e_power
        return "".join(parts)

    def evaluate(self):
        e, f, _ = kashiwara_elements(cutoff=self.alpha)
        fa, ea = block_part(f, self.alpha), block_part(e, self.alpha)
        out = unit_alpha(self.alpha)
        for _ in range(self.f_power):
            out = dual_mul(out, fa)
        out = dual_mul(out, hw_projector(self.alpha))
        for _ in range(self.e_power):
            out = dual_mul(out, ea)
        return out


def _depth(c, top, target):
    """Number of f-steps from top to target, found by walking the f-string."""
    k, b = 0, top
    while b is not None:
        if b == target:
            return k
        b, k = c.fi(b, "1"), k + 1
    raise ValueError(f"{target} is not reachable from {top}")


def generator_word(alpha, b, bprime):
    c = build_Bn(alpha)
    top = c.nodes[0]
    return Word(alpha, _depth(c, top, b), _depth(c, top, bprime))


# ------------------------------------------------------- restricted coproduct


@lru_cache(maxsize=None)
def _dual_positions(beta, betap):
    """d''' (x) d' in B(-beta') (x) B(-beta) -> (gamma, node of B(gamma)) via B(-gamma) = B(gamma)^v."""
    t = tensor(dual(build_Bn(betap)), dual(build_Bn(beta)))
    out = {}
    for nodes in component_node_sets(t):
        comp = t.restrict(nodes)
        g = len(nodes) - 1
        iso = find_isomorphism(comp, dual(build_Bn(g)))
        for n in nodes:
            out[(n[1].node, n[0].node)] = (g, iso(n).node)
    return out


def delta_restricted(alpha, beta, betap, x):
    """Restricted coproduct of a block-alpha element, keyed by (beta pair, beta' pair).

    A term hat(d (x) d'^v) (x) hat(d'' (x) d'''^v) appears with the coefficient
    of hat(b (x) b'^v) in x when d.d'' = b in B(alpha) and d'''^v.d'^v = b'^v,
    the second product taken in the decomposition of B(-beta') (x) B(-beta).
    """
    if not x.finite or set(x.blocks) - {alpha}:
        raise ValueError("expected a finite element supported in one block")
    pos = cg_position(beta, betap)
    dpos = _dual_positions(beta, betap)
    out = {}
    for d, d2 in itertools.product(_nodes(beta), _nodes(betap)):
        g1, b = pos[(d, d2)]
        if g1 != alpha:
            continue
        for d1, d3 in itertools.product(_nodes(beta), _nodes(betap)):
            g2, bp = dpos[(d1, d3)]
            if g2 != alpha:
                continue
            c = x.coefficient(BElem(alpha, b, bp))
            if c:
                key = (BElem(beta, d, d1), BElem(betap, d2, d3))
                out[key] = out.get(key, 0) + c
    return IntCombination(out)


def delta_bruteforce(alpha, beta, betap, x):
    """Dual of the product: the coefficient of (p, q) is x evaluated on p.q."""
    out = {}
    for p in (BElem(beta, b, c) for b in _nodes(beta) for c in _nodes(beta)):
        for q in (BElem(betap, b, c) for b in _nodes(betap) for c in _nodes(betap)):
            r = smul(p, q)
            if r is not None and r.alpha == alpha:
                v = x.coefficient(r)
                if v:
                    out[(p, q)] = v
    return IntCombination(out)


# ------------------------------------------------------------------- pairing


def pairing(x, u):
    if not u.finite:
        raise ValueError("pairing needs a finitely supported element")
    return sum(c * u.coefficient(p) for p, c in x.terms.items())


def pairing2(xy, uv):
    """<x (x) y, u (x) v> = <x, u><y, v> on IntCombinations over pairs of basis pairs."""
    return sum(c * uv.terms.get(k, 0) for k, c in xy.terms.items())


def pairing_compatibility_failures(beta, betap, alpha):
    """Both pairing identities on every basis pair of the blocks involved."""
    from .linear_bialgebra import bb_mul

    bad = []
    pb = [BElem(beta, b, c) for b in _nodes(beta) for c in _nodes(beta)]
    pq = [BElem(betap, b, c) for b in _nodes(betap) for c in _nodes(betap)]
    targets = [BElem(alpha, b, c) for b in _nodes(alpha) for c in _nodes(alpha)]
    for t in targets:
        h = hat(t)
        d = delta_restricted(alpha, beta, betap, h)
        for p, q in itertools.product(pb, pq):
            lhs = pairing(bb_mul(p, q), h)
            rhs = pairing2(IntCombination.basis((p, q)), d)
            if lhs != rhs:
                bad.append(("product", p, q, t))
    for p in pb + pq + targets:
        for a in {beta, betap, alpha}:
            lhs = pairing(IntCombination.basis(p), unit_alpha(a))
            rhs = int(p.alpha == a) * bb_counit(IntCombination.basis(p))
            if lhs != rhs:
                bad.append(("unit", p, a))
    return bad


def pairing_matrix(alpha):
    basis = [BElem(alpha, b, c) for b in _nodes(alpha) for c in _nodes(alpha)]
    return np.array([[pairing(IntCombination.basis(p), hat(q)) for q in basis] for p in basis], dtype=np.int64)


# ------------------------------------------------------ modules and comodules


@dataclass(frozen=True, eq=False)
class DualModule:
    """A module in which hat(p) acts by hat_ops[p]; absent keys act by zero.

    support=None marks a module whose action is not known to be finitely
    supported, which the converters refuse.
    """

    rank: int
    hat_ops: dict
    support_known: bool = True

    def act(self, x, v):
        v = np.asarray(v, dtype=np.int64)
        out = np.zeros(self.rank, dtype=np.int64)
        for p, m in self.hat_ops.items():
            c = x.coefficient(p)
            if c:
                out = out + c * (m @ v)
        return out

    def act_matrix(self, x):
        return np.column_stack([self.act(x, col) for col in np.eye(self.rank, dtype=np.int64)]) if self.rank else np.zeros((0, 0), dtype=np.int64)


def module_from_comodule(c):
    """hat(p) acts as the operator A_p, i.e. (ev (x) id) after the coaction."""
    return DualModule(c.rank, {p: m for p, m in c.ops.items() if m.any()})


def comodule_from_module(mod):
    from .comodule_classifier import LinComodule, first_violation

    if not mod.support_known:
        raise ValueError("module is not finitely supported")
    c = LinComodule(mod.rank, dict(mod.hat_ops))
    bad = first_violation(c)
    if bad is not None:
        raise ValueError(f"module does not give a comodule: {bad}")
    return c


def unital_check(mod):
    """Sum of 1_alpha over the occurring blocks acts as the identity."""
    blocks = sorted({p.alpha for p in mod.hat_ops})
    total = np.zeros((mod.rank, mod.rank), dtype=np.int64)
    for a in blocks:
        total = total + mod.act_matrix(unit_alpha(a))
    return np.array_equal(total, np.eye(mod.rank, dtype=np.int64))


def right_multiplier_witness(cutoff):
    """Diagonal labels p with hat(p) . wt != 0, and whether that equals wt(b') hat(p) throughout."""
    _, _, w = kashiwara_elements(cutoff=cutoff)
    hits, exact = [], True
    for a in range(cutoff + 1):
        c = build_Bn(a)
        for b in c.nodes:
            p = BElem(a, b, b)
            prod = dual_mul(hat(p), w)
            if prod != hat(p).scale(c.weight(b)):
                exact = False
            if prod.blocks:
                hits.append(p)
    return hits, exact

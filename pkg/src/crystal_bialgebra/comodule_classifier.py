"""Comodules as operator families A^a_{b,b'} and their classification.

A comodule of rank r is given by integer r x r matrices with
Delta(m) = sum b (x) b'^v (x) A^a_{b,b'} m.  The standard comodule on B(a) has
A_{b,b'} e_b = e_b', i.e. A_{b,b'} is the matrix unit E_{b',b}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from .crystal_core import (
    SL2,
    build_Bn,
    chain,
    component_node_sets,
    make_crystal,
    node_label,
)
from .linear_bialgebra import IntCombination, antimorphism_S, bb_delta
from .set_bialgebra import BElem, verify_comodule
from .tensor_ops import cg_position


@dataclass(frozen=True, eq=False)
class LinComodule:
    rank: int
    ops: dict = field(default_factory=dict)

    def op(self, key):
        m = self.ops.get(key)
        return np.zeros((self.rank, self.rank), dtype=np.int64) if m is None else m

    def blocks(self):
        return sorted({k.alpha for k in self.ops})


def _unit(n, j, k):
    m = np.zeros((n, n), dtype=np.int64)
    m[j, k] = 1
    return m


def first_violation(m):
    """The first violated comodule relation as a string, or None."""
    ident = np.eye(m.rank, dtype=np.int64)
    keys = sorted(m.ops)
    for key, mat in m.ops.items():
        if mat.shape != (m.rank, m.rank):
            return f"A{key} has shape {mat.shape}"
    for p in keys:
        for q in keys:
            lhs = m.op(q) @ m.op(p)
            if p.alpha == q.alpha and p.bdual == q.b:
                rhs = m.op(BElem(p.alpha, p.b, q.bdual))
            else:
                rhs = np.zeros_like(lhs)
            if not np.array_equal(lhs, rhs):
                return f"A{q} A{p} != delta-rule"
    total = sum((m.op(k) for k in keys if k.b == k.bdual), np.zeros((m.rank, m.rank), dtype=np.int64))
    if not np.array_equal(total, ident):
        return "sum of diagonal A_{b,b} is not the identity"
    return None


def is_valid(m):
    return first_violation(m) is None


def coaction_to_operators(rank, table):
    """table[k] maps (BElem, j) -> coefficient for the coaction of e_k."""
    ops = {}
    for k, row in enumerate(table):
        for (p, j), c in row.items():
            if c:
                ops.setdefault(p, np.zeros((rank, rank), dtype=np.int64))
                ops[p][j, k] += c
    m = LinComodule(rank, {p: v for p, v in ops.items() if v.any()})
    bad = first_violation(m)
    if bad is not None:
        raise ValueError(f"not a comodule: {bad}")
    return m


def standard_comodule(alpha):
    nodes = build_Bn(alpha).nodes
    n = len(nodes)
    ops = {BElem(alpha, b, c): _unit(n, nodes.index(c), nodes.index(b)) for b in nodes for c in nodes}
    return LinComodule(n, ops)


def direct_sum(*ms):
    rank = sum(m.rank for m in ms)
    ops, off = {}, 0
    for m in ms:
        for k, v in m.ops.items():
            big = ops.setdefault(k, np.zeros((rank, rank), dtype=np.int64))
            big[off:off + m.rank, off:off + m.rank] += v
        off += m.rank
    return LinComodule(rank, ops)


def regular_block(alpha):
    """The bialgebra's own block alpha as a comodule through Delta."""
    basis = [BElem(alpha, b, c) for b in build_Bn(alpha).nodes for c in build_Bn(alpha).nodes]
    idx = {p: k for k, p in enumerate(basis)}
    table = [{(p1, idx[p2]): v for (p1, p2), v in bb_delta(p).terms.items()} for p in basis]
    return coaction_to_operators(len(basis), table)


@dataclass(frozen=True, eq=False)
class Classification:
    multiplicities: dict
    transport: np.ndarray
    labels: tuple

    def multiset(self):
        return sorted(self.multiplicities.items(), reverse=True)


def _lattice_basis(P):
    """Z-basis of the column lattice of an integer matrix."""
    if not P.any():
        return []
    H = hermite_normal_form(Matrix(P.tolist()))
    return [np.array([int(v) for v in H[:, k]], dtype=np.int64) for k in range(H.shape[1])]


def classify(m):
    """Multiplicities r_a and a basis transport from the standard sum onto m.

    For each block a basis of A_{hw,hw}M is chosen (Hermite normal form of the
    idempotent's columns) and moved to every b with A_{hw,b}.  The choice is
    not canonical.
    """
    bad = first_violation(m)
    if bad is not None:
        raise ValueError(f"not a comodule: {bad}")
    mult, cols, labels = {}, [], []
    for alpha in m.blocks():
        nodes = build_Bn(alpha).nodes
        hw = nodes[0]
        ranks = {int(np.trace(m.op(BElem(alpha, b, b)))) for b in nodes}
        if len(ranks) != 1:
            raise ValueError(f"rank mismatch across block {alpha}")
        base = _lattice_basis(m.op(BElem(alpha, hw, hw)))
        if len(base) != ranks.pop():
            raise ValueError(f"rank mismatch in block {alpha}")
        mult[alpha] = len(base)
        for k, v in enumerate(base):
            for b in nodes:
                cols.append(m.op(BElem(alpha, hw, b)) @ v)
                labels.append((alpha, k, b))
    T = np.array(cols, dtype=np.int64).T if cols else np.zeros((m.rank, 0), dtype=np.int64)
    cl = Classification(mult, T, tuple(labels))
    if not verify_transport(m, cl):
        raise ValueError("transport does not intertwine the coactions")
    return cl


def verify_transport(m, cl):
    """T is unimodular and T^-1 A T is the standard operator family."""
    T = cl.transport
    if T.shape != (m.rank, m.rank):
        return False
    if m.rank and round(abs(np.linalg.det(T.astype(float)))) != 1:
        return False
    pos = {(a, k, b): idx for idx, (a, k, b) in enumerate(cl.labels)}
    for key, A in m.ops.items():
        expect = np.zeros((m.rank, m.rank), dtype=np.int64)
        for (a, k, b), idx in pos.items():
            if a == key.alpha and b == key.b:
                expect[pos[(a, k, key.bdual)], idx] = 1
        if not np.array_equal(A @ T, T @ expect):
            return False
    return True


# ------------------------------------------------------------ based comodules


@dataclass(frozen=True, eq=False)
class BasedComodule:
    comodule: LinComodule
    partition: dict
    labels: tuple

    def block_of(self, k):
        for key, idx in self.partition.items():
            if k in idx:
                return key
        raise KeyError(k)


def crystal_positions(x):
    """Node -> (a, position in B(a)) for a crystal made of sl2 chains."""
    pos = {}
    for nodes in component_node_sets(x):
        ch = chain(x.restrict(nodes))
        a = len(ch) - 1
        std = build_Bn(a).nodes
        for k, node in enumerate(ch):
            pos[node] = (a, std[k])
    return pos


def crystal_to_based(x):
    if x.cartan != SL2:
        raise ValueError("only sl2 crystals are identified with standard B(a)")
    idx = {b: k for k, b in enumerate(x.nodes)}
    by_comp = {}
    for nodes in component_node_sets(x):
        ch = chain(x.restrict(nodes))
        for node in ch:
            by_comp[node] = ch
    pos = crystal_positions(x)
    n = len(x)
    ops, partition = {}, {}
    for node, (a, b) in pos.items():
        partition.setdefault((a, b), []).append(idx[node])
        ch = by_comp[node]
        for k, c in enumerate(build_Bn(a).nodes):
            key = BElem(a, b, c)
            ops.setdefault(key, np.zeros((n, n), dtype=np.int64))
            ops[key][idx[ch[k]], idx[node]] = 1
    partition = {k: tuple(sorted(v)) for k, v in sorted(partition.items())}
    return BasedComodule(LinComodule(n, ops), partition, tuple(node_label(b) for b in x.nodes))


def check_based(bm):
    """None if bm is a based comodule, else a description of the first problem."""
    m = bm.comodule
    bad = first_violation(m)
    if bad:
        return bad
    seen = sorted(k for v in bm.partition.values() for k in v)
    if seen != list(range(m.rank)):
        return "partition does not cover the basis exactly once"
    for (a, b), idx in bm.partition.items():
        P = m.op(BElem(a, b, b))
        for k in idx:
            e = np.zeros(m.rank, dtype=np.int64)
            e[k] = 1
            if not np.array_equal(P @ e, e):
                return f"basis vector {k} is not in M^{a}_{b}"
        for c in build_Bn(a).nodes:
            A = m.op(BElem(a, b, c))
            imgs = []
            for k in idx:
                col = A[:, k]
                nz = np.flatnonzero(col)
                if len(nz) != 1 or col[nz[0]] != 1:
                    return f"A({a},{b},{c}) does not send basis to basis"
                imgs.append(int(nz[0]))
            if sorted(imgs) != sorted(bm.partition.get((a, c), ())):
                return f"A({a},{b},{c}) is not a bijection of basis sets"
    return None


def based_to_crystal(bm):
    bad = check_based(bm)
    if bad:
        raise ValueError(f"invalid based comodule: {bad}")
    m = bm.comodule
    labels = bm.labels
    wt, f, eps, phi = {}, {}, {}, {}
    for (a, b), idx in bm.partition.items():
        for k in idx:
            node = labels[k]
            wt[node] = a - 2 * b.i
            eps[(node, "1")] = b.i
            phi[(node, "1")] = b.j
            if b.j > 0:
                fb = type(b)(b.i + 1, b.j - 1)
                col = m.op(BElem(a, b, fb))[:, k]
                f[(node, "1")] = labels[int(np.flatnonzero(col)[0])]
    return make_crystal(SL2, labels, wt, f, eps, phi)


def based_tensor(m, n):
    """(M, X) (x) (N, Y) with A^g_{c,c'} = sum of A_{b,b'} (x) A_{d,d'} over (b,b')(d,d') = (g,c,c')."""
    M, N = m.comodule, n.comodule
    rank = M.rank * N.rank
    ops = {}
    for p, A in M.ops.items():
        for q, B in N.ops.items():
            pos = cg_position(p.alpha, q.alpha)
            g1, c1 = pos[(p.b, q.b)]
            g2, c2 = pos[(p.bdual, q.bdual)]
            if g1 != g2:
                continue
            key = BElem(g1, c1, c2)
            ops[key] = ops.get(key, np.zeros((rank, rank), dtype=np.int64)) + np.kron(A, B)
    partition = {}
    for (a, b), xs in m.partition.items():
        for (c, d), ys in n.partition.items():
            g, pos = cg_position(a, c)[(b, d)]
            for x in xs:
                for y in ys:
                    partition.setdefault((g, pos), []).append(x * N.rank + y)
    partition = {k: tuple(sorted(v)) for k, v in sorted(partition.items())}
    labels = tuple(f"{a}⊗{b}" for a in m.labels for b in n.labels)
    return BasedComodule(LinComodule(rank, {k: v for k, v in ops.items() if v.any()}), partition, labels)


def compatibility_check(m, labels, setc):
    """True iff (m, basis) is based and its A-operators reproduce the set coaction.

    For each basis element x with set coaction (a, b, b') (x) x', x must lie in
    X^a_b and A^a_{b,b'} must send x to x'.
    """
    if first_violation(m) or verify_comodule(setc):
        return False
    labels = list(labels)
    if sorted(map(str, labels)) != sorted(map(str, setc.carrier)) or len(labels) != m.rank:
        return False
    partition = {}
    for k in range(m.rank):
        e = np.zeros(m.rank, dtype=np.int64)
        e[k] = 1
        homes = [key for key in m.ops if key.b == key.bdual and np.array_equal(m.op(key) @ e, e)]
        if len(homes) != 1:
            return False
        partition.setdefault((homes[0].alpha, homes[0].b), []).append(k)
    bm = BasedComodule(m, {k: tuple(v) for k, v in partition.items()}, tuple(labels))
    if check_based(bm):
        return False
    for k, x in enumerate(labels):
        p, x2 = setc(x)
        if k not in bm.partition.get((p.alpha, p.b), ()):
            return False
        col = m.op(p)[:, k]
        if np.flatnonzero(col).tolist() != [labels.index(x2)] or col[labels.index(x2)] != 1:
            return False
    return True


def compatible_structures(setc):
    """All based comodules built from sl2 chain structures on the carrier compatible with setc."""
    from .set_bialgebra import sl2_structures

    out = []
    for c in sl2_structures(setc.carrier):
        bm = crystal_to_based(c)
        if compatibility_check(bm.comodule, bm.labels, setc):
            out.append(c)
    return out


def s_diagram_check(alpha, S=antimorphism_S):
    """Evaluate both routes of the antimorphism square on every basis pair of block alpha.

    Top route: (id (x) eps)(Delta_{B(a)} (x) id) sends b (x) b'^v to b (x) b'^v.
    Other route: (id (x) tau)(eps (x) id)(id (x) Delta_{B(-a)}), where B(-a)
    is a comodule through the crystal isomorphism B(a)^v -> B(a).
    The square commutes iff S(top) equals the other route.
    """
    from .crystal_core import dual, find_isomorphism

    bn = build_Bn(alpha)
    phi = find_isomorphism(dual(bn), bn)
    if phi is None:
        return False
    for b in bn.nodes:
        for bp in bn.nodes:
            top = IntCombination()
            for c in bn.nodes:
                # Delta_{B(a)}(b) = sum_c (b, c) (x) c ; then eps(c (x) b'^v)
                if c == bp:
                    top = top + IntCombination.basis(BElem(alpha, b, c))
            other = IntCombination()
            from .crystal_core import Dual

            for c in dual(bn).nodes:
                # Delta_{B(-a)}(b'^v) = sum_c (phi(b'^v), phi(c)) (x) c ; then eps(b (x) c)
                if c == Dual(b):
                    other = other + IntCombination.basis(BElem(alpha, phi(Dual(bp)), phi(c)))
            s_top = IntCombination.from_pairs((S(p), k) for p, k in top.terms.items())
            if s_top != other:
                return False
    return True

"""The linearised bialgebra: free abelian group on the basis pairs of each block.

Basis pairs are ``BElem`` values (b (x) b'^v, second slot undualized).  The
sl2 generators in the default labelling are a = x(x)x^v, b = y(x)x^v,
c = x(x)y^v and d = y(x)y^v.

>>> str(word_to_basis("da"))
'1'
>>> basis_to_normal_form(BElem(3, Monomial(2, 1), Monomial(1, 2)))
'acd'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .crystal_core import Dual, Monomial, build_Bn
from .set_bialgebra import UNIT, BElem, block, elements, smul

BasisPair = BElem

X, Y = Monomial(1, 0), Monomial(0, 1)

CONVENTIONS = {
    "paper": {"a": BElem(1, X, X), "b": BElem(1, Y, X), "c": BElem(1, X, Y), "d": BElem(1, Y, Y)},
    "matrix": {"a": BElem(1, X, X), "b": BElem(1, X, Y), "c": BElem(1, Y, X), "d": BElem(1, Y, Y)},
}


def _label(key):
    if isinstance(key, tuple):
        return " ⊗ ".join(_label(k) for k in key)
    return str(key)


@dataclass(frozen=True, eq=False)
class IntCombination:
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for k in [k for k, v in self.terms.items() if v == 0]:
            del self.terms[k]

    @classmethod
    def basis(cls, key, coeff=1):
        return cls({key: coeff})

    @classmethod
    def from_pairs(cls, pairs):
        out = {}
        for k, v in pairs:
            out[k] = out.get(k, 0) + v
        return cls(out)

    def __add__(self, other):
        return IntCombination.from_pairs(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        return IntCombination({key: k * v for key, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, IntCombination) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: _label(kv[0])))

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in self:
            lab = _label(k)
            parts.append(lab if v == 1 else f"{v}*{lab}")
        return " + ".join(parts)

    def to_json(self):
        return {_label(k): v for k, v in self}


ZERO = IntCombination()
ONE = IntCombination.basis(UNIT)


def _lift(x):
    return x if isinstance(x, IntCombination) else IntCombination.basis(x)


def coeval(alpha):
    """iota: 1 -> sum over b of b^v (x) b, with keys (Dual(b), b)."""
    return IntCombination({(Dual(b), b): 1 for b in build_Bn(alpha).nodes})


def coeval_prime(alpha):
    """iota': 1 -> sum over b of b (x) b^v, with keys (b, Dual(b))."""
    return IntCombination({(b, Dual(b)): 1 for b in build_Bn(alpha).nodes})


def eval_pair(pair):
    """epsilon on B(a) (x) B(-a): b (x) b'^v -> delta(b, b')."""
    if isinstance(pair, BElem):
        return int(pair.b == pair.bdual)
    b, bp = pair
    if isinstance(b, Dual):
        # epsilon' on B(-a) (x) B(a)
        if isinstance(bp, Dual) or b.node.degree != bp.degree:
            raise ValueError("block mismatch")
        return int(b.node == bp)
    if not isinstance(bp, Dual) or b.degree != bp.node.degree:
        raise ValueError("block mismatch")
    return int(b == bp.node)


def zigzag_check(alpha, coeval_fn=coeval, coeval_prime_fn=coeval_prime):
    """(eps (x) id)(id (x) iota) and (id (x) eps')(iota' (x) id) are the identity on B(alpha)."""
    for b in build_Bn(alpha).nodes:
        first = {}
        for (cd, c), k in coeval_fn(alpha).terms.items():
            v = k * eval_pair((b, cd))
            if v:
                first[c] = first.get(c, 0) + v
        second = {}
        for (c, cd), k in coeval_prime_fn(alpha).terms.items():
            v = k * eval_pair((cd, b))
            if v:
                second[c] = second.get(c, 0) + v
        if first != {b: 1} or second != {b: 1}:
            return False
    return True


def pair_mul(p, q):
    return smul(p, q)


def bb_mul(x, y):
    x, y = _lift(x), _lift(y)
    out = []
    for p, u in x.terms.items():
        for q, v in y.terms.items():
            r = _mul_keys(p, q)
            if r is not None:
                out.append((r, u * v))
    return IntCombination.from_pairs(out)


def _mul_keys(p, q):
    """Basis product, componentwise on tensor words of equal length."""
    if isinstance(p, tuple):
        parts = [pair_mul(a, b) for a, b in zip(p, q)]
        return None if any(r is None for r in parts) else tuple(parts)
    return pair_mul(p, q)


def bb_delta(x):
    out = []
    for p, k in _lift(x).terms.items():
        for c in build_Bn(p.alpha).nodes:
            out.append(((BElem(p.alpha, p.b, c), BElem(p.alpha, c, p.bdual)), k))
    return IntCombination.from_pairs(out)


def bb_counit(x):
    return sum(k * int(p.b == p.bdual) for p, k in _lift(x).terms.items())


def _apply_left(fn, x):
    """(fn (x) id) on a combination of pairs, where fn returns a combination."""
    out = []
    for (p, q), k in x.terms.items():
        for r, v in fn(p).terms.items():
            out.append(((r, q) if not isinstance(r, tuple) else r + (q,), k * v))
    return IntCombination.from_pairs(out)


def _apply_right(fn, x):
    out = []
    for (p, q), k in x.terms.items():
        for r, v in fn(q).terms.items():
            out.append(((p, r) if not isinstance(r, tuple) else (p,) + r, k * v))
    return IntCombination.from_pairs(out)


def delta_tensor(x):
    """Delta on B (x) B: (Delta (x) Delta) followed by the middle swap."""
    out = []
    for (p, q), k in x.terms.items():
        for (p1, p2), u in bb_delta(p).terms.items():
            for (q1, q2), v in bb_delta(q).terms.items():
                out.append((((p1, q1), (p2, q2)), k * u * v))
    return IntCombination.from_pairs(out)


def check_bialgebra(max_alpha=2):
    """Exhaustive bialgebra laws on blocks up to max_alpha; returns law -> list of failures."""
    elems = elements(max_alpha)
    report = {k: [] for k in ("associativity", "unit", "coassociativity", "counit", "delta_mult", "counit_mult")}
    for x in elems:
        if bb_mul(ONE, x) != _lift(x) or bb_mul(x, ONE) != _lift(x):
            report["unit"].append(x)
        d = bb_delta(x)
        lhs = IntCombination.from_pairs(
            ((a, b, c), k * v) for (p, c), k in d.terms.items() for (a, b), v in bb_delta(p).terms.items()
        )
        rhs = IntCombination.from_pairs(
            ((a, b, c), k * v) for (a, q), k in d.terms.items() for (b, c), v in bb_delta(q).terms.items()
        )
        if lhs != rhs:
            report["coassociativity"].append(x)
        left = IntCombination.from_pairs((q, k * bb_counit(p)) for (p, q), k in d.terms.items())
        right = IntCombination.from_pairs((p, k * bb_counit(q)) for (p, q), k in d.terms.items())
        if left != _lift(x) or right != _lift(x):
            report["counit"].append(x)
        for y in elems:
            xy = bb_mul(x, y)
            if bb_delta(xy) != bb_mul_tensor(bb_delta(x), bb_delta(y)):
                report["delta_mult"].append((x, y))
            if bb_counit(xy) != bb_counit(x) * bb_counit(y):
                report["counit_mult"].append((x, y))
            for z in elems:
                if bb_mul(xy, z) != bb_mul(x, bb_mul(y, z)):
                    report["associativity"].append((x, y, z))
    return report


def bb_mul_tensor(x, y):
    """Product in B (x) B: (p (x) q)(r (x) s) = pr (x) qs."""
    return bb_mul(x, y)


def degree(p):
    """wt(b) + wt(b'^v) = wt(b) - wt(b') = 2(i' - i)."""
    return 2 * (p.bdual.i - p.b.i)


def grade(x):
    out = {}
    for p, k in _lift(x).terms.items():
        out.setdefault(degree(p), []).append((p, k))
    return {g: IntCombination.from_pairs(v) for g, v in sorted(out.items())}


def grading_failures(max_alpha=2):
    bad = []
    elems = elements(max_alpha)
    for x in elems:
        for (p, q) in bb_delta(x).terms:
            if degree(p) + degree(q) != degree(x):
                bad.append(("delta", x))
        for y in elems:
            for r in bb_mul(x, y).terms:
                if degree(r) != degree(x) + degree(y):
                    bad.append(("mul", x, y))
    return bad


def word_to_basis(word, convention="paper"):
    gens = CONVENTIONS[convention]
    out = ONE
    for letter in word:
        if letter not in gens:
            raise ValueError(f"unknown generator {letter!r}")
        out = bb_mul(out, gens[letter])
    return out


def basis_to_normal_form(p, convention="paper"):
    """x^i y^j (x) (x^r y^s)^v as a^r c^(i-r) d^j (i >= r) or a^i b^(r-i) d^s (i <= r)."""
    i, j, r, s = p.b.i, p.b.j, p.bdual.i, p.bdual.j
    if i >= r:
        word = "a" * r + "c" * (i - r) + "d" * j
    else:
        word = "a" * i + "b" * (r - i) + "d" * s
    if convention == "matrix":
        word = word.translate(str.maketrans("bc", "cb"))
    return word


def fundamental_generation_check(alpha, max_depth=None, convention="paper"):
    """Every basis pair of block alpha is the product of some word of length alpha."""
    depth = alpha if max_depth is None else max_depth
    hit = set()
    for w in itertools.product("abcd", repeat=depth):
        for p in word_to_basis("".join(w), convention).terms:
            if p.alpha == alpha:
                hit.add(p)
    return hit == set(block(alpha))


def _zeta_mono(m):
    return Monomial(m.j, m.i)


def antimorphism_S(p):
    """b (x) b'^v -> zeta(b') (x) zeta(b)^v.

    zeta is the chain reversal identifying B(-a) with B(a); slot swap alone
    is not anti-multiplicative (it would send da = 1 to ad != 1).
    """
    if not isinstance(p, BElem):
        raise ValueError("S is defined on sl2 basis pairs")
    return BElem(p.alpha, _zeta_mono(p.bdual), _zeta_mono(p.b))


def naive_swap(p):
    return BElem(p.alpha, p.bdual, p.b)


def _apply_S(fn, x):
    return IntCombination.from_pairs((fn(p), k) for p, k in _lift(x).terms.items())


def check_S(max_alpha=2, S=antimorphism_S):
    """Failures of S(xy) = S(y)S(x) and (S (x) S)Delta = Delta^op S."""
    bad = []
    elems = elements(max_alpha)
    for x in elems:
        lhs = IntCombination.from_pairs(((S(p), S(q)), k) for (p, q), k in bb_delta(x).terms.items())
        rhs = IntCombination.from_pairs(((q, p), k) for (p, q), k in bb_delta(S(x)).terms.items())
        if lhs != rhs:
            bad.append(("coalgebra", x))
        if S(S(x)) != x:
            bad.append(("involution", x))
        for y in elems:
            if _apply_S(S, bb_mul(x, y)) != bb_mul(S(y), S(x)):
                bad.append(("algebra", x, y))
    return bad


# ------------------------------------------------------------- the functor V


@dataclass(frozen=True)
class HomUnit:
    """The map B(alpha) -> A sending b' to the basis vector a and other nodes to 0."""

    bprime: Monomial
    a: object

    def __str__(self):
        return f"[{self.bprime}->{self.a}]"


def v_basis(basis, cutoff):
    """Basis of the sum over alpha of B(alpha) (x) Hom(B(alpha), A)."""
    return [
        (al, b, HomUnit(bp, a))
        for al in range(cutoff + 1)
        for b in build_Bn(al).nodes
        for bp in build_Bn(al).nodes
        for a in basis
    ]


def v_functor_coaction(basis, cutoff=1, max_rank=2):
    """Check B (x) A = V(A) on basis vectors together with the comonad structure on V.

    Returns a dict of named checks.  Delta sends b (x) f to b (x) f~ where
    f~(c) = c (x) f; as a combination it is the sum over c of (b, [c -> (c, f)]).
    """
    basis = list(basis)
    if len(basis) > max_rank or cutoff > 1:
        from .crystal_core import GuardError

        raise GuardError(f"V is exercised only at rank <= {max_rank} and cutoff <= 1")
    lhs = [(p, a) for p in elements(cutoff) for a in basis]
    rhs = v_basis(basis, cutoff)
    to_v = {(p, a): (p.alpha, p.b, HomUnit(p.bdual, a)) for p, a in lhs}
    bijective = sorted(map(str, to_v.values())) == sorted(map(str, rhs)) and len(set(to_v.values())) == len(rhs)

    # evaluation of HomUnit matches eps(x (x) b'^v) a
    evaluation = all(
        (h.a if x == h.bprime else None) == (h.a if eval_pair(BElem(al, x, h.bprime)) else None)
        for al, _, h in rhs
        for x in build_Bn(al).nodes
    )

    def delta(v):
        al, b, h = v
        return IntCombination({(al, b, HomUnit(c, (al, c, h))): 1 for c in build_Bn(al).nodes})

    def counit(v):
        al, b, h = v
        return IntCombination({h.a: 1}) if b == h.bprime else ZERO

    def V(g, v):
        # V(g)(b (x) f) = b (x) (g o f) for g given on basis vectors
        al, b, h = v
        return IntCombination({(al, b, HomUnit(h.bprime, a)): k for a, k in g(h.a).terms.items()})

    def lin(fn, comb):
        out = []
        for key, k in comb.terms.items():
            for r, v in fn(key).terms.items():
                out.append((r, k * v))
        return IntCombination.from_pairs(out)

    coassoc = all(lin(delta, delta(v)) == lin(lambda w: V(delta, w), delta(v)) for v in rhs)
    counit_left = all(lin(counit, delta(v)) == IntCombination({v: 1}) for v in rhs)
    counit_right = all(lin(lambda w: V(counit, w), delta(v)) == IntCombination({v: 1}) for v in rhs)
    # Delta on V matches Delta_B (x) id under the identification
    matches = all(
        lin(lambda w: IntCombination({w: 1}), delta(to_v[(p, a)]))
        == IntCombination(
            {
                (q1.alpha, q1.b, HomUnit(q1.bdual, to_v[(q2, a)])): k
                for (q1, q2), k in bb_delta(p).terms.items()
            }
        )
        for p, a in lhs
    )
    return {
        "rank_lhs": len(lhs),
        "rank_rhs": len(rhs),
        "bijection": bijective,
        "evaluation": evaluation,
        "coassociativity": coassoc,
        "counit": counit_left and counit_right,
        "delta_matches_bialgebra": matches,
    }

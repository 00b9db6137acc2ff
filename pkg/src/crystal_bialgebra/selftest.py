"""Runners for the acceptance criteria; each returns a CriterionResult."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .comodule_classifier import based_tensor, based_to_crystal, check_based, classify, crystal_to_based
from .comonad_engine import (
    PointedSet,
    chi_square_failures,
    comonad_laws,
    recover_structure,
    theta_pushforward,
    unit_triangle_failures,
    zeta_coalgebra,
)
from .crystal_core import Monomial, build_Bn, disjoint_union, is_isomorphic
from .dual_algebra import (
    generator_word,
    hat,
    hw_projector,
    pairing_compatibility_failures,
    relation_check,
)
from .linear_bialgebra import basis_to_normal_form, check_bialgebra, word_to_basis, IntCombination, ONE, ZERO
from .set_bialgebra import (
    BElem,
    bialgebra_square_failures,
    block,
    coaction_Balpha,
    coassociativity_failures,
    counit_candidates,
    counterexample_comodule,
    is_subcomodule,
    verify_comodule,
)
from .sl2_monoid import mu0, mu0_projection
from .tensor_ops import cg_multiset, commutor_oracle, commutor_sl2, decompose, tensor_Bmn


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number} {self.name} ({self.seconds:.2f}s): {self.detail}"


def _timed(number, name, fn):
    t = time.perf_counter()
    passed, detail = fn()
    return CriterionResult(number, name, bool(passed), detail, time.perf_counter() - t)


def _monomials(n):
    return build_Bn(n).nodes


def c1(max_n=6):
    def run():
        bad = []
        for m, n in itertools.product(range(max_n + 1), repeat=2):
            sizes = sorted(decompose(tensor_Bmn(m, n)).sizes(), reverse=True)
            want = [g + 1 for g in cg_multiset(m, n)]
            if sizes != want or sum(sizes) != (m + 1) * (n + 1):
                bad.append((m, n))
        return not bad, f"{(max_n + 1) ** 2 - len(bad)}/{(max_n + 1) ** 2} pairs match, mismatches {bad}"

    return _timed(1, "clebsch-gordan", run)


def c2(max_n=5):
    def run():
        total = bad = 0
        for n, m in itertools.product(range(max_n + 1), repeat=2):
            for a in _monomials(n):
                for b in _monomials(m):
                    total += 1
                    bad += commutor_sl2((a, b)) != commutor_oracle((a, b))
        return bad == 0, f"{total - bad}/{total} elements agree"

    return _timed(2, "commutor", run)


def c3(max_deg=8):
    def run():
        total = bad = zeros = 0
        for n in range(max_deg + 1):
            for m in range(max_deg + 1 - n):
                for a in _monomials(n):
                    for b in _monomials(m):
                        total += 1
                        r = mu0(a, b)
                        zeros += r is None
                        bad += r != mu0_projection(a, b)
        return bad == 0, f"{total - bad}/{total} pairs agree ({zeros} zero products)"

    return _timed(3, "mu0 vs top projection", run)


def c4(max_alpha=2):
    def run():
        coassoc = coassociativity_failures(max_alpha)
        square = bialgebra_square_failures(max_alpha)
        counits = counit_candidates(max_alpha)
        m = counterexample_comodule()
        ce_ok = not verify_comodule(m)
        single_fails = not is_subcomodule(m, {"a"})
        passed = not coassoc and not square and not counits and ce_ok and single_fails
        detail = (
            f"coassociativity failures {len(coassoc)}, compatibility-square failures {len(square)}, "
            f"counit candidates {len(counits)}, counterexample verifies {ce_ok}, "
            f"singleton {{a}} fails {single_fails}"
        )
        return passed, detail

    return _timed(4, "set-level bialgebra", run)


def c5(max_alpha=2, nf_alpha=5):
    def run():
        laws = check_bialgebra(max_alpha)
        law_bad = {k: len(v) for k, v in laws.items() if v}
        rel = {w: word_to_basis(w) for w in ("cb", "bc", "db", "dc", "ba", "ca", "da")}
        rel_ok = all(rel[w] == ZERO for w in ("cb", "bc", "db", "dc", "ba", "ca")) and rel["da"] == ONE
        nf_bad = [
            p
            for a in range(nf_alpha + 1)
            for p in block(a)
            if word_to_basis(basis_to_normal_form(p)) != IntCombination.basis(p)
        ]
        passed = not law_bad and rel_ok and not nf_bad
        return passed, f"law failures {law_bad or 0}, relations {rel_ok}, normal-form failures {len(nf_bad)}"

    return _timed(5, "linear bialgebra", run)


def _unions(max_part=3, max_nodes=12):
    sizes = list(range(1, max_part + 2))

    def rec(start, left):
        yield ()
        for k in range(start, len(sizes)):
            if sizes[k] <= left:
                for rest in rec(k, left - sizes[k]):
                    yield (sizes[k] - 1,) + rest

    return [p for p in rec(0, max_nodes) if p]


def c6():
    def run():
        bad, count = [], 0
        for parts in _unions():
            count += 1
            x = build_Bn(parts[0]) if len(parts) == 1 else disjoint_union(*(build_Bn(n) for n in parts))
            bm = crystal_to_based(x)
            if check_based(bm) is not None or not is_isomorphic(based_to_crystal(bm), x):
                bad.append(parts)
                continue
            want = {}
            for n in parts:
                want[n] = want.get(n, 0) + 1
            if classify(bm.comodule).multiplicities != want:
                bad.append(parts)
        return not bad, f"{count - len(bad)}/{count} unions round-trip and classify, failures {bad}"

    return _timed(6, "comodule classification", run)


def c7(max_n=3):
    def run():
        bad = []
        for m, n in itertools.product(range(max_n + 1), repeat=2):
            bt = based_tensor(crystal_to_based(build_Bn(m)), crystal_to_based(build_Bn(n)))
            got = sorted((a for a, r in classify(bt.comodule).multiplicities.items() for _ in range(r)), reverse=True)
            if got != cg_multiset(m, n) or check_based(bt) is not None:
                bad.append((m, n))
        return not bad, f"{(max_n + 1) ** 2 - len(bad)}/{(max_n + 1) ** 2} products match, mismatches {bad}"

    return _timed(7, "monoidal equivalence", run)


def c8(cutoff=4, gen_cutoff=3):
    def run():
        rel = relation_check(cutoff)
        rel_ok = all(v["holds"] for v in rel.values())
        proj_ok = True
        for a in range(cutoff + 1):
            try:
                hw_projector(a)
            except AssertionError:
                proj_ok = False
        gen_bad = [
            (a, b, c)
            for a in range(gen_cutoff + 1)
            for b in _monomials(a)
            for c in _monomials(a)
            if generator_word(a, b, c).evaluate() != hat(BElem(a, b, c))
        ]
        pair_bad = {t: len(pairing_compatibility_failures(*t)) for t in ((1, 1, 0), (1, 1, 2))}
        passed = rel_ok and proj_ok and not gen_bad and not any(pair_bad.values())
        obs = ", ".join(f"{k} observed coefficient {v['observed']}" for k, v in rel.items() if not v["holds"])
        detail = (
            f"relations {'hold' if rel_ok else 'fail: ' + obs}; projectors {proj_ok}; "
            f"generator failures {len(gen_bad)}; pairing failures {pair_bad}"
        )
        return passed, detail

    return _timed(8, "dual algebra", run)


def c9(cutoff=1):
    def run():
        sets = [PointedSet(()), PointedSet(("*",)), PointedSet(("p", "q"))]
        law_bad = {len(a): r for a in sets if any((r := comonad_laws(a, cutoff)).values())}
        rec_bad, theta_bad = [], []
        for n in range(3):
            x = build_Bn(n)
            z = zeta_coalgebra(x, max(n, cutoff))
            if not is_isomorphic(recover_structure(x.nodes, z), x):
                rec_bad.append(n)
            if theta_pushforward(x.nodes, z).coaction != coaction_Balpha(n).coaction:
                theta_bad.append(n)
        chi_bad = sum(len(chi_square_failures(a, b, cutoff)) for a in sets[1:] for b in sets[1:])
        tri_bad = sum(len(unit_triangle_failures(a, cutoff)) for a in sets)
        passed = not law_bad and not rec_bad and not theta_bad and not chi_bad and not tri_bad
        detail = (
            f"law failures {law_bad or 0}, recovery failures {rec_bad}, theta failures {theta_bad}, "
            f"chi square failures {chi_bad}, unit triangle failures {tri_bad}"
        )
        return passed, detail

    return _timed(9, "comonad", run)


CRITERIA = (c1, c2, c3, c4, c5, c6, c7, c8, c9)


def run_all(only=None):
    results = []
    for k, fn in enumerate(CRITERIA, start=1):
        if only and k not in only:
            continue
        results.append(fn())
    return results


def c10():
    t = time.perf_counter()
    results = run_all()
    seconds = time.perf_counter() - t
    failed = [r.number for r in results if not r.passed]
    passed = not failed and seconds <= 180
    return CriterionResult(10, "selftest aggregate", passed, f"failed criteria {failed}, wall time {seconds:.1f}s", seconds), results

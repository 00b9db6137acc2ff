"""Command-line front end.  JSON on stdout; exit codes 0 ok, 1 validation failure,
2 guard refusal, 64 usage error, 65 malformed input."""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import comodule_classifier as cc
from . import comonad_engine as ce
from . import crystal_core as core
from . import dual_algebra as da
from . import linear_bialgebra as lb
from . import set_bialgebra as sb
from . import sl2_monoid as sm
from . import tensor_ops as to
from .config import EngineConfig

EXIT_OK, EXIT_INVALID, EXIT_GUARD, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_cutoff():
    try:
        return EngineConfig.from_env().cutoff
    except ValueError as exc:
        raise InputError(str(exc))


# ------------------------------------------------------------------ parsing

_MONO = re.compile(r"^(?:x(?:\^(\d+))?)?(?:y(?:\^(\d+))?)?$")


def parse_monomial(s):
    s = s.strip()
    if s == "1":
        return core.Monomial(0, 0)
    m = _MONO.match(s)
    if not s or m is None:
        raise InputError(f"cannot read monomial {s!r}")
    i = 0 if "x" not in s else int(m.group(1) or 1)
    j = 0 if "y" not in s else int(m.group(2) or 1)
    return core.Monomial(i, j)


def parse_pair(s):
    """'b|bd' names b (x) bd^v; '1' is the unit."""
    if s.strip() == "1":
        return sb.UNIT
    if "|" not in s:
        raise InputError(f"expected b|bd, got {s!r}")
    b, bd = (parse_monomial(p) for p in s.split("|", 1))
    if b.degree != bd.degree:
        raise InputError("both slots must have the same degree")
    return sb.BElem(b.degree, b, bd)


def parse_set(s):
    if s is None or s == "":
        return ce.PointedSet(())
    labels = [p.strip() for p in s.split(",")]
    if any(not p for p in labels) or len(set(labels)) != len(labels):
        raise InputError(f"bad pointed set {s!r}")
    return ce.PointedSet(tuple(labels))


def read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        if path.lstrip().startswith(("{", "[")):
            return json.loads(path)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path!r}: {exc}")


def load_crystal(args):
    if getattr(args, "file", None):
        try:
            return core.from_json(read_json(args.file))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed crystal: {exc}")
    kind = getattr(args, "type", None) or "Bn"
    if kind == "Bn":
        if args.n is None:
            raise UsageError("--n is required for --type Bn")
        if args.n < 0:
            raise InputError("--n must be nonnegative")
        return core.build_Bn(args.n)
    if kind == "T":
        return core.build_T(args.lam if args.lam is not None else 0)
    raise UsageError(f"unknown crystal type {kind}")


def load_element(s):
    if s in da.FAMILIES:
        return da.symbolic(s)
    try:
        return da.BlockMatrixElement.from_json(read_json(s))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed block element: {exc}")


def emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n")


def emit_crystal(c, fmt):
    if fmt == "dot":
        sys.stdout.write(core.to_dot(c))
    else:
        emit(core.to_json(c))


# ------------------------------------------------------------------ verbs


def cmd_crystal(args):
    c = load_crystal(args)
    if args.action == "build":
        emit_crystal(c, args.format)
    elif args.action == "validate":
        vs = core.validate(c)
        emit({"valid": not vs, "violations": [
            {"node": str(v.node), "color": str(v.color), "axiom": v.axiom, "detail": v.detail} for v in vs
        ]})
        return EXIT_INVALID if vs else EXIT_OK
    elif args.action == "dual":
        emit_crystal(core.dual(c), args.format)
    elif args.action == "components":
        out = []
        for comp in core.components(c):
            hws = comp.highest_weight_nodes()
            out.append({
                "size": len(comp),
                "highest_weight": [list(comp.wt[b]) for b in hws],
                "nodes": [core.node_label(b) for b in comp.nodes],
            })
        emit(out)
    elif args.action == "dot":
        sys.stdout.write(core.to_dot(c))
    return EXIT_OK


def _mn_or_files(args):
    if args.left or args.right:
        if not (args.left and args.right):
            raise UsageError("give both --left and --right")
        return tuple(core.from_json(read_json(p)) for p in (args.left, args.right))
    if args.m is None or args.n is None:
        raise UsageError("give --m and --n, or --left and --right")
    if args.m < 0 or args.n < 0:
        raise InputError("--m and --n must be nonnegative")
    return core.build_Bn(args.m), core.build_Bn(args.n)


def cmd_tensor(args):
    a, b = _mn_or_files(args)
    emit_crystal(to.tensor(a, b), args.format)
    return EXIT_OK


def cmd_decompose(args):
    a, b = _mn_or_files(args)
    d = to.decompose(to.tensor(a, b))
    emit({
        "sizes": d.sizes(),
        "highest_weights": [list(p.component.wt[p.hw]) for p in d.parts],
        "highest_nodes": [core.node_label(p.hw) for p in d.parts],
    })
    return EXIT_OK


def cmd_commutor(args):
    if args.left and args.right:
        elem = (parse_monomial(args.left), parse_monomial(args.right))
        img = to.commutor_sl2(elem)
        emit({"image": [str(img[0]), str(img[1])], "oracle_agrees": img == to.commutor_oracle(elem)})
        return EXIT_OK
    if args.n is None or args.m is None:
        raise UsageError("give --left and --right, or --n and --m")
    table = {}
    agree = True
    for a in core.build_Bn(args.n).nodes:
        for b in core.build_Bn(args.m).nodes:
            img = to.commutor_sl2((a, b))
            agree &= img == to.commutor_oracle((a, b))
            table[f"{a}⊗{b}"] = f"{img[0]}⊗{img[1]}"
    emit({"table": table, "oracle_agrees": agree})
    return EXIT_OK if agree else EXIT_INVALID


def cmd_mul(args):
    a, b = parse_monomial(args.a), parse_monomial(args.b)
    if args.q:
        emit(str(sm.mu_q(a, b)))
    else:
        r = sm.mu0(a, b)
        emit("0" if r is None else str(r))
    return EXIT_OK


def cmd_bdelta(args):
    x1, x2 = sb.sdelta(parse_pair(args.elem))
    emit([str(x1), str(x2)])
    return EXIT_OK


def cmd_bmul(args):
    r = sb.smul(parse_pair(args.x), parse_pair(args.y))
    emit("0" if r is None else str(r))
    return EXIT_OK


def _set_comodule(d):
    try:
        carrier = tuple(str(c) for c in d["carrier"])
        co = {}
        for c, v in d["coaction"].items():
            if v is None:
                continue
            co[str(c)] = (parse_pair(f"{v['b']}|{v['bdual']}"), str(v["to"]))
        return sb.SetComodule(carrier, co)
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed comodule: {exc}")


def cmd_verify_comodule(args):
    if args.counterexample:
        m = sb.counterexample_comodule()
    elif args.file:
        m = _set_comodule(read_json(args.file))
    else:
        raise UsageError("give a comodule file or --counterexample")
    problems = sb.verify_comodule(m)
    emit({"problems": problems, "hat_C": list(sb.hatC(m).carrier) if not problems else None})
    return EXIT_INVALID if problems else EXIT_OK


def cmd_bimul(args):
    if args.word is not None:
        if args.convention not in lb.CONVENTIONS:
            raise InputError(f"unknown convention {args.convention}")
        try:
            r = lb.word_to_basis(args.word, args.convention)
        except ValueError as exc:
            raise InputError(str(exc))
    elif args.x and args.y:
        r = lb.bb_mul(parse_pair(args.x), parse_pair(args.y))
    else:
        raise UsageError("give --word, or --x and --y")
    emit(str(r))
    return EXIT_OK


def cmd_bidelta(args):
    emit(lb.bb_delta(parse_pair(args.elem)).to_json())
    return EXIT_OK


def cmd_normal_form(args):
    p = parse_pair(args.elem)
    w = lb.basis_to_normal_form(p, args.convention)
    ok = lb.word_to_basis(w, args.convention) == lb.IntCombination.basis(p)
    emit({"word": w, "roundtrip": ok})
    return EXIT_OK if ok else EXIT_INVALID


def cmd_classify(args):
    if args.file:
        bm = cc.crystal_to_based(load_crystal(args))
    elif args.m is not None and args.n is not None:
        bm = cc.based_tensor(cc.crystal_to_based(core.build_Bn(args.m)), cc.crystal_to_based(core.build_Bn(args.n)))
    else:
        raise UsageError("give a crystal file, or --m and --n")
    bad = cc.check_based(bm)
    if bad:
        emit({"valid": False, "problem": bad})
        return EXIT_INVALID
    cl = cc.classify(bm.comodule)
    emit({"valid": True, "multiplicities": {str(a): r for a, r in cl.multiplicities.items()}})
    return EXIT_OK


def cmd_dual(args):
    if args.action == "mul":
        emit(da.dual_mul(load_element(args.x), load_element(args.y)).truncate(args.cutoff).to_json())
        return EXIT_OK
    if args.action == "relations":
        rep = da.relation_check(args.cutoff)
        words = da.word_evaluation_failures(args.cutoff)
        emit({"relations": rep, "word_evaluation_failures": len(words)})
        return EXIT_OK if all(v["holds"] for v in rep.values()) and not words else EXIT_INVALID
    if args.action == "projector":
        if args.alpha is None or args.alpha < 0:
            raise InputError("--alpha must be a nonnegative integer")
        emit(da.hw_projector(args.alpha).to_json())
        return EXIT_OK
    if args.action == "pairing":
        if args.x and args.u:
            emit(da.pairing(lb.IntCombination.basis(parse_pair(args.x)), load_element(args.u)))
            return EXIT_OK
        fails = {f"{b},{bp},{a}": len(da.pairing_compatibility_failures(b, bp, a)) for b, bp, a in ((1, 1, 0), (1, 1, 2))}
        emit({"compatibility_failures": fails})
        return EXIT_OK if not any(fails.values()) else EXIT_INVALID
    raise UsageError(f"unknown dual action {args.action}")


def cmd_comonad(args):
    cutoff = args.cutoff
    if args.action == "laws":
        a = parse_set(args.set)
        rep = ce.comonad_laws(a, cutoff, guard=args.guard)
        emit({"size": len(ce.U(a, cutoff, args.guard)), "failures": rep})
        return EXIT_INVALID if any(rep.values()) else EXIT_OK
    if args.action in ("recover", "theta"):
        x = load_crystal(args)
        ce.check_guard(len(x), cutoff, args.guard)
        z = ce.zeta_coalgebra(x, cutoff)
        if args.action == "recover":
            r = ce.recover_structure(x.nodes, z)
            ok = core.is_isomorphic(r, x)
            emit({"isomorphic": ok, "crystal": core.to_json(r)})
        else:
            push = ce.theta_pushforward(x.nodes, z)
            ok = push.coaction == sb.crystal_coaction(x).coaction
            emit({
                "matches_coaction": ok,
                "coaction": {core.node_label(b): [str(v[0]), core.node_label(v[1])] for b, v in push.coaction.items()},
            })
        return EXIT_OK if ok else EXIT_INVALID
    if args.action == "chi":
        a, b = parse_set(args.a), parse_set(args.b)
        ce.check_guard(len(a) * len(b), cutoff, args.guard)
        sq = len(ce.chi_square_failures(a, b, cutoff))
        tri = len(ce.unit_triangle_failures(a, cutoff)) + len(ce.unit_triangle_failures(b, cutoff))
        emit({"square_failures": sq, "unit_triangle_failures": tri})
        return EXIT_INVALID if sq or tri else EXIT_OK
    raise UsageError(f"unknown comonad action {args.action}")


def cmd_selftest(args):
    from .selftest import run_all

    only = None
    if args.only:
        try:
            only = {int(k) for k in args.only.split(",")}
        except ValueError:
            raise InputError("--only takes comma-separated criterion numbers")
    results = run_all(only)
    for r in results:
        sys.stderr.write(r.line() + "\n")
    ok = all(r.passed for r in results)
    emit({
        "passed": ok,
        "criteria": [{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    })
    return EXIT_OK if ok else EXIT_INVALID


# ------------------------------------------------------------------ parser


def _crystal_source(p):
    p.add_argument("file", nargs="?", help="crystal JSON file, '-' for stdin")
    p.add_argument("--type", choices=("Bn", "T"))
    p.add_argument("--n", type=int)
    p.add_argument("--lam", type=int)


def build_parser():
    p = _Parser(prog="crysbi", description="sl2 crystals, their bialgebras and the crystal comonad")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    cr = sub.add_parser("crystal")
    cr.add_argument("action", choices=("build", "validate", "dual", "components", "dot"))
    _crystal_source(cr)
    cr.add_argument("--format", choices=("json", "dot"), default="json")
    cr.set_defaults(fn=cmd_crystal)

    for name, fn in (("tensor", cmd_tensor), ("decompose", cmd_decompose)):
        t = sub.add_parser(name)
        t.add_argument("--m", type=int)
        t.add_argument("--n", type=int)
        t.add_argument("--left")
        t.add_argument("--right")
        t.add_argument("--format", choices=("json", "dot"), default="json")
        t.set_defaults(fn=fn)

    c = sub.add_parser("commutor")
    c.add_argument("--left")
    c.add_argument("--right")
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.set_defaults(fn=cmd_commutor)

    m = sub.add_parser("mul")
    m.add_argument("--a", required=True)
    m.add_argument("--b", required=True)
    m.add_argument("--q", action="store_true", help="keep the power of q")
    m.set_defaults(fn=cmd_mul)

    bd = sub.add_parser("bdelta")
    bd.add_argument("--elem", required=True)
    bd.set_defaults(fn=cmd_bdelta)
    bm = sub.add_parser("bmul")
    bm.add_argument("--x", required=True)
    bm.add_argument("--y", required=True)
    bm.set_defaults(fn=cmd_bmul)
    vc = sub.add_parser("verify-comodule")
    vc.add_argument("file", nargs="?")
    vc.add_argument("--counterexample", action="store_true")
    vc.set_defaults(fn=cmd_verify_comodule)

    bi = sub.add_parser("bimul")
    bi.add_argument("--word")
    bi.add_argument("--x")
    bi.add_argument("--y")
    bi.add_argument("--convention", default="paper")
    bi.set_defaults(fn=cmd_bimul)
    bde = sub.add_parser("bidelta")
    bde.add_argument("--elem", required=True)
    bde.set_defaults(fn=cmd_bidelta)
    nf = sub.add_parser("normal-form")
    nf.add_argument("--elem", required=True)
    nf.add_argument("--convention", choices=tuple(lb.CONVENTIONS), default="paper")
    nf.set_defaults(fn=cmd_normal_form)

    cl = sub.add_parser("classify")
    _crystal_source(cl)
    cl.add_argument("--m", type=int)
    cl.set_defaults(fn=cmd_classify)

    du = sub.add_parser("dual")
    du.add_argument("action", choices=("mul", "relations", "projector", "pairing"))
    du.add_argument("--x")
    du.add_argument("--y")
    du.add_argument("--u")
    du.add_argument("--alpha", type=int)
    du.add_argument("--cutoff", type=int)
    du.set_defaults(fn=cmd_dual)

    co = sub.add_parser("comonad")
    co.add_argument("action", choices=("laws", "recover", "theta", "chi"))
    _crystal_source(co)
    co.add_argument("--set", default="*")
    co.add_argument("--a", default="*")
    co.add_argument("--b", default="*")
    co.add_argument("--cutoff", type=int)
    co.add_argument("--guard", type=int, default=ce.DEFAULT_GUARD)
    co.set_defaults(fn=cmd_comonad)

    st = sub.add_parser("selftest")
    st.add_argument("--only")
    st.set_defaults(fn=cmd_selftest)
    return p


def run(argv):
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "verb", None):
            raise UsageError("missing verb")
        if hasattr(args, "cutoff") and args.cutoff is None:
            args.cutoff = default_cutoff()
        if getattr(args, "cutoff", 0) is not None and getattr(args, "cutoff", 0) < 0:
            raise InputError("--cutoff must be nonnegative")
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except core.GuardError as exc:
        sys.stderr.write(f"guard refused: {exc}\n")
        return EXIT_GUARD
    except (InputError, ValueError, KeyError) as exc:
        sys.stderr.write(f"malformed input: {exc}\n")
        return EXIT_INPUT


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()

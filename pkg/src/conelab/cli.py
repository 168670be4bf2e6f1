"""conelab command line.

JSON goes to stdout (or --out).  --pretty also prints a plain table to
stderr, so stdout stays machine-readable.  Exit codes: 0 success, 1 a check
or verification failed, 2 usage error, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .balls import cayley_ball
from .certificate import Certificate
from .cones import EnumCone, SignSeqCone, SmirnovCone, cone_axiom_check, cone_from_json
from .exactnum import QuadIrr, format_rational, parse_rational, parse_real
from .groups import RELATORS, Group, element_from_json, hinf_from_word, pl_eval
from .topology import condensed_at_resolution, e0_report
from .verify import verify_certificate
from .witness import (
    bs_freepart_witness,
    condensation_witness,
    conjugacy_separator_F,
    good_function,
    separator_certificate,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def max_radius() -> int:
    raw = os.environ.get("CONELAB_MAX_RADIUS", "8")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"CONELAB_MAX_RADIUS is not an integer: {raw!r}") from None


def _radius(r: int) -> int:
    cap = max_radius()
    if r < 0:
        raise InputError("radius must be >= 0")
    if r > cap:
        raise InputError(f"radius {r} exceeds CONELAB_MAX_RADIUS={cap}")
    return r


def _alpha(text: str) -> QuadIrr:
    x = parse_real(text)
    if not isinstance(x, QuadIrr):
        raise InputError(f"{text!r} is rational; Smirnov cones need an irrational alpha")
    return x


def _json_arg(text: str):
    """Inline JSON, or @path to read it from a file."""
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(text)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(v) for v in json.loads(text)]
    return [int(v) for v in text.replace(",", " ").split()]


def _rat_list(text: str):
    return [parse_rational(v) for v in text.replace(",", " ").split()]


def _element(args, group: Group):
    if args.element is not None:
        g = element_from_json(_json_arg(args.element))
        if group.tag == "bs" and g.n != group.n:
            raise InputError(f"element lives in BS(1,{g.n}), expected n={group.n}")
        return g
    if args.word is None:
        raise InputError("give --word or --element")
    if group.tag == "hinf":
        return group.from_word(_int_list(args.word))
    return group.from_word(args.word)


def _signseq(args) -> SignSeqCone:
    return SignSeqCone(_int_list(args.prefix) if args.prefix else [], args.tail)


def _enum_cone(args) -> EnumCone:
    return EnumCone(_rat_list(args.prefix)) if args.prefix else EnumCone()


# -- pretty tables ------------------------------------------------------------


def _table(rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    return "\n".join("  ".join(c.ljust(widths[i]) for i, c in enumerate(r)).rstrip() for r in rows)


def _pretty(doc) -> str:
    if isinstance(doc, dict) and "checks" in doc and "kind" in doc:
        rows = [["claim", "lhs", "rel", "rhs"]]
        for c in doc["checks"]:
            rows.append([c["claim"], _short(c["lhs"]), c["rel"], _short(c["rhs"])])
        return f"certificate: {doc['kind']}\n" + _table(rows)
    if isinstance(doc, dict):
        return _table([[k, _short(v)] for k, v in doc.items()])
    return str(doc)


def _short(v, width: int = 60) -> str:
    s = v if isinstance(v, str) else json.dumps(v)
    return s if len(s) <= width else s[: width - 3] + "..."


# -- commands -----------------------------------------------------------------


def cmd_bs_sign(args):
    cone = SmirnovCone(args.n, _alpha(args.alpha))
    g = _element(args, Group("bs", args.n))
    return {"cone": cone.to_json(), "element": g.to_json(), "image": str(g(cone.alpha)),
            "sign": str(cone.sign(g))}, EXIT_OK


def cmd_bs_separate(args):
    return separator_certificate(_alpha(args.alpha), _alpha(args.beta), args.n), EXIT_OK


def cmd_bs_freepart(args):
    h = _element(args, Group("bs", args.n))
    return bs_freepart_witness(_alpha(args.alpha), args.n, h), EXIT_OK


def cmd_bs_condense(args):
    cone = SmirnovCone(args.n, _alpha(args.alpha))
    group = Group("bs", args.n)
    if args.positives:
        return condensation_witness(cone, [group.from_word(w) for w in args.positives.split(",")]), EXIT_OK
    gens = args.generators.split(",") if args.generators else None
    return condensed_at_resolution(cone, cayley_ball(group, gens, _radius(args.radius))), EXIT_OK


def cmd_f_sign(args):
    cone = _enum_cone(args)
    g = _element(args, Group("f"))
    N, r = cone.first_moved(g)
    return {"cone": cone.to_json(), "element": g.to_json(), "N": N, "r_N": format_rational(r),
            "image": format_rational(pl_eval(g, r)), "sign": str(cone.sign(g))}, EXIT_OK


def cmd_f_goodfn(args):
    S = _rat_list(args.S) if args.S else []
    return good_function(S, parse_rational(args.x), parse_rational(args.y)), EXIT_OK


def cmd_f_separate(args):
    return conjugacy_separator_F(_enum_cone(args), _element(args, Group("f"))), EXIT_OK


def cmd_f_relcheck(args):
    group = Group("f")
    rows = []
    for word in RELATORS:
        g = group.from_word(word)
        rows.append({"relator": word, "identity": g.is_identity(), "map": g.to_json()})
    ok = all(r["identity"] for r in rows)
    return {"ok": ok, "relators": rows}, EXIT_OK if ok else EXIT_FAIL


def cmd_hinf_mul(args):
    u, v = hinf_from_word(_int_list(args.u)), hinf_from_word(_int_list(args.v))
    return {"u": u.to_json(), "v": v.to_json(), "product": (u * v).to_json()}, EXIT_OK


def cmd_hinf_sign(args):
    cone = _signseq(args)
    w = _element(args, Group("hinf"))
    return {"cone": cone.to_json(), "element": w.to_json(), "sign": str(cone.sign(w))}, EXIT_OK


def cmd_hinf_conj(args):
    cone = _signseq(args)
    w = _element(args, Group("hinf"))
    conj = cone.conjugate(w)
    return {"cone": cone.to_json(), "by": w.to_json(), "conjugate": conj.to_json(),
            "changed": cone.differing_positions(conj)}, EXIT_OK


def _random_hinf_word(rng: random.Random, length: int, m: int) -> list[int]:
    return [rng.choice((1, -1)) * rng.randint(1, m) for _ in range(length)]


def cmd_hinf_e0check(args):
    radius = _radius(args.radius)
    if args.word is not None or args.element is not None:
        reports = [e0_report(_signseq(args), _element(args, Group("hinf")), radius)]
    else:
        rng = random.Random(args.seed)
        reports = []
        for _ in range(args.samples):
            bits = [rng.randint(0, 1) for _ in range(rng.randint(0, 5))]
            cone = SignSeqCone(bits, rng.randint(0, 1))
            w = hinf_from_word(_random_hinf_word(rng, rng.randint(1, 10), 4))
            reports.append(e0_report(cone, w, radius))
    ok = all(r["ok"] for r in reports)
    return {"ok": ok, "seed": args.seed, "reports": reports}, EXIT_OK if ok else EXIT_FAIL


def _ball_group(args) -> Group:
    return Group(args.group, args.n if args.group == "bs" else None)


def _ball_gens(args, group: Group):
    if args.generators:
        return _int_list(args.generators) if group.tag == "hinf" else args.generators.split(",")
    if group.tag == "hinf":
        raise InputError("H_inf balls need --generators, e.g. 1,2,3")
    return None


def cmd_ball_build(args):
    group = _ball_group(args)
    return cayley_ball(group, _ball_gens(args, group), _radius(args.radius)).to_json(), EXIT_OK


def cmd_ball_check_axioms(args):
    cone = cone_from_json(_json_arg(args.cone))
    group = cone.group
    radius = _radius(args.radius)
    ball = cayley_ball(group, _ball_gens(args, group), radius)
    report = cone_axiom_check(cone, ball)
    doc = {"cone": cone.to_json(), "ball": ball.spec(), "ball_size": len(ball)}
    doc.update(report.to_json())
    return doc, EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args):
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read certificate: {exc}") from None
    verdict = verify_certificate(doc)
    out = {"file": args.file, "kind": doc.get("kind") if isinstance(doc, dict) else None}
    out.update(verdict.to_json())
    return out, EXIT_OK if verdict.ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------


def _common(p):
    p.add_argument("--out", help="write JSON here instead of stdout")
    p.add_argument("--pretty", action="store_true", help="also print a table to stderr")


def _elem_args(p, word_help):
    p.add_argument("--word", help=word_help)
    p.add_argument("--element", help="element JSON, inline or @file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conelab", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="area", metavar="{bs,f,hinf,ball,verify}")
    top.required = True

    bs = top.add_parser("bs", help="BS(1,n) and Smirnov cones").add_subparsers(dest="cmd")
    bs.required = True
    p = bs.add_parser("sign", help="sign of an element in P_alpha")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    _elem_args(p, "word over a, A, b, B")
    p.set_defaults(func=cmd_bs_sign)
    p = bs.add_parser("separate", help="element of P_alpha not in P_beta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_bs_separate)
    p = bs.add_parser("freepart", help="discriminator for h P_alpha h^-1 vs P_alpha")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    _elem_args(p, "word for h")
    p.set_defaults(func=cmd_bs_freepart)
    p = bs.add_parser("condense", help="conjugate of P_alpha agreeing on a ball")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--generators", help="comma-separated letters (default a,b)")
    p.add_argument("--positives", help="comma-separated words; use the least one as conjugator")
    p.set_defaults(func=cmd_bs_condense)

    f = top.add_parser("f", help="Thompson's F and the enumeration cone").add_subparsers(dest="cmd")
    f.required = True
    p = f.add_parser("sign", help="sign in the enumeration cone")
    p.add_argument("--prefix", help="rationals listed before the standard enumeration")
    _elem_args(p, "word over a, A, b, B")
    p.set_defaults(func=cmd_f_sign)
    p = f.add_parser("goodfn", help="g fixing S, raising x, lowering y")
    p.add_argument("--S", default="", help="comma-separated rationals")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_f_goodfn)
    p = f.add_parser("separate", help="g in P_e with h^-1 g h not in P_e")
    p.add_argument("--prefix")
    _elem_args(p, "word for h")
    p.set_defaults(func=cmd_f_separate)
    p = f.add_parser("relcheck", help="evaluate the defining relators")
    p.set_defaults(func=cmd_f_relcheck)

    hinf = top.add_parser("hinf", help="H_inf and sign-sequence cones").add_subparsers(dest="cmd")
    hinf.required = True
    p = hinf.add_parser("mul", help="normal form of u v")
    p.add_argument("--u", required=True, help="signed indices, e.g. 1,-2,3")
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_hinf_mul)
    for name, func, helptext in (
        ("sign", cmd_hinf_sign, "sign of w"),
        ("conj", cmd_hinf_conj, "the cone w P w^-1"),
        ("e0check", cmd_hinf_e0check, "flip locality and equivariance"),
    ):
        p = hinf.add_parser(name, help=helptext)
        p.add_argument("--prefix", default="", help="bits eps_1, eps_2, ... before the tail")
        p.add_argument("--tail", type=int, choices=(0, 1), default=1)
        _elem_args(p, "signed indices, e.g. 1,-2,3 (use --word=-1,2 when the first is negative)")
        if name == "e0check":
            p.add_argument("--radius", type=int, default=3)
            p.add_argument("--samples", type=int, default=10, help="random cases when no word is given")
            p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)

    ball = top.add_parser("ball", help="Cayley balls").add_subparsers(dest="cmd")
    ball.required = True
    p = ball.add_parser("build", help="list a ball with shortest words")
    p.add_argument("--group", choices=("bs", "f", "hinf"), required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--generators")
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_ball_build)
    p = ball.add_parser("check-axioms", help="trichotomy and closure of a cone on a ball")
    p.add_argument("--cone", required=True, help="cone JSON, inline or @file")
    p.add_argument("--generators")
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_ball_check_axioms)

    p = top.add_parser("verify", help="re-check a certificate file ('-' for stdin)")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    for sub in (bs, f, hinf, ball):
        for leaf in sub.choices.values():
            _common(leaf)
    _common(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc, code = args.func(args)
    except (InputError, ValueError, TypeError, KeyError, OSError) as exc:
        print(f"conelab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(doc, Certificate):
        doc = doc.to_json()
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.pretty:
        print(_pretty(doc), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

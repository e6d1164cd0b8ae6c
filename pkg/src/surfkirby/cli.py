"""Command-line front end.

Exit codes: 0 success, 1 domain error (invalid diagram, failed condition,
inapplicable move), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Sequence

from .algebra import CycloNumber
from .category import (FROBENIUS_CORE, CategoryError, CategoryParams, cap_scalar, cup_scalar,
                       frobenius_data, geometric_cup_scalar, module_data, swim_check,
                       transparent_degrees, verify_frobenius, verify_module)
from .diagram import Diagram, DiagramError, parse, serialize
from .engine import EvaluationError, context_for, eval_closed
from .fixtures import FIXTURES, get
from .invariant import cyclo_json, deltas, invariant
from .moves import KINDS, MoveError, MoveSpec, apply_move, check_invariance, fuzz


class UsageError(Exception):
    pass


def _params_from(args, base: CategoryParams | None = None) -> CategoryParams:
    N = args.N if args.N is not None else (base.N if base else None)
    if N is None:
        raise UsageError("--N is required")
    t = args.t if args.t is not None else (base.t if base else 1)
    d = args.H if args.H is not None else (base.d if base else 1)
    return CategoryParams(N, t, d)


def load(source: str, args) -> tuple[Diagram, str | None]:
    """Read a diagram file or ``fixtures:<name>`` and apply header overrides."""
    name = None
    if source.startswith("fixtures:"):
        name = source.split(":", 1)[1]
        try:
            text = get(name).text
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    diag = parse(text)
    params = _params_from(args, diag.params)
    diag = replace(diag, params=params,
                   c=args.c if args.c is not None else diag.c,
                   g=args.g if args.g is not None else diag.g)
    if diag.c is not None:
        frob = frobenius_data(params, diag.c)
        if diag.g is not None:
            module_data(params, frob, diag.g)
    return diag, name


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_eval(args) -> int:
    diag, _ = load(args.input, args)
    x = eval_closed(diag, context_for(diag, args.budget))
    payload = {"raw": str(x), "coeffs": cyclo_json(x)["coeffs"], "float": x.float_str(),
               "modulus": x.modulus}
    _emit(args, payload, f"raw   = {x}\nfloat ~ {x.float_str()}")
    return 0


def cmd_invariant(args) -> int:
    diag, name = load(args.input, args)
    rep = invariant(diag, context_for(diag, args.budget), fixture_name=name)
    payload = rep.to_json()
    tri = rep.inertia
    lines = [
        f"raw      = {rep.raw}   (~ {rep.raw.float_str()})",
        f"inertia  = b+={tri.b_plus} b-={tri.b_minus} b0={tri.b_zero}",
        f"bands    = s={rep.s} omega={rep.omega}   k={rep.k} kappa={rep.kappa}",
        f"deltas   = Delta_B={rep.delta_B} Delta_C={rep.delta_C} Delta''={rep.delta_pp}",
        "value    = " + (f"{rep.value}   (~ {rep.value.float_str()})" if rep.value is not None
                         else "undefined"),
    ]
    lines += [f"warning: {w}" for w in rep.warnings]
    lines += [f"error: {e}" for e in rep.errors]
    _emit(args, payload, "\n".join(lines))
    return 0 if rep.ok else 1


def cmd_info(args) -> int:
    p = _params_from(args)
    dB, dC, dpp = deltas(p)
    payload = {"N": p.N, "t": p.t, "H": p.d, "subgroup": list(p.subgroup),
               "transparent": list(transparent_degrees(p, "full")),
               "transparent_to_subgroup": list(transparent_degrees(p, "sub")),
               "delta_B": dB, "delta_C": dC, "delta_pp": dpp}
    text = (f"Z/{p.N}, t={p.t}, H=<{p.d}> = {set(p.subgroup)}\n"
            f"transparent degrees: {set(payload['transparent'])}\n"
            f"Delta_B={dB} Delta_C={dC} Delta''={dpp}")
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    p = _params_from(args)
    if args.c is None or args.g is None:
        raise UsageError("verify needs --c and --g")
    frob = frobenius_data(p, args.c)
    mod = module_data(p, frob, args.g)
    fr = verify_frobenius(frob)
    md = verify_module(frob, mod)
    sw = swim_check(p, frob, mod)
    errors = []
    try:
        k = cap_scalar(frob, mod)
        kappa = cup_scalar(frob, mod)
    except CategoryError as exc:
        k = kappa = None
        errors.append(str(exc))
    geo = geometric_cup_scalar(frob, mod)
    checks = {f"frobenius.{n}": fr[n] for n in FROBENIUS_CORE}
    checks.update({f"module.{n}": v for n, v in md.items()})
    checks["swim.b_transparent"] = sw["b_transparent"]
    info = {"frobenius.symmetric_swap": fr["symmetric_swap"],
            "frobenius.symmetric_braiding": fr["symmetric_braiding"],
            "swim.fully_transparent": sw["transparent"]}
    ok = all(checks.values()) and not errors

    def val(x: CycloNumber | None):
        return None if x is None else str(x)

    payload = {"ok": ok, "checks": checks, "informational": info, "k": val(k),
               "kappa": val(kappa), "geometric_cup_scalar": val(geo),
               "swim_image_degrees": sw["image_degrees"], "errors": errors}
    lines = [f"{'ok  ' if v else 'FAIL'} {n}" for n, v in checks.items()]
    lines += [f"info {n} = {v}" for n, v in info.items()]
    lines.append(f"k = {val(k)}, kappa = {val(kappa)}, "
                 f"single-band cup factor = {val(geo)}")
    lines.append(f"swim image degrees = {sw['image_degrees']}")
    lines += [f"error: {e}" for e in errors]
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 1


def _parse_at(text: str) -> tuple[int, int]:
    try:
        r, c = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--at expects row,col (got {text!r})") from None
    return r, c


def _move_params(pairs: Sequence[str]) -> dict:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise UsageError(f"--param expects key=value (got {item!r})")
        k, v = item.split("=", 1)
        out[k] = {"true": True, "false": False}.get(v.lower(), v)
    return out


def cmd_move(args) -> int:
    diag, _ = load(args.input, args)
    if args.move is None or args.at is None:
        raise UsageError("move needs --move and --at")
    r, c = _parse_at(args.at)
    params = _move_params(args.param or [])
    if args.over is not None:
        params["over"] = args.over
    spec = MoveSpec.make(args.move, r, c, **params)
    out = apply_move(diag, spec)
    chk = check_invariance(diag, out)
    payload = {"move": spec.to_json(), "diagram": serialize(out), "invariant_equal": chk.equal,
               "before": chk.left.to_json(), "after": chk.right.to_json()}
    _emit(args, payload, serialize(out) + f"# invariant preserved: {chk.equal}")
    return 0


def cmd_fuzz(args) -> int:
    diag, _ = load(args.input, args)
    res = fuzz(diag, args.seed, args.steps)
    chk = check_invariance(diag, res.diagram)
    payload = {"seed": args.seed, "steps": args.steps, "trace": res.trace,
               "invariant_equal": chk.equal, "diagram": serialize(res.diagram),
               "before": chk.left.to_json(), "after": chk.right.to_json()}
    lines = []
    for t in res.trace:
        m = t["move"]
        if m is None:
            lines.append(f"step {t['step']}: {t['note']}")
            continue
        extra = {k: v for k, v in m.items() if k not in ("kind", "at")}
        lines.append(f"step {t['step']}: {MoveSpec.make(m['kind'], *m['at'], **extra)}")
    lines.append(f"invariant preserved: {chk.equal}")
    _emit(args, payload, "\n".join(lines))
    return 0 if chk.equal else 1


def cmd_fixtures(args) -> int:
    if args.action == "list":
        payload = {"fixtures": [{"name": f.name, "note": f.note} for f in FIXTURES.values()]}
        _emit(args, payload, "\n".join(f"{f.name:14s} {f.note}" for f in FIXTURES.values()))
        return 0
    if not args.name:
        raise UsageError("fixtures emit needs a name")
    try:
        fx = get(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    _emit(args, {"name": fx.name, "text": fx.text}, fx.text.rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surfkirby", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--N", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--H", type=int, help="generator of the subgroup H")
    common.add_argument("--c", type=int)
    common.add_argument("--g", type=int)
    common.add_argument("--budget", type=int, help="maximum number of live states")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (("eval", "raw evaluation"), ("invariant", "normalized invariant")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("input", help="diagram file or fixtures:<name>")
    sub.add_parser("info", parents=[common], help="category constants")
    sub.add_parser("verify", parents=[common], help="check the algebra and module data")
    sp = sub.add_parser("move", parents=[common], help="apply one move")
    sp.add_argument("input")
    sp.add_argument("--move", choices=KINDS)
    sp.add_argument("--at")
    sp.add_argument("--over", type=int)
    sp.add_argument("--param", action="append", help="extra move parameter key=value")
    sp = sub.add_parser("fuzz", parents=[common], help="random move sequence")
    sp.add_argument("input")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--steps", type=int, default=10)
    sp = sub.add_parser("fixtures", parents=[common], help="list or emit fixtures")
    sp.add_argument("action", choices=("list", "emit"))
    sp.add_argument("name", nargs="?")
    return parser


COMMANDS = {"eval": cmd_eval, "invariant": cmd_invariant, "info": cmd_info,
            "verify": cmd_verify, "move": cmd_move, "fuzz": cmd_fuzz, "fixtures": cmd_fixtures}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DiagramError, CategoryError, EvaluationError, MoveError, ValueError) as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

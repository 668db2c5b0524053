"""Command-line front end.

Exit codes: 0 on success (including "verified", "rejected" and
"undetermined" verdicts), 1 on usage or data errors, 2 when a bound is
reported "violated".
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .algebra import PRESETS, AlgebraError, BasedAlgebra, load_algebra
from .complexes import (
    ComplexError,
    complex_from_json,
    dual_complex,
    homological_cowidth,
    homological_width,
    projective_normalize,
    resolution_complex,
    sup_inf,
)
from .contexts import BOUND_FAMILY, ContextError, iter_suite, verify_inequality
from .homdim import BOUNDS, Bracket, BoundError, bound_sides, compare, finitistic_dimension, global_dimension
from .modules import (
    DEFAULT_CAP,
    ModuleError,
    dual_module,
    ext_dims,
    injective_dimension,
    minimal_resolution,
    module_from_json,
    named_module,
    projective_dimension,
    regular_module,
    right_projective,
    simple_module,
    tor_dims,
)

EXIT_OK, EXIT_ERROR, EXIT_VIOLATED = 0, 1, 2
DATA_ERRORS = (AlgebraError, ModuleError, ComplexError, ContextError, BoundError, ValueError, OSError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for "violated"
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ------------------------------------------------------------------ inputs
def _algebra(spec: str) -> BasedAlgebra:
    return load_algebra(spec)


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise ValueError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from exc


def _module(a: BasedAlgebra, spec: str, side: str = "left"):
    """Named module (S1, P2, I1, A, DA) or a module JSON file."""
    if spec.endswith(".json"):
        m = module_from_json(_load_json(spec), a)
        if m.side != side:
            raise ModuleError(f"{spec} holds a {m.side} module; a {side} module is needed here")
        m.name = spec
        return m
    if side == "left":
        m = named_module(a, spec)
    else:
        kind, rest = spec[:1], spec[1:]
        if spec == "A":
            m = regular_module(a, "right")
        elif spec == "DA":
            m = dual_module(regular_module(a, "left"))
        elif kind in "SP" and rest.isdigit():
            v = int(rest) - 1
            if not 0 <= v < a.num_vertices:
                raise ModuleError(f"vertex {rest} out of range")
            m = simple_module(a, v, "right") if kind == "S" else right_projective(a, v)
        else:
            raise ModuleError(f"unknown right module name {spec!r} (use S<i>, P<i>, A, DA or a .json file)")
    m.name = spec
    return m


def _complex(a: BasedAlgebra, path: str):
    return complex_from_json(_load_json(path), a)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from exc


def _str_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _bimodule_spec(text: str):
    if text == "k":
        return "simple"
    if text.startswith("k(") and text.endswith(")"):
        return {"simple": _int_list(text[2:-1])}
    return text


def _bracket_value(text: str) -> Bracket:
    t = text.strip()
    if t in ("inf", "infinity"):
        return Bracket(math.inf, math.inf)
    if t.startswith(">="):
        return Bracket(int(t[2:]), None)
    if t.startswith("[") and t.endswith("]"):
        lo, hi = (x.strip() for x in t[1:-1].split(","))
        return Bracket(int(lo), None if hi == "?" else (math.inf if hi == "inf" else int(hi)))
    return Bracket.exact(int(t))


# ----------------------------------------------------------------- output
def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2, sort_keys=False, default=str)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _resolution_terms(m, depth: int) -> list[str]:
    res = minimal_resolution(m, depth, detect_period=True)
    terms = []
    for verts in res.vertices:
        terms.append(" + ".join(f"P{v + 1}" for v in verts) if verts else "0")
    return terms


# ---------------------------------------------------------------- commands
def cmd_validate(args) -> int:
    a = _algebra(args.algebra)
    info = {
        "dim": a.dim,
        "vertices": a.num_vertices,
        "labels": list(a.labels),
        "split_basic": bool(a.split_basic) if a.idempotents is not None else None,
        "radical_dim": a.radical[0].shape[0],
    }
    lines = [f"algebra {a.name or args.algebra}: ok", f"  dim {a.dim}, vertices {a.num_vertices}, radical dim {info['radical_dim']}"]
    if args.module:
        m = _module(a, args.module, args.side)
        info["module_dim"] = m.dim
        lines.append(f"module {args.module}: ok, dim {m.dim}")
    if args.complex:
        c = _complex(a, args.complex)
        info["complex_range"] = [c.lo, c.hi]
        lines.append(f"complex {args.complex}: ok, degrees {c.lo}..{c.hi}")
    _emit(args, {"command": "validate", "algebra": args.algebra, "valid": True, "result": info}, lines)
    return EXIT_OK


def cmd_pd(args, injective: bool = False) -> int:
    a = _algebra(args.algebra)
    m = _module(a, args.module, args.side)
    val = injective_dimension(m, args.cap) if injective else projective_dimension(m, args.cap)
    target = dual_module(m) if injective else m
    terms = _resolution_terms(target, min(args.cap, args.max_i) + 1) if target.dim else ["0"]
    name = "injdim" if injective else "pd"
    lines = [f"{name}({args.module}) = {val}"]
    label = "injective coresolution (duals of)" if injective else "minimal projective resolution"
    lines.append(f"  {label}: " + " <- ".join(terms))
    payload = {"command": name, "algebra": args.algebra, "module": args.module,
               "result": {"value": val.to_json(), "display": str(val), "witnesses": terms}}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_resolve(args) -> int:
    a = _algebra(args.algebra)
    m = _module(a, args.module, args.side)
    res = minimal_resolution(m, args.max_i, detect_period=True)
    terms = [[v + 1 for v in verts] for verts in res.vertices]
    status = ("terminates" if res.length is not None else
              f"periodic: syzygy {res.periodic[1]} repeats syzygy {res.periodic[0]}" if res.periodic else
              f"truncated at degree {len(terms) - 1}")
    lines = [f"resolution of {args.module} ({status})"]
    lines += [f"  P_{k} = " + (" + ".join(f"P{v}" for v in t) if t else "0") for k, t in enumerate(terms)]
    payload = {"command": "resolve", "algebra": args.algebra, "module": args.module,
               "result": {"terms": terms, "length": res.length,
                          "periodic": list(res.periodic) if res.periodic else None, "status": status}}
    _emit(args, payload, lines)
    return EXIT_OK


def _complex_for(args, a, injective: bool):
    if bool(args.module) == bool(args.complex):
        raise UsageError("give exactly one of --module or --complex")
    if args.complex:
        return _complex(a, args.complex)
    m = _module(a, args.module, "left")
    if injective:
        # injective coresolution: dual of the projective resolution of D(M)
        r = resolution_complex(dual_module(m), args.cap)
        if r is None:
            raise ModuleError(f"injective dimension of {args.module} exceeds cap {args.cap} or is infinite")
        return dual_complex(r)
    r = projective_normalize(m, args.cap).complex
    if r is None:
        raise ModuleError(f"projective dimension of {args.module} exceeds cap {args.cap} or is infinite")
    return r


def cmd_width(args, co: bool = False) -> int:
    a = _algebra(args.algebra)
    c = _complex_for(args, a, co)
    if not co and args.complex:
        norm = projective_normalize(c, args.cap)
        if norm.complex is None:
            raise ComplexError(norm.diagnostic or "could not replace the complex by projectives")
        c = norm.complex
    val = homological_cowidth(c, args.cap) if co else homological_width(c, args.cap)
    s, t = sup_inf(c)
    name = "cowidth" if co else "width"
    enc = lambda x: x if math.isfinite(x) else ("inf" if x > 0 else "-inf")
    lines = [f"{name} = {val}  (sup {s}, inf {t})"]
    payload = {"command": name, "algebra": args.algebra,
               "result": {"value": val.to_json(), "display": str(val), "sup": enc(s), "inf": enc(t)}}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_tor(args) -> int:
    a = _algebra(args.algebra)
    m = _module(a, args.right, "right")
    n = _module(a, args.left, "left")
    dims = tor_dims(m, n, max_i=args.max_i, cap=args.cap)
    lines = [f"dim Tor_{i}({args.right}, {args.left}) = {d}" for i, d in enumerate(dims)]
    payload = {"command": "tor", "algebra": args.algebra, "right": args.right, "left": args.left,
               "result": {"dims": [d.to_json() for d in dims]}}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ext(args) -> int:
    a = _algebra(args.algebra)
    m = _module(a, args.module, "left")
    n = _module(a, args.target, "left")
    dims = ext_dims(m, n, max_i=args.max_i, cap=args.cap)
    lines = [f"dim Ext^{i}({args.module}, {args.target}) = {d}" for i, d in enumerate(dims)]
    payload = {"command": "ext", "algebra": args.algebra, "module": args.module, "target": args.target,
               "result": {"dims": [d.to_json() for d in dims]}}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_findim(args) -> int:
    a = _algebra(args.algebra)
    rep = finitistic_dimension(a, args.cap, seed=args.seed)
    lines = [f"findim = {rep.value}  ({rep.method})"] + [f"  witness: {w}" for w in rep.witnesses]
    lines += [f"  note: {n}" for n in rep.notes]
    _emit(args, {"command": "findim", "algebra": args.algebra, "result": rep.to_json()}, lines)
    return EXIT_OK


def cmd_gldim(args) -> int:
    a = _algebra(args.algebra)
    val = global_dimension(a, args.cap)
    _emit(args, {"command": "gldim", "algebra": args.algebra,
                 "result": {"value": val.to_json(), "display": str(val)}}, [f"gldim = {val}"])
    return EXIT_OK


def _instance_from_args(args) -> dict:
    inst: dict = {}
    if args.instance:
        inst.update(_load_json(args.instance))
    for key in ("S", "T", "R"):
        v = getattr(args, key)
        if v is not None:
            inst[key] = v
    if args.M is not None:
        inst["M"] = _bimodule_spec(args.M)
    if args.e is not None:
        inst["e"] = _int_list(args.e)
    for key in ("I1", "I2", "I", "ideal"):
        v = getattr(args, key)
        if v is not None:
            inst[key] = _str_list(v)
    if args.multiplicities is not None:
        inst["multiplicities"] = _int_list(args.multiplicities)
    if args.rad_power is not None:
        inst["rad_power"] = args.rad_power
    if args.subring is not None:
        inst["S"] = args.subring
    return inst


def cmd_verify(args) -> int:
    bid = args.bound_id
    if bid not in BOUNDS and bid not in BOUND_FAMILY:
        raise UsageError(f"unknown bound id {bid!r}; known: {', '.join(sorted(set(BOUNDS) | set(BOUND_FAMILY)))}")
    if args.input:
        # formula mode: numeric inputs, hypotheses taken as given
        vals = {}
        for item in args.input:
            if "=" not in item:
                raise UsageError(f"--input expects key=value, got {item!r}")
            k, v = item.split("=", 1)
            vals[k.strip()] = _bracket_value(v)
        lhs, rhs = bound_sides(bid, vals)
        verdict = compare(lhs, rhs)
        payload = {"command": "verify", "bound_id": bid, "mode": "formula",
                   "result": {"bound_id": bid, "formula": BOUNDS[bid].text if bid in BOUNDS else "",
                              "lhs": lhs.to_json(), "rhs": rhs.to_json(), "verdict": verdict,
                              "hypotheses": [], "witnesses": [], "unknown_inputs": []}}
        lines = [f"{bid}: {lhs} <= {rhs}: {verdict} (hypotheses assumed)"]
    else:
        inst = _instance_from_args(args)
        rep = verify_inequality(bid, inst, cap=args.cap, seed=args.seed)
        verdict = rep.verdict
        payload = {"command": "verify", "bound_id": bid, "mode": "instance", "result": rep.to_json()}
        lines = [f"{bid} on {rep.instance}", f"  {rep.formula}"]
        lines += [f"  hypothesis [{h.status}] {h.name}" + (f" ({h.detail})" if h.detail else "") for h in rep.hypotheses]
        lines += [f"  lhs {rep.lhs} <= rhs {rep.rhs}: {verdict}"]
        lines += [f"  witness: {w}" for w in rep.witnesses]
        if rep.unknown_inputs:
            lines.append("  inputs not exact: " + ", ".join(rep.unknown_inputs))
    _emit(args, payload, lines)
    return EXIT_VIOLATED if verdict == "violated" else EXIT_OK


def cmd_report_suite(args) -> int:
    rows = []
    text = []
    for row in iter_suite(seed=args.seed, cap=args.cap):
        rows.append(row)
        if args.format == "text":
            text.append(f"{row.index:4d}  {row.bound_id:18s} {row.verdict:12s} {row.lhs:>8s} <= {row.rhs:<8s} {row.instance}"
                        + (f"  [{row.detail}]" if row.detail else ""))
    counts: dict[str, int] = {}
    for r in rows:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    text.append(f"summary: {summary}")
    payload = {"command": "report-suite", "seed": args.seed, "cap": args.cap,
               "result": {"rows": [r.to_json() for r in rows], "counts": counts}}
    _emit(args, payload, text)
    return EXIT_VIOLATED if counts.get("violated") else EXIT_OK


# ------------------------------------------------------------------ parser
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="resolution depth cap (default 24)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled searches (default 0)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-i", dest="max_i", type=int, default=8, help="highest Tor/Ext degree (default 8)")

    # shared flags live on the subcommands; argparse lets subparser defaults clobber top-level values
    p = _Parser(prog="findim", description="Exact homological invariants of finite-dimensional algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, *fields):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("--algebra", required=True, help=f"preset ({', '.join(PRESETS)}) or algebra JSON file")
        for f in fields:
            if f == "module":
                sp.add_argument("--module", help="S<i>, P<i>, I<i>, A, DA or a module JSON file")
            elif f == "side":
                sp.add_argument("--side", choices=("left", "right"), default="left")
            elif f == "complex":
                sp.add_argument("--complex", help="complex JSON file")
        return sp

    v = add("validate", "check an algebra (and optionally a module or complex) file", "module", "side", "complex")
    v.set_defaults(func=cmd_validate)
    add("pd", "projective dimension of a module", "module", "side").set_defaults(func=cmd_pd)
    add("injdim", "injective dimension of a module", "module", "side").set_defaults(func=lambda a: cmd_pd(a, True))
    add("resolve", "minimal projective resolution", "module", "side").set_defaults(func=cmd_resolve)
    add("width", "homological width of a complex (or of a module)", "module", "complex").set_defaults(func=cmd_width)
    add("cowidth", "homological cowidth of a complex of injectives (or of a module)", "module", "complex").set_defaults(
        func=lambda a: cmd_width(a, True))
    t = add("tor", "dimensions of Tor_i(M_right, N_left)")
    t.add_argument("--right", required=True)
    t.add_argument("--left", required=True)
    t.set_defaults(func=cmd_tor)
    e = add("ext", "dimensions of Ext^i(M, N) of left modules", "module")
    e.add_argument("--target", required=True)
    e.set_defaults(func=cmd_ext)
    add("findim", "finitistic dimension bracket").set_defaults(func=cmd_findim)
    add("gldim", "global dimension").set_defaults(func=cmd_gldim)

    vf = sub.add_parser("verify", help="check a dimension bound on an instance", parents=[common])
    vf.add_argument("bound_id")
    vf.add_argument("--instance", help="instance JSON file")
    for key in ("S", "T", "R", "M"):
        vf.add_argument(f"--{key}")
    vf.add_argument("--e", help="1-based vertices of the idempotent, comma separated")
    for key in ("I1", "I2", "I", "ideal"):
        vf.add_argument(f"--{key}", help="comma-separated generator labels")
    vf.add_argument("--multiplicities")
    vf.add_argument("--rad-power", dest="rad_power", type=int)
    vf.add_argument("--subring", help="ringext subring: diagonal or scalars")
    vf.add_argument("--input", action="append", help="formula mode: key=value (int, inf, >=k, [lo,hi])")
    vf.set_defaults(func=cmd_verify)

    rs = sub.add_parser("report-suite", help="run every preset instance against its bounds", parents=[common])
    rs.set_defaults(func=cmd_report_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "module", "x") is None and args.command in ("pd", "injdim", "resolve", "ext"):
            raise UsageError("--module is required")
        return args.func(args)
    except UsageError as exc:
        print(f"findim: usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except DATA_ERRORS as exc:
        print(f"findim: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

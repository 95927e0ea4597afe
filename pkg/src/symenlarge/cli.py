"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 input error.
``run`` never exits the interpreter; ``main`` does.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import classifier, cohomology, extensions, lie, registry, verify
from .jsonio import (InputError, algebra_from_json, algebra_to_json, cochains_from_json, group_to_json,
                     h2_to_json, loads, pi1_from_json)
from .rational import format_rational, parse_rational
from .registry import Pi1Descriptor

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n"
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


class _Ctx:
    def __init__(self, stdin: str | None):
        self._stdin = stdin

    def read(self, path: str) -> tuple[str, str]:
        if path == "-":
            text = self._stdin if self._stdin is not None else sys.stdin.read()
            return text, "<stdin>"
        p = Path(path)
        try:
            return p.read_text(encoding="utf-8"), str(p)
        except OSError as exc:
            raise InputError(path, exc.strerror or "cannot read file") from None

    @property
    def interactive(self) -> bool:
        return self._stdin is None

    def lines(self):
        return sys.stdin if self._stdin is None else io.StringIO(self._stdin).readlines()


def _load_algebra(ctx: _Ctx, path: str):
    text, source = ctx.read(path)
    L, meta = algebra_from_json(loads(text, source))
    try:
        return lie.validate(L), meta
    except lie.JacobiError as exc:
        raise InputError(f"{source}:$.brackets", str(exc)) from None


def _group_or_file(args, ctx: _Ctx):
    if args.file:
        if args.group:
            raise UsageError("give either a registry name or --file, not both")
        return None, *_load_algebra(ctx, args.file)
    if not args.group:
        raise UsageError("a registry name or --file is required")
    G = _build(args.group)
    return G, G.algebra, {}


def _build(words: list[str]):
    name, params = registry.parse_name(words[0])
    try:
        params = params + tuple(int(w) for p in words[1:] for w in p.split(","))
    except ValueError:
        raise UsageError(f"group parameters must be integers: {' '.join(words[1:])}") from None
    return registry.build(name, params)


# --- subcommands --------------------------------------------------------------

def cmd_validate(args, ctx):
    text, source = ctx.read(args.file)
    L, _ = algebra_from_json(loads(text, source))
    rep = lie.jacobi_check(L)
    payload = {"name": L.name, "dim": L.dim, "ok": rep.ok,
               "violations": [{"i": i, "j": j, "k": k, "residual": [format_rational(v) for v in res]}
                              for i, j, k, res in rep.violations]}
    return (EXIT_OK if rep.ok else EXIT_CHECK), payload


def cmd_h2(args, ctx):
    _, L, _ = _group_or_file(args, ctx)
    return EXIT_OK, h2_to_json(cohomology.h2(L))


def cmd_extend(args, ctx):
    if args.algebra is None:
        raise UsageError("--algebra is required")
    L, _ = _load_algebra(ctx, args.algebra)
    if args.all_h2:
        if args.cocycle:
            raise UsageError("--cocycle and --all-h2 are exclusive")
        cocycles = list(cohomology.h2(L).representatives)
    else:
        if not args.cocycle:
            raise UsageError("one of --cocycle or --all-h2 is required")
        text, source = ctx.read(args.cocycle)
        cocycles = cochains_from_json(loads(text, source), L.dim)
    E = extensions.central_extend(L, cocycles)
    payload = algebra_to_json(E.algebra)
    payload["central_indices"] = list(E.central_indices)
    ok = lie.jacobi_check(E.algebra).ok
    return (EXIT_OK if ok else EXIT_CHECK), payload


def _parse_pi1(text: str) -> Pi1Descriptor:
    try:
        nums = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--pi1 expects free_rank[,torsion...], got {text!r}") from None
    if not nums:
        raise UsageError("--pi1 needs at least the free rank")
    try:
        return Pi1Descriptor(nums[0], tuple(nums[1:]))
    except ValueError as exc:
        raise UsageError(f"--pi1: {exc}") from None


def _verdict_json(v: classifier.EnlargementVerdict) -> dict:
    enl = v.enl_algebra
    doc = algebra_to_json(v.enlarged_lie_algebra)
    if isinstance(enl, extensions.ExtendedAlgebra):
        doc["central_indices"] = list(enl.central_indices)
    return {
        "group": v.group,
        "case": v.case_id.value,
        "dim_H2": v.h2.dim_H2,
        "pi1": v.pi1.to_json(),
        "universal_cover": v.cover_name,
        "enlarged_group": v.enl_description,
        "named_match": v.named_match,
        "enlarged": doc,
        "narrative": classifier.explain(v),
    }


def cmd_classify(args, ctx):
    if args.pi1 and args.simply_connected:
        raise UsageError("--pi1 and --simply-connected are exclusive")
    G, L, meta = _group_or_file(args, ctx)
    override = _parse_pi1(args.pi1) if args.pi1 else (Pi1Descriptor() if args.simply_connected else None)
    if G is not None:
        pi1 = override or G.pi1
        cover = G.universal_cover_name if not pi1.trivial or override is None else None
        v = classifier.classify_algebra(L, pi1, group_name=G.name, cover_name=cover)
    else:
        if override is None and "pi1" in meta:
            override = pi1_from_json(meta["pi1"])
        elif override is None and meta.get("simply_connected") is True:
            override = Pi1Descriptor()
        if override is None:
            raise UsageError("classifying a raw algebra needs pi1(G): pass --pi1 free_rank,torsion... "
                             "or --simply-connected. The fundamental group is topological input; it "
                             "cannot be computed from the Lie algebra.")
        v = classifier.classify_algebra(L, override, cover_name=meta.get("universal_cover"))
    return EXIT_OK, _verdict_json(v)


def cmd_registry(args, ctx):
    if args.action == "list":
        rows = registry.list_groups()
        if args.format == "text":
            return EXIT_OK, "\n".join(f"{n:<11} params: {a:<7} {d}" for n, a, d in rows) + "\n"
        return EXIT_OK, [{"name": n, "params": a, "description": d} for n, a, d in rows]
    if not args.name:
        raise UsageError("registry show needs a group name")
    return EXIT_OK, group_to_json(_build(args.name))


def _checks_payload(checks):
    payload = {"checks": [c.to_json() for c in checks]}
    return (EXIT_OK if all(c.passed for c in checks) else EXIT_CHECK), payload


def cmd_verify(args, ctx):
    try:
        if args.what == "weyl":
            return _checks_payload(verify.weyl_report(args.dim))
        if args.what == "su2so3":
            return _checks_payload(verify.su2so3_report(args.samples, args.seed))
        return _checks_payload(verify.rays_report(args.dim, args.samples, args.seed))
    except (verify.BadDimension, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _to_exact(values, path):
    try:
        return tuple(parse_rational(v) for v in values)
    except (ValueError, TypeError) as exc:
        raise InputError(path, str(exc)) from None


def cmd_gstar(args, ctx):
    if args.group == "heisenberg":
        spec = extensions.heisenberg_spec(args.dim)
    elif args.group == "galilei":
        if args.dim != 3:
            raise UsageError("the galilei cocycle is provided for 3 space dimensions only")
        spec = extensions.bargmann_spec()
    else:
        raise UsageError(f"unknown group {args.group!r} (heisenberg, galilei)")
    out = []
    for lineno, line in enumerate(ctx.lines(), 1):
        if not line.strip():
            continue
        where = f"<stdin>:{lineno}"
        item = loads(line, where)
        if not (isinstance(item, list) and len(item) == 4):
            raise InputError(where, "expected [x, g1, y, g2]")
        x, g1, y, g2 = item
        if spec.exact:
            x, y = _to_exact(x, f"{where}[0]"), _to_exact(y, f"{where}[2]")
            g1, g2 = _to_exact(g1, f"{where}[1]"), _to_exact(g2, f"{where}[3]")
            if len(g1) != 2 * args.dim or len(g2) != 2 * args.dim:
                raise InputError(where, f"group elements need {2 * args.dim} coordinates")
        else:
            try:
                x, y = tuple(float(v) for v in x), tuple(float(v) for v in y)
                g1 = extensions.GalileiElement.from_json(g1)
                g2 = extensions.GalileiElement.from_json(g2)
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(where, f"bad Galilei element: {exc}") from None
        try:
            z, g = extensions.gstar_multiply(x, g1, y, g2, spec)
        except lie.DimensionMismatch as exc:
            raise InputError(where, str(exc)) from None
        if spec.exact:
            line = json.dumps([[format_rational(v) for v in z], [format_rational(v) for v in g]])
        else:
            line = json.dumps([list(z), g.to_json()])
        if ctx.interactive:
            print(line, flush=True)
        else:
            out.append(line)
    return EXIT_OK, "".join(s + "\n" for s in out)


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")

    p = _Parser(prog="symenlarge", description="Enlarged symmetry groups from Lie algebra cohomology.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    alg = sub.add_parser("algebra", help="algebra utilities", parents=[common])
    alg.add_argument("action", choices=("validate",))
    alg.add_argument("--file", required=True)
    alg.set_defaults(func=cmd_validate)

    h = sub.add_parser("h2", help="second Lie algebra cohomology", parents=[common])
    h.add_argument("group", nargs="*", help="registry name and parameters")
    h.add_argument("--file")
    h.set_defaults(func=cmd_h2)

    e = sub.add_parser("extend", help="central extension by cocycles", parents=[common])
    e.add_argument("--algebra")
    e.add_argument("--cocycle")
    e.add_argument("--all-h2", action="store_true")
    e.set_defaults(func=cmd_extend)

    g = sub.add_parser("gstar", help="evaluate products in R^m x G, one JSON line per product",
                       parents=[common])
    g.add_argument("--group", required=True)
    g.add_argument("--dim", type=int, default=1)
    g.set_defaults(func=cmd_gstar)

    c = sub.add_parser("classify", help="enlarged group for G", parents=[common])
    c.add_argument("group", nargs="*")
    c.add_argument("--file")
    c.add_argument("--pi1")
    c.add_argument("--simply-connected", action="store_true")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("registry", help="named groups", parents=[common])
    r.add_argument("action", choices=("list", "show"))
    r.add_argument("name", nargs="*")
    r.set_defaults(func=cmd_registry)

    v = sub.add_parser("verify", help="numerical checks", parents=[common])
    v.add_argument("what", choices=("weyl", "su2so3", "rays"))
    v.add_argument("--dim", type=int, default=2)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str], stdin: str | None = None) -> CommandResult:
    parser = build_parser()
    out = io.StringIO()
    try:
        with contextlib.redirect_stdout(out):
            args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult(EXIT_USAGE, "", f"{exc}\n")
    except SystemExit as exc:  # --help
        return CommandResult(int(exc.code or 0), out.getvalue())
    if not getattr(args, "func", None):
        return CommandResult(EXIT_USAGE, "", parser.format_usage())
    try:
        code, payload = args.func(args, _Ctx(stdin))
    except UsageError as exc:
        return CommandResult(EXIT_USAGE, "", f"symenlarge: {exc}\n")
    except (InputError, lie.LieAlgebraError) as exc:
        return CommandResult(EXIT_INPUT, "", f"symenlarge: input error: {exc}\n")
    text = payload if isinstance(payload, str) else _emit(payload, args.format)
    return CommandResult(code, text)


def main(argv: list[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(res.stdout)
    sys.stderr.write(res.stderr)
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())

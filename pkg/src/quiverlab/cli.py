"""Command line entry point: ``quiverlab verify | list | dump``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import chars as C
from . import claims as K
from . import deform as D
from . import rep as R
from .algebra import lambda_algebra, lambdahat_algebra
from .scalars import GF2, GF4

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
CONFIG_KEYS = {"field", "c", "d", "max_string_len", "max_n", "budget", "jobs", "out", "verbose", "timings"}


class UnknownTarget(KeyError):
    pass


# configuration ---------------------------------------------------------------------


def load_config(path: str | None, overrides: dict) -> K.Config:
    """TOML file values first, then any flags given on the command line."""
    values: dict = {}
    if path:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        data = data.get("quiverlab", data)
        unknown = set(data) - CONFIG_KEYS
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(data)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return K.Config(**values)


def _overrides(ns: argparse.Namespace) -> dict:
    return {
        "field": ns.field,
        "c": ns.c,
        "d": ns.d,
        "max_string_len": ns.max_string_len,
        "max_n": ns.max_n,
        "budget": ns.budget,
        "jobs": ns.jobs,
        "out": getattr(ns, "out", None),
        "verbose": True if ns.verbose else None,
        "timings": False if ns.no_timings else None,
    }


# verify ------------------------------------------------------------------------


def _run_by_id(args: tuple[str, K.Config]) -> K.ClaimRecord:
    cid, cfg = args
    return K.run_claim(K.REGISTRY[cid], cfg)


def run(selector: str, cfg: K.Config) -> tuple[int, dict]:
    """Run the selected claims and assemble the report; ordering is by id regardless of jobs."""
    chosen = K.select(selector)
    if cfg.jobs > 1 and len(chosen) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(_run_by_id, [(c.id, cfg) for c in chosen]))
    else:
        records = [K.run_claim(c, cfg) for c in chosen]
    records.sort(key=lambda r: r.id)
    counts = {s: sum(r.status == s for r in records) for s in (K.PASS, K.FAIL, K.SKIPPED, K.CONDITIONAL)}
    report = {
        "schema_version": K.SCHEMA_VERSION,
        "config": cfg.as_dict(),
        "claims": [r.as_dict() for r in records],
        "summary": {"total": len(records), **counts},
    }
    if cfg.timings:
        report["summary"]["elapsed"] = round(sum(r.elapsed or 0 for r in records), 4)
    return (EXIT_FAIL if counts[K.FAIL] else EXIT_OK), report


def render_report(report: dict, verbose: bool = False) -> str:
    lines = []
    for r in report["claims"]:
        t = f"  {r['elapsed']:.2f}s" if r["elapsed"] is not None else ""
        lines.append(f"{r['status']:<11} {r['id']}{t}")
        if r["status"] == K.CONDITIONAL:
            failed = [h for h, ok in r["hypotheses"].items() if not ok]
            lines.append(f"            unverified: {'; '.join(failed)}")
        if verbose or r["status"] == K.FAIL:
            lines.append("            " + json.dumps(r["details"], sort_keys=True, ensure_ascii=False))
    s = report["summary"]
    lines.append(
        f"{s['total']} claims: {s['PASS']} pass, {s['FAIL']} fail, {s['CONDITIONAL']} conditional, {s['SKIPPED']} skipped"
    )
    return "\n".join(lines)


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# dump --------------------------------------------------------------------------


def _field(cfg_field: str):
    return GF2 if cfg_field == "gf2" else GF4


def parse_algebra(target: str, F=GF2):
    kind, _, param = target.partition(":")
    key, _, value = param.partition("=")
    try:
        if kind == "lambda" and key == "c":
            return lambda_algebra(int(value), F)
        if kind == "lambdahat" and key == "d":
            return lambdahat_algebra(int(value), F)
    except ValueError as exc:
        raise UnknownTarget(target) from exc
    raise UnknownTarget(target)


def parse_module(target: str, F=GF2) -> R.Rep:
    """``NAME@ALGEBRA`` with NAME one of P0, P1, S0, S1, M01, M10, M001, M100, U, X, Y."""
    name, _, alg_name = target.partition("@")
    alg = parse_algebra(alg_name or "lambda:c=0", F)
    if name in ("P0", "P1"):
        return R.projective(alg, int(name[1]))
    if name in K.SIX:
        return K._module(alg, name)
    witnesses = {"U": D.witness_u, "X": D.witness_x, "Y": D.witness_y}
    if name in witnesses:
        if name == "Y" and alg.kind != "lambdahat":
            raise UnknownTarget(f"{target}: Y lives over lambdahat")
        return witnesses[name](alg).total
    raise UnknownTarget(target)


def render_decomp(m: C.DecompMatrix) -> str:
    grid = [[""] + list(m.columns)] + [[r] + [str(v) for v in row] for r, row in zip(m.rows, m.entries)]
    widths = [max(len(line[k]) for line in grid) for k in range(len(grid[0]))]
    return "\n".join("  ".join(cell.rjust(w) if k else cell.ljust(w) for k, (cell, w) in enumerate(zip(line, widths))).rstrip() for line in grid)


def dump_table(target: str) -> str:
    if target == "fig5":
        return C.HAT_S5.render()
    if target == "s5":
        return C.S5_TABLE.render()
    if target == "fig6":
        return C.BRAUER.render()
    if target == "fig1":
        parts = []
        for t in (C.HAT_S5, C.S5_TABLE):
            dm = C.decomposition_matrix(t, C.principal_block(t), columns=("phi0", "phi1"))
            parts.append(f"# {t.group} principal block\n{render_decomp(dm)}")
        return "\n\n".join(parts)
    raise UnknownTarget(target)


def dump(what: str, target: str, field_name: str = "gf2") -> str:
    F = _field(field_name)
    if what == "algebra":
        return parse_algebra(target, F).dump()
    if what == "module":
        return parse_module(target, F).loewy.diagram()
    if what == "tables":
        return dump_table(target)
    raise UnknownTarget(what)


# argument parsing ------------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML configuration file")
    common.add_argument("--field", choices=("gf2", "gf4"))
    common.add_argument("--c", type=_int_list, help="comma separated values of c")
    common.add_argument("--d", type=_int_list, help="comma separated values of d")
    common.add_argument("--max-string-len", type=int)
    common.add_argument("--max-n", type=int)
    common.add_argument("--budget", type=int)
    common.add_argument("--jobs", type=int)
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--no-timings", action="store_true")

    p = argparse.ArgumentParser(prog="quiverlab", description="Check computations on the 2-blocks of S5 and its double cover.")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run claims and write a JSON report")
    v.add_argument("selector", nargs="?", default="all", help="'all', a claim id, or an id prefix")
    v.add_argument("--out", help="path of the JSON report (default: stdout after the summary)")
    sub.add_parser("list", parents=[common], help="list claim ids, descriptions, anchors")
    d = sub.add_parser("dump", parents=[common], help="print an algebra, a module diagram, or a table")
    d.add_argument("what", choices=("algebra", "module", "tables"))
    d.add_argument("target", help="e.g. lambda:c=0, P1@lambda:c=0, fig5, fig6, fig1, s5")
    d.add_argument("--out", help="write the artifact to this file")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        cfg = load_config(ns.config, _overrides(ns))
    except (OSError, ValueError, TypeError, tomllib.TOMLDecodeError) as exc:
        print(f"quiverlab: bad configuration: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if ns.command == "list":
        rows = [(c.id, c.description, c.anchor) for c in K.select()]
        w = max(len(r[0]) for r in rows)
        for cid, desc, anchor in rows:
            print(f"{cid:<{w}}  {anchor}  |  {desc}")
        return EXIT_OK

    if ns.command == "dump":
        try:
            text = dump(ns.what, ns.target, cfg.field)
        except UnknownTarget as exc:
            print(f"quiverlab: unknown target {exc}", file=sys.stderr)
            return EXIT_ERROR
        if cfg.out:
            Path(cfg.out).write_text(text + "\n", encoding="utf-8")
        else:
            print(text)
        return EXIT_OK

    try:
        code, report = run(ns.selector, cfg)
    except KeyError as exc:
        print(f"quiverlab: {exc.args[0]}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # construction failures, exhausted budgets
        print(f"quiverlab: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(render_report(report, cfg.verbose), file=sys.stderr if not cfg.out else sys.stdout)
    if cfg.out:
        Path(cfg.out).write_text(dumps_report(report), encoding="utf-8")
    else:
        sys.stdout.write(dumps_report(report))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: run verification suites, export catalogue objects
(graphs, measures, eigendata, moment tables, series, deltoid density grids)
as JSON or CSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import deltoid, measures, series, subgroups, suites
from .graphs import by_id, eigendata
from .paths import moment_table, moment_table_csv


def _load_config(path: Optional[str]) -> dict:
    """key=value config lines; '#' comments; flags always win."""
    if not path:
        return {}
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line or "=" not in line:
                continue
            key, val = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = val
    return out


def _apply_config(args: argparse.Namespace, cfg: dict, parser_defaults: dict) -> None:
    casts = {"order": int, "depth": int, "tol": float, "seed": int,
             "jobs": int, "grid": int, "format": str, "out": str}
    for key, val in cfg.items():
        if key in casts and hasattr(args, key):
            if getattr(args, key) == parser_defaults.get(key):
                setattr(args, key, casts[key](val))


def _human_report(report: suites.SuiteReport) -> str:
    lines = []
    width = max((len(c.case_id) for c in report.cases), default=20)
    for c in report.cases:
        lines.append(
            f"{c.status.upper():4}  {c.case_id:<{width}}  {c.measured}"
            + (f"  [{c.expected}]" if c.expected else "")
        )
    lines.append(
        f"suite {report.suite}: {report.n_pass} passed, {report.n_fail} failed, "
        f"{sum(1 for c in report.cases if c.status == 'skipped')} skipped"
    )
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    report = suites.run_suite(args.suite, tol=args.tol, seed=args.seed, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=1))
    else:
        print(_human_report(report))
    return 0 if report.ok else 1


def _export_payload(spec: str, args: argparse.Namespace):
    """Returns (payload, kind) where kind is 'json' or 'csv-text'."""
    if spec.startswith("graph:"):
        return by_id(spec[6:]).to_json(), "json"
    if spec.startswith("eigendata:"):
        return eigendata(spec[10:]).to_json(), "json"
    if spec.startswith("measure:"):
        mu = measures.canonical_measure(spec[8:])
        if args.format == "csv":
            rows = ["theta,weight"] if mu.dimension == 1 else ["theta1,theta2,weight"]
            for t, w in mu.atoms_sorted():
                if mu.dimension == 1:
                    rows.append(f"{float(t)!r},{float(w)!r}")
                else:
                    rows.append(f"{float(t[0])!r},{float(t[1])!r},{float(w)!r}")
            return "\n".join(rows) + "\n", "csv-text"
        return mu.to_json(), "json"
    if spec.startswith("moments:"):
        g = by_id(spec[8:])
        upper = args.depth if g.trunc_depth else 2 * args.depth
        if g.symmetric:
            table = moment_table(g, upper)
        else:
            table = {
                (m, n): v
                for (m, n), v in moment_table(g, upper, upper).items()
                if m + n <= upper
            }
        return moment_table_csv(table), "csv-text"
    if spec.startswith("series:"):
        _, kind, gid = spec.split(":", 2)
        if kind == "T":
            return series.t_series(gid, args.order, "closed_form").to_json(), "json"
        if kind == "Theta":
            return series.theta_series(gid, args.order, "measure").to_json(), "json"
        if kind == "hilbert":
            g = by_id(gid)
            hs = series.hilbert_su2(g, args.order) if g.symmetric else \
                series.hilbert_su3(g, order=args.order)
            return hs.to_json(), "json"
        raise KeyError(f"unknown series kind {kind!r}")
    if spec.startswith("classdata:"):
        name = spec[10:]
        if "(" in name:
            base, n = name.split("(")
            grp = subgroups.generate_group(base, int(n.rstrip(")")))
        else:
            grp = subgroups.generate_group(name)
        return subgroups.class_data(grp).to_json(), "json"
    if spec == "deltoid-density":
        rows = ["x,y,abs_J,inv_abs_J"]
        for x, y, aj, ij in deltoid.density_grid(args.grid):
            rows.append(f"{x!r},{y!r},{aj!r},{ij!r}")
        return "\n".join(rows) + "\n", "csv-text"
    raise KeyError(f"unknown export object {spec!r}")


def cmd_export(args: argparse.Namespace) -> int:
    payload, kind = _export_payload(args.object, args)
    if kind == "json":
        if args.format == "csv":
            print(f"error: {args.object} only exports as JSON", file=sys.stderr)
            return 2
        text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    else:
        text = payload
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nimspec",
        description="verification suites and exports for the nimrep graph catalogue",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    va = sub.add_parser("verify", help="run a named verification suite")
    va.add_argument("suite", choices=list(suites.SUITE_NAMES) + ["all"])
    va.add_argument("--tol", type=float, default=1e-9)
    va.add_argument("--seed", type=int, default=0)
    va.add_argument("--jobs", type=int, default=1)
    va.add_argument("--order", type=int, default=40)
    va.add_argument("--depth", type=int, default=10)
    va.add_argument("--format", choices=["human", "json"], default="human")
    va.add_argument("--config", default=None)
    va.set_defaults(func=cmd_verify)

    ex = sub.add_parser("export", help="export a catalogue object")
    ex.add_argument("object",
                    help="graph:<id> | measure:<id> | eigendata:<id> | moments:<id> | "
                         "series:T:<id> | series:Theta:<id> | series:hilbert:<id> | "
                         "classdata:<group> | deltoid-density")
    ex.add_argument("--format", choices=["json", "csv"], default="json")
    ex.add_argument("--out", default=None)
    ex.add_argument("--order", type=int, default=40)
    ex.add_argument("--depth", type=int, default=10)
    ex.add_argument("--grid", type=int, default=100)
    ex.add_argument("--config", default=None)
    ex.set_defaults(func=cmd_export)
    return ap


def _all_defaults(ap: argparse.ArgumentParser) -> dict:
    out = {}
    for action in ap._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sub in action.choices.values():
                out.update(_all_defaults(sub))
        else:
            out[action.dest] = action.default
    return out


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = _load_config(getattr(args, "config", None))
    _apply_config(args, cfg, _all_defaults(ap))
    try:
        return args.func(args)
    except (KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())

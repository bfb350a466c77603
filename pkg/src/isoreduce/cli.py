"""Command-line front end: ingestion, subcommand dispatch, serialization.

Exit codes: 0 success, 1 I/O or parse failure, 2 verification or golden
mismatch, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import dynamics as dyn
from . import hierarchy as hier
from . import isored, netmat, spectra
from .exactnum import ratfun_from_str, ratfun_to_str
from .netmat import IncidenceData, IncidenceFormatError, RfMatrix

__all__ = ["RunConfig", "UsageError", "parse_args", "run", "main", "entrypoint"]

EXIT_OK = 0
EXIT_IO = 1
EXIT_MISMATCH = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    output: str | None = None
    rule: str = "min-degree"
    mode: str = "bipartite"
    keep: str | None = None
    tolerance: float = 1e-6
    year: int = 1936
    groups: str | None = None
    fmt: str = "json"
    summary: str | None = None
    restrict: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _data_path(name: str):
    return resources.files("isoreduce").joinpath("data", name)


def _add_common(p, with_mode=True):
    p.add_argument("--input", help="incidence CSV (default: the bundled dgg.csv)")
    p.add_argument("--output", help="output path (default: standard output)")
    p.add_argument("--year", type=int, default=1936, help="year for the M/D date row")
    if with_mode:
        p.add_argument(
            "--mode",
            choices=("bipartite", "rows", "cols"),
            default="bipartite",
            help="matrix to build from the incidence data",
        )


def _build_parser() -> _Parser:
    parser = _Parser(prog="isoreduce", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", metavar="COMMAND")

    p = sub.add_parser("reduce", help="one isospectral reduction over a kept node set")
    _add_common(p)
    p.add_argument("--keep", required=True, help="file with one kept label per line")
    p.add_argument("--format", dest="fmt", choices=("json", "dot"), default="json")

    p = sub.add_parser("hierarchy", help="sequential reduction under a selection rule")
    _add_common(p)
    p.add_argument("--rule", choices=sorted(hier.RULES), default="min-degree")
    p.add_argument("--restrict", help="file of labels; restrict the hierarchy to them")

    p = sub.add_parser("project", help="single-mode projection of the incidence data")
    _add_common(p, with_mode=False)
    p.add_argument("--mode", choices=("rows", "cols"), required=True)

    p = sub.add_parser("dynamics", help="chronological attendance series and statistics")
    _add_common(p, with_mode=False)
    p.add_argument("--groups", help="JSON with group and event-class definitions")
    p.add_argument("--summary", help="path for the summary JSON (default: stdout)")

    p = sub.add_parser("verify", help="numeric spectrum-preservation check")
    _add_common(p)
    p.add_argument("--keep", required=True, help="file with one kept label per line")
    p.add_argument("--tol", dest="tolerance", type=float, default=1e-6)

    p = sub.add_parser("reproduce", help="recompute the bundled dataset's results and diff")
    _add_common(p, with_mode=False)

    return parser


def parse_args(argv) -> RunConfig:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.subcommand is None:
        raise UsageError("a subcommand is required")
    cfg = RunConfig(subcommand=ns.subcommand)
    for name in vars(ns):
        if hasattr(cfg, name):
            setattr(cfg, name, getattr(ns, name))
    if cfg.tolerance <= 0:
        raise UsageError("--tol must be positive")
    return cfg


# -- shared helpers ------------------------------------------------------------


def _load_input(cfg: RunConfig) -> IncidenceData:
    if cfg.input is None:
        return netmat.parse_incidence_csv(
            _data_path("dgg.csv").read_text(encoding="utf-8"), year=cfg.year
        )
    return netmat.load_incidence(cfg.input, year=cfg.year)


def _build_matrix(data: IncidenceData, mode: str) -> RfMatrix:
    if mode == "bipartite":
        return netmat.bipartite_adjacency(data)
    if mode == "rows":
        return netmat.project_rows(data)
    return netmat.project_cols(data)


def _read_labels(path: str) -> list[str]:
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _emit(text: str, output: str | None):
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(output).write_text(text, encoding="utf-8")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def matrix_to_csv(m: RfMatrix) -> str:
    lines = ["name," + ",".join(m.labels)]
    for label, row in zip(m.labels, m.entries):
        lines.append(label + "," + ",".join(ratfun_to_str(v) for v in row))
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str) -> RfMatrix:
    rows = [ln.split(",") for ln in text.splitlines() if ln.strip()]
    if not rows or rows[0][0].strip() != "name":
        raise ValueError("matrix CSV must start with a 'name' header")
    labels = [c.strip() for c in rows[0][1:]]
    grid = []
    for cells in rows[1:]:
        if len(cells) != len(labels) + 1:
            raise ValueError(f"row {cells[0]!r} has the wrong number of entries")
        grid.append([ratfun_from_str(c) for c in cells[1:]])
    return RfMatrix(labels, grid)


def matrix_to_dot(m: RfMatrix, name: str = "network") -> str:
    """DOT text with exact edge weights; self-loops included."""
    symmetric = m.is_symmetric()
    kind, arrow = ("graph", "--") if symmetric else ("digraph", "->")
    lines = [f"{kind} {name} {{"]
    for label in m.labels:
        lines.append(f'  "{label}";')
    n = len(m.labels)
    for i in range(n):
        start = i if symmetric else 0
        for j in range(start, n):
            v = m.entries[i][j]
            if v.is_zero:
                continue
            lines.append(
                f'  "{m.labels[i]}" {arrow} "{m.labels[j]}" [label="{ratfun_to_str(v)}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- subcommands ---------------------------------------------------------------


def _cmd_reduce(cfg: RunConfig) -> int:
    data = _load_input(cfg)
    m = _build_matrix(data, cfg.mode)
    keep = _read_labels(cfg.keep)
    result = isored.reduce(m, keep)
    if cfg.fmt == "dot":
        _emit(matrix_to_dot(result.reduced, name="reduced"), cfg.output)
    else:
        _emit(_json_text(result.to_json_dict()), cfg.output)
    return EXIT_OK


def _cmd_hierarchy(cfg: RunConfig) -> int:
    data = _load_input(cfg)
    m = _build_matrix(data, cfg.mode)
    result = hier.sequential_reduce(m, hier.RULES[cfg.rule])
    if cfg.restrict:
        result = hier.restrict_hierarchy(result, _read_labels(cfg.restrict))
    _emit(_json_text(result.to_json_dict()), cfg.output)
    return EXIT_OK


def _cmd_project(cfg: RunConfig) -> int:
    data = _load_input(cfg)
    m = _build_matrix(data, cfg.mode)
    _emit(matrix_to_csv(m), cfg.output)
    return EXIT_OK


def _load_groups(cfg: RunConfig) -> dict:
    if cfg.groups is None:
        text = _data_path("dgg_groups.json").read_text(encoding="utf-8")
    else:
        text = Path(cfg.groups).read_text(encoding="utf-8")
    spec = json.loads(text)
    if "groups" not in spec or "event_classes" not in spec:
        raise ValueError("group file needs 'groups' and 'event_classes' objects")
    return spec


def _cmd_dynamics(cfg: RunConfig) -> int:
    data = _load_input(cfg)
    if data.dates is None:
        raise ValueError("dynamics requires an incidence file with a date row")
    spec = _load_groups(cfg)
    lines = ["group,event_class,event,date,count"]
    summary: dict[str, dict] = {}
    for gname, members in spec["groups"].items():
        for cname, events in spec["event_classes"].items():
            ordered = dyn.chronological_order(data, events)
            series = dyn.group_attendance(data, members, ordered, name=gname)
            for event, count in zip(series.events, series.counts):
                d = data.date_of(event)
                lines.append(f"{gname},{cname},{event},{d.month}/{d.day},{count}")
            entry: dict = {"counts": list(series.counts)}
            if len(series.counts) >= 2:
                mean, var = dyn.series_stats(series)
                entry["mean"] = str(mean)
                entry["sample_variance"] = str(var)
            summary[f"{gname}/{cname}"] = entry
    _emit("\n".join(lines) + "\n", cfg.output)
    _emit(_json_text(summary), cfg.summary)
    return EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    data = _load_input(cfg)
    m = _build_matrix(data, cfg.mode)
    keep = _read_labels(cfg.keep)
    report = spectra.verify_spectrum(m, keep, tol=cfg.tolerance)
    _emit(_json_text(report.to_json_dict()), cfg.output)
    return EXIT_OK if report.passed else EXIT_MISMATCH


# -- reproduce -----------------------------------------------------------------


def _hier_summary(h: hier.HierarchyResult) -> dict:
    return {
        "core": list(h.core),
        "levels": [list(level) for level in h.levels],
    }


def _trace_summary(h: hier.HierarchyResult) -> list[dict]:
    return [
        {"step": t.step, "degrees": dict(t.degrees), "removed": list(t.removed)}
        for t in h.trace
    ]


def compute_bundle(data: IncidenceData, groups: dict) -> dict:
    """Everything the bundled dataset is expected to reproduce, as one dict."""
    m = netmat.bipartite_adjacency(data)
    h = hier.sequential_reduce(m)
    women = list(data.row_labels)
    events = list(data.col_labels)

    def series_block(gname, cname):
        ordered = dyn.chronological_order(data, groups["event_classes"][cname])
        series = dyn.group_attendance(data, groups["groups"][gname], ordered, name=gname)
        block = {"events": list(series.events), "counts": list(series.counts)}
        if len(series.counts) >= 2:
            mean, var = dyn.series_stats(series)
            block["mean"] = str(mean)
            block["sample_variance"] = str(var)
        return block

    active, popular = dyn.classify_activity(data)
    level_means = {
        name: {mode: str(v) for mode, v in modes.items()}
        for name, modes in dyn.level_mean_attendance(data, h).items()
    }
    bundle = {
        "hierarchy": _hier_summary(h),
        "trace": _trace_summary(h),
        "restricted_to_rows": _hier_summary(hier.restrict_hierarchy(h, women)),
        "restricted_to_cols": _hier_summary(hier.restrict_hierarchy(h, events)),
        "restricted_groups": {
            gname: _hier_summary(hier.restrict_hierarchy(h, members))
            for gname, members in groups["groups"].items()
        },
        "rows_mode_hierarchy": _hier_summary(hier.sequential_reduce(netmat.project_rows(data))),
        "cols_mode_hierarchy": _hier_summary(hier.sequential_reduce(netmat.project_cols(data))),
        "rows_projection": [
            [int(v.as_fraction()) for v in row] for row in netmat.project_rows(data).entries
        ],
        "cols_projection": [
            [int(v.as_fraction()) for v in row] for row in netmat.project_cols(data).entries
        ],
        "series": {
            f"{g}/{c}": series_block(g, c)
            for g in groups["groups"]
            for c in groups["event_classes"]
        },
        "active_rows": sorted(active),
        "popular_cols": sorted(popular),
        "level_mean_attendance": level_means,
    }
    return bundle


def _diff(expected, got, path="") -> list[str]:
    if isinstance(expected, dict) and isinstance(got, dict):
        out = []
        for key in sorted(set(expected) | set(got)):
            sub = f"{path}.{key}" if path else key
            if key not in expected:
                out.append(f"{sub}: unexpected key")
            elif key not in got:
                out.append(f"{sub}: missing key")
            else:
                out.extend(_diff(expected[key], got[key], sub))
        return out
    if isinstance(expected, list) and isinstance(got, list):
        if len(expected) != len(got):
            return [f"{path}: length {len(got)} != expected {len(expected)}"]
        out = []
        for i, (e, g) in enumerate(zip(expected, got)):
            out.extend(_diff(e, g, f"{path}[{i}]"))
        return out
    if expected != got:
        return [f"{path}: {got!r} != expected {expected!r}"]
    return []


def _cmd_reproduce(cfg: RunConfig) -> int:
    data = _load_input(cfg)
    groups = json.loads(_data_path("dgg_groups.json").read_text(encoding="utf-8"))
    bundle = compute_bundle(data, groups)
    expected = json.loads(_data_path("expected_dgg.json").read_text(encoding="utf-8"))
    if cfg.output:
        Path(cfg.output).write_text(_json_text(bundle), encoding="utf-8")
    mismatches = _diff(expected, bundle)
    for section in expected:
        state = "ok" if not any(m.startswith(section) for m in mismatches) else "MISMATCH"
        print(f"{section}: {state}")
    if mismatches:
        print(f"{len(mismatches)} value(s) differ from the checked-in expectations:")
        for m in mismatches[:50]:
            print("  " + m)
        return EXIT_MISMATCH
    print("all sections match the checked-in expectations")
    return EXIT_OK


_COMMANDS = {
    "reduce": _cmd_reduce,
    "hierarchy": _cmd_hierarchy,
    "project": _cmd_project,
    "dynamics": _cmd_dynamics,
    "verify": _cmd_verify,
    "reproduce": _cmd_reproduce,
}


def run(cfg: RunConfig) -> int:
    return _COMMANDS[cfg.subcommand](cfg)


def main(argv=None) -> int:
    try:
        cfg = parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run(cfg)
    except IncidenceFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

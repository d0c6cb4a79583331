"""Command-line front end.

Exit status: 0 when every check passes, 1 for usage or input errors,
2 when a verification or certificate check fails.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Sequence

from . import beta, graded, lpa, partial_action, skew
from .corpus import corpus, random_graphs
from .fields import field_from_spec, field_name
from .graph import Edge, Graph, GraphError, load_graph
from .partial_action import DomainError
from .report import Report

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


@dataclass
class RunConfig:
    field: str = "q"
    bound: int | None = None
    depth: int | None = None
    trials: int | None = None
    seed: int = 0
    format: str = "text"

    def validate(self) -> None:
        field_from_spec(self.field)
        for name in ("bound", "depth", "trials"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"--{name} must be at least 1")
        if not -(2 ** 63) <= self.seed < 2 ** 64:
            raise ValueError("--seed must fit in 64 bits")


@dataclass
class RunRecord:
    name: str
    passed: bool
    verdict: Any = None
    digest: str = ""
    detail: str = ""
    elapsed: float | None = field(default=None, compare=False)


@dataclass
class RunReport:
    command: str
    config: dict
    records: list[RunRecord] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if all(r.passed for r in self.records) else "fail"

    def to_dict(self, timing: bool = False) -> dict:
        recs = []
        for r in self.records:
            d = asdict(r)
            if not timing:
                d.pop("elapsed")
            recs.append(d)
        return {"command": self.command, "config": self.config, "records": recs, "status": self.status}

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        return cls(data["command"], data["config"], [RunRecord(**r) for r in data["records"]])


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def emit(report: RunReport, fmt: str = "text", timing: bool = False) -> str:
    """Render a report deterministically as an aligned text table or JSON."""
    if fmt == "json":
        return json.dumps(report.to_dict(timing), indent=2, sort_keys=True)
    cfg = " ".join(f"{k}={v}" for k, v in sorted(report.config.items()) if v is not None)
    lines = [f"# {report.command}  [{cfg}]  status: {report.status}"]
    if not report.records:
        return lines[0]
    rows = []
    for r in report.records:
        verdict = r.verdict if isinstance(r.verdict, str) else json.dumps(r.verdict)
        row = [r.name, "ok" if r.passed else "FAIL", verdict, r.digest, r.detail]
        if timing and r.elapsed is not None:
            row.append(f"{r.elapsed:.3f}s")
        rows.append(row)
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    for row in rows:
        head = "  ".join(cell.ljust(w) for cell, w in zip(row[:4], widths))
        lines.append("  ".join([head] + [c for c in row[4:] if c]).rstrip())
    return "\n".join(lines)


# -- helpers --------------------------------------------------------------------

def _graph(path: str) -> Graph:
    return load_graph(path)


def _timed(fn: Callable, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def _from_report(rep: Report, elapsed: float, name_prefix: str = "") -> list[RunRecord]:
    recs = [RunRecord(name_prefix + r.name, r.passed, "pass" if r.passed else "fail", "", r.detail)
            for r in rep.records]
    if recs:
        recs[-1].elapsed = elapsed
    return recs


def _summary_record(name: str, rep: Report, elapsed: float) -> RunRecord:
    detail = f"{len(rep.violations)} violations"
    if rep.summary:
        detail += "; " + ", ".join(f"{k}={v}" for k, v in rep.summary.items())
    return RunRecord(name, rep.passed, "pass" if rep.passed else "fail", "", detail, elapsed)


# -- subcommands ---------------------------------------------------------------------

def cmd_validate(args, cfg, F) -> RunReport:
    rep = RunReport("validate", asdict(cfg))
    with open(args.graph) as fh:
        data = json.load(fh)
    try:
        g = Graph([str(v) for v in data["vertices"]],
                  [Edge(str(e["id"]), str(e["src"]), str(e["dst"])) for e in data["edges"]])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    problems = g.validate()
    for p in problems:
        rep.records.append(RunRecord("violation", False, "invalid", "", p))
    if not problems:
        rep.records.append(RunRecord("graph", True, "valid", "", repr(g)))
    args._exit_on_fail = EXIT_INPUT
    return rep


def cmd_paths(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    d = cfg.depth or 2
    rep = RunReport("paths", asdict(cfg))
    for p in g.paths_up_to(d):
        rep.records.append(RunRecord(str(p), True, len(p), "", f"{p.start} -> {p.end}"))
    return rep


def cmd_eval(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    value = lpa.phi(lpa.parse(args.term, g), g, F)
    rep = RunReport("eval", asdict(cfg))
    rep.records.append(RunRecord(args.term, True, str(value)))
    return rep


def cmd_mul(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    x, y = skew.parse_skew(args.left, g, F), skew.parse_skew(args.right, g, F)
    rep = RunReport("mul", asdict(cfg))
    rep.records.append(RunRecord(f"[{x}] [{y}]", True, str(x * y)))
    return rep


def _parse_morphism(text: str | None, g: Graph) -> lpa.GradeMorphism | None:
    if not text:
        return None
    values = {}
    for part in text.split(","):
        key, _, val = part.partition("=")
        nums = tuple(int(t) for t in val.split(":"))
        values[key.strip()] = nums[0] if len(nums) == 1 else nums
    return lpa.GradeMorphism(g, values)


def cmd_grade(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    parts = lpa.grade_decompose(args.term, g, _parse_morphism(args.morphism, g), F)
    rep = RunReport("grade", asdict(cfg))
    for deg, piece in parts.items():
        rep.records.append(RunRecord(f"degree {deg}", True, str(piece)))
    return rep


def cmd_axioms(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    bound = cfg.bound or 3
    res, dt = _timed(partial_action.verify_axioms, g, bound, cfg.depth or 1, F, seed=cfg.seed)
    rep = RunReport("axioms", asdict(cfg))
    for axiom in ("P1", "P2", "P3"):
        bad = [r for r in res.violations if r.name == axiom]
        rep.records.append(RunRecord(axiom, not bad, "pass" if not bad else "fail", "",
                                     f"{res.summary.get(axiom, 0)} instances, {len(bad)} violations"
                                     + (f"; first: {bad[0].detail}" if bad else "")))
    rep.records[-1].elapsed = dt
    return rep


def cmd_assoc(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    trials = cfg.trials or 100
    res, dt = _timed(skew.check_associativity, g, trials, cfg.depth or 3, F, cfg.seed)
    rep = RunReport("assoc", asdict(cfg))
    rep.records.append(_summary_record("associativity", res, dt))
    return rep


_DECIDERS = {
    "strong": graded.decide_strongly_graded,
    "clean": graded.decide_graded_clean,
    "unitreg": graded.decide_graded_unit_regular,
}


def cmd_check(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    rep = RunReport(f"check {args.property}", asdict(cfg))
    names = list(_DECIDERS) if args.property == "all" else [args.property]
    for name in names:
        verdict, dt = _timed(_DECIDERS[name], g, F)
        ok = verdict.verify(g, F)
        text = verdict.describe()
        rep.records.append(RunRecord(verdict.prop, ok, verdict.holds, digest(text), text, dt))
    if args.property == "strong" and cfg.bound:
        ev = skew.check_strong_grading(g, cfg.bound, F)
        rep.records.append(RunRecord(f"strong grading evidence, |g| <= {cfg.bound}", ev.verify(g, F),
                                     ev.strongly_graded, digest(ev.explanation), ev.explanation))
    if args.property == "all":
        rep.records.append(RunRecord("is loop", True, graded.is_loop(g), "", "graph inspection"))
    return rep


def cmd_iso(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    bound = cfg.bound or 3
    rep = RunReport(f"iso {args.which}", asdict(cfg))
    res, dt = _timed(beta.iso_agreement_check, g, F)
    rep.records.extend(_from_report(res, dt))
    for label, fn in (("semi-saturation", lambda: beta.verify_semi_saturated(g, bound, F)),
                      ("beta domains", lambda: beta.verify_domains(g, bound, F)),
                      ("orthogonality", lambda: beta.verify_orthogonality(g, F))):
        res, dt = _timed(fn)
        rep.records.append(_summary_record(label, res, dt))
    return rep


def cmd_laurent(args, cfg, F) -> RunReport:
    g = _graph(args.graph)
    res, dt = _timed(graded.laurent_check, g, args.N, F)
    rep = RunReport("laurent", asdict(cfg) | {"N": args.N})
    rep.records.append(_summary_record(f"{len(res)} products x^m x^n = x^(m+n)", res, dt))
    rep.records.extend(RunRecord(r.name, r.passed, r.data["product"]) for r in res.violations)
    return rep


def cmd_crosscheck(args, cfg, F) -> RunReport:
    graphs = {g.name: g for g in map(_graph, args.graphs)} if args.graphs else corpus()
    graphs.update(random_graphs(args.random, seed=cfg.seed))
    rep = RunReport("crosscheck", asdict(cfg) | {"random": args.random})
    for row in graded.equivalence_crosscheck(graphs, F):
        text = "; ".join(v.describe() for v in row.verdicts)
        rep.records.append(RunRecord(row.name, row.consistent and row.certificates_verified,
                                     list(row.as_tuple()), digest(text),
                                     "strong/clean/unitreg/loop" + ("" if row.certificates_verified
                                                                     else "; certificate failed")))
    return rep


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (rationals) or gf:p")
    common.add_argument("--bound", type=int, help="word length bound B")
    common.add_argument("--depth", type=int, help="cylinder / support depth d")
    common.add_argument("--trials", type=int, help="random trial count")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")

    p = _Parser(prog="leavitt-partial", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, *positional):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for arg, kw in positional:
            sp.add_argument(arg, **kw)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "check a graph file", ("graph", {}))
    add("paths", cmd_paths, "list finite paths up to --depth", ("graph", {}))
    add("eval", cmd_eval, "normal form of a Leavitt path algebra term", ("term", {}), ("graph", {}))
    add("mul", cmd_mul, "multiply two skew ring elements",
        ("left", {}), ("right", {}), ("graph", {}))
    sp = add("grade", cmd_grade, "decompose a term by a grading", ("term", {}), ("graph", {}))
    sp.add_argument("--morphism", help="edge=value pairs, e.g. a=1,b=0 (vectors as 1:0)")
    add("axioms", cmd_axioms, "verify the partial action axioms", ("graph", {}))
    add("assoc", cmd_assoc, "randomized associativity check", ("graph", {}))
    add("check", cmd_check, "decide graded properties with certificates",
        ("property", {"choices": ["strong", "clean", "unitreg", "all"]}), ("graph", {}))
    add("iso", cmd_iso, "verify the beta realization", ("which", {"choices": ["beta"]}), ("graph", {}))
    sp = add("laurent", cmd_laurent, "Laurent polynomial check on the loop", ("graph", {}))
    sp.add_argument("--N", type=int, default=5)
    sp = add("crosscheck", cmd_crosscheck, "equivalence table over a graph corpus",
             ("graphs", {"nargs": "*"}))
    sp.add_argument("--random", type=int, default=20, help="number of extra random graphs")
    return p


def run(argv: Sequence[str] | None = None, out=None) -> tuple[int, RunReport | None]:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.field, args.bound, args.depth, args.trials, args.seed,
                    "json" if args.json else "text")
    try:
        cfg.validate()
        F = field_from_spec(cfg.field)
        cfg.field = field_name(F)
        report = args.func(args, cfg, F)
    except (GraphError, DomainError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT, None
    print(emit(report, cfg.format, args.timings), file=out)
    if report.status == "pass":
        return EXIT_OK, report
    return getattr(args, "_exit_on_fail", EXIT_FAILED), report


def main(argv: Sequence[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 true/ok, 1 false/violation, 2 usage or domain error, 3 unknown.
Every command produces a structured report (key/value text, or JSON with
--json) whose verdict fields are deterministic given the same inputs and
seed; input files are echoed with a sha256 digest so runs can be replayed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .core import FiniteMatroid, Verdict, check_base_axioms, fmt
from .equivalence import UNKNOWN, almost_spans, classify_class, strongly_equivalent
from .errors import ClaimError, MatroidForgeError
from .files import (
    emit_family_text,
    emit_matroid_text,
    parse_family_text,
    parse_matroid_text,
    parse_setspec_text,
    parse_tasks_text,
)
from .finitary import FinitaryMatroid
from .forcing import check_claim_preconditions, forcing_step, make_task, seed_family
from .gentrunc import (
    TruncationFamily,
    enumerate_gen_truncations,
    enumerate_raw,
    verify_family,
    verify_family_finitary,
    verify_is_gen_truncation,
)
from .selftest import lemma_suite, oracle_suite
from .truncation import TruncationLevel, apply_level, classify_truncation

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


class Report:
    """Ordered key/value report; text and JSON renderings carry the same data."""

    def __init__(self, command: str, seed: int = 0):
        self.rows: list[tuple[str, str]] = [("command", command), ("seed", str(seed))]
        self.started = time.perf_counter()

    def add(self, key: str, value) -> None:
        self.rows.append((key, str(value)))

    def add_input(self, label: str, path: str) -> None:
        digest = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        self.rows.append(("input", f"{label}={path} sha256={digest}"))

    def to_text(self) -> str:
        elapsed = int((time.perf_counter() - self.started) * 1000)
        lines = [f"{k} {v}" for k, v in self.rows]
        lines.append(f"elapsed-ms {elapsed}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        elapsed = int((time.perf_counter() - self.started) * 1000)
        data: dict = {"rows": [[k, v] for k, v in self.rows], "elapsed_ms": elapsed}
        return json.dumps(data, indent=2) + "\n"


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_matroid(report: Report, path: str):
    report.add_input("matroid", path)
    return parse_matroid_text(_read(path))


def _load_finite(report: Report, path: str) -> FiniteMatroid:
    m = _load_matroid(report, path)
    if not isinstance(m, FiniteMatroid):
        raise MatroidForgeError("this command needs a finite matroid")
    return m


def _load_finitary(report: Report, path: str) -> FinitaryMatroid:
    m = _load_matroid(report, path)
    if not isinstance(m, FinitaryMatroid):
        raise MatroidForgeError("this command needs a finitary schema (free or periodic-sum)")
    return m


def _load_setspec(report: Report, label: str, value: str):
    path = Path(value)
    if path.is_file():
        report.add_input(label, value)
        return parse_setspec_text(_read(value))
    return parse_setspec_text(value)


def _tri_exit(value) -> int:
    if value is UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_OK if value else EXIT_VIOLATION


def _verdict_exit(verdict: Verdict) -> int:
    return EXIT_OK if verdict.ok else EXIT_VIOLATION


def _common_flags(parser: argparse.ArgumentParser, trailing: bool) -> None:
    # the flags are valid before or after the subcommand; trailing copies
    # suppress their defaults so they never clobber a leading occurrence
    absent = argparse.SUPPRESS
    parser.add_argument("--json", action="store_true",
                        default=absent if trailing else False,
                        help="emit the report as JSON")
    parser.add_argument("--report", metavar="PATH",
                        default=absent if trailing else None,
                        help="also write the report to a file")
    parser.add_argument("--seed", type=int,
                        default=absent if trailing else 0,
                        help="seed for randomized suites")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroid-forge",
        description="matroid truncation workbench",
    )
    _common_flags(parser, trailing=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="base-axiom checks")
    p.add_argument("action", choices=["check"])
    p.add_argument("--matroid", required=True)

    p = sub.add_parser("truncate", help="apply a truncation level")
    p.add_argument("--level", required=True, help="k, -n, or 'trivial'")
    p.add_argument("--matroid", required=True)
    p.add_argument("--out", help="write the resulting matroid file here")

    p = sub.add_parser("classify-truncation", help="find the level relating two matroids")
    p.add_argument("--matroid", required=True)
    p.add_argument("--candidate", required=True)

    p = sub.add_parser("equiv", help="almost-spanning and strong equivalence")
    p.add_argument("action", choices=["strong", "almost-spans", "classify"])
    p.add_argument("--matroid", required=True)
    p.add_argument("--left", help="set spec (inline or file)")
    p.add_argument("--right", help="set spec (inline or file)")
    p.add_argument("--set", dest="single", help="set spec for classify")
    p.add_argument("--fuel", type=int, default=256)

    p = sub.add_parser("gentrunc", help="generalised-truncation verification")
    p.add_argument("action", choices=["verify", "enumerate", "verify-finitary"])
    p.add_argument("--matroid", required=True)
    p.add_argument("--family")
    p.add_argument("--tasks")
    p.add_argument("--raw", action="store_true", help="use the brute-force oracle")
    p.add_argument("--fuel", type=int, default=256)

    p = sub.add_parser("forcing", help="finite-depth forcing step")
    p.add_argument("action", choices=["step", "seed", "check-claims"])
    p.add_argument("--matroid", required=True)
    p.add_argument("--family")
    p.add_argument("--task")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--prefix")
    p.add_argument("--fuel", type=int, default=256)
    p.add_argument("--out", help="write the seed family file here")

    p = sub.add_parser("selftest", help="built-in invariant suites")
    p.add_argument("action", choices=["lemmas", "oracle"])

    for child in sub.choices.values():
        _common_flags(child, trailing=True)
    return parser


def _cmd_axioms(args, report: Report) -> int:
    text = _read(args.matroid)
    report.add_input("matroid", args.matroid)
    matroid = parse_matroid_text(text)
    if not isinstance(matroid, FiniteMatroid):
        raise MatroidForgeError("axiom checking applies to finite matroids")
    verdict = check_base_axioms(matroid.ground, matroid.bases())
    report.add("verdict", verdict)
    return _verdict_exit(verdict)


def _cmd_truncate(args, report: Report) -> int:
    matroid = _load_finite(report, args.matroid)
    level = TruncationLevel.parse(args.level)
    result = apply_level(matroid, level)
    text = emit_matroid_text(result)
    report.add("level", level)
    report.add("bases", len(result.bases()))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        report.add("out", args.out)
    else:
        report.add("matroid-text", "\n" + text.rstrip())
    return EXIT_OK


def _cmd_classify_truncation(args, report: Report) -> int:
    matroid = _load_finite(report, args.matroid)
    candidate = _load_finite(report, args.candidate)
    level = classify_truncation(matroid, candidate)
    report.add("level", "none" if level is None else level)
    return EXIT_OK if level is not None else EXIT_VIOLATION


def _finite_carrier(matroid, spec):
    if isinstance(matroid, FinitaryMatroid):
        return spec
    if spec.is_infinite:
        raise MatroidForgeError("finite matroids take finite set specs")
    return frozenset(spec.low)


def _cmd_equiv(args, report: Report) -> int:
    matroid = _load_matroid(report, args.matroid)
    if args.action == "classify":
        if not args.single:
            raise MatroidForgeError("classify needs --set")
        spec = _load_setspec(report, "set", args.single)
        label = classify_class(matroid, _finite_carrier(matroid, spec))
        report.add("class", label)
        return EXIT_OK
    if not args.left or not args.right:
        raise MatroidForgeError(f"{args.action} needs --left and --right")
    left = _finite_carrier(matroid, _load_setspec(report, "left", args.left))
    right = _finite_carrier(matroid, _load_setspec(report, "right", args.right))
    if args.action == "strong":
        answer = strongly_equivalent(matroid, left, right, args.fuel)
    else:
        answer = almost_spans(matroid, left, right, args.fuel)
    report.add("verdict", answer)
    return _tri_exit(answer)


def _cmd_gentrunc(args, report: Report) -> int:
    if args.action == "verify":
        matroid = _load_finite(report, args.matroid)
        if not args.family:
            raise MatroidForgeError("verify needs --family")
        report.add_input("family", args.family)
        _, mode, members = parse_family_text(_read(args.family))
        if mode != "finite":
            raise MatroidForgeError("finite matroids take `set`-style families")
        verdict = verify_family(matroid, members)
        report.add("verdict", verdict)
        if verdict.ok:
            report.add("definition-check",
                       verify_is_gen_truncation(matroid, _explicit_from(matroid, members)))
        return _verdict_exit(verdict)
    if args.action == "enumerate":
        matroid = _load_finite(report, args.matroid)
        families = enumerate_raw(matroid) if args.raw else enumerate_gen_truncations(matroid)
        report.add("families", len(families))
        for i, fam in enumerate(families):
            members = " ".join(fmt(b) for b in sorted(fam, key=lambda s: (len(s), tuple(sorted(s)))))
            report.add(f"family-{i}", members)
        return EXIT_OK
    matroid = _load_finitary(report, args.matroid)
    if not args.family:
        raise MatroidForgeError("verify-finitary needs --family")
    report.add_input("family", args.family)
    _, mode, members = parse_family_text(_read(args.family))
    if mode != "classes":
        raise MatroidForgeError("finitary families take `class` lines")
    family = TruncationFamily.build(matroid, members)
    tasks = []
    if args.tasks:
        report.add_input("tasks", args.tasks)
        tasks = [(lo, up) for _, lo, up in parse_tasks_text(_read(args.tasks))]
    outcome = verify_family_finitary(matroid, family, tasks, args.fuel)
    report.add("verdict", outcome)
    for lower, upper in outcome.unmet_tasks:
        report.add("unmet", f"lower=({lower.directive()}) upper=({upper.directive()})")
    return EXIT_OK if outcome.ok else EXIT_VIOLATION


def _explicit_from(matroid: FiniteMatroid, members):
    from .core import ExplicitMatroid

    return ExplicitMatroid(matroid.ground, members, name="candidate", _checked=True)


def _cmd_forcing(args, report: Report) -> int:
    matroid = _load_finitary(report, args.matroid)
    if args.action == "seed":
        if not args.prefix:
            raise MatroidForgeError("seed needs --prefix")
        family = seed_family(matroid, args.prefix)
        text = emit_family_text(f"seed{args.prefix}", family.representatives)
        report.add("classes", len(family.representatives))
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            report.add("out", args.out)
        else:
            report.add("family-text", "\n" + text.rstrip())
        return EXIT_OK
    if not args.family or not args.task:
        raise MatroidForgeError(f"{args.action} needs --family and --task")
    report.add_input("family", args.family)
    _, mode, members = parse_family_text(_read(args.family))
    if mode != "classes":
        raise MatroidForgeError("forcing families take `class` lines")
    family = TruncationFamily.build(matroid, members)
    report.add_input("task", args.task)
    name, lower, upper = parse_tasks_text(_read(args.task))[0]
    task = make_task(matroid, lower, upper)
    report.add("task", name)
    if args.action == "check-claims":
        outcome = check_claim_preconditions(matroid, family, task, args.fuel)
        report.add("verdict", outcome)
        return EXIT_OK if outcome.ok else EXIT_VIOLATION
    try:
        cert = forcing_step(matroid, family, task, args.depth, args.fuel)
    except ClaimError as exc:
        report.add("verdict", exc.result)
        return EXIT_VIOLATION
    for line in cert.lines():
        key, _, value = line.partition(" ")
        report.add(key, value)
    report.add("verdict", "ok")
    return EXIT_OK


def _cmd_selftest(args, report: Report) -> int:
    suite = lemma_suite(args.seed) if args.action == "lemmas" else oracle_suite(args.seed)
    failed = False
    for name, ok, detail in suite:
        report.add("check", f"{name} {'ok' if ok else 'FAIL ' + detail}")
        failed = failed or not ok
    report.add("verdict", "FAIL" if failed else "ok")
    return EXIT_VIOLATION if failed else EXIT_OK


_HANDLERS = {
    "axioms": _cmd_axioms,
    "truncate": _cmd_truncate,
    "classify-truncation": _cmd_classify_truncation,
    "equiv": _cmd_equiv,
    "gentrunc": _cmd_gentrunc,
    "forcing": _cmd_forcing,
    "selftest": _cmd_selftest,
}


def dispatch(argv: list[str]) -> tuple[int, Report]:
    """Route one command line; returns (exit code, report)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    label = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    report = Report(label, args.seed)
    try:
        code = _HANDLERS[args.command](args, report)
    except MatroidForgeError as exc:
        report.add("error", str(exc))
        return EXIT_USAGE, report
    except FileNotFoundError as exc:
        report.add("error", f"cannot read {exc.filename}")
        return EXIT_USAGE, report
    report.add("exit", str(code))
    return code, report


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        parsed = build_parser().parse_args(argv)
        code, report = dispatch(argv)
    except SystemExit as exc:  # argparse usage errors
        return EXIT_USAGE if exc.code else EXIT_OK
    rendered = report.to_json() if parsed.json else report.to_text()
    sys.stdout.write(rendered)
    if parsed.report:
        Path(parsed.report).write_text(rendered, encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())

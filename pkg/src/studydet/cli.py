"""Command-line front end.

    studydet groupdet compute|dedekind|extension|frobenius --group PATH [--subgroup NAME] [--irreps PATH]
    studydet quaternion --matrix PATH
    studydet verify --suite NAME [--trials N] [--seed N]

Exit codes: 0 success, 1 property failure, 2 input error, 3 precondition violation.
Timing goes to stderr so that stdout is byte-identical for a fixed configuration.
"""

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import groupdet as gd
from . import matrix as mx
from . import sdet as sd
from . import verify
from .algebra import BUNDLED_GROUPS, load_group
from .errors import InputError, PreconditionError, StructuralError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3
MAX_QUATERNION_R = verify.MAX_R


class Report:
    def __init__(self, command, config):
        self.command = command
        self.config = config
        self.results = []
        self.lines = []

    def add(self, name, ok, detail):
        self.results.append({"name": name, "pass": bool(ok), "detail": detail})

    def say(self, line):
        self.lines.append(line)

    @property
    def ok(self):
        return all(r["pass"] for r in self.results)

    def render(self, output):
        if output == "json":
            doc = {"command": self.command, "config": self.config,
                   "results": self.results, "elapsed_ms": None}
            return json.dumps(doc, indent=2, ensure_ascii=False)
        return "\n".join(self.lines)


def _resolve_group(path):
    """A readable file wins; otherwise a bundled fixture matched by file stem (c2.json -> c2)."""
    if path is None:
        raise InputError("--group is required")
    if os.path.exists(path):
        return load_group(path)
    stem = os.path.splitext(os.path.basename(path))[0].lower()
    if stem in BUNDLED_GROUPS:
        return load_group(stem)
    raise InputError(f"{path}: no such group file or bundled group")


def _lower(flag):
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# groupdet

def _factor_lines(report, fr):
    for d in fr.to_dict()["factors"]:
        power = f"^{d['multiplicity']}" if d["multiplicity"] != 1 else ""
        report.say(f"  ({d['factor']}){power}")
    report.say(f"product-check: {_lower(fr.product_ok)}")
    for key, value in sorted(fr.checks.items()):
        report.say(f"{key}: {_lower(value)}")


def cmd_groupdet(args, report):
    group = _resolve_group(args.group)
    action = args.action
    if action == "compute":
        theta = gd.group_determinant(group)
        report.say(str(theta))
        report.add("group_determinant", True, str(theta))
        return
    if action == "dedekind":
        fr = gd.dedekind_factorize(group)
    elif action == "extension":
        if not args.subgroup:
            raise InputError("extension requires --subgroup NAME")
        fr = gd.extension_check(group, args.subgroup)
    elif action == "frobenius":
        source = args.irreps or group.name.lower()
        reps = gd.load_irreps(group, source)
        fr = gd.frobenius_verify(group, reps)
        if args.subgroup:
            fr.checks["degree_bound"] = gd.degree_bound_check(group, args.subgroup, reps)
    else:
        raise InputError(f"unknown groupdet action {action!r}")
    report.say(f"Theta({group.name}) = {fr.target}")
    report.say("factors:")
    _factor_lines(report, fr)
    d = fr.to_dict()
    report.add(f"{action}:product", fr.product_ok, {"target": d["target"], "factors": d["factors"]})
    for key, value in sorted(fr.checks.items()):
        report.add(f"{action}:{key}", value, None)


# ---------------------------------------------------------------------------
# quaternion

def load_quaternion_matrix(path):
    """{"r": int, "entries": r x r array of [w, x, y, z] rational strings}."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: cannot read matrix file ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict) or "r" not in data or "entries" not in data:
        raise InputError(f"{path}: expected an object with 'r' and 'entries'")
    r = data["r"]
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise InputError(f"{path}: 'r' must be a positive integer")
    rows = data["entries"]
    if not isinstance(rows, list) or len(rows) != r:
        raise InputError(f"{path}: 'entries' must have {r} rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != r:
            raise InputError(f"{path}: entries[{i}] must have {r} columns")
        parsed = []
        for j, q in enumerate(row):
            if not isinstance(q, list) or len(q) != 4:
                raise InputError(f"{path}: entries[{i}][{j}] must be [w, x, y, z]")
            try:
                parsed.append([Fraction(str(c)) for c in q])
            except (ValueError, ZeroDivisionError):
                raise InputError(f"{path}: entries[{i}][{j}] has a non-rational coordinate") from None
        out.append(parsed)
    if r > MAX_QUATERNION_R:
        raise PreconditionError(f"size budget: r = {r} exceeds {MAX_QUATERNION_R}")
    return sd.quaternion_matrix(out)


def cmd_quaternion(args, report):
    if not args.matrix:
        raise InputError("--matrix is required")
    a = load_quaternion_matrix(args.matrix)
    s = sd.study_det(a)
    real = s.is_rational()
    value = s.rational() if real else s
    invertible = sd.study_inverse(a) is not None
    square = mx.det(sd.phi(sd.psi(a))) == (s * s).rational()
    report.say(f"Sdet = {value}; invertible: {_lower(invertible)}")
    report.say(f"real: {_lower(real)}")
    report.say(f"det(phi(psi(a))) = Sdet^2: {_lower(square)}")
    report.add("sdet", True, str(value))
    report.add("invertible", True, invertible)
    report.add("real", real, None)
    report.add("phi_psi_square", square, None)


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args, report):
    names = verify.suite_names()
    if args.suite != "all" and args.suite not in names:
        raise InputError(f"unknown suite {args.suite!r}; choose from all, {', '.join(names)}")
    if args.trials < 1:
        raise InputError("--trials must be positive")
    for rep in verify.run(args.suite, args.trials, args.seed):
        report.say(rep.summary())
        for key, frac in rep.to_dict()["properties"].items():
            report.say(f"  {key}: {frac}")
        for f in rep.failures:
            report.say(f"  FAIL seed={f['seed']} draw={f['draw']} {','.join(f['failed'])}: {f['inputs']}")
        report.add(rep.name, rep.ok, rep.to_dict())


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    p = argparse.ArgumentParser(prog="studydet", description="Study-type determinants and group determinants.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("groupdet", parents=[common], help="group determinants and their factorizations")
    g.add_argument("action", choices=("compute", "dedekind", "extension", "frobenius"))
    g.add_argument("--group", metavar="PATH")
    g.add_argument("--subgroup", metavar="NAME")
    g.add_argument("--irreps", metavar="PATH")

    q = sub.add_parser("quaternion", parents=[common], help="Study determinant of a quaternion matrix")
    q.add_argument("--matrix", metavar="PATH")

    v = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    v.add_argument("--suite", metavar="NAME", default="all")
    v.add_argument("--trials", metavar="N", type=int, default=50)
    v.add_argument("--seed", metavar="N", type=int, default=0)
    return p


COMMANDS = {"groupdet": cmd_groupdet, "quaternion": cmd_quaternion, "verify": cmd_verify}


def _config(args):
    return {k: v for k, v in sorted(vars(args).items()) if k != "command"}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    report = Report(args.command, _config(args))
    start = time.perf_counter()
    try:
        COMMANDS[args.command](args, report)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InputError, StructuralError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(report.render(args.output))
    print(f"elapsed: {(time.perf_counter() - start) * 1000:.0f} ms", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance criteria 1-11, each at its stated trial count and runtime limit.

Run with ``pytest tests/test_acceptance.py -v`` (the pass/fail lines are printed in
the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import contextlib
import io
import time

from studydet import cli
from studydet import groupdet as gd
from studydet import regrep as rr
from studydet import sdet as sd
from studydet import verify
from studydet.verify import trial_rng

SEED = 20240601
LINES = []


def record(number, label, ok, detail, elapsed, limit):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = f" (limit {limit:g} s)" if limit is not None else ""
    LINES.append(f"[{status}] criterion {number:2d} {label}: {detail}; {elapsed:.2f} s{budget}")
    assert ok, detail
    assert within, f"took {elapsed:.2f} s, limit {limit} s"


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def suite_line(report):
    return f"{report.passed}/{report.trials}"


def test_criterion_01_kronecker_reversal():
    rep, dt = timed(lambda: verify.run_suite("kron", 500, SEED))
    record(1, "Kronecker reversal", rep.ok, suite_line(rep), dt, 5)


def test_criterion_02_commuting_block_determinant():
    rep, dt = timed(lambda: verify.run_suite("block-det", 200, SEED))
    record(2, "commuting-block determinant", rep.ok, suite_line(rep), dt, 30)


def test_criterion_03_core_diagram():
    def run():
        counts = {}
        for name in sorted(verify.diagram_towers()):
            good = 0
            for i in range(100):
                checks, _ = verify.trial_diagram(trial_rng(SEED, f"diagram:{name}", i), name)
                good += checks["core_diagram"] and checks["regrep_diagram"]
            counts[name] = good
        return counts
    counts, dt = timed(run)
    ok = all(v == 100 for v in counts.values()) and len(counts) == 4
    record(3, "core diagram", ok, ", ".join(f"{k} {v}/100" for k, v in counts.items()), dt, 120)


def test_criterion_04_study_determinant():
    def run():
        study = verify.run_suite("study", 200, SEED)
        invertible = singular = good_inv = good_sing = 0
        i = 0
        while invertible < 50:
            rng = trial_rng(SEED, "study:invertible", i)
            i += 1
            checks, _ = verify.trial_study_invertibility(rng, singular=False)
            if "S2_two_sided_inverse" in checks:
                invertible += 1
                good_inv += all(checks.values())
        for k in range(20):
            checks, _ = verify.trial_study_invertibility(trial_rng(SEED, "study:singular", k), singular=True)
            singular += 1
            good_sing += all(checks.values())
        return study, good_inv, good_sing
    (study, good_inv, good_sing), dt = timed(run)
    props = study.to_dict()["properties"]
    wanted = ["S1_multiplicative", "S4_real", "S5_square"]
    ok = study.ok and good_inv == 50 and good_sing == 20
    detail = (", ".join(f"{k} {props[k]}" for k in wanted)
              + f", S3 row/col {props['S3_row_op']}, S2 invertible {good_inv}/50, singular {good_sing}/20")
    record(4, "Study determinant suite", ok, detail, dt, 60)


def test_criterion_05_cayley_hamilton():
    def run():
        rep = verify.run_suite("cayley-hamilton", 200, SEED)
        e = sd.quaternion_towers().e
        a = sd.quaternion(1, 2, 3, 4)
        closed = str(rr.charpoly_regrep(e, a)) == "x^2 - 2*x + 30" and rr.cayley_hamilton_check(e, a)
        return rep, closed
    (rep, closed), dt = timed(run)
    record(5, "Cayley-Hamilton", rep.ok and closed,
           f"{suite_line(rep)}, closed form x^2 - 2*x + 30: {closed}", dt, 30)


def test_criterion_06_commutant():
    def run():
        e = sd.quaternion_towers().e
        js = rr.j_matrices(e)
        forward = 0
        for i in range(100):
            rng = trial_rng(SEED, "commutant:forward", i)
            b = rr.regrep_element(e, e.A.random_element(rng)).map(e.A, e.A)
            forward += all(j * b == b * j for j in js)
        span = rr.commutant_basis(e)
        reverse = 0
        for i in range(20):
            b = rr.random_commutant_element(e, trial_rng(SEED, "commutant:reverse", i), span=span)
            ok, a = rr.commutant_check(e, b)
            reverse += ok and a is not None and rr.regrep_element(e, a) == b
        return forward, reverse
    (forward, reverse), dt = timed(run)
    record(6, "commutant characterization", forward == 100 and reverse == 20,
           f"forward {forward}/100, reverse {reverse}/20", dt, 30)


def test_criterion_07_dedekind():
    names = ["c2", "c3", "c4", "c2xc2", "c6"]
    reports, dt = timed(lambda: [gd.dedekind_factorize(n) for n in names])
    good = sum(r.ok for r in reports)
    record(7, "Dedekind factorization", good == 5, f"{good}/5 groups", dt, 10)


def test_criterion_08_extension():
    cases = [("c4", "C2"), ("s3", "R3"), ("d4", "C4"), ("q8", "I")]
    reports, dt = timed(lambda: [gd.extension_check(g, h) for g, h in cases])
    good = sum(r.ok for r in reports)
    record(8, "extension theorem", good == 4, f"{good}/4 pairs", dt, 120)


def test_criterion_09_frobenius():
    def run():
        out = []
        for name, sub in (("s3", "R3"), ("q8", "I")):
            reps = gd.load_irreps(name, name)
            report = gd.frobenius_verify(name, reps)
            out.append(report.ok and gd.degree_bound_check(name, sub, reps))
        return out
    oks, dt = timed(run)
    record(9, "Frobenius verification", all(oks), f"{sum(oks)}/2 groups (product, degrees, bound)", dt, 60)


def test_criterion_10_oracle_agreement():
    rep, dt = timed(lambda: verify.run_suite("oracle", 300, SEED))
    record(10, "division-free determinant vs Leibniz", rep.ok, suite_line(rep), dt, 30)


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = cli.main(argv)
    return code, buf.getvalue()


def test_criterion_11_determinism():
    argv = ["verify", "--suite", "all", "--seed", "42", "--trials", "50", "--output", "json"]
    (first, second), dt = timed(lambda: (run_cli(argv), run_cli(argv)))
    same = first[1] == second[1] and first[1].strip() != ""
    ok = same and first[0] == 0 and second[0] == 0
    record(11, "determinism", ok, f"byte-identical JSON: {same}, exit codes {first[0]}/{second[0]}", dt, None)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(LINES))

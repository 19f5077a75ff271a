"""Command-line front end: outputs, JSON shape and exit codes."""

import contextlib
import io
import json


from studydet import cli
from studydet.rings import QQ, polynomial_ring


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def write_matrix(tmp_path, rows, name="m.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"r": len(rows), "entries": rows}))
    return str(path)


def test_groupdet_compute_c2():
    code, out, _ = run(["groupdet", "compute", "--group", "c2.json"])
    assert code == 0 and out.strip() == "x_e^2 - x_g^2"


def test_groupdet_compute_from_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"name": "C2", "elements": ["e", "g"], "table": [[0, 1], [1, 0]]}))
    code, out, _ = run(["groupdet", "compute", "--group", str(path)])
    assert code == 0 and out.strip() == "x_e^2 - x_g^2"


def test_groupdet_extension_s3():
    code, out, _ = run(["groupdet", "extension", "--group", "s3.json", "--subgroup", "R3"])
    assert code == 0 and "product-check: true" in out


def test_groupdet_dedekind_nonabelian():
    code, out, err = run(["groupdet", "dedekind", "--group", "s3.json"])
    assert code == 3 and "subgroup must be abelian: G itself is not" in err


def test_groupdet_frobenius_with_bound():
    code, out, _ = run(["groupdet", "frobenius", "--group", "q8", "--subgroup", "I"])
    assert code == 0 and "degree_bound: true" in out


def test_groupdet_extension_needs_subgroup():
    code, _, err = run(["groupdet", "extension", "--group", "c4"])
    assert code == 2 and "--subgroup" in err


def test_malformed_group_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"name": "X", "elements": ["e", "g"], "table": [[0, 1], [1, 1]]}')
    code, _, err = run(["groupdet", "compute", "--group", str(path)])
    assert code == 2 and str(path) in err
    path.write_text("{")
    code, _, err = run(["groupdet", "compute", "--group", str(path)])
    assert code == 2 and "line 1" in err


def test_quaternion_examples(tmp_path):
    code, out, _ = run(["quaternion", "--matrix", write_matrix(tmp_path, [[["1", "2", "3", "4"]]])])
    assert code == 0 and out.splitlines()[0] == "Sdet = 30; invertible: true"
    ident = [[["1", "0", "0", "0"], ["0", "0", "0", "0"]], [["0", "0", "0", "0"], ["1", "0", "0", "0"]]]
    code, out, _ = run(["quaternion", "--matrix", write_matrix(tmp_path, ident)])
    assert out.startswith("Sdet = 1;")
    zero = [[["0", "0", "0", "0"]]]
    code, out, _ = run(["quaternion", "--matrix", write_matrix(tmp_path, zero)])
    assert code == 0 and out.splitlines()[0] == "Sdet = 0; invertible: false"
    assert "real: true" in out


def test_quaternion_rational_entries(tmp_path):
    code, out, _ = run(["quaternion", "--matrix", write_matrix(tmp_path, [[["1/2", "0", "0", "1/2"]]])])
    assert code == 0 and out.startswith("Sdet = 1/2;")


def test_quaternion_input_errors(tmp_path):
    code, _, err = run(["quaternion", "--matrix", write_matrix(tmp_path, [[["1", "x", "0", "0"]]])])
    assert code == 2 and "entries[0][0]" in err
    code, _, _ = run(["quaternion", "--matrix", write_matrix(tmp_path, [[["1", "0", "0"]]])])
    assert code == 2
    big = [[["1", "0", "0", "0"]] * 4 for _ in range(4)]
    code, _, err = run(["quaternion", "--matrix", write_matrix(tmp_path, big)])
    assert code == 3 and "budget" in err


def test_verify_examples():
    code, out, _ = run(["verify", "--suite", "kron", "--trials", "500", "--seed", "7"])
    assert code == 0 and out.splitlines()[0] == "kron: 500/500 pass"
    code, out, _ = run(["verify", "--suite", "diagram", "--trials", "100", "--seed", "1"])
    assert code == 0 and out.splitlines()[0] == "diagram: 100/100 pass"
    code, out, _ = run(["verify", "--suite", "cayley-hamilton", "--trials", "200", "--seed", "3"])
    assert code == 0 and out.splitlines()[0] == "cayley-hamilton: 200/200 pass"


def test_verify_unknown_suite():
    code, _, err = run(["verify", "--suite", "nope"])
    assert code == 2 and "unknown suite" in err


def test_bad_flag_is_input_error():
    code, _, _ = run(["verify", "--bogus"])
    assert code == 2
    code, _, _ = run(["verify", "--output", "xml"])
    assert code == 2


def test_json_report_shape():
    code, out, err = run(["verify", "--suite", "oracle", "--trials", "5", "--seed", "1", "--output", "json"])
    doc = json.loads(out)
    assert set(doc) == {"command", "config", "results", "elapsed_ms"}
    assert doc["command"] == "verify" and doc["elapsed_ms"] is None
    assert doc["config"] == {"output": "json", "seed": 1, "suite": "oracle", "trials": 5}
    assert doc["results"][0]["name"] == "oracle" and doc["results"][0]["pass"] is True
    assert "elapsed" in err


def test_json_polynomials_round_trip():
    code, out, _ = run(["groupdet", "dedekind", "--group", "c3", "--output", "json"])
    doc = json.loads(out)
    product = doc["results"][0]
    from studydet.rings import cyclotomic_field
    R = polynomial_ring(cyclotomic_field(3), ("x_0", "x_1", "x_2"))
    factors = [R.parse(f["factor"]) for f in product["detail"]["factors"]]
    assert [str(f) for f in factors] == [f["factor"] for f in product["detail"]["factors"]]
    total = R.one
    for f in factors:
        total = total * f
    target = polynomial_ring(QQ, ("x_0", "x_1", "x_2")).parse(product["detail"]["target"])
    assert total == target.change_ring(cyclotomic_field(3))


def test_text_output_is_deterministic():
    argv = ["verify", "--suite", "groupdet", "--trials", "8", "--seed", "5"]
    assert run(argv)[1] == run(argv)[1]


def test_failure_reproducer(monkeypatch):
    from studydet import verify

    def broken(rng):
        x = rng.randint(0, 9)
        return {"always_small": x < 5}, f"x={x}"
    monkeypatch.setitem(verify.SUITES, "kron", broken)
    code, out, _ = run(["verify", "--suite", "kron", "--trials", "20", "--seed", "3"])
    assert code == 1
    assert "FAIL seed=3 draw=" in out and "always_small" in out

import json

import pytest

from realdp.cli import canonical_json, main
from conftest import worked_conic_matrix


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv + ["--format", "json"])
    return code, json.loads(out)


def write_matrix_file(tmp_path, matrix, name="matrix.json"):
    doc = {
        "splitting": list(matrix.splitting),
        "entries": [
            [{"degree": q.degree, "coeffs": list(q.coeffs)} for q in row]
            for row in matrix.entries
        ],
    }
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def write_sphere_file(tmp_path):
    doc = {
        "degree": 2,
        "terms": [
            {"exponents": [0, 2, 0, 0], "coeff": 1},
            {"exponents": [0, 0, 2, 0], "coeff": 1},
            {"exponents": [0, 0, 0, 2], "coeff": 1},
            {"exponents": [2, 0, 0, 0], "coeff": -1},
        ],
    }
    path = tmp_path / "sphere.json"
    path.write_text(json.dumps(doc))
    return str(path)


def write_cycles_file(tmp_path, radii, name="cycles.json"):
    cycles = []
    for r in radii:
        cycles.append(
            {
                "ambient": 2,
                "closure": "sphere",
                "points": [
                    ["1", f"{r}", f"{r}"],
                    ["1", f"-{r}", f"{r}"],
                    ["1", f"-{r}", f"-{r}"],
                    ["1", f"{r}", f"-{r}"],
                ],
            }
        )
    path = tmp_path / name
    path.write_text(json.dumps({"cycles": cycles}))
    return str(path)


def write_center_file(tmp_path):
    path = tmp_path / "center.json"
    path.write_text(json.dumps({"normals": [["0", "1", "0"], ["0", "0", "1"]]}))
    return str(path)


def test_table1_json(capsys):
    code, rows = run_json(capsys, ["table1"])
    assert code == 0
    assert len(rows) == 24
    d2_rows = [r for r in rows if r["surface"] == "D2"]
    assert {r["rendered"] for r in d2_rows} == {"F-K", "-F-3K"}


def test_table1_text_contains_row(capsys):
    code, out = run(capsys, ["table1"])
    assert code == 0
    assert ["D2", "2", "3", "0", "F-K", "6", "2", "yes"] in [l.split() for l in out.splitlines()]


def test_table1_json_byte_stable(capsys):
    _, out1 = run(capsys, ["table1", "--format", "json"])
    _, out2 = run(capsys, ["table1", "--format", "json"])
    assert out1 == out2
    payload = json.loads(out1)
    assert canonical_json(payload) == out1.strip()


def test_enumerate(capsys):
    code, payload = run_json(capsys, ["enumerate", "D2"])
    assert code == 0
    assert [d["rendered"] for d in payload] == ["-F-3K", "F-K"]
    assert payload[0]["divisor"]["basis"] == ["F", "K"]
    code, payload = run_json(capsys, ["enumerate", "Q31_0_4"])
    assert code == 0 and payload == []


def test_enumerate_unknown_surface_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "XYZ"])
    assert exc.value.code == 2


def test_check(capsys):
    code, payload = run_json(capsys, ["check", "D2", "1", "-1"])
    assert code == 0
    assert payload["status"] == "pass"
    assert payload["conditions"] == {f"c{i}": True for i in range(1, 6)}
    assert payload["ell"] == 6 and payload["genus"] == 2
    code, payload = run_json(capsys, ["check", "D2", "-1", "-1"])
    assert code == 1
    assert payload["status"] == "fail" and payload["conditions"]["c5"] is False


def test_check_wrong_rank_exits_2(capsys):
    code, payload = run_json(capsys, ["check", "D2", "1"])
    assert code == 2
    assert payload["status"] == "error"


def test_conic_conditions(capsys):
    code, payload = run_json(capsys, ["conic", "conditions", "3", "1", "1"])
    assert code == 0
    assert payload["conditions"] == {f"c{i}": True for i in range(1, 7)}
    code, payload = run_json(capsys, ["conic", "conditions", "3", "1", "2"])
    assert code == 1


def test_conic_candidate_and_chow(capsys):
    code, payload = run_json(capsys, ["conic", "candidate", "3"])
    assert code == 0
    assert payload == {"a": 1, "b": 1, "ell_lower_bound": 6, "genus": 2}
    code, payload = run_json(capsys, ["conic", "chow", "0", "3"])
    assert code == 0
    assert payload == {"KX2": 2, "s": 3, "x": 1, "y": -1}


def test_conic_matrix_commands(capsys, tmp_path):
    path = write_matrix_file(tmp_path, worked_conic_matrix())
    code, payload = run_json(capsys, ["conic", "analyze", path])
    assert code == 0
    assert payload["total"] == 6 and payload["real"] == 6 and payload["s"] == 3
    code, payload = run_json(capsys, ["conic", "discriminant", path])
    assert code == 0
    assert payload["degree"] == 6
    assert payload["coeffs"] == [0, 4, 0, -5, 0, 1, 0]
    assert payload["rendered"] == "u*v*(u - v)*(u + v)*(u - 2*v)*(u + 2*v)"


def test_conic_analyze_non_squarefree_exits_1(capsys, tmp_path):
    doc = {
        "splitting": [1, 1, 1],
        "entries": [
            [{"degree": 2, "coeffs": [0, 0, 1]}, {"degree": 2, "coeffs": [0, 0, 0]}, {"degree": 2, "coeffs": [0, 0, 0]}],
            [{"degree": 2, "coeffs": [0, 0, 0]}, {"degree": 2, "coeffs": [0, 0, 1]}, {"degree": 2, "coeffs": [0, 0, 0]}],
            [{"degree": 2, "coeffs": [0, 0, 0]}, {"degree": 2, "coeffs": [0, 0, 0]}, {"degree": 2, "coeffs": [1, 2, 1]}],
        ],
    }
    path = tmp_path / "square.json"
    path.write_text(json.dumps(doc))
    code, payload = run_json(capsys, ["conic", "analyze", str(path)])
    assert code == 1
    assert payload["squarefree"] is False


def test_conic_construct(capsys, tmp_path):
    doc = {"splitting": [1, 1, 1], "roots": [[0, 5], [1, -1], [2, -2]]}
    path = tmp_path / "construct.json"
    path.write_text(json.dumps(doc))
    code, payload = run_json(capsys, ["conic", "construct", str(path)])
    assert code == 0
    assert payload["splitting"] == [1, 1, 1]
    diag = [payload["entries"][i][i]["coeffs"] for i in range(3)]
    assert diag[0] == [0, -5, 1]  # u(u - 5v)
    code, payload = run_json(capsys, ["conic", "analyze", str(path)])
    assert code == 2  # a construction document is not a matrix document


def test_conic_matrix_schema_violation_exits_2(capsys, tmp_path):
    doc = {"splitting": [1, 1, 1], "entries": []}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, payload = run_json(capsys, ["conic", "analyze", str(path)])
    assert code == 2 and payload["status"] == "error"


def test_hyp_command(capsys, tmp_path):
    sphere = write_sphere_file(tmp_path)
    code, payload = run_json(capsys, ["hyp", sphere, "--point", "1,0,0,0", "--trials", "100", "--seed", "0"])
    assert code == 0 and payload["status"] == "supported"
    code, payload = run_json(capsys, ["hyp", sphere, "--point", "0,0,0,1", "--trials", "50", "--seed", "0"])
    assert code == 1 and payload["status"] == "refuted"
    assert payload["trial"] is not None and payload["trial"] <= 50
    code, payload = run_json(capsys, ["hyp", sphere, "--point", "1,1,0,0", "--trials", "5", "--seed", "0"])
    assert code == 2  # center lies on the hypersurface


def test_link_command(capsys, tmp_path):
    center = write_center_file(tmp_path)
    nested = write_cycles_file(tmp_path, ["1/4", "1/2"], name="nested.json")
    code, payload = run_json(capsys, ["link", nested, center, "--degree", "4"])
    assert code == 0
    assert payload["sum_abs"] == 4 and payload["hyperbolic"] is True
    single = write_cycles_file(tmp_path, ["1/4"], name="single.json")
    code, payload = run_json(capsys, ["link", single, center, "--degree", "4"])
    assert code == 1
    assert payload["sum_abs"] == 2 and payload["hyperbolic"] is False


def test_link_degenerate_input_exits_2(capsys, tmp_path):
    center = write_center_file(tmp_path)
    doc = {
        "cycles": [
            {
                "ambient": 2,
                "closure": "sphere",
                "points": [["1", "1", "0"], ["1", "0", "1"], ["1", "-1", "-1"]],
            }
        ]
    }
    path = tmp_path / "bad_cycle.json"
    path.write_text(json.dumps(doc))
    code, payload = run_json(capsys, ["link", str(path), center, "--degree", "2"])
    assert code == 2
    assert "perturb" in payload["message"]


def test_json_payloads_round_trip(capsys, tmp_path):
    sphere = write_sphere_file(tmp_path)
    commands = [
        ["table1"],
        ["enumerate", "G2_1_0"],
        ["check", "B1", "-3"],
        ["conic", "conditions", "5", "3", "1"],
        ["conic", "chow", "2", "1"],
        ["hyp", sphere, "--point", "1,0,0,0", "--trials", "5", "--seed", "7"],
    ]
    for argv in commands:
        _, out = run(capsys, argv + ["--format", "json"])
        payload = json.loads(out)
        assert canonical_json(payload) == out.strip()


def test_link_with_explicit_chain(capsys, tmp_path):
    nested = write_cycles_file(tmp_path, ["1/4", "1/2"], name="nested.json")
    path = tmp_path / "center_chain.json"
    path.write_text(
        json.dumps(
            {
                "normals": [["0", "1", "0"], ["0", "0", "1"]],
                "chain": {"normals": [["0", "1", "2"]]},
            }
        )
    )
    code, payload = run_json(capsys, ["link", nested, str(path), "--degree", "4"])
    assert code == 0 and payload["sum_abs"] == 4


def test_malformed_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["table1", "--format", "yaml"])
    assert exc.value.code == 2


def test_help_available_per_subcommand():
    for argv in (["--help"], ["table1", "--help"], ["conic", "--help"], ["conic", "analyze", "--help"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 0


def test_malformed_documents_exit_2(capsys, tmp_path):
    junk = tmp_path / "junk.json"
    junk.write_text('"just a string"')
    wrong_dim = tmp_path / "wrong_dim.json"
    wrong_dim.write_text(
        json.dumps({"cycles": [{"ambient": 2, "closure": "sphere",
                                "points": [["1", "2"], ["1", "3"]]}]})
    )
    center = write_center_file(tmp_path)
    sphere = write_sphere_file(tmp_path)
    cases = [
        ["conic", "analyze", str(junk)],
        ["conic", "construct", str(junk)],
        ["hyp", str(junk), "--point", "1,0,0,0"],
        ["hyp", sphere, "--point", "1,0,0"],
        ["hyp", sphere, "--point", "a,b,c,d"],
        ["link", str(wrong_dim), center, "--degree", "2"],
        ["link", str(tmp_path / "missing.json"), center, "--degree", "2"],
    ]
    for argv in cases:
        code, payload = run_json(capsys, argv)
        assert code == 2, argv
        assert payload["status"] == "error"

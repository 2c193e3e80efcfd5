import json

import pytest

from newton_monodromy.cli.commands import build_parser, job_from_args, main
from newton_monodromy.zeta.cyclotomic import RootOfUnity

WORKED = ["-n", "2", "-P", "x^2 + y^3", "-Q", "x + y"]
ASSUME = ["--assume-nondegenerate", "--assume-isolated", "--assume-transversal"]


def run_machine(capsys, argv):
    status = main(argv + ["--format", "machine"])
    return status, json.loads(capsys.readouterr().out)


def test_zeta_local_text(capsys):
    assert main(["zeta-local"] + WORKED) == 0
    out = capsys.readouterr().out
    assert "(1-t^2)(1-t^4)^{-1}" in out


def test_zeta_at_infinity_machine(capsys):
    status, report = run_machine(capsys, ["zeta-infinity", "-n", "1", "-P", "x^2", "-Q", "x + 1", "--mode", "infinity"])
    assert status == 0
    assert report["results"]["zeta"] == [{"d": 1, "exp": 2}]
    assert report["results"]["chi"] == 1


def test_jordan_for_one_eigenvalue(capsys):
    status, report = run_machine(capsys, ["jordan"] + WORKED + ["--lambda", "1/4", "--k", "1"] + ASSUME)
    assert status == 0
    rows = {row["size"]: row["blocks"] for row in report["results"]["jordan"]["1/4"]}
    assert rows == {1: 1, 2: 0}
    assert report["results"]["blocks at least"] == {"1/4": 1}
    assert all(check["passed"] for check in report["checks"])


def test_spectrum_machine(capsys):
    status, report = run_machine(capsys, ["spectrum"] + WORKED + ASSUME)
    assert status == 0
    spectrum = {item["exponent"]: item["coefficient"] for item in report["results"]["spectrum"]}
    assert spectrum == {"1/4": 1, "7/4": 1}
    assert report["errors"] == []


def test_missing_assumptions_fail_the_run(capsys):
    status, report = run_machine(capsys, ["spectrum"] + WORKED)
    assert status == 1
    assert report["errors"][0].startswith("HypothesisError")
    assert report["hypotheses"]["nondegenerate"] == "not asserted"
    assert report["results"]["violating datum"] == ["nondegenerate", "isolated", "transversal"]


def test_lefschetz_needs_m(capsys):
    status, report = run_machine(capsys, ["lefschetz"] + WORKED + ["--m", "4"])
    assert status == 0
    assert report["results"]["lefschetz"] == {"4": -2}
    status, report = run_machine(capsys, ["lefschetz"] + WORKED)
    assert status == 1


def test_check_command_agrees_with_the_oracles(capsys):
    status, report = run_machine(capsys, ["check"] + WORKED)
    assert status == 0
    assert {r["quantity"] for r in report["results"]["oracles"]} == {"local zeta function", "reduced spectrum"}
    assert all(r["agree"] for r in report["results"]["oracles"])


def test_unparsable_input_exits_with_two(capsys):
    assert main(["zeta-local", "-n", "2", "-P", "x^-1"]) == 2
    assert "negative exponent" in capsys.readouterr().err


def test_inputs_file(tmp_path, capsys):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"inputs": {"n": 2, "P": "x^2 + y^3", "Q": "x + y", "lambda": ["3/4"]}}))
    status, report = run_machine(capsys, ["multiplicity", "--input", str(path)])
    assert status == 0
    assert report["results"]["multiplicities"] == {"3/4": 1}


def test_flags_override_the_inputs_file(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({"n": 2, "P": "x^2 + y^3", "mode": "local", "assumptions": {"isolated": True}}))
    args = build_parser().parse_args(["eigenvalues", "--input", str(path), "-P", "x^3 + y^2", "--lambda", "1/6,5/6"])
    spec = job_from_args(args)
    assert spec.P.as_dict() == {(3, 0): 1, (0, 2): 1}
    assert spec.roots == [RootOfUnity(6, 1), RootOfUnity(6, 5)]
    assert spec.assumptions["isolated"] is True
    assert spec.assumptions["transversal"] is False


def test_unknown_command_is_rejected():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["monodromy"])

"""CLI tests: subcommands, exit codes, report formats, and the JSON schema."""
import json

import jsonschema
import numpy as np
import pytest

from qinterleave import parse_plain
from qinterleave.cli import (
    main,
    report_schema,
    run_demo,
    run_enumerate,
    run_synth,
    run_verify,
)
from oracles import circuit_label_action, permutation_label_action
from qinterleave import interleave_permutation


def run_main(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestDemoCommand:
    def test_default_run(self, capsys):
        code, out = run_main(capsys, "demo", "--output", "json")
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] == "pass"
        assert report["parameters"]["bursts"] == ["ZZZIIIIII", "IIIIIZZZI"]
        assert len(report["parameters"]["block_amplitudes"]) == 3
        positions = [item["corrected_positions_1based"] for item in report["items"]]
        assert positions == [[1, 4, 7], [3, 6, 8]]
        for item in report["items"]:
            assert item["fidelity"] >= 1.0 - 1e-10

    def test_custom_bursts(self, capsys):
        code, out = run_main(capsys, "demo", "--bursts", "ZZZIIIIII,IIIIIZZZI",
                             "--output", "json")
        assert code == 0
        report = json.loads(out)
        positions = [item["corrected_positions_1based"] for item in report["items"]]
        assert positions == [[1, 4, 7], [3, 6, 8]]

    def test_custom_single_burst(self, capsys):
        code, out = run_main(capsys, "demo", "--bursts", "IIIIZIIII",
                             "--output", "json")
        assert code == 0
        report = json.loads(out)
        assert report["items"][0]["corrected_positions_1based"] == [5]

    def test_uncorrectable_burst_fails_honestly(self, capsys):
        # a bit error is invisible to the phase-code decoder, so the branch
        # must be reported as failed
        code, out = run_main(capsys, "demo", "--bursts", "XIIIIIIII",
                             "--output", "json")
        assert code == 1
        report = json.loads(out)
        assert report["verdict"] == "fail"
        assert report["items"][0]["fidelity"] < 1.0 - 1e-10

    def test_bad_burst_length_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["demo", "--bursts", "ZZZ"])
        assert exc.value.code == 2

    def test_basis_coefficients(self, capsys):
        code, out = run_main(capsys, "demo", "--coeffs", "1,0,1,0,1,0",
                             "--output", "json")
        assert code == 0
        assert json.loads(out)["verdict"] == "pass"

    def test_seeded_run_passes(self, capsys):
        code, out = run_main(capsys, "demo", "--seed", "7", "--output", "json")
        assert code == 0

    def test_bad_coeffs_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["demo", "--coeffs", "1,0"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["demo", "--coeffs", "1,1,1,0,1,0"])
        assert exc.value.code == 2


class TestVerifyCommand:
    def test_statevector_pass(self, capsys):
        code, out = run_main(capsys, "verify", "--code", "phase3", "--degree", "3",
                             "--burst", "3", "--kind", "phase",
                             "--method", "statevector", "--output", "json")
        assert code == 0
        report = json.loads(out)
        assert report["verdict"] == "pass"
        assert report["parameters"]["burst_count"] == 31
        assert len(report["items"]) == 31

    def test_statevector_fail_has_witness_burst(self, capsys):
        code, out = run_main(capsys, "verify", "--degree", "3", "--burst", "4",
                             "--method", "statevector", "--output", "json")
        assert code == 1
        report = json.loads(out)
        assert report["verdict"] == "fail"
        assert any(not item["passed"] for item in report["items"])

    def test_stabilizer_five(self, capsys):
        code, out = run_main(capsys, "verify", "--code", "five", "--degree", "2",
                             "--burst", "2", "--kind", "colocated",
                             "--method", "stabilizer", "--output", "json")
        assert code == 0
        report = json.loads(out)
        assert report["parameters"]["interleaved_code"] == "[[10,2]]"

    def test_stabilizer_fail_witness(self, capsys):
        code, out = run_main(capsys, "verify", "--code", "five", "--degree", "2",
                             "--burst", "3", "--kind", "colocated",
                             "--method", "stabilizer", "--output", "json")
        assert code == 1
        report = json.loads(out)
        assert report["verdict"] == "fail"
        assert "witness" in report["items"][0]

    def test_burst_clamped(self, capsys):
        code, out = run_main(capsys, "verify", "--degree", "1", "--burst", "4",
                             "--method", "statevector", "--output", "json")
        report = json.loads(out)
        assert report["parameters"]["burst_requested"] == 4
        assert report["parameters"]["burst_effective"] == 3

    def test_default_burst_is_ability(self, capsys):
        code, out = run_main(capsys, "verify", "--degree", "2", "--output", "json")
        report = json.loads(out)
        assert report["parameters"]["burst_effective"] == 2
        assert code == 0

    def test_unknown_code_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--code", "nosuch"])
        assert exc.value.code == 2

    def test_statevector_size_guard(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--code", "five", "--degree", "6",
                  "--method", "statevector"])
        assert exc.value.code == 2

    def test_methods_agree_on_shared_configs(self):
        # spot check here; the full sweep lives in the acceptance suite
        for m, l in ((1, 2), (2, 2), (2, 3)):
            sv = run_verify("phase3", m, burst=l, kind="phase", method="statevector")
            st = run_verify("phase3", m, burst=l, kind="phase", method="stabilizer")
            assert sv.verdict == st.verdict

    def test_statevector_five_single_errors(self):
        report = run_verify("five", 1, burst=1, kind="colocated",
                            method="statevector")
        assert report.verdict == "pass"
        assert len(report.items) == 15

    def test_statevector_uncorrectable_kind_reports_fail(self):
        # the five-qubit code cannot correct independent-kind bursts even at
        # l = 1, so the block decoder cannot be built
        report = run_verify("five", 2, burst=1, kind="independent",
                            method="statevector")
        assert report.verdict == "fail"
        assert "reason" in report.items[0]


class TestSynthCommand:
    def test_5x5(self, capsys):
        code, out = run_main(capsys, "synth", "5", "5")
        assert code == 0
        assert "qubits 25" in out
        assert "cnot count equals 3n(n-1)/2 = 30" in out

    def test_1x1_empty(self, capsys):
        code, out = run_main(capsys, "synth", "1", "1")
        assert code == 0
        assert out.startswith("qubits 1\ncommand:")

    def test_2x3_verified_against_permutation(self, capsys):
        code, out = run_main(capsys, "synth", "2", "3")
        assert code == 0
        circuit_text, _, report_text = out.partition("command")
        circuit = parse_plain(circuit_text)
        assert circuit.cnot_count() <= 15
        perm = interleave_permutation(2, 3)
        assert np.array_equal(circuit_label_action(circuit),
                              permutation_label_action(perm))

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "circuit.txt"
        code, out = run_main(capsys, "synth", "3", "3", "--output", str(target))
        assert code == 0
        assert parse_plain(target.read_text()) == parse_plain(
            "qubits 9\nSWAP 1 3\nSWAP 2 6\nSWAP 5 7\n")
        assert out.startswith("command:")

    def test_expand_swaps(self, capsys):
        code, out = run_main(capsys, "synth", "2", "2", "--expand-swaps")
        assert "CNOT 1 2" in out and "SWAP" not in out.split("command")[0]

    def test_zero_size_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["synth", "0", "3"])
        assert exc.value.code == 2


class TestEnumerateCommand:
    def test_counts(self, capsys):
        code, out = run_main(capsys, "enumerate", "9", "--burst", "3",
                             "--kind", "phase", "--output", "json")
        assert code == 0
        report = json.loads(out)
        assert report["parameters"]["count"] == 31
        assert len(report["items"]) == 31

    def test_text_mode(self, capsys):
        code, out = run_main(capsys, "enumerate", "3", "--burst", "1",
                             "--kind", "colocated")
        assert code == 0
        assert out.count("[pass]") == 9

    def test_usage_errors(self):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "0", "--burst", "1"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "5", "--burst", "2", "--kind", "odd"])
        assert exc.value.code == 2


class TestReports:
    def test_json_reports_validate_against_schema(self, capsys):
        schema = report_schema()
        reports = [
            run_demo(),
            run_verify("phase3", 2, burst=2, method="statevector"),
            run_verify("five", 2, burst=2, kind="colocated", method="stabilizer"),
            run_synth(4, 4)[1],
            run_enumerate(6, 2, "bit"),
        ]
        for report in reports:
            jsonschema.validate(json.loads(report.to_json()), schema)

    def test_text_and_json_verdicts_match(self):
        for report in (run_demo(),
                       run_verify("phase3", 3, burst=4, method="stabilizer")):
            text_verdict = [ln for ln in report.to_text().splitlines()
                            if ln.startswith("verdict:")][0].split()[1]
            assert json.loads(report.to_json())["verdict"] == text_verdict

    def test_verdict_rule(self):
        report = run_verify("phase3", 3, burst=4, method="statevector")
        assert report.verdict == "fail"
        assert any(not item["passed"] for item in report.items)
        report2 = run_verify("phase3", 3, burst=3, method="statevector")
        assert report2.verdict == "pass"
        assert all(item["passed"] for item in report2.items)

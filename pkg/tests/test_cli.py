import io
import json

import pytest

from iwasawa2.cli import (
    EXIT_INVALID,
    EXIT_OK,
    EXIT_UNSTABLE,
    main,
    parse_presentation,
)


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def run_json(argv):
    code, text = run(argv)
    return code, json.loads(text)


class TestLambdaCommand:
    def test_formula(self):
        code, doc = run_json(["lambda", "--d", "21"])
        assert code == EXIT_OK
        assert doc["schema"] == 1
        assert doc["result"]["formula"]["lambda"] == 2
        assert doc["result"]["formula"]["breakdown"] == [[3, 1], [7, 2]]
        assert "mu = 0" in doc["assumptions"]

    def test_both_agree(self):
        code, doc = run_json(["lambda", "--d", "7", "--method", "both"])
        assert code == EXIT_OK
        assert doc["result"]["verdict"] == "agree"
        assert doc["result"]["oracle"]["lambda"] == 1

    def test_invalid_d(self):
        code, _ = run(["lambda", "--d", "4"])
        assert code == EXIT_INVALID

    def test_oracle_needs_base2(self):
        code, _ = run(["lambda", "--d", "7", "--base-prime", "3",
                       "--method", "oracle"])
        assert code == EXIT_INVALID

    def test_fermat_base_formula(self):
        code, doc = run_json(["lambda", "--d", "7", "--base-prime", "3"])
        assert code == EXIT_OK
        assert doc["result"]["formula"]["method"] == "main_theorem"


class TestSplittingCommand:
    def test_json_table(self):
        code, doc = run_json(["splitting", "--q", "7", "--levels", "6"])
        assert code == EXIT_OK
        gs = [row["g"] for row in doc["result"]["table"]]
        assert gs == [1, 2, 2, 2, 2, 2, 2]
        assert doc["result"]["stable_count"] == 2

    def test_q17_stable_count(self):
        code, doc = run_json(["splitting", "--q", "17", "--levels", "8"])
        assert doc["result"]["stable_count"] == 4

    def test_csv(self):
        code, text = run(["splitting", "--q", "7", "--levels", "2",
                          "--format", "csv"])
        assert code == EXIT_OK
        assert text.splitlines()[0] == "n,g,f,e,degree"
        assert text.splitlines()[-1] == "# stable_count,2"

    def test_q2_invalid(self):
        code, _ = run(["splitting", "--q", "2"])
        assert code == EXIT_INVALID


class TestCohomologyCommand:
    def test_builtin_regular(self):
        code, doc = run_json(["cohomology", "--builtin", "regular", "--p", "3"])
        assert code == EXIT_OK
        res = doc["result"]
        assert res["h1_invariants"] == [] and res["h2_invariants"] == []
        assert res["chi"] == 0

    def test_builtin_trivial(self):
        code, doc = run_json(["cohomology", "--builtin", "trivial", "--p", "2"])
        assert doc["result"]["chi"] == 1

    def test_presentation_file(self, tmp_path):
        path = tmp_path / "mod.txt"
        path.write_text(
            "# Z/4 with negation action under G = Z/2\n"
            "p: 2\n"
            "order: 2\n"
            "action:\n"
            "-1\n"
            "relations:\n"
            "4\n")
        code, doc = run_json(["cohomology", "--file", str(path)])
        assert code == EXIT_OK
        assert doc["result"]["h1_invariants"] == [2]
        assert doc["result"]["h2_invariants"] == [2]

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("p: 2\naction:\n1 0\n")
        code, _ = run(["cohomology", "--file", str(path)])
        assert code == EXIT_INVALID

    def test_missing_file(self):
        code, _ = run(["cohomology", "--file", "/nonexistent/mod.txt"])
        assert code == EXIT_INVALID


class TestFormulaCommands:
    def test_rh(self):
        code, doc = run_json(["rh", "--p", "2", "--lambda-k", "0",
                              "--chi", "1", "--ram", "2,2,2"])
        assert code == EXIT_OK
        assert doc["result"]["lambda_l"] == 2

    def test_kida(self):
        code, doc = run_json(["kida", "--delta", "0", "--tau", "0",
                              "--dim2", "2", "--s", "3"])
        assert doc["result"]["lambda_minus"] == 4

    def test_decompose(self):
        code, doc = run_json(["decompose", "--p", "2", "--lambda-k", "0",
                              "--chi", "1", "--s", "3"])
        assert doc["result"]["family"] == [{"a": 0, "b": 0, "c": 2}]
        assert doc["result"]["lambda_l"] == 2

    def test_fit(self):
        code, doc = run_json(["fit", "--p", "2", "--seq", "1,2,4,8,16"])
        assert (doc["result"]["lambda"], doc["result"]["mu"],
                doc["result"]["nu"]) == (0, 1, 0)

    def test_fit_refusal(self):
        code, _ = run(["fit", "--p", "2", "--seq", "0,5,3,2,1"])
        assert code == EXIT_INVALID

    def test_hminus_csv(self):
        code, text = run(["hminus", "--d", "7", "--levels", "1",
                          "--format", "csv"])
        assert code == EXIT_OK
        lines = text.splitlines()
        assert lines[0].startswith("n,h_minus,ord2")
        assert lines[1].startswith("0,1,0")


class TestEnvelope:
    def test_round_trip_byte_identical(self):
        for argv in (["lambda", "--d", "21", "--method", "both"],
                     ["splitting", "--q", "7"],
                     ["cohomology", "--builtin", "augmentation", "--p", "5"],
                     ["decompose", "--p", "2", "--lambda-k", "1",
                      "--chi", "0", "--s", "2"]):
            _, first = run(argv)
            _, second = run(argv)
            assert first == second
            doc = json.loads(first)
            assert doc["schema"] == 1
            assert isinstance(doc["assumptions"], list)

    def test_exit_codes_limited(self):
        cases = [
            (["lambda", "--d", "7"], 0),
            (["lambda", "--d", "4"], 2),
            (["splitting", "--q", "2"], 2),
            (["fit", "--p", "2", "--seq", "0,5,3,2,1"], 2),
        ]
        for argv, expected in cases:
            code, _ = run(argv)
            assert code == expected


def test_parse_presentation_free_module():
    module = parse_presentation("p: 3\norder: 3\naction:\n0 0 1\n1 0 0\n0 1 0\n")
    from iwasawa2.cohomology import cohomology
    assert cohomology(module).chi == 0

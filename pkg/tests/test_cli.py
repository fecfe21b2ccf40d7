import json

import pytest

from adjfx.cli import main
from adjfx.suites import SuiteConfig, ConfigError, run_suite


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestLawcheck:
    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "lawcheck", "--suite", "error", "--output", "json")
        assert code == 0 and out.endswith("\n")
        doc = json.loads(out)
        assert set(doc) == {"suite", "seed", "checks", "passed"}
        assert doc["suite"] == "error" and doc["seed"] == 42 and doc["passed"] is True
        for c in doc["checks"]:
            assert set(c) == {"name", "paper_anchor", "cases", "counterexamples"}
            assert c["cases"] > 0 and c["counterexamples"] == []
        assert len({c["name"] for c in doc["checks"]}) == len(doc["checks"])

    def test_byte_stable(self, capsys):
        argv = ("lawcheck", "--suite", "reader", "--output", "json", "--seed", "7")
        assert run(capsys, *argv)[1] == run(capsys, *argv)[1]

    def test_seed_changes_sampled_output(self, capsys):
        a = run(capsys, "lawcheck", "--suite", "core", "--output", "json", "--seed", "1")[1]
        b = run(capsys, "lawcheck", "--suite", "core", "--output", "json", "--seed", "2")[1]
        assert json.loads(a)["seed"] == 1 and a != b

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "lawcheck", "--suite", "error")
        assert code == 0 and "[PASS]" in out and "error: passed" in out

    def test_base_monad_filter(self, capsys):
        code, out, _ = run(capsys, "lawcheck", "--suite", "writer", "--base-monads",
                           "option", "--output", "json")
        names = [c["name"] for c in json.loads(out)["checks"]]
        assert code == 0 and names
        for other in ("Identity", "List", "Writer(Bool"):
            assert not any(other in n for n in names)
        assert all("writer" in n or "Writer" in n or "action" in n or "Option" in n
                   for n in names)

    @pytest.mark.parametrize("argv", [
        ("--suite", "nosuch"), ("--seed", "0"), ("--seed", "x"), ("--sample-cap", "-3"),
        ("--base-monads", "state"), ("--base-monads", ","), ("--inject-fault", "nope"),
    ])
    def test_usage_errors(self, capsys, argv):
        code, _, err = run(capsys, "lawcheck", *argv)
        assert code == 2 and "usage" in err

    def test_fault_fails_with_one(self, capsys):
        code, out, _ = run(capsys, "lawcheck", "--suite", "error",
                           "--inject-fault", "corrupted-counit", "--output", "json")
        doc = json.loads(out)
        assert code == 1 and doc["passed"] is False
        failing = [c["name"] for c in doc["checks"] if c["counterexamples"]]
        assert failing and all("counit-unit" in n for n in failing)

    def test_config_validation(self):
        with pytest.raises(ConfigError):
            SuiteConfig(suite="bogus")
        with pytest.raises(ConfigError):
            SuiteConfig(sample_cap=0)
        report, status = run_suite(SuiteConfig(suite="error", base_monads=("identity",)))
        assert status == 0 and report.passed


class TestDemo:
    @pytest.fixture
    def program(self, tmp_path):
        def write(src):
            p = tmp_path / "prog.fx"
            p.write_text(src, encoding="utf-8")
            return str(p)
        return write

    def test_text(self, capsys, program):
        code, out, _ = run(capsys, "demo", "--program", program("let _ = log(get) in put(5)"),
                           "--init-state", "7")
        assert code == 0
        assert out.splitlines() == ["value: 5", "log: [7]", "final state: 5"]

    def test_json(self, capsys, program):
        code, out, _ = run(capsys, "demo", "--program", program("ask a / 0"),
                           "--env", "a=3", "--output", "json")
        assert code == 0 and out.endswith("\n")
        assert json.loads(out) == {"value": None, "error": "division by zero",
                                   "log": [], "final_state": 0}

    def test_stacks_agree(self, capsys, program):
        path = program("let x = ask a in let _ = log(x) in put(get + x)")
        outs = {run(capsys, "demo", "--program", path, "--env", "a=5", "--init-state", "1",
                    "--output", "json", "--stack", kind)[1] for kind in ("derived", "oracle")}
        assert len(outs) == 1

    def test_syntax_error(self, capsys, program):
        code, _, err = run(capsys, "demo", "--program", program("put("))
        assert code == 2 and "offset 4" in err

    def test_bad_env(self, capsys, program):
        code, _, err = run(capsys, "demo", "--program", program("1"), "--env", "a")
        assert code == 2 and "NAME=INT" in err

    def test_missing_program(self, capsys, tmp_path):
        code, _, err = run(capsys, "demo", "--program", str(tmp_path / "none.fx"))
        assert code == 2 and "cannot read" in err

"""One test per acceptance criterion, with its time budget."""

import json
import subprocess
import sys
import time
from pathlib import Path

import pytest

from adjfx.adjunction import check_triangle_identities, identity_lifting, induced_monad
from adjfx.cli import main
from adjfx.finite import BOOL, UNIT, Z2, Z3, Sampling
from adjfx.faults import swapped_strength
from adjfx.instances.reader import check_reader_category, make_reader_adjunction
from adjfx.instances.writer import (
    WriterAdjunction, check_action_laws, check_distributive_law, check_lifted_equivariance,
)
from adjfx.laws import check_functor_laws, check_monad_laws, check_strength_laws
from adjfx.monads import LIST3, OPTION, Z4_ADD, canonical_strength
from adjfx.oracles import check_agreement
from adjfx.suites import SuiteConfig, instances, lifting, oracle_for, translation_pairs
from adjfx.translation import CELL_NAMES, EXTERIOR_NAMES, check_translation_diagrams, translate

SAMPLING = Sampling(seed=42, sample_size=64)
CORPUS = json.loads((Path(__file__).parent / "data" / "demo_corpus.json").read_text())


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s"


def assert_clean(report):
    assert report.passed, report.summary()


def test_criterion_1_triangle_identities():
    with Budget(10):
        adjs = instances(SAMPLING)
        assert {a.name.split("(")[0] for a in adjs} == {"state", "writer", "reader", "error"}
        for adj in adjs:
            r = check_triangle_identities(adj, (UNIT, BOOL, Z3), SAMPLING)
            assert_clean(r)
            assert all(c.cases > 0 for c in r.checks)


def test_criterion_2_translated_monads_and_diagram_cells():
    with Budget(60):
        seen = set()
        for adj, m, tbar in translation_pairs(SuiteConfig()):
            seen.add((adj.name, m.name))
            p = translate(adj, tbar)
            assert_clean(check_functor_laws(p, (UNIT, BOOL), SAMPLING))
            assert_clean(check_monad_laws(p, (UNIT, BOOL), SAMPLING))
            cells = check_translation_diagrams(adj, tbar, (UNIT, BOOL), SAMPLING)
            assert cells.names == list(CELL_NAMES) + list(EXTERIOR_NAMES)
            for name in cells.names:
                assert cells[name].passed, f"{adj.name}/{m.name}: {name}"
        assert len(seen) == 5 * 4


def test_criterion_3_differential_equivalence():
    with Budget(60):
        count = 0
        for adj, m, tbar in translation_pairs(SuiteConfig()):
            universe = (UNIT, BOOL, Z3) if isinstance(adj, WriterAdjunction) else (UNIT, BOOL)
            r = check_agreement(translate(adj, tbar), oracle_for(adj, m), universe, SAMPLING)
            assert_clean(r)
            assert all(c.cases > 0 for c in r.checks)
            count += 1
        assert count == 20


def test_criterion_4_strength_suite():
    with Budget(10):
        for m in (OPTION, LIST3):
            good = check_strength_laws(m, canonical_strength(m), (UNIT, BOOL), SAMPLING)
            assert_clean(good)
            assert len(good.checks) == 6
            bad = swapped_strength(m)
            cases = [(canonical_strength(m), True), (bad, False)]
            for strength, expected in cases:
                sl = check_strength_laws(m, strength, (UNIT, BOOL), SAMPLING)
                dl = check_distributive_law(m, strength, Z4_ADD, (UNIT, BOOL), SAMPLING)
                assert sl.passed == dl.passed == expected


def test_criterion_5_writer_structure():
    with Budget(10):
        pairs = 0
        for adj in instances(SAMPLING):
            if not isinstance(adj, WriterAdjunction):
                continue
            for obj in adj.registry_objects():
                assert_clean(check_action_laws(obj, SAMPLING))
            for m in SuiteConfig().bases():
                tbar = lifting(adj, m)
                r = check_lifted_equivariance(tbar, adj.registry_objects(), SAMPLING)
                assert_clean(r)
                assert {"induced action identity", "induced action associativity",
                        "unit equivariance", "multiplication equivariance"} <= set(r.names)
                pairs += 1
        assert pairs == 2 * 4


def test_criterion_6_reader_category():
    from adjfx.adjunction import check_monad_on_d
    adj = make_reader_adjunction(Z2, sampling=SAMPLING)
    r = check_reader_category(adj, (BOOL,), SAMPLING)
    assert_clean(r)
    # Bool×Z2 → Bool has 16 elements: every triple, every morphism
    assert r["composition associativity"].cases == 16 ** 3
    assert r["left identity"].cases == r["right identity"].cases == 16
    for m in SuiteConfig().bases():
        d = check_monad_on_d(lifting(adj, m), adj.sample_objects((UNIT, BOOL)), SAMPLING)
        assert d["lifted functor preserves identities"].passed
        assert d["lifted functor preserves composition"].passed


FAULT_LAWS = {
    "broken-mult": {"left identity", "associativity"},
    "corrupted-strength": {"multiplication", "compatibility with the multiplication of T"},
    "corrupted-counit": {"counit-unit (F side)", "counit-unit (U side)"},
}


@pytest.mark.parametrize("fault", list(FAULT_LAWS))
def test_criterion_7_negative_controls(fault, capsys):
    code = main(["lawcheck", "--suite", "core", "--base-monads", "identity",
                 "--inject-fault", fault, "--output", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 1 and doc["passed"] is False
    failing = {c["name"].split(": ", 1)[1] for c in doc["checks"] if c["counterexamples"]}
    assert FAULT_LAWS[fault] <= failing
    # the fixture must be the only thing failing
    assert all(c["name"].startswith(("monad:List", "diagrams:", "strength:",
                                     "distributive:", "triangle:", "adjunction:"))
               for c in doc["checks"] if c["counterexamples"])


def test_criterion_8_identity_recovers_the_induced_monad():
    for adj in instances(SAMPLING):
        r = check_agreement(translate(adj, identity_lifting(adj)), induced_monad(adj),
                            (UNIT, BOOL, Z3), SAMPLING)
        assert_clean(r)


def _fx(*argv):
    return subprocess.run([sys.executable, "-m", "adjfx.cli", *argv],
                          capture_output=True, check=False)


def test_criterion_9_demo_corpus_and_stable_report(tmp_path, capsys):
    assert len(CORPUS) >= 20
    for i, case in enumerate(CORPUS):
        path = tmp_path / f"p{i}.fx"
        path.write_text(case["source"], encoding="utf-8")
        argv = ["demo", "--program", str(path), "--init-state", str(case["init_state"]),
                "--output", "json"]
        for k, v in case["env"].items():
            argv += ["--env", f"{k}={v}"]
        outs = []
        for kind in ("derived", "oracle"):
            assert main(argv + ["--stack", kind]) == 0
            outs.append(capsys.readouterr().out)
        assert outs[0] == outs[1], case["source"]
        assert json.loads(outs[0]) == case["expected"]

    first = _fx("lawcheck", "--suite", "all", "--seed", "42", "--output", "json")
    second = _fx("lawcheck", "--suite", "all", "--seed", "42", "--output", "json")
    assert first.returncode == second.returncode == 0, first.stderr.decode()
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"\n") and json.loads(first.stdout)["passed"] is True

"""Named law suites and their serialisation.

A suite run is a flat :class:`~adjfx.laws.LawReport` whose check names carry
the sub-report they came from, e.g.
``diagrams:state(Z2)/Option: associativity diagram: associativity square``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable

from .adjunction import (
    check_adjunction_laws, check_monad_on_d, check_triangle_identities,
    identity_lifting, induced_monad,
)
from .faults import CorruptedCounitState, broken_list_mult, swapped_strength
from .finite import BOOL, UNIT, Z2, Z3, Sampling
from .instances.error import (
    ErrorAdjunction, check_lifted_pointedness, lift_monad_to_coslice, make_error_adjunction,
)
from .instances.reader import (
    ReaderAdjunction, check_reader_category, kleisli_spot_check, lift_monad_to_reader,
    make_reader_adjunction,
)
from .instances.state import lift_monad_trivially, make_state_adjunction
from .instances.writer import (
    WriterAdjunction, check_action_laws, check_distributive_law, check_lifted_equivariance,
    lift_monad_to_mset, make_writer_adjunction,
)
from .laws import (
    LawReport, check_functor_laws, check_monad_laws, check_monoid_laws,
    check_strength_laws,
)
from .monads import (
    BASE_MONADS, BOOL_AND, LIST3, OPTION, Z4_ADD, MonadDescriptor,
    canonical_strength,
)
from .oracles import (
    check_agreement, oracle_error, oracle_reader, oracle_state, oracle_writer,
)
from .translation import check_translation_diagrams, translate

__all__ = [
    "SUITES", "FAULTS", "SuiteConfig", "ConfigError", "run_suite",
    "report_json", "report_text", "instances", "translation_pairs",
]

SUITES = ("core", "adjunction", "translation", "state", "writer", "reader",
          "error", "all")
FAULTS = ("broken-mult", "corrupted-strength", "corrupted-counit")

# X ranges over these in the triangle checks, and over the smaller one
# wherever translated monads (with their nested tables) are involved.
TRIANGLE_UNIVERSE = (UNIT, BOOL, Z3)
UNIVERSE = (UNIT, BOOL)
WRITER_UNIVERSE = (UNIT, BOOL, Z3)
MONOIDS = (Z4_ADD, BOOL_AND)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    base_monads: tuple[str, ...] = tuple(BASE_MONADS)
    seed: int = 42
    sample_cap: int = 64
    output: str = "text"
    fault: str | None = None

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; "
                              f"choose from {', '.join(SUITES)}")
        unknown = [b for b in self.base_monads if b not in BASE_MONADS]
        if unknown or not self.base_monads:
            raise ConfigError(f"unknown base monads {unknown}; "
                              f"choose from {', '.join(BASE_MONADS)}")
        if self.seed < 1 or self.sample_cap < 1:
            raise ConfigError("seed and sample cap must be positive")
        if self.output not in ("text", "json"):
            raise ConfigError(f"unknown output format {self.output!r}")
        if self.fault is not None and self.fault not in FAULTS:
            raise ConfigError(f"unknown fault {self.fault!r}")

    @property
    def sampling(self) -> Sampling:
        return Sampling(seed=self.seed, sample_size=self.sample_cap)

    def bases(self) -> list[MonadDescriptor]:
        return [BASE_MONADS[k] for k in BASE_MONADS if k in self.base_monads]


def instances(sampling: Sampling) -> list:
    """The registered adjunctions: S = Z2, both monoids, E = Z2."""
    return [
        make_state_adjunction(Z2, sampling=sampling),
        *(make_writer_adjunction(mon, sampling=sampling) for mon in MONOIDS),
        make_reader_adjunction(Z2, sampling=sampling),
        make_error_adjunction(Z2, sampling=sampling),
    ]


def lifting(adj, m: MonadDescriptor, verify: bool = False):
    """The registered way to lift ``m`` onto ``adj``'s category."""
    if isinstance(adj, WriterAdjunction):
        return lift_monad_to_mset(m, canonical_strength(m), adj, verify=verify)
    if isinstance(adj, ReaderAdjunction):
        return lift_monad_to_reader(m, canonical_strength(m), adj)
    if isinstance(adj, ErrorAdjunction):
        return lift_monad_to_coslice(m, adj, verify=verify)
    return lift_monad_trivially(m, adj)


def oracle_for(adj, m: MonadDescriptor) -> MonadDescriptor:
    if isinstance(adj, WriterAdjunction):
        return oracle_writer(m, adj.monoid)
    if isinstance(adj, ReaderAdjunction):
        return oracle_reader(m, adj.env_type)
    if isinstance(adj, ErrorAdjunction):
        return oracle_error(m, adj.error_type)
    return oracle_state(m, adj.state_type)


def translation_pairs(cfg: SuiteConfig, kind: str | None = None):
    """``(adjunction, lifted monad)`` for each selected base and instance."""
    for adj in instances(cfg.sampling):
        if kind is not None and not adj.name.startswith(kind):
            continue
        for m in cfg.bases():
            yield adj, m, lifting(adj, m)


def _collect(name: str, reports: Iterable[LawReport]) -> LawReport:
    out = LawReport(name)
    for r in reports:
        out.extend(r, prefix=f"{r.suite}: ")
    return out


def core_suite(cfg: SuiteConfig) -> Iterable[LawReport]:
    s = cfg.sampling
    for m in cfg.bases():
        yield check_functor_laws(m, TRIANGLE_UNIVERSE, s)
        yield check_monad_laws(m, UNIVERSE, s)
        yield check_strength_laws(m, canonical_strength(m), UNIVERSE, s)
    for mon in MONOIDS:
        yield check_monoid_laws(mon, s)


def adjunction_suite(cfg: SuiteConfig) -> Iterable[LawReport]:
    s = cfg.sampling
    for adj in instances(s):
        yield check_triangle_identities(adj, TRIANGLE_UNIVERSE, s)
        yield check_adjunction_laws(adj, TRIANGLE_UNIVERSE, s)
        induced = induced_monad(adj)
        yield check_monad_laws(induced, UNIVERSE, s)
        recovered = translate(adj, identity_lifting(adj))
        yield check_agreement(recovered, induced, UNIVERSE, s)


def translation_suite(cfg: SuiteConfig) -> Iterable[LawReport]:
    s = cfg.sampling
    for adj, m, tbar in translation_pairs(cfg):
        p = translate(adj, tbar)
        yield check_functor_laws(p, UNIVERSE, s)
        yield check_monad_laws(p, UNIVERSE, s)
        yield check_translation_diagrams(adj, tbar, UNIVERSE, s)


def instance_suite(kind: str) -> Callable[[SuiteConfig], Iterable[LawReport]]:
    def run(cfg: SuiteConfig) -> Iterable[LawReport]:
        s = cfg.sampling
        for adj, m, tbar in translation_pairs(cfg, kind):
            universe = WRITER_UNIVERSE if kind == "writer" else UNIVERSE
            oracle = oracle_for(adj, m)
            yield check_monad_laws(oracle, UNIVERSE, s)
            yield check_agreement(translate(adj, tbar), oracle, universe, s)
            probes = adj.sample_objects(UNIVERSE)
            if kind == "writer":
                yield check_lifted_equivariance(tbar, probes, s)
                yield check_distributive_law(m, canonical_strength(m), adj.monoid,
                                             UNIVERSE, s)
            elif kind == "reader":
                yield check_monad_on_d(tbar, probes, s)
            elif kind == "error":
                yield check_lifted_pointedness(tbar, probes)
        if kind == "writer":
            for adj in instances(s):
                if adj.name.startswith("writer"):
                    for obj in adj.registry_objects():
                        yield check_action_laws(obj, s)
        if kind == "reader":
            adj = make_reader_adjunction(Z2, sampling=s)
            yield check_reader_category(adj, (BOOL,), s)
            yield kleisli_spot_check(adj, sampling=s)
    return run


SUITE_RUNNERS: dict[str, Callable[[SuiteConfig], Iterable[LawReport]]] = {
    "core": core_suite,
    "adjunction": adjunction_suite,
    "translation": translation_suite,
    **{k: instance_suite(k) for k in ("state", "writer", "reader", "error")},
}


def fault_reports(fault: str, cfg: SuiteConfig) -> Iterable[LawReport]:
    s = cfg.sampling
    if fault == "broken-mult":
        broken = broken_list_mult()
        adj = make_state_adjunction(Z2, sampling=s)
        yield check_monad_laws(broken, UNIVERSE, s)
        yield check_translation_diagrams(adj, lift_monad_trivially(broken, adj),
                                         (UNIT,), s)
    elif fault == "corrupted-strength":
        for m in (OPTION, LIST3):
            bad = swapped_strength(m)
            yield check_strength_laws(m, bad, UNIVERSE, s)
            yield check_distributive_law(m, bad, Z4_ADD, UNIVERSE, s)
    elif fault == "corrupted-counit":
        yield check_triangle_identities(CorruptedCounitState(Z2, sampling=s),
                                        TRIANGLE_UNIVERSE, s)


def run_suite(cfg: SuiteConfig) -> tuple[LawReport, int]:
    """Run the configured suites; exit status 0 iff every check passed."""
    names = SUITES[:-1] if cfg.suite == "all" else (cfg.suite,)
    reports: list[LawReport] = []
    for name in names:
        reports.extend(SUITE_RUNNERS[name](cfg))
    if cfg.fault is not None:
        reports.extend(fault_reports(cfg.fault, cfg))
    report = _collect(cfg.suite, reports)
    return report, 0 if report.passed else 1


def report_json(report: LawReport, cfg: SuiteConfig) -> str:
    doc = {
        "suite": cfg.suite,
        "seed": cfg.seed,
        "checks": [
            {"name": c.name, "paper_anchor": c.anchor, "cases": c.cases,
             "counterexamples": list(c.counterexamples)}
            for c in report.checks
        ],
        "passed": report.passed,
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def report_text(report: LawReport, cfg: SuiteConfig) -> str:
    return report.summary() + "\n"

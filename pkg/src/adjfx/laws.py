"""Law reports and the pointwise law-checking harness."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .finite import (
    DEFAULT_SAMPLING, STAR, UNIT, FiniteFunction, FiniteType, Sampling,
    extensional_equal, identity, product,
)
from .monads import Monoid, MonadDescriptor, Strength

__all__ = [
    "Check", "LawReport", "law", "same", "MAX_COUNTEREXAMPLES",
    "check_functor_laws", "check_monad_laws", "check_strength_laws",
    "check_monoid_laws", "function_pairs",
]

MAX_COUNTEREXAMPLES = 5
_DESCRIPTION_LIMIT = 240


@dataclass
class Check:
    name: str
    cases: int
    counterexamples: list[str] = field(default_factory=list)
    anchor: str = ""

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.counterexamples


@dataclass
class LawReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    @property
    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def extend(self, other: "LawReport", prefix: str = "") -> "LawReport":
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.cases,
                                     list(c.counterexamples), c.anchor))
        return self

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name} ({c.cases} cases)")
            lines.extend(f"       counterexample: {ce}" for ce in c.counterexamples)
        verdict = "passed" if self.passed else "FAILED"
        lines.append(f"{self.suite}: {verdict}, {len(self.checks)} checks, "
                     f"{len(self.failing())} failing")
        return "\n".join(lines)


def _describe(case: Sequence[Any]) -> str:
    return ", ".join(repr(c) for c in case)


def same(a: Any, b: Any) -> bool:
    return extensional_equal(a, b)


def law(name: str, cases: Iterable[Sequence[Any]],
        holds: Callable[..., bool], anchor: str = "",
        describe: Callable[..., str] | None = None) -> Check:
    """Evaluate ``holds(*case)`` for every case and keep the failures.

    An exception raised while evaluating a case counts as a failure of that
    case; a checker reports and carries on.
    """
    count = 0
    bad: list[str] = []
    for case in cases:
        count += 1
        try:
            ok = holds(*case)
            note = ""
        except Exception as exc:  # noqa: BLE001
            ok = False
            note = f" (raised {type(exc).__name__}: {exc})"
        if not ok and len(bad) < MAX_COUNTEREXAMPLES:
            text = describe(*case) if describe else _describe(case)
            if len(text) > _DESCRIPTION_LIMIT:
                text = text[:_DESCRIPTION_LIMIT - 3] + "..."
            bad.append(text + note)
    return Check(name, count, bad, anchor)


def function_pairs(sampling: Sampling, x: FiniteType, y: FiniteType,
                   z: FiniteType, limit: int = 16) -> list[tuple]:
    """Composable pairs ``(f : x→y, g : y→z)``, at most ``limit`` of them."""
    pairs = list(itertools.product(sampling.functions(x, y),
                                   sampling.functions(y, z)))
    return sampling.subset(pairs, limit, x, y, z)


def check_functor_laws(m: MonadDescriptor, universe: Sequence[FiniteType],
                       sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    def identity_cases():
        for x in universe:
            idx = identity(x)
            for v in sampling.values(m.lift_type(x), "functor-id"):
                yield (x, v, idx)

    def composition_cases():
        for x, y, z in itertools.product(universe, repeat=3):
            pairs = function_pairs(sampling, x, y, z)
            vals = sampling.values(m.lift_type(x), "functor-comp",
                                   weight=len(pairs))
            for f, g in pairs:
                for v in vals:
                    yield (v, f, g)

    def composes(v, f, g):
        gf = FiniteFunction.lazy(f.domain, g.codomain, lambda a: g(f(a)))
        return same(m.map(gf, v), m.map(g, m.map(f, v)))

    return LawReport(f"functor:{m.name}", [
        law("identity", identity_cases(),
            lambda x, v, idx: same(m.map(idx, v), v), "T(id) = id"),
        law("composition", composition_cases(), composes,
            "T(g∘f) = T(g)∘T(f)"),
    ])


def check_monad_laws(m: MonadDescriptor, universe: Sequence[FiniteType],
                     sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    def over(level: int, salt: str):
        for x in universe:
            t = x
            for _ in range(level):
                t = m.lift_type(t)
            for v in sampling.values(t, salt):
                yield (x, v)

    def left_identity(x, c):
        return same(m.mult(x, m.unit(m.lift_type(x), c)), c)

    def right_identity(x, c):
        return same(m.mult(x, m.map(m.unit_at(x), c)), c)

    def associativity(x, ccc):
        tx = m.lift_type(x)
        lhs = m.mult(x, m.mult(tx, ccc))
        rhs = m.mult(x, m.map(m.mult_at(x), ccc))
        return same(lhs, rhs)

    def natural_cases(level: int, salt: str):
        for x, y in itertools.product(universe, repeat=2):
            fs = sampling.subset(sampling.functions(x, y), 8, salt, x, y)
            t = x
            for _ in range(level):
                t = m.lift_type(t)
            vals = sampling.values(t, salt, weight=len(fs))
            for f in fs:
                for v in vals:
                    yield (f, v)

    def unit_natural(f, a):
        return same(m.map(f, m.unit(f.domain, a)), m.unit(f.codomain, f(a)))

    def mult_natural(f, cc):
        lhs = m.map(f, m.mult(f.domain, cc))
        rhs = m.mult(f.codomain, m.map(m.fmap(f), cc))
        return same(lhs, rhs)

    return LawReport(f"monad:{m.name}", [
        law("left identity", over(1, "left"), left_identity, "m∘e_T = id"),
        law("right identity", over(1, "right"), right_identity, "m∘T(e) = id"),
        law("associativity", over(3, "assoc"), associativity,
            "m∘m_T = m∘T(m)"),
        law("unit naturality", natural_cases(0, "e-nat"), unit_natural,
            "T(f)∘e = e∘f"),
        law("multiplication naturality", natural_cases(2, "m-nat"),
            mult_natural, "T(f)∘m = m∘TT(f)"),
    ])


def check_strength_laws(m: MonadDescriptor, t: Strength,
                        universe: Sequence[FiniteType],
                        sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    if t.owner is not m:
        raise ValueError(f"strength belongs to {t.owner.name}, not {m.name}")

    pairs = list(itertools.product(universe, repeat=2))

    def unit_cases():
        for x, y in pairs:
            for a in x:
                for b in y:
                    yield (x, y, a, b)

    def unit_law(x, y, a, b):
        return same(t.apply(x, y, m.unit(x, a), b), m.unit(product(x, y), (a, b)))

    def mult_cases():
        for x, y in pairs:
            for cc in sampling.values(m.lift_type(m.lift_type(x)), "s-mult",
                                      weight=y.size):
                for b in y:
                    yield (x, y, cc, b)

    def mult_law(x, y, cc, b):
        tx = m.lift_type(x)
        inner = FiniteFunction.lazy(product(tx, y), m.lift_type(product(x, y)),
                                    lambda p: t.apply(x, y, p[0], p[1]))
        rhs = m.mult(product(x, y), m.map(inner, t.apply(tx, y, cc, b)))
        return same(t.apply(x, y, m.mult(x, cc), b), rhs)

    def projection_cases():
        for x in universe:
            for c in sampling.values(m.lift_type(x), "s-proj"):
                yield (x, c)

    def projection_law(x, c):
        pr1 = FiniteFunction.lazy(product(x, UNIT), x, lambda p: p[0])
        return same(m.map(pr1, t.apply(x, UNIT, c, STAR)), c)

    def assoc_cases():
        for x, y, z in itertools.product(universe, repeat=3):
            for c in sampling.values(m.lift_type(x), "s-assoc",
                                     weight=y.size * z.size):
                for b in y:
                    for d in z:
                        yield (x, y, z, c, b, d)

    def assoc_law(x, y, z, c, b, d):
        xy = product(x, y)
        alpha = FiniteFunction.lazy(product(xy, z), product(x, product(y, z)),
                                    lambda p: (p[0][0], (p[0][1], p[1])))
        lhs = m.map(alpha, t.apply(xy, z, t.apply(x, y, c, b), d))
        return same(lhs, t.apply(x, product(y, z), c, (b, d)))

    def natural_cases(salt: str):
        for x, y in pairs:
            fs = sampling.subset(sampling.functions(x, y), 8, salt, x, y)
            for other in universe:
                vals = sampling.values(m.lift_type(x), salt,
                                       weight=len(fs) * other.size)
                for f in fs:
                    for c in vals:
                        for b in other:
                            yield (f, other, c, b)

    def natural_left(f, y, c, b):
        x, x2 = f.domain, f.codomain
        fxid = FiniteFunction.lazy(product(x, y), product(x2, y),
                                   lambda p: (f(p[0]), p[1]))
        lhs = t.apply(x2, y, m.map(f, c), b)
        return same(lhs, m.map(fxid, t.apply(x, y, c, b)))

    def natural_right_cases():
        for y, y2 in pairs:
            gs = sampling.subset(sampling.functions(y, y2), 8, "nat-y", y, y2)
            for x in universe:
                vals = sampling.values(m.lift_type(x), "nat-y",
                                       weight=len(gs) * y.size)
                for g in gs:
                    for c in vals:
                        for b in y:
                            yield (g, x, c, b)

    def natural_right(g, x, c, b):
        y, y2 = g.domain, g.codomain
        idxg = FiniteFunction.lazy(product(x, y), product(x, y2),
                                   lambda p: (p[0], g(p[1])))
        lhs = t.apply(x, y2, c, g(b))
        return same(lhs, m.map(idxg, t.apply(x, y, c, b)))

    return LawReport(f"strength:{m.name}/{t.name}", [
        law("unit", unit_cases(), unit_law, "t∘(e×id) = e"),
        law("multiplication", mult_cases(), mult_law, "t∘(m×id) = m∘T(t)∘t"),
        law("projection", projection_cases(), projection_law,
            "T(pr1)∘t_{X,1} = pr1"),
        law("associativity", assoc_cases(), assoc_law,
            "T(α)∘t∘(t×id) = t∘α"),
        law("naturality in X", natural_cases("nat-x"), natural_left,
            "t∘(T(f)×id) = T(f×id)∘t"),
        law("naturality in Y", natural_right_cases(), natural_right,
            "t∘(id×g) = T(id×g)∘t"),
    ])


def check_monoid_laws(mon: Monoid,
                      sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    carrier = sampling.values(mon.carrier, "monoid")
    op, one = mon.op, mon.unit_elem

    def triples():
        if mon.carrier.size ** 3 <= sampling.exhaustive_limit:
            yield from itertools.product(carrier, repeat=3)
            return
        rng = sampling.rng("monoid-assoc", mon.name)
        for _ in range(sampling.sample_size):
            yield tuple(rng.choice(carrier) for _ in range(3))

    return LawReport(f"monoid:{mon.name}", [
        law("left unit", ((a,) for a in carrier), lambda a: same(op(one, a), a)),
        law("right unit", ((a,) for a in carrier), lambda a: same(op(a, one), a)),
        law("associativity", triples(),
            lambda a, b, c: same(op(op(a, b), c), op(a, op(b, c)))),
    ])

"""M-sets, the free M-set adjunction, and the writer transformer.

An M-set is a carrier with a right action ``x^m`` of a monoid M.  The free
M-set on X is ``X×M`` acting by ``(x, m)^n = (x, m·n)``; the forgetful
functor drops the action, and the counit at ``(X, a)`` is ``a`` itself.

A strong monad T lifts to M-sets: ``T̄(X, a) = (TX, T(a) ∘ t_{X,M})``, with
``T̄(f) = T(f)`` and the unit and multiplication of T reused.  The lift is
only a monad on M-sets when those maps are equivariant, which depends on
the strength, so :func:`lift_monad_to_mset` checks that on probe objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from ..adjunction import AdjunctionInstance, DMorphism, DObject, MonadOnD, ShapeError
from ..finite import (
    BOOL, DEFAULT_SAMPLING, UNIT, Z2, FiniteFunction, FiniteType, Sampling,
    product,
)
from ..laws import LawReport, check_monoid_laws, law, same
from ..monads import Monoid, MonadDescriptor, Strength
from ..translation import shaped, translate

__all__ = [
    "MSet", "MonoidLawError", "EquivarianceError", "WriterAdjunction",
    "make_writer_adjunction", "mset", "check_action_laws", "induced_action",
    "lift_monad_to_mset", "check_lifted_equivariance",
    "check_distributive_law", "derived_writer_join", "equivariance_failures",
]


class MonoidLawError(ValueError):
    pass


class EquivarianceError(ValueError):
    """A lifted map fails to commute with the actions."""

    def __init__(self, report: LawReport):
        self.report = report
        bad = "; ".join(report.failing())
        super().__init__(f"lifting is not equivariant: {bad}")


@dataclass(frozen=True, eq=False)
class MSet:
    """The structure of an M-set object: its monoid and action ``X×M → X``."""

    monoid: Monoid
    action: FiniteFunction


def mset(carrier: FiniteType, monoid: Monoid,
         act: Callable[[Any, Any], Any]) -> DObject:
    action = FiniteFunction.tabulate(product(carrier, monoid.carrier), carrier,
                                     lambda p: act(p[0], p[1]))
    return DObject(carrier, MSet(monoid, action))


def equivariance_failures(f: FiniteFunction, source: DObject, target: DObject,
                          sampling: Sampling = DEFAULT_SAMPLING):
    """Points ``(x, m)`` with ``f(x^m) ≠ f(x)^m``."""
    a, b = source.structure.action, target.structure.action
    monoid = source.structure.monoid.carrier
    for x in sampling.values(source.carrier, "equivariant", weight=monoid.size):
        for n in monoid:
            try:
                ok = same(f(a((x, n))), b((f(x), n)))
            except Exception:  # noqa: BLE001
                ok = False
            if not ok:
                yield (x, n)


class WriterAdjunction(AdjunctionInstance):
    def __init__(self, monoid: Monoid, **kwargs):
        super().__init__(**kwargs)
        report = check_monoid_laws(monoid, self.sampling)
        if not report.passed:
            raise MonoidLawError(f"{monoid.name} is not a monoid: "
                                 f"{', '.join(report.failing())}")
        self.monoid = monoid
        self.name = f"writer{monoid.name}"

    def object(self, carrier: FiniteType, structure: Any = None) -> DObject:
        if not isinstance(structure, MSet):
            raise ShapeError("an M-set object needs its action")
        return DObject(carrier, structure)

    def side_condition_failures(self, source, target, payload):
        return equivariance_failures(payload, source, target, self.sampling)

    def apply_F_obj(self, x: FiniteType) -> DObject:
        op = self.monoid.op
        xm = product(x, self.monoid.carrier)
        action = FiniteFunction.lazy(product(xm, self.monoid.carrier), xm,
                                     lambda p: (p[0][0], op(p[0][1], p[1])))
        return DObject(xm, MSet(self.monoid, action), free_on=x)

    def apply_F_mor(self, f: FiniteFunction) -> DMorphism:
        src, tgt = self.apply_F_obj(f.domain), self.apply_F_obj(f.codomain)
        return DMorphism(self.name, src, tgt, FiniteFunction.lazy(
            src.carrier, tgt.carrier, lambda p: (f(p[0]), p[1])))

    def apply_U_obj(self, y: DObject) -> FiniteType:
        return y.carrier

    def apply_U_mor(self, k: DMorphism) -> FiniteFunction:
        return k.payload

    def unit(self, x: FiniteType) -> FiniteFunction:
        one = self.monoid.unit_elem
        return FiniteFunction.lazy(x, product(x, self.monoid.carrier),
                                   lambda a: (a, one))

    def counit(self, y: DObject) -> DMorphism:
        return DMorphism(self.name, self.apply_F_obj(y.carrier), y,
                         y.structure.action)

    def registry_objects(self) -> list[DObject]:
        """Hand-picked M-sets beyond the free ones."""
        mon = self.monoid
        objs = [
            mset(mon.carrier, mon, mon.op),          # M acting on itself
            mset(BOOL, mon, lambda x, m: x),         # trivial action
        ]
        if mon.carrier == BOOL:
            objs.append(mset(BOOL, mon, lambda x, m: x and m))
        elif mon.carrier.size % 2 == 0 and all(isinstance(v, int) for v in mon.carrier):
            objs.append(mset(Z2, mon, lambda x, m: (x + m) % 2))
        return objs

    def sample_objects(self, universe: Sequence[FiniteType]) -> list[DObject]:
        return super().sample_objects(universe) + self.registry_objects()


def make_writer_adjunction(monoid: Monoid, **kwargs) -> WriterAdjunction:
    return WriterAdjunction(monoid, **kwargs)


def check_action_laws(obj: DObject,
                      sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """``x^1 = x`` and ``(x^m)^n = x^(m·n)``."""
    mon, a = obj.structure.monoid, obj.structure.action
    ms = list(mon.carrier)
    xs = sampling.values(obj.carrier, "action", weight=len(ms) ** 2)
    return LawReport(f"action:{obj.carrier.name}", [
        law("action identity", ((x,) for x in xs),
            lambda x: same(a((x, mon.unit_elem)), x), "x^1 = x"),
        law("action associativity",
            ((x, m, n) for x in xs for m, n in itertools.product(ms, ms)),
            lambda x, m, n: same(a((a((x, m)), n)), a((x, mon.op(m, n)))),
            "(x^m)^n = x^(m·n)"),
    ])


def induced_action(obj: DObject, t: Strength) -> FiniteFunction:
    """``b = T(a) ∘ t_{X,M} : TX × M → TX``."""
    m = t.owner
    mon, a = obj.structure.monoid, obj.structure.action
    x = obj.carrier
    tx = m.lift_type(x)
    return FiniteFunction.lazy(product(tx, mon.carrier), tx,
                               lambda p: m.map(a, t.apply(x, mon.carrier, p[0], p[1])))


def lift_monad_to_mset(m: MonadDescriptor, t: Strength, adj: WriterAdjunction,
                       verify: bool = True,
                       probes: Sequence[DObject] | None = None) -> MonadOnD:
    if t.owner is not m:
        raise ValueError(f"strength belongs to {t.owner.name}, not {m.name}")
    mon = adj.monoid
    cache: dict[int, DObject] = {}

    def lift(y: DObject) -> DObject:
        key = id(y)
        if key not in cache:
            cache[key] = (y, DObject(m.lift_type(y.carrier),
                                     MSet(mon, induced_action(y, t))))
        return cache[key][1]

    def map_mor(k: DMorphism) -> DMorphism:
        return DMorphism(adj.name, lift(k.source), lift(k.target), m.fmap(k.payload))

    def unit_at(y: DObject) -> DMorphism:
        return DMorphism(adj.name, y, lift(y), m.unit_at(y.carrier))

    def mult_at(y: DObject) -> DMorphism:
        return DMorphism(adj.name, lift(lift(y)), lift(y), m.mult_at(y.carrier))

    tbar = MonadOnD(adj, m.name, lift, map_mor, unit_at, mult_at, base=m)
    if verify:
        objs = probes if probes is not None else adj.sample_objects([UNIT, BOOL])
        report = check_lifted_equivariance(tbar, objs, adj.sampling)
        if not report.passed:
            raise EquivarianceError(report)
    return tbar


def check_lifted_equivariance(tbar: MonadOnD, objects: Sequence[DObject],
                              sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """Induced actions are actions, and ``T(f)``, ``e^T``, ``m^T`` are equivariant."""
    adj = tbar.owner
    mon = adj.monoid
    ms = list(mon.carrier)

    def act(y: DObject):
        return y.structure.action

    def over(level: int, salt: str, weight: int):
        for y in objects:
            ty = y
            for _ in range(level):
                ty = tbar.lift_obj(ty)
            for v in sampling.values(ty.carrier, salt, y.carrier.name, weight=weight):
                yield y, v

    def identity_cases():
        for y, c in over(1, "b-id", 1):
            yield (act(tbar.lift_obj(y)), c)

    def assoc_cases():
        for y, c in over(1, "b-assoc", len(ms) ** 2):
            for m1, m2 in itertools.product(ms, ms):
                yield (act(tbar.lift_obj(y)), c, m1, m2)

    def unit_cases():
        for y, x in over(0, "e-eq", len(ms)):
            for n in ms:
                yield (y, x, n)

    def unit_equivariant(y, x, n):
        e, b = tbar.unit_at(y).payload, act(tbar.lift_obj(y))
        return same(e(act(y)((x, n))), b((e(x), n)))

    def mult_cases():
        for y, cc in over(2, "m-eq", len(ms)):
            for n in ms:
                yield (y, cc, n)

    def mult_equivariant(y, cc, n):
        ty = tbar.lift_obj(y)
        mu = tbar.mult_at(y).payload
        return same(mu(act(tbar.lift_obj(ty))((cc, n))), act(ty)((mu(cc), n)))

    def map_cases():
        for y1, y2 in itertools.product(objects, repeat=2):
            for k in adj.hom_samples(y1, y2, 3):
                tk = tbar.map_mor(k)
                for c in sampling.values(tk.source.carrier, "map-eq",
                                         weight=len(ms) * 3):
                    for n in ms:
                        yield (tk, c, n)

    def map_equivariant(tk, c, n):
        f = tk.payload
        return same(f(act(tk.source)((c, n))), act(tk.target)((f(c), n)))

    return LawReport(f"equivariance:{tbar.name}/{adj.name}", [
        law("induced action identity", identity_cases(),
            lambda b, c: same(b((c, mon.unit_elem)), c), "b(c, 1) = c"),
        law("induced action associativity", assoc_cases(),
            lambda b, c, m1, m2: same(b((b((c, m1)), m2)), b((c, mon.op(m1, m2)))),
            "b(b(c, m), n) = b(c, m·n)"),
        law("unit equivariance", unit_cases(), unit_equivariant,
            "e^T(x^n) = e^T(x)^n"),
        law("multiplication equivariance", mult_cases(), mult_equivariant,
            "m^T(cc^n) = m^T(cc)^n"),
        law("lifted map equivariance", map_cases(), map_equivariant,
            "T(f)(c^n) = T(f)(c)^n for equivariant f"),
    ])


def check_distributive_law(m: MonadDescriptor, t: Strength, mon: Monoid,
                           universe: Sequence[FiniteType] = (UNIT, BOOL),
                           sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """The axioms of ``λ = t_{X,M} : T(X)×M → T(X×M)`` as a law ``WT → TW``.

    W is the writer monad ``−×M``.  Compatibility with the units and
    multiplications of both monads, and naturality in X.
    """
    if t.owner is not m:
        raise ValueError(f"strength belongs to {t.owner.name}, not {m.name}")
    M, op, one = mon.carrier, mon.op, mon.unit_elem
    ms = list(M)

    def lam(x, c, n):
        return t.apply(x, M, c, n)

    def t_unit_cases():
        for x in universe:
            for a in x:
                for n in ms:
                    yield (x, a, n)

    def t_unit(x, a, n):
        return same(lam(x, m.unit(x, a), n), m.unit(product(x, M), (a, n)))

    def tx_cases(salt, weight=1):
        for x in universe:
            for c in sampling.values(m.lift_type(x), salt, weight=weight):
                yield (x, c)

    def w_unit(x, c):
        pair = FiniteFunction.lazy(x, product(x, M), lambda a: (a, one))
        return same(lam(x, c, one), m.map(pair, c))

    def t_mult_cases():
        for x in universe:
            for cc in sampling.values(m.lift_type(m.lift_type(x)), "dl-tm",
                                      weight=len(ms)):
                for n in ms:
                    yield (x, cc, n)

    def t_mult(x, cc, n):
        tx, xm = m.lift_type(x), product(x, M)
        inner = FiniteFunction.lazy(product(tx, M), m.lift_type(xm),
                                    lambda p: lam(x, p[0], p[1]))
        rhs = m.mult(xm, m.map(inner, lam(tx, cc, n)))
        return same(lam(x, m.mult(x, cc), n), rhs)

    def w_mult_cases():
        for x, c in tx_cases("dl-wm", len(ms) ** 2):
            for n1, n2 in itertools.product(ms, ms):
                yield (x, c, n1, n2)

    def w_mult(x, c, n1, n2):
        xm = product(x, M)
        flat = FiniteFunction.lazy(product(xm, M), xm,
                                   lambda p: (p[0][0], op(p[0][1], p[1])))
        rhs = m.map(flat, lam(xm, lam(x, c, n1), n2))
        return same(lam(x, c, op(n1, n2)), rhs)

    def natural_cases():
        for x, y in itertools.product(universe, repeat=2):
            fs = sampling.subset(sampling.functions(x, y), 8, "dl-nat", x, y)
            for f in fs:
                for c in sampling.values(m.lift_type(x), "dl-nat",
                                         weight=len(fs) * len(ms)):
                    for n in ms:
                        yield (f, c, n)

    def natural(f, c, n):
        x, y = f.domain, f.codomain
        fxid = FiniteFunction.lazy(product(x, M), product(y, M),
                                   lambda p: (f(p[0]), p[1]))
        return same(lam(y, m.map(f, c), n), m.map(fxid, lam(x, c, n)))

    return LawReport(f"distributive:{m.name}/{t.name}/{mon.name}", [
        law("compatibility with the unit of T", t_unit_cases(), t_unit,
            "λ ∘ W(e^T) = e^T_W"),
        law("compatibility with the unit of W", tx_cases("dl-wu"), w_unit,
            "λ ∘ e^W_T = T(e^W)"),
        law("compatibility with the multiplication of T", t_mult_cases(), t_mult,
            "λ ∘ W(m^T) = m^T_W ∘ T(λ) ∘ λ_T"),
        law("compatibility with the multiplication of W", w_mult_cases(), w_mult,
            "λ ∘ m^W_T = T(m^W) ∘ λ_W ∘ W(λ)"),
        law("naturality", natural_cases(), natural, "λ ∘ W(T(f)) = T(W(f)) ∘ λ"),
    ])


def derived_writer_join(m: MonadDescriptor, t: Strength, mon: Monoid, z: Any,
                        x: FiniteType) -> Any:
    """Multiplication of the monad translated from ``m`` along the free M-set
    adjunction; ``z`` is a value of ``T(T(X×M)×M)``."""
    adj = make_writer_adjunction(mon)
    p = translate(adj, lift_monad_to_mset(m, t, adj, verify=False))
    return shaped(p.mult, x, z)

"""The coslice category ``E/Set`` and the error transformer.

Objects are pointed sets ``φ : E → X``; a morphism to ``ψ : E → Y`` is a map
``f`` with ``f ∘ φ = ψ``.  F sends X to ``inl : E → E+X``, U forgets the
point, ``η = inr`` and the counit at φ is ``φ ∨ id``.  Any monad lifts by
moving the point along the unit, ``T̄(φ) = T(φ) ∘ e^T_E``; no strength is
involved.
"""

from __future__ import annotations

import itertools
from typing import Any, Sequence

from ..adjunction import AdjunctionInstance, DMorphism, DObject, MonadOnD, ShapeError
from ..finite import (
    BOOL, UNIT, FiniteFunction, FiniteType, Inl, Inr, coproduct,
)
from ..laws import LawReport, law, same
from ..monads import MonadDescriptor
from ..translation import shaped, translate

__all__ = [
    "PointednessError", "ErrorAdjunction", "make_error_adjunction",
    "pointed", "lift_monad_to_coslice", "check_lifted_pointedness",
    "derived_error_join",
]


class PointednessError(ValueError):
    """A lifted map does not preserve base points."""

    def __init__(self, report: LawReport):
        self.report = report
        super().__init__(f"lifting does not preserve points: "
                         f"{', '.join(report.failing())}")


def pointed(carrier: FiniteType, env: FiniteType, point) -> DObject:
    """The coslice object ``point : E → carrier``."""
    return DObject(carrier, FiniteFunction.tabulate(env, carrier, point))


class ErrorAdjunction(AdjunctionInstance):
    def __init__(self, error_type: FiniteType, **kwargs):
        super().__init__(**kwargs)
        self.error_type = error_type
        self.name = f"error({error_type.name})"

    def object(self, carrier: FiniteType, structure: Any = None) -> DObject:
        if not isinstance(structure, FiniteFunction) or structure.domain != self.error_type:
            raise ShapeError(f"a coslice object needs a point {self.error_type.name} → X")
        return DObject(carrier, structure)

    def side_condition_failures(self, source, target, payload):
        phi, psi = source.structure, target.structure
        for e in self.error_type:
            if not same(payload(phi(e)), psi(e)):
                yield e

    def apply_F_obj(self, x: FiniteType) -> DObject:
        ex = coproduct(self.error_type, x)
        return DObject(ex, FiniteFunction.lazy(self.error_type, ex, Inl), free_on=x)

    def apply_F_mor(self, f: FiniteFunction) -> DMorphism:
        src, tgt = self.apply_F_obj(f.domain), self.apply_F_obj(f.codomain)
        return DMorphism(self.name, src, tgt, FiniteFunction.lazy(
            src.carrier, tgt.carrier,
            lambda v: v if isinstance(v, Inl) else Inr(f(v.value))))

    def apply_U_obj(self, y: DObject) -> FiniteType:
        return y.carrier

    def apply_U_mor(self, k: DMorphism) -> FiniteFunction:
        return k.payload

    def unit(self, x: FiniteType) -> FiniteFunction:
        return FiniteFunction.lazy(x, coproduct(self.error_type, x), Inr)

    def counit(self, y: DObject) -> DMorphism:
        phi = y.structure
        return DMorphism(self.name, self.apply_F_obj(y.carrier), y, FiniteFunction.lazy(
            coproduct(self.error_type, y.carrier), y.carrier,
            lambda v: phi(v.value) if isinstance(v, Inl) else v.value))

    def registry_objects(self) -> list[DObject]:
        env = self.error_type
        return [
            pointed(BOOL, env, lambda e: False),
            pointed(env, env, lambda e: e),
        ]

    def sample_objects(self, universe: Sequence[FiniteType]) -> list[DObject]:
        return super().sample_objects(universe) + self.registry_objects()


def make_error_adjunction(e: FiniteType, **kwargs) -> ErrorAdjunction:
    return ErrorAdjunction(e, **kwargs)


def lift_monad_to_coslice(m: MonadDescriptor, adj: ErrorAdjunction,
                          verify: bool = True,
                          probes: Sequence[DObject] | None = None) -> MonadOnD:
    """``T̄(φ) = T(φ) ∘ e^T_E`` and ``T̄(f) = T(f)``."""
    env = adj.error_type
    cache: dict[int, tuple] = {}

    def lift(y: DObject) -> DObject:
        key = id(y)
        if key not in cache:
            x, phi = y.carrier, y.structure
            point = FiniteFunction.lazy(env, m.lift_type(x),
                                        lambda e: m.unit(x, phi(e)))
            cache[key] = (y, DObject(m.lift_type(x), point))
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
        report = check_lifted_pointedness(tbar, objs)
        if not report.passed:
            raise PointednessError(report)
    return tbar


def check_lifted_pointedness(tbar: MonadOnD, objects: Sequence[DObject]) -> LawReport:
    """``T̄(f)``, ``e^T̄`` and ``m^T̄`` send base points to base points."""
    adj = tbar.owner
    env = list(adj.error_type)

    def points(k: DMorphism):
        for e in env:
            yield (k, e)

    def preserves(k, e):
        return same(k.payload(k.source.structure(e)), k.target.structure(e))

    def maps():
        for y1, y2 in itertools.product(objects, repeat=2):
            for k in adj.hom_samples(y1, y2, 4):
                yield from points(tbar.map_mor(k))

    return LawReport(f"pointedness:{tbar.name}/{adj.name}", [
        law("lifted map preserves points", maps(), preserves, "T(f) ∘ T̄φ = T̄ψ"),
        law("unit preserves points",
            (c for y in objects for c in points(tbar.unit_at(y))), preserves,
            "e^T_X ∘ φ = T(φ) ∘ e^T_E"),
        law("multiplication preserves points",
            (c for y in objects for c in points(tbar.mult_at(y))), preserves,
            "m^T_X ∘ T̄T̄φ = T̄φ"),
    ])


def derived_error_join(m: MonadDescriptor, e: FiniteType, z: Any,
                       x: FiniteType) -> Any:
    """Multiplication of the monad translated from ``m`` along the coslice
    adjunction; ``z`` is a value of ``T(E + T(E+X))``."""
    adj = make_error_adjunction(e)
    p = translate(adj, lift_monad_to_coslice(m, adj, verify=False))
    return shaped(p.mult, x, z)

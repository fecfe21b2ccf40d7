"""The product/exponential adjunction ``−×S ⊣ (−)^S`` on finite sets.

Here D is C itself, so any monad on finite sets lifts to D unchanged, and
translating it along the adjunction yields the state transformer.
"""

from __future__ import annotations

from typing import Any

from ..adjunction import (
    AdjunctionInstance, DMorphism, DObject, MonadOnD, ShapeError,
)
from ..finite import FiniteFunction, FiniteType, exponential, product
from ..monads import MonadDescriptor
from ..translation import shaped, translate

__all__ = [
    "StateAdjunction", "make_state_adjunction", "lift_monad_trivially",
    "derived_state_join",
]


class StateAdjunction(AdjunctionInstance):
    """``F X = X×S``, ``U Y = Y^S``, ``η(x) = s ↦ (x, s)``, ``ε(f, s) = f(s)``."""

    def __init__(self, state_type: FiniteType, **kwargs):
        super().__init__(**kwargs)
        self.state_type = state_type
        self.name = f"state({state_type.name})"

    def apply_F_obj(self, x: FiniteType) -> DObject:
        return DObject(product(x, self.state_type), free_on=x)

    def apply_F_mor(self, f: FiniteFunction) -> DMorphism:
        src, tgt = self.apply_F_obj(f.domain), self.apply_F_obj(f.codomain)
        return DMorphism(self.name, src, tgt, FiniteFunction.lazy(
            src.carrier, tgt.carrier, lambda p: (f(p[0]), p[1])))

    def apply_U_obj(self, y: DObject) -> FiniteType:
        return exponential(y.carrier, self.state_type)

    def apply_U_mor(self, k: DMorphism) -> FiniteFunction:
        s, payload = self.state_type, k.payload
        cod = k.target.carrier

        def post(g: FiniteFunction) -> FiniteFunction:
            return FiniteFunction.tabulate(s, cod, lambda v: payload(g(v)))

        return FiniteFunction.lazy(self.apply_U_obj(k.source),
                                   self.apply_U_obj(k.target), post)

    def unit(self, x: FiniteType) -> FiniteFunction:
        s = self.state_type
        xs = product(x, s)
        return FiniteFunction.lazy(x, exponential(xs, s), lambda a: (
            FiniteFunction.tabulate(s, xs, lambda v: (a, v))))

    def counit(self, y: DObject) -> DMorphism:
        fuy = self.apply_F_obj(self.apply_U_obj(y))
        return DMorphism(self.name, fuy, y, FiniteFunction.lazy(
            fuy.carrier, y.carrier, lambda p: p[0](p[1])))


def make_state_adjunction(s: FiniteType, **kwargs) -> StateAdjunction:
    return StateAdjunction(s, **kwargs)


def lift_monad_trivially(m: MonadDescriptor,
                         adj: AdjunctionInstance) -> MonadOnD:
    """``m`` itself, viewed as a monad on D = C."""

    def lift(y: DObject) -> DObject:
        return DObject(m.lift_type(y.carrier))

    def map_mor(k: DMorphism) -> DMorphism:
        return DMorphism(adj.name, lift(k.source), lift(k.target), m.fmap(k.payload))

    def unit_at(y: DObject) -> DMorphism:
        return DMorphism(adj.name, y, lift(y), m.unit_at(y.carrier))

    def mult_at(y: DObject) -> DMorphism:
        return DMorphism(adj.name, lift(lift(y)), lift(y), m.mult_at(y.carrier))

    return MonadOnD(adj, m.name, lift, map_mor, unit_at, mult_at, base=m)


def derived_state_join(m: MonadDescriptor, s: FiniteType, g: Any,
                       x: FiniteType) -> Any:
    """Multiplication of the monad translated from ``m`` along ``−×S ⊣ (−)^S``.

    ``g`` is a value of ``(T((T(X×S))^S × S))^S``.
    """
    if not isinstance(g, FiniteFunction) or g.domain != s:
        raise ShapeError(f"expected a table over {s.name}, got {g!r}")
    adj = make_state_adjunction(s)
    p = translate(adj, lift_monad_trivially(m, adj))
    return shaped(p.mult, x, g)

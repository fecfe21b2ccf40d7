"""Deliberately broken fixtures, for negative controls.

Each one breaks exactly one ingredient, so the checks that depend on it
fail and the rest keep passing.
"""

from __future__ import annotations

from .finite import (
    NOTHING, Z2, FiniteFunction, FiniteType, Nothing, Seq, Some, list_type,
    option_type, product,
)
from .adjunction import DMorphism, DObject
from .instances.state import StateAdjunction
from .monads import MonadDescriptor, Strength

__all__ = [
    "broken_list_mult", "swapped_strength", "CorruptedCounitState",
    "broken_option_map", "FAULTS",
]


def broken_list_mult(cap: int = 3) -> MonadDescriptor:
    """Lists whose join drops the first inner list.

    Still natural, but neither unital nor associative.
    """
    return MonadDescriptor(
        f"List≤{cap}[drop-first join]",
        lift_type=lambda x: list_type(x, cap),
        map=lambda f, v: Seq(f(a) for a in v),
        unit=lambda x, v: Seq((v,)),
        mult=lambda x, v: Seq(a for inner in v[1:] for a in inner),
    )


def swapped_strength(m: MonadDescriptor) -> Strength:
    """``t(c, y) = T(x ↦ (y, x))(c)``: the pair comes out backwards."""

    def apply(x: FiniteType, y: FiniteType, c, v):
        swap = FiniteFunction.lazy(x, product(y, x), lambda a: (v, a))
        return m.map(swap, c)

    return Strength(m, apply, "swapped")


class CorruptedCounitState(StateAdjunction):
    """The state adjunction with ε replaced by a constant map."""

    def __init__(self, state_type: FiniteType = Z2, **kwargs):
        super().__init__(state_type, **kwargs)
        self.name = f"state({state_type.name})[constant counit]"

    def counit(self, y: DObject) -> DMorphism:
        fuy = self.apply_F_obj(self.apply_U_obj(y))
        first = y.carrier.element(0)
        return DMorphism(self.name, fuy, y,
                         FiniteFunction.lazy(fuy.carrier, y.carrier, lambda p: first))


def broken_option_map() -> MonadDescriptor:
    """Option whose map forgets its argument."""
    return MonadDescriptor(
        "Option[map to None]",
        lift_type=option_type,
        map=lambda f, v: NOTHING,
        unit=lambda x, v: Some(v),
        mult=lambda x, v: v if isinstance(v, Nothing) else v.value,
    )


FAULTS = ("broken-mult", "corrupted-strength", "corrupted-counit")

"""Monads on finite sets, their strengths, and the registered base monads."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .finite import (
    BOOL, Z4, FiniteFunction, FiniteType, Nothing, Seq, Some,
    list_type, option_type, product,
)

__all__ = [
    "MonadDescriptor", "Strength", "Monoid", "canonical_strength",
    "IDENTITY", "OPTION", "LIST3", "WRITER_BOOL_AND", "list_monad",
    "writer_monad", "Z4_ADD", "BOOL_AND", "BASE_MONADS", "base_monad",
]


@dataclass(frozen=True, eq=False)
class MonadDescriptor:
    """A monad ``(T, e^T, m^T)`` given by its components.

    ``unit`` and ``mult`` take the object they are a component at as their
    first argument: a translated monad needs it to build tables with the
    right codomain.  ``map(f, v)`` applies ``T(f)`` to a single value.
    """

    name: str
    lift_type: Callable[[FiniteType], FiniteType]
    map: Callable[[FiniteFunction, Any], Any]
    unit: Callable[[FiniteType, Any], Any]
    mult: Callable[[FiniteType, Any], Any]

    def fmap(self, f: FiniteFunction) -> FiniteFunction:
        return FiniteFunction.lazy(self.lift_type(f.domain),
                                   self.lift_type(f.codomain),
                                   lambda v: self.map(f, v))

    def unit_at(self, x: FiniteType) -> FiniteFunction:
        return FiniteFunction.lazy(x, self.lift_type(x),
                                   lambda v: self.unit(x, v))

    def mult_at(self, x: FiniteType) -> FiniteFunction:
        tx = self.lift_type(x)
        return FiniteFunction.lazy(self.lift_type(tx), tx,
                                   lambda v: self.mult(x, v))

    def bind(self, v: Any, k: FiniteFunction, target: FiniteType) -> Any:
        """``v >>= k`` where ``k : X → T(target)``."""
        return self.mult(target, self.map(k, v))

    def __repr__(self) -> str:
        return f"MonadDescriptor({self.name})"


@dataclass(frozen=True, eq=False)
class Strength:
    """``t_{X,Y} : TX × Y → T(X×Y)`` for the monad ``owner``."""

    owner: MonadDescriptor
    apply: Callable[[FiniteType, FiniteType, Any, Any], Any]
    name: str = "canonical"

    def at(self, x: FiniteType, y: FiniteType) -> FiniteFunction:
        t = self.owner
        return FiniteFunction.lazy(
            product(t.lift_type(x), y), t.lift_type(product(x, y)),
            lambda p: self.apply(x, y, p[0], p[1]))


def canonical_strength(m: MonadDescriptor) -> Strength:
    """``t(c, y) = T(x ↦ (x, y))(c)``, the strength every Set monad carries."""

    def apply(x: FiniteType, y: FiniteType, c: Any, v: Any) -> Any:
        pair = FiniteFunction.lazy(x, product(x, y), lambda a: (a, v))
        return m.map(pair, c)

    return Strength(m, apply, "canonical")


@dataclass(frozen=True, eq=False)
class Monoid:
    name: str
    carrier: FiniteType
    op: Callable[[Any, Any], Any]
    unit_elem: Any

    def __repr__(self) -> str:
        return f"Monoid{self.name}"


Z4_ADD = Monoid("(Z4,+)", Z4, lambda a, b: (a + b) % 4, 0)
BOOL_AND = Monoid("(Bool,∧)", BOOL, lambda a, b: a and b, True)


def _identity_monad() -> MonadDescriptor:
    return MonadDescriptor(
        "Identity",
        lift_type=lambda x: x,
        map=lambda f, v: f(v),
        unit=lambda x, v: v,
        mult=lambda x, v: v,
    )


def _option_map(f: FiniteFunction, v: Any) -> Any:
    return v if isinstance(v, Nothing) else Some(f(v.value))


def _option_mult(x: FiniteType, v: Any) -> Any:
    return v if isinstance(v, Nothing) else v.value


def _option_monad() -> MonadDescriptor:
    return MonadDescriptor(
        "Option",
        lift_type=option_type,
        map=_option_map,
        unit=lambda x, v: Some(v),
        mult=_option_mult,
    )


def list_monad(cap: int = 3) -> MonadDescriptor:
    """The list monad; ``cap`` bounds enumeration of ``TX`` only."""
    return MonadDescriptor(
        f"List≤{cap}",
        lift_type=lambda x: list_type(x, cap),
        map=lambda f, v: Seq(f(a) for a in v),
        unit=lambda x, v: Seq((v,)),
        mult=lambda x, v: Seq(a for inner in v for a in inner),
    )


def writer_monad(mon: Monoid) -> MonadDescriptor:
    """``TX = X × M``; joining ``((x, n), m)`` yields ``(x, n·m)``."""
    return MonadDescriptor(
        f"Writer{mon.name}",
        lift_type=lambda x: product(x, mon.carrier),
        map=lambda f, v: (f(v[0]), v[1]),
        unit=lambda x, v: (v, mon.unit_elem),
        mult=lambda x, v: (v[0][0], mon.op(v[0][1], v[1])),
    )


IDENTITY = _identity_monad()
OPTION = _option_monad()
LIST3 = list_monad(3)
WRITER_BOOL_AND = writer_monad(BOOL_AND)

BASE_MONADS: dict[str, MonadDescriptor] = {
    "identity": IDENTITY,
    "option": OPTION,
    "list": LIST3,
    "writer": WRITER_BOOL_AND,
}


def base_monad(key: str) -> MonadDescriptor:
    try:
        return BASE_MONADS[key]
    except KeyError:
        raise KeyError(f"unknown base monad {key!r}; "
                       f"choose from {', '.join(BASE_MONADS)}") from None

"""Translating a monad on D along an adjunction ``F ⊣ U : C → D``.

Given a monad ``(T̄, e, m)`` on D, the functor ``P = U T̄ F`` on C is a monad
with unit ``U(e_FX) ∘ η_X`` and multiplication
``U(m_FX) ∘ U T̄(ε_{T̄FX})``.  :func:`check_translation_diagrams` evaluates
each cell of the two proof diagrams (identities and associativity) as its
own named check, so a broken ingredient shows up in the cells that use it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterator, Sequence

from .adjunction import (
    AdjunctionInstance, DObject, MonadOnD, ShapeError, _pointwise,
)
from .finite import (
    DEFAULT_SAMPLING, DomainError, FiniteFunction, FiniteType, Sampling,
    TypeMismatch, compose, identity,
)
from .laws import LawReport
from .monads import MonadDescriptor

__all__ = [
    "OwnerMismatch", "Translation", "translate", "check_translation_diagrams",
    "Layer", "stack", "shaped", "CELL_NAMES", "EXTERIOR_NAMES",
]


class OwnerMismatch(ValueError):
    """The lifted monad lives on a different adjunction's category."""


class Translation:
    """The pieces of ``P = U T̄ F`` at each object, memoised per ``X``."""

    def __init__(self, adj: AdjunctionInstance, tbar: MonadOnD):
        if tbar.owner is not adj:
            raise OwnerMismatch(
                f"{tbar.name} is a monad on {tbar.owner.name}, not {adj.name}")
        self.adj = adj
        self.tbar = tbar
        self._fx: dict[FiniteType, DObject] = {}
        self._tfx: dict[FiniteType, DObject] = {}
        self._unit: dict[FiniteType, FiniteFunction] = {}
        self._mult: dict[FiniteType, FiniteFunction] = {}

    # objects ----------------------------------------------------------
    def F(self, x: FiniteType) -> DObject:
        if x not in self._fx:
            self._fx[x] = self.adj.apply_F_obj(x)
        return self._fx[x]

    def TF(self, x: FiniteType) -> DObject:
        if x not in self._tfx:
            self._tfx[x] = self.tbar.lift_obj(self.F(x))
        return self._tfx[x]

    def P(self, x: FiniteType) -> FiniteType:
        return self.adj.apply_U_obj(self.TF(x))

    # the monad --------------------------------------------------------
    def fmap(self, f: FiniteFunction) -> FiniteFunction:
        adj = self.adj
        return adj.apply_U_mor(self.tbar.map_mor(adj.apply_F_mor(f)))

    def unit(self, x: FiniteType) -> FiniteFunction:
        if x not in self._unit:
            adj = self.adj
            e = adj.apply_U_mor(self.tbar.unit_at(self.F(x)))
            self._unit[x] = compose(e, adj.unit(x))
        return self._unit[x]

    def mult(self, x: FiniteType) -> FiniteFunction:
        if x not in self._mult:
            adj, tbar = self.adj, self.tbar
            tfx = self.TF(x)
            flatten = adj.apply_U_mor(tbar.map_mor(adj.counit(tfx)))
            join = adj.apply_U_mor(tbar.mult_at(self.F(x)))
            self._mult[x] = compose(join, flatten)
        return self._mult[x]

    def descriptor(self) -> MonadDescriptor:
        return MonadDescriptor(
            f"{self.adj.name}/{self.tbar.name}",
            lift_type=self.P,
            map=lambda f, v: self.fmap(f)(v),
            unit=lambda x, v: self.unit(x)(v),
            mult=lambda x, v: self.mult(x)(v),
        )


def translate(adj: AdjunctionInstance, tbar: MonadOnD) -> MonadDescriptor:
    """The monad ``U T̄ F`` on C."""
    return Translation(adj, tbar).descriptor()


def shaped(op: Callable[[FiniteType, Any], Any], x: FiniteType, v: Any) -> Any:
    """Apply a monad component, reporting malformed input as a ShapeError."""
    try:
        return op(x, v)
    except (TypeError, AttributeError, IndexError, KeyError, ValueError,
            DomainError, TypeMismatch) as exc:
        if isinstance(exc, ShapeError):
            raise
        raise ShapeError(f"value {v!r} does not fit at {x.name}: {exc}") from exc


# ---------------------------------------------------------------------------
# the proof diagrams

CELL_NAMES = (
    "identity diagram: counit-unit triangle (U side)",
    "identity diagram: counit-unit triangle (F side)",
    "identity diagram: unit naturality square",
    "identity diagram: counit naturality square",
    "identity diagram: left identity triangle",
    "identity diagram: right identity triangle",
    "associativity diagram: counit naturality square (upper)",
    "associativity diagram: counit naturality square (lower)",
    "associativity diagram: multiplication naturality square",
    "associativity diagram: associativity square",
)

EXTERIOR_NAMES = (
    "exterior: left identity",
    "exterior: right identity",
    "exterior: associativity",
)


def check_translation_diagrams(adj: AdjunctionInstance, tbar: MonadOnD,
                               universe: Sequence[FiniteType],
                               sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    tr = Translation(adj, tbar)
    U, Umor = adj.apply_U_obj, adj.apply_U_mor
    T, Tmor = tbar.lift_obj, tbar.map_mor
    F, Fmor = adj.apply_F_obj, adj.apply_F_mor
    eps, e, m = adj.counit, tbar.unit_at, tbar.mult_at

    def UT(k):
        return Umor(Tmor(k))

    def cells(label: str, build: Callable[[FiniteType], tuple]) -> Iterator[tuple]:
        for x in universe:
            lhs, rhs = build(x)
            yield (x.name, lhs, rhs, sampling.values(lhs.domain, label, x))

    def u_triangle(x):
        tfx = tr.TF(x)
        lhs = compose(Umor(eps(tfx)), adj.unit(U(tfx)))
        return lhs, identity(U(tfx))

    def f_triangle(x):
        fx, tfx = tr.F(x), tr.TF(x)
        lhs = compose(UT(eps(fx)), UT(Fmor(adj.unit(x))))
        return lhs, identity(U(tfx))

    def unit_square(x):
        # on U F U T̄F X
        tfx = tr.TF(x)
        futfx = F(U(tfx))
        lhs = compose(UT(eps(tfx)), Umor(e(futfx)))
        rhs = compose(Umor(e(tfx)), Umor(eps(tfx)))
        return lhs, rhs

    def counit_square(x):
        # on U T̄ F U F X
        fx = tr.F(x)
        lhs = compose(UT(eps(tr.TF(x))), UT(Fmor(Umor(e(fx)))))
        rhs = compose(UT(e(fx)), UT(eps(fx)))
        return lhs, rhs

    def left_triangle(x):
        tfx = tr.TF(x)
        return compose(Umor(m(tr.F(x))), Umor(e(tfx))), identity(U(tfx))

    def right_triangle(x):
        fx, tfx = tr.F(x), tr.TF(x)
        return compose(Umor(m(fx)), UT(e(fx))), identity(U(tfx))

    def upper_square(x):
        # on P P P X = U T̄F U T̄F U T̄F X
        tfx = tr.TF(x)
        tfutfx = T(F(U(tfx)))
        lhs = compose(UT(Tmor(eps(tfx))), UT(eps(tfutfx)))
        rhs = compose(UT(eps(T(tfx))), UT(Fmor(UT(eps(tfx)))))
        return lhs, rhs

    def lower_square(x):
        # on U T̄ F U T̄T̄ F X
        fx, tfx = tr.F(x), tr.TF(x)
        lhs = compose(UT(m(fx)), UT(eps(T(tfx))))
        rhs = compose(UT(eps(tfx)), UT(Fmor(Umor(m(fx)))))
        return lhs, rhs

    def mult_square(x):
        # on U T̄T̄ F U T̄ F X
        tfx = tr.TF(x)
        futfx = F(U(tfx))
        lhs = compose(UT(eps(tfx)), Umor(m(futfx)))
        rhs = compose(Umor(m(tfx)), UT(Tmor(eps(tfx))))
        return lhs, rhs

    def assoc_square(x):
        # on U T̄T̄T̄ F X
        fx, tfx = tr.F(x), tr.TF(x)
        lhs = compose(Umor(m(fx)), Umor(m(tfx)))
        rhs = compose(Umor(m(fx)), UT(m(fx)))
        return lhs, rhs

    def exterior_left(x):
        px = tr.P(x)
        return compose(tr.mult(x), tr.unit(px)), identity(px)

    def exterior_right(x):
        px = tr.P(x)
        return compose(tr.mult(x), tr.fmap(tr.unit(x))), identity(px)

    def exterior_assoc(x):
        px = tr.P(x)
        return (compose(tr.mult(x), tr.mult(px)),
                compose(tr.mult(x), tr.fmap(tr.mult(x))))

    anchors = (
        "U(ε_T̄FX) ∘ η_UT̄FX = id",
        "UT̄(ε_FX) ∘ UT̄F(η_X) = id",
        "UT̄(ε_T̄FX) ∘ U(e_FUT̄FX) = U(e_T̄FX) ∘ U(ε_T̄FX)",
        "UT̄(ε_T̄FX) ∘ UT̄FU(e_FX) = UT̄(e_FX) ∘ UT̄(ε_FX)",
        "U(m_FX) ∘ U(e_T̄FX) = id",
        "U(m_FX) ∘ UT̄(e_FX) = id",
        "UT̄T̄(ε_T̄FX) ∘ UT̄(ε_T̄FUT̄FX) = UT̄(ε_T̄T̄FX) ∘ UT̄FUT̄(ε_T̄FX)",
        "UT̄(m_FX) ∘ UT̄(ε_T̄T̄FX) = UT̄(ε_T̄FX) ∘ UT̄FU(m_FX)",
        "UT̄(ε_T̄FX) ∘ U(m_FUT̄FX) = U(m_T̄FX) ∘ UT̄T̄(ε_T̄FX)",
        "U(m_FX) ∘ U(m_T̄FX) = U(m_FX) ∘ UT̄(m_FX)",
        "m^P ∘ e^P_PX = id",
        "m^P ∘ P(e^P_X) = id",
        "m^P ∘ m^P_PX = m^P ∘ P(m^P_X)",
    )
    builders = (u_triangle, f_triangle, unit_square, counit_square,
                left_triangle, right_triangle, upper_square, lower_square,
                mult_square, assoc_square,
                exterior_left, exterior_right, exterior_assoc)
    names = CELL_NAMES + EXTERIOR_NAMES
    return LawReport(f"diagrams:{adj.name}/{tbar.name}", [
        _pointwise(name, anchor, cells(name, build))
        for name, anchor, build in zip(names, anchors, builders)
    ])


# ---------------------------------------------------------------------------
# stacking


@dataclass(frozen=True)
class Layer:
    """One step of a stack: an adjunction and how to lift a monad onto its D.

    ``lift(m, adj)`` returns a :class:`MonadOnD` owned by ``adj``; it may
    raise if ``m`` lacks what the lifting needs.
    """

    adjunction: AdjunctionInstance
    lift: Callable[[MonadDescriptor, AdjunctionInstance], MonadOnD]

    @property
    def name(self) -> str:
        return self.adjunction.name


def stack(chain: Sequence[Layer | tuple], base: MonadDescriptor) -> MonadDescriptor:
    """Translate ``base`` along each layer, listed outermost first.

    ``stack([a, b], T)`` is ``a(b(T))``: ``b`` is applied to ``T`` first.
    """
    m = base
    for layer in reversed(chain):
        adj, lift = (layer.adjunction, layer.lift) if isinstance(layer, Layer) else layer
        m = translate(adj, lift(m, adj))
    return m

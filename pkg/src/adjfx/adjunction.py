"""Adjunctions ``F ⊣ U : C → D`` between finite-set semantics.

``C`` is always finite sets and functions.  ``D`` differs per instance, so
its objects and morphisms are runtime descriptors: a :class:`DObject` is a
carrier plus instance-specific structure, and a :class:`DMorphism` carries
its payload function (for the reader instance, a function out of
``X × E``).  Each instance supplies its own composition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Sequence

from .finite import (
    DEFAULT_SAMPLING, FiniteFunction, FiniteType, Sampling, compose,
    identity,
)
from .laws import Check, LawReport, function_pairs, law, same
from .monads import MonadDescriptor

__all__ = [
    "DObject", "DMorphism", "AdjunctionInstance", "MonadOnD", "ShapeError",
    "SideConditionError", "phi", "phi_inv", "check_triangle_identities",
    "check_adjunction_laws", "induced_monad", "identity_lifting",
    "check_monad_on_d", "same_morphism", "morphism_cases", "describe_pointwise",
]


class ShapeError(ValueError):
    """A morphism or value does not have the shape an operation expects."""


class SideConditionError(ValueError):
    """A D-morphism payload violates its instance's side condition."""


@dataclass(frozen=True, eq=False)
class DObject:
    carrier: FiniteType
    structure: Any = None
    # set on objects produced by F, so phi can recover X from F(X)
    free_on: FiniteType | None = None

    def __repr__(self) -> str:
        extra = "" if self.structure is None else ", structured"
        return f"DObject({self.carrier.name}{extra})"


@dataclass(frozen=True, eq=False)
class DMorphism:
    instance: str
    source: DObject
    target: DObject
    payload: FiniteFunction

    def __repr__(self) -> str:
        return (f"DMorphism[{self.instance}]({self.source.carrier.name} → "
                f"{self.target.carrier.name})")


class AdjunctionInstance:
    """The quadruple ``(F, U, η, ε)`` for one concrete ``D``.

    Subclasses implement the functor actions, unit and counit.  Composition
    and identities default to those of plain functions; side conditions
    default to none.  With ``strict=True`` every morphism built through
    :meth:`morphism` is validated pointwise on construction.
    """

    name = "adjunction"

    def __init__(self, strict: bool = False,
                 sampling: Sampling = DEFAULT_SAMPLING):
        self.strict = strict
        self.sampling = sampling

    # -- the category D -------------------------------------------------
    def object(self, carrier: FiniteType, structure: Any = None) -> DObject:
        return DObject(carrier, structure)

    def hom_domain(self, source: DObject) -> FiniteType:
        """Domain of the payload of a morphism out of ``source``."""
        return source.carrier

    def side_condition_failures(self, source: DObject, target: DObject,
                                payload: FiniteFunction) -> Iterator[Any]:
        return iter(())

    def morphism(self, source: DObject, target: DObject,
                 payload: FiniteFunction) -> DMorphism:
        if self.strict:
            bad = next(self.side_condition_failures(source, target, payload), None)
            if bad is not None:
                raise SideConditionError(
                    f"{self.name}: payload {source.carrier.name} → "
                    f"{target.carrier.name} fails its side condition at {bad!r}")
        return DMorphism(self.name, source, target, payload)

    def compose(self, g: DMorphism, f: DMorphism) -> DMorphism:
        """``g ∘ f`` in D."""
        if g.source.carrier != f.target.carrier:
            raise ShapeError(f"cannot compose {g} after {f}")
        return DMorphism(self.name, f.source, g.target, compose(g.payload, f.payload))

    def identity(self, y: DObject) -> DMorphism:
        return DMorphism(self.name, y, y, identity(y.carrier))

    # -- the adjunction -------------------------------------------------
    def apply_F_obj(self, x: FiniteType) -> DObject:
        raise NotImplementedError

    def apply_F_mor(self, f: FiniteFunction) -> DMorphism:
        raise NotImplementedError

    def apply_U_obj(self, y: DObject) -> FiniteType:
        raise NotImplementedError

    def apply_U_mor(self, k: DMorphism) -> FiniteFunction:
        raise NotImplementedError

    def unit(self, x: FiniteType) -> FiniteFunction:
        """``η_X : X → UFX``."""
        raise NotImplementedError

    def counit(self, y: DObject) -> DMorphism:
        """``ε_Y : FUY → Y``."""
        raise NotImplementedError

    # -- test registry --------------------------------------------------
    def sample_objects(self, universe: Sequence[FiniteType]) -> list[DObject]:
        """D-objects the law checks range over: F-images of ``universe``."""
        return [self.apply_F_obj(x) for x in universe]

    def hom_samples(self, source: DObject, target: DObject,
                    limit: int = 8) -> list[DMorphism]:
        """Sampled morphisms ``source → target`` satisfying the side condition."""
        s = self.sampling
        found = []
        for payload in s.functions(self.hom_domain(source), target.carrier):
            if next(self.side_condition_failures(source, target, payload), None) is None:
                found.append(DMorphism(self.name, source, target, payload))
        return s.subset(found, limit, "hom", self.name,
                        source.carrier, target.carrier)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


def morphism_cases(k: DMorphism, sampling: Sampling, *salt: Any) -> list:
    return sampling.values(k.payload.domain, "dmor", *salt)


def same_morphism(k1: DMorphism, k2: DMorphism, sampling: Sampling,
                  *salt: Any) -> list:
    """Points of the payload domain where ``k1`` and ``k2`` disagree."""
    return [p for p in morphism_cases(k1, sampling, *salt)
            if not same(k1.payload(p), k2.payload(p))]


def phi(adj: AdjunctionInstance, f: DMorphism) -> FiniteFunction:
    """``φ(f) = U(f) ∘ η_X`` for ``f : FX → Y``."""
    x = f.source.free_on
    if x is None:
        raise ShapeError(f"source of {f} is not an F-image")
    return compose(adj.apply_U_mor(f), adj.unit(x))


def phi_inv(adj: AdjunctionInstance, g: FiniteFunction,
            target: DObject) -> DMorphism:
    """``φ⁻¹(g) = ε_Y ∘ F(g)`` for ``g : X → UY``."""
    if g.codomain != adj.apply_U_obj(target):
        raise ShapeError(f"codomain {g.codomain} is not U({target.carrier})")
    return adj.compose(adj.counit(target), adj.apply_F_mor(g))


def _pointwise(name: str, anchor: str, cells: Iterator[tuple]) -> Check:
    """Check ``lhs(p) = rhs(p)`` for each cell ``(label, lhs, rhs, points)``."""
    return law(name, ((label, p, lhs, rhs) for label, lhs, rhs, points in cells
                      for p in points),
               lambda label, p, lhs, rhs: same(lhs(p), rhs(p)), anchor,
               describe=describe_pointwise)


def describe_pointwise(label, p, lhs, rhs) -> str:
    try:
        detail = f": {lhs(p)!r} vs {rhs(p)!r}"
    except Exception:  # noqa: BLE001
        detail = ""
    return f"{label} at {p!r}{detail}"


def check_triangle_identities(adj: AdjunctionInstance,
                              universe: Sequence[FiniteType],
                              sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    def f_side():
        for x in universe:
            fx = adj.apply_F_obj(x)
            lhs = adj.compose(adj.counit(fx), adj.apply_F_mor(adj.unit(x)))
            rhs = adj.identity(fx)
            yield (x.name, lhs.payload, rhs.payload,
                   morphism_cases(lhs, sampling, "tri-F"))

    def u_side():
        for y in adj.sample_objects(universe):
            uy = adj.apply_U_obj(y)
            lhs = compose(adj.apply_U_mor(adj.counit(y)), adj.unit(uy))
            yield (y.carrier.name, lhs, identity(uy),
                   sampling.values(uy, "tri-U"))

    return LawReport(f"triangle:{adj.name}", [
        _pointwise("counit-unit (F side)", "ε_FX ∘ F(η_X) = id_FX", f_side()),
        _pointwise("counit-unit (U side)", "U(ε_Y) ∘ η_UY = id_UY", u_side()),
    ])


def _object_pairs(adj, universe):
    objs = adj.sample_objects(universe)
    return list(itertools.product(objs, repeat=2))


def check_adjunction_laws(adj: AdjunctionInstance,
                          universe: Sequence[FiniteType],
                          sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """Functoriality of F and U, naturality of η, ε and φ, bijectivity of φ."""
    small = sampling.subset(list(universe), 3, "adj-universe")

    def f_identity():
        for x in small:
            lhs = adj.apply_F_mor(identity(x))
            yield (x.name, lhs.payload, adj.identity(adj.apply_F_obj(x)).payload,
                   morphism_cases(lhs, sampling, "F-id"))

    def f_composition():
        for x, y, z in itertools.product(small, repeat=3):
            for f, g in function_pairs(sampling, x, y, z, 4):
                lhs = adj.apply_F_mor(compose(g, f))
                rhs = adj.compose(adj.apply_F_mor(g), adj.apply_F_mor(f))
                yield (f"{f}/{g}", lhs.payload, rhs.payload,
                       morphism_cases(lhs, sampling, "F-comp"))

    def u_identity():
        for y in adj.sample_objects(small):
            uy = adj.apply_U_obj(y)
            yield (y.carrier.name, adj.apply_U_mor(adj.identity(y)), identity(uy),
                   sampling.values(uy, "U-id"))

    def u_composition():
        for y1, y2 in _object_pairs(adj, small):
            for k1 in adj.hom_samples(y1, y2, 4):
                for y3 in adj.sample_objects(small):
                    for k2 in adj.hom_samples(y2, y3, 2):
                        lhs = adj.apply_U_mor(adj.compose(k2, k1))
                        rhs = compose(adj.apply_U_mor(k2), adj.apply_U_mor(k1))
                        yield ("U-comp", lhs, rhs,
                               sampling.values(lhs.domain, "U-comp", weight=8))

    def eta_natural():
        for x, y in itertools.product(small, repeat=2):
            for h in sampling.subset(sampling.functions(x, y), 8, "eta", x, y):
                lhs = compose(adj.apply_U_mor(adj.apply_F_mor(h)), adj.unit(x))
                rhs = compose(adj.unit(y), h)
                yield (repr(h), lhs, rhs, list(x))

    def eps_natural():
        for y1, y2 in _object_pairs(adj, small):
            for k in adj.hom_samples(y1, y2, 4):
                fuk = adj.apply_F_mor(adj.apply_U_mor(k))
                lhs = adj.compose(adj.counit(y2), fuk)
                rhs = adj.compose(k, adj.counit(y1))
                yield ("ε-nat", lhs.payload, rhs.payload,
                       morphism_cases(lhs, sampling, "eps"))

    def phi_round_trip():
        for x in small:
            for y in adj.sample_objects(small):
                uy = adj.apply_U_obj(y)
                for g in sampling.subset(sampling.functions(x, uy), 8, "phi", x, uy):
                    yield ("φφ⁻¹", phi(adj, phi_inv(adj, g, y)), g, list(x))

    def phi_inv_round_trip():
        for x in small:
            fx = adj.apply_F_obj(x)
            for y in adj.sample_objects(small):
                for f in adj.hom_samples(fx, y, 4):
                    back = phi_inv(adj, phi(adj, f), y)
                    yield ("φ⁻¹φ", back.payload, f.payload,
                           morphism_cases(f, sampling, "phi-inv"))

    def phi_natural_x():
        # φ(f ∘ F(h)) = φ(f) ∘ h
        for w, x in itertools.product(small, repeat=2):
            fx = adj.apply_F_obj(x)
            hs = sampling.subset(sampling.functions(w, x), 4, "phi-nat", w, x)
            for y in adj.sample_objects(small):
                for f in adj.hom_samples(fx, y, 3):
                    for h in hs:
                        fh = adj.compose(f, adj.apply_F_mor(h))
                        # re-anchor the source so phi can see it is F(w)
                        fh = DMorphism(fh.instance, adj.apply_F_obj(w),
                                       fh.target, fh.payload)
                        yield ("φ-nat-X", phi(adj, fh), compose(phi(adj, f), h),
                               list(w))

    def phi_natural_y():
        # φ(k ∘ f) = U(k) ∘ φ(f)
        for x in small:
            fx = adj.apply_F_obj(x)
            for y1, y2 in _object_pairs(adj, small):
                for f in adj.hom_samples(fx, y1, 3):
                    for k in adj.hom_samples(y1, y2, 3):
                        kf = adj.compose(k, f)
                        yield ("φ-nat-Y", phi(adj, kf),
                               compose(adj.apply_U_mor(k), phi(adj, f)), list(x))

    return LawReport(f"adjunction:{adj.name}", [
        _pointwise("F preserves identities", "F(id) = id", f_identity()),
        _pointwise("F preserves composition", "F(g∘f) = F(g)∘F(f)", f_composition()),
        _pointwise("U preserves identities", "U(id) = id", u_identity()),
        _pointwise("U preserves composition", "U(k∘j) = U(k)∘U(j)", u_composition()),
        _pointwise("unit naturality", "UF(h)∘η = η∘h", eta_natural()),
        _pointwise("counit naturality", "ε∘FU(k) = k∘ε", eps_natural()),
        _pointwise("phi after phi_inv", "φ(φ⁻¹(g)) = g", phi_round_trip()),
        _pointwise("phi_inv after phi", "φ⁻¹(φ(f)) = f", phi_inv_round_trip()),
        _pointwise("phi natural in X", "φ(f∘F(h)) = φ(f)∘h", phi_natural_x()),
        _pointwise("phi natural in Y", "φ(k∘f) = U(k)∘φ(f)", phi_natural_y()),
    ])


def induced_monad(adj: AdjunctionInstance) -> MonadDescriptor:
    """The monad ``(UF, η, U(ε_F))`` of an adjunction."""

    def lift_type(x):
        return adj.apply_U_obj(adj.apply_F_obj(x))

    def fmap(f, v):
        return adj.apply_U_mor(adj.apply_F_mor(f))(v)

    def unit(x, v):
        return adj.unit(x)(v)

    def mult(x, v):
        return adj.apply_U_mor(adj.counit(adj.apply_F_obj(x)))(v)

    return MonadDescriptor(f"UF[{adj.name}]", lift_type, fmap, unit, mult)


@dataclass(frozen=True, eq=False)
class MonadOnD:
    """A monad ``(T̄, e^T̄, m^T̄)`` on the category D of ``owner``."""

    owner: AdjunctionInstance
    name: str
    lift_obj: Callable[[DObject], DObject]
    map_mor: Callable[[DMorphism], DMorphism]
    unit_at: Callable[[DObject], DMorphism]
    mult_at: Callable[[DObject], DMorphism]
    base: MonadDescriptor | None = field(default=None)

    def __repr__(self) -> str:
        return f"MonadOnD({self.name} on {self.owner.name})"


def identity_lifting(adj: AdjunctionInstance) -> MonadOnD:
    """The identity monad on D."""
    return MonadOnD(adj, "Id", lift_obj=lambda y: y, map_mor=lambda k: k,
                    unit_at=adj.identity, mult_at=adj.identity)


def check_monad_on_d(tbar: MonadOnD, objects: Sequence[DObject],
                     sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """T̄ is a functor on D and ``e^T̄``, ``m^T̄`` are natural and lawful."""
    adj = tbar.owner
    pairs = list(itertools.product(objects, repeat=2))

    def cell(label, lhs, rhs, salt):
        return (label, lhs.payload, rhs.payload, morphism_cases(lhs, sampling, salt))

    def preserves_identity():
        for y in objects:
            ty = tbar.lift_obj(y)
            yield cell(y.carrier.name, tbar.map_mor(adj.identity(y)),
                       adj.identity(ty), "Tbar-id")

    def preserves_composition():
        for y1, y2 in pairs:
            for k1 in adj.hom_samples(y1, y2, 3):
                for y3 in objects:
                    for k2 in adj.hom_samples(y2, y3, 2):
                        lhs = tbar.map_mor(adj.compose(k2, k1))
                        rhs = adj.compose(tbar.map_mor(k2), tbar.map_mor(k1))
                        yield cell("comp", lhs, rhs, "Tbar-comp")

    def unit_natural():
        for y1, y2 in pairs:
            for k in adj.hom_samples(y1, y2, 4):
                lhs = adj.compose(tbar.map_mor(k), tbar.unit_at(y1))
                rhs = adj.compose(tbar.unit_at(y2), k)
                yield cell("e-nat", lhs, rhs, "Tbar-e")

    def mult_natural():
        for y1, y2 in pairs:
            for k in adj.hom_samples(y1, y2, 4):
                lhs = adj.compose(tbar.map_mor(k), tbar.mult_at(y1))
                rhs = adj.compose(tbar.mult_at(y2), tbar.map_mor(tbar.map_mor(k)))
                yield cell("m-nat", lhs, rhs, "Tbar-m")

    def left_identity():
        for y in objects:
            ty = tbar.lift_obj(y)
            lhs = adj.compose(tbar.mult_at(y), tbar.unit_at(ty))
            yield cell("left", lhs, adj.identity(ty), "Tbar-left")

    def right_identity():
        for y in objects:
            ty = tbar.lift_obj(y)
            lhs = adj.compose(tbar.mult_at(y), tbar.map_mor(tbar.unit_at(y)))
            yield cell("right", lhs, adj.identity(ty), "Tbar-right")

    def associativity():
        for y in objects:
            ty = tbar.lift_obj(y)
            lhs = adj.compose(tbar.mult_at(y), tbar.mult_at(ty))
            rhs = adj.compose(tbar.mult_at(y), tbar.map_mor(tbar.mult_at(y)))
            yield cell("assoc", lhs, rhs, "Tbar-assoc")

    return LawReport(f"monad-on-D:{tbar.name}/{adj.name}", [
        _pointwise("lifted functor preserves identities", "T̄(id) = id",
                   preserves_identity()),
        _pointwise("lifted functor preserves composition", "T̄(k∘j) = T̄(k)∘T̄(j)",
                   preserves_composition()),
        _pointwise("lifted unit naturality", "T̄(k)∘e = e∘k", unit_natural()),
        _pointwise("lifted multiplication naturality", "T̄(k)∘m = m∘T̄T̄(k)",
                   mult_natural()),
        _pointwise("lifted left identity", "m∘e_T̄ = id", left_identity()),
        _pointwise("lifted right identity", "m∘T̄(e) = id", right_identity()),
        _pointwise("lifted associativity", "m∘m_T̄ = m∘T̄(m)", associativity()),
    ])

"""Parametrised functions: the category with ``D(X, Y) = C(X×E, Y)``.

Morphisms compose by threading the same environment,
``(g ∗ f)(x, e) = g(f(x, e), e)``, with ``pr₁`` as identity.  F is the
identity on objects and sends ``f`` to the constant family ``f ∘ pr₁``; U
sends Y to ``Y^E``.  This category is the Kleisli category of the reader
monad in disguise: currying turns ``X×E → Y`` into ``X → Y^E``.
"""

from __future__ import annotations

import itertools
from typing import Any, Sequence

from ..adjunction import AdjunctionInstance, DMorphism, DObject, MonadOnD, ShapeError
from ..finite import (
    BOOL, DEFAULT_SAMPLING, FiniteFunction, FiniteType, Sampling,
    exponential, product,
)
from ..laws import Check, LawReport, law, same
from ..monads import MonadDescriptor, Strength
from ..translation import shaped, translate

__all__ = [
    "ReaderAdjunction", "make_reader_adjunction", "reader_compose",
    "reader_identity", "lift_monad_to_reader", "check_reader_category",
    "kleisli_spot_check", "derived_reader_join",
]


def reader_identity(y: DObject, env: FiniteType, tag: str = "reader") -> DMorphism:
    """``pr₁ : Y×E → Y``."""
    return DMorphism(tag, y, y, FiniteFunction.lazy(
        product(y.carrier, env), y.carrier, lambda p: p[0]))


def reader_compose(g: DMorphism, f: DMorphism) -> DMorphism:
    """``(g ∗ f)(x, e) = g(f(x, e), e)``."""
    if g.source.carrier != f.target.carrier:
        raise ShapeError(f"cannot compose {g} after {f}")
    env_f = f.payload.domain.name
    env_g = g.payload.domain.name
    # both payload domains are (A×E); the E parts must agree
    if env_f.rsplit("×", 1)[-1] != env_g.rsplit("×", 1)[-1]:
        raise ShapeError(f"environments differ: {env_f} / {env_g}")
    fp, gp = f.payload, g.payload
    return DMorphism(f.instance, f.source, g.target, FiniteFunction.lazy(
        fp.domain, gp.codomain, lambda p: gp((fp(p), p[1]))))


class ReaderAdjunction(AdjunctionInstance):
    def __init__(self, env_type: FiniteType, **kwargs):
        super().__init__(**kwargs)
        self.env_type = env_type
        self.name = f"reader({env_type.name})"

    def hom_domain(self, source: DObject) -> FiniteType:
        return product(source.carrier, self.env_type)

    def compose(self, g: DMorphism, f: DMorphism) -> DMorphism:
        return reader_compose(g, f)

    def identity(self, y: DObject) -> DMorphism:
        return reader_identity(y, self.env_type, self.name)

    def apply_F_obj(self, x: FiniteType) -> DObject:
        return DObject(x, free_on=x)

    def apply_F_mor(self, f: FiniteFunction) -> DMorphism:
        return DMorphism(self.name, self.apply_F_obj(f.domain),
                         self.apply_F_obj(f.codomain), FiniteFunction.lazy(
                             product(f.domain, self.env_type), f.codomain,
                             lambda p: f(p[0])))

    def apply_U_obj(self, y: DObject) -> FiniteType:
        return exponential(y.carrier, self.env_type)

    def apply_U_mor(self, k: DMorphism) -> FiniteFunction:
        env, payload, cod = self.env_type, k.payload, k.target.carrier

        def post(g: FiniteFunction) -> FiniteFunction:
            return FiniteFunction.tabulate(env, cod, lambda e: payload((g(e), e)))

        return FiniteFunction.lazy(self.apply_U_obj(k.source),
                                   self.apply_U_obj(k.target), post)

    def unit(self, x: FiniteType) -> FiniteFunction:
        env = self.env_type
        return FiniteFunction.lazy(x, exponential(x, env), lambda a: (
            FiniteFunction.tabulate(env, x, lambda e: a)))

    def counit(self, y: DObject) -> DMorphism:
        uy = self.apply_U_obj(y)
        return DMorphism(self.name, self.apply_F_obj(uy), y, FiniteFunction.lazy(
            product(uy, self.env_type), y.carrier, lambda p: p[0](p[1])))


def make_reader_adjunction(e: FiniteType, **kwargs) -> ReaderAdjunction:
    return ReaderAdjunction(e, **kwargs)


def lift_monad_to_reader(m: MonadDescriptor, t: Strength,
                         adj: ReaderAdjunction) -> MonadOnD:
    """``T̄X = TX``, ``T̄(f) = T(f) ∘ t_{X,E}``, and ``e``, ``m`` precomposed with pr₁."""
    if t.owner is not m:
        raise ValueError(f"strength belongs to {t.owner.name}, not {m.name}")
    env = adj.env_type

    def lift(y: DObject) -> DObject:
        return DObject(m.lift_type(y.carrier))

    def map_mor(k: DMorphism) -> DMorphism:
        x, f = k.source.carrier, k.payload
        src, tgt = lift(k.source), lift(k.target)
        return DMorphism(adj.name, src, tgt, FiniteFunction.lazy(
            product(src.carrier, env), tgt.carrier,
            lambda p: m.map(f, t.apply(x, env, p[0], p[1]))))

    def unit_at(y: DObject) -> DMorphism:
        ty = lift(y)
        return DMorphism(adj.name, y, ty, FiniteFunction.lazy(
            product(y.carrier, env), ty.carrier, lambda p: m.unit(y.carrier, p[0])))

    def mult_at(y: DObject) -> DMorphism:
        ty = lift(y)
        return DMorphism(adj.name, lift(ty), ty, FiniteFunction.lazy(
            product(lift(ty).carrier, env), ty.carrier,
            lambda p: m.mult(y.carrier, p[0])))

    return MonadOnD(adj, m.name, lift, map_mor, unit_at, mult_at, base=m)


def check_reader_category(adj: ReaderAdjunction,
                          universe: Sequence[FiniteType] = (BOOL,),
                          sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """∗-composition is associative with ``pr₁`` as two-sided identity."""
    objs = [adj.apply_F_obj(x) for x in universe]

    def homs(a, b):
        return [DMorphism(adj.name, a, b, p) for p in
                sampling.functions(adj.hom_domain(a), b.carrier)]

    def triples():
        for a, b, c, d in itertools.product(objs, repeat=4):
            for f, g, h in itertools.product(homs(a, b), homs(b, c), homs(c, d)):
                yield (h, g, f)

    def assoc(h, g, f):
        lhs = reader_compose(h, reader_compose(g, f))
        rhs = reader_compose(reader_compose(h, g), f)
        return lhs.payload == rhs.payload

    def singles():
        for a, b in itertools.product(objs, repeat=2):
            for f in homs(a, b):
                yield (f,)

    return LawReport(f"reader-category:{adj.name}", [
        law("composition associativity", triples(), assoc, "h∗(g∗f) = (h∗g)∗f"),
        law("left identity", singles(),
            lambda f: reader_compose(adj.identity(f.target), f).payload == f.payload,
            "pr₁∗f = f"),
        law("right identity", singles(),
            lambda f: reader_compose(f, adj.identity(f.source)).payload == f.payload,
            "f∗pr₁ = f"),
    ])


def curry(k: DMorphism, env: FiniteType) -> FiniteFunction:
    x, y = k.source.carrier, k.target.carrier
    return FiniteFunction.tabulate(x, exponential(y, env), lambda a: (
        FiniteFunction.tabulate(env, y, lambda e: k.payload((a, e)))))


def kleisli_spot_check(adj: ReaderAdjunction, x: FiniteType = BOOL,
                       y: FiniteType = BOOL,
                       sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """Compare D with the Kleisli category of the reader monad under currying.

    Hom-set sizes agree, and currying turns ∗-composition into Kleisli
    composition ``(g' <=< f')(a) = e ↦ g'(f'(a)(e))(e)``.
    """
    env = adj.env_type
    dx, dy = adj.apply_F_obj(x), adj.apply_F_obj(y)
    d_size = y.size ** (x.size * env.size)
    k_size = exponential(y, env).size ** x.size
    size_check = Check("hom-set sizes agree", 1,
                       [] if d_size == k_size else [f"{d_size} vs {k_size}"],
                       "|C(X×E, Y)| = |C(X, Y^E)|")

    fs = [DMorphism(adj.name, dx, dy, p) for p in
          sampling.subset(sampling.functions(adj.hom_domain(dx), y), 8, "kl-f")]

    def kleisli(g2, f2):
        return FiniteFunction.tabulate(x, g2.codomain, lambda a: (
            FiniteFunction.tabulate(env, y, lambda e: g2(f2(a)(e))(e))))

    def agrees(g, f):
        return same(curry(reader_compose(g, f), env), kleisli(curry(g, env), curry(f, env)))

    report = LawReport(f"kleisli:{adj.name}", [size_check])
    report.checks.append(law("composition agrees under currying",
                             itertools.product(fs, fs), agrees,
                             "curry(g∗f) = curry(g) <=< curry(f)"))
    return report


def derived_reader_join(m: MonadDescriptor, t: Strength, e: FiniteType, h: Any,
                        x: FiniteType) -> Any:
    """Multiplication of the monad translated from ``m`` along the reader
    adjunction; ``h`` is a value of ``(T((TX)^E))^E``."""
    if not isinstance(h, FiniteFunction) or h.domain != e:
        raise ShapeError(f"expected a table over {e.name}, got {h!r}")
    adj = make_reader_adjunction(e)
    p = translate(adj, lift_monad_to_reader(m, t, adj))
    return shaped(p.mult, x, h)

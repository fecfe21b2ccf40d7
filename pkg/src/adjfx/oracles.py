"""Textbook monad transformers, used only as references.

Each is written straight from the usual ``StateT``/``WriterT``/``ReaderT``/
``ErrorT`` definitions in terms of the base monad's ``bind`` and ``return``.
Nothing here touches adjunctions or liftings, so agreement with the
translated monads is evidence rather than tautology.
"""

from __future__ import annotations

from typing import Any, Sequence

from .finite import (
    DEFAULT_SAMPLING, FiniteFunction, FiniteType, Inl, Inr, Sampling,
    coproduct, exponential, product,
)
from .laws import LawReport, law, same
from .monads import Monoid, MonadDescriptor

__all__ = [
    "oracle_state", "oracle_writer", "oracle_reader", "oracle_error",
    "check_agreement",
]


def _bind(m: MonadDescriptor, v: Any, src: FiniteType, tgt: FiniteType, k) -> Any:
    """``v >>= k`` with ``v : T src`` and ``k : src → T tgt``."""
    step = FiniteFunction.lazy(src, m.lift_type(tgt), k)
    return m.mult(tgt, m.map(step, v))


def oracle_state(m: MonadDescriptor, s: FiniteType) -> MonadDescriptor:
    """``StateT s m``: ``S → T(X×S)``."""

    def lift_type(x):
        return exponential(m.lift_type(product(x, s)), s)

    def run(x, body):
        return FiniteFunction.tabulate(s, m.lift_type(product(x, s)), body)

    def fmap(f, g):
        x, y = f.domain, f.codomain
        first = FiniteFunction.lazy(product(x, s), product(y, s),
                                    lambda p: (f(p[0]), p[1]))
        return run(y, lambda st: m.map(first, g(st)))

    def unit(x, a):
        return run(x, lambda st: m.unit(product(x, s), (a, st)))

    def join(x, g):
        # \s -> do (f, s') <- g s; f s'
        xs = product(x, s)
        return run(x, lambda st: _bind(m, g(st), product(lift_type(x), s), xs,
                                       lambda p: p[0](p[1])))

    return MonadDescriptor(f"StateT[{s.name}]({m.name})", lift_type, fmap, unit, join)


def oracle_writer(m: MonadDescriptor, mon: Monoid) -> MonadDescriptor:
    """``WriterT w m``: ``T(X×M)``; inner log ``n`` then outer ``k`` gives ``n·k``."""
    w = mon.carrier

    def lift_type(x):
        return m.lift_type(product(x, w))

    def fmap(f, c):
        first = FiniteFunction.lazy(product(f.domain, w), product(f.codomain, w),
                                    lambda p: (f(p[0]), p[1]))
        return m.map(first, c)

    def unit(x, a):
        return m.unit(product(x, w), (a, mon.unit_elem))

    def join(x, z):
        # do (c, k) <- z; (a, n) <- c; return (a, n <> k)
        xw = product(x, w)

        def outer(p):
            c, k = p
            return _bind(m, c, xw, xw,
                         lambda q: m.unit(xw, (q[0], mon.op(q[1], k))))

        return _bind(m, z, product(lift_type(x), w), xw, outer)

    return MonadDescriptor(f"WriterT[{mon.name}]({m.name})", lift_type, fmap, unit, join)


def oracle_reader(m: MonadDescriptor, e: FiniteType) -> MonadDescriptor:
    """``ReaderT e m``: ``E → TX``."""

    def lift_type(x):
        return exponential(m.lift_type(x), e)

    def fmap(f, g):
        return FiniteFunction.tabulate(e, m.lift_type(f.codomain),
                                       lambda env: m.map(f, g(env)))

    def unit(x, a):
        return FiniteFunction.tabulate(e, m.lift_type(x), lambda env: m.unit(x, a))

    def join(x, h):
        # \e -> h e >>= \f -> f e
        return FiniteFunction.tabulate(e, m.lift_type(x), lambda env: _bind(
            m, h(env), lift_type(x), x, lambda f: f(env)))

    return MonadDescriptor(f"ReaderT[{e.name}]({m.name})", lift_type, fmap, unit, join)


def oracle_error(m: MonadDescriptor, e: FiniteType) -> MonadDescriptor:
    """``ErrorT e m``: ``T(E+X)``; ``Left`` for errors, ``Right`` for values."""

    def lift_type(x):
        return m.lift_type(coproduct(e, x))

    def fmap(f, c):
        right = FiniteFunction.lazy(coproduct(e, f.domain), coproduct(e, f.codomain),
                                    lambda v: Inr(f(v.value)) if isinstance(v, Inr) else v)
        return m.map(right, c)

    def unit(x, a):
        return m.unit(coproduct(e, x), Inr(a))

    def join(x, z):
        # z >>= \y -> case y of Left err -> return (Left err); Right c -> c
        ex = coproduct(e, x)

        def step(y):
            if isinstance(y, Inl):
                return m.unit(ex, Inl(y.value))
            return y.value

        return _bind(m, z, coproduct(e, lift_type(x)), ex, step)

    return MonadDescriptor(f"ErrorT[{e.name}]({m.name})", lift_type, fmap, unit, join)


def check_agreement(derived: MonadDescriptor, oracle: MonadDescriptor,
                    universe: Sequence[FiniteType],
                    sampling: Sampling = DEFAULT_SAMPLING) -> LawReport:
    """Pointwise comparison of two monads' object action, unit, map and join."""

    def types():
        for x in universe:
            yield (x, derived.lift_type(x), oracle.lift_type(x))

    def units():
        for x in universe:
            for a in x:
                yield (x, a)

    def joins():
        for x in universe:
            for v in sampling.values(derived.lift_type(derived.lift_type(x)), "join"):
                yield (x, v)

    def maps():
        for x in universe:
            for y in universe:
                fs = sampling.subset(sampling.functions(x, y), 4, "agree-map", x, y)
                for v in sampling.values(derived.lift_type(x), "map", weight=len(fs)):
                    for f in fs:
                        yield (f, v)

    return LawReport(f"agreement:{derived.name}~{oracle.name}", [
        law("same object action", types(),
            lambda x, a, b: a == b and a.size == b.size, "PX = oracle X"),
        law("unit agrees", units(),
            lambda x, a: same(derived.unit(x, a), oracle.unit(x, a)), "e^P = return"),
        law("map agrees", maps(),
            lambda f, v: same(derived.map(f, v), oracle.map(f, v)), "P(f) = fmap f"),
        law("join agrees", joins(),
            lambda x, v: same(derived.mult(x, v), oracle.mult(x, v)), "m^P = join"),
    ])

"""Evaluating demo programs in a translated effect stack.

The interpreter monad is error(writer(state(Identity))): state over 16-bit
integers, a log of integers, and errors outermost, each layer obtained by
translating the one below along its adjunction.  A run maps the initial
state to ``((Left err | Right value, log), final state)``, so the log and
state reached before a failure survive it.

Arithmetic wraps to 16 bits; ``/`` is floor division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from ..finite import (
    FiniteFunction, FiniteType, Inl, Inr, Seq, atoms, coproduct,
    integer_range, list_type, product,
)
from ..monads import IDENTITY, Monoid, MonadDescriptor, canonical_strength
from ..oracles import oracle_error, oracle_state, oracle_writer
from ..translation import Layer, stack
from ..instances.error import lift_monad_to_coslice, make_error_adjunction
from ..instances.state import lift_monad_trivially, make_state_adjunction
from ..instances.writer import lift_monad_to_mset, make_writer_adjunction
from .parser import Ask, BinOp, DemoProgram, Get, Let, Log, Num, Put, Var, identifiers

__all__ = [
    "INT16", "LOG_MONOID", "DIVISION_BY_ZERO", "wrap", "EffectStack",
    "derived_stack", "oracle_stack", "eval_program", "DemoResult",
]

INT16 = integer_range("Int16", -32768, 65536)
DIVISION_BY_ZERO = "division by zero"


def wrap(n: int) -> int:
    return (n + 32768) % 65536 - 32768


# The writer join puts the inner (later) log on the left, so concatenating
# in reverse keeps the log in chronological order.
LOG_MONOID = Monoid("(List(Int16),reversed ++)", list_type(INT16, 3),
                    lambda a, b: b + a, Seq(()))


def error_type(names) -> FiniteType:
    msgs = [DIVISION_BY_ZERO] + [f"unbound identifier: {n}" for n in sorted(names)]
    return atoms("Err{" + "|".join(msgs) + "}", msgs)


@dataclass
class EffectStack:
    """The three layers of a stack, innermost first, with their operations."""

    state: MonadDescriptor
    writer: MonadDescriptor
    error: MonadDescriptor
    errors: FiniteType
    kind: str

    @property
    def top(self) -> MonadDescriptor:
        return self.error

    # lifting an inner computation one layer up
    def _writer_lift(self, x: FiniteType, c: Any) -> Any:
        xm = product(x, LOG_MONOID.carrier)
        quiet = FiniteFunction.lazy(x, xm, lambda a: (a, LOG_MONOID.unit_elem))
        return self.state.map(quiet, c)

    def _error_lift(self, x: FiniteType, c: Any) -> Any:
        return self.writer.map(FiniteFunction.lazy(x, coproduct(self.errors, x), Inr), c)

    def get(self) -> Any:
        s = INT16
        c = FiniteFunction.tabulate(s, product(INT16, s), lambda st: (st, st))
        return self._error_lift(INT16, self._writer_lift(INT16, c))

    def put(self, n: int) -> Any:
        s = INT16
        c = FiniteFunction.tabulate(s, product(INT16, s), lambda st: (n, n))
        return self._error_lift(INT16, self._writer_lift(INT16, c))

    def log(self, n: int) -> Any:
        entry = self.state.unit(product(INT16, LOG_MONOID.carrier), (n, Seq((n,))))
        return self._error_lift(INT16, entry)

    def throw(self, err: str) -> Any:
        return self.writer.unit(coproduct(self.errors, INT16), Inl(err))

    def pure(self, n: int) -> Any:
        return self.top.unit(INT16, n)

    def bind(self, c: Any, k: Callable[[int], Any]) -> Any:
        step = FiniteFunction.lazy(INT16, self.top.lift_type(INT16), k)
        return self.top.mult(INT16, self.top.map(step, c))


def derived_stack(errors: FiniteType) -> EffectStack:
    layers = [
        Layer(make_error_adjunction(errors),
              lambda m, a: lift_monad_to_coslice(m, a, verify=False)),
        Layer(make_writer_adjunction(LOG_MONOID),
              lambda m, a: lift_monad_to_mset(m, canonical_strength(m), a, verify=False)),
        Layer(make_state_adjunction(INT16), lift_monad_trivially),
    ]
    # the operations need each intermediate monad, so build the stack
    # one layer at a time
    state = stack(layers[2:], IDENTITY)
    writer = stack(layers[1:2], state)
    error = stack(layers[:1], writer)
    return EffectStack(state, writer, error, errors, "derived")


def oracle_stack(errors: FiniteType) -> EffectStack:
    state = oracle_state(IDENTITY, INT16)
    writer = oracle_writer(state, LOG_MONOID)
    error = oracle_error(writer, errors)
    return EffectStack(state, writer, error, errors, "oracle")


@dataclass
class DemoResult:
    value: int | None
    error: str | None
    log: list[int] = field(default_factory=list)
    final_state: int = 0

    def as_dict(self) -> dict:
        return {"value": self.value, "error": self.error, "log": self.log,
                "final_state": self.final_state}


_OPS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
}


def eval_program(p: DemoProgram, env: Mapping[str, int] | None = None,
                 init_state: int = 0, stack_kind: str = "derived") -> DemoResult:
    if stack_kind not in ("derived", "oracle"):
        raise ValueError(f"unknown stack {stack_kind!r}")
    env = {k: wrap(v) for k, v in (env or {}).items()}
    errors = error_type(identifiers(p.ast))
    fx = derived_stack(errors) if stack_kind == "derived" else oracle_stack(errors)

    def ev(e, scope: Mapping[str, int]) -> Any:
        if isinstance(e, Num):
            return fx.pure(wrap(e.value))
        if isinstance(e, Var):
            if e.name not in scope:
                return fx.throw(f"unbound identifier: {e.name}")
            return fx.pure(scope[e.name])
        if isinstance(e, Ask):
            if e.name not in env:
                return fx.throw(f"unbound identifier: {e.name}")
            return fx.pure(env[e.name])
        if isinstance(e, Get):
            return fx.get()
        if isinstance(e, Log):
            return fx.bind(ev(e.arg, scope), fx.log)
        if isinstance(e, Put):
            return fx.bind(ev(e.arg, scope), fx.put)
        if isinstance(e, Let):
            return fx.bind(ev(e.bound, scope),
                           lambda v: ev(e.body, {**scope, e.name: v}))
        if isinstance(e, BinOp):
            def right(a):
                return fx.bind(ev(e.right, scope), lambda b: arith(e.op, a, b))
            return fx.bind(ev(e.left, scope), right)
        raise TypeError(f"not an expression: {e!r}")

    def arith(op, a, b):
        if op == "/":
            if b == 0:
                return fx.throw(DIVISION_BY_ZERO)
            return fx.pure(wrap(a // b))
        return fx.pure(wrap(_OPS[op](a, b)))

    run = ev(p.ast, {})
    (outcome, log), final = run(wrap(init_state))
    if isinstance(outcome, Inl):
        return DemoResult(None, outcome.value, list(log), final)
    return DemoResult(outcome.value, None, list(log), final)

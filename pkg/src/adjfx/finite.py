"""Finite carriers, tabulated functions and extensional equality.

Every object the law checks touch is a :class:`FiniteType`: a named, ordered
finite set addressed by index.  Types are never materialised unless asked
to; composite carriers (products, sums, bounded lists, exponentials) unrank
an index on demand, so a type with 10**150 elements can still be sampled.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator

__all__ = [
    "STAR", "Some", "Nothing", "NOTHING", "Inl", "Inr", "Seq",
    "FiniteType", "FiniteFunction", "Sampling", "DEFAULT_SAMPLING",
    "TypeMismatch", "UnknownTypeError", "DomainError",
    "UNIT", "BOOL", "Z2", "Z3", "Z4", "REGISTRY", "lookup",
    "atoms", "integer_range", "product", "coproduct", "option_type",
    "list_type", "exponential", "identity", "compose",
    "enumerate_values", "enumerate_functions", "sample_elements",
    "extensional_equal",
]

#: The single element of the terminal object.
STAR = "*"

# Memo-lazy instead of eager tabulation above this many domain points.
TABULATE_LIMIT = 4096


class TypeMismatch(TypeError):
    """Two values being compared do not inhabit the same semantic type."""


class UnknownTypeError(LookupError):
    pass


class DomainError(ValueError):
    """A tabulated function was applied outside its domain."""


# ---------------------------------------------------------------------------
# canonical value constructors


@dataclass(frozen=True)
class Some:
    value: Any

    def __repr__(self) -> str:
        return f"Some({self.value!r})"


@dataclass(frozen=True)
class Nothing:
    def __repr__(self) -> str:
        return "Nothing"


NOTHING = Nothing()


@dataclass(frozen=True)
class Inl:
    value: Any

    def __repr__(self) -> str:
        return f"inl({self.value!r})"


@dataclass(frozen=True)
class Inr:
    value: Any

    def __repr__(self) -> str:
        return f"inr({self.value!r})"


class Seq(tuple):
    """A list value.  Distinct from pairs, which are plain tuples."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "[" + ", ".join(map(repr, self)) + "]"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Seq) and tuple.__eq__(self, other)

    def __ne__(self, other: object) -> bool:
        return not self == other

    def __hash__(self) -> int:
        return hash(("Seq", tuple(self)))

    def __add__(self, other: tuple) -> "Seq":
        return Seq(tuple.__add__(self, other))


# ---------------------------------------------------------------------------
# finite types


class FiniteType:
    """A named finite set with a deterministic order.

    ``size`` may be given lazily as a thunk; exponentials over large
    domains have sizes with millions of digits that are never needed.
    Equality is by name, and names are built structurally by the
    constructors below, so two independently built ``Option((Bool×Z2))``
    compare equal.
    """

    __slots__ = ("name", "_size", "_unrank", "_elements")

    def __init__(self, name: str, size: int | Callable[[], int],
                 unrank: Callable[[int], Any]):
        self.name = name
        self._size = size
        self._unrank = unrank
        self._elements: tuple | None = None

    @property
    def size(self) -> int:
        if callable(self._size):
            self._size = self._size()
        return self._size

    def element(self, index: int) -> Any:
        if not 0 <= index < self.size:
            raise IndexError(f"{self.name} has no element #{index}")
        return self._unrank(index)

    def __iter__(self) -> Iterator[Any]:
        if self._elements is not None:
            return iter(self._elements)
        return map(self._unrank, range(self.size))

    @property
    def elements(self) -> tuple:
        if self._elements is None:
            if self.size > 1_000_000:
                raise ValueError(f"refusing to materialise {self.name} "
                                 f"({self.size} elements)")
            self._elements = tuple(map(self._unrank, range(self.size)))
        return self._elements

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteType) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"FiniteType({self.name})"

    def __str__(self) -> str:
        return self.name


def atoms(name: str, values: Iterable[Any]) -> FiniteType:
    vals = tuple(values)
    if len(set(vals)) != len(vals):
        raise ValueError(f"elements of {name} are not pairwise distinct")
    t = FiniteType(name, len(vals), vals.__getitem__)
    t._elements = vals
    return t


def integer_range(name: str, start: int, count: int) -> FiniteType:
    return FiniteType(name, count, lambda i: start + i)


def _grouped(name: str) -> str:
    """Parenthesise ``name`` unless it already reads as one unit."""
    if name.isalnum():
        return name
    depth = 0
    for i, ch in enumerate(name):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(name) - 1:
                break
        elif depth == 0 and ch in "×+^ ":
            break
    else:
        if name.endswith(")"):
            return name
    return f"({name})"


@functools.lru_cache(maxsize=None)
def product(a: FiniteType, b: FiniteType) -> FiniteType:
    def unrank(i: int) -> tuple:
        q, r = divmod(i, b.size)
        return (a._unrank(q), b._unrank(r))

    return FiniteType(f"({a.name}×{b.name})", lambda: a.size * b.size, unrank)


@functools.lru_cache(maxsize=None)
def coproduct(a: FiniteType, b: FiniteType) -> FiniteType:
    def unrank(i: int) -> Inl | Inr:
        if i < a.size:
            return Inl(a._unrank(i))
        return Inr(b._unrank(i - a.size))

    return FiniteType(f"({a.name}+{b.name})", lambda: a.size + b.size, unrank)


@functools.lru_cache(maxsize=None)
def option_type(a: FiniteType) -> FiniteType:
    def unrank(i: int) -> Some | Nothing:
        return NOTHING if i == 0 else Some(a._unrank(i - 1))

    return FiniteType(f"Option({a.name})", lambda: a.size + 1, unrank)


@functools.lru_cache(maxsize=None)
def list_type(a: FiniteType, cap: int) -> FiniteType:
    """Lists over ``a`` of length at most ``cap``, shortest first.

    Only the enumeration is bounded: list operations may build longer
    lists, which are still valid values of the underlying list type.
    """

    def size() -> int:
        return sum(a.size ** k for k in range(cap + 1))

    def unrank(i: int) -> Seq:
        n = a.size
        for length in range(cap + 1):
            block = n ** length
            if i < block:
                digits = []
                for _ in range(length):
                    i, r = divmod(i, n)
                    digits.append(a._unrank(r))
                return Seq(reversed(digits))
            i -= block
        raise IndexError(i)

    return FiniteType(f"List≤{cap}({a.name})", size, unrank)


@functools.lru_cache(maxsize=None)
def exponential(cod: FiniteType, dom: FiniteType) -> FiniteType:
    """The function space ``cod^dom``; elements are tabulated functions."""

    def unrank(i: int) -> FiniteFunction:
        n = cod.size
        points = list(dom)
        values = [None] * len(points)
        for k in range(len(points) - 1, -1, -1):
            i, r = divmod(i, n)
            values[k] = cod._unrank(r)
        return FiniteFunction(dom, cod, table=dict(zip(points, values)))

    return FiniteType(f"{_grouped(cod.name)}^{_grouped(dom.name)}",
                      lambda: cod.size ** dom.size, unrank)


UNIT = atoms("1", [STAR])
BOOL = atoms("Bool", [False, True])
Z2 = atoms("Z2", range(2))
Z3 = atoms("Z3", range(3))
Z4 = atoms("Z4", range(4))

REGISTRY: dict[str, FiniteType] = {
    "1": UNIT, "𝟙": UNIT, "Unit": UNIT,
    "Bool": BOOL, "Z2": Z2, "Z3": Z3, "Z4": Z4,
}


def lookup(name: str) -> FiniteType:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownTypeError(f"unknown test universe {name!r}") from None


# ---------------------------------------------------------------------------
# functions


class FiniteFunction:
    """A function between finite types.

    Three representations share one interface:

    * tabulated: a complete ``table``; used for every exponential value;
    * memo-lazy: ``fn`` plus a partial table filled as points are hit,
      for exponentials whose domain is too large to fill up front;
    * lazy: ``fn`` only, for morphisms whose domain is a big composite
      type (these are applied, never stored inside values).

    Equality and hashing are extensional, over the whole domain.
    """

    __slots__ = ("domain", "codomain", "_fn", "_table", "_hash")

    def __init__(self, domain: FiniteType, codomain: FiniteType,
                 fn: Callable[[Any], Any] | None = None, *,
                 table: dict | None = None):
        if fn is None and table is None:
            raise ValueError("need a callable or a table")
        self.domain = domain
        self.codomain = codomain
        self._fn = fn
        self._table = table
        self._hash: int | None = None

    @classmethod
    def tabulate(cls, domain: FiniteType, codomain: FiniteType,
                 fn: Callable[[Any], Any]) -> "FiniteFunction":
        if domain.size <= TABULATE_LIMIT:
            return cls(domain, codomain, table={x: fn(x) for x in domain})
        return cls(domain, codomain, fn, table={})

    @classmethod
    def lazy(cls, domain: FiniteType, codomain: FiniteType,
             fn: Callable[[Any], Any]) -> "FiniteFunction":
        return cls(domain, codomain, fn)

    @classmethod
    def from_values(cls, domain: FiniteType, codomain: FiniteType,
                    values: Iterable[Any]) -> "FiniteFunction":
        """Build from values listed in the domain's canonical order."""
        table = dict(zip(domain, values))
        if len(table) != domain.size:
            raise ValueError("table is not total on the domain")
        return cls(domain, codomain, table=table)

    def __call__(self, x: Any) -> Any:
        table = self._table
        if table is not None:
            try:
                return table[x]
            except KeyError:
                if self._fn is None:
                    raise DomainError(
                        f"{x!r} is not in domain {self.domain.name}") from None
            y = self._fn(x)
            table[x] = y
            return y
        return self._fn(x)

    @property
    def tabulated(self) -> bool:
        return self._table is not None and self._fn is None

    def values(self) -> tuple:
        return tuple(self(x) for x in self.domain)

    def items(self) -> list[tuple[Any, Any]]:
        return [(x, self(x)) for x in self.domain]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        if self is other:
            return True
        return self.domain == other.domain and self.values() == other.values()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain.name, self.values()))
        return self._hash

    def __repr__(self) -> str:
        if self.domain.size <= 16 and (self.tabulated or self.domain.size <= 4):
            body = ", ".join(f"{x!r}↦{y!r}" for x, y in self.items())
            return "{" + body + "}"
        return f"<function {self.domain.name}→{self.codomain.name}>"


def identity(t: FiniteType) -> FiniteFunction:
    return FiniteFunction.lazy(t, t, lambda x: x)


def compose(g: FiniteFunction, f: FiniteFunction) -> FiniteFunction:
    """``g ∘ f``."""
    return FiniteFunction.lazy(f.domain, g.codomain, lambda x: g(f(x)))


# ---------------------------------------------------------------------------
# enumeration and sampling


def enumerate_values(t: FiniteType | str) -> list:
    if isinstance(t, str):
        t = lookup(t)
    return list(t.elements)


def sample_elements(t: FiniteType, k: int, rng: random.Random) -> list:
    """``k`` distinct elements of ``t`` (all of them if ``t`` is smaller).

    The first and last elements are always included: for lists and options
    those are the empty value and a maximal one.
    """
    n = t.size
    if n <= k:
        return list(t)
    chosen: list[int] = []
    seen: set[int] = set()
    for i in (0, n - 1):
        if len(chosen) < k and i not in seen:
            chosen.append(i)
            seen.add(i)
    while len(chosen) < k:
        i = rng.randrange(n)
        if i not in seen:
            seen.add(i)
            chosen.append(i)
    return [t._unrank(i) for i in chosen]


def enumerate_functions(dom: FiniteType, cod: FiniteType, cap: int = 256,
                        seed: int = 42,
                        sample_size: int | None = None) -> list[FiniteFunction]:
    """All functions ``dom → cod`` if there are at most ``cap`` of them.

    Otherwise a seeded sample of ``sample_size`` (default: ``cap``)
    distinct functions, identical for identical arguments.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    space = exponential(cod, dom)
    if space.size <= cap:
        return list(space)
    rng = random.Random(f"functions:{seed}:{space.name}")
    return sample_elements(space, sample_size or cap, rng)


@dataclass(frozen=True)
class Sampling:
    """How exhaustive a check may be.

    A check enumerates an object in full when ``size * weight`` stays within
    ``exhaustive_limit`` cases, and otherwise draws ``sample_size`` seeded
    values.  Function spaces are enumerated up to ``function_cap``.
    """

    seed: int = 42
    sample_size: int = 64
    exhaustive_limit: int = 10_000
    function_cap: int = 256

    def rng(self, *salt: object) -> random.Random:
        return random.Random(":".join(map(str, (self.seed, *salt))))

    def values(self, t: FiniteType, *salt: object, weight: int = 1) -> list:
        if t.size * max(weight, 1) <= self.exhaustive_limit:
            return list(t)
        return sample_elements(t, self.sample_size, self.rng(t.name, *salt))

    def functions(self, dom: FiniteType, cod: FiniteType) -> list[FiniteFunction]:
        return enumerate_functions(dom, cod, self.function_cap, self.seed,
                                   self.sample_size)

    def subset(self, items: list, limit: int, *salt: object) -> list:
        """At most ``limit`` items, keeping the original order."""
        if len(items) <= limit:
            return items
        picked = sorted(self.rng("subset", len(items), *salt)
                        .sample(range(len(items)), limit))
        return [items[i] for i in picked]


DEFAULT_SAMPLING = Sampling()


# ---------------------------------------------------------------------------
# extensional equality

_FAMILIES = {Some: "option", Nothing: "option", Inl: "sum", Inr: "sum"}


def extensional_equal(a: Any, b: Any) -> bool:
    """Structural equality, comparing embedded functions pointwise.

    Raises :class:`TypeMismatch` when the two values cannot inhabit the
    same type (a pair against a list, a bool against an int, functions
    over different domains, ...).
    """
    if isinstance(a, FiniteFunction) or isinstance(b, FiniteFunction):
        if not (isinstance(a, FiniteFunction) and isinstance(b, FiniteFunction)):
            raise TypeMismatch(f"function vs non-function: {a!r} / {b!r}")
        if a.domain != b.domain:
            raise TypeMismatch(f"domains differ: {a.domain} / {b.domain}")
        if a is b:
            return True
        return all(extensional_equal(a(x), b(x)) for x in a.domain)
    ta, tb = type(a), type(b)
    if ta is not tb:
        fam = _FAMILIES.get(ta)
        if fam is not None and fam == _FAMILIES.get(tb):
            return False
        raise TypeMismatch(f"{ta.__name__} vs {tb.__name__}: {a!r} / {b!r}")
    if ta is Seq:
        return len(a) == len(b) and all(map(extensional_equal, a, b))
    if ta is tuple:
        if len(a) != len(b):
            raise TypeMismatch(f"tuples of different arity: {a!r} / {b!r}")
        return all(map(extensional_equal, a, b))
    if ta in (Some, Inl, Inr):
        return extensional_equal(a.value, b.value)
    return a == b

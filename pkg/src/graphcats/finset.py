"""Finite sets, total functions, and the set-level constructions.

Atoms are plain hashable Python values drawn from a small grammar:

* ``str`` and ``int`` labels,
* ``tuple`` of atoms (products, tags),
* ``frozenset`` of atoms (subset-atoms from :func:`powerset`),
* :class:`MapAtom` (a function treated as an element, from :func:`all_functions`),
* :class:`HomAtom` (a morphism treated as an element, used by exponentials).

Every atom has a canonical text form (:func:`atom_text`).  Carriers are kept
sorted by that text, so iteration order never depends on hashing or on the
order in which elements were produced.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
import json
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Atom = Hashable


class SizeError(ValueError):
    """A construction would exceed one of the configured size bounds."""


@dataclass(frozen=True)
class Bounds:
    """Size limits for the constructions that blow up exponentially.

    Each limit caps the number of elements a construction may produce.
    ``powerset`` is 2**16, i.e. subsets of at most 16 atoms.
    """

    powerset: int = 2**16
    functions: int = 4096
    homs: int = 200_000
    upsilon_star: int = 4096

    def override(self, n: int) -> "Bounds":
        return Bounds(powerset=n, functions=n, homs=self.homs, upsilon_star=max(n, self.upsilon_star))


DEFAULT_BOUNDS = Bounds()


# --------------------------------------------------------------------------
# atoms


@dataclass(frozen=True)
class MapAtom:
    """A finite function used as an atom: its graph, sorted by argument."""

    pairs: tuple

    @classmethod
    def from_dict(cls, d: Mapping) -> "MapAtom":
        return cls(tuple(sorted(d.items(), key=lambda kv: atom_text(kv[0]))))

    def as_dict(self) -> dict:
        return dict(self.pairs)

    def __call__(self, x):
        for a, b in self.pairs:
            if a == x:
                return b
        raise KeyError(x)

    def keys(self):
        return [a for a, _ in self.pairs]


@dataclass(frozen=True)
class HomAtom:
    """A morphism used as an atom: one :class:`MapAtom` per sort."""

    parts: tuple  # ((sort name, MapAtom), ...)

    def __getitem__(self, sort: str) -> MapAtom:
        for name, m in self.parts:
            if name == sort:
                return m
        raise KeyError(sort)


@lru_cache(maxsize=1 << 18)
def atom_text(a: Atom) -> str:
    """Canonical text of an atom; equal atoms and only equal atoms share it."""
    if isinstance(a, bool):
        raise TypeError("booleans are not atoms")
    if isinstance(a, str):
        return json.dumps(a, ensure_ascii=False)
    if isinstance(a, int):
        return str(a)
    if isinstance(a, tuple):
        return "(" + ",".join(atom_text(x) for x in a) + ")"
    if isinstance(a, frozenset):
        return "{" + ",".join(sorted(atom_text(x) for x in a)) + "}"
    if isinstance(a, MapAtom):
        return "<" + ",".join(atom_text(x) + ":" + atom_text(y) for x, y in a.pairs) + ">"
    if isinstance(a, HomAtom):
        return "hom[" + ";".join(f"{s}={atom_text(m)}" for s, m in a.parts) + "]"
    raise TypeError(f"not an atom: {a!r}")


def sort_atoms(xs: Iterable[Atom]) -> list:
    return sorted(xs, key=atom_text)


# --------------------------------------------------------------------------
# sets and functions


class FiniteSet:
    """An immutable finite set of atoms with a stable iteration order."""

    __slots__ = ("elements", "_members", "_hash")

    def __init__(self, elements: Iterable[Atom] = ()):
        members = frozenset(elements)
        for x in members:
            atom_text(x)
        self._members = members
        self.elements = tuple(sort_atoms(members))
        self._hash = None

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSet) and self._members == other._members

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._members)
        return self._hash

    def __repr__(self) -> str:
        return "FiniteSet{" + ", ".join(atom_text(x) for x in self.elements) + "}"

    @property
    def members(self) -> frozenset:
        return self._members

    def index(self, x) -> int:
        return self.elements.index(x)


EMPTY = FiniteSet()


class FiniteFunction:
    """A total function between finite sets."""

    __slots__ = ("dom", "cod", "_map", "_hash")

    def __init__(self, dom: FiniteSet, cod: FiniteSet, mapping: Mapping | Callable):
        if callable(mapping) and not isinstance(mapping, Mapping):
            mapping = {x: mapping(x) for x in dom}
        m = dict(mapping)
        if m.keys() != dom.members:
            missing = [x for x in dom if x not in m]
            extra = [x for x in m if x not in dom]
            raise ValueError(
                f"function is not total on its domain (missing {[atom_text(x) for x in missing]}, "
                f"extra {[atom_text(x) for x in extra]})"
            )
        for x, y in m.items():
            if y not in cod:
                raise ValueError(f"image {atom_text(y)} of {atom_text(x)} lies outside the codomain")
        self.dom = dom
        self.cod = cod
        self._map = m
        self._hash = None

    @classmethod
    def unchecked(cls, dom: FiniteSet, cod: FiniteSet, mapping: dict) -> "FiniteFunction":
        """Build without validation; callers guarantee totality."""
        f = object.__new__(cls)
        f.dom, f.cod, f._map, f._hash = dom, cod, mapping, None
        return f

    @classmethod
    def identity(cls, X: FiniteSet) -> "FiniteFunction":
        return cls(X, X, {x: x for x in X})

    @classmethod
    def constant(cls, X: FiniteSet, Y: FiniteSet, y) -> "FiniteFunction":
        return cls(X, Y, {x: y for x in X})

    @classmethod
    def empty(cls, Y: FiniteSet) -> "FiniteFunction":
        return cls(EMPTY, Y, {})

    @classmethod
    def inclusion(cls, X: FiniteSet, Y: FiniteSet) -> "FiniteFunction":
        return cls(X, Y, {x: x for x in X})

    def __call__(self, x):
        return self._map[x]

    def items(self):
        return ((x, self._map[x]) for x in self.dom)

    def as_dict(self) -> dict:
        return dict(self._map)

    def __matmul__(self, other: "FiniteFunction") -> "FiniteFunction":
        """``g @ f`` is the composite g after f."""
        if other.cod != self.dom:
            raise ValueError("cannot compose: codomain and domain differ")
        return FiniteFunction.unchecked(other.dom, self.cod, {x: self._map[y] for x, y in other._map.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteFunction)
            and self.dom == other.dom
            and self.cod == other.cod
            and self._map == other._map
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, frozenset(self._map.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{atom_text(x)}->{atom_text(y)}" for x, y in self.items())
        return f"FiniteFunction({body})"

    def is_injective(self) -> bool:
        return len(set(self._map.values())) == len(self._map)

    def is_surjective(self) -> bool:
        return set(self._map.values()) == self.cod.members

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def image(self) -> FiniteSet:
        return FiniteSet(self._map.values())

    def preimage(self, y) -> list:
        return [x for x in self.dom if self._map[x] == y]

    def inverse(self) -> "FiniteFunction":
        if not self.is_bijective():
            raise ValueError("function is not bijective")
        return FiniteFunction(self.cod, self.dom, {y: x for x, y in self._map.items()})

    def restrict(self, A: FiniteSet, B: FiniteSet | None = None) -> "FiniteFunction":
        return FiniteFunction(A, self.cod if B is None else B, {x: self._map[x] for x in A})

    def to_atom(self) -> MapAtom:
        return MapAtom(tuple((x, self._map[x]) for x in self.dom))


# --------------------------------------------------------------------------
# constructions


def product_set(Xs: Sequence[FiniteSet]) -> tuple[FiniteSet, list[FiniteFunction]]:
    """Cartesian product as tuples in input order, with its projections."""
    P = FiniteSet(itertools.product(*[X.elements for X in Xs]))
    projections = [FiniteFunction(P, X, {t: t[k] for t in P}) for k, X in enumerate(Xs)]
    return P, projections


def coproduct_set(Xs: Sequence[FiniteSet]) -> tuple[FiniteSet, list[FiniteFunction]]:
    """Disjoint union tagged by position, with its injections."""
    C = FiniteSet((k, x) for k, X in enumerate(Xs) for x in X)
    injections = [FiniteFunction(X, C, {x: (k, x) for x in X}) for k, X in enumerate(Xs)]
    return C, injections


class UnionFind:
    def __init__(self, X: Iterable):
        self.parent = {x: x for x in X}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        # keep the least atom as root so it becomes the class representative
        if atom_text(y) < atom_text(x):
            x, y = y, x
        self.parent[y] = x


def coequalize_set(f: FiniteFunction, g: FiniteFunction) -> tuple[FiniteSet, FiniteFunction]:
    """Quotient of the common codomain by the equivalence generated by f(x) ~ g(x).

    Each class is named by its least member.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("coequalize_set needs a parallel pair (same domain and codomain)")
    uf = UnionFind(f.cod)
    for x in f.dom:
        uf.union(f(x), g(x))
    q = {y: uf.find(y) for y in f.cod}
    classes = FiniteSet(q.values())
    return classes, FiniteFunction(f.cod, classes, q)


def powerset(X: FiniteSet, bounds: Bounds = DEFAULT_BOUNDS) -> FiniteSet:
    """All subsets of X as frozenset atoms."""
    n = len(X)
    if n >= 63 or 2**n > bounds.powerset:
        raise SizeError(f"powerset of a {n}-element set exceeds the powerset bound {bounds.powerset}")
    xs = X.elements
    return FiniteSet(frozenset(c) for r in range(n + 1) for c in itertools.combinations(xs, r))


def image_of(f: FiniteFunction, A: frozenset) -> frozenset:
    """The image {f(x) : x in A}."""
    for x in A:
        if x not in f.dom:
            raise ValueError(f"{atom_text(x)} is not in the domain of the function")
    return frozenset(f(x) for x in A)


def all_functions(X: FiniteSet, Y: FiniteSet, bounds: Bounds = DEFAULT_BOUNDS) -> FiniteSet:
    """Every total function X -> Y as a :class:`MapAtom`."""
    count = len(Y) ** len(X)
    if count > bounds.functions:
        raise SizeError(
            f"{len(Y)}^{len(X)} = {count} functions exceed the function-space bound {bounds.functions}"
        )
    xs = X.elements
    return FiniteSet(MapAtom(tuple(zip(xs, ys))) for ys in itertools.product(Y.elements, repeat=len(xs)))

"""Finite presheaves on a two-level shape, and their pointwise structure.

Quivers (vertices <- edges, two arrows) and incidence hypergraphs
(vertices <- incidences -> edges) are both functors from a small category
into finite sets in which every arrow runs from a "top" sort to a "base"
sort.  Everything here is written once for that situation: objects,
morphisms, hom-set search, and pointwise limits and colimits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Callable, ClassVar, Iterator, Sequence

from .finset import (
    FiniteFunction,
    FiniteSet,
    HomAtom,
    MapAtom,
    SizeError,
    atom_text,
    coequalize_set,
    coproduct_set,
    product_set,
)


class MorphismError(ValueError):
    """A square that should commute does not."""


@lru_cache(maxsize=None)
def _split_sorts(cls) -> tuple[tuple[str, ...], tuple[str, ...]]:
    tops = tuple(s for s in cls.SORTS if any(src == s for src, _ in cls.ARROWS.values()))
    return tops, tuple(s for s in cls.SORTS if s not in tops)


class PresheafObject:
    SORTS: ClassVar[tuple[str, ...]] = ()
    ARROWS: ClassVar[dict[str, tuple[str, str]]] = {}
    MORPHISM: ClassVar[type]

    __slots__ = ("sets", "maps", "_hash")

    def __init__(self, sets: dict[str, FiniteSet], maps: dict[str, FiniteFunction]):
        for a, (s, t) in self.ARROWS.items():
            f = maps[a]
            if f.dom != sets[s] or f.cod != sets[t]:
                raise ValueError(f"arrow {a} must run from the {s} set to the {t} set")
        self.sets = {s: sets[s] for s in self.SORTS}
        self.maps = {a: maps[a] for a in self.ARROWS}
        self._hash = None

    @classmethod
    def make(cls, sets, maps):
        obj = object.__new__(cls)
        PresheafObject.__init__(obj, sets, maps)
        return obj

    @classmethod
    def top_sorts(cls) -> tuple[str, ...]:
        return _split_sorts(cls)[0]

    @classmethod
    def base_sorts(cls) -> tuple[str, ...]:
        return _split_sorts(cls)[1]

    @classmethod
    def arrows_from(cls, sort: str) -> list[str]:
        return [a for a, (s, _) in cls.ARROWS.items() if s == sort]

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.sets == other.sets and self.maps == other.maps

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self.sets.values()), tuple(self.maps.values())))
        return self._hash

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(self.sets[s]) for s in self.SORTS)

    def __repr__(self) -> str:
        parts = ", ".join(f"{s}={len(self.sets[s])}" for s in self.SORTS)
        return f"{type(self).__name__}({parts})"

    def identity(self) -> "PresheafMorphism":
        return self.MORPHISM.make(self, self, {s: FiniteFunction.identity(X) for s, X in self.sets.items()})


class PresheafMorphism:
    __slots__ = ("dom", "cod", "comps", "_hash")

    def __init__(self, dom: PresheafObject, cod: PresheafObject, comps: dict[str, FiniteFunction]):
        if type(dom) is not type(cod):
            raise TypeError("domain and codomain live in different categories")
        for s in dom.SORTS:
            f = comps[s]
            if f.dom != dom.sets[s] or f.cod != cod.sets[s]:
                raise MorphismError(f"{s} component does not run between the {s} sets")
        for a, (s, t) in dom.ARROWS.items():
            fa, ga = dom.maps[a], cod.maps[a]
            for x in dom.sets[s]:
                if ga(comps[s](x)) != comps[t](fa(x)):
                    raise MorphismError(
                        f"square for {a} fails at {s}-element {atom_text(x)}"
                    )
        self.dom, self.cod = dom, cod
        self.comps = {s: comps[s] for s in dom.SORTS}
        self._hash = None

    @classmethod
    def make(cls, dom, cod, comps):
        """Build without checking the squares (for maps correct by construction)."""
        m = object.__new__(cls)
        m.dom, m.cod, m.comps, m._hash = dom, cod, {s: comps[s] for s in dom.SORTS}, None
        return m

    def __matmul__(self, other: "PresheafMorphism") -> "PresheafMorphism":
        if other.cod != self.dom:
            raise ValueError("cannot compose: codomain and domain differ")
        return type(self).make(other.dom, self.cod, {s: self.comps[s] @ other.comps[s] for s in self.comps})

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.comps == other.comps
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self.comps.values()))
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.dom!r} -> {self.cod!r})"

    def is_mono(self) -> bool:
        return all(f.is_injective() for f in self.comps.values())

    def is_epi(self) -> bool:
        return all(f.is_surjective() for f in self.comps.values())

    def is_iso(self) -> bool:
        return all(f.is_bijective() for f in self.comps.values())

    def inverse(self) -> "PresheafMorphism":
        return type(self).make(self.cod, self.dom, {s: f.inverse() for s, f in self.comps.items()})

    def to_atom(self) -> HomAtom:
        return HomAtom(tuple((s, self.comps[s].to_atom()) for s in self.dom.SORTS))


# --------------------------------------------------------------------------
# hom-set search


def _profile(obj: PresheafObject, sort: str, b) -> tuple:
    """Isomorphism-invariant summary of how top elements attach to b."""
    out = []
    for t in obj.top_sorts():
        arrows = [a for a in obj.arrows_from(t) if obj.ARROWS[a][1] == sort]
        if not arrows:
            continue
        counts: dict[tuple, int] = {}
        for x in obj.sets[t]:
            pat = tuple(obj.maps[a](x) == b for a in arrows)
            if any(pat):
                counts[pat] = counts.get(pat, 0) + 1
        out.append((t, tuple(sorted(counts.items()))))
    return tuple(out)


class _Search:
    def __init__(self, A: PresheafObject, B: PresheafObject, iso: bool):
        self.A, self.B, self.iso = A, B, iso
        cls = type(A)
        self.base = [(s, x) for s in cls.base_sorts() for x in A.sets[s]]
        pos = {v: k for k, v in enumerate(self.base)}
        self.tops = cls.top_sorts()
        self.bases = cls.base_sorts()
        # per top element: the base variables its arrows read
        self.reads: dict[tuple, list] = {}
        self.check_at: list[list] = [[] for _ in self.base]
        self.unconstrained: list = []
        self.index: dict[str, dict] = {}
        for t in self.tops:
            arrows = cls.arrows_from(t)
            idx: dict[tuple, list] = {}
            for y in B.sets[t]:
                idx.setdefault(tuple(B.maps[a](y) for a in arrows), []).append(y)
            self.index[t] = idx
            for x in A.sets[t]:
                reads = [(cls.ARROWS[a][1], A.maps[a](x)) for a in arrows]
                self.reads[(t, x)] = reads
                if reads:
                    self.check_at[max(pos[r] for r in reads)].append((t, x))
                else:
                    self.unconstrained.append((t, x))
        self.choices = []
        for s, x in self.base:
            cands = list(B.sets[s])
            if iso:
                p = _profile(A, s, x)
                cands = [y for y in cands if _profile(B, s, y) == p]
            self.choices.append(cands)

    def candidates(self, assign: dict, t: str, x) -> list:
        key = tuple(assign[r] for r in self.reads[(t, x)])
        return self.index[t].get(key, [])

    def base_assignments(self) -> Iterator[dict]:
        n = len(self.base)
        assign: dict = {}
        used: set = set()
        for t, x in self.unconstrained:
            if not self.candidates(assign, t, x):
                return

        def rec(k):
            if k == n:
                yield assign
                return
            var = self.base[k]
            for y in self.choices[k]:
                if self.iso and (var[0], y) in used:
                    continue
                assign[var] = y
                ok = all(self.candidates(assign, t, x) for t, x in self.check_at[k])
                if ok:
                    if self.iso:
                        used.add((var[0], y))
                    yield from rec(k + 1)
                    if self.iso:
                        used.discard((var[0], y))
                del assign[var]

        yield from rec(0)

    def top_elements(self) -> list:
        return [(t, x) for t in self.tops for x in self.A.sets[t]]

    def build(self, assign: dict, top_choice: dict) -> PresheafMorphism:
        A, B = self.A, self.B
        comps = {}
        for s in self.bases:
            comps[s] = FiniteFunction.unchecked(A.sets[s], B.sets[s], {x: assign[(s, x)] for x in A.sets[s]})
        for t in self.tops:
            comps[t] = FiniteFunction.unchecked(A.sets[t], B.sets[t], {x: top_choice[(t, x)] for x in A.sets[t]})
        return A.MORPHISM.make(A, B, comps)


def hom_count(A: PresheafObject, B: PresheafObject) -> int:
    s = _Search(A, B, iso=False)
    tops = s.top_elements()
    return sum(prod(len(s.candidates(a, t, x)) for t, x in tops) for a in s.base_assignments())


def hom_iter(A: PresheafObject, B: PresheafObject) -> Iterator[PresheafMorphism]:
    """All morphisms A -> B in the stable search order."""
    s = _Search(A, B, iso=False)
    tops = s.top_elements()
    for a in s.base_assignments():
        lists = [s.candidates(a, t, x) for t, x in tops]
        for combo in itertools.product(*lists):
            yield s.build(a, dict(zip(tops, combo)))


def bounded(items, limit: int | None) -> list:
    """Materialise an enumeration, refusing to go past ``limit`` items."""
    out = []
    for x in items:
        out.append(x)
        if limit is not None and len(out) > limit:
            raise SizeError(f"hom-set exceeds the hom bound {limit}")
    return out


def hom_atoms(A: PresheafObject, B: PresheafObject) -> Iterator[HomAtom]:
    """The atoms of ``hom_iter(A, B)`` in the same order, without building morphisms."""
    s = _Search(A, B, iso=False)
    tops = s.top_elements()
    sorts = A.SORTS
    for a in s.base_assignments():
        base = {b: MapAtom(tuple((x, a[(b, x)]) for x in A.sets[b])) for b in s.bases}
        lists = [s.candidates(a, t, x) for t, x in tops]
        for combo in itertools.product(*lists):
            choice = dict(zip(tops, combo))
            parts = []
            for srt in sorts:
                m = base.get(srt)
                if m is None:
                    m = MapAtom(tuple((x, choice[(srt, x)]) for x in A.sets[srt]))
                parts.append((srt, m))
            yield HomAtom(tuple(parts))


def find_iso(A: PresheafObject, B: PresheafObject) -> PresheafMorphism | None:
    if type(A) is not type(B) or A.sizes() != B.sizes():
        return None
    s = _Search(A, B, iso=True)
    tops = s.top_elements()
    for a in s.base_assignments():
        choice = {}
        ok = True
        for t in s.tops:
            groups: dict[tuple, list] = {}
            for x in A.sets[t]:
                groups.setdefault(tuple(a[r] for r in s.reads[(t, x)]), []).append(x)
            for key, xs in groups.items():
                ys = s.index[t].get(key, [])
                if len(ys) != len(xs):
                    ok = False
                    break
                choice.update({(t, x): y for x, y in zip(xs, ys)})
            if not ok:
                break
        if ok and len(choice) == len(tops):
            return s.build(a, choice)
    return None


def hom(A: PresheafObject, B: PresheafObject, mode: str = "list", limit: int | None = None):
    """Hom-set search with ``mode`` one of count, list, first, iso."""
    if mode == "count":
        return hom_count(A, B)
    if mode == "list":
        return bounded(hom_iter(A, B), limit)
    if mode == "first":
        return next(hom_iter(A, B), None)
    if mode == "iso":
        return find_iso(A, B)
    raise ValueError(f"unknown hom mode {mode!r}")


# --------------------------------------------------------------------------
# limits and colimits


@dataclass(frozen=True)
class Limit:
    """A limit cone with a way to factor other cones through it."""

    apex: PresheafObject
    legs: tuple
    _mediate: Callable

    def mediate(self, *cone):
        return self._mediate(*cone)


@dataclass(frozen=True)
class Colimit:
    apex: PresheafObject
    legs: tuple
    _mediate: Callable

    def mediate(self, *cocone):
        return self._mediate(*cocone)


def product(objs: Sequence[PresheafObject], cls: type | None = None) -> Limit:
    cls = cls or type(objs[0])
    sets, projs = {}, {}
    for s in cls.SORTS:
        sets[s], projs[s] = product_set([o.sets[s] for o in objs])
    maps = {}
    for a, (s, t) in cls.ARROWS.items():
        maps[a] = FiniteFunction.unchecked(
            sets[s], sets[t], {x: tuple(o.maps[a](xk) for o, xk in zip(objs, x)) for x in sets[s]}
        )
    apex = cls.make(sets, maps)
    legs = tuple(cls.MORPHISM.make(apex, o, {s: projs[s][k] for s in cls.SORTS}) for k, o in enumerate(objs))

    def mediate(*cone):
        if len(cone) != len(objs) or any(c.cod != o for c, o in zip(cone, objs)):
            raise ValueError("cone legs must land on the product factors in order")
        X = cone[0].dom
        comps = {
            s: FiniteFunction.unchecked(X.sets[s], sets[s], {x: tuple(c.comps[s](x) for c in cone) for x in X.sets[s]})
            for s in cls.SORTS
        }
        return cls.MORPHISM.make(X, apex, comps)

    return Limit(apex, legs, mediate)


def terminal(cls: type) -> PresheafObject:
    one = FiniteSet([1])
    return cls.make({s: one for s in cls.SORTS}, {a: FiniteFunction.constant(one, one, 1) for a in cls.ARROWS})


def initial(cls: type) -> PresheafObject:
    empty = FiniteSet()
    return cls.make({s: empty for s in cls.SORTS}, {a: FiniteFunction.empty(empty) for a in cls.ARROWS})


def equalizer(f: PresheafMorphism, g: PresheafMorphism) -> Limit:
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("equalizer needs a parallel pair")
    A = f.dom
    cls = type(A)
    sets = {s: FiniteSet(x for x in A.sets[s] if f.comps[s](x) == g.comps[s](x)) for s in cls.SORTS}
    maps = {a: A.maps[a].restrict(sets[s], sets[t]) for a, (s, t) in cls.ARROWS.items()}
    apex = cls.make(sets, maps)
    leg = cls.MORPHISM.make(apex, A, {s: FiniteFunction.inclusion(sets[s], A.sets[s]) for s in cls.SORTS})

    def mediate(h):
        if h.cod != A or (f @ h) != (g @ h):
            raise ValueError("map does not equalize the pair")
        return cls.MORPHISM.make(h.dom, apex, {s: h.comps[s].restrict(h.dom.sets[s], sets[s]) for s in cls.SORTS})

    return Limit(apex, (leg,), mediate)


def coproduct(objs: Sequence[PresheafObject], cls: type | None = None) -> Colimit:
    cls = cls or type(objs[0])
    sets, injs = {}, {}
    for s in cls.SORTS:
        sets[s], injs[s] = coproduct_set([o.sets[s] for o in objs])
    maps = {
        a: FiniteFunction.unchecked(sets[s], sets[t], {(k, x): (k, objs[k].maps[a](x)) for k, x in sets[s]})
        for a, (s, t) in cls.ARROWS.items()
    }
    apex = cls.make(sets, maps)
    legs = tuple(cls.MORPHISM.make(o, apex, {s: injs[s][k] for s in cls.SORTS}) for k, o in enumerate(objs))

    def mediate(*cocone):
        if len(cocone) != len(objs) or any(c.dom != o for c, o in zip(cocone, objs)):
            raise ValueError("cocone legs must start at the coproduct summands in order")
        Y = cocone[0].cod
        comps = {
            s: FiniteFunction.unchecked(sets[s], Y.sets[s], {(k, x): cocone[k].comps[s](x) for k, x in sets[s]})
            for s in cls.SORTS
        }
        return cls.MORPHISM.make(apex, Y, comps)

    return Colimit(apex, legs, mediate)


def coequalizer(f: PresheafMorphism, g: PresheafMorphism) -> Colimit:
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("coequalizer needs a parallel pair")
    B = f.cod
    cls = type(B)
    sets, qs = {}, {}
    for s in cls.SORTS:
        sets[s], qs[s] = coequalize_set(f.comps[s], g.comps[s])
    maps = {}
    for a, (s, t) in cls.ARROWS.items():
        m = {}
        for x in B.sets[s]:
            y = qs[t](B.maps[a](x))
            c = qs[s](x)
            if m.setdefault(c, y) != y:
                raise ValueError("induced structure map is not well defined; the pair is not parallel")
        maps[a] = FiniteFunction.unchecked(sets[s], sets[t], m)
    apex = cls.make(sets, maps)
    leg = cls.MORPHISM.make(B, apex, qs)

    def mediate(h):
        if h.dom != B or (h @ f) != (h @ g):
            raise ValueError("map does not coequalize the pair")
        comps = {s: FiniteFunction.unchecked(sets[s], h.cod.sets[s], {qs[s](x): h.comps[s](x) for x in B.sets[s]}) for s in cls.SORTS}
        return cls.MORPHISM.make(apex, h.cod, comps)

    return Colimit(apex, (leg,), mediate)


def product_map(f: PresheafMorphism, g: PresheafMorphism, dom: PresheafObject, cod: PresheafObject) -> PresheafMorphism:
    """f x g between the constructed binary products ``dom`` and ``cod``."""
    comps = {
        s: FiniteFunction.unchecked(dom.sets[s], cod.sets[s], {(x, y): (f.comps[s](x), g.comps[s](y)) for x, y in dom.sets[s]})
        for s in type(dom).SORTS
    }
    return type(f).make(dom, cod, comps)

"""Quivers (directed multigraphs) as presheaves on the parallel-pair shape."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from . import presheaf
from .finset import (
    DEFAULT_BOUNDS,
    Bounds,
    FiniteFunction,
    FiniteSet,
    MapAtom,
    SizeError,
    all_functions,
)
from .presheaf import Colimit, Limit, PresheafMorphism, PresheafObject


class Quiver(PresheafObject):
    SORTS = ("V", "E")
    ARROWS = {"src": ("E", "V"), "tgt": ("E", "V")}

    def __init__(self, V: FiniteSet, E: FiniteSet, src: FiniteFunction, tgt: FiniteFunction):
        super().__init__({"V": V, "E": E}, {"src": src, "tgt": tgt})

    @classmethod
    def from_edges(cls, vertices, edges: Mapping) -> "Quiver":
        """Build from a vertex list and a mapping edge -> (source, target)."""
        V, E = FiniteSet(vertices), FiniteSet(edges)
        return cls(
            V,
            E,
            FiniteFunction(E, V, {e: st[0] for e, st in edges.items()}),
            FiniteFunction(E, V, {e: st[1] for e, st in edges.items()}),
        )

    @property
    def V(self) -> FiniteSet:
        return self.sets["V"]

    @property
    def E(self) -> FiniteSet:
        return self.sets["E"]

    @property
    def src(self) -> FiniteFunction:
        return self.maps["src"]

    @property
    def tgt(self) -> FiniteFunction:
        return self.maps["tgt"]

    def endpoints(self, e) -> tuple:
        return self.src(e), self.tgt(e)


class QuiverMorphism(PresheafMorphism):
    def __init__(self, dom: Quiver, cod: Quiver, fV: FiniteFunction, fE: FiniteFunction):
        super().__init__(dom, cod, {"V": fV, "E": fE})

    @classmethod
    def from_dicts(cls, dom: Quiver, cod: Quiver, v: Mapping, e: Mapping) -> "QuiverMorphism":
        return cls(dom, cod, FiniteFunction(dom.V, cod.V, v), FiniteFunction(dom.E, cod.E, e))

    @property
    def fV(self) -> FiniteFunction:
        return self.comps["V"]

    @property
    def fE(self) -> FiniteFunction:
        return self.comps["E"]


Quiver.MORPHISM = QuiverMorphism


# --------------------------------------------------------------------------
# standard objects (the adjoints of the vertex and edge functors)


@lru_cache(maxsize=4096)
def vertex_star(X: FiniteSet) -> Quiver:
    """Complete digraph on X, one edge per ordered pair."""
    return Quiver.from_edges(X, {(x, y): (x, y) for x in X for y in X})


@lru_cache(maxsize=4096)
def vertex_diamond(X: FiniteSet) -> Quiver:
    """Isolated vertices."""
    return Quiver.from_edges(X, {})


@lru_cache(maxsize=4096)
def edge_star(X: FiniteSet) -> Quiver:
    """Bouquet of loops at the single vertex 1."""
    return Quiver.from_edges([1], {x: (1, 1) for x in X})


@lru_cache(maxsize=4096)
def edge_diamond(X: FiniteSet) -> Quiver:
    """Disjoint directed 1-paths (0, x) -> (1, x)."""
    return Quiver.from_edges([(n, x) for n in (0, 1) for x in X], {x: ((0, x), (1, x)) for x in X})


def terminal() -> Quiver:
    return edge_star(FiniteSet([1]))


def path1() -> Quiver:
    return edge_diamond(FiniteSet([1]))


STANDARD = {
    "vertex_star": vertex_star,
    "vertex_diamond": vertex_diamond,
    "edge_star": edge_star,
    "edge_diamond": edge_diamond,
    "terminal": lambda X=None: terminal(),
    "path1": lambda X=None: path1(),
}


def standard_quiver(kind: str, X: FiniteSet | None = None) -> Quiver:
    try:
        build = STANDARD[kind]
    except KeyError:
        raise ValueError(f"unknown standard quiver {kind!r}") from None
    return build(X) if kind not in ("terminal", "path1") else build()


# actions of the same constructions on functions


def vertex_star_map(f: FiniteFunction) -> QuiverMorphism:
    A, B = vertex_star(f.dom), vertex_star(f.cod)
    return QuiverMorphism.make(A, B, {
        "V": f,
        "E": FiniteFunction.unchecked(A.E, B.E, {(x, y): (f(x), f(y)) for x, y in A.E}),
    })


def vertex_diamond_map(f: FiniteFunction) -> QuiverMorphism:
    A, B = vertex_diamond(f.dom), vertex_diamond(f.cod)
    return QuiverMorphism.make(A, B, {"V": f, "E": FiniteFunction.empty(B.E)})


def edge_star_map(f: FiniteFunction) -> QuiverMorphism:
    A, B = edge_star(f.dom), edge_star(f.cod)
    return QuiverMorphism.make(A, B, {"V": FiniteFunction.identity(A.V), "E": f})


def edge_diamond_map(f: FiniteFunction) -> QuiverMorphism:
    A, B = edge_diamond(f.dom), edge_diamond(f.cod)
    return QuiverMorphism.make(A, B, {
        "V": FiniteFunction.unchecked(A.V, B.V, {(n, x): (n, f(x)) for n, x in A.V}),
        "E": f,
    })


# --------------------------------------------------------------------------
# hom-sets, limits, colimits


def hom_quivers(Q: Quiver, R: Quiver, mode: str = "list", limit: int | None = None):
    return presheaf.hom(Q, R, mode, limit)


def quiver_limit(kind: str, *args) -> Limit:
    """``product`` (of any number of quivers), ``equalizer`` (f, g) or ``terminal``."""
    if kind == "product":
        objs = list(args[0]) if len(args) == 1 and isinstance(args[0], (list, tuple)) else list(args)
        if not objs:
            T = terminal()
            return Limit(T, (), lambda *cone: _to_terminal(cone, T))
        return presheaf.product(objs)
    if kind == "equalizer":
        return presheaf.equalizer(*args)
    if kind == "terminal":
        T = terminal()
        return Limit(T, (), lambda X: _to_terminal((X,), T))
    raise ValueError(f"unknown limit kind {kind!r}")


def _to_terminal(cone, T):
    X = cone[0] if isinstance(cone[0], Quiver) else cone[0].dom
    return QuiverMorphism.make(X, T, {s: FiniteFunction.constant(X.sets[s], T.sets[s], T.sets[s].elements[0]) for s in Quiver.SORTS})


def quiver_colimit(kind: str, *args) -> Colimit:
    """``coproduct`` (of any number of quivers), ``coequalizer`` (f, g) or ``initial``."""
    if kind == "coproduct":
        objs = list(args[0]) if len(args) == 1 and isinstance(args[0], (list, tuple)) else list(args)
        if not objs:
            return quiver_colimit("initial")
        return presheaf.coproduct(objs)
    if kind == "coequalizer":
        return presheaf.coequalizer(*args)
    if kind == "initial":
        Z = presheaf.initial(Quiver)
        return Colimit(Z, (), lambda Y: QuiverMorphism.make(Z, Y, {s: FiniteFunction.empty(Y.sets[s]) for s in Quiver.SORTS}))
    raise ValueError(f"unknown colimit kind {kind!r}")


def product(Q: Quiver, R: Quiver) -> Limit:
    return presheaf.product([Q, R])


# --------------------------------------------------------------------------
# exponentials


@lru_cache(maxsize=256)
def quiver_exponential(Q: Quiver, R: Quiver, bounds: Bounds = DEFAULT_BOUNDS) -> tuple[Quiver, QuiverMorphism]:
    """R^Q together with evaluation Q x R^Q -> R.

    Vertices are the functions V(Q) -> V(R); edges are the incidence
    hypergraph morphisms upsilon(Q) -> upsilon(R), stored as atoms.  An
    edge runs from its vertex part to its edge part.
    """
    from .incidence import hom_incidence, upsilon

    V = all_functions(Q.V, R.V, bounds)
    homs = hom_incidence(upsilon(Q), upsilon(R), "list", limit=bounds.homs)
    edges = {}
    for phi in homs:
        a = phi.to_atom()
        edges[a] = (a["V"], a["E"])
    E = FiniteSet(edges)
    RQ = Quiver(V, E, FiniteFunction.unchecked(E, V, {a: st[0] for a, st in edges.items()}),
                FiniteFunction.unchecked(E, V, {a: st[1] for a, st in edges.items()}))
    P = presheaf.product([Q, RQ]).apex
    ev = QuiverMorphism.make(P, R, {
        "V": FiniteFunction.unchecked(P.V, R.V, {(v, f): f(v) for v, f in P.V}),
        "E": FiniteFunction.unchecked(P.E, R.E, {(e, phi): phi["I"](e) for e, phi in P.E}),
    })
    return RQ, ev


def quiver_curry(psi: QuiverMorphism, Q: Quiver, K: Quiver, bounds: Bounds = DEFAULT_BOUNDS) -> QuiverMorphism:
    """The unique map K -> R^Q whose composite with evaluation gives psi."""
    if psi.dom != presheaf.product([Q, K]).apex:
        raise ValueError("domain of the map is not the constructed product Q x K")
    R = psi.cod
    RQ, _ = quiver_exponential(Q, R, bounds)
    pV, pE = psi.fV, psi.fE
    vmap = {k: MapAtom(tuple((v, pV((v, k))) for v in Q.V)) for k in K.V}
    emap = {}
    for j in K.E:
        s, t = K.src(j), K.tgt(j)
        emap[j] = presheaf.HomAtom((
            ("V", MapAtom(tuple((v, pV((v, s))) for v in Q.V))),
            ("E", MapAtom(tuple((v, pV((v, t))) for v in Q.V))),
            ("I", MapAtom(tuple((e, pE((e, j))) for e in Q.E))),
        ))
    for j, a in emap.items():
        if a not in RQ.E:
            raise SizeError("curried edge is missing from the exponential")
    return QuiverMorphism(K, RQ, FiniteFunction(K.V, RQ.V, vmap), FiniteFunction(K.E, RQ.E, emap))


def quiver_uncurry(phi: QuiverMorphism, Q: Quiver, R: Quiver, bounds: Bounds = DEFAULT_BOUNDS) -> QuiverMorphism:
    """ev o (Q x phi) for phi: K -> R^Q."""
    RQ, ev = quiver_exponential(Q, R, bounds)
    if phi.cod != RQ:
        raise ValueError("map does not land in R^Q")
    dom = presheaf.product([Q, phi.dom]).apex
    return ev @ presheaf.product_map(Q.identity(), phi, dom, ev.dom)


def classical_digraph_exponential(Q: Quiver, R: Quiver, bounds: Bounds = DEFAULT_BOUNDS) -> Quiver:
    """[Q, R] for simple digraphs (parallel edges collapsed first).

    (f, g) is an edge when (f(src e), g(tgt e)) is an edge of R for every
    edge e of Q.
    """
    V = all_functions(Q.V, R.V, bounds)
    q_pairs = {Q.endpoints(e) for e in Q.E}
    r_pairs = {R.endpoints(e) for e in R.E}
    edges = {
        (f, g): (f, g)
        for f in V
        for g in V
        if all((f(s), g(t)) in r_pairs for s, t in q_pairs)
    }
    return Quiver.from_edges(V, edges)


def quiver_exponential_map(Q: Quiver, alpha: QuiverMorphism, bounds: Bounds = DEFAULT_BOUNDS) -> QuiverMorphism:
    """(-)^Q on a map alpha: R -> R': post-composition on vertices and edges."""
    from .incidence import upsilon_map

    A, _ = quiver_exponential(Q, alpha.dom, bounds)
    B, _ = quiver_exponential(Q, alpha.cod, bounds)
    ua = upsilon_map(alpha)
    fv = {f: MapAtom(tuple((v, alpha.fV(y)) for v, y in f.pairs)) for f in A.V}
    fe = {}
    for a in A.E:
        fe[a] = presheaf.HomAtom(tuple(
            (s, MapAtom(tuple((x, ua.comps[s](y)) for x, y in a[s].pairs))) for s in ("V", "E", "I")
        ))
    return QuiverMorphism(A, B, FiniteFunction(A.V, B.V, fv), FiniteFunction(A.E, B.E, fe))

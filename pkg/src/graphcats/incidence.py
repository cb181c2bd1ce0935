"""Incidence hypergraphs: vertices and edges joined through a separate set of incidences.

An incidence i has a port (its vertex) and an attachment (its edge).  The
category is a presheaf topos, so limits and colimits are pointwise and the
generic machinery in :mod:`graphcats.presheaf` does the work.  This module
adds the standard objects, the three functors relating quivers and
incidence hypergraphs, the bridge to set-system hypergraphs and the
exponential.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from . import presheaf
from .finset import (
    DEFAULT_BOUNDS,
    Bounds,
    FiniteFunction,
    FiniteSet,
    HomAtom,
    MapAtom,
    SizeError,
    all_functions,
)
from .presheaf import Colimit, Limit, PresheafMorphism, PresheafObject
from .quiver import Quiver, QuiverMorphism
from .set_system import HyperMorphism, SetSystemHypergraph


class IncidenceHypergraph(PresheafObject):
    SORTS = ("V", "E", "I")
    ARROWS = {"port": ("I", "V"), "att": ("I", "E")}

    def __init__(self, V: FiniteSet, E: FiniteSet, I: FiniteSet, port: FiniteFunction, att: FiniteFunction):
        super().__init__({"V": V, "E": E, "I": I}, {"port": port, "att": att})

    @classmethod
    def from_incidences(cls, vertices, edges, incidences: Mapping) -> "IncidenceHypergraph":
        """Build from vertex and edge lists and a mapping incidence -> (vertex, edge)."""
        V, E, I = FiniteSet(vertices), FiniteSet(edges), FiniteSet(incidences)
        return cls(
            V, E, I,
            FiniteFunction(I, V, {i: ve[0] for i, ve in incidences.items()}),
            FiniteFunction(I, E, {i: ve[1] for i, ve in incidences.items()}),
        )

    @property
    def V(self) -> FiniteSet:
        return self.sets["V"]

    @property
    def E(self) -> FiniteSet:
        return self.sets["E"]

    @property
    def I(self) -> FiniteSet:  # noqa: E743
        return self.sets["I"]

    @property
    def port(self) -> FiniteFunction:
        return self.maps["port"]

    @property
    def att(self) -> FiniteFunction:
        return self.maps["att"]


class IncidenceMorphism(PresheafMorphism):
    def __init__(self, dom, cod, fV: FiniteFunction, fE: FiniteFunction, fI: FiniteFunction):
        super().__init__(dom, cod, {"V": fV, "E": fE, "I": fI})

    @classmethod
    def from_dicts(cls, dom, cod, v: Mapping, e: Mapping, i: Mapping) -> "IncidenceMorphism":
        return cls(dom, cod, FiniteFunction(dom.V, cod.V, v), FiniteFunction(dom.E, cod.E, e), FiniteFunction(dom.I, cod.I, i))

    @property
    def fV(self) -> FiniteFunction:
        return self.comps["V"]

    @property
    def fE(self) -> FiniteFunction:
        return self.comps["E"]

    @property
    def fI(self) -> FiniteFunction:
        return self.comps["I"]


IncidenceHypergraph.MORPHISM = IncidenceMorphism


def _inc(V, E, I, port: dict, att: dict) -> IncidenceHypergraph:
    V, E, I = FiniteSet(V), FiniteSet(E), FiniteSet(I)
    return IncidenceHypergraph.make(
        {"V": V, "E": E, "I": I},
        {"port": FiniteFunction.unchecked(I, V, port), "att": FiniteFunction.unchecked(I, E, att)},
    )


def _mor(dom, cod, v: dict, e: dict, i: dict) -> IncidenceMorphism:
    return IncidenceMorphism.make(dom, cod, {
        "V": FiniteFunction.unchecked(dom.V, cod.V, v),
        "E": FiniteFunction.unchecked(dom.E, cod.E, e),
        "I": FiniteFunction.unchecked(dom.I, cod.I, i),
    })


# --------------------------------------------------------------------------
# standard objects


@lru_cache(maxsize=4096)
def v_star(X: FiniteSet) -> IncidenceHypergraph:
    """Bouquet of 1-vertices on the single edge 1."""
    I = [(x, 1) for x in X]
    return _inc(X, [1], I, {i: i[0] for i in I}, {i: 1 for i in I})


@lru_cache(maxsize=4096)
def v_diamond(X: FiniteSet) -> IncidenceHypergraph:
    return _inc(X, [], [], {}, {})


@lru_cache(maxsize=4096)
def e_star(X: FiniteSet) -> IncidenceHypergraph:
    I = [(1, x) for x in X]
    return _inc([1], X, I, {i: 1 for i in I}, {i: i[1] for i in I})


@lru_cache(maxsize=4096)
def e_diamond(X: FiniteSet) -> IncidenceHypergraph:
    return _inc([], X, [], {}, {})


@lru_cache(maxsize=4096)
def i_star(X: FiniteSet) -> IncidenceHypergraph:
    """|X| parallel incidences between one vertex and one edge."""
    return _inc([1], [1], X, {x: 1 for x in X}, {x: 1 for x in X})


@lru_cache(maxsize=4096)
def i_diamond(X: FiniteSet) -> IncidenceHypergraph:
    """Disjoint 1-edges, one per element of X."""
    return _inc(X, X, X, {x: x for x in X}, {x: x for x in X})


def terminal() -> IncidenceHypergraph:
    return i_star(FiniteSet([1]))


STANDARD = {
    "v_star": v_star,
    "v_diamond": v_diamond,
    "e_star": e_star,
    "e_diamond": e_diamond,
    "i_star": i_star,
    "i_diamond": i_diamond,
}


def standard_incidence(kind: str, X: FiniteSet | None = None) -> IncidenceHypergraph:
    if kind == "terminal":
        return terminal()
    try:
        return STANDARD[kind](X)
    except KeyError:
        raise ValueError(f"unknown standard incidence hypergraph {kind!r}") from None


def v_star_map(f: FiniteFunction) -> IncidenceMorphism:
    A, B = v_star(f.dom), v_star(f.cod)
    return _mor(A, B, f.as_dict(), {1: 1}, {(x, 1): (f(x), 1) for x in f.dom})


def v_diamond_map(f: FiniteFunction) -> IncidenceMorphism:
    return _mor(v_diamond(f.dom), v_diamond(f.cod), f.as_dict(), {}, {})


def e_star_map(f: FiniteFunction) -> IncidenceMorphism:
    A, B = e_star(f.dom), e_star(f.cod)
    return _mor(A, B, {1: 1}, f.as_dict(), {(1, x): (1, f(x)) for x in f.dom})


def e_diamond_map(f: FiniteFunction) -> IncidenceMorphism:
    return _mor(e_diamond(f.dom), e_diamond(f.cod), {}, f.as_dict(), {})


def i_star_map(f: FiniteFunction) -> IncidenceMorphism:
    return _mor(i_star(f.dom), i_star(f.cod), {1: 1}, {1: 1}, f.as_dict())


def i_diamond_map(f: FiniteFunction) -> IncidenceMorphism:
    d = f.as_dict()
    return _mor(i_diamond(f.dom), i_diamond(f.cod), d, d, d)


# --------------------------------------------------------------------------
# hom-sets, limits, colimits


def hom_incidence(G: IncidenceHypergraph, H: IncidenceHypergraph, mode: str = "list", limit: int | None = None):
    return presheaf.hom(G, H, mode, limit)


def _to_terminal(X: IncidenceHypergraph, T: IncidenceHypergraph) -> IncidenceMorphism:
    return IncidenceMorphism.make(X, T, {s: FiniteFunction.constant(X.sets[s], T.sets[s], 1) for s in IncidenceHypergraph.SORTS})


def inc_limit(kind: str, *args) -> Limit:
    """``product`` (any number of objects), ``equalizer`` (f, g) or ``terminal``."""
    if kind == "product":
        objs = list(args[0]) if len(args) == 1 and isinstance(args[0], (list, tuple)) else list(args)
        if objs:
            return presheaf.product(objs)
        kind = "terminal"
    if kind == "equalizer":
        return presheaf.equalizer(*args)
    if kind == "terminal":
        T = terminal()
        return Limit(T, (), lambda X: _to_terminal(X, T))
    raise ValueError(f"unknown limit kind {kind!r}")


def inc_colimit(kind: str, *args) -> Colimit:
    """``coproduct`` (any number of objects), ``coequalizer`` (f, g) or ``initial``."""
    if kind == "coproduct":
        objs = list(args[0]) if len(args) == 1 and isinstance(args[0], (list, tuple)) else list(args)
        if objs:
            return presheaf.coproduct(objs)
        kind = "initial"
    if kind == "coequalizer":
        return presheaf.coequalizer(*args)
    if kind == "initial":
        Z = presheaf.initial(IncidenceHypergraph)
        return Colimit(Z, (), lambda Y: IncidenceMorphism.make(Z, Y, {s: FiniteFunction.empty(Y.sets[s]) for s in IncidenceHypergraph.SORTS}))
    raise ValueError(f"unknown colimit kind {kind!r}")


# --------------------------------------------------------------------------
# quivers and incidence hypergraphs


@lru_cache(maxsize=4096)
def upsilon(Q: Quiver) -> IncidenceHypergraph:
    """Directed edges become incidences: each vertex is used once as a vertex
    and once as an edge, and an arrow u -> w is an incidence from u to w."""
    return IncidenceHypergraph.make({"V": Q.V, "E": Q.V, "I": Q.E}, {"port": Q.src, "att": Q.tgt})


def upsilon_map(phi: QuiverMorphism) -> IncidenceMorphism:
    return IncidenceMorphism.make(upsilon(phi.dom), upsilon(phi.cod), {"V": phi.fV, "E": phi.fV, "I": phi.fE})


@lru_cache(maxsize=4096)
def upsilon_diamond(G: IncidenceHypergraph) -> Quiver:
    """Bipartite incidence digraph: (0, v) -> (1, e) for each incidence."""
    V = FiniteSet([(0, v) for v in G.V] + [(1, e) for e in G.E])
    return Quiver.make({"V": V, "E": G.I}, {
        "src": FiniteFunction.unchecked(G.I, V, {i: (0, G.port(i)) for i in G.I}),
        "tgt": FiniteFunction.unchecked(G.I, V, {i: (1, G.att(i)) for i in G.I}),
    })


def upsilon_diamond_map(phi: IncidenceMorphism) -> QuiverMorphism:
    A, B = upsilon_diamond(phi.dom), upsilon_diamond(phi.cod)
    fv = {(n, x): (n, phi.fV(x) if n == 0 else phi.fE(x)) for n, x in A.V}
    return QuiverMorphism.make(A, B, {"V": FiniteFunction.unchecked(A.V, B.V, fv), "E": phi.fI})


@lru_cache(maxsize=4096)
def upsilon_star(G: IncidenceHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> Quiver:
    """Incidence-matrix quiver: vertices (v, e), an edge (v, i, e) from
    (port i, e) to (v, att i).  Loops are exactly the incidences."""
    n = len(G.V) * len(G.I) * len(G.E)
    if n > bounds.upsilon_star:
        raise SizeError(f"upsilon_star would build {n} edges, above the bound {bounds.upsilon_star}")
    V = FiniteSet((v, e) for v in G.V for e in G.E)
    E = FiniteSet((v, i, e) for v in G.V for i in G.I for e in G.E)
    return Quiver.make({"V": V, "E": E}, {
        "src": FiniteFunction.unchecked(E, V, {(v, i, e): (G.port(i), e) for v, i, e in E}),
        "tgt": FiniteFunction.unchecked(E, V, {(v, i, e): (v, G.att(i)) for v, i, e in E}),
    })


def upsilon_star_map(phi: IncidenceMorphism, bounds: Bounds = DEFAULT_BOUNDS) -> QuiverMorphism:
    A, B = upsilon_star(phi.dom, bounds), upsilon_star(phi.cod, bounds)
    fV, fE, fI = phi.fV, phi.fE, phi.fI
    return QuiverMorphism.make(A, B, {
        "V": FiniteFunction.unchecked(A.V, B.V, {(v, e): (fV(v), fE(e)) for v, e in A.V}),
        "E": FiniteFunction.unchecked(A.E, B.E, {(v, i, e): (fV(v), fI(i), fE(e)) for v, i, e in A.E}),
    })


def upsilon_diamond_unit(G: IncidenceHypergraph) -> IncidenceMorphism:
    """G -> upsilon(upsilon_diamond(G))."""
    T = upsilon(upsilon_diamond(G))
    return _mor(G, T, {v: (0, v) for v in G.V}, {e: (1, e) for e in G.E}, {i: i for i in G.I})


def upsilon_diamond_counit(Q: Quiver) -> QuiverMorphism:
    """upsilon_diamond(upsilon(Q)) -> Q, forgetting the side tag."""
    S = upsilon_diamond(upsilon(Q))
    return QuiverMorphism.make(S, Q, {
        "V": FiniteFunction.unchecked(S.V, Q.V, {(n, v): v for n, v in S.V}),
        "E": FiniteFunction.identity(Q.E),
    })


def upsilon_star_unit(Q: Quiver, bounds: Bounds = DEFAULT_BOUNDS) -> QuiverMorphism:
    """Q -> upsilon_star(upsilon(Q)): v |-> (v, v), e |-> (tgt e, e, src e)."""
    T = upsilon_star(upsilon(Q), bounds)
    return QuiverMorphism.make(Q, T, {
        "V": FiniteFunction.unchecked(Q.V, T.V, {v: (v, v) for v in Q.V}),
        "E": FiniteFunction.unchecked(Q.E, T.E, {e: (Q.tgt(e), e, Q.src(e)) for e in Q.E}),
    })


def upsilon_star_counit(G: IncidenceHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> IncidenceMorphism:
    """upsilon(upsilon_star(G)) -> G, projecting each pair or triple."""
    S = upsilon(upsilon_star(G, bounds))
    return _mor(S, G, {x: x[0] for x in S.V}, {x: x[1] for x in S.E}, {x: x[1] for x in S.I})


# --------------------------------------------------------------------------
# set-system hypergraphs


@lru_cache(maxsize=4096)
def incidence_forming(G: SetSystemHypergraph) -> IncidenceHypergraph:
    """One incidence (v, e) for each endpoint v of each edge e."""
    I = [(v, e) for e in G.E for v in G.eps[e]]
    return _inc(G.V, G.E, I, {i: i[0] for i in I}, {i: i[1] for i in I})


def incidence_forming_map(phi: HyperMorphism) -> IncidenceMorphism:
    A, B = incidence_forming(phi.dom), incidence_forming(phi.cod)
    return _mor(A, B, phi.fV.as_dict(), phi.fE.as_dict(), {(v, e): (phi.fV(v), phi.fE(e)) for v, e in A.I})


@lru_cache(maxsize=4096)
def forget_incidence(G: IncidenceHypergraph) -> SetSystemHypergraph:
    """Object map only: an edge's endpoints are the ports of its incidences.

    There is no action on morphisms; see the Fworse counterexample.
    """
    eps = {e: set() for e in G.E}
    for i in G.I:
        eps[G.att(i)].add(G.port(i))
    return SetSystemHypergraph.make(G.V, G.E, {e: frozenset(S) for e, S in eps.items()})


# --------------------------------------------------------------------------
# exponentials


@lru_cache(maxsize=256)
def inc_exponential_object(G: IncidenceHypergraph, H: IncidenceHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> IncidenceHypergraph:
    """H^G alone.

    Vertices and edges are all functions on the respective sorts; the
    incidences are the morphisms G -> H themselves, attached through their
    vertex and edge parts.
    """
    V = all_functions(G.V, H.V, bounds)
    E = all_functions(G.E, H.E, bounds)
    I = FiniteSet(presheaf.bounded(presheaf.hom_atoms(G, H), bounds.homs))
    return IncidenceHypergraph.make({"V": V, "E": E, "I": I}, {
        "port": FiniteFunction.unchecked(I, V, {a: a["V"] for a in I}),
        "att": FiniteFunction.unchecked(I, E, {a: a["E"] for a in I}),
    })


@lru_cache(maxsize=256)
def inc_exponential(G: IncidenceHypergraph, H: IncidenceHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> tuple[IncidenceHypergraph, IncidenceMorphism]:
    """H^G with evaluation G x H^G -> H."""
    HG = inc_exponential_object(G, H, bounds)
    P = presheaf.product([G, HG]).apex
    ev = _mor(
        P, H,
        {(v, f): f(v) for v, f in P.V},
        {(e, g): g(e) for e, g in P.E},
        {(i, a): a["I"](i) for i, a in P.I},
    )
    return HG, ev


def inc_curry(psi: IncidenceMorphism, G: IncidenceHypergraph, K: IncidenceHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> IncidenceMorphism:
    """The unique K -> H^G whose composite with evaluation is psi: G x K -> H."""
    if psi.dom != presheaf.product([G, K]).apex:
        raise ValueError("domain of the map is not the constructed product G x K")
    H = psi.cod
    HG, _ = inc_exponential(G, H, bounds)
    pV, pE, pI = psi.fV, psi.fE, psi.fI
    fv = {w: MapAtom(tuple((v, pV((v, w))) for v in G.V)) for w in K.V}
    fe = {f: MapAtom(tuple((e, pE((e, f))) for e in G.E)) for f in K.E}
    fi = {}
    for j in K.I:
        w, f = K.port(j), K.att(j)
        a = HomAtom((
            ("V", MapAtom(tuple((v, pV((v, w))) for v in G.V))),
            ("E", MapAtom(tuple((e, pE((e, f))) for e in G.E))),
            ("I", MapAtom(tuple((i, pI((i, j))) for i in G.I))),
        ))
        if a not in HG.I:
            raise SizeError("curried incidence is missing from the exponential")
        fi[j] = a
    return IncidenceMorphism(K, HG, FiniteFunction(K.V, HG.V, fv), FiniteFunction(K.E, HG.E, fe), FiniteFunction(K.I, HG.I, fi))


def inc_uncurry(phi: IncidenceMorphism, G: IncidenceHypergraph, H: IncidenceHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> IncidenceMorphism:
    """ev o (G x phi) for phi: K -> H^G."""
    HG, ev = inc_exponential(G, H, bounds)
    if phi.cod != HG:
        raise ValueError("map does not land in H^G")
    dom = presheaf.product([G, phi.dom]).apex
    return ev @ presheaf.product_map(G.identity(), phi, dom, ev.dom)

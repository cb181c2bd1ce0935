"""Multigraphs: set-system hypergraphs whose edges have one or two endpoints."""

from __future__ import annotations

from dataclasses import dataclass

from .finset import DEFAULT_BOUNDS, Bounds, FiniteFunction, FiniteSet, atom_text
from .quiver import Quiver, QuiverMorphism, edge_diamond, vertex_diamond
from . import presheaf, set_system
from .set_system import (
    Colimit,
    Limit,
    HyperMorphism,
    SetSystemHypergraph,
    isolated_vertices,
    loading,
    partial_morphism_representer,
)


@dataclass(frozen=True)
class MultigraphView:
    """A set-system hypergraph checked to be a multigraph; all hypergraph
    machinery applies to ``carrier`` unchanged."""

    carrier: SetSystemHypergraph

    def __post_init__(self):
        for e in self.carrier.E:
            n = len(self.carrier.eps[e])
            if not 1 <= n <= 2:
                raise ValueError(f"edge {atom_text(e)} has {n} endpoints; multigraph edges have 1 or 2")

    @property
    def V(self) -> FiniteSet:
        return self.carrier.V

    @property
    def E(self) -> FiniteSet:
        return self.carrier.E

    @property
    def eps(self) -> dict:
        return self.carrier.eps


def _carrier(G) -> SetSystemHypergraph:
    return G.carrier if isinstance(G, MultigraphView) else G


# deletion


def del_(H: SetSystemHypergraph) -> tuple[MultigraphView, HyperMorphism]:
    """Keep only the edges with one or two endpoints; j is the inclusion."""
    H = _carrier(H)
    E = FiniteSet(e for e in H.E if 1 <= len(H.eps[e]) <= 2)
    D = SetSystemHypergraph.make(H.V, E, {e: H.eps[e] for e in E})
    j = HyperMorphism.make(D, H, FiniteFunction.identity(H.V), FiniteFunction.inclusion(E, H.E))
    return MultigraphView(D), j


def del_map(phi: HyperMorphism) -> HyperMorphism:
    """Del on morphisms: restriction to the surviving edges."""
    A, _ = del_(phi.dom)
    B, _ = del_(phi.cod)
    return HyperMorphism.make(A.carrier, B.carrier, phi.fV, phi.fE.restrict(A.E, B.E))


def del_factor(phi: HyperMorphism) -> HyperMorphism:
    """For phi: G -> H with G a multigraph, the phi^ with j o phi^ = phi."""
    G = MultigraphView(_carrier(phi.dom)).carrier
    D, _ = del_(phi.cod)
    return HyperMorphism(G, D.carrier, phi.fV, phi.fE.restrict(G.E, D.E))


# underlying multigraph and associated digraph


def underlying(Q: Quiver) -> MultigraphView:
    return MultigraphView(SetSystemHypergraph.make(Q.V, Q.E, {e: frozenset(Q.endpoints(e)) for e in Q.E}))


def underlying_map(phi: QuiverMorphism) -> HyperMorphism:
    return HyperMorphism.make(underlying(phi.dom).carrier, underlying(phi.cod).carrier, phi.fV, phi.fE)


def _directed(G: SetSystemHypergraph) -> dict:
    edges = {}
    for e in G.E:
        S = sorted(G.eps[e], key=atom_text)
        if len(S) == 1:
            edges[(e, S[0], S[0])] = (S[0], S[0])
        else:
            v, w = S
            edges[(e, v, w)] = (v, w)
            edges[(e, w, v)] = (w, v)
    return edges


def assoc_digraph(G) -> tuple[Quiver, HyperMorphism]:
    """2-edges become directed 2-cycles and 1-edges become loops.

    theta: U(D(G)) -> G forgets the direction.
    """
    G = MultigraphView(_carrier(G)).carrier
    D = Quiver.from_edges(G.V, _directed(G))
    UD = underlying(D).carrier
    theta = HyperMorphism.make(UD, G, FiniteFunction.identity(G.V), FiniteFunction.unchecked(UD.E, G.E, {x: x[0] for x in UD.E}))
    return D, theta


def assoc_digraph_map(phi: HyperMorphism) -> QuiverMorphism:
    A, _ = assoc_digraph(phi.dom)
    B, _ = assoc_digraph(phi.cod)
    fe = {(e, v, w): (phi.fE(e), phi.fV(v), phi.fV(w)) for e, v, w in A.E}
    return QuiverMorphism.make(A, B, {"V": phi.fV, "E": FiniteFunction.unchecked(A.E, B.E, fe)})


def assoc_unit(Q: Quiver) -> QuiverMorphism:
    """Q -> D(U(Q)): each edge picks its own direction."""
    D, _ = assoc_digraph(underlying(Q))
    return QuiverMorphism.make(Q, D, {
        "V": FiniteFunction.identity(Q.V),
        "E": FiniteFunction.unchecked(Q.E, D.E, {e: (e, Q.src(e), Q.tgt(e)) for e in Q.E}),
    })


def assoc_factor(phi: HyperMorphism, Q: Quiver) -> QuiverMorphism:
    """For phi: U(Q) -> G the unique phi^: Q -> D(G) with theta o U(phi^) = phi."""
    if phi.dom != underlying(Q).carrier:
        raise ValueError("map does not start at the underlying multigraph of Q")
    D, _ = assoc_digraph(phi.cod)
    fe = {e: (phi.fE(e), phi.fV(Q.src(e)), phi.fV(Q.tgt(e))) for e in Q.E}
    return QuiverMorphism(Q, D, phi.fV, FiniteFunction(Q.E, D.E, fe))


# explosion and projective cover


def _explosion_quiver(G: SetSystemHypergraph) -> Quiver:
    return presheaf.coproduct([vertex_diamond(isolated_vertices(G)), edge_diamond(G.E)]).apex


def explosion(G) -> MultigraphView:
    """Isolated vertices of G plus one fresh 1-path per edge."""
    return underlying(_explosion_quiver(MultigraphView(_carrier(G)).carrier))


def projective_cover(G) -> HyperMorphism:
    """X(G) -> G: isolated vertices fixed, each 1-path sent onto its edge with
    the least endpoint as source (the far end lands on the other endpoint,
    or on the same one for a 1-edge)."""
    G = MultigraphView(_carrier(G)).carrier
    X = explosion(G).carrier
    fv = {}
    for tag, x in X.V:
        if tag == 0:
            fv[(tag, x)] = x
        else:
            n, e = x
            S = sorted(G.eps[e], key=atom_text)
            fv[(tag, x)] = S[0] if n == 0 else S[-1]
    fe = {(tag, e): e for tag, e in X.E}
    return HyperMorphism(X, G, FiniteFunction(X.V, G.V, fv), FiniteFunction(X.E, G.E, fe))


def is_m_projective(G) -> bool:
    """Projective in the multigraph category: a disjoint union of isolated
    vertices and 1-paths, i.e. every edge has two endpoints and no vertex
    lies on more than one edge."""
    G = _carrier(G)
    seen: set = set()
    for e in G.E:
        S = G.eps[e]
        if len(S) != 2 or S & seen:
            return False
        seen |= S
    return True


# envelopes


@dataclass(frozen=True)
class MEnvelopes:
    injective_envelope: MultigraphView
    envelope_map: HyperMorphism
    partial_morphism_representer: MultigraphView
    representer_map: HyperMorphism


def m_envelopes(G, bounds: Bounds = DEFAULT_BOUNDS) -> MEnvelopes:
    """Del applied to the loading and to the partial morphism representer."""
    G = MultigraphView(_carrier(G)).carrier
    L, j = loading(G, bounds)
    Gt, eta = partial_morphism_representer(G, bounds)
    DL, _ = del_(L)
    DG, _ = del_(Gt)
    return MEnvelopes(DL, del_factor(j), DG, del_factor(eta))



# limits and colimits inside the multigraph category


def m_limit(kind: str, *args, bounds: Bounds = DEFAULT_BOUNDS) -> Limit:
    """Products and the terminal object are Del of the hypergraph ones;
    equalizers are inherited unchanged."""
    if kind == "equalizer":
        return set_system.equalizer(*args)
    if kind == "terminal":
        objs = []
    elif kind == "product":
        objs = list(args[0]) if len(args) == 1 and isinstance(args[0], (list, tuple)) else list(args)
    else:
        raise ValueError(f"unknown limit kind {kind!r}")
    for G in objs:
        MultigraphView(_carrier(G))
    P = set_system.product([_carrier(G) for G in objs], bounds)
    D, j = del_(P.apex)
    legs = tuple(leg @ j for leg in P.legs)
    if not objs:
        return Limit(D.carrier, (), lambda X: del_factor(P.mediate(_carrier(X))))
    return Limit(D.carrier, legs, lambda *cone: del_factor(P.mediate(*cone)))


def m_colimit(kind: str, *args) -> Colimit:
    """Colimits of multigraphs computed in the hypergraph category stay multigraphs."""
    C = set_system.hyper_colimit(kind, *args)
    MultigraphView(C.apex)
    return C

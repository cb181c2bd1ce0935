"""Set-system hypergraphs: each edge carries a subset of the vertex set.

This category is the comma category of the identity on Set over the
covariant power-set functor.  It has all finite limits and colimits, a
partial morphism representer and injective envelopes, but no exponentials
and very few projectives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .finset import (
    DEFAULT_BOUNDS,
    Bounds,
    FiniteFunction,
    FiniteSet,
    SizeError,
    atom_text,
    coequalize_set,
    coproduct_set,
    image_of,
    powerset,
    product_set,
)
from .presheaf import MorphismError


class SetSystemHypergraph:
    """Vertices V, edges E and an endpoint map eps: E -> P(V)."""

    __slots__ = ("V", "E", "eps", "_hash")

    def __init__(self, V: FiniteSet, E: FiniteSet, eps: Mapping):
        eps = {e: frozenset(eps[e]) for e in E}
        for e, S in eps.items():
            for v in S:
                if v not in V:
                    raise ValueError(f"edge {atom_text(e)} has endpoint {atom_text(v)} outside the vertex set")
        self.V, self.E, self.eps = V, E, eps
        self._hash = None

    @classmethod
    def make(cls, V, E, eps):
        G = object.__new__(cls)
        G.V, G.E, G.eps, G._hash = V, E, eps, None
        return G

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Mapping) -> "SetSystemHypergraph":
        return cls(FiniteSet(vertices), FiniteSet(edges), {e: frozenset(S) for e, S in edges.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, SetSystemHypergraph) and self.V == other.V and self.E == other.E and self.eps == other.eps

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.V, self.E, frozenset(self.eps.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SetSystemHypergraph(V={len(self.V)}, E={len(self.E)})"

    def sizes(self) -> tuple[int, int]:
        return len(self.V), len(self.E)

    def eps_function(self, bounds: Bounds = DEFAULT_BOUNDS) -> FiniteFunction:
        return FiniteFunction(self.E, powerset(self.V, bounds), self.eps)

    def edges_over(self, S: frozenset) -> list:
        return [e for e in self.E if self.eps[e] == S]

    def identity(self) -> "HyperMorphism":
        return HyperMorphism.make(self, self, FiniteFunction.identity(self.V), FiniteFunction.identity(self.E))


class HyperMorphism:
    """Vertex and edge maps with eps_cod(fE(e)) = fV[eps_dom(e)] for every edge."""

    __slots__ = ("dom", "cod", "fV", "fE", "_hash")

    def __init__(self, dom: SetSystemHypergraph, cod: SetSystemHypergraph, fV: FiniteFunction, fE: FiniteFunction):
        if fV.dom != dom.V or fV.cod != cod.V:
            raise MorphismError("vertex map does not run between the vertex sets")
        if fE.dom != dom.E or fE.cod != cod.E:
            raise MorphismError("edge map does not run between the edge sets")
        for e in dom.E:
            if cod.eps[fE(e)] != image_of(fV, dom.eps[e]):
                raise MorphismError(f"image condition fails at edge {atom_text(e)}")
        self.dom, self.cod, self.fV, self.fE = dom, cod, fV, fE
        self._hash = None

    @classmethod
    def make(cls, dom, cod, fV, fE):
        m = object.__new__(cls)
        m.dom, m.cod, m.fV, m.fE, m._hash = dom, cod, fV, fE, None
        return m

    @classmethod
    def from_dicts(cls, dom, cod, v: Mapping, e: Mapping) -> "HyperMorphism":
        return cls(dom, cod, FiniteFunction(dom.V, cod.V, v), FiniteFunction(dom.E, cod.E, e))

    @property
    def comps(self) -> dict:
        return {"V": self.fV, "E": self.fE}

    def __matmul__(self, other: "HyperMorphism") -> "HyperMorphism":
        if other.cod != self.dom:
            raise ValueError("cannot compose: codomain and domain differ")
        return HyperMorphism.make(other.dom, self.cod, self.fV @ other.fV, self.fE @ other.fE)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HyperMorphism)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.fV == other.fV
            and self.fE == other.fE
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.fV, self.fE))
        return self._hash

    def __repr__(self) -> str:
        return f"HyperMorphism({self.dom!r} -> {self.cod!r})"

    def is_mono(self) -> bool:
        return self.fV.is_injective() and self.fE.is_injective()

    def is_epi(self) -> bool:
        return self.fV.is_surjective() and self.fE.is_surjective()

    def is_iso(self) -> bool:
        return self.fV.is_bijective() and self.fE.is_bijective()


# --------------------------------------------------------------------------
# standard objects


@lru_cache(maxsize=4096)
def vertex_star(X: FiniteSet, bounds: Bounds = DEFAULT_BOUNDS) -> SetSystemHypergraph:
    """Complete simplicial hypergraph: one edge for every subset of X."""
    P = powerset(X, bounds)
    return SetSystemHypergraph.make(X, P, {S: S for S in P})


@lru_cache(maxsize=4096)
def vertex_diamond(X: FiniteSet) -> SetSystemHypergraph:
    return SetSystemHypergraph.make(X, FiniteSet(), {})


@lru_cache(maxsize=4096)
def edge_star(X: FiniteSet) -> SetSystemHypergraph:
    """Loose 0-edges (0, x) and 1-edges (1, x) on the single vertex 1."""
    E = FiniteSet((n, x) for n in (0, 1) for x in X)
    return SetSystemHypergraph.make(FiniteSet([1]), E, {(n, x): frozenset([1]) if n else frozenset() for n, x in E})


@lru_cache(maxsize=4096)
def k_edge(X: FiniteSet) -> SetSystemHypergraph:
    """A single edge, named 1, whose endpoint set is all of X."""
    return SetSystemHypergraph.make(X, FiniteSet([1]), {1: frozenset(X)})


generator = k_edge


def terminal() -> SetSystemHypergraph:
    """E_1 + E_0: a 1-edge and a 0-edge at a single vertex."""
    return hyper_colimit("coproduct", [k_edge(FiniteSet([1])), k_edge(FiniteSet())]).apex


def standard_hypergraph(kind: str, X: FiniteSet | None = None, bounds: Bounds = DEFAULT_BOUNDS) -> SetSystemHypergraph:
    if kind == "vertex_star":
        return vertex_star(X, bounds)
    if kind == "vertex_diamond":
        return vertex_diamond(X)
    if kind == "edge_star":
        return edge_star(X)
    if kind in ("k_edge", "generator_GS"):
        return k_edge(X)
    if kind == "terminal":
        return terminal()
    raise ValueError(f"unknown standard hypergraph {kind!r}")


def vertex_diamond_map(f: FiniteFunction) -> HyperMorphism:
    A, B = vertex_diamond(f.dom), vertex_diamond(f.cod)
    return HyperMorphism.make(A, B, f, FiniteFunction.empty(B.E))


def vertex_star_map(f: FiniteFunction, bounds: Bounds = DEFAULT_BOUNDS) -> HyperMorphism:
    A, B = vertex_star(f.dom, bounds), vertex_star(f.cod, bounds)
    return HyperMorphism.make(A, B, f, FiniteFunction.unchecked(A.E, B.E, {S: image_of(f, S) for S in A.E}))


def edge_star_map(f: FiniteFunction) -> HyperMorphism:
    A, B = edge_star(f.dom), edge_star(f.cod)
    return HyperMorphism.make(A, B, FiniteFunction.identity(A.V), FiniteFunction.unchecked(A.E, B.E, {(n, x): (n, f(x)) for n, x in A.E}))


# --------------------------------------------------------------------------
# hom-set search


def _vertex_profile(G: SetSystemHypergraph, v) -> tuple:
    return tuple(sorted(len(G.eps[e]) for e in G.E if v in G.eps[e]))


class _Search:
    def __init__(self, G: SetSystemHypergraph, H: SetSystemHypergraph, iso: bool):
        self.G, self.H, self.iso = G, H, iso
        self.verts = list(G.V)
        pos = {v: k for k, v in enumerate(self.verts)}
        self.index: dict[frozenset, list] = {}
        for f in H.E:
            self.index.setdefault(H.eps[f], []).append(f)
        self.check_at: list[list] = [[] for _ in self.verts]
        self.loose = []
        for e in G.E:
            S = G.eps[e]
            if S:
                self.check_at[max(pos[v] for v in S)].append(e)
            else:
                self.loose.append(e)
        self.choices = []
        for v in self.verts:
            cands = list(H.V)
            if iso:
                p = _vertex_profile(G, v)
                cands = [w for w in cands if _vertex_profile(H, w) == p]
            self.choices.append(cands)

    def candidates(self, fv: dict, e) -> list:
        return self.index.get(frozenset(fv[v] for v in self.G.eps[e]), [])

    def vertex_maps(self) -> Iterator[dict]:
        if any(not self.candidates({}, e) for e in self.loose):
            return
        n = len(self.verts)
        fv: dict = {}
        used: set = set()

        def rec(k):
            if k == n:
                yield fv
                return
            v = self.verts[k]
            for w in self.choices[k]:
                if self.iso and w in used:
                    continue
                fv[v] = w
                if all(self.candidates(fv, e) for e in self.check_at[k]):
                    used.add(w)
                    yield from rec(k + 1)
                    used.discard(w)
                del fv[v]

        yield from rec(0)

    def build(self, fv: dict, fe: dict) -> HyperMorphism:
        G, H = self.G, self.H
        return HyperMorphism.make(G, H, FiniteFunction.unchecked(G.V, H.V, dict(fv)), FiniteFunction.unchecked(G.E, H.E, fe))


def hom_iter(G: SetSystemHypergraph, H: SetSystemHypergraph) -> Iterator[HyperMorphism]:
    s = _Search(G, H, iso=False)
    edges = list(G.E)
    for fv in s.vertex_maps():
        lists = [s.candidates(fv, e) for e in edges]
        for combo in itertools.product(*lists):
            yield s.build(fv, dict(zip(edges, combo)))


def hom_count(G: SetSystemHypergraph, H: SetSystemHypergraph) -> int:
    s = _Search(G, H, iso=False)
    total = 0
    for fv in s.vertex_maps():
        n = 1
        for e in G.E:
            n *= len(s.candidates(fv, e))
        total += n
    return total


def find_iso(G: SetSystemHypergraph, H: SetSystemHypergraph) -> HyperMorphism | None:
    if G.sizes() != H.sizes():
        return None
    s = _Search(G, H, iso=True)
    for fv in s.vertex_maps():
        groups: dict[frozenset, list] = {}
        for e in G.E:
            groups.setdefault(frozenset(fv[v] for v in G.eps[e]), []).append(e)
        fe = {}
        for S, es in groups.items():
            fs = s.index.get(S, [])
            if len(fs) != len(es):
                break
            fe.update(zip(es, fs))
        else:
            if len(fe) == len(G.E):
                return s.build(fv, fe)
    return None


def hom_hypergraphs(G: SetSystemHypergraph, H: SetSystemHypergraph, mode: str = "list", limit: int | None = None):
    """Hom-set search with ``mode`` one of count, list, first, iso."""
    if mode == "count":
        return hom_count(G, H)
    if mode == "list":
        out = []
        for m in hom_iter(G, H):
            out.append(m)
            if limit is not None and len(out) > limit:
                raise SizeError(f"hom-set exceeds the hom bound {limit}")
        return out
    if mode == "first":
        return next(hom_iter(G, H), None)
    if mode == "iso":
        return find_iso(G, H)
    raise ValueError(f"unknown hom mode {mode!r}")


# --------------------------------------------------------------------------
# limits


@dataclass(frozen=True)
class Limit:
    apex: SetSystemHypergraph
    legs: tuple
    _mediate: Callable

    def mediate(self, *cone):
        return self._mediate(*cone)


@dataclass(frozen=True)
class Colimit:
    apex: SetSystemHypergraph
    legs: tuple
    _mediate: Callable

    def mediate(self, *cocone):
        return self._mediate(*cocone)


def _colored_subsets(box: list, targets: Sequence[frozenset], bounds: Bounds) -> Iterator[frozenset]:
    """Subsets A of ``box`` (a list of vertex tuples) whose k-th projection is targets[k]."""
    if 2 ** len(box) > bounds.powerset:
        raise SizeError(f"product edge search over {len(box)} vertices exceeds the powerset bound {bounds.powerset}")
    for r in range(len(box) + 1):
        for A in itertools.combinations(box, r):
            if all(frozenset(t[k] for t in A) == T for k, T in enumerate(targets)):
                yield frozenset(A)


def product(Gs: Sequence[SetSystemHypergraph], bounds: Bounds = DEFAULT_BOUNDS) -> Limit:
    """Product with edges (A, e) where e is a tuple of factor edges and A is
    an endpoint set whose projections are exactly the factor endpoint sets."""
    Gs = list(Gs)
    if not Gs:
        T = terminal()
        return Limit(T, (), lambda X: _to_terminal(X, T))
    V, pV = product_set([G.V for G in Gs])
    Z = list(itertools.product(*[G.E.elements for G in Gs]))
    eps = {}
    for etuple in Z:
        targets = [G.eps[e] for G, e in zip(Gs, etuple)]
        box = list(itertools.product(*[sorted(T, key=atom_text) for T in targets]))
        for A in _colored_subsets(box, targets, bounds):
            eps[(A, etuple)] = A
    E = FiniteSet(eps)
    P = SetSystemHypergraph.make(V, E, eps)
    legs = tuple(
        HyperMorphism.make(P, G, pV[k], FiniteFunction.unchecked(E, G.E, {a: a[1][k] for a in E}))
        for k, G in enumerate(Gs)
    )

    def mediate(*cone):
        if len(cone) != len(Gs) or any(c.cod != G for c, G in zip(cone, Gs)):
            raise ValueError("cone legs must land on the product factors in order")
        X = cone[0].dom
        fv = {x: tuple(c.fV(x) for c in cone) for x in X.V}
        fe = {e: (frozenset(fv[v] for v in X.eps[e]), tuple(c.fE(e) for c in cone)) for e in X.E}
        return HyperMorphism(X, P, FiniteFunction(X.V, V, fv), FiniteFunction(X.E, E, fe))

    return Limit(P, legs, mediate)


def _to_terminal(X: SetSystemHypergraph, T: SetSystemHypergraph) -> HyperMorphism:
    (t,) = T.V.elements
    full = [f for f in T.E if T.eps[f]][0]
    empty = [f for f in T.E if not T.eps[f]][0]
    return HyperMorphism.make(
        X, T, FiniteFunction.constant(X.V, T.V, t), FiniteFunction.unchecked(X.E, T.E, {e: full if X.eps[e] else empty for e in X.E})
    )


def equalizer(f: HyperMorphism, g: HyperMorphism) -> Limit:
    """Vertices where f and g agree; edges where they agree and whose
    endpoints all lie among those vertices."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("equalizer needs a parallel pair")
    A = f.dom
    V = FiniteSet(v for v in A.V if f.fV(v) == g.fV(v))
    E = FiniteSet(e for e in A.E if f.fE(e) == g.fE(e) and all(v in V for v in A.eps[e]))
    Q = SetSystemHypergraph.make(V, E, {e: A.eps[e] for e in E})
    leg = HyperMorphism.make(Q, A, FiniteFunction.inclusion(V, A.V), FiniteFunction.inclusion(E, A.E))

    def mediate(h):
        if h.cod != A or (f @ h) != (g @ h):
            raise ValueError("map does not equalize the pair")
        return HyperMorphism(h.dom, Q, h.fV.restrict(h.dom.V, V), h.fE.restrict(h.dom.E, E))

    return Limit(Q, (leg,), mediate)


def pullback(f: HyperMorphism, g: HyperMorphism, bounds: Bounds = DEFAULT_BOUNDS) -> Limit:
    """Pullback of A -f-> C <-g- B.

    This is the equalizer of f o p1 and g o p2 on A x B, generated directly:
    only product edges over matching edge pairs and inside the vertex
    agreement set are produced.
    """
    if f.cod != g.cod:
        raise ValueError("pullback needs a cospan")
    A, B = f.dom, g.dom
    V = FiniteSet((a, b) for a in A.V for b in B.V if f.fV(a) == g.fV(b))
    eps = {}
    for e1 in A.E:
        for e2 in B.E:
            if f.fE(e1) != g.fE(e2):
                continue
            S1, S2 = A.eps[e1], B.eps[e2]
            box = [(a, b) for a in sorted(S1, key=atom_text) for b in sorted(S2, key=atom_text) if (a, b) in V]
            for S in _colored_subsets(box, [S1, S2], bounds):
                eps[(S, (e1, e2))] = S
    E = FiniteSet(eps)
    P = SetSystemHypergraph.make(V, E, eps)
    legs = (
        HyperMorphism.make(P, A, FiniteFunction.unchecked(V, A.V, {x: x[0] for x in V}), FiniteFunction.unchecked(E, A.E, {x: x[1][0] for x in E})),
        HyperMorphism.make(P, B, FiniteFunction.unchecked(V, B.V, {x: x[1] for x in V}), FiniteFunction.unchecked(E, B.E, {x: x[1][1] for x in E})),
    )

    def mediate(h1, h2):
        if h1.cod != A or h2.cod != B or (f @ h1) != (g @ h2):
            raise ValueError("maps do not form a commuting square over the cospan")
        X = h1.dom
        fv = {x: (h1.fV(x), h2.fV(x)) for x in X.V}
        fe = {e: (frozenset(fv[v] for v in X.eps[e]), (h1.fE(e), h2.fE(e))) for e in X.E}
        return HyperMorphism(X, P, FiniteFunction(X.V, V, fv), FiniteFunction(X.E, E, fe))

    return Limit(P, legs, mediate)


def hyper_limit(kind: str, *args, bounds: Bounds = DEFAULT_BOUNDS) -> Limit:
    """``product`` (list of hypergraphs), ``equalizer`` (f, g), ``pullback`` (f, g) or ``terminal``."""
    if kind == "product":
        objs = list(args[0]) if len(args) == 1 and isinstance(args[0], (list, tuple)) else list(args)
        return product(objs, bounds)
    if kind == "equalizer":
        return equalizer(*args)
    if kind == "pullback":
        return pullback(*args, bounds=bounds)
    if kind == "terminal":
        T = terminal()
        return Limit(T, (), lambda X: _to_terminal(X, T))
    raise ValueError(f"unknown limit kind {kind!r}")


# --------------------------------------------------------------------------
# colimits


def coproduct(Gs: Sequence[SetSystemHypergraph]) -> Colimit:
    Gs = list(Gs)
    V, iV = coproduct_set([G.V for G in Gs])
    E, iE = coproduct_set([G.E for G in Gs])
    eps = {(k, e): frozenset((k, v) for v in Gs[k].eps[e]) for k, e in E}
    C = SetSystemHypergraph.make(V, E, eps)
    legs = tuple(HyperMorphism.make(G, C, iV[k], iE[k]) for k, G in enumerate(Gs))

    def mediate(*cocone):
        if len(cocone) != len(Gs) or any(c.dom != G for c, G in zip(cocone, Gs)):
            raise ValueError("cocone legs must start at the coproduct summands in order")
        if not cocone:
            raise ValueError("empty cocone: use the initial object")
        Y = cocone[0].cod
        return HyperMorphism.make(
            C, Y,
            FiniteFunction.unchecked(V, Y.V, {(k, v): cocone[k].fV(v) for k, v in V}),
            FiniteFunction.unchecked(E, Y.E, {(k, e): cocone[k].fE(e) for k, e in E}),
        )

    return Colimit(C, legs, mediate)


def coequalizer(f: HyperMorphism, g: HyperMorphism) -> Colimit:
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("coequalizer needs a parallel pair")
    B = f.cod
    V, qV = coequalize_set(f.fV, g.fV)
    E, qE = coequalize_set(f.fE, g.fE)
    eps: dict = {}
    for e in B.E:
        S = image_of(qV, B.eps[e])
        c = qE(e)
        if eps.setdefault(c, S) != S:
            raise ValueError(
                f"representatives of edge class {atom_text(c)} disagree on endpoints; the pair is not parallel"
            )
    C = SetSystemHypergraph.make(V, E, eps)
    leg = HyperMorphism.make(B, C, qV, qE)

    def mediate(h):
        if h.dom != B or (h @ f) != (h @ g):
            raise ValueError("map does not coequalize the pair")
        return HyperMorphism.make(
            C, h.cod,
            FiniteFunction.unchecked(V, h.cod.V, {qV(v): h.fV(v) for v in B.V}),
            FiniteFunction.unchecked(E, h.cod.E, {qE(e): h.fE(e) for e in B.E}),
        )

    return Colimit(C, (leg,), mediate)


def initial() -> SetSystemHypergraph:
    return SetSystemHypergraph.make(FiniteSet(), FiniteSet(), {})


def hyper_colimit(kind: str, *args) -> Colimit:
    """``coproduct`` (list of hypergraphs), ``coequalizer`` (f, g) or ``initial``."""
    if kind == "coproduct":
        objs = list(args[0]) if len(args) == 1 and isinstance(args[0], (list, tuple)) else list(args)
        if not objs:
            return hyper_colimit("initial")
        return coproduct(objs)
    if kind == "coequalizer":
        return coequalizer(*args)
    if kind == "initial":
        Z = initial()
        return Colimit(Z, (), lambda Y: HyperMorphism.make(Z, Y, FiniteFunction.empty(Y.V), FiniteFunction.empty(Y.E)))
    raise ValueError(f"unknown colimit kind {kind!r}")


def product_map(f: HyperMorphism, g: HyperMorphism, bounds: Bounds = DEFAULT_BOUNDS) -> HyperMorphism:
    """f x g between the constructed binary products."""
    src = product([f.dom, g.dom], bounds)
    tgt = product([f.cod, g.cod], bounds)
    return tgt.mediate(f @ src.legs[0], g @ src.legs[1])


# --------------------------------------------------------------------------
# adjoint constructions and classifiers


def factor_through_edge_star(G: SetSystemHypergraph, xi: FiniteFunction) -> HyperMorphism:
    """The unique G -> E*(X) whose edge part followed by (n, x) |-> x is xi."""
    if xi.dom != G.E:
        raise ValueError("xi must be defined on the edges of G")
    T = edge_star(xi.cod)
    fe = {e: (1 if G.eps[e] else 0, xi(e)) for e in G.E}
    return HyperMorphism(G, T, FiniteFunction.constant(G.V, T.V, 1), FiniteFunction(G.E, T.E, fe))


def zeta(X: FiniteSet) -> FiniteFunction:
    """Counit E(E*(X)) -> X."""
    T = edge_star(X)
    return FiniteFunction(T.E, X, {(n, x): x for n, x in T.E})


@lru_cache(maxsize=4096)
def partial_morphism_representer(G: SetSystemHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> tuple[SetSystemHypergraph, HyperMorphism]:
    """G~: a new vertex (0, 0) and a new edge (0, S) for every vertex subset S.

    Original vertices and edges are tagged with 1.
    """
    V = FiniteSet([(1, v) for v in G.V] + [(0, 0)])
    P = powerset(V, bounds)
    eps = {(1, e): frozenset((1, v) for v in G.eps[e]) for e in G.E}
    eps.update({(0, S): S for S in P})
    E = FiniteSet(eps)
    Gt = SetSystemHypergraph.make(V, E, eps)
    eta = HyperMorphism.make(
        G, Gt,
        FiniteFunction.unchecked(G.V, V, {v: (1, v) for v in G.V}),
        FiniteFunction.unchecked(G.E, E, {e: (1, e) for e in G.E}),
    )
    return Gt, eta


def classify_partial_morphism(phi: HyperMorphism, psi: HyperMorphism, bounds: Bounds = DEFAULT_BOUNDS) -> HyperMorphism:
    """The map K -> G~ classifying the partial map K <-phi- H -psi-> G."""
    if not phi.is_mono():
        raise ValueError("phi must be a monomorphism (injective on vertices and edges)")
    if phi.dom != psi.dom:
        raise ValueError("phi and psi must share their domain")
    K, G = phi.cod, psi.cod
    Gt, _ = partial_morphism_representer(G, bounds)
    v_back = {phi.fV(w): w for w in phi.dom.V}
    e_back = {phi.fE(f): f for f in phi.dom.E}
    fv = {v: (1, psi.fV(v_back[v])) if v in v_back else (0, 0) for v in K.V}
    fe = {}
    for e in K.E:
        if e in e_back:
            fe[e] = (1, psi.fE(e_back[e]))
        else:
            fe[e] = (0, frozenset(fv[v] for v in K.eps[e]))
    return HyperMorphism(K, Gt, FiniteFunction(K.V, Gt.V, fv), FiniteFunction(K.E, Gt.E, fe))


def recovers_pullback(chi: HyperMorphism, phi: HyperMorphism, psi: HyperMorphism, bounds: Bounds = DEFAULT_BOUNDS) -> bool:
    """Whether K <-phi- H -psi-> G is a pullback of K -chi-> G~ <-eta- G."""
    G = psi.cod
    _, eta = partial_morphism_representer(G, bounds)
    if chi.cod != eta.cod or chi.dom != phi.cod:
        return False
    if (chi @ phi) != (eta @ psi):
        return False
    pb = pullback(chi, eta, bounds)
    comparison = pb.mediate(phi, psi)
    return comparison.is_iso()


@lru_cache(maxsize=4096)
def loading(G: SetSystemHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> tuple[SetSystemHypergraph, HyperMorphism]:
    """Injective envelope: pad an empty vertex set with 0, then add an edge
    (0, S) for every vertex subset S that no edge of G already covers."""
    V = G.V if len(G.V) else FiniteSet([0])
    hit = set(G.eps.values())
    eps = {(1, e): G.eps[e] for e in G.E}
    eps.update({(0, S): S for S in powerset(V, bounds) if S not in hit})
    E = FiniteSet(eps)
    L = SetSystemHypergraph.make(V, E, eps)
    j = HyperMorphism.make(
        G, L,
        FiniteFunction.unchecked(G.V, V, {v: v for v in G.V}),
        FiniteFunction.unchecked(G.E, E, {e: (1, e) for e in G.E}),
    )
    return L, j


def neighborhood(G: SetSystemHypergraph, v) -> FiniteSet:
    """Vertices w with {v, w} inside some edge (v itself counts when it lies on an edge)."""
    return FiniteSet(w for e in G.E if v in G.eps[e] for w in G.eps[e])


def isolated_vertices(G: SetSystemHypergraph) -> FiniteSet:
    covered = set().union(*G.eps.values()) if G.eps else set()
    return FiniteSet(v for v in G.V if v not in covered)


def _is_essential(phi: HyperMorphism) -> bool:
    G, H = phi.dom, phi.cod
    if len(G.V):
        if not phi.fV.is_bijective():
            return False
    elif len(H.V) > 1:
        return False
    for S in set(G.eps.values()):
        lhs = frozenset(phi.fE(e) for e in G.E if G.eps[e] == S)
        rhs = frozenset(H.edges_over(image_of(phi.fV, S)))
        if lhs != rhs:
            return False
    hit = {H.eps[phi.fE(g)] for g in G.E}
    for U in set(H.eps.values()):
        if U not in hit and len(H.edges_over(U)) > 1:
            return False
    return True


def _is_coessential(phi: HyperMorphism) -> bool:
    G, H = phi.dom, phi.cod
    if not phi.fE.is_bijective():
        return False
    iso_G, iso_H = isolated_vertices(G), isolated_vertices(H)
    if any(phi.fV(v) not in iso_H for v in iso_G):
        return False
    for w in iso_H:
        if sum(1 for v in iso_G if phi.fV(v) == w) != 1:
            return False
    return True


@dataclass(frozen=True)
class MorphismFlags:
    mono: bool
    epi: bool
    essential_mono: bool
    coessential_epi: bool | None  # None when the map is not epic


def classify_morphism(phi: HyperMorphism) -> MorphismFlags:
    mono, epi = phi.is_mono(), phi.is_epi()
    return MorphismFlags(
        mono=mono,
        epi=epi,
        essential_mono=mono and _is_essential(phi),
        coessential_epi=_is_coessential(phi) if epi else None,
    )


@dataclass(frozen=True)
class ObjectFlags:
    injective: bool
    projective: bool
    multigraph: bool


def is_multigraph(G: SetSystemHypergraph) -> bool:
    return all(1 <= len(S) <= 2 for S in G.eps.values())


def classify_object(G: SetSystemHypergraph, bounds: Bounds = DEFAULT_BOUNDS) -> ObjectFlags:
    n = len(G.V)
    if n >= 63 or 2**n > bounds.powerset:
        raise SizeError(f"injectivity check over {n} vertices exceeds the powerset bound {bounds.powerset}")
    injective = n > 0 and len(set(G.eps.values())) == 2**n
    return ObjectFlags(
        injective=injective,
        projective=all(not S for S in G.eps.values()),
        multigraph=is_multigraph(G),
    )

"""Mechanical checks of universal properties, adjunctions, Frobenius maps and
the known counterexamples.

Every check returns a :class:`LawReport`.  Uniqueness claims are settled by
enumerating the whole relevant hom-set, never by trusting a construction.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable

from . import incidence as inc
from . import multigraph as mg
from . import presheaf
from . import quiver as qv
from . import set_system as hs
from .corpus import TRIPLE_CORPUS, corpus
from .finset import (
    DEFAULT_BOUNDS,
    Bounds,
    FiniteFunction,
    FiniteSet,
    HomAtom,
    MapAtom,
    all_functions,
    atom_text,
    product_set,
)
from .incidence import IncidenceHypergraph, IncidenceMorphism
from .presheaf import PresheafObject
from .quiver import Quiver, QuiverMorphism
from .set_system import HyperMorphism, SetSystemHypergraph

VERDICTS = ("holds", "fails", "witness_found")


@dataclass
class LawReport:
    law_name: str
    instance_description: str
    verdict: str
    evidence: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict != "holds" and not self.evidence:
            raise ValueError("a failing or witness report must carry evidence")

    @property
    def ok(self) -> bool:
        return self.verdict in ("holds", "witness_found")

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, indent=2)


def _verdict(ok: bool) -> str:
    return "holds" if ok else "fails"


def describe(x) -> str:
    """Short deterministic description of an object or morphism."""
    if isinstance(x, PresheafObject):
        return f"{type(x).__name__}{x.sizes()}"
    if isinstance(x, SetSystemHypergraph):
        return f"SetSystemHypergraph{x.sizes()}"
    if isinstance(x, FiniteSet):
        return f"set of {len(x)}"
    return type(x).__name__


def morphism_text(m) -> str:
    if isinstance(m, FiniteFunction):
        return atom_text(m.to_atom())
    comps = m.comps if hasattr(m, "comps") else {}
    return "; ".join(f"{s}: {atom_text(f.to_atom())}" for s, f in comps.items())


# --------------------------------------------------------------------------
# per-category operations


def set_homs(X: FiniteSet, Y: FiniteSet, bounds: Bounds = DEFAULT_BOUNDS) -> list[FiniteFunction]:
    return [FiniteFunction.unchecked(X, Y, a.as_dict()) for a in all_functions(X, Y, bounds)]


def hom(A, B, mode: str = "list", limit: int | None = None):
    """Hom-set search dispatching on the kind of object."""
    if isinstance(A, FiniteSet):
        fs = set_homs(A, B)
        return {"count": len(fs), "list": fs, "first": fs[0] if fs else None}[mode]
    if isinstance(A, mg.MultigraphView):
        A, B = A.carrier, mg._carrier(B)
    if isinstance(A, SetSystemHypergraph):
        return hs.hom_hypergraphs(A, mg._carrier(B), mode, limit)
    return presheaf.hom(A, B, mode, limit)


def identity(X):
    if isinstance(X, FiniteSet):
        return FiniteFunction.identity(X)
    return X.identity()


@dataclass(frozen=True)
class CategoryOps:
    name: str
    limit: Callable
    colimit: Callable
    exponential: Callable | None = None
    curry: Callable | None = None
    uncurry: Callable | None = None


CATEGORIES = {
    "Q": CategoryOps("Q", qv.quiver_limit, qv.quiver_colimit, qv.quiver_exponential, qv.quiver_curry, qv.quiver_uncurry),
    "H": CategoryOps("H", hs.hyper_limit, hs.hyper_colimit),
    "M": CategoryOps("M", mg.m_limit, mg.m_colimit),
    "R": CategoryOps("R", inc.inc_limit, inc.inc_colimit, inc.inc_exponential, inc.inc_curry, inc.inc_uncurry),
}


# --------------------------------------------------------------------------
# universal properties


def _unique_report(name: str, desc: str, candidates: list, good: Callable, constructed) -> LawReport:
    sat = [m for m in candidates if good(m)]
    ev = [f"candidates enumerated: {len(candidates)}", f"candidates satisfying the equations: {len(sat)}"]
    ok = len(sat) == 1 and sat[0] == constructed
    if len(sat) == 1:
        ev.append("the constructed map is the satisfying candidate" if ok else "the constructed map differs from the satisfying candidate")
    elif sat:
        ev.append("second solution: " + morphism_text(sat[1]))
    return LawReport(name, desc, _verdict(ok), ev)


def check_universal_property(kind: str, category: str, data: dict, bounds: Bounds = DEFAULT_BOUNDS) -> LawReport:
    """Enumerate every candidate mediating map and require exactly one to work.

    ``data`` keys by kind:
    product/coproduct: objects, cone/cocone; equalizer/coequalizer: pair, map;
    terminal: object; exponential: base, map (from the constructed product
    base x K); classifier (H only): mono, map.
    """
    ops = CATEGORIES[category]
    name = f"universal_property.{kind}.{category}"
    if kind == "product":
        objs, cone = data["objects"], data["cone"]
        L = ops.limit("product", list(objs))
        cands = hom(cone[0].dom, L.apex)
        good = lambda m: all(leg @ m == c for leg, c in zip(L.legs, cone))
        return _unique_report(name, f"{len(objs)} factors, cone from {describe(cone[0].dom)}", cands, good, L.mediate(*cone))
    if kind == "coproduct":
        objs, cocone = data["objects"], data["cocone"]
        C = ops.colimit("coproduct", list(objs))
        cands = hom(C.apex, cocone[0].cod)
        good = lambda m: all(m @ leg == c for leg, c in zip(C.legs, cocone))
        return _unique_report(name, f"{len(objs)} summands, cocone to {describe(cocone[0].cod)}", cands, good, C.mediate(*cocone))
    if kind == "equalizer":
        (f, g), h = data["pair"], data["map"]
        L = ops.limit("equalizer", f, g)
        cands = hom(h.dom, L.apex)
        good = lambda m: L.legs[0] @ m == h
        return _unique_report(name, f"pair on {describe(f.dom)}", cands, good, L.mediate(h))
    if kind == "coequalizer":
        (f, g), h = data["pair"], data["map"]
        C = ops.colimit("coequalizer", f, g)
        cands = hom(C.apex, h.cod)
        good = lambda m: m @ C.legs[0] == h
        return _unique_report(name, f"pair into {describe(f.cod)}", cands, good, C.mediate(h))
    if kind == "terminal":
        X = data["object"]
        L = ops.limit("terminal")
        cands = hom(X, L.apex)
        return _unique_report(name, f"maps from {describe(X)}", cands, lambda m: True, L.mediate(X))
    if kind == "exponential":
        if ops.exponential is None:
            raise ValueError(f"category {category} has no exponentials")
        base, psi = data["base"], data["map"]
        K = data["param"]
        E, _ = ops.exponential(base, psi.cod, bounds)
        cands = hom(K, E)
        good = lambda m: ops.uncurry(m, base, psi.cod, bounds) == psi
        return _unique_report(name, f"base {describe(base)}, parameter {describe(K)}", cands, good, ops.curry(psi, base, K, bounds))
    if kind == "classifier":
        if category != "H":
            raise ValueError("the partial morphism classifier is checked in H")
        phi, psi = data["mono"], data["map"]
        Gt, eta = hs.partial_morphism_representer(psi.cod, bounds)
        cands = hom(phi.cod, Gt)
        good = lambda chi: hs.recovers_pullback(chi, phi, psi, bounds)
        return _unique_report(name, f"mono {describe(phi.dom)} -> {describe(phi.cod)}", cands, good, hs.classify_partial_morphism(phi, psi, bounds))
    raise ValueError(f"unknown universal property {kind!r}")


# --------------------------------------------------------------------------
# adjunctions


@dataclass(frozen=True)
class Adjunction:
    """F -| G with unit X -> G F X and counit F G Y -> Y."""

    name: str
    left: str  # category of X: S, Q, H, M or R
    right: str  # category of Y
    F: Callable
    F_map: Callable
    G: Callable
    G_map: Callable
    unit: Callable
    counit: Callable

    def flat(self, f, X):
        return self.G_map(f) @ self.unit(X)

    def sharp(self, g, Y):
        return self.counit(Y) @ self.F_map(g)


def _fun(X, Y, d) -> FiniteFunction:
    return FiniteFunction.unchecked(X, Y, d)


def _q(dom, cod, v, e) -> QuiverMorphism:
    return QuiverMorphism.make(dom, cod, {"V": _fun(dom.V, cod.V, v), "E": _fun(dom.E, cod.E, e)})


def _h(dom, cod, v, e) -> HyperMorphism:
    return HyperMorphism.make(dom, cod, _fun(dom.V, cod.V, v), _fun(dom.E, cod.E, e))


def _r(dom, cod, v, e, i) -> IncidenceMorphism:
    return IncidenceMorphism.make(dom, cod, {"V": _fun(dom.V, cod.V, v), "E": _fun(dom.E, cod.E, e), "I": _fun(dom.I, cod.I, i)})


def _ident_set(X):
    return FiniteFunction.identity(X)


def _build_registry() -> dict[str, list[Adjunction]]:
    sort = lambda s: (lambda X: X.sets[s])
    sort_map = lambda s: (lambda m: m.comps[s])
    reg: dict[str, list[Adjunction]] = {}

    # quivers
    reg["quiver_vertex"] = [
        Adjunction("V◇ -| V (quivers)", "S", "Q", qv.vertex_diamond, qv.vertex_diamond_map, sort("V"), sort_map("V"),
                   _ident_set, lambda Q: _q(qv.vertex_diamond(Q.V), Q, {v: v for v in Q.V}, {})),
        Adjunction("V -| V★ (quivers)", "Q", "S", sort("V"), sort_map("V"), qv.vertex_star, qv.vertex_star_map,
                   lambda Q: _q(Q, qv.vertex_star(Q.V), {v: v for v in Q.V}, {e: Q.endpoints(e) for e in Q.E}), _ident_set),
    ]
    reg["quiver_edge"] = [
        Adjunction("E◇ -| E (quivers)", "S", "Q", qv.edge_diamond, qv.edge_diamond_map, sort("E"), sort_map("E"),
                   _ident_set, lambda Q: _q(qv.edge_diamond(Q.E), Q, {(n, e): Q.endpoints(e)[n] for n in (0, 1) for e in Q.E}, {e: e for e in Q.E})),
        Adjunction("E -| E★ (quivers)", "Q", "S", sort("E"), sort_map("E"), qv.edge_star, qv.edge_star_map,
                   lambda Q: _q(Q, qv.edge_star(Q.E), {v: 1 for v in Q.V}, {e: e for e in Q.E}), _ident_set),
    ]

    # set-system hypergraphs
    reg["hyper_vertex"] = [
        Adjunction("V◇ -| V (hypergraphs)", "S", "H", hs.vertex_diamond, hs.vertex_diamond_map, lambda G: G.V, lambda m: m.fV,
                   _ident_set, lambda G: _h(hs.vertex_diamond(G.V), G, {v: v for v in G.V}, {})),
        Adjunction("V -| V★ (hypergraphs)", "H", "S", lambda G: G.V, lambda m: m.fV, hs.vertex_star, hs.vertex_star_map,
                   lambda G: _h(G, hs.vertex_star(G.V), {v: v for v in G.V}, dict(G.eps)), _ident_set),
    ]
    reg["hyper_edge"] = [
        Adjunction("E -| E★ (hypergraphs)", "H", "S", lambda G: G.E, lambda m: m.fE, hs.edge_star, hs.edge_star_map,
                   lambda G: hs.factor_through_edge_star(G, FiniteFunction.identity(G.E)), hs.zeta),
    ]

    # multigraphs
    reg["deletion"] = [
        Adjunction("N -| Del", "M", "H", lambda G: G, lambda m: m, lambda H: mg.del_(H)[0].carrier, mg.del_map,
                   lambda G: G.identity(), lambda H: mg.del_(H)[1]),
    ]
    reg["assoc_digraph"] = [
        Adjunction("U -| D", "Q", "M", lambda Q: mg.underlying(Q).carrier, mg.underlying_map,
                   lambda G: mg.assoc_digraph(G)[0], mg.assoc_digraph_map, mg.assoc_unit, lambda G: mg.assoc_digraph(G)[1]),
    ]

    # incidence hypergraphs
    reg["inc_vertex"] = [
        Adjunction("V◇ -| V (incidence)", "S", "R", inc.v_diamond, inc.v_diamond_map, sort("V"), sort_map("V"),
                   _ident_set, lambda G: _r(inc.v_diamond(G.V), G, {v: v for v in G.V}, {}, {})),
        Adjunction("V -| V★ (incidence)", "R", "S", sort("V"), sort_map("V"), inc.v_star, inc.v_star_map,
                   lambda G: _r(G, inc.v_star(G.V), {v: v for v in G.V}, {e: 1 for e in G.E}, {i: (G.port(i), 1) for i in G.I}), _ident_set),
    ]
    reg["inc_edge"] = [
        Adjunction("E◇ -| E (incidence)", "S", "R", inc.e_diamond, inc.e_diamond_map, sort("E"), sort_map("E"),
                   _ident_set, lambda G: _r(inc.e_diamond(G.E), G, {}, {e: e for e in G.E}, {})),
        Adjunction("E -| E★ (incidence)", "R", "S", sort("E"), sort_map("E"), inc.e_star, inc.e_star_map,
                   lambda G: _r(G, inc.e_star(G.E), {v: 1 for v in G.V}, {e: e for e in G.E}, {i: (1, G.att(i)) for i in G.I}), _ident_set),
    ]
    reg["inc_incidence"] = [
        Adjunction("I◇ -| I", "S", "R", inc.i_diamond, inc.i_diamond_map, sort("I"), sort_map("I"),
                   _ident_set, lambda G: _r(inc.i_diamond(G.I), G, {i: G.port(i) for i in G.I}, {i: G.att(i) for i in G.I}, {i: i for i in G.I})),
        Adjunction("I -| I★", "R", "S", sort("I"), sort_map("I"), inc.i_star, inc.i_star_map,
                   lambda G: _r(G, inc.i_star(G.I), {v: 1 for v in G.V}, {e: 1 for e in G.E}, {i: i for i in G.I}), _ident_set),
    ]
    reg["upsilon"] = [
        Adjunction("Υ◇ -| Υ", "R", "Q", inc.upsilon_diamond, inc.upsilon_diamond_map, inc.upsilon, inc.upsilon_map,
                   inc.upsilon_diamond_unit, inc.upsilon_diamond_counit),
        Adjunction("Υ -| Υ★", "Q", "R", inc.upsilon, inc.upsilon_map, inc.upsilon_star, inc.upsilon_star_map,
                   inc.upsilon_star_unit, inc.upsilon_star_counit),
    ]
    return reg


ADJUNCTIONS = _build_registry()

SET_SAMPLES = (FiniteSet(), FiniteSet([1]), FiniteSet([1, 2]))


def default_samples(cat: str, full: bool = True) -> tuple:
    if cat == "S":
        return SET_SAMPLES
    return corpus(cat) if full else corpus(cat, TRIPLE_CORPUS)


def sample_pairs(adj: Adjunction) -> list[tuple]:
    """Every corpus object on each side, paired with the small probe corpus
    of the other side."""
    pairs = [(X, Y) for X in default_samples(adj.left) for Y in default_samples(adj.right, full=False)]
    pairs += [(X, Y) for X in default_samples(adj.left, full=False) for Y in default_samples(adj.right)]
    seen, out = set(), []
    for p in pairs:
        key = (id(p[0]), id(p[1]))
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


@lru_cache(maxsize=4096)
def _endos(X, k: int = 2) -> tuple:
    """The identity plus the first k - 1 other endomorphisms in search order."""
    ident = identity(X)
    if isinstance(X, FiniteSet):
        others = (f for f in set_homs(X, X) if f != ident)
    elif isinstance(X, SetSystemHypergraph):
        others = (m for m in hs.hom_iter(X, X) if m != ident)
    else:
        others = (m for m in presheaf.hom_iter(X, X) if m != ident)
    return (ident, *itertools.islice(others, k - 1))


def check_adjunction_half(adj: Adjunction, pairs: list[tuple], naturality: int = 2) -> LawReport:
    evidence: list[str] = []
    for X, Y in pairs:
        FX, GY = adj.F(X), adj.G(Y)
        left = hom(FX, Y)
        right = hom(X, GY)
        where = f"X={describe(X)}, Y={describe(Y)}"
        if len(left) != len(right):
            evidence.append(f"hom-count mismatch {len(left)} != {len(right)} at {where}")
            break
        flats = [adj.flat(f, X) for f in left]
        if set(flats) != set(right) or len(set(flats)) != len(flats):
            evidence.append(f"transposition is not a bijection at {where}")
            break
        bad = [f for f, g in zip(left, flats) if adj.sharp(g, Y) != f]
        if bad:
            evidence.append(f"round trip fails for {morphism_text(bad[0])} at {where}")
            break
        nat_fail = None
        for a in _endos(X, naturality):
            for b in _endos(Y, naturality):
                for f in left[:naturality]:
                    lhs = adj.flat(b @ f @ adj.F_map(a), X)
                    rhs = adj.G_map(b) @ adj.flat(f, X) @ a
                    if lhs != rhs:
                        nat_fail = f"naturality square fails at {where}"
        if nat_fail:
            evidence.append(nat_fail)
            break
    if evidence:
        return LawReport(f"adjunction.{adj.name}", f"{len(pairs)} sample pairs", "fails", evidence)
    return LawReport(f"adjunction.{adj.name}", f"{len(pairs)} sample pairs", "holds",
                     [f"hom-sets matched and transposed bijectively on {len(pairs)} pairs"])


def check_adjunction(pair: str, left_samples=None, right_samples=None) -> LawReport:
    """Check every half of a registered adjunction.

    Explicit sample lists are used for all halves when given; otherwise each
    half uses :func:`sample_pairs`.
    """
    if pair not in ADJUNCTIONS:
        raise ValueError(f"unknown adjunction {pair!r}; known: {', '.join(sorted(ADJUNCTIONS))}")
    reports = []
    for adj in ADJUNCTIONS[pair]:
        if left_samples is not None or right_samples is not None:
            ls = left_samples if left_samples is not None else default_samples(adj.left, full=False)
            rs = right_samples if right_samples is not None else default_samples(adj.right, full=False)
            pairs = [(X, Y) for X in ls for Y in rs]
        else:
            pairs = sample_pairs(adj)
        reports.append(check_adjunction_half(adj, pairs))
    ok = all(r.verdict == "holds" for r in reports)
    evidence = [f"{r.law_name}: {r.verdict}; " + "; ".join(r.evidence) for r in reports]
    return LawReport(f"adjunction.{pair}", " and ".join(a.name for a in ADJUNCTIONS[pair]), _verdict(ok), evidence)


# --------------------------------------------------------------------------
# Frobenius morphisms


def _frobenius_generic(L: Callable, L_map: Callable, counit, F_of_G, G, S: FiniteSet, product):
    """<counit o L(pi_1), L(pi_2)> : L(F(G) x S) -> G x L(S)."""
    XS, (p1, p2) = product_set([F_of_G, S])
    dom = L(XS)
    P = product([G, L(S)])
    return P.mediate(counit @ L_map(p1), L_map(p2)), dom, P.apex


def frobenius(name: str, obj, S: FiniteSet | IncidenceHypergraph) -> tuple:
    """Build the Frobenius map, compare with the explicit formula and test
    whether it is an isomorphism."""
    if name == "phi_V":
        adj = ADJUNCTIONS["inc_vertex"][0]
        m, dom, cod = _frobenius_generic(inc.v_diamond, inc.v_diamond_map, adj.counit(obj), obj.V, obj, S, presheaf.product)
        explicit = _r(dom, cod, {x: x for x in dom.V}, {}, {})
    elif name == "phi_E":
        adj = ADJUNCTIONS["inc_edge"][0]
        m, dom, cod = _frobenius_generic(inc.e_diamond, inc.e_diamond_map, adj.counit(obj), obj.E, obj, S, presheaf.product)
        explicit = _r(dom, cod, {}, {x: x for x in dom.E}, {})
    elif name == "phi_I":
        adj = ADJUNCTIONS["inc_incidence"][0]
        m, dom, cod = _frobenius_generic(inc.i_diamond, inc.i_diamond_map, adj.counit(obj), obj.I, obj, S, presheaf.product)
        explicit = _r(
            dom, cod,
            {(i, s): (obj.port(i), s) for i, s in dom.V},
            {(i, s): (obj.att(i), s) for i, s in dom.E},
            {x: x for x in dom.I},
        )
    elif name == "phi_upsilon":
        Q, G = obj, S
        P = presheaf.product([inc.upsilon(Q), G])
        dom = inc.upsilon_diamond(P.apex)
        T = presheaf.product([Q, inc.upsilon_diamond(G)])
        cod = T.apex
        m = T.mediate(inc.upsilon_diamond_counit(Q) @ inc.upsilon_diamond_map(P.legs[0]), inc.upsilon_diamond_map(P.legs[1]))
        explicit = _q(dom, cod, {(n, (v, x)): (v, (n, x)) for n, (v, x) in dom.V}, {x: x for x in dom.E})
    else:
        raise ValueError(f"unknown Frobenius map {name!r}")

    desc = f"{name} at {describe(obj)} and {describe(S)}"
    evidence = ["agrees with the explicit formula" if m == explicit else "differs from the explicit formula"]
    if m.is_iso() and m == explicit:
        return m, LawReport(f"frobenius.{name}", desc, "holds", evidence + ["is an isomorphism"])
    for s, f in m.comps.items():
        if not f.is_injective():
            seen: dict = {}
            for x, y in f.items():
                if y in seen:
                    evidence.append(f"collision in the {s} part: {atom_text(seen[y])} and {atom_text(x)} both map to {atom_text(y)}")
                    break
                seen[y] = x
            break
    else:
        evidence.append("not an isomorphism")
    verdict = "witness_found" if name == "phi_I" and m == explicit else "fails"
    return m, LawReport(f"frobenius.{name}", desc, verdict, evidence)


# --------------------------------------------------------------------------
# counterexamples


def _p1() -> SetSystemHypergraph:
    return SetSystemHypergraph.from_edges(["v", "w"], {"e": {"v", "w"}})


def _alpha_beta():
    P1 = _p1()
    V0 = hs.vertex_diamond(FiniteSet([0]))
    a = HyperMorphism.from_dicts(V0, P1, {0: "v"}, {})
    b = HyperMorphism.from_dicts(V0, P1, {0: "w"}, {})
    return P1, a, b


def _no_iso(A, B) -> bool:
    return hom(A, B, "iso") is None


def _sizes(x) -> str:
    return str(x.sizes())


def run_counterexample(name: str) -> LawReport:
    if name == "topos_fail":
        P1, a, b = _alpha_beta()
        H = hs.coequalizer(a, b).apex
        K = hs.coequalizer(hs.product_map(P1.identity(), a), hs.product_map(P1.identity(), b)).apex
        P1H = hs.product([P1, H]).apex
        P1P1 = hs.product([P1, P1]).apex
        e2 = len(P1.E) ** 2
        ok = _no_iso(K, P1H) and e2 != len(P1P1.E)
        ev = [f"K has sizes {_sizes(K)}", f"P1 x H has sizes {_sizes(P1H)}", "exhaustive iso search between them failed",
              f"|E(P1)|^2 = {e2}, |E(P1 x P1)| = {len(P1P1.E)}"]
        return LawReport(name, "coequalizer of P1 x alpha, P1 x beta against P1 x H", "witness_found" if ok else "fails", ev)
    if name == "p1xp1_product":
        P = qv.path1()
        lhs = mg.underlying(presheaf.product([P, P]).apex).carrier
        U = mg.underlying(P).carrier
        rhs = mg.m_limit("product", [U, U]).apex
        ok = _no_iso(lhs, rhs)
        ev = [f"U(P x P) has sizes {_sizes(lhs)}", f"U(P) x U(P) in M has sizes {_sizes(rhs)}", "exhaustive iso search failed"]
        return LawReport(name, "U does not preserve the product of directed 1-paths", "witness_found" if ok else "fails", ev)
    if name == "p1xp1_coequalizer":
        P1, a, b = _alpha_beta()
        H = hs.coequalizer(a, b).apex
        R = presheaf.coequalizer(mg.assoc_digraph_map(a), mg.assoc_digraph_map(b)).apex
        DH = mg.assoc_digraph(H)[0]
        ok = _no_iso(R, DH)
        ev = [f"coequalizer of D(alpha), D(beta) has sizes {_sizes(R)}", f"D(H) has sizes {_sizes(DH)}", "exhaustive iso search failed"]
        return LawReport(name, "D does not preserve the coequalizer of alpha, beta", "witness_found" if ok else "fails", ev)
    if name == "Ibad_product":
        P1 = _p1()
        lhs = inc.incidence_forming(hs.product([P1, P1]).apex)
        IP = inc.incidence_forming(P1)
        rhs = presheaf.product([IP, IP]).apex
        ok = _no_iso(lhs, rhs)
        ev = [f"I(P1 x P1) has sizes {_sizes(lhs)}", f"I(P1) x I(P1) has sizes {_sizes(rhs)}", "exhaustive iso search failed"]
        return LawReport(name, "incidence forming does not preserve products", "witness_found" if ok else "fails", ev)
    if name == "Ibad_coequalizer":
        P1, a, b = _alpha_beta()
        H = hs.coequalizer(a, b).apex
        J = presheaf.coequalizer(inc.incidence_forming_map(a), inc.incidence_forming_map(b)).apex
        IH = inc.incidence_forming(H)
        ok = _no_iso(J, IH)
        ev = [f"J has sizes {_sizes(J)}", f"I(H) has sizes {_sizes(IH)}", "exhaustive iso search failed"]
        return LawReport(name, "incidence forming does not preserve the coequalizer of alpha, beta", "witness_found" if ok else "fails", ev)
    if name == "Fworse":
        G = IncidenceHypergraph.from_incidences(["x"], ["f"], {"k": ("x", "f")})
        H = IncidenceHypergraph.from_incidences(["v", "w"], ["e"], {"i": ("v", "e"), "j": ("w", "e")})
        phi = IncidenceMorphism.from_dicts(G, H, {"x": "v"}, {"f": "e"}, {"k": "i"})
        n_r = hom(G, H, "count")
        n_h = hom(inc.forget_incidence(G), inc.forget_incidence(H), "count")
        ok = n_r >= 1 and n_h == 0
        ev = [f"incidence map x->v, f->e, k->i: {morphism_text(phi)}", f"|R(G, H)| = {n_r}", f"|H(F(G), F(H))| = {n_h}"]
        return LawReport(name, "a map of incidence hypergraphs with no image under incidence forgetting", "witness_found" if ok else "fails", ev)
    if name == "del_not_epi_preserving":
        E4 = hs.k_edge(FiniteSet([1, 2, 3, 4]))
        E1 = hs.k_edge(FiniteSet([1]))
        maps = hom(E4, E1)
        alpha = maps[0]
        d = mg.del_map(alpha)
        ok = len(maps) == 1 and alpha.is_epi() and not d.is_epi()
        ev = [f"|H(E4, E1)| = {len(maps)}", f"alpha epi: {alpha.is_epi()}", f"Del(alpha) epi: {d.is_epi()}",
              f"Del(E4) has sizes {_sizes(d.dom)}"]
        return LawReport(name, "the unique map E4 -> E1", "witness_found" if ok else "fails", ev)
    raise ValueError(f"unknown counterexample {name!r}")


def counterexample_fixtures() -> dict[str, dict]:
    """The named objects and morphisms each counterexample is built from."""
    P1, a, b = _alpha_beta()
    Fg = IncidenceHypergraph.from_incidences(["x"], ["f"], {"k": ("x", "f")})
    Fh = IncidenceHypergraph.from_incidences(["v", "w"], ["e"], {"i": ("v", "e"), "j": ("w", "e")})
    E4 = hs.k_edge(FiniteSet([1, 2, 3, 4]))
    E1 = hs.k_edge(FiniteSet([1]))
    return {
        "topos_fail": {"P1": P1, "alpha": a, "beta": b},
        "p1xp1_product": {"P": qv.path1()},
        "p1xp1_coequalizer": {"P1": P1, "alpha": a, "beta": b},
        "Ibad_product": {"P1": P1},
        "Ibad_coequalizer": {"P1": P1, "alpha": a, "beta": b},
        "Fworse": {"G": Fg, "H": Fh, "phi": IncidenceMorphism.from_dicts(Fg, Fh, {"x": "v"}, {"f": "e"}, {"k": "i"})},
        "del_not_epi_preserving": {"E4": E4, "E1": E1, "alpha": hom(E4, E1)[0]},
    }


COUNTEREXAMPLES = ("topos_fail", "p1xp1_product", "p1xp1_coequalizer", "Ibad_product", "Ibad_coequalizer", "Fworse", "del_not_epi_preserving")


# --------------------------------------------------------------------------
# separators


def find_separator(family, phi, psi):
    """First (T, tau) in stable order with phi o tau != psi o tau, or None."""
    if phi.dom != psi.dom or phi.cod != psi.cod:
        raise ValueError("separator search needs a parallel pair")
    for T in family:
        for tau in hom(T, phi.dom):
            if phi @ tau != psi @ tau:
                return T, tau
    return None


def quiver_generators() -> list:
    return [qv.vertex_diamond(FiniteSet([1])), qv.path1()]


def incidence_generators() -> list:
    one = FiniteSet([1])
    return [inc.v_diamond(one), inc.e_diamond(one), inc.i_diamond(one)]


# --------------------------------------------------------------------------
# the two updiaup isomorphisms


def updiaup_diamond_iso(Q: Quiver) -> QuiverMorphism:
    """upsilon_diamond(upsilon(Q)) -> Q x P1: (n, v) |-> (v, (n, 1)), e |-> (e, 1)."""
    dom = inc.upsilon_diamond(inc.upsilon(Q))
    cod = presheaf.product([Q, qv.path1()]).apex
    return QuiverMorphism(dom, cod, FiniteFunction(dom.V, cod.V, {(n, v): (v, (n, 1)) for n, v in dom.V}),
                          FiniteFunction(dom.E, cod.E, {e: (e, 1) for e in dom.E}))


def updiaup_star_iso(Q: Quiver, bounds: Bounds = DEFAULT_BOUNDS) -> QuiverMorphism:
    """upsilon_star(upsilon(Q)) -> Q^P1 sending (x, y) to the map (0,1)->x, (1,1)->y."""
    dom = inc.upsilon_star(inc.upsilon(Q), bounds)
    cod, _ = qv.quiver_exponential(qv.path1(), Q, bounds)
    a, b = (0, 1), (1, 1)
    fv = {(x, y): MapAtom(((a, x), (b, y))) for x, y in dom.V}
    fe = {}
    for v, e, w in dom.E:
        fe[(v, e, w)] = HomAtom((
            ("V", MapAtom(((a, Q.src(e)), (b, w)))),
            ("E", MapAtom(((a, v), (b, Q.tgt(e))))),
            ("I", MapAtom(((1, e),))),
        ))
    return QuiverMorphism(dom, cod, FiniteFunction(dom.V, cod.V, fv), FiniteFunction(dom.E, cod.E, fe))


def check_updiaup(Q: Quiver, targets=None, samples: int = 2, bounds: Bounds = DEFAULT_BOUNDS) -> LawReport:
    """Exhibit both isomorphisms and check naturality along sampled maps Q -> Q'."""
    ev = []
    try:
        d = updiaup_diamond_iso(Q)
        s = updiaup_star_iso(Q, bounds)
    except ValueError as exc:
        return LawReport("updiaup", f"Q = {describe(Q)}", "fails", [f"isomorphism did not validate: {exc}"])
    ok = d.is_iso() and s.is_iso()
    ev.append(f"diamond iso {describe(d.dom)} -> {describe(d.cod)}: {d.is_iso()}")
    ev.append(f"star iso {describe(s.dom)} -> {describe(s.cod)}: {s.is_iso()}")
    P = qv.path1()
    checked = 0
    for Q2 in (targets if targets is not None else [Q]):
        d2, s2 = updiaup_diamond_iso(Q2), updiaup_star_iso(Q2, bounds)
        for alpha in hom(Q, Q2)[:samples]:
            ua = inc.upsilon_map(alpha)
            lhs = d2 @ inc.upsilon_diamond_map(ua)
            rhs = presheaf.product_map(alpha, P.identity(), d.cod, d2.cod) @ d
            lhs2 = s2 @ inc.upsilon_star_map(ua, bounds)
            rhs2 = qv.quiver_exponential_map(P, alpha, bounds) @ s
            checked += 1
            if lhs != rhs or lhs2 != rhs2:
                ok = False
                ev.append(f"naturality fails along {morphism_text(alpha)}")
    ev.append(f"naturality squares checked: {checked}")
    return LawReport("updiaup", f"Q = {describe(Q)}", _verdict(ok), ev)

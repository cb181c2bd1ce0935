"""Enumeration of small objects up to isomorphism.

Vertices are labelled 0..n-1, edges "e0", "e1", ... and incidences "i0",
"i1", ... in the order of a canonical form, so the corpus is the same on
every run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .incidence import IncidenceHypergraph
from .quiver import Quiver
from .set_system import SetSystemHypergraph, is_multigraph


@dataclass(frozen=True)
class CorpusSpec:
    max_vertices: int = 3
    max_edges: int = 3
    max_incidences: int = 4


DEFAULT_CORPUS = CorpusSpec()
# the triple-quantified checks run over this smaller corpus
TRIPLE_CORPUS = CorpusSpec(max_vertices=2, max_edges=2, max_incidences=2)


def _canonical(items: list, perms) -> tuple:
    return min(tuple(sorted(p(x) for x in items)) for p in perms)


def _vertex_perms(n: int):
    return [dict(enumerate(p)) for p in itertools.permutations(range(n))]


@lru_cache(maxsize=None)
def quivers(spec: CorpusSpec = DEFAULT_CORPUS) -> tuple[Quiver, ...]:
    out = []
    for n in range(spec.max_vertices + 1):
        pairs = list(itertools.product(range(n), repeat=2))
        perms = [(lambda st, p=p: (p[st[0]], p[st[1]])) for p in _vertex_perms(n)]
        for m in range(spec.max_edges + 1):
            seen = set()
            for es in itertools.combinations_with_replacement(pairs, m):
                c = _canonical(list(es), perms)
                if c in seen:
                    continue
                seen.add(c)
                out.append(Quiver.from_edges(range(n), {f"e{k}": st for k, st in enumerate(c)}))
    return tuple(out)


def _subset_key(S) -> tuple:
    return (len(S), tuple(sorted(S)))


@lru_cache(maxsize=None)
def hypergraphs(spec: CorpusSpec = DEFAULT_CORPUS) -> tuple[SetSystemHypergraph, ...]:
    out = []
    for n in range(spec.max_vertices + 1):
        subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]
        perms = [(lambda S, p=p: _subset_key({p[v] for v in S})) for p in _vertex_perms(n)]
        for m in range(spec.max_edges + 1):
            seen = set()
            for es in itertools.combinations_with_replacement(subsets, m):
                c = _canonical(list(es), perms)
                if c in seen:
                    continue
                seen.add(c)
                out.append(SetSystemHypergraph.from_edges(range(n), {f"e{k}": S[1] for k, S in enumerate(c)}))
    return tuple(out)


def multigraphs(spec: CorpusSpec = DEFAULT_CORPUS) -> tuple[SetSystemHypergraph, ...]:
    return tuple(G for G in hypergraphs(spec) if is_multigraph(G))


@lru_cache(maxsize=None)
def incidence_hypergraphs(spec: CorpusSpec = DEFAULT_CORPUS) -> tuple[IncidenceHypergraph, ...]:
    out = []
    for n in range(spec.max_vertices + 1):
        for k in range(spec.max_edges + 1):
            pairs = list(itertools.product(range(n), range(k)))
            perms = [
                (lambda ve, p=p, q=q: (p[ve[0]], q[ve[1]]))
                for p in _vertex_perms(n)
                for q in _vertex_perms(k)
            ]
            for m in range(spec.max_incidences + 1):
                if m and not pairs:
                    break
                seen = set()
                for inc in itertools.combinations_with_replacement(pairs, m):
                    c = _canonical(list(inc), perms)
                    if c in seen:
                        continue
                    seen.add(c)
                    out.append(IncidenceHypergraph.from_incidences(
                        range(n), [f"e{j}" for j in range(k)], {f"i{t}": (v, f"e{e}") for t, (v, e) in enumerate(c)}
                    ))
    return tuple(out)


def corpus(category: str, spec: CorpusSpec = DEFAULT_CORPUS) -> tuple:
    if category == "Q":
        return quivers(spec)
    if category == "H":
        return hypergraphs(spec)
    if category == "M":
        return multigraphs(spec)
    if category == "R":
        return incidence_hypergraphs(spec)
    raise ValueError(f"unknown category {category!r}")

"""Graphviz DOT output.

Vertices are drawn as circles and edges of hypergraphs as squares joined to
their vertices by plain lines, one line per incidence.
"""

from __future__ import annotations

import json

from .finset import atom_text
from .incidence import IncidenceHypergraph, upsilon_diamond, upsilon_star
from .multigraph import MultigraphView
from .quiver import Quiver
from .set_system import SetSystemHypergraph

VIEWS = ("plain", "bipartite", "incidence_matrix")


def _q(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def _node(prefix: str, x, shape: str) -> str:
    return f"  {_q(prefix + atom_text(x))} [label={_q(atom_text(x))}, shape={shape}];"


def _quiver_lines(Q: Quiver) -> list[str]:
    lines = [_node("v:", v, "circle") for v in Q.V]
    for e in Q.E:
        lines.append(f"  {_q('v:' + atom_text(Q.src(e)))} -> {_q('v:' + atom_text(Q.tgt(e)))} [label={_q(atom_text(e))}];")
    return lines


def _plain(obj) -> str:
    if isinstance(obj, Quiver):
        if not len(obj.V):
            return "digraph G {\n}\n"
        return "digraph G {\n" + "\n".join(_quiver_lines(obj)) + "\n}\n"
    if isinstance(obj, MultigraphView):
        obj = obj.carrier
    if isinstance(obj, SetSystemHypergraph):
        lines = [_node("v:", v, "circle") for v in obj.V] + [_node("e:", e, "square") for e in obj.E]
        for e in obj.E:
            for v in sorted(obj.eps[e], key=atom_text):
                lines.append(f"  {_q('v:' + atom_text(v))} -- {_q('e:' + atom_text(e))};")
    elif isinstance(obj, IncidenceHypergraph):
        lines = [_node("v:", v, "circle") for v in obj.V] + [_node("e:", e, "square") for e in obj.E]
        for i in obj.I:
            lines.append(
                f"  {_q('v:' + atom_text(obj.port(i)))} -- {_q('e:' + atom_text(obj.att(i)))} [label={_q(atom_text(i))}];"
            )
    else:
        raise ValueError(f"cannot draw a {type(obj).__name__}")
    if not lines:
        return "graph G {\n}\n"
    return "graph G {\n" + "\n".join(lines) + "\n}\n"


def _bipartite(obj) -> str:
    """Two ranks: the vertex side (tag 0) above the edge side (tag 1)."""
    if isinstance(obj, IncidenceHypergraph):
        obj = upsilon_diamond(obj)
    if not isinstance(obj, Quiver) or any(not (isinstance(v, tuple) and len(v) == 2 and v[0] in (0, 1)) for v in obj.V):
        raise ValueError("the bipartite view needs an incidence hypergraph or a bipartite incidence digraph")
    if not len(obj.V):
        return "digraph G {\n}\n"
    lines = ["  rankdir=TB;"]
    for tag, shape in ((0, "circle"), (1, "square")):
        side = [v for v in obj.V if v[0] == tag]
        if side:
            lines.append("  { rank=same;")
            lines += ["  " + _node("v:", v, shape) for v in side]
            lines.append("  }")
    for e in obj.E:
        lines.append(f"  {_q('v:' + atom_text(obj.src(e)))} -> {_q('v:' + atom_text(obj.tgt(e)))} [label={_q(atom_text(e))}];")
    return "digraph G {\n" + "\n".join(lines) + "\n}\n"


def _incidence_matrix(obj, bounds=None) -> str:
    if isinstance(obj, IncidenceHypergraph):
        obj = upsilon_star(obj) if bounds is None else upsilon_star(obj, bounds)
    if not isinstance(obj, Quiver):
        raise ValueError("the incidence_matrix view needs an incidence hypergraph or a quiver")
    return _plain(obj)


def emit_dot(obj, view: str = "plain", bounds=None) -> str:
    if view == "plain":
        return _plain(obj)
    if view == "bipartite":
        return _bipartite(obj)
    if view == "incidence_matrix":
        return _incidence_matrix(obj, bounds)
    raise ValueError(f"unknown view {view!r}; expected one of {', '.join(VIEWS)}")

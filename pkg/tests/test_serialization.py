import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphcats import incidence as inc
from graphcats import laws
from graphcats import presheaf
from graphcats.corpus import TRIPLE_CORPUS, corpus
from graphcats.finset import FiniteSet, HomAtom, MapAtom
from graphcats.multigraph import MultigraphView
from graphcats.quiver import path1
from graphcats.serialization import DocumentError, decode_atom, encode_atom, parse, serialize
from graphcats.set_system import hom_hypergraphs, k_edge

from conftest import atoms, hypergraphs, incidence_hypergraphs, multigraphs, quivers


def roundtrip(x):
    text = serialize(x)
    y = parse(text)
    assert serialize(y) == text
    return y


@given(atoms)
def test_atom_codec(a):
    assert decode_atom(encode_atom(a)) == a


def test_structured_atoms():
    m = MapAtom.from_dict({1: (0, "a")})
    h = HomAtom((("V", m), ("E", MapAtom(()))))
    for a in (m, h, frozenset({1, "x"}), ((1, 2), "q")):
        assert decode_atom(json.loads(json.dumps(encode_atom(a)))) == a
    for bad in (True, 1.5, None):
        with pytest.raises(DocumentError):
            decode_atom(bad)


@given(quivers())
def test_quiver_roundtrip(Q):
    assert roundtrip(Q) == Q


@given(hypergraphs())
def test_hypergraph_roundtrip(G):
    assert roundtrip(G) == G


@given(multigraphs())
def test_multigraph_roundtrip(G):
    y = roundtrip(MultigraphView(G))
    assert isinstance(y, MultigraphView) and y.carrier == G


@given(incidence_hypergraphs())
def test_incidence_roundtrip(G):
    y = roundtrip(G)
    assert y == G and list(y.I) == list(G.I)


@given(st.data())
def test_morphism_roundtrip(data):
    cat = data.draw(st.sampled_from("QR"))
    objs = corpus(cat, TRIPLE_CORPUS)
    A, B = data.draw(st.sampled_from(objs)), data.draw(st.sampled_from(objs))
    ms = presheaf.hom(A, B)
    if ms:
        m = data.draw(st.sampled_from(ms))
        assert roundtrip(m) == m


def test_hyper_morphism_roundtrip():
    for A in corpus("H", TRIPLE_CORPUS)[:8]:
        for m in hom_hypergraphs(A, k_edge(FiniteSet("vw")), "list")[:3]:
            assert roundtrip(m) == m


def test_report_roundtrip():
    r = laws.run_counterexample("Fworse")
    assert roundtrip(r) == r


def test_fixture_text_is_stable():
    text = serialize(path1())
    assert text.endswith("}\n")
    assert '"endpoints": [\n    [1, [0, 1], [1, 1]]\n  ]' in text


@pytest.mark.parametrize("name", laws.COUNTEREXAMPLES)
def test_counterexample_fixtures_reload(name):
    for x in laws.counterexample_fixtures()[name].values():
        assert roundtrip(x) == x


def _doc(x):
    return json.loads(serialize(x))


def test_unknown_field_rejected():
    d = _doc(path1())
    d["colour"] = "red"
    with pytest.raises(DocumentError, match=r"\$\.colour"):
        parse(json.dumps(d))


def test_missing_field_and_bad_kind():
    d = _doc(path1())
    del d["edges"]
    with pytest.raises(DocumentError, match="missing"):
        parse(json.dumps(d))
    with pytest.raises(DocumentError, match="kind"):
        parse('{"kind": "graph"}')


def test_edge_over_unknown_vertex():
    text = '{"kind": "hypergraph", "vertices": [1], "edges": ["e"], "endpoints": [["e", [1, 2]]]}'
    with pytest.raises(DocumentError, match=r"endpoints\[0\]\[1\]\[1\].*unknown vertex 2"):
        parse(text)


def test_quiver_edge_without_endpoints():
    text = '{"kind": "quiver", "vertices": [1], "edges": ["a", "b"], "endpoints": [["a", 1, 1]]}'
    with pytest.raises(DocumentError, match='no entry for edge "b"'):
        parse(text)


def test_duplicates_rejected():
    text = '{"kind": "quiver", "vertices": [1, 1], "edges": [], "endpoints": []}'
    with pytest.raises(DocumentError, match="duplicate"):
        parse(text)


def test_broken_square_names_the_incidence():
    G = inc.IncidenceHypergraph.from_incidences(["x"], ["f"], {"k": ("x", "f")})
    H = inc.IncidenceHypergraph.from_incidences(["a", "b"], ["e"], {"i": ("a", "e")})
    m = presheaf.hom(G, H)[0]
    d = _doc(m)
    d["vertex_map"] = [["x", "b"]]
    with pytest.raises(DocumentError, match='"k"'):
        parse(json.dumps(d))


def test_morphism_category_checked():
    d = _doc(path1().identity())
    d["category"] = "R"
    with pytest.raises(DocumentError, match="domain"):
        parse(json.dumps(d))
    d["category"] = "Z"
    with pytest.raises(DocumentError, match="category"):
        parse(json.dumps(d))


def test_multigraph_document_checks_edge_sizes():
    text = '{"kind": "multigraph", "vertices": [1, 2, 3], "edges": ["e"], "endpoints": [["e", [1, 2, 3]]]}'
    with pytest.raises(DocumentError):
        parse(text)


def test_syntax_error_reports_position():
    with pytest.raises(DocumentError, match="line 2 column"):
        parse('{"kind": "quiver",\n  "vertices": [1,, 2]}')


@pytest.mark.parametrize("path", sorted((Path(__file__).resolve().parent.parent / "fixtures").glob("*.json")), ids=lambda p: p.name)
def test_checked_in_fixtures_reload(path):
    text = path.read_text()
    assert serialize(parse(text)) == text

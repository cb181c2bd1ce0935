import dataclasses
import itertools

import pytest
from hypothesis import given, settings

from graphcats import incidence as inc
from graphcats import laws
from graphcats import presheaf
from graphcats import quiver as qv
from graphcats import set_system as hs
from graphcats.corpus import TRIPLE_CORPUS, corpus
from graphcats.finset import FiniteFunction, FiniteSet
from graphcats.laws import LawReport

from conftest import quivers

S1, S2 = FiniteSet([1]), FiniteSet([1, 2])
P = qv.path1()
UP1 = inc.upsilon(P)
H1 = hs.k_edge(FiniteSet("vw"))


def test_report_requires_evidence_unless_holds():
    with pytest.raises(ValueError):
        LawReport("x", "y", "fails", [])
    with pytest.raises(ValueError):
        LawReport("x", "y", "maybe", ["e"])
    r = LawReport("x", "y", "holds")
    assert r.ok and r.to_dict()["verdict"] == "holds"


# universal properties


def test_product_mediator_unique_in_H():
    L = hs.hyper_limit("product", H1, H1)
    for X in corpus("H", TRIPLE_CORPUS):
        for a, b in itertools.islice(itertools.product(laws.hom(X, H1), repeat=2), 4):
            r = laws.check_universal_property("product", "H", {"objects": [H1, H1], "cone": [a, b]})
            assert r.verdict == "holds", r.evidence
    assert len(L.apex.E) == 7


def test_coequalizer_and_terminal_checks():
    pt = qv.vertex_diamond(FiniteSet([0]))
    a = presheaf.hom(pt, P)[0]
    b = presheaf.hom(pt, P)[1]
    C = qv.quiver_colimit("coequalizer", a, b)
    for h in presheaf.hom(P, qv.terminal()):
        r = laws.check_universal_property("coequalizer", "Q", {"pair": (a, b), "map": h})
        assert r.verdict == "holds"
    assert C.apex.sizes() == (1, 1)
    r = laws.check_universal_property("terminal", "R", {"object": UP1})
    assert r.verdict == "holds"


def test_exponential_uniqueness_for_upsilon_path():
    prod = presheaf.product([UP1, UP1]).apex
    for psi in presheaf.hom(prod, UP1):
        r = laws.check_universal_property("exponential", "R", {"base": UP1, "param": UP1, "map": psi})
        assert r.verdict == "holds", r.evidence


def test_universal_property_rejects_bad_kinds():
    with pytest.raises(ValueError):
        laws.check_universal_property("exponential", "H", {"base": H1, "param": H1, "map": H1.identity()})
    with pytest.raises(ValueError):
        laws.check_universal_property("classifier", "Q", {"mono": P.identity(), "map": P.identity()})
    with pytest.raises(ValueError):
        laws.check_universal_property("pushout", "Q", {})


def test_unique_report_flags_a_second_solution():
    ms = laws.hom(H1, H1)
    r = laws._unique_report("demo", "all endos", ms, lambda m: True, ms[0])
    assert r.verdict == "fails" and any("second solution" in e for e in r.evidence)


# adjunctions


def test_registry_has_ten_pairs():
    assert len(laws.ADJUNCTIONS) == 10


@pytest.mark.parametrize("pair", sorted(laws.ADJUNCTIONS))
def test_adjunction_on_probe_samples(pair):
    for adj in laws.ADJUNCTIONS[pair]:
        pairs = list(itertools.product(laws.default_samples(adj.left, full=False), laws.default_samples(adj.right, full=False)))
        r = laws.check_adjunction_half(adj, pairs)
        assert r.verdict == "holds", r.evidence


def test_unknown_adjunction():
    with pytest.raises(ValueError, match="unknown adjunction"):
        laws.check_adjunction("nope")


def test_broken_adjunction_is_caught():
    good = laws.ADJUNCTIONS["quiver_vertex"][0]
    bad = dataclasses.replace(good, G=lambda Q: Q.E, G_map=lambda m: m.comps["E"])
    r = laws.check_adjunction_half(bad, [(S1, P)])
    assert r.verdict == "fails" and "hom-count mismatch" in r.evidence[0]


def test_broken_counit_is_caught():
    good = laws.ADJUNCTIONS["hyper_edge"][0]
    # collapsing the counit onto one point breaks the round trip
    bad = dataclasses.replace(good, counit=lambda X: FiniteFunction.constant(X, X, X.elements[0]) @ hs.zeta(X))
    r = laws.check_adjunction_half(bad, [(H1, S2)])
    assert r.verdict == "fails"


@given(quivers(max_v=2, max_e=2))
def test_edge_diamond_hom_count(Q):
    for X in (FiniteSet(), S1, S2):
        assert presheaf.hom(qv.edge_diamond(X), Q, "count") == len(Q.E) ** len(X)


def test_edge_star_round_trip():
    for G in corpus("H", TRIPLE_CORPUS):
        for X in (S1, S2):
            for xi in laws.set_homs(G.E, X):
                hat = hs.factor_through_edge_star(G, xi)
                assert hs.zeta(X) @ hat.fE == xi


def test_assoc_transposition_on_path():
    adj = laws.ADJUNCTIONS["assoc_digraph"][0]
    r = laws.check_adjunction_half(adj, [(P, H1)])
    assert r.verdict == "holds"


# Frobenius maps


def test_frobenius_vertex_and_edge():
    for name in ("phi_V", "phi_E"):
        for G in corpus("R", TRIPLE_CORPUS):
            for S in (S1, S2):
                _, r = laws.frobenius(name, G, S)
                assert r.verdict == "holds", (name, r.evidence)
    _, r = laws.frobenius("phi_V", UP1, FiniteSet(["s"]))
    assert r.verdict == "holds"


def test_frobenius_incidence_not_monic():
    m, r = laws.frobenius("phi_I", inc.i_star(S2), S2)
    assert not m.is_mono()
    assert r.verdict == "witness_found"
    assert any(e.startswith("collision") for e in r.evidence)


def test_frobenius_upsilon():
    m, r = laws.frobenius("phi_upsilon", P, inc.i_star(FiniteSet(["p"])))
    assert r.verdict == "holds"
    for n, (v, x) in m.dom.V:
        assert m.comps["V"]((n, (v, x))) == (v, (n, x))
    for Q in corpus("Q", TRIPLE_CORPUS):
        for G in corpus("R", TRIPLE_CORPUS)[:6]:
            assert laws.frobenius("phi_upsilon", Q, G)[1].verdict == "holds"


def test_unknown_frobenius():
    with pytest.raises(ValueError):
        laws.frobenius("phi_X", P, S1)


# counterexamples


@pytest.mark.parametrize("name", laws.COUNTEREXAMPLES)
def test_counterexamples_find_witnesses(name):
    r = laws.run_counterexample(name)
    assert r.verdict == "witness_found", r.evidence
    assert r.to_json() == laws.run_counterexample(name).to_json()


def test_counterexample_evidence_values():
    ev = laws.run_counterexample("topos_fail").evidence
    assert "|E(P1)|^2 = 1, |E(P1 x P1)| = 7" in ev
    ev = laws.run_counterexample("Fworse").evidence
    assert "|H(F(G), F(H))| = 0" in ev
    with pytest.raises(ValueError):
        laws.run_counterexample("nope")


# separators


def test_separator_examples():
    one = qv.vertex_diamond(S1)
    two = qv.vertex_diamond(FiniteSet("ab"))
    phi, psi = presheaf.hom(one, two)
    T, tau = laws.find_separator(laws.quiver_generators(), phi, psi)
    assert T == one and tau == one.identity()
    assert laws.find_separator(laws.quiver_generators(), phi, phi) is None


def test_incidence_pair_differing_on_an_incidence():
    G = inc.IncidenceHypergraph.from_incidences(["v"], ["e"], {"i": ("v", "e")})
    H = inc.IncidenceHypergraph.from_incidences(["v"], ["e"], {"i": ("v", "e"), "j": ("v", "e")})
    phi, psi = presheaf.hom(G, H)
    T, _ = laws.find_separator(laws.incidence_generators(), phi, psi)
    assert T == inc.i_diamond(S1)


def test_separator_rejects_non_parallel_pair():
    with pytest.raises(ValueError):
        laws.find_separator([], P.identity(), qv.terminal().identity())


@pytest.mark.parametrize("cat,family", [("Q", laws.quiver_generators()), ("R", laws.incidence_generators())])
def test_generators_separate_corpus_pairs(cat, family):
    objs = corpus(cat, TRIPLE_CORPUS)
    for A, B in itertools.product(objs, repeat=2):
        for phi, psi in itertools.combinations(presheaf.hom(A, B)[:6], 2):
            assert laws.find_separator(family, phi, psi) is not None


# updiaup


def test_updiaup_examples():
    B = qv.terminal()
    d = laws.updiaup_diamond_iso(B)
    assert d.dom.sizes() == (2, 1) and d.is_iso()
    s = laws.updiaup_star_iso(P)
    assert s.cod.sizes() == (4, 4) and s.is_iso()
    empty = qv.vertex_diamond(FiniteSet())
    assert laws.check_updiaup(empty).verdict == "holds"


@settings(max_examples=20)
@given(quivers(max_v=2, max_e=2), quivers(max_v=2, max_e=2))
def test_updiaup_natural(Q, R):
    r = laws.check_updiaup(Q, targets=[Q, R])
    assert r.verdict == "holds", r.evidence

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graphcats.finset import FiniteSet
from graphcats.incidence import IncidenceHypergraph
from graphcats.quiver import Quiver
from graphcats.set_system import SetSystemHypergraph

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

atoms = st.recursive(
    st.one_of(st.integers(-3, 5), st.text("abxy", max_size=2)),
    lambda inner: st.one_of(st.tuples(inner, inner), st.frozensets(inner, max_size=3)),
    max_leaves=6,
)
small_sets = st.lists(st.integers(0, 4), max_size=3, unique=True).map(FiniteSet)


@st.composite
def quivers(draw, max_v=3, max_e=3):
    n = draw(st.integers(1, max_v))
    ends = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_e))
    return Quiver.from_edges(range(n), {f"e{k}": st for k, st in enumerate(ends)})


@st.composite
def hypergraphs(draw, max_v=3, max_e=3):
    n = draw(st.integers(0, max_v))
    edges = draw(st.lists(st.frozensets(st.integers(0, n - 1), max_size=n) if n else st.just(frozenset()), max_size=max_e))
    return SetSystemHypergraph.from_edges(range(n), {f"e{k}": S for k, S in enumerate(edges)})


@st.composite
def multigraphs(draw, max_v=3, max_e=3):
    n = draw(st.integers(1, max_v))
    edges = draw(st.lists(st.frozensets(st.integers(0, n - 1), min_size=1, max_size=2), max_size=max_e))
    return SetSystemHypergraph.from_edges(range(n), {f"e{k}": S for k, S in enumerate(edges)})


@st.composite
def incidence_hypergraphs(draw, max_v=3, max_e=2, max_i=3):
    n = draw(st.integers(1, max_v))
    k = draw(st.integers(1, max_e))
    inc = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, k - 1)), max_size=max_i))
    return IncidenceHypergraph.from_incidences(
        range(n), [f"e{j}" for j in range(k)], {f"i{t}": (v, f"e{e}") for t, (v, e) in enumerate(inc)}
    )


# one summary line per acceptance criterion

_CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when == "call" or report.outcome != "passed":
        crit = dict(report.user_properties).get("criterion")
        if crit:
            n, title = crit
            ok = _CRITERIA.get(n, (title, True))[1] and report.outcome == "passed"
            _CRITERIA[n] = (title, ok)


def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", m.args))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}")

"""Command line front end.

Documents are read from file paths (``-`` for standard input) and results are
written to standard output as interchange documents, DOT text or counts.
Exit status: 0 on success or a holding law, 1 when a check fails or no
isomorphism exists, 2 on usage, document or size errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dot, incidence as inc, laws, multigraph as mg, presheaf, quiver as qv, set_system as hs
from .finset import DEFAULT_BOUNDS, FiniteSet, SizeError
from .incidence import IncidenceHypergraph, IncidenceMorphism
from .multigraph import MultigraphView
from .quiver import Quiver, QuiverMorphism
from .serialization import DocumentError, decode_atom, parse, serialize
from .set_system import HyperMorphism, SetSystemHypergraph


class UsageError(ValueError):
    pass


# --------------------------------------------------------------------------
# input helpers


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _set(tokens) -> FiniteSet:
    out = []
    for t in tokens or []:
        try:
            raw = json.loads(t)
        except json.JSONDecodeError:
            raw = t
        out.append(decode_atom(raw, f"--set {t}"))
    return FiniteSet(out)


def _bounds(args):
    return DEFAULT_BOUNDS if args.bound is None else DEFAULT_BOUNDS.override(args.bound)


def _category(x) -> str:
    if isinstance(x, (Quiver, QuiverMorphism)):
        return "Q"
    if isinstance(x, MultigraphView):
        return "M"
    if isinstance(x, (SetSystemHypergraph, HyperMorphism)):
        return "H"
    if isinstance(x, (IncidenceHypergraph, IncidenceMorphism)):
        return "R"
    raise UsageError(f"a {type(x).__name__} document is not an object or morphism")


def _plain(x):
    return x.carrier if isinstance(x, MultigraphView) else x


def _expect(x, category: str, what: str):
    got = _category(x)
    if category == "M":
        if got not in ("M", "H") or (isinstance(_plain(x), SetSystemHypergraph) and not hs.is_multigraph(_plain(x))):
            raise UsageError(f"{what} is not a multigraph")
        return _plain(x)
    if got == "M" and category == "H":
        return _plain(x)
    if got != category:
        raise UsageError(f"{what} belongs to category {got}, expected {category}")
    return x


def _is_morphism(x) -> bool:
    return isinstance(x, (QuiverMorphism, HyperMorphism, IncidenceMorphism))


def _emit(x, category: str | None = None) -> str:
    if category == "M" and isinstance(x, SetSystemHypergraph):
        x = MultigraphView(x)
    return serialize(x)


# --------------------------------------------------------------------------
# make


def _standard(category: str, name: str, X: FiniteSet, bounds):
    if category == "Q":
        return qv.standard_quiver(name, X)
    if category == "R":
        return inc.standard_incidence(name, X)
    if category in ("H", "M"):
        G = hs.standard_hypergraph(name, X, bounds)
        if category == "M" and not hs.is_multigraph(G):
            raise UsageError(f"{name} is not a multigraph for this set")
        return G
    raise UsageError(f"unknown category {category}")


def cmd_make(args) -> tuple[str, int]:
    return _emit(_standard(args.category, args.name, _set(args.set), _bounds(args)), args.category), 0


# --------------------------------------------------------------------------
# functors


def _functors(bounds):
    # name -> (source category, target category, object map, morphism map)
    return {
        "upsilon": ("Q", "R", inc.upsilon, inc.upsilon_map),
        "upsilon-diamond": ("R", "Q", inc.upsilon_diamond, inc.upsilon_diamond_map),
        "upsilon-star": ("R", "Q", lambda G: inc.upsilon_star(G, bounds), lambda f: inc.upsilon_star_map(f, bounds)),
        "incidence-forming": ("H", "R", inc.incidence_forming, inc.incidence_forming_map),
        "forget-incidence": ("R", "H", inc.forget_incidence, None),
        "underlying": ("Q", "M", lambda Q: mg.underlying(Q).carrier, mg.underlying_map),
        "assoc-digraph": ("M", "Q", lambda G: mg.assoc_digraph(G)[0], mg.assoc_digraph_map),
        "del": ("H", "M", lambda G: mg.del_(G)[0].carrier, mg.del_map),
        "explosion": ("M", "M", lambda G: mg.explosion(G).carrier, None),
        "projective-cover": ("M", "M", mg.projective_cover, None),
        "loading": ("H", "H", lambda G: hs.loading(G, bounds)[1], None),
        "representer": ("H", "H", lambda G: hs.partial_morphism_representer(G, bounds)[1], None),
    }


FUNCTOR_NAMES = tuple(_functors(DEFAULT_BOUNDS))


def cmd_functor(args) -> tuple[str, int]:
    src, tgt, on_obj, on_map = _functors(_bounds(args))[args.name]
    x = _read(args.file)
    if _is_morphism(x):
        if on_map is None:
            raise UsageError(f"{args.name} is only available on objects")
        return _emit(on_map(_expect(x, src, "input")), tgt), 0
    y = on_obj(_expect(x, src, "input"))
    return _emit(y, tgt if not _is_morphism(y) else None), 0


# --------------------------------------------------------------------------
# limits, colimits, exponentials


def _ops(category: str):
    return laws.CATEGORIES[category]


def cmd_limit(args) -> tuple[str, int]:
    ops = _ops(args.category)
    items = [_expect(_read(p), args.category, p) for p in args.files]
    if args.kind == "terminal":
        L = ops.limit("terminal")
    elif args.kind == "product":
        L = ops.limit("product", items)
    elif args.kind in ("equalizer", "pullback"):
        if len(items) != 2 or not all(_is_morphism(m) for m in items):
            raise UsageError(f"{args.kind} takes two morphism documents")
        if args.kind == "pullback":
            if args.category != "H":
                raise UsageError("pullback is provided for H")
            L = hs.pullback(items[0], items[1], _bounds(args))
        else:
            L = ops.limit("equalizer", *items)
    else:
        raise UsageError(f"unknown limit kind {args.kind}")
    return _emit(L.apex, args.category), 0


def cmd_colimit(args) -> tuple[str, int]:
    ops = _ops(args.category)
    items = [_expect(_read(p), args.category, p) for p in args.files]
    if args.kind == "initial":
        C = ops.colimit("initial")
    elif args.kind == "coproduct":
        C = ops.colimit("coproduct", items)
    elif args.kind == "coequalizer":
        if len(items) != 2 or not all(_is_morphism(m) for m in items):
            raise UsageError("coequalizer takes two morphism documents")
        C = ops.colimit("coequalizer", *items)
    else:
        raise UsageError(f"unknown colimit kind {args.kind}")
    return _emit(C.apex, args.category), 0


def cmd_exponential(args) -> tuple[str, int]:
    if args.category not in ("Q", "R"):
        raise UsageError("exponentials are computed in Q and R")
    base = _expect(_read(args.base), args.category, args.base)
    target = _expect(_read(args.target), args.category, args.target)
    E, _ = _ops(args.category).exponential(base, target, _bounds(args))
    return _emit(E), 0


# --------------------------------------------------------------------------
# hom and iso


def _pair(args):
    A, B = _read(args.source), _read(args.target)
    cat = args.category or _category(A)
    if cat == "M":
        cat = "H"
    return _expect(A, cat, args.source), _expect(B, cat, args.target)


def cmd_hom(args) -> tuple[str, int]:
    A, B = _pair(args)
    if args.count:
        return f"{laws.hom(A, B, 'count')}\n", 0
    ms = laws.hom(A, B, "list", limit=_bounds(args).homs)
    return "[\n" + ",\n".join(serialize(m).rstrip("\n") for m in ms) + ("\n" if ms else "") + "]\n", 0


def cmd_iso(args) -> tuple[str, int]:
    A, B = _pair(args)
    m = laws.hom(A, B, "iso")
    if m is None:
        return "", 1
    return serialize(m), 0


# --------------------------------------------------------------------------
# checks


LAW_NAMES = (
    "updiaup", "phi_V", "phi_E", "phi_I", "phi_upsilon",
    "product", "coproduct", "equalizer", "coequalizer", "terminal", "classifier",
)


def _law(args):
    name, files, bounds = args.name, args.files, _bounds(args)
    docs = [_read(p) for p in files]

    def need(n):
        if len(docs) != n:
            raise UsageError(f"law {name} takes {n} document(s)")

    if name == "updiaup":
        need(1)
        return laws.check_updiaup(_expect(docs[0], "Q", files[0]), bounds=bounds)
    if name in ("phi_V", "phi_E", "phi_I"):
        need(1)
        return laws.frobenius(name, _expect(docs[0], "R", files[0]), _set(args.set))[1]
    if name == "phi_upsilon":
        need(2)
        return laws.frobenius(name, _expect(docs[0], "Q", files[0]), _expect(docs[1], "R", files[1]))[1]
    cat = args.category or (_category(docs[0]) if docs else None)
    if cat is None:
        raise UsageError(f"law {name} needs -c")
    if cat == "M":
        cat = "H"
    docs = [_expect(d, cat, p) for d, p in zip(docs, files)]
    if name == "terminal":
        need(1)
        data = {"object": docs[0]}
    elif name == "product":
        data = {"objects": [m.cod for m in docs], "cone": docs}
    elif name == "coproduct":
        data = {"objects": [m.dom for m in docs], "cocone": docs}
    elif name in ("equalizer", "coequalizer"):
        need(3)
        data = {"pair": (docs[0], docs[1]), "map": docs[2]}
    else:
        if len(docs) not in (1, 2):
            raise UsageError("classifier takes a mono and optionally a map out of its domain")
        phi = docs[0]
        data = {"mono": phi, "map": docs[1] if len(docs) == 2 else phi.dom.identity()}
    if name in ("product", "coproduct") and not docs:
        raise UsageError(f"law {name} needs at least one morphism")
    return laws.check_universal_property(name, cat, data, bounds)


def cmd_check(args) -> tuple[str, int]:
    if args.what == "counterexample":
        if args.name not in laws.COUNTEREXAMPLES:
            raise UsageError(f"unknown counterexample {args.name}; expected one of {', '.join(laws.COUNTEREXAMPLES)}")
        report = laws.run_counterexample(args.name)
    elif args.what == "adjunction":
        if args.name not in laws.ADJUNCTIONS:
            raise UsageError(f"unknown adjunction {args.name}; expected one of {', '.join(laws.ADJUNCTIONS)}")
        report = laws.check_adjunction(args.name)
    else:
        if args.name not in LAW_NAMES:
            raise UsageError(f"unknown law {args.name}; expected one of {', '.join(LAW_NAMES)}")
        report = _law(args)
    return serialize(report), 0 if report.verdict in ("holds", "witness_found") else 1


def cmd_dot(args) -> tuple[str, int]:
    x = _read(args.file)
    if _is_morphism(x):
        raise UsageError("dot draws objects, not morphisms")
    return dot.emit_dot(x, args.view, _bounds(args)), 0


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--category", choices=("Q", "H", "M", "R"), help="category of the inputs")
    common.add_argument("--bound", type=int, metavar="N", help="override the powerset and function-space limits")

    p = argparse.ArgumentParser(prog="graphcats", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("make", parents=[common], help="build a standard object")
    s.add_argument("name")
    s.add_argument("--set", nargs="*", metavar="ATOM", help="elements of the parameter set")
    s.set_defaults(run=cmd_make, need_category=True)

    s = sub.add_parser("functor", parents=[common], help="apply a functor or natural map")
    s.add_argument("name", choices=FUNCTOR_NAMES)
    s.add_argument("file")
    s.set_defaults(run=cmd_functor)

    s = sub.add_parser("limit", parents=[common], help="product, terminal, equalizer or pullback")
    s.add_argument("kind", choices=("product", "terminal", "equalizer", "pullback"))
    s.add_argument("files", nargs="*")
    s.set_defaults(run=cmd_limit, need_category=True)

    s = sub.add_parser("colimit", parents=[common], help="coproduct, initial or coequalizer")
    s.add_argument("kind", choices=("coproduct", "initial", "coequalizer"))
    s.add_argument("files", nargs="*")
    s.set_defaults(run=cmd_colimit, need_category=True)

    s = sub.add_parser("exponential", parents=[common], help="the object of maps from BASE to TARGET")
    s.add_argument("base")
    s.add_argument("target")
    s.set_defaults(run=cmd_exponential, need_category=True)

    for name, run, text in (("hom", cmd_hom, "enumerate morphisms"), ("iso", cmd_iso, "find an isomorphism")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("source")
        s.add_argument("target")
        if name == "hom":
            s.add_argument("--count", action="store_true", help="print only the number of morphisms")
        s.set_defaults(run=run)

    s = sub.add_parser("check", parents=[common], help="run a law, counterexample or adjunction check")
    s.add_argument("what", choices=("law", "counterexample", "adjunction"))
    s.add_argument("name")
    s.add_argument("files", nargs="*")
    s.add_argument("--set", nargs="*", metavar="ATOM", help="parameter set for the Frobenius maps")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("dot", parents=[common], help="render an object as Graphviz DOT")
    s.add_argument("file")
    s.add_argument("--view", choices=dot.VIEWS, default="plain")
    s.set_defaults(run=cmd_dot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "need_category", False) and args.category is None:
        parser.error(f"{args.command} needs -c {{Q,H,M,R}}")
    if args.bound is not None and args.bound < 0:
        parser.error("--bound must be non-negative")
    try:
        out, code = args.run(args)
    except (UsageError, DocumentError, SizeError) as exc:
        print(f"graphcats: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"graphcats: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    if code == 1 and args.command == "iso":
        print("graphcats: not isomorphic", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

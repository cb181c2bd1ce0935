"""Run the sampled acceptance checks over every pair of default-corpus objects.

    python3 scripts/full_corpus.py

Equivalent to ``GRAPHCATS_FULL=1 pytest tests/test_acceptance.py -k "c07 or c11"``
but prints progress.  Expect a few minutes on one core.
"""

import argparse
import itertools
import time

from graphcats import incidence as inc
from graphcats import presheaf
from graphcats.corpus import corpus


def exponential_incidences() -> int:
    Rs = corpus("R")
    bad = 0
    start = time.perf_counter()
    for k, G in enumerate(Rs):
        for H in Rs:
            homs = [m.to_atom() for m in presheaf.hom_iter(G, H)]
            I = inc.inc_exponential_object(G, H).I
            bad += len(I) != len(homs) or set(I) != set(homs)
        if k % 20 == 19:
            print(f"  {k + 1}/{len(Rs)} domains, {time.perf_counter() - start:.0f}s", flush=True)
    print(f"exponential incidences: {len(Rs) ** 2} pairs, {bad} failures")
    return bad


def main():
    argparse.ArgumentParser(description=__doc__.splitlines()[0]).parse_args()
    bad = exponential_incidences()
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()

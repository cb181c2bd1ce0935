"""Write the instance data of every counterexample to fixtures/.

    python3 scripts/export_fixtures.py [--out fixtures]

Each file reloads with ``graphcats.serialization.parse``.
"""

import argparse
from pathlib import Path

from graphcats import laws
from graphcats.serialization import parse, serialize


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "fixtures")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, parts in laws.counterexample_fixtures().items():
        for part, x in parts.items():
            text = serialize(x)
            assert parse(text) == x
            path = args.out / f"{name}.{part}.json"
            path.write_text(text)
            print(path)


if __name__ == "__main__":
    main()

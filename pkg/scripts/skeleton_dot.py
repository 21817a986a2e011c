"""Write the one-skeleton of a permutohedron as DOT.

The CLI streams weak-order covers; this is the cellular view of the same
graph, vertices labeled by coordinates.  The render is undirected, but
each edge lists the boundary's source vertex first.  Pipe into
``dot -Tsvg`` to look at it.
"""

import argparse
import sys

from permutads.chains import skeleton_dot


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--output", default="-", help="file path, - for stdout")
    args = parser.parse_args()
    text = skeleton_dot(args.n)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

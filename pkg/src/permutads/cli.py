"""Command line front end.

Machine-oriented by design: enumerations and covers stream out as one JSON
object per line, boundaries also come as ``row,key,coeff`` CSV, graphs as
DOT.  All output is deterministic, so reruns are byte-identical.  Domain
errors produce a single JSON object on stderr and exit code 1; argument
errors exit with 2.  The environment variable ``PERMUTAD_MAX_N`` replaces
the per-command size bounds, which default to 5 for quotient computations,
6 for chain complexes and 7 elsewhere.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bruhat, chains
from .derivations import NCPoly, asder_compose, asder_monomial
from .linalg import csv_triples
from .permutad import (
    DecoratedSurjection,
    PRESETS,
    free_basis,
    qpermas_normalize,
    quotient_dim,
)
from .shuffles import Shuffle, shuffle_of, surjection_of_shuffle
from .surjections import Surjection, enumerate_surjections
from .trees import (
    LeveledTree,
    ShuffleLeftComb,
    comb_from_surjection,
    comb_to_surjection,
    tree_from_surjection,
    tree_to_surjection,
)
from .verify import iter_checks

QUOTIENT_BOUND = 5
COMPLEX_BOUND = 6
DEFAULT_BOUND = 7


class DomainError(ValueError):
    """Anything the domain rejects; carries the JSON payload to print."""

    def __init__(self, message: str, **fields):
        super().__init__(message)
        self.payload = {"error": message, **fields}


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _emit_error(obj: dict) -> None:
    sys.stderr.write(json.dumps(obj) + "\n")


def _env_cap() -> int | None:
    raw = os.environ.get("PERMUTAD_MAX_N")
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"PERMUTAD_MAX_N must be an integer, got {raw!r}")


def _require_size(n: int, what: str, default: int) -> None:
    cap = _env_cap()
    cap = default if cap is None else cap
    if n > cap:
        raise DomainError(
            f"n={n} exceeds the {what} bound {cap};"
            " set PERMUTAD_MAX_N to change the bound",
            n=n,
            bound=cap,
        )


def _ints(text: str, flag: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise DomainError(f"{flag} wants comma-separated integers, got {text!r}")


def _json_arg(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"malformed JSON for {flag}: {exc.msg}",
            column=exc.colno,
            position=exc.pos,
        )


# ---------------------------------------------------------------------------
# enum and convert.


def _cell_json(t: Surjection) -> dict:
    return {**t.to_json(), "dim": t.dim}


def cmd_enum(args) -> int:
    _require_size(args.n, "enumeration", DEFAULT_BOUND)
    ts = enumerate_surjections(args.n, args.k)
    if args.kind == "surjections":
        rows = [t.to_json() for t in ts]
    elif args.kind == "shuffles":
        rows = [shuffle_of(t).to_json() for t in ts]
    elif args.kind == "trees":
        rows = [tree_from_surjection(t).to_json() for t in ts]
    elif args.kind == "combs":
        rows = [comb_from_surjection(t).to_json() for t in ts]
    else:
        rows = [_cell_json(t) for t in sorted(ts, key=lambda t: (t.dim, t.values))]
    for row in rows:
        _emit(row)
    return 0


_FROM = {
    "surjection": Surjection.from_json,
    "shuffle": lambda obj: surjection_of_shuffle(Shuffle.from_json(obj)),
    "tree": lambda obj: tree_to_surjection(LeveledTree.from_json(obj)),
    "comb": lambda obj: comb_to_surjection(ShuffleLeftComb.from_json(obj)),
}

_TO = {
    "surjection": Surjection.to_json,
    "shuffle": lambda t: shuffle_of(t).to_json(),
    "tree": lambda t: tree_from_surjection(t).to_json(),
    "comb": lambda t: comb_from_surjection(t).to_json(),
}


def cmd_convert(args) -> int:
    if args.input == "-":
        lines = sys.stdin.readlines()
    else:
        with open(args.input, encoding="utf-8") as handle:
            lines = handle.readlines()
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DomainError(
                f"malformed JSON on input line {lineno}: {exc.msg}",
                line=lineno,
                column=exc.colno,
                position=exc.pos,
            )
        try:
            t = _FROM[args.from_kind](obj)
        except (ValueError, KeyError, TypeError) as exc:
            raise DomainError(f"bad {args.from_kind} on input line {lineno}: {exc}")
        _require_size(t.n, "conversion", DEFAULT_BOUND)
        _emit(_TO[args.to_kind](t))
    return 0


# ---------------------------------------------------------------------------
# Chain complexes.


def _boundary_cells(n: int, dim: int | None) -> list[Surjection]:
    if dim is None:
        return chains.cells(n)
    if not 0 <= dim <= n - 1:
        raise DomainError(f"dimension {dim} out of range 0..{n - 1}")
    return chains.cells_of_dim(n, dim)


def cmd_boundary(args) -> int:
    _require_size(args.n, "complex", COMPLEX_BOUND)
    selected = _boundary_cells(args.n, args.dim)
    if args.format == "csv":
        vectors = [chains.boundary_of_cell(t) for t in selected]
        for line in csv_triples(vectors, key_str=Surjection.csv_key):
            sys.stdout.write(line + "\n")
        return 0
    for t in selected:
        terms = [
            {"coefficient": str(c), "cell": _cell_json(u)}
            for u, c in chains.boundary_of_cell(t).terms()
        ]
        _emit({"cell": _cell_json(t), "boundary": terms})
    return 0


def cmd_homology(args) -> int:
    _require_size(args.n, "complex", COMPLEX_BOUND)
    _emit(
        {
            "n": args.n,
            "f_vector": list(chains.f_vector(args.n)),
            "betti": list(chains.homology_ranks(args.n)),
        }
    )
    return 0


# ---------------------------------------------------------------------------
# Weak order.


def cmd_bruhat(args) -> int:
    if args.path is not None:
        word = _ints(args.path[0], "--path")
        try:
            i = int(args.path[1])
        except ValueError:
            raise DomainError(f"--path wants an integer level, got {args.path[1]!r}")
        if args.n is not None and args.n != len(word):
            raise DomainError(f"--n {args.n} does not match a word of {len(word)} letters")
        _require_size(len(word), "weak order", DEFAULT_BOUND)
        path = bruhat.admissible_path(word, i)
        _emit({"path": [list(w) for w in path]})
        return 0
    if args.n is None:
        args.parser.error("--n is required unless --path is given")
    _require_size(args.n, "weak order", DEFAULT_BOUND)
    if args.check_connected:
        if args.type1_only:
            connected, _ = bruhat.type1_connected(args.n)
            edges = sum(1 for c in bruhat.cover_graph(args.n) if c.kind == 1)
        else:
            connected = True
            edges = len(bruhat.cover_graph(args.n))
        vertices = len(bruhat.all_words(args.n))
        _emit({"connected": connected, "vertices": vertices, "edges": edges})
        return 0
    if args.dot:
        sys.stdout.write(bruhat.bruhat_dot(args.n, type1_only=args.type1_only))
        return 0
    for c in bruhat.cover_graph(args.n):
        if args.type1_only and c.kind != 1:
            continue
        _emit(
            {
                "source": list(c.source),
                "i": c.i,
                "target": list(c.target),
                "kind": c.kind,
            }
        )
    return 0


# ---------------------------------------------------------------------------
# Normal forms, derivations, dimensions, verification.


def cmd_qnormalize(args) -> int:
    word = _ints(args.perm, "--perm")
    _require_size(len(word), "normal form", DEFAULT_BOUND)
    t = Surjection(word)
    if not t.is_permutation():
        raise DomainError(f"--perm wants a permutation word, got {list(word)}")
    d = DecoratedSurjection(t, ("mu",) * t.n)
    _emit({"q_exponent": qpermas_normalize(d).exponent})
    return 0


def cmd_asder_compose(args) -> int:
    outer = NCPoly.from_json(_json_arg(args.outer, "--outer"))
    inner = NCPoly.from_json(_json_arg(args.inner, "--inner"))
    _require_size(outer.nvars + inner.nvars - 1, "composition", DEFAULT_BOUND)
    if args.shape is not None:
        shape = Surjection(_ints(args.shape, "--shape"))
    else:
        shape = _ints(args.block, "--block")
    _emit(asder_compose(outer, inner, shape).to_json())
    return 0


def cmd_asder_monomial(args) -> int:
    letters = _ints(args.letters, "--letters")
    _require_size(args.n, "composition", DEFAULT_BOUND)
    _emit(asder_monomial(letters, args.n).to_json())
    return 0


def cmd_permutad_dim(args) -> int:
    bound = DEFAULT_BOUND if args.preset == "permMag" else QUOTIENT_BOUND
    _require_size(args.n, f"{args.preset} quotient", bound)
    gens, relations = PRESETS[args.preset]()
    free = len(free_basis(gens, args.n))
    dim = quotient_dim(relations, gens, args.n)
    _emit(
        {
            "preset": args.preset,
            "arity": args.n,
            "free_dimension": free,
            "dimension": dim,
        }
    )
    return 0


def cmd_verify(args) -> int:
    for name, bound, witness in iter_checks(args.max_n, ceiling=_env_cap()):
        row = {"check": name, "max_n": bound, "ok": witness is None}
        if witness is not None:
            row["witness"] = witness
        _emit(row)
        if witness is not None:
            return 1
    return 0


# ---------------------------------------------------------------------------
# Parser.


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permutads",
        description="Exact combinatorics of surjections under substitution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum_p = sub.add_parser("enum", help="stream a family as JSON lines")
    enum_p.add_argument(
        "kind", choices=["surjections", "shuffles", "trees", "combs", "cells"]
    )
    enum_p.add_argument("--n", type=int, required=True, help="number of inputs")
    enum_p.add_argument("--k", type=int, default=None, help="restrict the target size")
    enum_p.set_defaults(handler=cmd_enum)

    convert_p = sub.add_parser("convert", help="translate between encodings")
    kinds = ["surjection", "shuffle", "tree", "comb"]
    convert_p.add_argument("--from", dest="from_kind", choices=kinds, required=True)
    convert_p.add_argument("--to", dest="to_kind", choices=kinds, required=True)
    convert_p.add_argument(
        "--input", default="-", help="path to JSON lines, - for stdin"
    )
    convert_p.set_defaults(handler=cmd_convert)

    boundary_p = sub.add_parser("boundary", help="cellular differentials")
    boundary_p.add_argument("--n", type=int, required=True)
    boundary_p.add_argument("--dim", type=int, default=None)
    boundary_p.add_argument("--format", choices=["json", "csv"], default="json")
    boundary_p.set_defaults(handler=cmd_boundary)

    homology_p = sub.add_parser("homology", help="exact Betti numbers")
    homology_p.add_argument("--n", type=int, required=True)
    homology_p.set_defaults(handler=cmd_homology)

    bruhat_p = sub.add_parser("bruhat", help="weak order covers and paths")
    bruhat_p.add_argument("--n", type=int, default=None)
    bruhat_p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    bruhat_p.add_argument("--type1-only", dest="type1_only", action="store_true")
    bruhat_p.add_argument(
        "--check-connected", dest="check_connected", action="store_true"
    )
    bruhat_p.add_argument(
        "--path",
        nargs=2,
        metavar=("WORD", "LEVEL"),
        default=None,
        help="kind-1 path realizing the cover exchanging LEVEL and LEVEL+1",
    )
    bruhat_p.set_defaults(handler=cmd_bruhat, parser=bruhat_p)

    qnorm_p = sub.add_parser("qnormalize", help="exponent of a monomial normal form")
    qnorm_p.add_argument("--perm", required=True, help="permutation word, e.g. 2,3,1")
    qnorm_p.set_defaults(handler=cmd_qnormalize)

    asder_p = sub.add_parser("asder", help="polynomials with a derivation")
    asder_sub = asder_p.add_subparsers(dest="asder_command", required=True)
    compose_p = asder_sub.add_parser("compose", help="graft one polynomial into another")
    compose_p.add_argument("--outer", required=True, help="polynomial JSON")
    compose_p.add_argument("--inner", required=True, help="polynomial JSON")
    shape = compose_p.add_mutually_exclusive_group(required=True)
    shape.add_argument("--shape", help="two-level surjection values, e.g. 1,2,1")
    shape.add_argument("--block", help="variable positions of the inner factor")
    compose_p.set_defaults(handler=cmd_asder_compose)
    monomial_p = asder_sub.add_parser("monomial", help="iterated derivation grafts")
    monomial_p.add_argument("--letters", required=True, help="e.g. 1,2,4,2")
    monomial_p.add_argument("--n", type=int, required=True, help="variable count")
    monomial_p.set_defaults(handler=cmd_asder_monomial)

    permutad_p = sub.add_parser("permutad", help="preset presentations")
    permutad_sub = permutad_p.add_subparsers(dest="permutad_command", required=True)
    dim_p = permutad_sub.add_parser("dim", help="free and quotient dimensions")
    dim_p.add_argument("--preset", choices=sorted(PRESETS), required=True)
    dim_p.add_argument("--n", type=int, required=True, help="arity")
    dim_p.set_defaults(handler=cmd_permutad_dim)

    verify_p = sub.add_parser("verify", help="run the consistency checks")
    verify_sub = verify_p.add_subparsers(dest="verify_command", required=True)
    all_p = verify_sub.add_parser("all", help="every registered check")
    all_p.add_argument("--max-n", dest="max_n", type=int, default=None)
    all_p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        _emit_error(exc.payload)
        return 1
    except json.JSONDecodeError as exc:
        _emit_error(
            {
                "error": f"malformed JSON: {exc.msg}",
                "line": exc.lineno,
                "column": exc.colno,
                "position": exc.pos,
            }
        )
        return 1
    except ValueError as exc:
        _emit_error({"error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())

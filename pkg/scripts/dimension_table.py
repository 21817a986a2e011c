"""Tabulate free and quotient dimensions for the preset presentations.

Quotient columns stop at the preset's comfortable arity; the free column
keeps going, so the table doubles as a growth-rate reality check before
anyone asks for one more arity.
"""

import argparse
from dataclasses import dataclass

from permutads.permutad import PRESETS, free_basis, quotient_dim


@dataclass(frozen=True)
class TablePlan:
    preset: str
    max_free: int
    max_quotient: int


PLANS = {
    "permMag": TablePlan("permMag", 7, 5),
    "qPermAs": TablePlan("qPermAs", 6, 5),
    "permAsSh": TablePlan("permAsSh", 5, 4),
}


def rows_for(plan: TablePlan):
    gens, relations = PRESETS[plan.preset]()
    for n in range(1, plan.max_free + 1):
        free = len(free_basis(gens, n))
        if n <= plan.max_quotient:
            dim = str(quotient_dim(relations, gens, n))
        else:
            dim = "-"
        yield n, free, dim


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--preset", choices=sorted(PRESETS), default=None)
    args = parser.parse_args()
    names = [args.preset] if args.preset else sorted(PLANS)
    for name in names:
        print(f"{name}")
        print(f"  {'arity':>5}  {'free':>6}  {'quotient':>8}")
        for n, free, dim in rows_for(PLANS[name]):
            print(f"  {n:>5}  {free:>6}  {dim:>8}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

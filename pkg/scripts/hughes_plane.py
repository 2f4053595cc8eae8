"""Write the Hughes plane (order 9) incidence graph and check the plane axioms.

    python3 scripts/hughes_plane.py out/hughes9.dimacs
    AUTPART_HUGHES=out/hughes9.dimacs pytest tests/test_acceptance.py -k c8
"""
import argparse
import os
from itertools import combinations

from autpart.corpus import hughes_plane_incidence, hughes_plane_points_lines
from autpart.graph import to_dimacs


def is_projective_plane(points, lines, order):
    size = order * order + order + 1
    if len(points) != size or len(lines) != size:
        return False
    if any(len(line) != order + 1 for line in lines):
        return False
    return all(sum(a in line and b in line for line in lines) == 1
               for a, b in combinations(range(len(points)), 2))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out")
    ap.add_argument("--no-check", action="store_true", help="skip the axiom check")
    args = ap.parse_args()
    if not args.no_check:
        points, lines = hughes_plane_points_lines()
        ok = is_projective_plane(points, lines, 9)
        print(f"projective plane of order 9: {ok}")
        if not ok:
            raise SystemExit(1)
    os.makedirs(os.path.dirname(os.path.abspath(args.out)), exist_ok=True)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(to_dimacs(hughes_plane_incidence()))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()

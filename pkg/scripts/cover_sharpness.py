#!/usr/bin/env python3
"""Sharpness of the covering bound at desk scale.

For tiny grids over F_3 (origin present with multiplicity one), search every
multiset of hyperplane classes of size below sum(d_i) - n and confirm none is
a valid cover, then show the canonical cover that meets the bound exactly.
"""

import argparse
import itertools

from nullgrid import FieldSpec, Hyperplane, Multiset, MultisetGrid, extremal_cover, verify_cover


def hyperplane_classes(spec, arity):
    """One representative per zero set: scalar multiples cover identically."""
    if arity == 1:
        return [Hyperplane(spec, [-spec.element(a), spec.one]) for a in range(3)]
    normals = [(1, 0), (0, 1), (1, 1), (1, 2)]
    return [Hyperplane(spec, [c0, n1, n2]) for n1, n2 in normals for c0 in range(3)]


def coordinate_multisets(spec, max_size):
    out = []
    for m1 in range(max_size):
        for m2 in range(max_size):
            if 1 + m1 + m2 <= max_size:
                entries = {spec.zero: 1}
                if m1:
                    entries[spec.element(1)] = m1
                if m2:
                    entries[spec.element(2)] = m2
                out.append(Multiset(spec, entries.items()))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=4)
    parser.add_argument("--max-bound", type=int, default=3)
    args = parser.parse_args()

    spec = FieldSpec.prime(3)
    singles = coordinate_multisets(spec, args.max_size)
    grids = [MultisetGrid([ms]) for ms in singles]
    grids += [
        MultisetGrid([a, b])
        for a in singles
        for b in singles
        if a.size + b.size - 2 <= args.max_bound
    ]

    searched = 0
    for grid in grids:
        bound = sum(grid.sizes) - grid.arity
        if bound < 1 or bound > args.max_bound:
            continue
        classes = hyperplane_classes(spec, grid.arity)
        for k in range(bound):
            for combo in itertools.combinations_with_replacement(classes, k):
                searched += 1
                rep = verify_cover(list(combo), grid)
                assert rep.verdict != "valid_cover", f"undersized cover found: {grid}"
        planes = extremal_cover(grid)
        rep = verify_cover(planes, grid)
        assert rep.verdict == "valid_cover" and rep.k == bound
        print(f"grid {grid}: bound {bound} is sharp "
              f"(no cover below it; {[str(h) for h in planes]} meets it)")
    print(f"searched {searched} undersized candidate covers, none valid")


if __name__ == "__main__":
    main()

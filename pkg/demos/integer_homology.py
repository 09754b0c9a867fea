"""Integer homology via Smith normal form, including a torsion example.

Betti numbers over a prime field can hide torsion: the projective plane
has trivial reduced homology over GF(3) but a Z/2 class in dimension 1
that GF(2) sees as two extra ranks.  Smith normal form of the integer
boundary matrices separates the free rank from the torsion coefficients
and settles such cases exactly.

The script prints H_i with its torsion summands for the scale-2 complexes
on 8 and 16 points (3-spheres up to wedge), then contrasts the projective
plane's homology over Z, GF(2), and GF(3).
"""

from __future__ import annotations

from cuberips import (
    SpaceSpec,
    betti_numbers,
    enumerate_skeleton,
    integer_homology_snf,
    skeleton_from_facets,
)

PROJECTIVE_PLANE = [
    (0, 1, 2), (0, 2, 3), (0, 1, 5), (0, 4, 5), (0, 3, 4),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
]


def show_integer_homology(name, skel, dims):
    print(f"{name}:")
    for i in dims:
        summary = integer_homology_snf(skel, i)
        parts = []
        if summary.free_rank:
            parts.append(f"Z^{summary.free_rank}" if summary.free_rank > 1
                         else "Z")
        parts.extend(f"Z/{t}" for t in summary.torsion)
        print(f"  H_{i} = {' + '.join(parts) if parts else '0'}")


def main() -> None:
    for n in (3, 4):
        skel = enumerate_skeleton(SpaceSpec.hypercube(n, 2), dim_cap=4)
        show_integer_homology(f"scale-2 complex on 2^{n} points", skel,
                              range(4))

    plane = skeleton_from_facets(PROJECTIVE_PLANE)
    show_integer_homology("projective plane", plane, range(3))
    for p in (2, 3):
        bv = betti_numbers(plane, p=p)
        print(f"  reduced betti over GF({p}): {bv.reduced_betti}")


if __name__ == "__main__":
    main()

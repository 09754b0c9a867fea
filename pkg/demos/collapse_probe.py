"""Greedy free-face collapsing as a quick topology probe.

A free face is a simplex contained in exactly one larger simplex; removing
both preserves homotopy type.  Repeating greedily either crushes the
complex down to the requested dimension (proof of collapsibility along the
trace) or gets stuck on a core with no free faces.  Either way homology is
unchanged, which this script demonstrates on four inputs:

  * the solid tetrahedron boundary-plus-interior (collapses to a point),
  * the 1-skeleton of the 3-cube (stuck: five independent cycles),
  * the scale-2 complex on 8 points, a 16-cell boundary (stuck: a 3-sphere
    has no free faces at all),
  * a random flag complex, where we compare Betti vectors before and after.
"""

from __future__ import annotations

import numpy as np

from cuberips import (
    SpaceSpec,
    betti_numbers,
    enumerate_skeleton,
    greedy_collapse_probe,
    random_flag_skeleton,
    skeleton_from_facets,
)


def describe(name, skel, target):
    outcome = greedy_collapse_probe(skel, target)
    res = outcome.residual
    print(f"{name}:")
    print(f"  status={outcome.status}  reached_dim={outcome.reached_dim}  "
          f"moves={outcome.free_face_trace_length}")
    if res is not None:
        print(f"  residual counts: {res.counts}")
    return outcome


def main() -> None:
    tetra = skeleton_from_facets([(0, 1, 2, 3)])
    describe("solid tetrahedron -> point", tetra, 0)

    cube_graph = enumerate_skeleton(SpaceSpec.hypercube(3, 1), dim_cap=2)
    out = describe("3-cube graph -> point", cube_graph, 0)
    print(f"  residual betti: {betti_numbers(out.residual).reduced_betti}")

    sixteen_cell = enumerate_skeleton(SpaceSpec.hypercube(3, 2), dim_cap=4)
    describe("scale-2 complex on 8 points (a 3-sphere)", sixteen_cell, 0)

    rng = np.random.default_rng(7)
    skel = random_flag_skeleton(rng, max_vertices=9, edge_probability=0.45)
    before = betti_numbers(skel).reduced_betti
    outcome = greedy_collapse_probe(skel, 0)
    after = betti_numbers(outcome.residual).reduced_betti
    print("random flag complex:")
    print(f"  status={outcome.status}  counts {skel.counts} -> "
          f"{outcome.residual.counts}")
    print(f"  betti before {before}")
    print(f"  betti after  {after[: len(before)]}")


if __name__ == "__main__":
    main()

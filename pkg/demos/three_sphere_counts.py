"""Watch the 3-sphere count grow one vertex at a time.

At scale 2, adding vertex m-1 to the complex on {0..m-2} glues in a wedge
of link_sphere_count(m-1) new 3-spheres and changes nothing else.  This
script computes the third reduced Betti number for each prefix length m,
checks the increment against the per-vertex formula, and confirms the
closed form for full cubes m = 2**n.
"""

from __future__ import annotations

from cuberips import (
    SpaceSpec,
    betti_single_dim,
    hypercube_three_sphere_count,
    link_sphere_count,
    three_sphere_count,
)


def main() -> None:
    print("m    betti_3   increment   per-vertex formula")
    previous = 0
    for m in range(1, 33):
        b3 = betti_single_dim(SpaceSpec(m=m, r=2), 3)
        step = b3 - previous
        formula = link_sphere_count(m - 1)
        mark = "" if step == formula else "   <-- disagree!"
        print(f"{m:<4} {b3:<9} {step:<11} {formula}{mark}")
        assert b3 == three_sphere_count(m)
        previous = b3

    print("\nfull cubes, closed form vs running sum:")
    for n in range(3, 15):
        closed = hypercube_three_sphere_count(n)
        summed = three_sphere_count(2**n)
        print(f"  n={n:<3} 3-spheres = {closed:<10} running sum = {summed}")
        assert closed == summed


if __name__ == "__main__":
    main()

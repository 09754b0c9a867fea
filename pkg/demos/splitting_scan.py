"""Scan the vertex-deletion recurrence for reduced Betti numbers.

Dropping the largest vertex m-1 from the scale-r complex on {0..m-1}
leaves the complex on {0..m-2}; the difference is carried entirely by the
link of the deleted vertex, one dimension down:

    whole[i] = deleted[i] + link[i-1]      (link[-1] = 1 iff link empty)

This script verifies the identity for every m up to a bound, at two scales,
and prints the three Betti vectors for a few instructive cases.
"""

from __future__ import annotations

from cuberips import splitting_check


def main() -> None:
    for r, mmax, maxdim in ((2, 48, 3), (3, 24, 4)):
        failures = 0
        for m in range(2, mmax + 1):
            report = splitting_check(m, r, maxdim=maxdim)
            if not report.all_hold:
                failures += 1
                print(f"  r={r} m={m}: MISMATCH {report.holds} note={report.note}")
        print(f"scale r={r}: checked m=2..{mmax} through dim {maxdim}, "
              f"{failures} failures")

    print("\nworked examples at r=2:")
    for m in (8, 12, 16):
        rep = splitting_check(m, 2, maxdim=3)
        print(f"  m={m}")
        print(f"    whole   {rep.betti_whole.reduced_betti}")
        print(f"    deleted {rep.betti_deleted.reduced_betti}")
        print(f"    link    {rep.betti_link.reduced_betti} "
              f"(empty: {rep.link_empty})")


if __name__ == "__main__":
    main()

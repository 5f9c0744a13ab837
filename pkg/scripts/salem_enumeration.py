"""Enumerate certified Salem numbers by degree and trace-polynomial height.

    python3 scripts/salem_enumeration.py --half-degree 2 3 4 --height 3
"""

import argparse
import sys
import time

from salemcheeger.salem import NotFound, enumerate_salem, geodesic_length, smallest_salem


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--half-degree", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--height", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    for n in a.half_degree:
        t0 = time.perf_counter()
        certs = enumerate_salem(n, a.height, jobs=a.jobs)
        try:
            best = smallest_salem(n, a.height, jobs=a.jobs)
        except NotFound:
            print(f"degree {2 * n}: none with height <= {a.height}")
            continue
        g = geodesic_length(best)
        print(
            f"degree {2 * n}: {len(certs)} Salem numbers, smallest tau = {best.tau:.12f} "
            f"(Q = {best.q}), geodesic {float(g.lo):.12f}  [{time.perf_counter() - t0:.1f}s]"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())

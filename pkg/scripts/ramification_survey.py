"""Ramification plans for every enumerated Salem number.

    python3 scripts/ramification_survey.py --half-degree 2 3 4 --height 2
"""

import argparse
import sys

from salemcheeger.arith import ramification_plan, trace_field
from salemcheeger.salem import NotFound, enumerate_salem


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--half-degree", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--height", type=int, default=2)
    ap.add_argument("--prime-bound", type=int, default=10_000)
    a = ap.parse_args()
    missing = 0
    for n in a.half_degree:
        for cert in enumerate_salem(n, a.height):
            tf = trace_field(cert)
            try:
                plan = ramification_plan(cert, a.prime_bound)
            except NotFound:
                missing += 1
                print(f"{cert.q}: no inert prime <= {a.prime_bound}")
                continue
            print(
                f"deg {tf.degree}  Q = {cert.q}  disc {tf.disc_q}  "
                f"real places {plan.archimedean_count}  finite {plan.finite_prime}  parity {plan.parity_ok}"
            )
    return 1 if missing else 0


if __name__ == "__main__":
    sys.exit(main())

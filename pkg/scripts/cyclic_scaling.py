"""lambda1 of cyclic covers of a triangle: closed form check and log-log slope.

    python3 scripts/cyclic_scaling.py --m-max 64 --out results/cyclic.csv
"""

import argparse
import json
import sys
from pathlib import Path

from salemcheeger.experiments import cyclic_scaling, rows_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--m-min", type=int, default=4)
    ap.add_argument("--m-max", type=int, default=64)
    ap.add_argument("--out", type=Path, default=None)
    a = ap.parse_args()
    rows, summary = cyclic_scaling(range(a.m_min, a.m_max + 1))
    if a.out:
        a.out.parent.mkdir(parents=True, exist_ok=True)
        a.out.write_text(rows_csv(rows))
    for r in rows[:: max(1, len(rows) // 8)]:
        print(f"m={r['m']:3d}  lambda1={r['lambda1']:.3e}  m^2 lambda1={r['lambda1_m2']:.5f}")
    print(json.dumps(summary, indent=2))
    return 0 if abs(summary["slope"] + 2) <= 0.1 else 2


if __name__ == "__main__":
    sys.exit(main())

"""Two-cover inequality experiment: random signed graphs, proof-chain ledger, bound ratios.

    python3 scripts/run_two_cover.py --vertices 12 --instances 1000 --seed 7 --out results/two_cover.csv
"""

import argparse
import logging
import sys
from pathlib import Path

from salemcheeger.experiments import ExperimentConfig, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--vertices", type=int, default=12)
    ap.add_argument("--min-vertices", type=int, default=3)
    ap.add_argument("--instances", type=int, default=1000)
    ap.add_argument("--edge-prob", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/two_cover.csv"))
    a = ap.parse_args()
    a.out.parent.mkdir(parents=True, exist_ok=True)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    cfg = ExperimentConfig(
        "two-cover",
        seed=a.seed,
        out=a.out,
        jobs=a.jobs,
        vertices=a.vertices,
        min_vertices=a.min_vertices,
        instances=a.instances,
        edge_prob=a.edge_prob,
    )
    code = run(cfg)
    print(a.out.with_suffix(".summary.json").read_text())
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Summary spectral data for a single graph."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Optional

import numpy as np

from .cheeger import EXACT_LIMIT, cheeger_exact, cheeger_sweep, indicator, sobolev_ratio
from .graph import WeightedGraph, lambda1_pair


@dataclass(frozen=True)
class SpectralReport:
    lambda1: float
    h_lower: float
    h_upper: float
    h_exact: Optional[float]
    sobolev_best: float
    eig_residual: float

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, obj: dict) -> "SpectralReport":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in obj.items() if k in names})


def spectral_report(g: WeightedGraph, exact_limit: int = 16) -> SpectralReport:
    """lambda1 with residual, Cheeger bounds and the best Sobolev quotient found.

    h_lower = lambda1 / 2 comes from lambda1 <= 2h; h_upper is the Fiedler sweep.
    """
    pair = lambda1_pair(g)
    fiedler = pair.vector / np.sqrt(g.degrees())
    sweep = cheeger_sweep(g, fiedler)
    candidates = [sobolev_ratio(g, fiedler), sobolev_ratio(g, indicator(g, sweep.subset))]
    h_exact = None
    if g.vertex_count <= min(exact_limit, EXACT_LIMIT):
        ex = cheeger_exact(g)
        h_exact = ex.ratio
        candidates.append(sobolev_ratio(g, indicator(g, ex.subset)))
    return SpectralReport(
        lambda1=pair.value,
        h_lower=pair.value / 2,
        h_upper=sweep.ratio,
        h_exact=h_exact,
        sobolev_best=float(min(candidates)),
        eig_residual=pair.residual,
    )

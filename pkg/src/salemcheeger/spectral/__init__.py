"""Discrete spectral geometry: Laplacian spectra, Cheeger constants, double covers."""

from .cheeger import (
    ConstantFunction,
    Cut,
    DegenerateOrder,
    cheeger_exact,
    cheeger_sweep,
    coarea_integral,
    gradient_l1,
    indicator,
    sobolev_ratio,
    weighted_median,
)
from .cover import TrivialCover, cover_spectrum, deck_involution, double_cover, union_spectrum
from .generators import cycle, complete, cyclic_cover, path, pinched_pair, torus_grid
from .graph import (
    Disconnected,
    GraphError,
    Signing,
    TooLarge,
    WeightedGraph,
    fiedler_vector,
    lambda1,
    normalized_laplacian,
    signed_laplacian,
)
from .proofchain import (
    CoverSpectrumNotLower,
    DisconnectedCover,
    ProofChainTrace,
    VacuousTrace,
    proof_chain_check,
    verify_two_cover_bound,
)
from .report import SpectralReport, spectral_report

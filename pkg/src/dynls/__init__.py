"""Streaming least-squares toolkit.

Exact recursive solvers, leverage-score row sampling with sketched score
estimation, executable verifiers for online matrix-vector reduction
constructions, and a benchmark harness for error-versus-time experiments.
"""
from .errors import (
    DimensionMismatch,
    DynlsError,
    EigenvalueOutOfRange,
    HorizonExceeded,
    InvalidParameter,
    NotOrthonormal,
    NotSymmetric,
    ParseError,
    RankDeficientInit,
    SingularAfterDelete,
    SingularGram,
    SolverFailure,
)
from .linalg import (
    eig_sym,
    normal_equation_solve,
    orthonormal_complement,
    spectral_approx_check,
)
from .baselines import (
    LeverageRowSampler,
    RecursiveLsq,
    UniformRowSampler,
    leverage_constant,
)
from .sampler import (
    ADAPTIVE,
    OBLIVIOUS,
    LeverageEstimate,
    SamplerConfig,
    SketchedLsqSampler,
    exact_online_leverage,
    sigma_bounds_from_init,
)
from .sketch import JlSketch, jl_apply, jl_generate, sketch_rows

__version__ = "0.1.0"

"""Exact M/M/m waiting and residence times via the Erlang B ansatz.

Also provides the morphing approximation with its correction polynomials,
the complex zeros behind them, and a discrete-event simulator used as an
independent check.
"""

from .erlang import (
    ExactMetrics,
    FastServerView,
    InvalidArgumentError,
    QueueSpec,
    UnstableQueueError,
    erlang_b,
    erlang_b_poisson,
    erlang_b_recurrence,
    erlang_c,
    fast_residence_time,
    fast_server_view,
    metrics,
    mm1_residence_time,
    phi_b,
    poisson_cdf,
    poisson_pmf,
    residence_time,
    utilization_delay,
    utilization_loss,
    waiting_time,
)
from .morphing import (
    CorrectionPolynomial,
    DeflationDomainError,
    MorphMetrics,
    corrected_residence,
    correction_polynomial,
    correction_polynomials,
    morph_metrics,
    morphing_error_bound,
    morphing_residence,
)
from .polyroots import RootLocus, SzegoCurve, corrected_roots, morphing_roots, szego_curve
from .simulator import SimConfig, SimEstimate, simulate, utilization_sweep_empirical

__version__ = "0.1.0"

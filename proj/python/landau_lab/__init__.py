"""Numerics lab for damped dispersive propagators.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from landau_lab._core import (  # noqa: F401
    CatalogEntry,
    DyadicPiece,
    HoelderCurve,
    SpectralFunction,
    __version__,
    bump,
    curve_eval,
    f_sharp,
    f_theta,
    first_order_integral,
    fit_rate,
    fourier_weighted_norm,
    gagliardo_seminorm,
    k0_index,
    landau_multiplier,
    lemma31_ratio,
    limit_functional,
    lp_decompose,
    maximal,
    phase_diagnostics,
    pinned_time,
    propagate_point,
    solve_t0,
    synthesize,
    synthesize_point,
    taylor_tail_bound,
    wsp_norm,
)

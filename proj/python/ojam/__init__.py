"""Secrecy throughput of opportunistic jammer selection in wiretap networks."""

from ._ojam import (
    DerivedConstants,
    DesignPoint,
    IoError,
    NumericalError,
    OptimizationResult,
    OutageEstimate,
    SystemParams,
    beta_b_star,
    beta_e_star,
    conditional_gain_moment,
    connection_outage,
    dbm_to_linear,
    derive_constants,
    estimate_outages,
    gamma,
    golden_section_delta,
    linear_to_dbm,
    lower_incomplete_gamma,
    optimize_delta,
    random_baseline_throughput,
    run_cli,
    secrecy_outage,
    selection_probability,
    throughput,
    throughput_derivative,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Performance analysis toolkit for a two-user power-domain downlink that
shares its waveform with radar sensing.

Closed-form outage probabilities, ergodic communication rates, and sensing
rates are implemented next to independent Monte Carlo oracles, and the
sensing-communication rate regions of the integrated and frequency-division
architectures can be computed and compared.
"""

from .analytic import (
    ChiSet,
    ReferenceEntry,
    Thresholds,
    chi_set,
    ergodic_rates,
    ergodic_rates_asymptotic,
    outage_asymptotic,
    outage_probability,
    rate_triple,
    reference_table,
    sensing_rate,
    sensing_rate_asymptotic,
    sum_rate,
    thresholds,
)
from .channel import (
    ChannelDraw,
    CorrelationMatrix,
    Target,
    TargetScene,
    build_correlation,
    cdf_far,
    cdf_near,
    gain_samples,
    pdf_far,
    pdf_near,
    sample_draw,
    scene_eigenvalues,
    steering_vector,
    trial_uniforms,
)
from .config import (
    ISAC,
    Mode,
    RateTriple,
    ResourceSplit,
    SystemConfig,
    baseline_config,
    comm_factors,
    db_to_linear,
    fdsac,
    make_config,
    validate_config,
)
from .montecarlo import (
    EstimateWithError,
    TrialSinrs,
    dual_function_signal,
    estimate_ecr,
    estimate_outage,
    estimate_slope,
    orthogonal_streams,
    sensing_mi_bruteforce,
    sensing_mi_reduced,
    trial_sinrs,
)
from .region import (
    ContainmentReport,
    FrontierPoint,
    RatePoint,
    RegionFrontier,
    bandwidth_scaled_rate,
    containment_check,
    fdsac_frontier,
    isac_corner,
    log_plus_ratio,
)
from .specfun import EULER_GAMMA, exp_int_ei, log2_det_i_plus_scaled, psi_term

__version__ = "0.1.0"

__all__ = [
    "ChannelDraw",
    "ChiSet",
    "ContainmentReport",
    "CorrelationMatrix",
    "EULER_GAMMA",
    "EstimateWithError",
    "FrontierPoint",
    "ISAC",
    "Mode",
    "RatePoint",
    "RateTriple",
    "ReferenceEntry",
    "RegionFrontier",
    "ResourceSplit",
    "SystemConfig",
    "Target",
    "TargetScene",
    "Thresholds",
    "TrialSinrs",
    "bandwidth_scaled_rate",
    "baseline_config",
    "build_correlation",
    "cdf_far",
    "cdf_near",
    "chi_set",
    "comm_factors",
    "containment_check",
    "db_to_linear",
    "dual_function_signal",
    "ergodic_rates",
    "ergodic_rates_asymptotic",
    "estimate_ecr",
    "estimate_outage",
    "estimate_slope",
    "exp_int_ei",
    "fdsac",
    "fdsac_frontier",
    "gain_samples",
    "isac_corner",
    "log2_det_i_plus_scaled",
    "log_plus_ratio",
    "make_config",
    "orthogonal_streams",
    "outage_asymptotic",
    "outage_probability",
    "pdf_far",
    "pdf_near",
    "psi_term",
    "rate_triple",
    "reference_table",
    "sample_draw",
    "scene_eigenvalues",
    "sensing_mi_bruteforce",
    "sensing_mi_reduced",
    "sensing_rate",
    "sensing_rate_asymptotic",
    "steering_vector",
    "sum_rate",
    "thresholds",
    "trial_sinrs",
    "trial_uniforms",
    "validate_config",
]

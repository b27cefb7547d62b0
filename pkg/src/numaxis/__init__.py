"""numaxis: divergent series, zeta continuation, the numeric-axis metric and its plane embeddings."""

from numaxis.embedding import (
    REGIONS,
    EmbeddingCurve,
    PlaneSignature,
    RegionId,
    admissible_regions,
    closed_form_y,
    derivative_residual,
    figure1_curves,
    induced_line_element_ratio,
    integrate_embedding,
    rhs_squared,
)
from numaxis.errors import (
    ArgumentError,
    BoundaryError,
    ConvergenceError,
    DomainError,
    HorizonError,
    NumAxisError,
    OutputError,
    PoleError,
    RegionError,
    SeriesRangeError,
    SignatureError,
)
from numaxis.geodesic import (
    GeodesicState,
    Termination,
    Trajectory,
    coordinate_time_exact,
    horizon_proper_time,
    init_state,
    integrate,
    kinematic_constants,
    normalization_residual,
    parabola_x,
    partial_sum_kinematics,
)
from numaxis.metric import (
    HorizonClass,
    HorizonSide,
    Interval,
    IntervalClass,
    MetricParams,
    classify,
    conformal_factor,
    interval_squared,
    proper_length,
)
from numaxis.series import (
    SeriesKind,
    SeriesSpec,
    SummationMethod,
    SummationResult,
    abel_sum,
    assign,
    cesaro_sum,
    partial_sum,
    zeta_regularized_sum,
)
from numaxis.zeta import (
    BernoulliTable,
    ZetaArgument,
    ZetaMethod,
    ZetaResult,
    bernoulli_numbers,
    zeta,
    zeta_continued,
    zeta_direct,
    zeta_reflected,
)

__all__ = [
    "REGIONS",
    "ArgumentError",
    "BernoulliTable",
    "BoundaryError",
    "ConvergenceError",
    "DomainError",
    "EmbeddingCurve",
    "GeodesicState",
    "HorizonClass",
    "HorizonError",
    "HorizonSide",
    "Interval",
    "IntervalClass",
    "MetricParams",
    "NumAxisError",
    "OutputError",
    "PlaneSignature",
    "PoleError",
    "RegionError",
    "RegionId",
    "SeriesKind",
    "SeriesRangeError",
    "SeriesSpec",
    "SignatureError",
    "SummationMethod",
    "SummationResult",
    "Termination",
    "Trajectory",
    "ZetaArgument",
    "ZetaMethod",
    "ZetaResult",
    "abel_sum",
    "admissible_regions",
    "assign",
    "bernoulli_numbers",
    "cesaro_sum",
    "classify",
    "closed_form_y",
    "conformal_factor",
    "coordinate_time_exact",
    "derivative_residual",
    "figure1_curves",
    "horizon_proper_time",
    "induced_line_element_ratio",
    "init_state",
    "integrate",
    "integrate_embedding",
    "interval_squared",
    "kinematic_constants",
    "normalization_residual",
    "parabola_x",
    "partial_sum",
    "partial_sum_kinematics",
    "proper_length",
    "rhs_squared",
    "zeta",
    "zeta_continued",
    "zeta_direct",
    "zeta_reflected",
    "zeta_regularized_sum",
]

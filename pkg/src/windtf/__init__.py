"""Seasonal wind-speed time-frequency analysis.

Decade-averaged monthly series are routed by season: winter months go to a
continuous wavelet transform with modulus-maxima discontinuity detection,
summer months are median-filtered and passed through the Stockwell
S-transform. A seeded synthetic generator stands in for station data.
"""
from .errors import (
    Empty,
    EvenWindow,
    MalformedSpectrum,
    MissingHeader,
    MonthAbsent,
    NegativeSpeed,
    NonConvergent,
    NonUniformSpacing,
    OracleSizeExceeded,
    ScaleOutOfRange,
    SignalTooShort,
    TooShort,
    UnparsableRow,
    UnsupportedFamilyOrLength,
    WindowTooLarge,
)
from .series import (
    CSV_HEADER,
    AveragedSeries,
    SeriesStats,
    TimeSeries,
    agitation_index,
    decade_monthly_average,
    parse_csv,
    serialize_csv,
    series_stats,
)
from .filtering import MedianFilterConfig, median_filter
from .wavelets import (
    DESCRIPTOR_NAMES,
    WaveletDescriptor,
    cascade_wavelet,
    descriptor,
    haar_psi,
    morlet_psi,
    orthogonal_filter,
)
from .cwt import (
    MaximaLine,
    Scalogram,
    cwt,
    default_scales,
    detect_discontinuities,
    modulus_maxima,
)
from .stockwell import (
    STConfig,
    STSpectrum,
    inverse_s_transform,
    s_transform,
    s_transform_direct,
    st_magnitude,
)
from .pipeline import (
    SUMMER_BRANCH,
    WINTER_BRANCH,
    AgitatedModel,
    AnalysisReport,
    CalmModel,
    PipelineConfig,
    StepModel,
    classify_month,
    run_pipeline,
    synth_wind,
)

__version__ = "0.1.0"

"""Fuzzy model of a multi-stage process and three measures of its effectiveness."""

from .centroid import (
    CentroidPoint,
    ComparisonOutcome,
    Rule,
    Verdict,
    centroid,
    centroid_general,
    centroid_integral_oracle,
    compare,
    feasible_points,
)
from .core import (
    DEFAULT_LABELS,
    GRADE_LEVELS,
    FuzzyStageSet,
    LabelSet,
    LinguisticLabel,
    NormalizedFuzzySet,
    StageCounts,
    grade_from_count,
    normalize,
    stage_fuzzy_set,
)
from .datasets import GroupDataset, load_group_file, parse_group_file
from .errors import (
    DegenerateError,
    DomainError,
    FuzzyStagesError,
    InvalidCountError,
    RoleError,
    ShapeError,
    UnknownLabelError,
    ValidationError,
)
from .profiles import (
    Profile,
    ProfileDistribution,
    Role,
    enumerate_profiles,
    is_well_ordered,
    membership_distribution,
    possibilities,
    probabilities,
    profile_membership,
    pseudo_frequencies,
)
from .render import parse_report, render_report
from .report import AnalysisOptions, AnalysisReport, analyze_command, combine_command, compare_command
from .uncertainty import (
    OrderedPossibilityDistribution,
    UncertaintyReport,
    nonspecificity,
    ordered_possibility,
    shannon_entropy,
    strife,
    total_uncertainty,
)

__version__ = "0.1.0"

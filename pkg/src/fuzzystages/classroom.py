"""The two classroom modelling experiments, as published and as recomputed.

Only the stage-1 counts of the engineering group were published; the other
count vectors below are chosen to reproduce the published fuzzy stage sets
through the quantizer. Published values are kept verbatim (as strings) next to
the exact recomputation wherever the two disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .datasets import GroupDataset, stage_presets
from .profiles import ProfileDistribution, Role

_MM = stage_presets()["mm"]

ENGINEERING = GroupDataset.from_counts(
    "engineering",
    35,
    [(_MM[0], (0, 0, 15, 12, 8)), (_MM[1], (0, 0, 20, 11, 4)), (_MM[2], (12, 12, 11, 0, 0))],
)

MANAGEMENT = GroupDataset.from_counts(
    "management",
    30,
    [(_MM[0], (0, 8, 14, 8, 0)), (_MM[1], (8, 8, 14, 0, 0)), (_MM[2], (10, 10, 10, 0, 0))],
)

# published fuzzy stage sets, grades for labels a..e
PUBLISHED_STAGE_SETS = {
    "engineering": (
        ("0", "0", "0.5", "0.25", "0.25"),
        ("0", "0", "0.5", "0.25", "0"),
        ("0.25", "0.25", "0.25", "0", "0"),
    ),
    "management": (
        ("0", "0.25", "0.5", "0.25", "0"),
        ("0.25", "0.25", "0.5", "0", "0"),
        ("0.25", "0.25", "0.25", "0", "0"),
    ),
}

# profile: (m_s(1), r_s(1), m_s(2), r_s(2), f(s), r(s)); rows with nonzero membership only
TABLE_1 = {
    "bbb": ("0", "0", "0.016", "0.258", "0.016", "0.129"),
    "bba": ("0", "0", "0.016", "0.258", "0.016", "0.129"),
    "baa": ("0", "0", "0.016", "0.258", "0.016", "0.129"),
    "ccc": ("0.062", "1", "0.062", "1", "0.124", "1"),
    "cca": ("0.062", "1", "0.062", "1", "0.124", "1"),
    "ccb": ("0", "0", "0.031", "0.5", "0.031", "0.25"),
    "caa": ("0", "0", "0.031", "0.5", "0.031", "0.25"),
    "cba": ("0", "0", "0.031", "0.5", "0.031", "0.25"),
    "cbb": ("0", "0", "0.031", "0.5", "0.031", "0.25"),
    "dda": ("0.016", "0.258", "0", "0", "0.016", "0.129"),
    "ddb": ("0.016", "0.258", "0", "0", "0.016", "0.129"),
    "ddc": ("0.016", "0.258", "0", "0", "0.016", "0.129"),
    "daa": ("0", "0", "0.016", "0.258", "0.016", "0.129"),
    "dba": ("0", "0", "0.016", "0.258", "0.016", "0.129"),
    "dbb": ("0", "0", "0.016", "0.258", "0.016", "0.129"),
    "dca": ("0.031", "0.5", "0.031", "0.5", "0.062", "0.5"),
    "dcb": ("0.031", "0.5", "0.031", "0.5", "0.062", "0.5"),
    "dcc": ("0.031", "0.5", "0.031", "0.5", "0.062", "0.5"),
    "eca": ("0.031", "0.5", "0", "0", "0.031", "0.25"),
    "ecb": ("0.031", "0.5", "0", "0", "0.031", "0.25"),
    "ecc": ("0.031", "0.5", "0", "0", "0.031", "0.25"),
    "eda": ("0.016", "0.258", "0", "0", "0.016", "0.129"),
    "edb": ("0.016", "0.258", "0", "0", "0.016", "0.129"),
    "edc": ("0.016", "0.258", "0", "0", "0.016", "0.129"),
}
TABLE_1_COLUMNS = ("m1", "r1", "m2", "r2", "f", "r")


def table_column(column: str, role: Role = Role.MEMBERSHIP) -> ProfileDistribution:
    """One column of the published profile table as a distribution over U^3."""
    j = TABLE_1_COLUMNS.index(column)
    return ProfileDistribution.from_mapping({s: row[j] for s, row in TABLE_1.items()}, 3, role)


# published ordered possibility distributions (125 values each)
PUBLISHED_ORDERED_POSSIBILITY = {
    "engineering": ("1",) * 2 + ("0.5",) * 6 + ("0.258",) * 6 + ("0",) * 111,
    "management": ("1",) * 2 + ("0.5",) * 6 + ("0.258",) * 5 + ("0",) * 112,
}

PUBLISHED_MEASURES = {
    "engineering": {"strife": 0.445, "nonspecificity": 2.208, "total": 2.653, "shannon": 0.289},
    "management": {"strife": 0.432, "nonspecificity": 2.179, "total": 2.611, "shannon": 0.312},
}

# centre-of-mass abscissae per stage: published vs recomputed
PUBLISHED_XC = {"engineering": ("3.25", "5.66", None), "management": ("2.25", "3.25", None)}
DERIVED_XC = {
    "engineering": (Fraction(13, 4), Fraction(17, 6), Fraction(3, 2)),
    "management": (Fraction(5, 2), Fraction(7, 4), Fraction(3, 2)),
}
PUBLISHED_VERDICTS = ("first-better", "first-better", "tie")


@dataclass(frozen=True)
class Erratum:
    where: str
    published: str
    derived: str
    note: str


ERRATA = (
    Erratum("m_s(c,c,a)", "0.06225", "1/16", "product of 1/2, 1/2, 1/4"),
    Erratum("table m_s(1) at (c,c,b)", "0", "1/16", "(c,c,b) is well ordered; grades 1/2, 1/2, 1/4"),
    Erratum("table m_s(2) at (c,c,b)", "0.031", "1/16", "grades 1/2, 1/2, 1/4"),
    Erratum("possibility of 1/64 profiles", "0.258", "1/4", "ratio of pre-rounded 0.016/0.062"),
    Erratum("engineering ordered possibility", "r1=r2=1", "r1=r2=r3=1", "(c,c,b) shares the maximum"),
    Erratum("management ordered possibility", "five 0.258 values", "six 1/4 values", "table lists six 1/64 rows"),
    Erratum("xc, management stage 1", "2.25", "5/2", "(3*0.25 + 5*0.5 + 7*0.25)/2"),
    Erratum("xc, engineering stage 2", "5.66", "17/6", "the 1/2 factor was dropped"),
    Erratum("xc, management stage 2", "3.25", "7/4", "(0.25 + 3*0.25 + 5*0.5)/2"),
    Erratum("uniform centre of mass", "(5/2, 1/2)", "(5/2, 1/10)", "yc >= 1/10 with equality at the uniform set"),
)


def published_memberships() -> dict[str, dict]:
    """Published membership columns keyed by group, for flagging rows in text reports."""
    return {
        "engineering": dict(table_column("m1").nonzero()),
        "management": dict(table_column("m2").nonzero()),
    }

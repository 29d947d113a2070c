"""
Verification Package

The identity rows, their verification routes, the mock theta and rank
identities, and report rendering.
"""

from .case_specs import CASES, CaseId, CaseSpec, g_series, g_variants, get_case
from .identities import (
    ROUTES,
    combinatorial_side,
    lhs_lemma_form,
    lhs_subset_form,
    lhs_tail_sum,
    rhs,
    verify,
    verify_all,
)
from .mocktheta import (
    RankCatalogEntry,
    catalog,
    format_catalog,
    one_repeat_series,
    rank_sum_series,
    verify_identity9,
    verify_rank,
)
from .reports import CheckResult, RouteMismatch, VerificationReport, summary_table
from .selfcheck import run_selfcheck

__all__ = [
    'CASES',
    'CaseId',
    'CaseSpec',
    'g_series',
    'g_variants',
    'get_case',
    'ROUTES',
    'combinatorial_side',
    'lhs_lemma_form',
    'lhs_subset_form',
    'lhs_tail_sum',
    'rhs',
    'verify',
    'verify_all',
    'RankCatalogEntry',
    'catalog',
    'format_catalog',
    'one_repeat_series',
    'rank_sum_series',
    'verify_identity9',
    'verify_rank',
    'CheckResult',
    'RouteMismatch',
    'VerificationReport',
    'summary_table',
    'run_selfcheck'
]

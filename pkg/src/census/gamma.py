"""Razões γ_S: maior |Ω_2(gS)|/|S| sobre as classes laterais não triviais de S num supergrupo."""

import logging
from fractions import Fraction
from typing import NamedTuple

from src.census.counts import coset_breakdown
from src.config import DEFAULT_ENUM_CAP, DEFAULT_QUOTIENT_CAP
from src.permcore import GroupHandle
from src.reports import CosetBreakdown, GammaReport

logger = logging.getLogger(__name__)


class GammaResult(NamedTuple):
    outer_ratio: Fraction
    identity_ratio: Fraction
    cosets: list[CosetBreakdown]

    @property
    def maximal_coset(self) -> CosetBreakdown | None:
        outer = [row for row in self.cosets if row.coset_index != 0]
        return max(outer, key=lambda row: row.ratio) if outer else None

    def to_report(self) -> GammaReport:
        trivial = self.cosets[0]
        best = self.maximal_coset
        return GammaReport(
            socle=trivial.normal,
            group=trivial.group,
            prime=trivial.prime,
            size=trivial.size,
            identity_count=trivial.count,
            outer_count=best.count if best else 0,
            cosets=len(self.cosets),
            maximal_index=best.coset_index if best else None,
            maximal_rep=best.rep if best else None,
        )


def gamma_simple(
    socle: GroupHandle,
    overgroup: GroupHandle,
    *,
    prime: int = 2,
    cap: int = DEFAULT_ENUM_CAP,
    quotient_cap: int = DEFAULT_QUOTIENT_CAP,
) -> GammaResult:
    """Razão externa máxima (0 se S = supergrupo) e, à parte, a razão da classe trivial."""
    rows = coset_breakdown(overgroup, socle, prime, cap=cap, quotient_cap=quotient_cap)
    identity_ratio = rows[0].ratio
    outer = [row.ratio for row in rows[1:]]
    outer_ratio = max(outer) if outer else Fraction(0)
    logger.info("γ de %s em %s: externa %s, trivial %s", socle.label, overgroup.label, outer_ratio, identity_ratio)
    return GammaResult(outer_ratio, identity_ratio, rows)

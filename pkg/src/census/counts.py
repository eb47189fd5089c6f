"""Censos exatos de p-elementos em grupos, classes laterais e decomposições por classes laterais."""

import logging
from typing import Iterable

from src.classical import LabeledCoset
from src.config import DEFAULT_ENUM_CAP, DEFAULT_QUOTIENT_CAP
from src.constructions import ProductStructure, SubdirectStructure
from src.errors import CapExceededError, InvalidParameterError
from src.permcore import GroupHandle, Permutation, format_cycles, is_p_element, require_prime
from src.quotients import quotient_by
from src.reports import CensusReport, CosetBreakdown

logger = logging.getLogger(__name__)

CENSUS_METHODS = ("auto", "enumerate", "structure")


def count_p_elements(elements: Iterable[Permutation], p: int) -> int:
    require_prime(p)
    return sum(1 for x in elements if is_p_element(x, p))


def _structural_count(group: GroupHandle, p: int, cap: int) -> int | None:
    """Contagem por componentes: uma tupla é p-elemento sse cada componente é."""
    structure = group.structure
    if isinstance(structure, ProductStructure):
        total = 1
        for factor in structure.factors:
            total *= p_element_count(factor, p, cap=cap)
        return total
    if isinstance(structure, SubdirectStructure):
        inner = p_element_count(structure.coset.socle, p, cap=cap)
        outer = count_p_elements(structure.coset.elements(cap), p)
        return inner**structure.t + outer**structure.t
    return None


def p_element_count(group: GroupHandle, p: int, *, cap: int = DEFAULT_ENUM_CAP, method: str = "auto") -> int:
    if method not in CENSUS_METHODS:
        raise InvalidParameterError(f"método de censo desconhecido: {method}")
    if method != "enumerate":
        count = _structural_count(group, p, cap)
        if count is not None:
            return count
        if method == "structure":
            raise InvalidParameterError(f"{group.label} não tem estrutura de produto")
    if group.order > cap:
        raise CapExceededError("enumeração", group.order, cap)
    return count_p_elements(group.elements(cap), p)


def p_census(group: GroupHandle, p: int, *, cap: int = DEFAULT_ENUM_CAP, method: str = "auto") -> CensusReport:
    """
    |Ω_p(G)| e P_p(G) exatos. Potências diretas e subdiretas são contadas por componentes
    (method="auto"); method="enumerate" força a enumeração completa.
    """
    require_prime(p)
    logger.info("censo de %s-elementos em %s (ordem %s)", p, group.label, group.order)
    count = p_element_count(group, p, cap=cap, method=method)
    return CensusReport(group=group.label, prime=p, count=count, order=group.order)


def coset_p_census(coset: LabeledCoset, p: int, *, cap: int = DEFAULT_ENUM_CAP) -> CensusReport:
    """|Ω_p(rep·S)| sobre |S|."""
    require_prime(p)
    if coset.size > cap:
        raise CapExceededError("enumeração", coset.size, cap)
    count = count_p_elements(coset.elements(cap), p)
    logger.info("censo da classe %s: %s de %s", coset.label, count, coset.size)
    return CensusReport(group=coset.ambient.label, prime=p, count=count, order=coset.size, coset=coset.label)


def coset_breakdown(
    group: GroupHandle,
    normal: GroupHandle,
    p: int,
    *,
    cap: int = DEFAULT_ENUM_CAP,
    quotient_cap: int = DEFAULT_QUOTIENT_CAP,
) -> list[CosetBreakdown]:
    """|Ω_p(gN)| para cada classe lateral gN, na ordem das classes do quociente (a classe 0 é N)."""
    require_prime(p)
    if group.order > cap:
        raise CapExceededError("enumeração", group.order, cap)
    quotient = quotient_by(group, normal, cap=quotient_cap)
    rows = []
    for i, rep in enumerate(quotient.reps):
        count = count_p_elements((rep * n for n in normal.elements(cap)), p)
        rows.append(
            CosetBreakdown(
                group=group.label,
                normal=normal.label,
                prime=p,
                coset_index=i,
                rep=format_cycles(rep),
                count=count,
                size=normal.order,
            )
        )
    return rows

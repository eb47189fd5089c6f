"""
Conjuntos Ω_p(g,G) = {y ∈ G : ⟨g,y⟩ é p-grupo}, probabilidade de pares P_p(G,G),
interseção de Baer, pesos ω_p(g,G) e a identidade exata de quocientes por N abeliano p'.

Um p-subgrupo finito está contido em algum Sylow, então Ω_p(g,G) é a união dos Sylows que contêm g
(método "cover"); o método "direct" constrói ⟨g,y⟩ para cada y e serve de conferência.
"""

import logging
from fractions import Fraction
from typing import NamedTuple, Sequence

from src.census.sylow import centralizer, sylow_subgroups
from src.config import DEFAULT_PAIR_CAP
from src.errors import CapExceededError, GroupComputationError, InvalidParameterError, NotInGroupError
from src.permcore import GroupHandle, Permutation, build_chain, format_cycles, is_p_element, is_prime_power_of
from src.quotients import ChiefSeriesStep, QuotientMap, chief_series, o_p
from src.reports import PairReport

logger = logging.getLogger(__name__)

PAIR_METHODS = ("cover", "direct")


def _check_cap(group: GroupHandle, cap: int) -> None:
    if group.order > cap:
        raise CapExceededError("pares", group.order, cap)


def generates_p_group(g: Permutation, y: Permutation, p: int) -> bool:
    if not is_p_element(y, p):
        return False
    return is_prime_power_of(build_chain([g, y]).order, p)


def omega_set(group: GroupHandle, g: Permutation, p: int, *, cap: int = DEFAULT_PAIR_CAP, method: str = "cover") -> set[Permutation]:
    """Os elementos de Ω_p(g,G); vazio se g não é p-elemento."""
    if method not in PAIR_METHODS:
        raise InvalidParameterError(f"método desconhecido: {method}")
    _check_cap(group, cap)
    if not group.contains(g):
        raise NotInGroupError(f"elemento fora de {group.label}")
    if not is_p_element(g, p):
        return set()
    if group.order % p:
        return {group.identity()}
    if method == "direct":
        return {y for y in group.elements() if generates_p_group(g, y, p)}
    out: set[Permutation] = set()
    for P in sylow_subgroups(group, p):
        if g in P:
            out |= P
    return out


def omega_pair_set(
    group: GroupHandle, g: Permutation, p: int, *, cap: int = DEFAULT_PAIR_CAP, method: str = "cover"
) -> PairReport:
    """|Ω_p(g,G)| e P_p(g,G) = |Ω_p(g,G)|/|G|."""
    count = len(omega_set(group, g, p, cap=cap, method=method))
    return PairReport(group=group.label, prime=p, element=format_cycles(g), count=count, total=group.order)


def p_elements(group: GroupHandle, p: int) -> list[Permutation]:
    return [x for x in group.elements() if is_p_element(x, p)]


def pair_probability(group: GroupHandle, p: int, *, cap: int = DEFAULT_PAIR_CAP, method: str = "cover") -> PairReport:
    """P_p(G,G) = Σ_{g ∈ Ω_p(G)} |Ω_p(g,G)| / |G|²."""
    _check_cap(group, cap)
    total = sum(len(omega_set(group, g, p, cap=cap, method=method)) for g in p_elements(group, p))
    logger.info("P_%s(%s,%s): %s pares de %s", p, group.label, group.label, total, group.order**2)
    return PairReport(group=group.label, prime=p, element=None, count=total, total=group.order**2)


def baer_intersection(group: GroupHandle, p: int, *, cap: int = DEFAULT_PAIR_CAP) -> tuple[GroupHandle, Fraction]:
    """
    ∩_{g ∈ Ω_p(G)} Ω_p(g,G), certificada igual a O_p(G) elemento a elemento;
    devolve (O_p(G), |O_p(G)|/|G|).
    """
    _check_cap(group, cap)
    inter: set[Permutation] | None = None
    for g in p_elements(group, p):
        current = omega_set(group, g, p, cap=cap)
        inter = current if inter is None else inter & current
    op = o_p(group, p)
    expected = set(op.elements())
    if inter != expected:
        raise GroupComputationError(
            f"interseção de Baer com {len(inter or ())} elementos difere de O_{p} com {op.order}"
        )
    return op, Fraction(op.order, group.order)


def omega_weight(
    group: GroupHandle, g: Permutation, p: int, *, series: Sequence[ChiefSeriesStep] | None = None
) -> int:
    """ω_p(g,G): fatores principais abelianos de ordem prima com p que g não centraliza."""
    if not is_p_element(g, p):
        raise InvalidParameterError("ω_p só é definido para p-elementos")
    if series is None:
        series = chief_series(group)
    return sum(
        1 for step in series if step.is_abelian and step.is_p_coprime(p) and not step.centralized_by(g)
    )


class QuotientPairIdentity(NamedTuple):
    """Os dois lados de P_p(g,G)/P_p(gN,G/N) = (1/(|N||Ω_p(gN,G/N)|)) Σ |C_N(g)|/|C_N(g) ∩ C_N(x)|."""

    ratio: Fraction
    formula: Fraction
    p_g: Fraction
    p_gn: Fraction
    centralizes: bool


def quotient_pair_identity(
    group: GroupHandle, quotient: QuotientMap, g: Permutation, p: int, *, cap: int = DEFAULT_PAIR_CAP
) -> QuotientPairIdentity:
    """
    Calcula os dois lados da identidade para N = quotient.kernel abeliano de ordem prima com p.
    Para cada classe xN ∈ Ω_p(gN,G/N), x é o primeiro elemento de xN com ⟨g,x⟩ p-grupo.
    """
    kernel = quotient.kernel
    if kernel.order % p == 0:
        raise InvalidParameterError(f"{p} divide |N| = {kernel.order}")
    omega_g = omega_set(group, g, p, cap=cap)
    p_g = Fraction(len(omega_g), group.order)
    image = quotient.image
    g_bar = quotient.project(g)
    omega_bar = omega_set(image, g_bar, p, cap=cap)
    p_gn = Fraction(len(omega_bar), image.order)

    c_n_g = centralizer(kernel, g) if kernel.order > 1 else kernel
    c_g = set(c_n_g.elements())
    total = Fraction(0)
    for x_bar in omega_bar:
        rep = quotient.lift(x_bar)
        x = next((rep * n for n in kernel.elements() if (rep * n) in omega_g), None)
        if x is None:
            raise GroupComputationError("classe de Ω_p(gN,G/N) sem elemento de Ω_p(g,G)")
        both = sum(1 for c in c_g if c * x == x * c)
        total += Fraction(len(c_g), both)
    formula = total / (kernel.order * len(omega_bar))
    return QuotientPairIdentity(
        ratio=p_g / p_gn,
        formula=formula,
        p_g=p_g,
        p_gn=p_gn,
        centralizes=c_n_g.order == kernel.order,
    )

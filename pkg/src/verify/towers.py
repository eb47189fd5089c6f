"""Avaliação das torres G_t, Y_t, X_u e metacíclica: forma fechada, pernas exatas por enumeração e limites."""

import logging
from fractions import Fraction
from typing import Callable

from src.census import p_census
from src.classical import m10
from src.config import DEFAULT_ENUM_CAP
from src.constructions import (
    TowerSpec,
    gt_tower,
    metacyclic_affine,
    metacyclic_tower,
    subdirect_X_t,
    wreath_Y_t,
    xu_tower,
    yt_tower,
)
from src.errors import CapExceededError, InvalidParameterError
from src.permcore import GroupHandle
from src.reports import NamedValue, TowerEvaluation, VerificationOutcome, fraction_str

logger = logging.getLogger(__name__)

TOWER_FAMILIES = ("Gt", "Yt", "Xu", "metacyclic")
# profundidade padrão da perna em forma fechada
DEFAULT_DEPTHS = {"Gt": 30, "Yt": 10, "Xu": 30, "metacyclic": 6}
GT_TOLERANCE = Fraction(1, 10**6)


def tower_spec(family: str, *, u: int = 1, q: int = 3, p: int = 2, n: int = 1) -> TowerSpec:
    if family == "Gt":
        return gt_tower()
    if family == "Yt":
        return yt_tower()
    if family == "Xu":
        return xu_tower(u)
    if family == "metacyclic":
        return metacyclic_tower(q, p, n)
    raise InvalidParameterError(f"família de torre desconhecida: {family}")


def _xt(t: int) -> GroupHandle:
    x_group, socle = m10()
    return subdirect_X_t(x_group, socle, t)


def _yt(t: int) -> GroupHandle:
    x_group, socle = m10()
    a = next(g for g in x_group.generators if not socle.contains(g))
    return wreath_Y_t(socle, a, t)


def _exact_builder(spec: TowerSpec) -> tuple[Callable[[int], GroupHandle], int] | None:
    """Construtor do grupo da profundidade d e o primo do censo; None se a família não tem perna exata."""
    if spec.family == "Gt":
        return _xt, 2
    if spec.family == "Yt":
        return _yt, 2
    if spec.family == "metacyclic":
        q, p, n = (spec.parameters[k] for k in ("q", "p", "n"))
        return (lambda m: metacyclic_affine(q, m, p, n)), p
    return None


def _holds(relation: str, exact: Fraction, closed: Fraction) -> bool:
    return exact == closed if relation == "=" else exact >= closed


def _monotone(values: list[Fraction], direction: str) -> bool:
    pairs = list(zip(values, values[1:]))
    if direction == "increasing":
        return all(a < b for a, b in pairs)
    return all(a > b for a, b in pairs)


def _bounded(spec: TowerSpec, values: list[Fraction]) -> bool:
    """A sequência fica do lado certo do limite (ou do piso, para X_u)."""
    if spec.limit is not None:
        if spec.direction == "increasing":
            return all(v < spec.limit for v in values)
        return all(v > spec.limit for v in values)
    floor = spec.parameters.get("floor")
    return floor is None or all(v >= Fraction(floor) for v in values)


def verify_towers(
    family: str,
    depth: int | None = None,
    *,
    u: int = 1,
    q: int = 3,
    p: int = 2,
    n: int = 1,
    cap: int = DEFAULT_ENUM_CAP,
    exact: bool = True,
) -> TowerEvaluation:
    """
    Forma fechada de min_depth até depth; onde a profundidade cabe no alcance exato,
    o censo por enumeração completa é comparado com a forma fechada (igualdade, ou >= para Y_t).
    """
    spec = tower_spec(family, u=u, q=q, p=p, n=n)
    depth = DEFAULT_DEPTHS[family] if depth is None else depth
    if depth < spec.min_depth:
        raise InvalidParameterError(f"{family}: profundidade {depth} < {spec.min_depth}")
    depths = list(range(spec.min_depth, depth + 1))
    closed = [spec.closed_form(d) for d in depths]

    exact_depths: list[int] = []
    exact_values: list[Fraction] = []
    agrees = True
    builder = _exact_builder(spec)
    if exact and builder is not None:
        build, prime = builder
        for d in depths:
            if d > spec.exact_reach:
                continue
            try:
                group = build(d)
                report = p_census(group, prime, cap=cap, method="enumerate")
            except CapExceededError as e:
                logger.warning("%s: profundidade %s fora do alcance exato (%s)", family, d, e)
                continue
            value = report.probability
            exact_depths.append(d)
            exact_values.append(value)
            if not _holds(spec.relation, value, spec.closed_form(d)):
                logger.warning("%s em t=%s: censo %s vs forma fechada %s", family, d, value, spec.closed_form(d))
                agrees = False

    agrees = agrees and _bounded(spec, closed)
    monotone = _monotone(closed, spec.direction)
    logger.info("torre %s até %s: %s pernas exatas, monótona=%s", family, depth, len(exact_depths), monotone)
    return TowerEvaluation(
        family=family,
        params=dict(spec.parameters),
        depths=depths,
        closed_form=[fraction_str(v) for v in closed],
        exact_depths=exact_depths,
        exact_values=[fraction_str(v) for v in exact_values],
        relation=spec.relation,
        limit=fraction_str(spec.limit) if spec.limit is not None else None,
        monotone=monotone,
        agrees=agrees,
    )


def tower_outcome(evaluation: TowerEvaluation) -> VerificationOutcome:
    """Converte a avaliação em resultado de verificação; G_t também exige |P − 1/2| < 10^-6 na última profundidade."""
    computed = [NamedValue.of(f"exact[{d}]", v) for d, v in zip(evaluation.exact_depths, evaluation.exact_values)]
    last = Fraction(evaluation.closed_form[-1])
    computed.append(NamedValue.of(f"closed[{evaluation.depths[-1]}]", last))
    computed.append(NamedValue.of("monotone", evaluation.monotone))
    passed = evaluation.monotone and evaluation.agrees
    relation = f"exact {evaluation.relation} closed form; monotone"
    if evaluation.family == "Gt":
        gap = last - Fraction(evaluation.limit)
        computed.append(NamedValue.of("P - 1/2", gap))
        passed = passed and abs(gap) < GT_TOLERANCE
        relation += "; |P_2(G_T) - 1/2| < 1/10^6"
    return VerificationOutcome(
        claim=f"tower:{evaluation.family}",
        params={"depth": evaluation.depths[-1], **evaluation.params},
        computed=computed,
        relation=relation,
        passed=passed,
    )

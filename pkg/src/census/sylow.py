"""Subgrupos de Sylow por subida de normalizadores, normalizadores e centralizadores por varredura."""

import logging
from functools import lru_cache

from src.census.counts import p_census
from src.config import DEFAULT_ENUM_CAP, DEFAULT_NORMALIZER_CAP
from src.errors import CapExceededError, InvalidParameterError
from src.permcore import (
    GroupHandle,
    Permutation,
    build_chain,
    is_p_element,
    is_prime_power_of,
    require_prime,
    trivial_group,
)
from src.reports import NamedValue, SylowReport, VerificationOutcome

logger = logging.getLogger(__name__)


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def _normalizes(g: Permutation, sub: GroupHandle) -> bool:
    g_inv = ~g
    return all(sub.contains(g_inv * h * g) for h in sub.generators)


def _scan_subgroup(group: GroupHandle, predicate, cap: int, label: str) -> GroupHandle:
    """Subgrupo {g ∈ G : predicate(g)} (o predicado deve definir um subgrupo)."""
    if group.order > cap:
        raise CapExceededError("varredura", group.order, cap)
    gens: list[Permutation] = []
    found = trivial_group(group.degree, label)
    for g in group.elements(cap):
        if found.contains(g) or not predicate(g):
            continue
        gens.append(g)
        found = build_chain(gens, label=label)
        if found.order == group.order:
            break
    return found


def normalizer(group: GroupHandle, sub: GroupHandle, *, cap: int = DEFAULT_NORMALIZER_CAP) -> GroupHandle:
    """N_G(H) por varredura completa de G."""
    return _scan_subgroup(group, lambda g: _normalizes(g, sub), cap, f"N({sub.label})")


def centralizer(group: GroupHandle, x: Permutation, *, cap: int = DEFAULT_NORMALIZER_CAP) -> GroupHandle:
    """C_G(x) por varredura completa de G."""
    return _scan_subgroup(group, lambda g: g * x == x * g, cap, "C(x)")


def subgroup_centralizer(group: GroupHandle, sub: GroupHandle, *, cap: int = DEFAULT_NORMALIZER_CAP) -> GroupHandle:
    gens = sub.generators
    return _scan_subgroup(group, lambda g: all(g * h == h * g for h in gens), cap, f"C({sub.label})")


@lru_cache(maxsize=128)
def sylow(group: GroupHandle, p: int, *, cap: int = DEFAULT_NORMALIZER_CAP) -> GroupHandle:
    """
    p-subgrupo de Sylow por subida determinística: partindo de P = 1, acrescenta o primeiro
    p-elemento (na ordem de enumeração) de N_G(P)∖P cuja junção com P é p-grupo.
    """
    require_prime(p)
    if group.order % p:
        raise InvalidParameterError(f"{p} não divide |{group.label}| = {group.order}")
    if group.order > cap:
        raise CapExceededError("Sylow", group.order, cap)
    target = p_part(group.order, p)
    label = f"Syl_{p}({group.label})"
    gens: list[Permutation] = []
    current = trivial_group(group.degree, label)
    while current.order < target:
        for y in group.elements(cap):
            if current.contains(y) or not is_p_element(y, p):
                continue
            if gens and not _normalizes(y, current):
                continue
            candidate = build_chain([*gens, y], label=label)
            if is_prime_power_of(candidate.order, p):
                gens.append(y)
                current = candidate
                break
        else:
            raise InvalidParameterError(f"subida de Sylow travou em ordem {current.order}")
    logger.debug("%s: ordem %s", label, current.order)
    return current


def sylow_subgroups(group: GroupHandle, p: int, *, cap: int = DEFAULT_ENUM_CAP) -> list[frozenset[Permutation]]:
    """Todos os p-subgrupos de Sylow, como conjuntos de elementos (órbita de P por conjugação)."""
    return list(_sylow_cover(group, p, cap))


@lru_cache(maxsize=64)
def _sylow_cover(group: GroupHandle, p: int, cap: int) -> tuple[frozenset[Permutation], ...]:
    base = frozenset(sylow(group, p).elements(cap))
    orbit = [base]
    seen = {base}
    for current in orbit:
        for g in group.generators:
            g_inv = ~g
            conj = frozenset(g_inv * x * g for x in current)
            if conj not in seen:
                seen.add(conj)
                orbit.append(conj)
    logger.debug("%s subgrupos de Sylow-%s em %s", len(orbit), p, group.label)
    return tuple(orbit)


def sylow_report(group: GroupHandle, p: int, *, cap: int = DEFAULT_NORMALIZER_CAP) -> SylowReport:
    P = sylow(group, p, cap=cap)
    N = normalizer(group, P, cap=cap)
    return SylowReport(
        group=group.label,
        prime=p,
        order=group.order,
        sylow_order=P.order,
        normalizer_order=N.order,
    )


def sylow_bound_check(group: GroupHandle, p: int, *, cap: int = DEFAULT_NORMALIZER_CAP) -> VerificationOutcome:
    """P_p(G) <= |P|/|N_G(P)| (cada p-elemento está em algum dos n_p Sylows)."""
    census = p_census(group, p, cap=cap)
    report = sylow_report(group, p, cap=cap)
    holds = census.probability <= report.bound
    return VerificationOutcome(
        claim="sylow_bound",
        params={"group": group.label, "p": p},
        computed=[
            NamedValue.of("P_p(G)", census.probability),
            NamedValue.of("|P|", report.sylow_order),
            NamedValue.of("|N_G(P)|", report.normalizer_order),
            NamedValue.of("|P|/|N_G(P)|", report.bound),
        ],
        relation="P_p(G) <= |P|/|N_G(P)|",
        passed=holds,
    )

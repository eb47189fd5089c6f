"""
Estrutura normal: fechos normais, quocientes pela ação nas classes laterais,
série derivada, série principal (chief series) e O_p(G).
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from sympy import factorint, isprime

from src.config import DEFAULT_ENUM_CAP, DEFAULT_QUOTIENT_CAP
from src.errors import CapExceededError, NotInGroupError, NotNormalError
from src.permcore import (
    GroupHandle,
    Permutation,
    build_chain,
    commutator,
    is_prime_power_of,
    order_of,
    require_prime,
    subgroup_from_elements,
    trivial_group,
)

logger = logging.getLogger(__name__)

# ordens de grupos simples não abelianos pequenos; fatores característicamente simples são S^k
SIMPLE_ORDERS = (60, 168, 360, 504, 660, 1092, 2448, 9828, 20160, 25920)


def _conj(x: Permutation, g: Permutation) -> Permutation:
    return ~g * x * g


def is_normal(group: GroupHandle, sub: GroupHandle) -> bool:
    """sub ⊴ group: sub ≤ group e conjugados dos geradores de sub pelos geradores de group estão em sub."""
    if not sub.is_subgroup_of(group):
        return False
    return all(sub.contains(_conj(h, g)) for h in sub.generators for g in group.generators)


def normal_closure(group: GroupHandle, seeds: Sequence[Permutation], *, label: str | None = None) -> GroupHandle:
    """Menor subgrupo normal de group contendo seeds."""
    for s in seeds:
        if not group.contains(s):
            raise NotInGroupError(f"semente fora de {group.label}")
    gens = [s for s in seeds if not s.is_identity()]
    if not gens:
        return trivial_group(group.degree, label)
    closure = build_chain(gens, label=label)
    queue = list(gens)
    while queue:
        h = queue.pop()
        for g in group.generators:
            c = _conj(h, g)
            if not closure.contains(c):
                gens.append(c)
                queue.append(c)
                closure = build_chain(gens, label=label)
    return closure


def intersection(a: GroupHandle, b: GroupHandle, *, cap: int = DEFAULT_ENUM_CAP) -> GroupHandle:
    """A ∩ B pela enumeração do menor dos dois."""
    small, big = (a, b) if a.order <= b.order else (b, a)
    return subgroup_from_elements([x for x in small.elements(cap) if big.contains(x)], a.degree)


def derived_subgroup(group: GroupHandle) -> GroupHandle:
    gens = group.generators
    seeds = [commutator(x, y) for i, x in enumerate(gens) for y in gens[i + 1:]]
    return normal_closure(group, seeds, label=f"[{group.label},{group.label}]")


def derived_series(group: GroupHandle) -> list[GroupHandle]:
    series = [group]
    while series[-1].order > 1:
        nxt = derived_subgroup(series[-1])
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
    return series


def is_solvable(group: GroupHandle) -> bool:
    """A série derivada chega a 1."""
    return derived_series(group)[-1].order == 1


def is_abelian(group: GroupHandle) -> bool:
    gens = group.generators
    return all(x * y == y * x for i, x in enumerate(gens) for y in gens[i + 1:])


def is_perfect(group: GroupHandle) -> bool:
    return derived_subgroup(group).order == group.order


# --- quocientes ---


class QuotientMap:
    """
    G → G/N realizado pela ação de G nas classes laterais à direita de N (grau = |G:N|).
    A classe i tem representante reps[i]; a classe 0 é o próprio N.
    """

    def __init__(self, source: GroupHandle, kernel: GroupHandle, reps: list[Permutation], image: GroupHandle):
        self.source = source
        self.kernel = kernel
        self.reps = reps
        self.image = image
        self._index = {r: i for i, r in enumerate(reps)}

    @property
    def index(self) -> int:
        return len(self.reps)

    def coset_index(self, x: Permutation) -> int:
        return self._index[self.kernel.canonical_coset_rep(x)]

    def project(self, x: Permutation) -> Permutation:
        canon = self.kernel.canonical_coset_rep
        return Permutation(self._index[canon(r * x)] for r in self.reps)

    __call__ = project

    def lift(self, k: Sequence[int]) -> Permutation:
        """Um elemento de G cuja imagem é k (a ação é regular, então k fica determinado por k[0])."""
        return self.reps[k[0]]

    def preimage(self, sub: GroupHandle, *, label: str | None = None) -> GroupHandle:
        gens = list(self.kernel.generators) + [self.lift(k) for k in sub.generators]
        return build_chain(gens, label=label)

    def __repr__(self) -> str:
        return f"QuotientMap({self.source.label} / {self.kernel.label}, índice={self.index})"


def quotient_by(
    group: GroupHandle,
    kernel: GroupHandle,
    *,
    cap: int = DEFAULT_QUOTIENT_CAP,
    check_normal: bool = True,
) -> QuotientMap:
    """G/N pela ação regular nas classes laterais de N; exige N ⊴ G e |G:N| <= cap."""
    if check_normal and not is_normal(group, kernel):
        raise NotNormalError(f"{kernel.label} não é normal em {group.label}")
    index = group.order // kernel.order
    if index > cap:
        raise CapExceededError("índice do quociente", index, cap)
    canon = kernel.canonical_coset_rep
    start = canon(group.identity())
    reps = [start]
    seen = {start: 0}
    for r in reps:
        for s in group.generators:
            c = canon(r * s)
            if c not in seen:
                seen[c] = len(reps)
                reps.append(c)
    if len(reps) != index:
        raise NotNormalError(f"{len(reps)} classes laterais encontradas, esperado {index}")
    if index == 1:
        image = trivial_group(1, f"{group.label}/{kernel.label}")
    else:
        image_gens = [Permutation(seen[canon(r * s)] for r in reps) for s in group.generators]
        image = build_chain(image_gens, label=f"{group.label}/{kernel.label}")
    if image.order != index:
        raise NotNormalError(f"imagem de ordem {image.order} para índice {index}")
    logger.debug("quociente %s/%s: índice %s", group.label, kernel.label, index)
    return QuotientMap(group, kernel, reps, image)


# --- classes de conjugação e série principal ---


def conjugacy_class(group: GroupHandle, x: Permutation) -> set[Permutation]:
    orbit = {x}
    queue = [x]
    for y in queue:
        for g in group.generators:
            z = _conj(y, g)
            if z not in orbit:
                orbit.add(z)
                queue.append(z)
    return orbit


def conjugacy_class_reps(group: GroupHandle, *, cap: int = DEFAULT_ENUM_CAP) -> Iterator[tuple[Permutation, int]]:
    """(representante, tamanho) de cada classe, na ordem de enumeração do primeiro elemento."""
    seen: set[Permutation] = set()
    for x in group.elements(cap):
        if x in seen:
            continue
        cls = conjugacy_class(group, x)
        seen |= cls
        yield x, len(cls)


def minimal_normal_subgroup(group: GroupHandle, *, cap: int = DEFAULT_ENUM_CAP) -> GroupHandle:
    """
    Subgrupo normal mínimo: o menor fecho normal de um elemento de ordem prima.
    Todo normal mínimo é fecho de um tal elemento, então o de menor ordem é mínimo.
    """
    best: GroupHandle | None = None
    for x, _ in conjugacy_class_reps(group, cap=cap):
        if not isprime(order_of(x)):
            continue
        closure = normal_closure(group, [x])
        if best is None or closure.order < best.order:
            best = closure
            if isprime(best.order):
                break
    if best is None:
        raise NotNormalError(f"{group.label} é trivial: sem subgrupo normal mínimo")
    return best


@dataclass(frozen=True)
class ChiefSeriesStep:
    """Fator principal upper/lower, com lower ⊴ G e nenhum normal de G estritamente entre os dois."""

    upper: GroupHandle
    lower: GroupHandle
    factor_order: int
    is_abelian: bool

    def is_p_coprime(self, p: int) -> bool:
        return self.factor_order % p != 0

    def centralized_by(self, g: Permutation) -> bool:
        """g centraliza upper/lower: [m, g] ∈ lower para todo gerador m de upper."""
        return all(self.lower.contains(commutator(m, g)) for m in self.upper.generators)


def chief_series(
    group: GroupHandle,
    *,
    quotient_cap: int = DEFAULT_QUOTIENT_CAP,
    enum_cap: int = 10**6,
) -> list[ChiefSeriesStep]:
    """
    Série principal de G até 1, do topo para a base. Construída de baixo para cima:
    L_0 = 1 e L_{i+1} = pré-imagem de um normal mínimo de G/L_i.
    """
    if group.order > enum_cap:
        raise CapExceededError("série principal", group.order, enum_cap)
    lower = trivial_group(group.degree, "1")
    steps: list[ChiefSeriesStep] = []
    while lower.order < group.order:
        if lower.order == 1:
            minimal = minimal_normal_subgroup(group, cap=enum_cap)
            upper = minimal
            factor_abelian = is_abelian(minimal)
        else:
            quotient = quotient_by(group, lower, cap=quotient_cap, check_normal=False)
            minimal = minimal_normal_subgroup(quotient.image, cap=enum_cap)
            upper = quotient.preimage(minimal)
            factor_abelian = is_abelian(minimal)
        steps.append(ChiefSeriesStep(upper, lower, upper.order // lower.order, factor_abelian))
        logger.debug("fator principal de ordem %s (abeliano=%s)", steps[-1].factor_order, factor_abelian)
        lower = upper
    steps.reverse()
    return steps


def non_abelian_factor_count(series: Sequence[ChiefSeriesStep]) -> int:
    return sum(1 for step in series if not step.is_abelian)


def is_characteristically_simple_order(order: int) -> bool:
    """Ordem é p^k ou |S|^k para S simples da tabela."""
    if len(factorint(order)) == 1:
        return True
    return any(is_prime_power_of(order, s) for s in SIMPLE_ORDERS)


# --- O_p ---


def normal_core(group: GroupHandle, sub: GroupHandle) -> GroupHandle:
    """Interseção de todos os conjugados de sub: iteramos H ← H ∩ H^g até estabilizar."""
    core = sub
    changed = True
    while changed and core.order > 1:
        changed = False
        for g in group.generators:
            conj = build_chain([_conj(h, g) for h in core.generators])
            if not conj.same_group(core):
                core = intersection(core, conj)
                changed = True
                if core.order == 1:
                    break
    return core


def o_p(group: GroupHandle, p: int) -> GroupHandle:
    """O_p(G): núcleo normal de um p-subgrupo de Sylow; trivial quando p ∤ |G|."""
    from src.census.sylow import sylow

    require_prime(p)
    if group.order % p:
        return trivial_group(group.degree, f"O_{p}({group.label})")
    core = normal_core(group, sylow(group, p))
    return build_chain(list(core.generators), label=f"O_{p}({group.label})")

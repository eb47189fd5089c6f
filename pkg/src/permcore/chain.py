"""
Cadeia de estabilizadores (Schreier–Sims determinístico) e o GroupHandle usado por todos os módulos.

Convenção: ação à direita. Em cada nível i, transversal[γ] = u com base[i]^u = γ, e
todo elemento do grupo se escreve de forma única como u_k ⋯ u_2 u_1 (u_i do nível i−1).
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Iterator, Sequence

from src.config import DEFAULT_ENUM_CAP
from src.errors import CapExceededError, DegreeMismatchError
from src.permcore.permutation import Permutation, _raw, identity, inverse

logger = logging.getLogger(__name__)


@dataclass
class _Level:
    point: int
    gens: list[Permutation]
    transversal: dict[int, Permutation] = field(default_factory=dict)
    inverses: dict[int, Permutation] = field(default_factory=dict)

    def rebuild(self, degree: int) -> None:
        trans = {self.point: identity(degree)}
        queue = [self.point]
        for b in queue:
            u = trans[b]
            for s in self.gens:
                c = s[b]
                if c not in trans:
                    trans[c] = u * s
                    queue.append(c)
        self.transversal = trans
        self.inverses = {c: inverse(u) for c, u in trans.items()}


class GroupHandle:
    """
    Grupo de permutações com cadeia de estabilizadores pronta.
    Imutável depois de construído; pode ser compartilhado entre workers só para leitura.
    `structure` guarda metadados de construção (potência direta/subdireta) usados pelo censo.
    """

    __slots__ = ("degree", "generators", "label", "structure", "_levels", "_order")

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        levels: list[_Level],
        *,
        label: str | None = None,
        structure: Any = None,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.label = label or f"<grupo de grau {degree}>"
        self.structure = structure
        self._levels = levels
        order = 1
        for level in levels:
            order *= len(level.transversal)
        self._order = order

    @property
    def order(self) -> int:
        return self._order

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.point for level in self._levels)

    @property
    def transversals(self) -> tuple[dict[int, Permutation], ...]:
        return tuple(level.transversal for level in self._levels)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        seen: dict[Permutation, None] = {}
        for level in self._levels:
            for s in level.gens:
                seen.setdefault(s, None)
        return tuple(seen)

    def identity(self) -> Permutation:
        return identity(self.degree)

    def sift(self, p: Sequence[int]) -> tuple[Permutation, int]:
        """Peneira p pela cadeia; devolve (resíduo, nível onde parou)."""
        g = p if isinstance(p, Permutation) else _raw(p)
        for depth, level in enumerate(self._levels):
            c = g[level.point]
            u_inv = level.inverses.get(c)
            if u_inv is None:
                return g, depth
            g = g * u_inv
        return g, len(self._levels)

    def contains(self, p: Sequence[int]) -> bool:
        if len(p) != self.degree:
            raise DegreeMismatchError(f"permutação de grau {len(p)} em grupo de grau {self.degree}")
        residue, depth = self.sift(p)
        return depth == len(self._levels) and residue.is_identity()

    __contains__ = contains

    def canonical_coset_rep(self, x: Permutation) -> Permutation:
        """
        Representante canônico da classe lateral à direita self·x: o elemento de self·x
        cujas imagens dos pontos da base são lexicograficamente mínimas.
        """
        g = x
        for level in self._levels:
            best = min(level.transversal, key=g.__getitem__)
            g = level.transversal[best] * g
        return g

    def is_subgroup_of(self, other: "GroupHandle") -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other: "GroupHandle") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Permutation]:
        """Gera cada elemento exatamente uma vez (produtos de transversais)."""
        if self._order > cap:
            raise CapExceededError("enumeração", self._order, cap)
        levels = [list(level.transversal.values()) for level in self._levels]
        if not levels:
            yield self.identity()
            return

        def walk(depth: int, prefix: Permutation) -> Iterator[Permutation]:
            if depth == 0:
                for u in levels[0]:
                    yield prefix * u
                return
            for u in levels[depth]:
                yield from walk(depth - 1, prefix * u)

        yield from walk(len(levels) - 1, self.identity())

    def random_element(self, rng: random.Random) -> Permutation:
        """Amostra exatamente uniforme: um representante uniforme por nível."""
        g = self.identity()
        for level in reversed(self._levels):
            points = list(level.transversal)
            g = g * level.transversal[points[rng.randrange(len(points))]]
        return g

    def __repr__(self) -> str:
        return f"GroupHandle({self.label}, order={self._order}, degree={self.degree})"


def _first_moved(p: Permutation) -> int | None:
    for i, j in enumerate(p):
        if i != j:
            return i
    return None


def build_chain(
    generators: Sequence[Sequence[int]],
    *,
    label: str | None = None,
    structure: Any = None,
    base_prefix: Sequence[int] = (),
) -> GroupHandle:
    """
    Schreier–Sims determinístico: testa todos os geradores de Schreier de cada nível
    (do mais profundo ao primeiro) e recomeça no nível onde um resíduo não trivial aparece.
    """
    if not generators:
        raise ValueError("lista de geradores vazia")
    degree = len(generators[0])
    gens: list[Permutation] = []
    for g in generators:
        if len(g) != degree:
            raise DegreeMismatchError(f"geradores de graus {degree} e {len(g)}")
        p = g if isinstance(g, Permutation) else Permutation(g)
        if not p.is_identity():
            gens.append(p)

    base: list[int] = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    levels = []
    for i, point in enumerate(base):
        level_gens = [g for g in gens if all(g[b] == b for b in base[:i])]
        levels.append(_Level(point, level_gens))
        levels[-1].rebuild(degree)

    def sift_from(g: Permutation, start: int) -> tuple[Permutation, int]:
        for depth in range(start, len(levels)):
            level = levels[depth]
            u_inv = level.inverses.get(g[level.point])
            if u_inv is None:
                return g, depth
            g = g * u_inv
        return g, len(levels)

    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        restart = None
        for b, u in list(level.transversal.items()):
            for s in level.gens:
                c = s[b]
                schreier = u * s * level.inverses[c]
                if schreier.is_identity():
                    continue
                residue, depth = sift_from(schreier, i + 1)
                if depth == len(levels):
                    if residue.is_identity():
                        continue
                    levels.append(_Level(_first_moved(residue), []))
                for j in range(i + 1, depth + 1):
                    levels[j].gens.append(residue)
                    levels[j].rebuild(degree)
                restart = depth
                break
            if restart is not None:
                break
        if restart is None:
            i -= 1
        else:
            i = restart

    # níveis com órbita trivial não contribuem
    levels = [lv for lv in levels if len(lv.transversal) > 1]
    handle = GroupHandle(degree, gens or [identity(degree)], levels, label=label, structure=structure)
    logger.debug("cadeia construída: %s ordem=%s base=%s", handle.label, handle.order, handle.base)
    return handle


def trivial_group(degree: int, label: str | None = None) -> GroupHandle:
    return build_chain([identity(degree)], label=label or "1")


def subgroup_from_elements(
    elements: Sequence[Permutation], degree: int, *, label: str | None = None
) -> GroupHandle:
    """Subgrupo gerado por uma coleção de elementos, acrescentando só os que ainda não pertencem."""
    handle = trivial_group(degree, label)
    gens: list[Permutation] = []
    for x in elements:
        if not handle.contains(x):
            gens.append(x)
            handle = build_chain(gens, label=label)
    return handle

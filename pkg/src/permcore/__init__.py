"""Aritmética de permutações e cadeias de estabilizadores."""

import random
from typing import Iterator

from src.permcore.chain import GroupHandle, build_chain, subgroup_from_elements, trivial_group
from src.permcore.permutation import (
    Permutation,
    commutator,
    compose,
    conjugate,
    cycle_lengths,
    format_cycles,
    from_cycles,
    identity,
    inverse,
    is_p_element,
    is_prime_power_of,
    order_divides,
    order_of,
    parse_cycles,
    power,
    require_prime,
)


def contains(group: GroupHandle, p: Permutation) -> bool:
    return group.contains(p)


def enumerate_elements(group: GroupHandle, cap: int | None = None) -> Iterator[Permutation]:
    return group.elements() if cap is None else group.elements(cap)


def uniform_sample(group: GroupHandle, rng: random.Random) -> Permutation:
    return group.random_element(rng)


__all__ = [
    "GroupHandle",
    "Permutation",
    "build_chain",
    "commutator",
    "compose",
    "conjugate",
    "contains",
    "cycle_lengths",
    "enumerate_elements",
    "format_cycles",
    "from_cycles",
    "identity",
    "inverse",
    "is_p_element",
    "is_prime_power_of",
    "order_divides",
    "order_of",
    "parse_cycles",
    "power",
    "require_prime",
    "subgroup_from_elements",
    "trivial_group",
    "uniform_sample",
]

"""
Proporção de p-elementos em S_n, A_n e S_n∖A_n sem enumerar o grupo:
soma de n!/∏(c_j!·j^{c_j}) sobre as partições de n em partes que são potências de p.
"""

from fractions import Fraction
from math import factorial
from typing import Iterator, NamedTuple

from src.errors import InvalidParameterError
from src.permcore import require_prime

MAX_DEGREE = 60


class SnProportion(NamedTuple):
    symmetric: Fraction
    alternating: Fraction
    odd: Fraction


def _power_parts(n: int, p: int) -> list[int]:
    parts = []
    value = 1
    while value <= n:
        parts.append(value)
        value *= p
    return parts[::-1]


def power_partitions(n: int, p: int) -> Iterator[dict[int, int]]:
    """Partições de n em partes p^k, como {parte: multiplicidade}."""
    parts = _power_parts(n, p)

    def walk(remaining: int, index: int, acc: dict[int, int]) -> Iterator[dict[int, int]]:
        if remaining == 0:
            yield dict(acc)
            return
        if index == len(parts):
            return
        part = parts[index]
        for mult in range(remaining // part, -1, -1):
            if mult:
                acc[part] = mult
            yield from walk(remaining - mult * part, index + 1, acc)
            acc.pop(part, None)

    yield from walk(n, 0, {})


def class_size(n: int, cycle_type: dict[int, int]) -> int:
    denom = 1
    for length, mult in cycle_type.items():
        denom *= factorial(mult) * length**mult
    return factorial(n) // denom


def sn_p_counts(n: int, p: int) -> tuple[int, int]:
    """(pares, ímpares): quantos p-elementos de S_n são permutações pares e ímpares."""
    require_prime(p)
    if not 2 <= n <= MAX_DEGREE:
        raise InvalidParameterError(f"n = {n} fora de [2, {MAX_DEGREE}]")
    even = odd = 0
    for cycle_type in power_partitions(n, p):
        size = class_size(n, cycle_type)
        if sum((length - 1) * mult for length, mult in cycle_type.items()) % 2:
            odd += size
        else:
            even += size
    return even, odd


def sn_p_proportion(n: int, p: int) -> SnProportion:
    even, odd = sn_p_counts(n, p)
    order = factorial(n)
    half = order // 2
    return SnProportion(Fraction(even + odd, order), Fraction(even, half), Fraction(odd, half))


def sn_two_proportion(n: int) -> SnProportion:
    """Proporções exatas de 2-elementos em S_n, A_n e S_n∖A_n."""
    return sn_p_proportion(n, 2)

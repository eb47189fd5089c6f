"""Permutações de {0,…,n−1} como tuplas imutáveis de imagens (ação à direita: p*q aplica p e depois q)."""

import logging
import math
import re
from functools import lru_cache, reduce
from typing import Iterable, Sequence

from sympy import isprime

from src.errors import DegreeMismatchError, NotPrimeError

logger = logging.getLogger(__name__)

_new = tuple.__new__

CYCLE_RE = re.compile(r"\(\s*(\d+(?:[\s,]+\d+)*)?\s*\)")


class Permutation(tuple):
    """
    Bijeção de {0,…,degree−1}; a tupla guarda as imagens (self[i] = imagem de i).
    Produto à direita: (p * q)[i] = q[p[i]].
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"não é uma permutação: {images!r}")
        if not images:
            raise ValueError("grau deve ser positivo")
        return _new(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other) != len(self):
            raise DegreeMismatchError(f"graus {len(self)} e {len(other)}")
        return _new(Permutation, map(other.__getitem__, self))

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, exponent: int) -> "Permutation":
        return power(self, exponent)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Ciclos não triviais, cada um começando no menor ponto."""
        seen = bytearray(len(self))
        out = []
        for start in range(len(self)):
            if seen[start] or self[start] == start:
                continue
            cycle = [start]
            seen[start] = 1
            j = self[start]
            while j != start:
                seen[j] = 1
                cycle.append(j)
                j = self[j]
            out.append(tuple(cycle))
        return out

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)}, degree={len(self)})"


def _raw(images: Iterable[int]) -> Permutation:
    """Construtor sem validação para laços internos (imagens já são bijeção)."""
    return _new(Permutation, images)


def identity(degree: int) -> Permutation:
    return _raw(range(degree))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p seguido de q."""
    return p * q


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return _raw(inv)


def power(p: Permutation, exponent: int) -> Permutation:
    if exponent < 0:
        return power(inverse(p), -exponent)
    result = identity(len(p))
    base = p
    while exponent:
        if exponent & 1:
            result = result * base
        base = base * base
        exponent >>= 1
    return result


def conjugate(p: Permutation, h: Permutation) -> Permutation:
    """p^h = h⁻¹ p h."""
    return inverse(h) * p * h


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """[a,b] = a⁻¹ b⁻¹ a b."""
    return inverse(a) * inverse(b) * a * b


def from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Produto de ciclos (da esquerda para a direita) em grau fixo."""
    result = identity(degree)
    for cycle in cycles:
        if not cycle:
            continue
        images = list(range(degree))
        for a, b in zip(cycle, cycle[1:]):
            images[a] = b
        images[cycle[-1]] = cycle[0]
        result = result * Permutation(images)
    return result


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """
    Lê notação de ciclos, ex.: "(0 1 2)(3 4)" ou "()" para a identidade.
    Sem degree, usa o maior ponto citado + 1.
    """
    stripped = text.strip()
    cycles = []
    pos = 0
    for match in CYCLE_RE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise ValueError(f"não foi possível ler a permutação {text!r}")
        pos = match.end()
        if match.group(1):
            cycles.append([int(x) for x in re.split(r"[\s,]+", match.group(1).strip())])
    if stripped[pos:].strip() or not stripped:
        raise ValueError(f"não foi possível ler a permutação {text!r}")
    needed = max((max(c) for c in cycles), default=0) + 1
    degree = needed if degree is None else degree
    if needed > degree:
        raise DegreeMismatchError(f"ponto {needed - 1} fora do grau {degree}")
    for c in cycles:
        if len(set(c)) != len(c):
            raise ValueError(f"ciclo com ponto repetido em {text!r}")
    return from_cycles(degree, cycles)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def cycle_lengths(p: Sequence[int]) -> list[int]:
    """Comprimentos de todos os ciclos (inclui pontos fixos)."""
    seen = bytearray(len(p))
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            length += 1
        lengths.append(length)
    return lengths


def order_of(p: Sequence[int]) -> int:
    """Menor m >= 1 com p^m = identidade: mmc dos comprimentos de ciclo."""
    return reduce(math.lcm, cycle_lengths(p), 1)


@lru_cache(maxsize=None)
def require_prime(prime: int) -> int:
    if not isinstance(prime, int) or not isprime(prime):
        raise NotPrimeError(f"{prime!r} não é primo")
    return prime


@lru_cache(maxsize=None)
def _prime_powers_upto(prime: int, bound: int) -> frozenset[int]:
    powers = set()
    value = 1
    while value <= bound:
        powers.add(value)
        value *= prime
    return frozenset(powers)


def is_prime_power_of(n: int, prime: int) -> bool:
    """n é potência de prime (1 = prime^0)."""
    if n < 1:
        return False
    while n % prime == 0:
        n //= prime
    return n == 1


def is_p_element(p: Sequence[int], prime: int) -> bool:
    """Todo ciclo tem comprimento potência de prime (ordem é p-potência; identidade conta)."""
    require_prime(prime)
    allowed = _prime_powers_upto(prime, len(p))
    seen = bytearray(len(p))
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            length += 1
        if length not in allowed:
            return False
    return True


def order_divides(p: Sequence[int], m: int) -> bool:
    """Todo comprimento de ciclo divide m (equivale a p^m = 1)."""
    return all(m % length == 0 for length in cycle_lengths(p))

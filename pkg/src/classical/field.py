"""
Corpos finitos GF(r^k) sobre sympy.polys.galoistools.

Elementos são codificados como inteiros v = Σ c_i r^i (c_i = coeficiente de x^i do resíduo),
de modo que a ordem 0,1,…,q−1 é a ordem lexicográfica dos coeficientes (do mais alto ao mais baixo).
Multiplicação usa tabelas de logaritmo construídas a partir de um elemento primitivo.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_pow_mod, gf_rem

from src.errors import CapExceededError, InvalidParameterError, NotPrimeError

logger = logging.getLogger(__name__)

FIELD_SIZE_CAP = 2**20


@dataclass(frozen=True)
class FieldSpec:
    """GF(r^k) com módulo mônico irredutível (coeficientes do termo líder para o constante)."""

    r: int
    k: int
    modulus: tuple[int, ...]

    @property
    def characteristic(self) -> int:
        return self.r

    @property
    def size(self) -> int:
        return self.r**self.k

    # conversões inteiro <-> lista de coeficientes (formato galoistools, líder primeiro)
    def to_poly(self, value: int) -> list[int]:
        coeffs = []
        while value:
            value, c = divmod(value, self.r)
            coeffs.append(c)
        return list(reversed(coeffs))

    def from_poly(self, poly) -> int:
        value = 0
        for c in poly:
            value = value * self.r + int(c)
        return value

    @cached_property
    def primitive_element(self) -> int:
        """Menor elemento (na codificação inteira) de ordem multiplicativa q−1."""
        q = self.size
        if q == 2:
            return 1
        primes = list(factorint(q - 1))
        for value in range(2, q):
            poly = self.to_poly(value)
            if all(
                gf_pow_mod(poly, (q - 1) // ell, list(self.modulus), self.r, ZZ) != [1]
                for ell in primes
            ):
                return value
        raise InvalidParameterError(f"GF({q}) sem elemento primitivo: módulo redutível?")

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        q = self.size
        exp = [0] * (q - 1)
        log = [-1] * q
        g = self.to_poly(self.primitive_element)
        current = [1]
        modulus = list(self.modulus)
        for i in range(q - 1):
            v = self.from_poly(current)
            exp[i] = v
            log[v] = i
            current = gf_rem(gf_mul(current, g, self.r, ZZ), modulus, self.r, ZZ)
        return exp, log

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.r
        out, place = 0, 1
        while a or b:
            a, ca = divmod(a, self.r)
            b, cb = divmod(b, self.r)
            out += ((ca + cb) % self.r) * place
            place *= self.r
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.r
        out, place = 0, 1
        while a:
            a, c = divmod(a, self.r)
            out += ((-c) % self.r) * place
            place *= self.r
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return exp[(log[a] + log[b]) % (self.size - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverso de zero")
        exp, log = self._tables
        return exp[(-log[a]) % (self.size - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("potência negativa de zero")
            return 0 if n else 1
        exp, log = self._tables
        return exp[(log[a] * n) % (self.size - 1)]

    def frobenius(self, a: int) -> int:
        """x ↦ x^r."""
        return self.pow(a, self.r)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero não tem ordem multiplicativa")
        n = self.size - 1
        return n // math.gcd(n, self._tables[1][a])

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.size:
            raise InvalidParameterError(f"{value} fora de GF({self.size})")
        return FieldElement(self, value)

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.r}^{self.k}), modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    """Elemento de GF(r^k); value é a codificação inteira dos coeficientes."""

    owner: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coeficientes c_0,…,c_{k−1} do resíduo."""
        out, v = [], self.value
        for _ in range(self.owner.k):
            v, c = divmod(v, self.owner.r)
            out.append(c)
        return tuple(out)

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(self.owner, value)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return self._wrap(self.owner.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self._wrap(self.owner.sub(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return self._wrap(self.owner.neg(self.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return self._wrap(self.owner.mul(self.value, other.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self._wrap(self.owner.div(self.value, other.value))

    def __pow__(self, n: int) -> "FieldElement":
        return self._wrap(self.owner.pow(self.value, n))

    def frobenius(self) -> "FieldElement":
        return self._wrap(self.owner.frobenius(self.value))

    def is_zero(self) -> bool:
        return self.value == 0


def _smallest_irreducible(r: int, k: int) -> tuple[int, ...]:
    for tail in itertools.product(range(r), repeat=k):
        poly = [1, *tail]
        if gf_irreducible_p(poly, r, ZZ):
            return tuple(poly)
    raise InvalidParameterError(f"nenhum irredutível de grau {k} sobre GF({r})")


@lru_cache(maxsize=None)
def field_make(r: int, k: int) -> FieldSpec:
    """GF(r^k) com o menor módulo mônico irredutível em ordem lexicográfica (determinístico)."""
    if not isinstance(r, int) or not isprime(r):
        raise NotPrimeError(f"característica {r!r} não é prima")
    if k < 1:
        raise InvalidParameterError(f"grau {k} deve ser positivo")
    if r**k > FIELD_SIZE_CAP:
        raise CapExceededError("tamanho do corpo", r**k, FIELD_SIZE_CAP)
    spec = FieldSpec(r, k, _smallest_irreducible(r, k))
    logger.debug("corpo construído: %s", spec)
    return spec


def split_prime_power(q: int) -> tuple[int, int]:
    """q = r^k com r primo; InvalidParameterError caso contrário."""
    if q < 2:
        raise InvalidParameterError(f"{q} não é potência de primo")
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidParameterError(f"{q} não é potência de primo")
    ((r, k),) = factors.items()
    return int(r), int(k)

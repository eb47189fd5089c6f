"""
Construtores de PSL(2,q), PGL(2,q), PΣL(2,q), PΓL(2,q), SL(2,q), M10 e das classes laterais externas.
Todos os grupos agem na reta projetiva de q+1 pontos (SL(2,q) nos q²−1 vetores não nulos).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from src.classical.field import FieldSpec, field_make, split_prime_power
from src.classical.projective import frobenius_permutation, mobius_permutation
from src.config import DEFAULT_ENUM_CAP
from src.errors import GroupComputationError, InvalidParameterError, NotInGroupError
from src.permcore import GroupHandle, Permutation, build_chain, is_p_element, order_of

logger = logging.getLogger(__name__)

CLASSICAL_KINDS = ("psl2", "pgl2", "psigmal2", "pgammal2")
COSET_KINDS = ("diag", "frob", "diag_frob")

# candidatos examinados ao escolher o representante de diag_frob
_REP_SEARCH_LIMIT = 4096


@dataclass(frozen=True)
class LabeledCoset:
    """Classe lateral rep·socle dentro de ambient."""

    ambient: GroupHandle
    socle: GroupHandle
    rep: Permutation
    label: str = ""

    @property
    def size(self) -> int:
        return self.socle.order

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Permutation]:
        rep = self.rep
        for s in self.socle.elements(cap):
            yield rep * s


def make_coset(ambient: GroupHandle, socle: GroupHandle, rep: Permutation, label: str = "") -> LabeledCoset:
    if not ambient.contains(rep):
        raise NotInGroupError(f"representante fora de {ambient.label}")
    if not socle.is_subgroup_of(ambient):
        raise NotInGroupError(f"{socle.label} não é subgrupo de {ambient.label}")
    return LabeledCoset(ambient, socle, rep, label or f"{ambient.label}/{socle.label}")


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // (1 if q % 2 == 0 else 2)


def expected_order(kind: str, q: int) -> int:
    _, k = split_prime_power(q)
    base = q * (q * q - 1)
    return {
        "psl2": psl2_order(q),
        "pgl2": base,
        "psigmal2": k * psl2_order(q),
        "pgammal2": k * base,
        "sl2": base,
    }[kind]


def _parse_q(q: int, *, minimum: int = 4) -> FieldSpec:
    if not isinstance(q, int) or q < minimum:
        raise InvalidParameterError(f"q = {q!r} deve ser potência de primo >= {minimum}")
    r, k = split_prime_power(q)
    return field_make(r, k)


def psl2_generators(field: FieldSpec) -> list[Permutation]:
    """Transvecção [[1,1],[0,1]], toro diag(ω,ω⁻¹) e [[0,1],[−1,0]]."""
    w = field.primitive_element
    one = 1
    minus_one = field.neg(one)
    return [
        mobius_permutation(field, one, one, 0, one),
        mobius_permutation(field, w, 0, 0, field.inv(w)),
        mobius_permutation(field, 0, one, minus_one, 0),
    ]


def diagonal_outer(field: FieldSpec) -> Permutation:
    """diag(ω,1): representante de PGL(2,q)∖PSL(2,q) para q ímpar."""
    return mobius_permutation(field, field.primitive_element, 0, 0, 1)


def _certified(gens: list[Permutation], kind: str, q: int, label: str) -> GroupHandle:
    handle = build_chain(gens, label=label)
    expected = expected_order(kind, q)
    if handle.order != expected:
        raise GroupComputationError(f"{label}: ordem {handle.order}, esperado {expected}")
    return handle


@lru_cache(maxsize=None)
def classical_group(kind: str, q: int) -> GroupHandle:
    """
    PSL/PGL/PΣL/PΓL(2,q) na reta projetiva. Ordem certificada contra a fórmula fechada;
    PGL e PΓL exigem q ímpar (para q par coincidem com PSL e PΣL).
    """
    if kind not in CLASSICAL_KINDS:
        raise InvalidParameterError(f"família desconhecida: {kind}")
    field = _parse_q(q)
    if kind in ("pgl2", "pgammal2") and q % 2 == 0:
        raise InvalidParameterError(f"{kind} requer q ímpar (q = {q})")
    gens = psl2_generators(field)
    if kind in ("pgl2", "pgammal2"):
        gens.append(diagonal_outer(field))
    if kind in ("psigmal2", "pgammal2") and field.k > 1:
        gens.append(frobenius_permutation(field))
    handle = _certified(gens, kind, q, f"{kind}:{q}")
    logger.info("%s construído: ordem=%s grau=%s", handle.label, handle.order, handle.degree)
    return handle


@lru_cache(maxsize=None)
def special_linear_group(q: int) -> GroupHandle:
    """SL(2,q) agindo à direita nos q²−1 vetores linha não nulos; (x,y) tem índice x·q + y − 1."""
    field = _parse_q(q, minimum=2)
    size = field.size

    def matrix_permutation(a: int, b: int, c: int, d: int) -> Permutation:
        images = []
        for x in range(size):
            for y in range(size):
                if x == 0 and y == 0:
                    continue
                u = field.add(field.mul(x, a), field.mul(y, c))
                v = field.add(field.mul(x, b), field.mul(y, d))
                images.append(u * size + v - 1)
        return Permutation(images)

    w = field.primitive_element
    minus_one = field.neg(1)
    gens = [
        matrix_permutation(1, 1, 0, 1),
        matrix_permutation(w, 0, 0, field.inv(w)),
        matrix_permutation(0, 1, minus_one, 0),
    ]
    return _certified(gens, "sl2", q, f"sl2:{q}")


@lru_cache(maxsize=None)
def outer_coset(kind: str, q: int) -> LabeledCoset:
    """
    Classe lateral externa de PSL(2,q), q ímpar:
    diag → diag(ω,1)·S em PGL(2,q); frob → φ·S em PΣL(2,q); diag_frob → α·S em ⟨S, diag(ω,1)φ⟩.
    Para diag_frob, α é o primeiro elemento de ordem 4k em diag(ω,1)φ·S (se houver entre os
    primeiros candidatos), senão o próprio diag(ω,1)φ.
    """
    if kind not in COSET_KINDS:
        raise InvalidParameterError(f"tipo de classe lateral desconhecido: {kind}")
    field = _parse_q(q)
    if q % 2 == 0:
        raise InvalidParameterError(f"classes laterais externas exigem q ímpar (q = {q})")
    if kind in ("frob", "diag_frob") and field.k < 2:
        raise InvalidParameterError(f"{kind} exige q = r^k com k >= 2 (q = {q})")
    socle = classical_group("psl2", q)
    label = f"{kind}:{q}"
    if kind == "diag":
        return make_coset(classical_group("pgl2", q), socle, diagonal_outer(field), label)
    if kind == "frob":
        return make_coset(classical_group("psigmal2", q), socle, frobenius_permutation(field), label)

    alpha = diagonal_outer(field) * frobenius_permutation(field)
    ambient = build_chain([*socle.generators, alpha], label=f"<psl2:{q},diag_frob>")
    if ambient.order != field.k * socle.order:
        raise GroupComputationError(f"⟨S, diag·φ⟩ com ordem inesperada {ambient.order}")
    target = 4 * field.k
    rep = alpha
    if order_of(alpha) != target:
        for i, s in enumerate(socle.elements()):
            if i >= _REP_SEARCH_LIMIT:
                break
            candidate = alpha * s
            if order_of(candidate) == target:
                rep = candidate
                break
    logger.debug("%s: representante de ordem %s", label, order_of(rep))
    return make_coset(ambient, socle, rep, label)


@lru_cache(maxsize=None)
def m10() -> tuple[GroupHandle, GroupHandle]:
    """
    M10 = ⟨PSL(2,9), α⟩ com α da classe diag_frob; devolve (M10, socle).
    Certifica ordem 720 e que todo elemento externo é 2-elemento.
    """
    coset = outer_coset("diag_frob", 9)
    socle = coset.socle
    handle = build_chain([*socle.generators, coset.rep], label="m10")
    if handle.order != 720:
        raise GroupComputationError(f"M10 com ordem {handle.order}")
    bad = sum(1 for x in coset.elements() if not is_p_element(x, 2))
    if bad:
        raise GroupComputationError(f"M10: {bad} elementos externos não são 2-elementos")
    logger.info("M10 construído: representante externo de ordem %s", order_of(coset.rep))
    return handle, socle

"""Reta projetiva PG(1,q): pontos normalizados e as permutações induzidas por matrizes 2×2 e por Frobenius."""

from typing import NamedTuple

from src.classical.field import FieldSpec
from src.errors import InvalidParameterError
from src.permcore import Permutation


class ProjectivePoint(NamedTuple):
    """[x : y] normalizado: [x:1] para x finito, [1:0] para o ponto no infinito."""

    x: int
    y: int


def points(field: FieldSpec) -> list[ProjectivePoint]:
    """[0:1], [1:1], …, [q−1:1], [1:0] (q+1 pontos, na ordem dos índices)."""
    return [ProjectivePoint(x, 1) for x in field.elements()] + [ProjectivePoint(1, 0)]


def infinity_index(field: FieldSpec) -> int:
    return field.size


def normalize(field: FieldSpec, x: int, y: int) -> ProjectivePoint:
    if y == 0:
        if x == 0:
            raise InvalidParameterError("[0:0] não é um ponto projetivo")
        return ProjectivePoint(1, 0)
    return ProjectivePoint(field.div(x, y), 1)


def point_index(field: FieldSpec, point: ProjectivePoint) -> int:
    pt = normalize(field, point.x, point.y)
    return field.size if pt.y == 0 else pt.x


def mobius_permutation(field: FieldSpec, a: int, b: int, c: int, d: int) -> Permutation:
    """
    Permutação de PG(1,q) induzida pela matriz [[a,b],[c,d]] agindo em vetores linha:
    [x:y] ↦ [ax+cy : bx+dy], isto é, x ↦ (ax+c)/(bx+d).
    """
    det = field.sub(field.mul(a, d), field.mul(b, c))
    if det == 0:
        raise InvalidParameterError("matriz singular")
    q = field.size
    images = [0] * (q + 1)
    for x in range(q):
        num = field.add(field.mul(a, x), c)
        den = field.add(field.mul(b, x), d)
        images[x] = q if den == 0 else field.div(num, den)
    images[q] = q if b == 0 else field.div(a, b)
    return Permutation(images)


def frobenius_permutation(field: FieldSpec) -> Permutation:
    """[x:y] ↦ [x^r : y^r]; identidade quando k = 1."""
    q = field.size
    return Permutation([field.frobenius(x) for x in range(q)] + [q])

"""
Construções de grupos: famílias nomeadas (Sym, Alt, cíclico), produtos diretos e potências,
a potência subdireta X_t, os grupos coroa-cíclicos Y_t, os afins (Z/q^m) ⋊ C_{p^n}
e as especificações das torres cujas probabilidades têm forma fechada.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from sympy import isprime, primitive_root, totient
from sympy.ntheory import n_order

from src.classical import LabeledCoset, make_coset
from src.errors import CapExceededError, InvalidParameterError, NotNormalError
from src.permcore import GroupHandle, Permutation, build_chain, from_cycles, identity, trivial_group

logger = logging.getLogger(__name__)

# grau máximo das construções por blocos e dos afins
DEGREE_CAP = 10**4


# --- famílias nomeadas ---


def symmetric_group(n: int) -> GroupHandle:
    if n < 1:
        raise InvalidParameterError(f"Sym({n}): n deve ser positivo")
    if n == 1:
        return trivial_group(1, "sym:1")
    gens = [from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(from_cycles(n, [tuple(range(n))]))
    return build_chain(gens, label=f"sym:{n}")


def alternating_group(n: int) -> GroupHandle:
    if n < 1:
        raise InvalidParameterError(f"Alt({n}): n deve ser positivo")
    if n < 3:
        return trivial_group(n, f"alt:{n}")
    gens = [from_cycles(n, [(0, 1, i)]) for i in range(2, n)]
    return build_chain(gens, label=f"alt:{n}")


def cyclic_group(n: int) -> GroupHandle:
    if n < 1:
        raise InvalidParameterError(f"C{n}: n deve ser positivo")
    if n == 1:
        return trivial_group(1, "cyc:1")
    return build_chain([from_cycles(n, [tuple(range(n))])], label=f"cyc:{n}")


# --- blocos ---


@dataclass(frozen=True)
class EmbeddingMap:
    """t blocos disjuntos de tamanho d; o ponto j do bloco i é i·d + j."""

    block_size: int
    blocks: int

    @property
    def target_degree(self) -> int:
        return self.block_size * self.blocks

    def plant(self, p: Sequence[int], block: int) -> Permutation:
        """p agindo no bloco `block` e identidade nos demais."""
        if len(p) != self.block_size:
            raise InvalidParameterError(f"permutação de grau {len(p)} em bloco de tamanho {self.block_size}")
        images = list(range(self.target_degree))
        offset = block * self.block_size
        for j, image in enumerate(p):
            images[offset + j] = offset + image
        return Permutation(images)

    def tuple_element(self, components: Sequence[Sequence[int]]) -> Permutation:
        if len(components) != self.blocks:
            raise InvalidParameterError(f"{len(components)} componentes para {self.blocks} blocos")
        d = self.block_size
        images = []
        for i, comp in enumerate(components):
            images.extend(i * d + image for image in comp)
        return Permutation(images)

    def diagonal(self, p: Sequence[int]) -> Permutation:
        return self.tuple_element([p] * self.blocks)

    def block_permutation(self, sigma: Sequence[int]) -> Permutation:
        """Permuta blocos inteiros: o ponto (i, j) vai para (σ(i), j)."""
        d = self.block_size
        return Permutation(sigma[i] * d + j for i in range(self.blocks) for j in range(d))

    def components(self, p: Sequence[int]) -> list[Permutation]:
        """Restrições de p a cada bloco; exige que p fixe cada bloco."""
        d = self.block_size
        out = []
        for i in range(self.blocks):
            offset = i * d
            comp = [p[offset + j] - offset for j in range(d)]
            if any(not 0 <= c < d for c in comp):
                raise InvalidParameterError(f"permutação não preserva o bloco {i}")
            out.append(Permutation(comp))
        return out

    def preserves_blocks(self, p: Sequence[int]) -> bool:
        """p permuta os blocos entre si (imagem de cada bloco é um bloco)."""
        d = self.block_size
        for i in range(self.blocks):
            targets = {p[i * d + j] // d for j in range(d)}
            if len(targets) != 1:
                return False
        return True


# --- metadados estruturais consumidos pelo censo ---


@dataclass(frozen=True)
class ProductStructure:
    """Produto direto dos fatores, cada um em seu bloco de pontos (na ordem)."""

    factors: tuple[GroupHandle, ...]


@dataclass(frozen=True)
class SubdirectStructure:
    """X_t = S^t ∪ (aS)^t: a classe lateral externa aS de índice 2, replicada em t blocos."""

    coset: LabeledCoset
    t: int


def _check_degree(degree: int) -> None:
    if degree > DEGREE_CAP:
        raise CapExceededError("grau", degree, DEGREE_CAP)


def direct_product(groups: Sequence[GroupHandle], *, label: str | None = None) -> GroupHandle:
    """Produto direto em conjuntos de pontos disjuntos, na ordem dada."""
    if not groups:
        raise InvalidParameterError("produto direto vazio")
    degree = sum(g.degree for g in groups)
    _check_degree(degree)
    gens: list[Permutation] = []
    offset = 0
    for g in groups:
        for s in g.generators:
            images = list(range(degree))
            for j, image in enumerate(s):
                images[offset + j] = offset + image
            gens.append(Permutation(images))
        offset += g.degree
    label = label or "prod:" + ",".join(f"({g.label})" for g in groups)
    handle = build_chain(gens or [identity(degree)], label=label, structure=ProductStructure(tuple(groups)))
    expected = 1
    for g in groups:
        expected *= g.order
    if handle.order != expected:
        raise InvalidParameterError(f"{label}: ordem {handle.order}, esperado {expected}")
    return handle


def direct_power(group: GroupHandle, t: int) -> GroupHandle:
    """G^t em t blocos disjuntos; ordem |G|^t."""
    if t < 1:
        raise InvalidParameterError(f"expoente {t} deve ser >= 1")
    return direct_product([group] * t, label=f"dp:({group.label}),{t}")


def subdirect_X_t(x_group: GroupHandle, socle: GroupHandle, t: int) -> GroupHandle:
    """
    X_t = {(x_1,…,x_t) ∈ X^t : x_1 ≡ ⋯ ≡ x_t mod S}, definido para |X:S| = 2.
    Geradores: S plantado em cada bloco e a diagonal (a,…,a), com a o primeiro gerador de X fora de S.
    """
    if t < 1:
        raise InvalidParameterError(f"t = {t} deve ser >= 1")
    if not socle.is_subgroup_of(x_group) or x_group.order != 2 * socle.order:
        raise InvalidParameterError(f"{socle.label} não tem índice 2 em {x_group.label}")
    embed = EmbeddingMap(x_group.degree, t)
    _check_degree(embed.target_degree)
    a = next(g for g in x_group.generators if not socle.contains(g))
    gens = [embed.plant(s, i) for i in range(t) for s in socle.generators]
    gens.append(embed.diagonal(a))
    coset = make_coset(x_group, socle, a)
    label = f"xt:{t}" if x_group.label == "m10" else f"xt:({x_group.label}),{t}"
    handle = build_chain(gens, label=label, structure=SubdirectStructure(coset, t))
    expected = 2 * socle.order**t
    if handle.order != expected:
        raise InvalidParameterError(f"{label}: ordem {handle.order}, esperado {expected}")
    logger.info("%s construído: ordem=%s grau=%s", label, handle.order, handle.degree)
    return handle


def _normalizes(a: Permutation, group: GroupHandle) -> bool:
    a_inv = ~a
    return all(group.contains(a_inv * s * a) for s in group.generators)


def wreath_Y_t(socle: GroupHandle, a: Permutation, t: int) -> GroupHandle:
    """
    Y_t = ⟨S^n, g⟩ com n = 2^t e g = (a,1,…,1)σ, σ o n-ciclo nos blocos.
    Ordem 2^{t+1}·|S|^n quando a² ∈ S.
    """
    if t < 0:
        raise InvalidParameterError(f"t = {t} deve ser >= 0")
    if socle.contains(a):
        raise InvalidParameterError("a pertence a S")
    if not _normalizes(a, socle):
        raise NotNormalError(f"a não normaliza {socle.label}")
    n = 2**t
    embed = EmbeddingMap(socle.degree, n)
    _check_degree(embed.target_degree)
    sigma = [(i + 1) % n for i in range(n)]
    g = embed.plant(a, 0) * embed.block_permutation(sigma)
    gens = [embed.plant(s, i) for i in range(n) for s in socle.generators]
    gens.append(g)
    handle = build_chain(gens, label=f"yt:{t}")
    if socle.contains(a * a):
        expected = 2 * n * socle.order**n
        if handle.order != expected:
            raise InvalidParameterError(f"yt:{t}: ordem {handle.order}, esperado {expected}")
    logger.info("yt:%s construído: ordem=%s grau=%s", t, handle.order, handle.degree)
    return handle


def wreath_base(socle: GroupHandle, t: int) -> GroupHandle:
    """A base N = S^n de Y_t, no mesmo grau."""
    return direct_power(socle, 2**t)


def metacyclic_affine(q: int, m: int, p: int, n: int) -> GroupHandle:
    """
    (Z/q^m) ⋊ C_{p^n} como mapas x ↦ ux + b em Z/q^m, com u = g^{φ(q^m)/p^n}
    e g a menor raiz primitiva módulo q^m.
    """
    if not isprime(q) or not isprime(p):
        raise InvalidParameterError(f"meta:{q},{m},{p},{n}: q e p devem ser primos")
    if m < 1 or n < 1:
        raise InvalidParameterError(f"meta:{q},{m},{p},{n}: m e n devem ser >= 1")
    if (q - 1) % p**n:
        raise InvalidParameterError(f"meta:{q},{m},{p},{n}: {p**n} não divide {q - 1}")
    modulus = q**m
    _check_degree(modulus)
    g = primitive_root(modulus)
    u = pow(g, int(totient(modulus)) // p**n, modulus)
    if n_order(u, modulus) != p**n:
        raise InvalidParameterError(f"meta:{q},{m},{p},{n}: multiplicador de ordem errada")
    translation = Permutation((x + 1) % modulus for x in range(modulus))
    dilation = Permutation((u * x) % modulus for x in range(modulus))
    handle = build_chain([translation, dilation], label=f"meta:{q},{m},{p},{n}")
    if handle.order != p**n * modulus:
        raise InvalidParameterError(f"meta:{q},{m},{p},{n}: ordem {handle.order}")
    return handle


def metacyclic_kernel(q: int, m: int) -> GroupHandle:
    """O núcleo de translações Z/q^m, como subgrupo de metacyclic_affine(q, m, ·, ·)."""
    modulus = q**m
    return build_chain([Permutation((x + 1) % modulus for x in range(modulus))], label=f"Z/{modulus}")


# --- torres ---


@dataclass(frozen=True)
class TowerSpec:
    """Família de grupos finitos indexada por profundidade, com probabilidade exata em forma fechada."""

    family: str
    parameters: dict = field(default_factory=dict)
    closed_form: Callable[[int], Fraction] = field(default=lambda depth: Fraction(0), compare=False)
    limit: Fraction | None = None
    direction: str = "decreasing"
    exact_reach: int = 0
    relation: str = "="
    min_depth: int = 1


def gt_tower(socle_count: int = 136, coset_count: int = 360, socle_order: int = 360) -> TowerSpec:
    """P_2(G_t) = (c_S^t + c_aS^t)/(2|S|^t), decrescente com limite 1/2 quando c_aS = |S|."""

    def closed(t: int) -> Fraction:
        return Fraction(socle_count**t + coset_count**t, 2 * socle_order**t)

    limit = Fraction(1, 2) if coset_count == socle_order and socle_count < socle_order else None
    return TowerSpec(
        family="Gt",
        parameters={"socle_count": socle_count, "coset_count": coset_count, "socle_order": socle_order},
        closed_form=closed,
        limit=limit,
        direction="decreasing",
        exact_reach=2,
    )


def yt_tower() -> TowerSpec:
    """Cota inferior P_2(Y_t) >= (2^{t+1}−1)/2^{t+1}, crescente com limite 1."""
    return TowerSpec(
        family="Yt",
        closed_form=lambda t: Fraction(2 ** (t + 1) - 1, 2 ** (t + 1)),
        limit=Fraction(1),
        direction="increasing",
        exact_reach=1,
        relation=">=",
        min_depth=0,
    )


def xu_tower(u: int) -> TowerSpec:
    """
    Produtos parciais ∏_{t=u}^{T} (1 − 2^{−(t+1)}) da cota de P_2(X_u), indexados por T >= u.
    Decrescentes e limitados inferiormente por 1 − 2^{−u}.
    """
    if u < 1:
        raise InvalidParameterError(f"u = {u} deve ser >= 1")

    def closed(depth: int) -> Fraction:
        value = Fraction(1)
        for t in range(u, depth + 1):
            value *= 1 - Fraction(1, 2 ** (t + 1))
        return value

    return TowerSpec(
        family="Xu",
        parameters={"u": u, "floor": str(1 - Fraction(1, 2**u))},
        closed_form=closed,
        limit=None,
        direction="decreasing",
        exact_reach=0,
        relation=">=",
        min_depth=u,
    )


def metacyclic_tower(q: int, p: int, n: int) -> TowerSpec:
    """P_p((Z/q^m) ⋊ C_{p^n}) = ((p^n−1)q^m + 1)/(p^n q^m), decrescente em m com limite (p^n−1)/p^n."""
    pn = p**n

    def closed(m: int) -> Fraction:
        return Fraction((pn - 1) * q**m + 1, pn * q**m)

    reach = 0
    while q ** (reach + 1) <= 10**4:
        reach += 1
    return TowerSpec(
        family="metacyclic",
        parameters={"q": q, "p": p, "n": n},
        closed_form=closed,
        limit=Fraction(pn - 1, pn),
        direction="decreasing",
        exact_reach=reach,
    )

"""
Modelos SQLModel (sem tabela) dos relatórios: censos, pares, estimativas, Sylow, verificações e torres.
Racionais exatos são guardados como numerador/denominador inteiros e serializados como "num/den".
"""

from fractions import Fraction
from typing import Any, Optional

from sqlmodel import Field, SQLModel

# limite dos campos de texto livre (relações, representantes, mensagens de erro)
MAX_TEXT = 4096


def fraction_str(value: Fraction | int) -> str:
    """Fração reduzida "num/den" (inteiros saem como "n/1")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def value_str(value: Any) -> str:
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class NamedValue(SQLModel):
    """Quantidade calculada por uma verificação (inteiro, racional exato ou texto)."""

    name: str = Field(max_length=128)
    value: str = Field(max_length=MAX_TEXT)

    @classmethod
    def of(cls, name: str, value: Any) -> "NamedValue":
        return cls(name=name, value=value_str(value))

    def to_row(self) -> dict[str, str]:
        return {"name": self.name, "value": self.value}


class CensusReport(SQLModel):
    """Contagem exata de p-elementos de um grupo ou de uma classe lateral."""

    group: str = Field(max_length=256)
    prime: int
    count: int
    order: int
    coset: Optional[str] = Field(default=None, max_length=256)

    @property
    def probability(self) -> Fraction:
        return Fraction(self.count, self.order)

    def to_row(self) -> dict[str, Any]:
        row: dict[str, Any] = {
            "group": self.group,
            "prime": self.prime,
            "count": self.count,
            "order": self.order,
            "probability": fraction_str(self.probability),
        }
        if self.coset is not None:
            row["coset"] = self.coset
        return row


class CosetBreakdown(SQLModel):
    """Uma linha da decomposição por classes laterais de N: |Ω_p(gN)| sobre |N|."""

    group: str = Field(max_length=256)
    normal: str = Field(max_length=256)
    prime: int
    coset_index: int
    rep: str = Field(max_length=MAX_TEXT)
    count: int
    size: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.count, self.size)

    def to_row(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "normal": self.normal,
            "prime": self.prime,
            "coset_index": self.coset_index,
            "rep": self.rep,
            "count": self.count,
            "size": self.size,
            "ratio": fraction_str(self.ratio),
        }


class GammaReport(SQLModel):
    """γ_S num supergrupo: maior razão externa |Ω_p(gS)|/|S| e a razão da classe trivial."""

    socle: str = Field(max_length=256)
    group: str = Field(max_length=256)
    prime: int
    size: int
    identity_count: int
    outer_count: int
    cosets: int
    maximal_index: Optional[int] = None
    maximal_rep: Optional[str] = Field(default=None, max_length=MAX_TEXT)

    @property
    def identity_ratio(self) -> Fraction:
        return Fraction(self.identity_count, self.size)

    @property
    def outer_ratio(self) -> Fraction:
        return Fraction(self.outer_count, self.size)

    def to_row(self) -> dict[str, Any]:
        return {
            "socle": self.socle,
            "group": self.group,
            "prime": self.prime,
            "cosets": self.cosets,
            "identity_ratio": fraction_str(self.identity_ratio),
            "outer_ratio": fraction_str(self.outer_ratio),
            "maximal_index": self.maximal_index,
            "maximal_rep": self.maximal_rep,
        }


class PairReport(SQLModel):
    """Ω_p(g,G) (element preenchido) ou a soma de pares de P_p(G,G) (total = |G|²)."""

    group: str = Field(max_length=256)
    prime: int
    element: Optional[str] = Field(default=None, max_length=MAX_TEXT)
    count: int
    total: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.count, self.total)

    def to_row(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "prime": self.prime,
            "element": self.element,
            "count": self.count,
            "total": self.total,
            "probability": fraction_str(self.probability),
        }


class EstimateReport(SQLModel):
    """Estimativa Monte Carlo com intervalo de Wilson (95%) e, auxiliar, Clopper–Pearson."""

    group: str = Field(max_length=256)
    prime: int
    target: str = Field(default="group", max_length=32)
    samples: int
    hits: int
    seed: int
    estimate: float
    wilson_low: float
    wilson_high: float
    cp_low: float
    cp_high: float

    def contains(self, value: float | Fraction) -> bool:
        return self.wilson_low <= float(value) <= self.wilson_high

    def to_row(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "prime": self.prime,
            "target": self.target,
            "samples": self.samples,
            "hits": self.hits,
            "seed": self.seed,
            "estimate": self.estimate,
            "wilson_low": self.wilson_low,
            "wilson_high": self.wilson_high,
            "cp_low": self.cp_low,
            "cp_high": self.cp_high,
        }


class SylowReport(SQLModel):
    """Dados de Sylow: |P|, |N_G(P)|, n_p = |G:N_G(P)| e a cota |P|/|N_G(P)|."""

    group: str = Field(max_length=256)
    prime: int
    order: int
    sylow_order: int
    normalizer_order: int

    @property
    def sylow_count(self) -> int:
        return self.order // self.normalizer_order

    @property
    def bound(self) -> Fraction:
        return Fraction(self.sylow_order, self.normalizer_order)

    def to_row(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "prime": self.prime,
            "order": self.order,
            "sylow_order": self.sylow_order,
            "normalizer_order": self.normalizer_order,
            "sylow_count": self.sylow_count,
            "bound": fraction_str(self.bound),
        }


class VerificationOutcome(SQLModel):
    """
    Resultado de uma verificação. passed é None quando a hipótese do enunciado não vale
    (skipped traz o motivo); ms só é preenchido com tempos habilitados.
    """

    claim: str = Field(max_length=128)
    params: dict[str, Any] = Field(default_factory=dict)
    computed: list[NamedValue] = Field(default_factory=list)
    relation: str = Field(default="", max_length=MAX_TEXT)
    passed: Optional[bool] = None
    skipped: Optional[str] = Field(default=None, max_length=1024)
    ms: Optional[int] = None

    @property
    def failed(self) -> bool:
        return self.passed is False

    def to_row(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": {k: value_str(v) if isinstance(v, Fraction) else v for k, v in self.params.items()},
            "computed": [v.to_row() for v in self.computed],
            "relation": self.relation,
            "pass": self.passed,
            "skipped": self.skipped,
            "ms": self.ms,
        }


class TowerEvaluation(SQLModel):
    """Avaliação de uma torre: forma fechada por profundidade, pernas exatas, limite e monotonicidade."""

    family: str = Field(max_length=32)
    params: dict[str, Any] = Field(default_factory=dict)
    depths: list[int] = Field(default_factory=list)
    closed_form: list[str] = Field(default_factory=list)
    exact_depths: list[int] = Field(default_factory=list)
    exact_values: list[str] = Field(default_factory=list)
    relation: str = Field(default="=", max_length=8)
    limit: Optional[str] = None
    monotone: bool = True
    agrees: bool = True

    def to_row(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": self.params,
            "depths": self.depths,
            "closed_form": self.closed_form,
            "exact_depths": self.exact_depths,
            "exact_values": self.exact_values,
            "relation": self.relation,
            "limit": self.limit,
            "monotone": self.monotone,
            "agrees": self.agrees,
        }

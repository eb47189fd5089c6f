"""Configuração de execução: limites, semente e formato, lidos do ambiente (.env) e sobrescritos pela CLI."""

import logging
import os
from dataclasses import dataclass, replace

logger = logging.getLogger(__name__)

DEFAULT_ENUM_CAP = 2**28
DEFAULT_PAIR_CAP = 5000
DEFAULT_QUOTIENT_CAP = 10**4
# cobre PSL(2,81)⋊C4 (~1,06·10^6)
DEFAULT_NORMALIZER_CAP = 2**21
OUTPUT_FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class RunConfig:
    """Limites e parâmetros de uma execução. Imutável; use with_overrides para variar."""

    enum_cap: int = DEFAULT_ENUM_CAP
    pair_cap: int = DEFAULT_PAIR_CAP
    quotient_cap: int = DEFAULT_QUOTIENT_CAP
    normalizer_cap: int = DEFAULT_NORMALIZER_CAP
    seed: int = 0
    output_format: str = "json"
    workers: int = 1
    timings: bool = False

    def __post_init__(self) -> None:
        for name in ("enum_cap", "pair_cap", "quotient_cap", "normalizer_cap", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} deve ser positivo")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"formato desconhecido: {self.output_format}")

    def with_overrides(self, **overrides) -> "RunConfig":
        """Nova config com os campos não-None de overrides."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values)


def _env_int(name: str, default: int, *, minimum: int = 1) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s inválido (%r); usando %s", name, raw, default)
        return default
    if value < minimum:
        logger.warning("%s deve ser >= %s; usando %s", name, minimum, default)
        return default
    return value


def _env_bool(name: str, default: bool) -> bool:
    raw = (os.getenv(name) or "").strip().lower()
    if not raw:
        return default
    return raw not in ("0", "false", "no")


def load_run_config(**overrides) -> RunConfig:
    """
    Monta RunConfig a partir de PEL_ENUM_CAP, PEL_PAIR_CAP, PEL_QUOTIENT_CAP,
    PEL_NORMALIZER_CAP, PEL_SEED, PEL_FORMAT, PEL_WORKERS e PEL_TIMINGS.
    Valores inválidos no ambiente caem no default (com aviso); overrides não-None têm prioridade.
    """
    fmt = (os.getenv("PEL_FORMAT") or "json").strip().lower()
    if fmt not in OUTPUT_FORMATS:
        logger.warning("PEL_FORMAT inválido (%r); usando json", fmt)
        fmt = "json"
    config = RunConfig(
        enum_cap=_env_int("PEL_ENUM_CAP", DEFAULT_ENUM_CAP),
        pair_cap=_env_int("PEL_PAIR_CAP", DEFAULT_PAIR_CAP),
        quotient_cap=_env_int("PEL_QUOTIENT_CAP", DEFAULT_QUOTIENT_CAP),
        normalizer_cap=_env_int("PEL_NORMALIZER_CAP", DEFAULT_NORMALIZER_CAP),
        seed=_env_int("PEL_SEED", 0, minimum=0),
        output_format=fmt,
        workers=_env_int("PEL_WORKERS", 1),
        timings=_env_bool("PEL_TIMINGS", False),
    )
    return config.with_overrides(**overrides)

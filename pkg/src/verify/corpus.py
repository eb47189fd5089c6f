"""Corpus declarativo (corpus.json): triplas (grupo, subgrupo normal, primo) usadas pelas verificações."""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from src.cli.group_spec import build_group, parse_group_spec
from src.errors import InvalidParameterError
from src.permcore import GroupHandle
from src.quotients import derived_subgroup

logger = logging.getLogger(__name__)

CORPUS_PATH = Path(__file__).with_name("corpus.json")
SECTIONS = ("podd", "local", "gxfinite", "baer", "prosolvable")
DERIVED = "derived"


@dataclass(frozen=True)
class CorpusEntry:
    group: str
    prime: int
    normal: str | None = None
    expected: Fraction | None = None

    def build(self) -> GroupHandle:
        return build_group(self.group)

    def build_normal(self) -> GroupHandle:
        """N pelo texto do corpus: spec de mesmo grau ou "derived". Normalidade é checada por quem usa."""
        if self.normal is None:
            raise InvalidParameterError(f"{self.group}: entrada sem subgrupo normal")
        group = self.build()
        if self.normal == DERIVED:
            return derived_subgroup(group)
        normal = build_group(self.normal)
        if normal.degree != group.degree:
            raise InvalidParameterError(f"{self.normal} tem grau {normal.degree}, {self.group} tem {group.degree}")
        return normal

    @property
    def label(self) -> str:
        if self.normal is None:
            return f"{self.group} p={self.prime}"
        return f"{self.group} ⊵ {self.normal} p={self.prime}"


def _entry(raw: dict) -> CorpusEntry:
    try:
        group = parse_group_spec(raw["group"]).render()
        prime = int(raw["prime"])
    except KeyError as e:
        raise InvalidParameterError(f"entrada do corpus sem campo {e}") from e
    normal = raw.get("normal")
    if normal is not None and normal != DERIVED:
        normal = parse_group_spec(normal).render()
    expected = raw.get("expected")
    return CorpusEntry(group, prime, normal, Fraction(expected) if expected is not None else None)


def load_corpus(path: Path | str | None = None) -> dict[str, list[CorpusEntry]]:
    """Lê e valida o corpus; seções ausentes viram listas vazias."""
    path = Path(path) if path is not None else CORPUS_PATH
    data = json.loads(path.read_text(encoding="utf-8"))
    unknown = set(data) - set(SECTIONS)
    if unknown:
        raise InvalidParameterError(f"seções desconhecidas no corpus: {sorted(unknown)}")
    corpus = {name: [_entry(raw) for raw in data.get(name, [])] for name in SECTIONS}
    logger.debug("corpus %s: %s", path.name, {k: len(v) for k, v in corpus.items()})
    return corpus


@lru_cache(maxsize=1)
def default_corpus() -> dict[str, list[CorpusEntry]]:
    return load_corpus()

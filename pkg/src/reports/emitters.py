"""Emissores de relatórios (json, csv, text): interface comum e factory por nome."""

import csv
import json
from typing import Any, Iterable, Protocol, TextIO

from src.config import OUTPUT_FORMATS


class Report(Protocol):
    def to_row(self) -> dict[str, Any]: ...


class ReportEmitter(Protocol):
    """Protocolo dos emissores: escrevem uma sequência de relatórios em um stream de texto."""

    def emit(self, reports: Iterable[Report], stream: TextIO) -> None:
        """Serializa os relatórios na ordem recebida."""
        ...


def _dumps(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(",", ":"))


class JsonLinesEmitter:
    """Um objeto JSON por linha."""

    def emit(self, reports: Iterable[Report], stream: TextIO) -> None:
        for report in reports:
            stream.write(_dumps(report.to_row()) + "\n")


class CsvEmitter:
    """Cabeçalho + uma linha por relatório; colunas na ordem do primeiro relatório, aninhados em JSON."""

    def emit(self, reports: Iterable[Report], stream: TextIO) -> None:
        writer = None
        for report in reports:
            row = report.to_row()
            if writer is None:
                writer = csv.DictWriter(stream, fieldnames=list(row), lineterminator="\n", extrasaction="ignore")
                writer.writeheader()
            writer.writerow(
                {k: _dumps(v) if isinstance(v, (dict, list)) or v is None else v for k, v in row.items()}
            )


class TextEmitter:
    """Blocos "campo: valor" separados por linha em branco, para leitura no terminal."""

    def emit(self, reports: Iterable[Report], stream: TextIO) -> None:
        first = True
        for report in reports:
            if not first:
                stream.write("\n")
            first = False
            row = report.to_row()
            width = max(len(k) for k in row)
            for key, value in row.items():
                shown = _dumps(value) if isinstance(value, (dict, list)) or value is None else value
                stream.write(f"{key.ljust(width)}  {shown}\n")


def get_emitter(name: str) -> ReportEmitter:
    """Emissor para o formato pedido (json, csv ou text)."""
    name = (name or "json").strip().lower()
    if name not in OUTPUT_FORMATS:
        raise ValueError(f"formato desconhecido: {name}")
    if name == "csv":
        return CsvEmitter()
    if name == "text":
        return TextEmitter()
    return JsonLinesEmitter()

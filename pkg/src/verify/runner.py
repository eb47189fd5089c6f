"""Execução da suíte: cada verificação é um job; inline com 1 worker, senão num pool de processos."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, TypedDict

from src.config import RunConfig
from src.reports import MAX_TEXT, VerificationOutcome
from src.verify.claims import CLAIMS, run_claim
from src.verify.corpus import load_corpus

logger = logging.getLogger(__name__)


class ClaimJob(TypedDict):
    claim: str
    config: RunConfig
    corpus_path: str | None


def make_jobs(claims: Iterable[str], config: RunConfig, corpus_path: str | None = None) -> list[ClaimJob]:
    return [{"claim": name, "config": config, "corpus_path": corpus_path} for name in claims]


def process_job(job: ClaimJob) -> list[VerificationOutcome]:
    """Roda um job; exceções viram um resultado reprovado com a mensagem no campo relation."""
    name = job["claim"]
    config = job["config"]
    start = time.perf_counter()
    try:
        corpus = load_corpus(job["corpus_path"]) if job["corpus_path"] else None
        outcomes = run_claim(name, corpus, config)
    except Exception as e:
        logger.exception("Erro ao verificar %s", name)
        relation = f"erro: {type(e).__name__}: {e}"[:MAX_TEXT]
        outcomes = [VerificationOutcome(claim=name, relation=relation, passed=False)]
    if config.timings:
        ms = int((time.perf_counter() - start) * 1000)
        for outcome in outcomes:
            outcome.ms = ms
    logger.info("%s: %s resultado(s)", name, len(outcomes))
    return outcomes


def run_suite(
    claims: Iterable[str] | None = None,
    config: RunConfig | None = None,
    *,
    corpus_path: str | None = None,
) -> list[VerificationOutcome]:
    """Resultados na ordem de submissão, independentemente de quantos workers rodaram."""
    config = config or RunConfig()
    names = list(claims) if claims is not None else list(CLAIMS)
    jobs = make_jobs(names, config, corpus_path)
    if config.workers == 1 or len(jobs) < 2:
        results = [process_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(process_job, jobs))
    outcomes = [outcome for batch in results for outcome in batch]
    failed = sum(1 for o in outcomes if o.failed)
    skipped = sum(1 for o in outcomes if o.passed is None)
    logger.info("suíte: %s resultados, %s reprovados, %s pulados", len(outcomes), failed, skipped)
    return outcomes


def exit_code(outcomes: Iterable[VerificationOutcome]) -> int:
    return 1 if any(o.failed for o in outcomes) else 0

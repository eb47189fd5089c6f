"""Estimativa Monte Carlo da proporção de p-elementos, com intervalos de Wilson e Clopper–Pearson."""

import hashlib
import logging
import math
import random

from scipy.stats import beta, norm

from src.classical import LabeledCoset
from src.errors import InvalidParameterError
from src.permcore import GroupHandle, is_p_element, require_prime
from src.reports import EstimateReport

logger = logging.getLogger(__name__)

CONFIDENCE = 0.95


def derive_seed(root: int, label: str) -> int:
    """Semente derivada de (raiz, rótulo) por SHA-256; estável entre execuções e processos."""
    digest = hashlib.sha256(f"{root}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def wilson_interval(hits: int, samples: int, confidence: float = CONFIDENCE) -> tuple[float, float]:
    if samples <= 0:
        raise InvalidParameterError("amostras devem ser positivas")
    z = float(norm.ppf(1 - (1 - confidence) / 2))
    phat = hits / samples
    z2n = z * z / samples
    center = (phat + z2n / 2) / (1 + z2n)
    half = z * math.sqrt(phat * (1 - phat) / samples + z2n / (4 * samples)) / (1 + z2n)
    low = 0.0 if hits == 0 else max(0.0, center - half)
    high = 1.0 if hits == samples else min(1.0, center + half)
    return low, high


def clopper_pearson(hits: int, samples: int, confidence: float = CONFIDENCE) -> tuple[float, float]:
    if samples <= 0:
        raise InvalidParameterError("amostras devem ser positivas")
    alpha = 1 - confidence
    low = 0.0 if hits == 0 else float(beta.ppf(alpha / 2, hits, samples - hits + 1))
    high = 1.0 if hits == samples else float(beta.ppf(1 - alpha / 2, hits + 1, samples - hits))
    return low, high


def mc_estimate(target: GroupHandle | LabeledCoset, p: int, samples: int, seed: int) -> EstimateReport:
    """
    Proporção de p-elementos por amostragem uniforme exata do grupo (ou de rep·S para classes laterais).
    Reprodutível a partir da semente.
    """
    require_prime(p)
    if samples <= 0:
        raise InvalidParameterError("amostras devem ser positivas")
    rng = random.Random(seed)
    if isinstance(target, LabeledCoset):
        rep, group, kind = target.rep, target.socle, "coset"
    else:
        rep, group, kind = None, target, "group"
    label = target.label
    hits = 0
    for _ in range(samples):
        x = group.random_element(rng)
        if rep is not None:
            x = rep * x
        if is_p_element(x, p):
            hits += 1
    low, high = wilson_interval(hits, samples)
    cp_low, cp_high = clopper_pearson(hits, samples)
    logger.info("estimativa em %s: %s/%s (semente %s)", label, hits, samples, seed)
    return EstimateReport(
        group=label,
        prime=p,
        target=kind,
        samples=samples,
        hits=hits,
        seed=seed,
        estimate=hits / samples,
        wilson_low=low,
        wilson_high=high,
        cp_low=cp_low,
        cp_high=cp_high,
    )

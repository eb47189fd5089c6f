"""Verificações dos enunciados, avaliação de torres, corpus declarativo e execução da suíte."""

from src.verify.claims import (
    CLAIMS,
    run_claim,
    verify_an_proportions,
    verify_anchepsl,
    verify_coset_bounds,
    verify_frobenius_centralizer,
    verify_gamma_table,
    verify_gxfinite_halving,
    verify_l23_corx3,
    verify_local_section4,
    verify_m10,
    verify_onlypsl_negatives,
    verify_podd,
    verify_prosolvable_threshold,
    verify_samenumber,
    verify_self_normalizing,
    verify_sylow_bounds,
)
from src.verify.corpus import CorpusEntry, default_corpus, load_corpus
from src.verify.runner import exit_code, run_suite
from src.verify.towers import TOWER_FAMILIES, tower_outcome, verify_towers

__all__ = [
    "CLAIMS",
    "CorpusEntry",
    "TOWER_FAMILIES",
    "default_corpus",
    "exit_code",
    "load_corpus",
    "run_claim",
    "run_suite",
    "tower_outcome",
    "verify_an_proportions",
    "verify_anchepsl",
    "verify_coset_bounds",
    "verify_frobenius_centralizer",
    "verify_gamma_table",
    "verify_gxfinite_halving",
    "verify_l23_corx3",
    "verify_local_section4",
    "verify_m10",
    "verify_onlypsl_negatives",
    "verify_podd",
    "verify_prosolvable_threshold",
    "verify_samenumber",
    "verify_self_normalizing",
    "verify_sylow_bounds",
    "verify_towers",
]

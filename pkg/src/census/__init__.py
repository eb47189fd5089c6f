"""Contagens exatas de p-elementos, dados de Sylow, conjuntos de pares e estimativas."""

from src.census.counts import coset_breakdown, coset_p_census, count_p_elements, p_census, p_element_count
from src.census.estimate import clopper_pearson, derive_seed, mc_estimate, wilson_interval
from src.census.gamma import GammaResult, gamma_simple
from src.census.pairs import (
    QuotientPairIdentity,
    baer_intersection,
    omega_pair_set,
    omega_set,
    omega_weight,
    pair_probability,
    quotient_pair_identity,
)
from src.census.partitions import SnProportion, sn_p_counts, sn_p_proportion, sn_two_proportion
from src.census.sylow import (
    centralizer,
    normalizer,
    p_part,
    sylow,
    sylow_bound_check,
    sylow_report,
    sylow_subgroups,
)

__all__ = [
    "GammaResult",
    "QuotientPairIdentity",
    "SnProportion",
    "baer_intersection",
    "centralizer",
    "clopper_pearson",
    "coset_breakdown",
    "coset_p_census",
    "count_p_elements",
    "derive_seed",
    "gamma_simple",
    "mc_estimate",
    "normalizer",
    "omega_pair_set",
    "omega_set",
    "omega_weight",
    "p_census",
    "p_element_count",
    "p_part",
    "pair_probability",
    "quotient_pair_identity",
    "sn_p_counts",
    "sn_p_proportion",
    "sn_two_proportion",
    "sylow",
    "sylow_bound_check",
    "sylow_report",
    "sylow_subgroups",
    "wilson_interval",
]

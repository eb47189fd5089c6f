"""
Verificações executáveis: cada enunciado vira um check que devolve VerificationOutcome
com as quantidades exatas comparadas. Hipóteses são checadas; quando falham o resultado
sai como pulado (passed=None), nunca como reprovado.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable

from src.census import (
    centralizer,
    coset_breakdown,
    coset_p_census,
    gamma_simple,
    normalizer,
    omega_pair_set,
    omega_weight,
    p_census,
    pair_probability,
    quotient_pair_identity,
    sn_two_proportion,
    sylow,
    sylow_bound_check,
)
from src.census.pairs import baer_intersection
from src.classical import classical_group, m10, make_coset, outer_coset
from src.cli.group_spec import build_group
from src.config import DEFAULT_ENUM_CAP, RunConfig
from src.constructions import alternating_group, symmetric_group
from src.errors import CapExceededError, GroupComputationError, HypothesisSkip, InvalidParameterError
from src.permcore import (
    GroupHandle,
    Permutation,
    cycle_lengths,
    format_cycles,
    is_p_element,
    order_divides,
    order_of,
)
from src.quotients import (
    chief_series,
    conjugacy_class_reps,
    is_abelian,
    is_normal,
    is_solvable,
    non_abelian_factor_count,
    o_p,
    quotient_by,
)
from src.reports import NamedValue, VerificationOutcome
from src.verify.corpus import CorpusEntry, default_corpus
from src.verify.towers import TOWER_FAMILIES, tower_outcome, verify_towers

logger = logging.getLogger(__name__)

Corpus = dict[str, list[CorpusEntry]]

# pares (socle, supergrupo) da tabela de γ_S
GAMMA_PAIRS = (
    ("alt:5", "sym:5"),
    ("psl2:7", "pgl2:7"),
    ("psl2:11", "pgl2:11"),
    ("psl2:9", "pgammal2:9"),
    ("psl2:25", "pgammal2:25"),
    ("psl2:27", "pgammal2:27"),
)
A6_SOCLE = "psl2:9"


def _outcome(claim: str, params: dict, computed: Iterable[tuple[str, object]], relation: str, passed: bool) -> VerificationOutcome:
    outcome = VerificationOutcome(
        claim=claim,
        params=params,
        computed=[NamedValue.of(name, value) for name, value in computed],
        relation=relation,
        passed=bool(passed),
    )
    if not passed:
        logger.warning("%s reprovado: %s %s", claim, relation, params)
    return outcome


def _skipped(claim: str, params: dict, reason: str) -> VerificationOutcome:
    logger.warning("%s pulado (%s): %s", claim, params, reason)
    return VerificationOutcome(claim=claim, params=params, relation="", passed=None, skipped=reason)


def _is_odd(x: Permutation) -> bool:
    return sum(length - 1 for length in cycle_lengths(x)) % 2 == 1


def _m10_outer_rep() -> Permutation:
    return outer_coset("diag_frob", 9).rep


# --- M10 ---


def verify_m10(*, cap: int = DEFAULT_ENUM_CAP) -> VerificationOutcome:
    """496 2-elementos em M10, 136 no socle, e todo elemento externo tem ordem 4 ou 8."""
    handle, socle = m10()
    whole = p_census(handle, 2, cap=cap)
    inner = p_census(socle, 2, cap=cap)
    orders = sorted({order_of(x) for x in make_coset(handle, socle, _m10_outer_rep()).elements()})
    passed = (
        (whole.count, whole.order) == (496, 720)
        and (inner.count, inner.order) == (136, 360)
        and set(orders) <= {4, 8}
        and whole.probability == Fraction(31, 45)
    )
    return _outcome(
        "m10",
        {"group": "m10", "p": 2},
        [
            ("|Ω_2(M10)|", whole.count),
            ("|M10|", whole.order),
            ("P_2(M10)", whole.probability),
            ("|Ω_2(A6)|", inner.count),
            ("P_2(A6)", inner.probability),
            ("outer orders", ",".join(map(str, orders))),
        ],
        "(496, 136) = counts; outer orders ⊆ {4,8}",
        passed,
    )


# --- 3/4 em classes laterais ---


def verify_l23_corx3(*, cap: int = DEFAULT_ENUM_CAP) -> VerificationOutcome:
    """|Ω_3(φ·PSL(2,27))| = 3/4·|S| e razão <= 3/4 em todas as instâncias (S, g) do corpus."""
    phi = outer_coset("frob", 27)
    phi2 = make_coset(phi.ambient, phi.socle, phi.rep * phi.rep, "frob2:27")
    sym5, alt5 = symmetric_group(5), alternating_group(5)
    odd = make_coset(sym5, alt5, next(g for g in sym5.generators if not alt5.contains(g)), "sym:5∖alt:5")
    m10_outer = outer_coset("diag_frob", 9)

    reports = {c.label: coset_p_census(c, 3, cap=cap) for c in (phi, phi2, odd, m10_outer)}
    ratios = {label: r.probability for label, r in reports.items()}
    limit = Fraction(3, 4)
    passed = (
        reports[phi.label].count == 7371
        and ratios[phi.label] == limit
        and reports[phi2.label].count == reports[phi.label].count
        and all(v <= limit for v in ratios.values())
    )
    computed = [(f"|Ω_3({label})|", r.count) for label, r in reports.items()]
    computed += [(f"ratio({label})", v) for label, v in ratios.items()]
    return _outcome("l23", {"p": 3}, computed, "ratio(frob:27) = 3/4; every ratio <= 3/4", passed)


def verify_anchepsl(f: int = 2, *, cap: int = DEFAULT_ENUM_CAP) -> VerificationOutcome:
    """Todo elemento de α·PSL(2,3^f) tem ordem dividindo 4f; com f potência de 2, são todos 2-elementos."""
    if f < 2:
        raise InvalidParameterError(f"f = {f} deve ser >= 2")
    q = 3**f
    coset = outer_coset("diag_frob", q)
    if coset.size > cap:
        raise CapExceededError(f"α·PSL(2,{q})", coset.size, cap)
    logger.info("enumerando α·PSL(2,%s): %s elementos", q, coset.size)
    bound = 4 * f
    exceptions = 0
    non_two = 0
    for x in coset.elements():
        if not order_divides(x, bound):
            exceptions += 1
        if not is_p_element(x, 2):
            non_two += 1
    two_power = f & (f - 1) == 0
    socle_not_two = any(not is_p_element(g, 2) for g in coset.socle.generators)
    passed = exceptions == 0 and (non_two == 0 or not two_power) and socle_not_two
    return _outcome(
        "anchepsl",
        {"f": f, "q": q},
        [
            ("|αS|", coset.size),
            ("order(α)", order_of(coset.rep)),
            ("exceptions", exceptions),
            ("non 2-elements", non_two),
            ("socle has non 2-elements", socle_not_two),
        ],
        f"every order divides {bound}",
        passed,
    )


# --- p ímpar com N não solúvel ---


def _normal_hypothesis(entry: CorpusEntry, group: GroupHandle, normal: GroupHandle) -> None:
    if entry.prime % 2 == 0:
        raise HypothesisSkip(f"p = {entry.prime} não é ímpar")
    if not normal.is_subgroup_of(group) or not is_normal(group, normal):
        raise HypothesisSkip(f"{entry.normal} não é normal em {entry.group}")
    if is_solvable(normal):
        raise HypothesisSkip(f"{entry.normal} é solúvel")


def _podd_one(entry: CorpusEntry, config: RunConfig) -> VerificationOutcome:
    params = {"group": entry.group, "normal": entry.normal, "p": entry.prime}
    group, normal = entry.build(), entry.build_normal()
    try:
        _normal_hypothesis(entry, group, normal)
    except HypothesisSkip as e:
        return _skipped("podd", params, str(e))
    p = entry.prime
    whole = p_census(group, p, cap=config.enum_cap)
    quotient = quotient_by(group, normal, cap=config.quotient_cap)
    image = p_census(quotient.image, p, cap=config.enum_cap)
    bound = Fraction(p, 2 * (p - 1)) * image.probability
    return _outcome(
        "podd",
        params,
        [("P_p(G)", whole.probability), ("P_p(G/N)", image.probability), ("p/(2(p-1))·P_p(G/N)", bound)],
        "P_p(G) <= p/(2(p-1))·P_p(G/N)",
        whole.probability <= bound,
    )


def _non_ab_cf_one(entry: CorpusEntry, config: RunConfig) -> VerificationOutcome:
    params = {"group": entry.group, "p": entry.prime}
    p = entry.prime
    if p % 2 == 0:
        return _skipped("non_ab_cf", params, f"p = {p} não é ímpar")
    group = entry.build()
    whole = p_census(group, p, cap=config.enum_cap)
    t = non_abelian_factor_count(chief_series(group, quotient_cap=config.quotient_cap))
    # (2(p-1)/p)^t <= 1/P_p(G), em inteiros
    lhs = (2 * (p - 1)) ** t * whole.count
    rhs = p**t * whole.order
    return _outcome(
        "non_ab_cf",
        params,
        [("t", t), ("P_p(G)", whole.probability), ("(2(p-1))^t·|Ω_p(G)|", lhs), ("p^t·|G|", rhs)],
        "(2(p-1)/p)^t <= 1/P_p(G)",
        lhs <= rhs,
    )


def verify_podd(corpus: Corpus | None = None, *, config: RunConfig | None = None) -> list[VerificationOutcome]:
    """Cota P_p(G) <= p/(2(p-1))·P_p(G/N) e a cota de fatores principais não abelianos, por entrada."""
    corpus = corpus or default_corpus()
    config = config or RunConfig()
    outcomes = []
    for entry in corpus["podd"]:
        outcomes.append(_podd_one(entry, config))
        outcomes.append(_non_ab_cf_one(entry, config))
    return outcomes


# --- pares e pesos ---


def _class_reps(group: GroupHandle, config: RunConfig) -> list[Permutation]:
    return [x for x, _ in conjugacy_class_reps(group, cap=config.enum_cap)]


def _bbb(group: GroupHandle, p: int, params: dict, config: RunConfig) -> VerificationOutcome:
    series = chief_series(group, quotient_cap=config.quotient_cap)
    computed: list[tuple[str, object]] = []
    passed = True
    for g in _class_reps(group, config):
        if not is_p_element(g, p):
            continue
        prob = omega_pair_set(group, g, p, cap=config.pair_cap).probability
        weight = omega_weight(group, g, p, series=series)
        computed += [(f"P_p({format_cycles(g)})", prob), (f"ω({format_cycles(g)})", weight)]
        passed = passed and prob <= Fraction(1, 2**weight)
    return _outcome("bbb", params, computed, "P_p(g,G) <= 1/2^ω_p(g,G) for every p-element class", passed)


def _thm_dh(group: GroupHandle, p: int, params: dict, config: RunConfig) -> VerificationOutcome:
    """Em G solúvel, um p-elemento centraliza todos os fatores principais p' sse está em O_p(G)."""
    if group.order % p:
        return _skipped("thm_dh", params, f"{p} não divide |G|")
    if not is_solvable(group):
        return _skipped("thm_dh", params, "G não é solúvel")
    series = chief_series(group, quotient_cap=config.quotient_cap)
    op = o_p(group, p)
    centralizing = []
    passed = True
    for g in _class_reps(group, config):
        if not is_p_element(g, p):
            continue
        weight = omega_weight(group, g, p, series=series)
        if weight == 0:
            centralizing.append(format_cycles(g))
        passed = passed and (weight == 0) == op.contains(g)
    return _outcome(
        "thm_dh",
        params,
        [("|O_p(G)|", op.order), ("classes centralizing p' chief factors", ";".join(centralizing))],
        "ω_p(g,G) = 0 iff g ∈ O_p(G)",
        passed,
    )


def _pairs(group: GroupHandle, p: int, params: dict, config: RunConfig) -> VerificationOutcome:
    cover = pair_probability(group, p, cap=config.pair_cap)
    direct = pair_probability(group, p, cap=config.pair_cap, method="direct")
    return _outcome(
        "pairs",
        params,
        [("P_p(G,G)", cover.probability), ("pairs (Sylow cover)", cover.count), ("pairs (direct)", direct.count)],
        "Σ_g |Ω_p(g,G)| / |G|² agrees between Sylow cover and direct generation",
        cover.count == direct.count,
    )


def baer_outcome(group: GroupHandle, p: int, params: dict, expected: Fraction | None, config: RunConfig) -> VerificationOutcome:
    try:
        op, measure = baer_intersection(group, p, cap=config.pair_cap)
    except GroupComputationError as e:
        return _outcome("baer", params, [("error", str(e))], "∩ Ω_p(g,G) = O_p(G)", False)
    computed: list[tuple[str, object]] = [("|O_p(G)|", op.order), ("|O_p(G)|/|G|", measure)]
    relation = "∩ Ω_p(g,G) = O_p(G)"
    passed = True
    if expected is not None:
        computed.append(("expected", expected))
        relation += f"; measure = {expected}"
        passed = measure == expected
    return _outcome("baer", params, computed, relation, passed)


def _gx_element(group: GroupHandle, normal: GroupHandle, p: int, config: RunConfig) -> Permutation | None:
    """Primeiro representante de classe que é p-elemento fora de N."""
    return next((g for g in _class_reps(group, config) if is_p_element(g, p) and not normal.contains(g)), None)


def _gxfinite_setup(entry: CorpusEntry, config: RunConfig):
    params = {"group": entry.group, "normal": entry.normal, "p": entry.prime}
    group, normal = entry.build(), entry.build_normal()
    p = entry.prime
    if group.order > config.pair_cap:
        raise HypothesisSkip(f"|G| = {group.order} excede o limite de pares {config.pair_cap}")
    if not normal.is_subgroup_of(group) or not is_normal(group, normal):
        raise HypothesisSkip(f"{entry.normal} não é normal em {entry.group}")
    if not is_abelian(normal) or normal.order % p == 0:
        raise HypothesisSkip(f"{entry.normal} não é abeliano de ordem prima com {p}")
    g = _gx_element(group, normal, p, config)
    if g is None:
        raise HypothesisSkip("nenhum p-elemento fora de N")
    quotient = quotient_by(group, normal, cap=config.quotient_cap)
    identity = quotient_pair_identity(group, quotient, g, p, cap=config.pair_cap)
    params["g"] = format_cycles(g)
    return params, identity


def _gxfinite(entry: CorpusEntry, config: RunConfig) -> VerificationOutcome:
    try:
        params, identity = _gxfinite_setup(entry, config)
    except HypothesisSkip as e:
        return _skipped("gxfinite", {"group": entry.group, "normal": entry.normal, "p": entry.prime}, str(e))
    computed: list[tuple[str, object]] = [
        ("P_p(g,G)", identity.p_g),
        ("P_p(gN,G/N)", identity.p_gn),
        ("ratio", identity.ratio),
        ("centralizer sum", identity.formula),
    ]
    passed = identity.ratio == identity.formula
    if entry.expected is not None:
        computed.append(("expected", entry.expected))
        passed = passed and identity.ratio == entry.expected
    return _outcome(
        "gxfinite",
        params,
        computed,
        "P_p(g,G)/P_p(gN,G/N) = Σ |C_N(g)|/|C_N(g) ∩ C_N(x)| / (|N|·|Ω_p(gN,G/N)|)",
        passed,
    )


def verify_local_section4(corpus: Corpus | None = None, *, config: RunConfig | None = None) -> list[VerificationOutcome]:
    """
    Para cada entrada local: cota 1/2^ω, equivalência P_p(g,G) = 1 ⟺ g ∈ O_p(G), interseção de Baer
    e consistência de P_p(G,G); depois a identidade exata dos quocientes por N abeliano p'.
    """
    corpus = corpus or default_corpus()
    config = config or RunConfig()
    expected_baer = {(e.group, e.prime): e.expected for e in corpus["baer"]}
    entries = list(corpus["local"])
    known = {(e.group, e.prime) for e in entries}
    entries += [e for e in corpus["baer"] if (e.group, e.prime) not in known]

    outcomes = []
    for entry in entries:
        params = {"group": entry.group, "p": entry.prime}
        group = entry.build()
        if group.order > config.pair_cap:
            outcomes.append(_skipped("local", params, f"|G| = {group.order} excede o limite de pares {config.pair_cap}"))
            continue
        p = entry.prime
        outcomes.append(_bbb(group, p, params, config))
        outcomes.append(_thm_dh(group, p, params, config))
        outcomes.append(baer_outcome(group, p, params, expected_baer.get((entry.group, p)), config))
        outcomes.append(_pairs(group, p, params, config))
    outcomes.extend(_gxfinite(entry, config) for entry in corpus["gxfinite"])
    return outcomes


# --- testemunhas negativas ---


def _odd_order_six_witness(n: int) -> Permutation | None:
    return next((x for x in symmetric_group(n).elements() if _is_odd(x) and order_of(x) == 6), None)


def verify_onlypsl_negatives() -> list[VerificationOutcome]:
    """Elementos que impedem gS de ser só de 2-elementos: S_n∖A_n e PGL(2,q)∖PSL(2,q); nenhum no caso q = 9."""
    outcomes = []
    for n in (5, 7, 8):
        witness = _odd_order_six_witness(n)
        outcomes.append(
            _outcome(
                "onlypsl",
                {"family": "sym", "n": n},
                [("witness", format_cycles(witness) if witness else "none")],
                "odd element of order 6 exists",
                witness is not None,
            )
        )
    for q in (5, 7, 11, 13):
        coset = outer_coset("diag", q)
        low = high = None
        for x in coset.elements():
            order = order_of(x)
            if low is None and order == q - 1:
                low = x
            elif high is None and order == q + 1:
                high = x
            if low is not None and high is not None:
                break
        outcomes.append(
            _outcome(
                "onlypsl",
                {"family": "pgl2", "q": q},
                [
                    (f"order {q - 1}", format_cycles(low) if low else "none"),
                    (f"order {q + 1}", format_cycles(high) if high else "none"),
                ],
                f"outer elements of orders {q - 1} and {q + 1} exist",
                low is not None and high is not None,
            )
        )
    coset = outer_coset("diag_frob", 9)
    witnesses = sum(1 for x in coset.elements() if not is_p_element(x, 2))
    outcomes.append(
        _outcome(
            "onlypsl",
            {"family": "diag_frob", "q": 9},
            [("witnesses", witnesses), ("|αS|", coset.size)],
            "no outer element outside Ω_2",
            witnesses == 0,
        )
    )
    return outcomes


# --- proporções em S_n ---


def _enumerated_split(n: int) -> tuple[int, int]:
    even = odd = 0
    for x in symmetric_group(n).elements():
        if is_p_element(x, 2):
            if _is_odd(x):
                odd += 1
            else:
                even += 1
    return even, odd


def verify_an_proportions(n_max: int = 16) -> VerificationOutcome:
    """Proporções de 2-elementos em S_n pela fórmula de partições; conferidas por enumeração até n = 8."""
    if not 4 <= n_max <= 60:
        raise InvalidParameterError(f"n_max = {n_max} fora de [4, 60]")
    values = {n: sn_two_proportion(n) for n in range(4, n_max + 1)}
    agree = True
    computed: list[tuple[str, object]] = []
    for n in range(4, min(8, n_max) + 1):
        even, odd = _enumerated_split(n)
        half = factorial(n) // 2
        enumerated = (Fraction(even + odd, 2 * half), Fraction(even, half), Fraction(odd, half))
        agree = agree and enumerated == tuple(values[n])
    computed.append(("P_2(S_4)", values[4].symmetric))
    computed.append((f"P_2(S_{n_max})", values[n_max].symmetric))
    if 6 in values:
        computed += [("P_2(A_6)", values[6].alternating), ("P_2(S_6∖A_6)", values[6].odd)]
    computed.append(("enumeration agrees (n <= 8)", agree))
    decreasing = values[n_max].symmetric < values[4].symmetric
    a6_ok = 6 not in values or values[6].alternating == Fraction(136, 360)
    return _outcome(
        "an",
        {"n_max": n_max},
        computed,
        f"P_2(S_{n_max}) < P_2(S_4); formula = enumeration",
        agree and decreasing and a6_ok,
    )


# --- complementos ---


def verify_coset_bounds(corpus: Corpus | None = None, *, config: RunConfig | None = None) -> list[VerificationOutcome]:
    """|Ω_p(gN)|/|N| <= p/(2(p-1)) para cada gN ∈ Ω_p(G/N), com N não solúvel."""
    corpus = corpus or default_corpus()
    config = config or RunConfig()
    outcomes = []
    for entry in corpus["podd"]:
        params = {"group": entry.group, "normal": entry.normal, "p": entry.prime}
        group, normal = entry.build(), entry.build_normal()
        try:
            _normal_hypothesis(entry, group, normal)
        except HypothesisSkip as e:
            outcomes.append(_skipped("coset_bounds", params, str(e)))
            continue
        p = entry.prime
        bound = Fraction(p, 2 * (p - 1))
        quotient = quotient_by(group, normal, cap=config.quotient_cap)
        rows = coset_breakdown(group, normal, p, cap=config.enum_cap, quotient_cap=config.quotient_cap)
        checked = [row for row in rows if is_p_element(quotient.project(quotient.reps[row.coset_index]), p)]
        computed = [(f"ratio[{row.coset_index}]", row.ratio) for row in checked]
        computed.append(("bound", bound))
        outcomes.append(
            _outcome(
                "coset_bounds",
                params,
                computed,
                "|Ω_p(gN)|/|N| <= p/(2(p-1)) for gN ∈ Ω_p(G/N)",
                all(row.ratio <= bound for row in checked),
            )
        )
    return outcomes


def verify_samenumber(*, cap: int = DEFAULT_ENUM_CAP) -> VerificationOutcome:
    """|Ω_2(g^i·A6)| igual para i = 1, 3, 5 em M10 e |Ω_3(φS)| = |Ω_3(φ²S)| em PSL(2,27)⋊⟨φ⟩."""
    handle, socle = m10()
    g = _m10_outer_rep()
    m10_counts = [coset_p_census(make_coset(handle, socle, g**i, f"g^{i}·A6"), 2, cap=cap).count for i in (1, 3, 5)]
    phi = outer_coset("frob", 27)
    phi_counts = [
        coset_p_census(make_coset(phi.ambient, phi.socle, phi.rep**i, f"φ^{i}·S"), 3, cap=cap).count for i in (1, 2)
    ]
    return _outcome(
        "samenumber",
        {},
        [(f"|Ω_2(g^{i}·A6)|", c) for i, c in zip((1, 3, 5), m10_counts)]
        + [(f"|Ω_3(φ^{i}·S)|", c) for i, c in zip((1, 2), phi_counts)],
        "counts equal across coprime powers",
        len(set(m10_counts)) == 1 and len(set(phi_counts)) == 1,
    )


def _odd_prime_entries(corpus: Corpus, sections: Iterable[str]) -> list[CorpusEntry]:
    seen: set[tuple[str, int]] = set()
    out = []
    for name in sections:
        for entry in corpus[name]:
            key = (entry.group, entry.prime)
            if entry.prime % 2 and key not in seen:
                seen.add(key)
                out.append(entry)
    return out


def verify_prosolvable_threshold(corpus: Corpus | None = None, *, config: RunConfig | None = None) -> list[VerificationOutcome]:
    """Se P_p(G) > p/(2(p-1)) para p ímpar, G é solúvel."""
    corpus = corpus or default_corpus()
    config = config or RunConfig()
    outcomes = []
    for entry in _odd_prime_entries(corpus, ("podd", "local", "prosolvable")):
        group = entry.build()
        p = entry.prime
        prob = p_census(group, p, cap=config.enum_cap).probability
        threshold = Fraction(p, 2 * (p - 1))
        solvable = is_solvable(group)
        outcomes.append(
            _outcome(
                "prosolvable",
                {"group": entry.group, "p": p},
                [("P_p(G)", prob), ("p/(2(p-1))", threshold), ("solvable", solvable)],
                "P_p(G) > p/(2(p-1)) implies G solvable",
                prob <= threshold or solvable,
            )
        )
    return outcomes


def verify_sylow_bounds(corpus: Corpus | None = None, *, config: RunConfig | None = None) -> list[VerificationOutcome]:
    corpus = corpus or default_corpus()
    config = config or RunConfig()
    seen: set[tuple[str, int]] = set()
    outcomes = []
    for name in ("podd", "local", "prosolvable"):
        for entry in corpus[name]:
            if (entry.group, entry.prime) in seen:
                continue
            seen.add((entry.group, entry.prime))
            outcomes.append(sylow_bound_check(entry.build(), entry.prime, cap=config.normalizer_cap))
    return outcomes


def _non_two(elements: Iterable[Permutation]) -> int:
    return sum(1 for x in elements if not is_p_element(x, 2))


def verify_self_normalizing(*, config: RunConfig | None = None) -> VerificationOutcome:
    """
    M10: a classe externa é só de 2-elementos e o Sylow-2 é autonormalizante (|N(P)| = |P| = 16).
    PGL(2,9) e Sym(6) servem de contraste: suas classes externas têm elementos fora de Ω_2.
    """
    config = config or RunConfig()
    handle, socle = m10()
    P = sylow(handle, 2, cap=config.normalizer_cap)
    N = normalizer(handle, P, cap=config.normalizer_cap)
    m10_bad = _non_two(make_coset(handle, socle, _m10_outer_rep()).elements())
    pgl = outer_coset("diag", 9)
    sym6, alt6 = symmetric_group(6), alternating_group(6)
    odd6 = make_coset(sym6, alt6, next(g for g in sym6.generators if not alt6.contains(g)))
    pgl_bad = _non_two(pgl.elements())
    sym_bad = _non_two(odd6.elements())
    contrast = [
        (f"|N(P)| in {g.label}", normalizer(g, sylow(g, 2), cap=config.normalizer_cap).order)
        for g in (classical_group("pgl2", 9), sym6)
    ]
    return _outcome(
        "self_normalizing",
        {"group": "m10", "p": 2},
        [
            ("|P|", P.order),
            ("|N(P)|", N.order),
            ("non 2-elements in M10 outer coset", m10_bad),
            ("non 2-elements in PGL(2,9) outer coset", pgl_bad),
            ("non 2-elements in Sym(6) odd coset", sym_bad),
            *contrast,
        ],
        "outer coset ⊆ Ω_2 and N(P) = P in M10; contrasts have outer non 2-elements",
        m10_bad == 0 and P.order == N.order == 16 and pgl_bad > 0 and sym_bad > 0,
    )


def verify_frobenius_centralizer(*, config: RunConfig | None = None) -> VerificationOutcome:
    """
    |C_S(φ)| = 12 em S = PSL(2,27); y = φz (z involução de C_S(φ)) tem ordem 6 e |C_S(y)| = 4,
    logo a classe de y em φS tem |S|/4 elementos fora de Ω_3.
    """
    config = config or RunConfig()
    coset = outer_coset("frob", 27)
    socle, phi = coset.socle, coset.rep
    c_phi = centralizer(socle, phi, cap=config.normalizer_cap)
    z = next((x for x in c_phi.elements() if order_of(x) == 2), None)
    if z is None:
        return _outcome("frobenius_centralizer", {"q": 27}, [("|C_S(φ)|", c_phi.order)], "C_S(φ) has an involution", False)
    y = phi * z
    c_y = centralizer(socle, y, cap=config.normalizer_cap)
    count = coset_p_census(coset, 3, cap=config.enum_cap).count
    avoided = socle.order // c_y.order if c_y.order else 0
    return _outcome(
        "frobenius_centralizer",
        {"q": 27},
        [
            ("|C_S(φ)|", c_phi.order),
            ("order(y)", order_of(y)),
            ("|C_S(y)|", c_y.order),
            ("|y^S|", avoided),
            ("|Ω_3(φS)|", count),
        ],
        "|C_S(φ)| = 12, order(y) = 6, |C_S(y)| = 4, |Ω_3(φS)| = |S| - |S|/4",
        c_phi.order == 12 and order_of(y) == 6 and c_y.order == 4 and count == socle.order - avoided,
    )


def verify_gamma_table(*, config: RunConfig | None = None) -> VerificationOutcome:
    """Maior |Ω_2(gS)|/|S| externo por par (S, supergrupo); só a família de A6 chega a 1."""
    config = config or RunConfig()
    computed: list[tuple[str, object]] = []
    passed = True
    for socle_spec, over_spec in GAMMA_PAIRS:
        result = gamma_simple(
            build_group(socle_spec), build_group(over_spec), cap=config.enum_cap, quotient_cap=config.quotient_cap
        )
        computed.append((f"γ({socle_spec} in {over_spec})", result.outer_ratio))
        reaches_one = result.outer_ratio == 1
        passed = passed and reaches_one == (socle_spec == A6_SOCLE)
    return _outcome("gamma", {"p": 2}, computed, "outer ratio = 1 only for the A6 family", passed)


def verify_gxfinite_halving(corpus: Corpus | None = None, *, config: RunConfig | None = None) -> list[VerificationOutcome]:
    """Se C_N(g) ≠ N então P_p(g,G) <= P_p(gN,G/N)/2."""
    corpus = corpus or default_corpus()
    config = config or RunConfig()
    outcomes = []
    for entry in corpus["gxfinite"]:
        try:
            params, identity = _gxfinite_setup(entry, config)
        except HypothesisSkip as e:
            outcomes.append(_skipped("gxfinite_halving", {"group": entry.group, "p": entry.prime}, str(e)))
            continue
        if identity.centralizes:
            outcomes.append(_skipped("gxfinite_halving", params, "g centraliza N"))
            continue
        outcomes.append(
            _outcome(
                "gxfinite_halving",
                params,
                [("P_p(g,G)", identity.p_g), ("P_p(gN,G/N)/2", identity.p_gn / 2)],
                "P_p(g,G) <= P_p(gN,G/N)/2",
                identity.p_g <= identity.p_gn / 2,
            )
        )
    return outcomes


# --- registro ---

ClaimRunner = Callable[[Corpus, RunConfig], list[VerificationOutcome]]


def _towers(corpus: Corpus, config: RunConfig) -> list[VerificationOutcome]:
    return [tower_outcome(verify_towers(family, cap=config.enum_cap)) for family in TOWER_FAMILIES]


CLAIMS: dict[str, ClaimRunner] = {
    "m10": lambda corpus, config: [verify_m10(cap=config.enum_cap)],
    "towers": _towers,
    "l23": lambda corpus, config: [verify_l23_corx3(cap=config.enum_cap)],
    "anchepsl": lambda corpus, config: [verify_anchepsl(f, cap=config.enum_cap) for f in (2, 4)],
    "podd": lambda corpus, config: verify_podd(corpus, config=config),
    "local": lambda corpus, config: verify_local_section4(corpus, config=config),
    "onlypsl": lambda corpus, config: verify_onlypsl_negatives(),
    "an": lambda corpus, config: [verify_an_proportions(16)],
    "coset_bounds": lambda corpus, config: verify_coset_bounds(corpus, config=config),
    "samenumber": lambda corpus, config: [verify_samenumber(cap=config.enum_cap)],
    "prosolvable": lambda corpus, config: verify_prosolvable_threshold(corpus, config=config),
    "sylow_bounds": lambda corpus, config: verify_sylow_bounds(corpus, config=config),
    "self_normalizing": lambda corpus, config: [verify_self_normalizing(config=config)],
    "frobenius_centralizer": lambda corpus, config: [verify_frobenius_centralizer(config=config)],
    "gamma": lambda corpus, config: [verify_gamma_table(config=config)],
    "gxfinite_halving": lambda corpus, config: verify_gxfinite_halving(corpus, config=config),
}


def run_claim(name: str, corpus: Corpus | None = None, config: RunConfig | None = None) -> list[VerificationOutcome]:
    if name not in CLAIMS:
        raise InvalidParameterError(f"verificação desconhecida: {name}")
    return CLAIMS[name](corpus or default_corpus(), config or RunConfig())

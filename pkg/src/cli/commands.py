"""
Subcomandos da CLI. Cada comando monta a lista completa de relatórios antes de emitir,
então erro de uso nunca deixa saída parcial. Códigos: 0 ok, 1 verificação reprovada, 2 erro de uso.
"""

import argparse
import logging
import sys
from math import factorial
from typing import Callable, Sequence, TextIO

from src.census import (
    baer_intersection,
    coset_breakdown,
    coset_p_census,
    derive_seed,
    gamma_simple,
    mc_estimate,
    omega_pair_set,
    p_census,
    pair_probability,
    sylow_report,
)
from src.census.counts import CENSUS_METHODS
from src.census.pairs import PAIR_METHODS
from src.census.partitions import sn_p_counts
from src.cli.group_spec import build_group, parse_coset_spec
from src.config import OUTPUT_FORMATS, RunConfig, load_run_config
from src.errors import CapExceededError, GroupComputationError, HypothesisSkip, NotNormalError
from src.permcore import parse_cycles, require_prime
from src.reports import CensusReport, NamedValue, Report, VerificationOutcome, get_emitter
from src.verify import CLAIMS, TOWER_FAMILIES, run_suite, verify_towers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Argumentos válidos para o argparse, mas sem sentido para o comando."""


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="formato de saída (padrão: PEL_FORMAT ou json)")
    common.add_argument("--seed", type=int, default=None, help="semente raiz (padrão: PEL_SEED ou 0)")
    common.add_argument("--workers", type=int, default=None, help="processos para a suíte de verificação")
    common.add_argument("--enum-cap", type=int, default=None)
    common.add_argument("--pair-cap", type=int, default=None)
    common.add_argument("--quotient-cap", type=int, default=None)
    common.add_argument("--normalizer-cap", type=int, default=None)
    common.add_argument("--timings", action="store_true", default=None, help="preenche o campo ms dos resultados")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", action="store_true", help="só avisos e erros no stderr")
    verbosity.add_argument("--verbose", action="store_true", help="logs de depuração no stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="pel", description="Estatística exata de p-elementos em grupos finitos.")
    sub = parser.add_subparsers(dest="command", required=True)

    census = sub.add_parser("census", parents=[common], help="|Ω_p(G)| e P_p(G)")
    census.add_argument("--group", required=True)
    census.add_argument("--prime", type=int, required=True)
    census.add_argument("--method", choices=CENSUS_METHODS, default="auto")

    coset = sub.add_parser("coset", parents=[common], help="censo de classe lateral ou decomposição por N")
    coset.add_argument("--coset", help="TIPO:q com TIPO em diag, frob, diag_frob")
    coset.add_argument("--group")
    coset.add_argument("--normal")
    coset.add_argument("--prime", type=int, required=True)

    sylow = sub.add_parser("sylow", parents=[common], help="|P|, |N_G(P)| e n_p")
    sylow.add_argument("--group", required=True)
    sylow.add_argument("--prime", type=int, required=True)

    pairs = sub.add_parser("pairs", parents=[common], help="Ω_p(g,G) ou P_p(G,G)")
    pairs.add_argument("--group", required=True)
    pairs.add_argument("--prime", type=int, required=True)
    pairs.add_argument("--element", help="elemento em notação de ciclos, ex. '(0 1)(2 3)'")
    pairs.add_argument("--method", choices=PAIR_METHODS, default="cover")

    baer = sub.add_parser("baer", parents=[common], help="interseção de Baer e O_p(G)")
    baer.add_argument("--group", required=True)
    baer.add_argument("--prime", type=int, required=True)

    gamma = sub.add_parser("gamma", parents=[common], help="γ_S: maior razão externa |Ω_p(gS)|/|S| e a da classe trivial")
    gamma.add_argument("--socle", required=True)
    gamma.add_argument("--group", required=True)
    gamma.add_argument("--prime", type=int, default=2)

    tower = sub.add_parser("tower", parents=[common], help="torres G_t, Y_t, X_u e metacíclica")
    tower.add_argument("--family", choices=TOWER_FAMILIES, required=True)
    tower.add_argument("--depth", type=int)
    tower.add_argument("--u", type=int, default=1)
    tower.add_argument("--q", type=int, default=3)
    tower.add_argument("--p", type=int, default=2)
    tower.add_argument("--n", type=int, default=1)
    tower.add_argument("--no-exact", action="store_true", help="só a forma fechada")

    verify = sub.add_parser("verify", parents=[common], help="roda as verificações")
    verify.add_argument("--claim", action="append", help="nome da verificação (repetível); padrão: todas")
    verify.add_argument("--corpus", help="arquivo JSON do corpus (padrão: o embutido)")

    estimate = sub.add_parser("estimate", parents=[common], help="estimativa Monte Carlo com intervalos")
    estimate.add_argument("--group")
    estimate.add_argument("--coset")
    estimate.add_argument("--prime", type=int, required=True)
    estimate.add_argument("--samples", type=int, default=10**4)

    snprop = sub.add_parser("snprop", parents=[common], help="proporções exatas em S_n, A_n e S_n∖A_n")
    snprop.add_argument("--n", type=int, required=True)
    snprop.add_argument("--prime", type=int, default=2)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return load_run_config(
        enum_cap=args.enum_cap,
        pair_cap=args.pair_cap,
        quotient_cap=args.quotient_cap,
        normalizer_cap=args.normalizer_cap,
        seed=args.seed,
        output_format=args.format,
        workers=args.workers,
        timings=args.timings,
    )


# --- comandos ---


def cmd_census(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    return [p_census(build_group(args.group), require_prime(args.prime), cap=config.enum_cap, method=args.method)]


def cmd_coset(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    p = require_prime(args.prime)
    if args.coset:
        if args.group or args.normal:
            raise UsageError("use --coset ou --group/--normal, não ambos")
        return [coset_p_census(parse_coset_spec(args.coset), p, cap=config.enum_cap)]
    if not (args.group and args.normal):
        raise UsageError("informe --coset ou --group e --normal")
    group, normal = build_group(args.group), build_group(args.normal)
    return list(coset_breakdown(group, normal, p, cap=config.enum_cap, quotient_cap=config.quotient_cap))


def cmd_sylow(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    return [sylow_report(build_group(args.group), require_prime(args.prime), cap=config.normalizer_cap)]


def cmd_pairs(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    group = build_group(args.group)
    p = require_prime(args.prime)
    if args.element:
        try:
            g = parse_cycles(args.element, group.degree)
        except ValueError as e:
            raise UsageError(f"elemento inválido: {e}") from e
        return [omega_pair_set(group, g, p, cap=config.pair_cap, method=args.method)]
    return [pair_probability(group, p, cap=config.pair_cap, method=args.method)]


def cmd_baer(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    group = build_group(args.group)
    p = require_prime(args.prime)
    op, measure = baer_intersection(group, p, cap=config.pair_cap)
    return [
        VerificationOutcome(
            claim="baer",
            params={"group": group.label, "p": p},
            computed=[NamedValue.of("|O_p(G)|", op.order), NamedValue.of("|O_p(G)|/|G|", measure)],
            relation="∩ Ω_p(g,G) = O_p(G)",
            passed=True,
        )
    ]


def cmd_gamma(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    socle, group = build_group(args.socle), build_group(args.group)
    result = gamma_simple(
        socle,
        group,
        prime=require_prime(args.prime),
        cap=config.enum_cap,
        quotient_cap=config.quotient_cap,
    )
    return [result.to_report()]


def cmd_tower(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    return [
        verify_towers(
            args.family,
            args.depth,
            u=args.u,
            q=args.q,
            p=args.p,
            n=args.n,
            cap=config.enum_cap,
            exact=not args.no_exact,
        )
    ]


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    claims = args.claim or list(CLAIMS)
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        raise UsageError(f"verificações desconhecidas: {', '.join(unknown)} (disponíveis: {', '.join(CLAIMS)})")
    return list(run_suite(claims, config, corpus_path=args.corpus))


def cmd_estimate(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    if bool(args.group) == bool(args.coset):
        raise UsageError("informe exatamente um de --group ou --coset")
    if args.samples < 1:
        raise UsageError("--samples deve ser positivo")
    target = build_group(args.group) if args.group else parse_coset_spec(args.coset)
    p = require_prime(args.prime)
    seed = derive_seed(config.seed, f"{target.label}:{p}:{args.samples}")
    return [mc_estimate(target, p, args.samples, seed)]


def cmd_snprop(args: argparse.Namespace, config: RunConfig) -> list[Report]:
    n, p = args.n, require_prime(args.prime)
    even, odd = sn_p_counts(n, p)
    order = factorial(n)
    return [
        CensusReport(group=f"sym:{n}", prime=p, count=even + odd, order=order),
        CensusReport(group=f"alt:{n}", prime=p, count=even, order=order // 2),
        CensusReport(group=f"sym:{n}", prime=p, count=odd, order=order // 2, coset=f"sym:{n}∖alt:{n}"),
    ]


COMMANDS: dict[str, Callable[[argparse.Namespace, RunConfig], list[Report]]] = {
    "census": cmd_census,
    "coset": cmd_coset,
    "sylow": cmd_sylow,
    "pairs": cmd_pairs,
    "baer": cmd_baer,
    "gamma": cmd_gamma,
    "tower": cmd_tower,
    "verify": cmd_verify,
    "estimate": cmd_estimate,
    "snprop": cmd_snprop,
}


def _log_level(args: argparse.Namespace) -> int:
    if args.quiet:
        return logging.WARNING
    if args.verbose:
        return logging.DEBUG
    return logging.INFO


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """Interpreta argv, executa o comando e emite os relatórios; devolve o código de saída."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    logging.getLogger().setLevel(_log_level(args))
    stdout = stdout or sys.stdout
    try:
        config = config_from_args(args)
        reports = COMMANDS[args.command](args, config)
    except (UsageError, HypothesisSkip, CapExceededError, NotNormalError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except GroupComputationError as e:
        logger.exception("Erro no cálculo: %s", e)
        return EXIT_FAILED
    get_emitter(config.output_format).emit(reports, stdout)
    if any(getattr(r, "failed", False) for r in reports):
        return EXIT_FAILED
    return EXIT_OK

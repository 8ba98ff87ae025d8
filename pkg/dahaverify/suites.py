"""
Suite dispatch.

run_suite turns a SuiteConfig into one Report. Random modes run the
suite once per seed (in a joblib pool when config.jobs > 1) and merge
the per-seed reports; check names are prefixed with the seed when there
is more than one run.
"""

from typing import Callable, Dict, List

from joblib import Parallel, delayed

from .config import SuiteConfig
from .daha import (
    CyclotomicParams,
    verify_daha_presentation,
    verify_dunkl_commutativity,
    verify_power_sums,
    verify_symmetrizer,
)
from .logs import get_logger
from .macdonald import verify_gamma_conjugation, verify_macdonald
from .ncverify.audit import golden_audit, graded_dimension_audit, straightening_audit
from .ncverify.identities import identity_suite
from .ncverify.morphisms import MORPHISM_NAMES, check_morphism
from .ncverify.presentations import build_presentation
from .ncverify.rewriting import check_confluence
from .ncverify.rmatrix import check_r_constants
from .report import Report, ReportBuilder
from .toroidal import GKLOContext, ModeWindow, verify_correspondence, verify_toroidal_relations

log = get_logger(__name__)

SuiteRunner = Callable[[SuiteConfig, int], Report]


def _cyclotomic(config: SuiteConfig, seed: int) -> CyclotomicParams:
    field_ = config.context(seed).make_field()
    if config.z_literals is not None:
        return CyclotomicParams.from_literals(field_, config.n, config.z_literals)
    return CyclotomicParams.generic(field_, config.n, config.ell)


def _daha_presentation(config: SuiteConfig, seed: int) -> Report:
    return verify_daha_presentation(config.n, config.context(seed))


def _symmetrizer(config: SuiteConfig, seed: int) -> Report:
    return verify_symmetrizer(config.n, config.context(seed))


def _dunkl(config: SuiteConfig, seed: int) -> Report:
    return verify_dunkl_commutativity(config.n, config.ell, config.context(seed))


def _power_sums(config: SuiteConfig, seed: int) -> Report:
    return verify_power_sums(config.n, config.ell, config.context(seed), config.effective_degree)


def _macdonald(config: SuiteConfig, seed: int) -> Report:
    return verify_macdonald(config.n, config.effective_degree, config.context(seed))


def _gamma(config: SuiteConfig, seed: int) -> Report:
    ctx = config.context(seed)
    return verify_gamma_conjugation(config.n, _cyclotomic(config, seed), config.effective_degree, ctx)


def _toroidal(config: SuiteConfig, seed: int) -> Report:
    ctx = config.context(seed)
    field_ = ctx.make_field()
    if config.z_literals is not None:
        gctx = GKLOContext.from_literals(field_, config.n, config.z_literals)
    else:
        gctx = GKLOContext.generic(field_, config.n, config.ell)
    window = ModeWindow(config.rmin, config.rmax)
    return verify_toroidal_relations(gctx, window, ctx, span_bound=config.limits.max_window_span)


def _correspondence(config: SuiteConfig, seed: int) -> Report:
    return verify_correspondence(
        config.n, config.ell, config.effective_degree, config.context(seed), config.z_literals
    )


def _r_constants(config: SuiteConfig, seed: int) -> Report:
    return check_r_constants(config.n, config.context(seed))


def _presentation(config: SuiteConfig, seed: int):
    field_ = config.context(seed, ell=max(config.ell, 1)).make_field()
    return build_presentation(config.presentation, config.n, field_)


def _pbw_audit(config: SuiteConfig, seed: int) -> Report:
    return graded_dimension_audit(_presentation(config, seed), config.effective_degree, config.slack)


def _straightening(config: SuiteConfig, seed: int) -> Report:
    return straightening_audit(_presentation(config, seed), seed=seed, budget=config.rewrite_budget)


def _confluence(config: SuiteConfig, seed: int) -> Report:
    return check_confluence(_presentation(config, seed), config.rewrite_budget)


def _golden(config: SuiteConfig, seed: int) -> Report:
    return golden_audit(config.context(seed, ell=1))


def _morphisms(config: SuiteConfig, seed: int) -> Report:
    ctx = config.context(seed, ell=max(config.ell, 1))
    z = None
    if config.z_literals:
        z = ctx.make_field().from_fraction(config.z_literals[0])
    names = [config.morphism] if config.morphism else [f"{MORPHISM_NAMES[0]}(2)", MORPHISM_NAMES[1]]
    if len(names) == 1:
        return check_morphism(names[0], config.n, config.effective_degree, ctx, z, config.slack)
    builder = ReportBuilder("morphisms", {"n": config.n, "degree": config.effective_degree})
    for name in names:
        report = check_morphism(name, config.n, config.effective_degree, ctx, z, config.slack)
        builder.extend(report, prefix=f"{name}:")
    return builder.build()


def _identity_suite(config: SuiteConfig, seed: int) -> Report:
    ctx = config.context(seed, ell=max(config.ell, 1))
    return identity_suite(config.n, max(config.ell, 2), ctx, config.effective_degree)


SUITE_RUNNERS: Dict[str, SuiteRunner] = {
    "daha-presentation": _daha_presentation,
    "symmetrizer": _symmetrizer,
    "dunkl-commutativity": _dunkl,
    "power-sums": _power_sums,
    "macdonald": _macdonald,
    "gamma-conjugation": _gamma,
    "toroidal-relations": _toroidal,
    "correspondence": _correspondence,
    "r-constants": _r_constants,
    "pbw-audit": _pbw_audit,
    "straightening": _straightening,
    "confluence": _confluence,
    "golden": _golden,
    "morphisms": _morphisms,
    "identity-suite": _identity_suite,
}


def run_once(config: SuiteConfig, seed: int) -> Report:
    """One suite run; errors outside any check become a single failed check."""
    builder = ReportBuilder(config.suite, {"seed": seed})
    reports: List[Report] = []

    def run() -> bool:
        reports.append(SUITE_RUNNERS[config.suite](config, seed))
        return True

    builder.run("setup", run)
    if reports:
        return reports[0]
    return builder.build()


def run_suite(config: SuiteConfig) -> Report:
    seeds = config.run_seeds()
    log.info("run.start", suite=config.suite, seeds=seeds, jobs=config.jobs)
    if config.jobs > 1 and len(seeds) > 1:
        runs = Parallel(n_jobs=min(config.jobs, len(seeds)))(delayed(run_once)(config, s) for s in seeds)
    else:
        runs = [run_once(config, s) for s in seeds]
    builder = ReportBuilder(config.suite, config.params())
    builder.params["runs"] = {str(s): r.params for s, r in zip(seeds, runs)}
    for seed, report in zip(seeds, runs):
        builder.extend(report, prefix=f"seed[{seed}]:" if len(seeds) > 1 else "")
    return builder.build()

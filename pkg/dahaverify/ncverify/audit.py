"""
Graded PBW dimension audits and bounded-degree ideal membership.

The truncated ideal S_D is spanned by the padded elements u * rel * v of
length at most D. Echelon columns run longest word first, so the rows
whose pivot has length <= k span S_D intersected with the filtration
piece F_k. Since S_D lies in the ideal, #words(<= k) - rank is an upper
bound on the true dimension of F_k modulo the ideal; standard monomials
span, so equality with their count certifies they form a basis there.
"""

import json
from functools import lru_cache
from importlib import resources
from typing import Dict, Optional, Tuple

from ..errors import DegreeOverflow, MembershipFail
from ..logs import get_logger
from ..report import CheckStatus, Report, ReportBuilder
from ..scalars import ExactField, ParamContext, ScalarField
from .freealg import FreeAlgElem
from .linalg import SparseEchelon
from .presentations import Presentation, build_presentation
from .rewriting import DEFAULT_BUDGET, RewriteSystem, all_words, random_words, rewrite_system

log = get_logger(__name__)

DEFAULT_SLACK = 1
FIXTURE = "golden_n2.json"


@lru_cache(maxsize=16)
def truncated_ideal(pres: Presentation, max_len: int) -> SparseEchelon:
    """Echelon basis of the padded relation elements of length <= max_len."""
    ech = SparseEchelon(pres.field)
    key = pres.word_key
    gens = pres.generators
    rows = 0
    for rel in pres.relations:
        room = max_len - rel.degree()
        for total in range(room + 1):
            for left in range(total + 1):
                for u in all_words(gens, left):
                    for v in all_words(gens, total - left):
                        ech.add({key(u + w + v): c for w, c in rel.terms.items()})
                        rows += 1
    log.debug("audit.truncated_ideal", presentation=pres.title, max_len=max_len, rows=rows, rank=ech.rank)
    return ech


def words_up_to(size: int, k: int, exact_degree: bool = False) -> int:
    if exact_degree:
        return size**k
    return sum(size**i for i in range(k + 1))


def audit_dimensions(pres: Presentation, d: int, slack: int = DEFAULT_SLACK) -> Dict[int, int]:
    """Upper bounds on dim F_k / (I cap F_k) for k = 0..d."""
    ech = truncated_ideal(pres, d + slack)
    lengths = [-key[0] for key in ech.pivots]
    size = len(pres.generators)
    return {k: words_up_to(size, k) - sum(1 for n_ in lengths if n_ <= k) for k in range(d + 1)}


def standard_counts(pres: Presentation, d: int, system: Optional[RewriteSystem] = None) -> Dict[int, int]:
    if pres.pbw:
        return {k: pres.standard_count(k) for k in range(d + 1)}
    system = system or rewrite_system(pres)
    return {k: system.irreducible_count(k) for k in range(d + 1)}


def verdict(upper: int, standard: int) -> str:
    if upper == standard:
        return "equal"
    return "inconclusive" if upper > standard else "unequal"


_STATUS = {"equal": CheckStatus.PASS, "inconclusive": CheckStatus.INCONCLUSIVE, "unequal": CheckStatus.FAIL}


def graded_dimension_audit(pres: Presentation, d: int, slack: int = DEFAULT_SLACK) -> Report:
    """Compare truncated-ideal dimensions with the standard monomial counts."""
    if d < 1:
        raise DegreeOverflow("audit degree must be at least 1", {"d": d})
    builder = ReportBuilder(
        "pbw-audit",
        {"presentation": pres.title, "n": pres.n, "degree": d, "slack": slack, "mode": pres.field.mode},
    )
    dims = audit_dimensions(pres, d, slack)
    standard = standard_counts(pres, d)
    for k in range(1, d + 1):
        v = verdict(dims[k], standard[k])
        builder.add(f"dim[<={k}]", _STATUS[v], None if v == "equal" else f"upper bound {dims[k]} vs standard {standard[k]}")
    builder.params["dimension"] = {str(k): dims[k] for k in range(d + 1)}
    builder.params["standard"] = {str(k): standard[k] for k in range(d + 1)}
    builder.params["top_degree_dimension"] = dims[d] - dims[d - 1]
    builder.params["verdict"] = verdict(dims[d], standard[d])
    builder.params["basis"] = "nondecreasing" if pres.pbw else "irreducible"
    return builder.build()


def linear_normal_form(pres: Presentation, elem: FreeAlgElem, slack: int = 0) -> FreeAlgElem:
    """Remainder of elem against the truncated ideal at deg(elem) + slack."""
    if elem.is_zero():
        return elem
    ech = truncated_ideal(pres, elem.degree() + slack)
    words = {pres.word_key(w): w for w in elem.terms}
    rem = ech.reduce({pres.word_key(w): c for w, c in elem.terms.items()})
    out = {}
    for k, v in rem.items():
        w = words.get(k)
        if w is None:
            w = _word_from_key(pres, k)
        out[w] = v
    return FreeAlgElem(pres.field, out)


def _word_from_key(pres: Presentation, key: Tuple) -> Tuple[str, ...]:
    return tuple(pres.generators[-r] for r in key[1])


def ideal_member(
    pres: Presentation,
    elem: FreeAlgElem,
    d: int,
    slack: int = DEFAULT_SLACK,
    system: Optional[RewriteSystem] = None,
) -> Tuple[bool, FreeAlgElem]:
    """Straighten first; a nonzero remainder gets a bounded linear-algebra retry."""
    if elem.degree() > d:
        raise DegreeOverflow("element exceeds the audit degree", {"degree": elem.degree(), "d": d})
    system = system or rewrite_system(pres)
    rest = system.straighten(elem)
    if rest.is_zero():
        return True, rest
    retry = linear_normal_form(pres, rest, slack)
    return retry.is_zero(), retry


def straightening_audit(
    pres: Presentation,
    count: int = 100,
    max_len: int = 5,
    seed: int = 0,
    la_degree: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> Report:
    """Termination, strategy independence and agreement with linear algebra."""
    system = rewrite_system(pres, budget)
    builder = ReportBuilder(
        "straightening",
        {"presentation": pres.title, "n": pres.n, "words": count, "max_len": max_len, "seed": seed},
    )
    for i, word in enumerate(random_words(pres, count, max_len, seed)):
        label = f"word[{i:03d}]"

        def check(word=word) -> Tuple[bool, Optional[str]]:
            left = system.straighten_word(word, "leftmost")
            right = system.straighten_word(word, "rightmost")
            if not (left - right).is_zero():
                return False, f"strategies disagree on {' '.join(word)}"
            if len(word) <= la_degree:
                linear = linear_normal_form(pres, FreeAlgElem.word(pres.field, word))
                if not (left - linear).is_zero():
                    return False, f"linear normal form differs on {' '.join(word)}"
            return True, None

        builder.run(label, check)
    builder.params["steps"] = system.steps
    return builder.build()


def load_golden(name: str = FIXTURE) -> Dict[str, Dict]:
    text = resources.files("dahaverify.ncverify").joinpath("fixtures").joinpath(name).read_text()
    return json.loads(text)


def cross_check_field(ctx: ParamContext) -> ScalarField:
    """A backend independent of ctx: exact for random modes, a modp draw for exact mode."""
    if ctx.is_random:
        return ExactField(ctx.ell)
    return ParamContext(ell=ctx.ell, mode="modp-random", seed=1, n=2).make_field()


def golden_audit(ctx: Optional[ParamContext] = None, names=None) -> Report:
    """Relation-set counts and structural fingerprints for n = 2.

    A fixture entry without a fingerprint is compared against the same
    presentation built over cross_check_field(ctx) instead.
    """
    golden = load_golden()
    ctx = ctx or ParamContext(mode="modp-random", seed=1, ell=1)
    field_ = ctx.make_field()
    reference = cross_check_field(ctx)
    builder = ReportBuilder("golden", {"n": 2, "schema": golden.get("schema", 1)})
    for title, expect in sorted(golden["presentations"].items()):
        if names and title not in names:
            continue
        pres = build_presentation(title, 2, field_)
        builder.record(f"{title}:generators", len(pres.generators) == expect["generators"], str(len(pres.generators)))
        builder.record(f"{title}:entries", pres.entries == expect["entries"], str(pres.entries))
        if "rules" in expect:
            builder.run(
                f"{title}:rules",
                lambda pres=pres, expect=expect: (
                    len(rewrite_system(pres)) == expect["rules"],
                    str(len(rewrite_system(pres))),
                ),
            )
        recorded = expect.get("fingerprint") or build_presentation(title, 2, reference).fingerprint()
        builder.record(f"{title}:fingerprint", pres.fingerprint() == recorded, pres.fingerprint())
    return builder.build()


def require_member(pres: Presentation, elem: FreeAlgElem, d: int, label: str, slack: int = DEFAULT_SLACK) -> bool:
    """ideal_member that raises MembershipFail with the offending entry."""
    ok, rest = ideal_member(pres, elem, d, slack)
    if not ok:
        raise MembershipFail(f"{label} does not reduce to zero", {"entry": label, "residue": rest.render()[:200]})
    return True

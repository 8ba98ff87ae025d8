"""
Straightening by quadratic rewriting.

Rules come from the fully reduced echelon form of the relation span,
columns in descending degree-lex order: each pivot word is replaced by
minus the rest of its row, so every rewrite strictly lowers the word in
a well-order and reduction terminates. The step budget is a guard, not
a termination argument.
"""

import heapq
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import BadIndex, RewriteBudgetExceeded
from ..logs import get_logger
from ..report import CheckStatus, Report, ReportBuilder
from ..scalars import Scalar
from .freealg import FreeAlgElem, Word
from .linalg import SparseEchelon
from .presentations import Presentation

log = get_logger(__name__)

DEFAULT_BUDGET = 10**6
STRATEGIES = ("leftmost", "rightmost")


class RewriteSystem:
    """Rules word -> FreeAlgElem derived from a presentation."""

    def __init__(self, pres: Presentation, budget: int = DEFAULT_BUDGET):
        self.pres = pres
        self.field = pres.field
        self.budget = budget
        self.rules: Dict[Word, FreeAlgElem] = {}
        self.steps = 0
        self._derive()
        self.lengths = sorted({len(w) for w in self.rules})

    def _derive(self) -> None:
        ech = SparseEchelon(self.field)
        words: Dict[Tuple, Word] = {}
        for rel in self.pres.relations:
            row = {}
            for w, c in rel.terms.items():
                key = self.pres.word_key(w)
                words[key] = w
                row[key] = c
            ech.add(row)
        for col, row in ech.reduced_rows().items():
            rhs = {words[k]: -v for k, v in row.items() if k != col}
            self.rules[words[col]] = FreeAlgElem(self.field, rhs)
        if () in self.rules:
            log.warning("rewrite.trivial_algebra", presentation=self.pres.title)
        log.debug("rewrite.rules", presentation=self.pres.title, rules=len(self.rules))

    def __len__(self) -> int:
        return len(self.rules)

    def find_redex(self, word: Word, strategy: str = "leftmost") -> Optional[Tuple[int, int]]:
        positions: Iterable[int] = range(len(word))
        if strategy == "rightmost":
            positions = reversed(range(len(word)))
        elif strategy not in STRATEGIES:
            raise BadIndex(f"unknown strategy {strategy!r}", {"known": STRATEGIES})
        for pos in positions:
            for size in self.lengths:
                if pos + size <= len(word) and word[pos : pos + size] in self.rules:
                    return pos, size
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def straighten(self, elem: FreeAlgElem, strategy: str = "leftmost") -> FreeAlgElem:
        """Normal form of elem; the largest pending word is rewritten first."""
        key = self.pres.word_key
        pending: Dict[Word, Scalar] = dict(elem.terms)
        heap = [(key(w), w) for w in pending]
        heapq.heapify(heap)
        result: Dict[Word, Scalar] = {}
        steps = 0
        while heap:
            _, w = heapq.heappop(heap)
            c = pending.pop(w, None)
            if c is None or self.field.is_zero(c):
                continue
            redex = self.find_redex(w, strategy)
            if redex is None:
                result[w] = c
                continue
            steps += 1
            if steps > self.budget:
                raise RewriteBudgetExceeded(
                    "straightening exceeded its step budget",
                    {"budget": self.budget, "presentation": self.pres.title},
                )
            pos, size = redex
            head, tail = w[:pos], w[pos + size :]
            for w2, c2 in self.rules[w[pos : pos + size]].terms.items():
                new = head + w2 + tail
                if new in pending:
                    pending[new] = pending[new] + c * c2
                else:
                    pending[new] = c * c2
                    heapq.heappush(heap, (key(new), new))
        self.steps += steps
        return FreeAlgElem(self.field, result)

    def straighten_word(self, word: Sequence[str], strategy: str = "leftmost") -> FreeAlgElem:
        for g in word:
            self.pres.rank(g)
        return self.straighten(FreeAlgElem.word(self.field, tuple(word)), strategy)

    def overlaps(self) -> List[Word]:
        """Words abc with ab and bc both rule words."""
        pairs = [w for w in self.rules if len(w) == 2]
        by_head: Dict[str, List[Word]] = {}
        for w in pairs:
            by_head.setdefault(w[0], []).append(w)
        out = []
        for a, b in pairs:
            for _, c in by_head.get(b, []):
                out.append((a, b, c))
        return sorted(out, key=self.pres.word_key)

    def overlap_defect(self, word: Word) -> FreeAlgElem:
        """Difference of the two one-step resolutions, straightened."""
        a, b, c = word
        left = self.rules[(a, b)] * FreeAlgElem.gen(self.field, c)
        right = FreeAlgElem.gen(self.field, a) * self.rules[(b, c)]
        return self.straighten(left) - self.straighten(right)

    def is_pbw_oriented(self) -> bool:
        """Rule words are exactly the descending pairs."""
        return set(self.rules) == set(self.pres.descending_pairs())

    def irreducible_count(self, d: int, exact_degree: bool = False) -> int:
        """Words of length <= d avoiding every rule word (rules of length <= 2)."""
        gens = [g for g in self.pres.generators if (g,) not in self.rules]
        if () in self.rules:
            return 0
        if any(len(w) > 2 for w in self.rules):
            raise BadIndex("irreducible counting needs rules of length at most two")
        counts = {g: 1 for g in gens}
        total = 1 if not exact_degree or d == 0 else 0
        for k in range(1, d + 1):
            if not exact_degree or k == d:
                total += sum(counts.values())
            counts = {
                g: sum(v for h, v in counts.items() if (h, g) not in self.rules) for g in gens
            }
        return total


@lru_cache(maxsize=32)
def rewrite_system(pres: Presentation, budget: int = DEFAULT_BUDGET) -> RewriteSystem:
    return RewriteSystem(pres, budget)


def straighten(pres: Presentation, word: Sequence[str], strategy: str = "leftmost") -> FreeAlgElem:
    """Normal form of a single word under the presentation's rules."""
    return rewrite_system(pres).straighten_word(word, strategy)


def check_confluence(pres: Presentation, budget: int = DEFAULT_BUDGET) -> Report:
    system = rewrite_system(pres, budget)
    builder = ReportBuilder(
        "confluence", {"presentation": pres.title, "n": pres.n, "rules": len(system)}
    )
    if pres.pbw:
        builder.run(
            "orientation",
            lambda: (system.is_pbw_oriented(), f"{len(system)} rules vs {len(pres.descending_pairs())} descending pairs"),
        )
    defects = []
    for word in system.overlaps():
        defect = system.overlap_defect(word)
        if not defect.is_zero():
            defects.append((word, defect))
    builder.add(
        "overlaps",
        CheckStatus.PASS if not defects else CheckStatus.FAIL,
        None if not defects else f"{len(defects)} unresolved, first {' '.join(defects[0][0])}: {defects[0][1].render()}",
    )
    builder.params["overlaps"] = len(system.overlaps())
    return builder.build()


def random_words(pres: Presentation, count: int, max_len: int, seed: int) -> List[Word]:
    rng = np.random.default_rng(seed)
    gens = pres.generators
    out = []
    for _ in range(count):
        size = int(rng.integers(1, max_len + 1))
        out.append(tuple(gens[int(i)] for i in rng.integers(0, len(gens), size=size)))
    return out


def all_words(gens: Sequence[str], size: int) -> Iterable[Word]:
    return product(gens, repeat=size)

"""Document-level co-occurrence statistics between extracted keywords.

Each document contributes one transaction: the set of its top-k keywords.
Size-2 itemsets over those transactions give joint counts, from which two
relatedness measures are derived:

* ``pmi``: ln(p(a,b) / (p(a) p(b))), zero at exact independence, symmetric.
* ``lr``: p(a|b) / p(a|not b), one at exact independence, asymmetric.

All probabilities are transaction-relative: p(a) = c_a / n over the n
keyword sets, the same universe the joint counts come from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ConditioningError, UsageError
from .index import Index
from .keywords import DEFAULT_K, DEFAULT_VARIANT, extract_keywords

MEASURES = ("pmi", "lr")
DEFAULT_MEASURE = "pmi"
DEFAULT_MIN_SUPPORT = 2
DEFAULT_NEIGHBORS = 7

LR_DIRECTIONS = ("a_given_b", "b_given_a")


@dataclass(frozen=True)
class TransactionSet:
    transactions: dict[str, frozenset[str]]  # doc_id -> keyword set
    vocab: frozenset[str]
    n: int

    def __post_init__(self):
        union = frozenset().union(*self.transactions.values()) if self.transactions else frozenset()
        if self.vocab != union:
            raise ValueError("vocab must equal the union of all transactions")
        if self.n != len(self.transactions):
            raise ValueError("n must equal the number of transactions")

    @classmethod
    def from_sets(cls, transactions: dict[str, set[str] | frozenset[str]]) -> "TransactionSet":
        frozen = {doc_id: frozenset(terms) for doc_id, terms in transactions.items()}
        vocab = frozenset().union(*frozen.values()) if frozen else frozenset()
        return cls(frozen, vocab, len(frozen))


@dataclass(frozen=True)
class PairStats:
    a: str
    b: str
    c_a: int  # transactions containing a
    c_b: int
    c_ab: int  # transactions containing both
    n: int

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError("pair must be stored with a <= b")
        if not 1 <= self.c_ab <= min(self.c_a, self.c_b):
            raise ValueError("need 1 <= c_ab <= min(c_a, c_b)")
        if max(self.c_a, self.c_b) > self.n:
            raise ValueError("marginal counts cannot exceed n")

    @property
    def p_a(self) -> float:
        return self.c_a / self.n

    @property
    def p_b(self) -> float:
        return self.c_b / self.n

    @property
    def p_ab(self) -> float:
        return self.c_ab / self.n


def build_transactions(index: Index, k: int = DEFAULT_K, variant: str = DEFAULT_VARIANT) -> TransactionSet:
    """One keyword-set transaction per indexed document.

    Documents with no kept tokens contribute an empty set and still count
    toward n.
    """
    transactions = {
        doc_id: frozenset(ks.term for ks in extract_keywords(index, doc_id, k, variant))
        for doc_id in index.doc_meta
    }
    vocab = frozenset().union(*transactions.values()) if transactions else frozenset()
    return TransactionSet(transactions, vocab, index.n)


def pair_counts(tx: TransactionSet, min_support: int = DEFAULT_MIN_SUPPORT) -> list[PairStats]:
    """Exact counts for every term pair co-occurring in >= min_support transactions.

    Pairs are canonical (a < b) and returned sorted by (a, b).
    """
    if min_support < 1:
        raise UsageError("min_support must be >= 1")
    marginals: dict[str, int] = {}
    joints: dict[tuple[str, str], int] = {}
    for terms in tx.transactions.values():
        for term in terms:
            marginals[term] = marginals.get(term, 0) + 1
        for a, b in combinations(sorted(terms), 2):
            joints[(a, b)] = joints.get((a, b), 0) + 1
    return [
        PairStats(a, b, marginals[a], marginals[b], c_ab, tx.n)
        for (a, b), c_ab in sorted(joints.items())
        if c_ab >= min_support
    ]


def pmi(ps: PairStats) -> float:
    """Pointwise mutual information ln(p(a,b) / (p(a) p(b)))."""
    return math.log(ps.p_ab / (ps.p_a * ps.p_b))


def likelihood_ratio(ps: PairStats, direction: str = "a_given_b") -> float:
    """Conditional ratio p(x|y) / p(x|not y) for the chosen direction.

    When the target term never occurs without the conditioning term the
    zero numerator count is replaced by 0.5, which keeps the ratio finite
    without disturbing the exact-independence identity LR = 1.
    """
    if direction == "a_given_b":
        target_c, cond_c = ps.c_a, ps.c_b
    elif direction == "b_given_a":
        target_c, cond_c = ps.c_b, ps.c_a
    else:
        raise UsageError(f"unknown direction {direction!r} (expected one of {', '.join(LR_DIRECTIONS)})")
    if cond_c == ps.n:
        raise ConditioningError(
            "cannot condition on a term that occurs in every transaction (empty complement)"
        )
    p_given = ps.c_ab / cond_c
    rest = target_c - ps.c_ab
    numerator = rest if rest > 0 else 0.5
    p_given_not = numerator / (ps.n - cond_c)
    return p_given / p_given_not


def _check_measure(measure: str) -> None:
    if measure not in MEASURES:
        raise UsageError(f"unknown measure {measure!r} (expected one of {', '.join(MEASURES)})")


def related_terms(
    stats: list[PairStats], term: str, measure: str = DEFAULT_MEASURE, k: int = DEFAULT_NEIGHBORS
) -> list[tuple[str, float]]:
    """Top k neighbors of a term over the materialized pairs.

    LR is evaluated in the neighbor-given-query direction.  Pairs whose LR
    direction is undefined (the query term occurs in every transaction) are
    skipped.  A term with no pairs yields an empty list.
    """
    _check_measure(measure)
    if k < 1:
        raise UsageError("k must be >= 1")
    scored = []
    for ps in stats:
        if term == ps.a:
            neighbor, direction = ps.b, "b_given_a"
        elif term == ps.b:
            neighbor, direction = ps.a, "a_given_b"
        else:
            continue
        if measure == "pmi":
            value = pmi(ps)
        else:
            try:
                value = likelihood_ratio(ps, direction)
            except ConditioningError:
                continue
        scored.append((neighbor, value))
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored[:k]

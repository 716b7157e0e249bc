"""Greedy k-binomial expansions, the k-boundary operator, and M-sequence tests.

Every integer m >= 1 has a unique expansion

    m = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_s, s)

with a_k > a_{k-1} > ... > a_s >= s >= 1, found greedily by taking the
largest admissible binomial at each level. The k-boundary of m replaces
each C(a, t) in that expansion with C(a-1, t-1). A sequence
(n_0, n_1, ...) of nonnegative integers is an M-sequence when n_0 = 1 and
boundary(n_k, k) <= n_{k-1} for every k >= 1. Macaulay's theorem makes
this equivalent to the sequence being the degree-count profile of some
multicomplex (a set of monomials closed under divisibility);
oracle_is_m_sequence checks that characterization directly by exhaustive
search and exists to keep the fast arithmetic test honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from .errors import BudgetExceededError
from .exactnum import binomial

__all__ = [
    "MacaulayExpansion",
    "MSequenceVerdict",
    "macaulay_expand",
    "boundary",
    "is_m_sequence",
    "oracle_is_m_sequence",
    "ORACLE_BUDGET",
    "ORACLE_WORK_CAP",
]

# The exhaustive multicomplex search always accepts sequences whose entries
# sum to at most ORACLE_BUDGET; past that it still runs if the bound on
# candidate sets stays under ORACLE_WORK_CAP, else it refuses.
ORACLE_BUDGET = 25
ORACLE_WORK_CAP = 1_000_000


@dataclass(frozen=True)
class MacaulayExpansion:
    """The greedy k-binomial expansion of a positive integer.

    terms holds (a, idx) pairs meaning C(a, idx), with idx strictly
    decreasing from k, each idx >= 1, the a values strictly decreasing,
    and a >= idx throughout.
    """

    k: int
    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(binomial(a, t) for a, t in self.terms)


def macaulay_expand(value: int, k: int) -> MacaulayExpansion:
    """Greedy k-binomial expansion of value >= 1.

    value = 0 is rejected here; boundary() handles it directly as the
    empty expansion.
    """
    if k < 1:
        raise ValueError(f"macaulay_expand: k must be >= 1, got {k}")
    if value < 1:
        raise ValueError(f"macaulay_expand: value must be >= 1, got {value}")
    terms = []
    rem = value
    t = k
    while rem > 0:
        # largest a with C(a, t) <= rem; the greedy choice keeps both the
        # a values and the indices strictly decreasing
        a = t
        while binomial(a + 1, t) <= rem:
            a += 1
        terms.append((a, t))
        rem -= binomial(a, t)
        t -= 1
    return MacaulayExpansion(k, tuple(terms))


def boundary(value: int, k: int) -> int:
    """The k-boundary: each C(a, t) of the expansion becomes C(a-1, t-1)."""
    if k < 1:
        raise ValueError(f"boundary: k must be >= 1, got {k}")
    if value < 0:
        raise ValueError(f"boundary: value must be >= 0, got {value}")
    if value == 0:
        return 0
    return sum(binomial(a - 1, t - 1) for a, t in macaulay_expand(value, k).terms)


@dataclass(frozen=True)
class MSequenceVerdict:
    """Outcome of is_m_sequence, truthy iff the sequence passed.

    On failure, k is the first violating index (0 when n_0 != 1),
    boundary_value is boundary(n_k, k) and bound is the n_{k-1} it had to
    stay within; the k = 0 failure carries no boundary data.
    """

    ok: bool
    k: Optional[int] = None
    boundary_value: Optional[int] = None
    bound: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def is_m_sequence(seq: Sequence[int]) -> MSequenceVerdict:
    """Test n_0 = 1 and boundary(n_k, k) <= n_{k-1} for all k >= 1."""
    seq = list(seq)
    if not seq:
        raise ValueError("is_m_sequence: sequence must be nonempty")
    for e in seq:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"is_m_sequence: entries must be nonnegative integers, got {e!r}")
    if seq[0] != 1:
        return MSequenceVerdict(False, k=0)
    for k in range(1, len(seq)):
        b = boundary(seq[k], k)
        if b > seq[k - 1]:
            return MSequenceVerdict(False, k=k, boundary_value=b, bound=seq[k - 1])
    return MSequenceVerdict(True)


@lru_cache(maxsize=None)
def _monomials(v: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Degree-k exponent vectors on v variables, lexicographically descending."""
    if v == 0:
        return ((),) if k == 0 else ()
    out = []

    def rec(pos: int, rem: int, acc: list[int]) -> None:
        if pos == v - 1:
            out.append(tuple(acc) + (rem,))
            return
        for e in range(rem, -1, -1):
            acc.append(e)
            rec(pos + 1, rem - e, acc)
            acc.pop()

    rec(0, k, [])
    out.sort(reverse=True)
    return tuple(out)


def _divisors(mono: tuple[int, ...]):
    for i, e in enumerate(mono):
        if e > 0:
            yield mono[:i] + (e - 1,) + mono[i + 1:]


def _work_bound(seq: Sequence[int], v: int) -> int:
    """Upper bound on candidate sets the multicomplex search can visit.

    At degree k there are at most C(v+k-1, k) monomials, so at most
    C(C(v+k-1, k), n_k) choices; a degree demanding more monomials than
    exist kills the search on the spot, so deeper levels cost nothing.
    """
    bound = 1
    for k in range(1, len(seq)):
        avail = binomial(v + k - 1, k)
        if seq[k] > avail:
            break
        bound *= binomial(avail, seq[k])
        if bound > ORACLE_WORK_CAP:
            break
    return bound


def oracle_is_m_sequence(seq: Sequence[int], max_vars: int) -> bool:
    """Exhaustively search for a multicomplex with the given degree counts.

    Returns True iff some set of monomials on at most max_vars variables,
    closed under divisibility, has exactly seq[k] monomials in each degree
    k. The candidate sets at each degree are enumerated in graded
    lexicographic order (degree ascending, lex descending within a
    degree), so the search is deterministic. A variable occurring anywhere
    must itself appear in degree 1, so the effective variable count is
    min(max_vars, n_1); passing a larger max_vars does not change the
    answer. Any sequence with entry sum at most ORACLE_BUDGET is accepted;
    beyond that the oracle still runs when an upper bound on the number of
    candidate sets stays small (for instance when every degree takes all
    monomials, a single candidate each), and raises BudgetExceededError
    otherwise. It never returns a wrong answer.
    """
    seq = list(seq)
    if not seq:
        raise ValueError("oracle_is_m_sequence: sequence must be nonempty")
    for e in seq:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"oracle_is_m_sequence: entries must be nonnegative integers, got {e!r}")
    if max_vars < 0:
        raise ValueError(f"oracle_is_m_sequence: max_vars must be >= 0, got {max_vars}")
    # a multicomplex is nonempty and division-closed, so it contains the
    # unit monomial and its degree-0 count is exactly 1
    if seq[0] != 1:
        return False
    if len(seq) == 1:
        return True
    v = min(max_vars, seq[1])
    if sum(seq) > ORACLE_BUDGET and _work_bound(seq, v) > ORACLE_WORK_CAP:
        raise BudgetExceededError(
            f"oracle infeasible: sum of entries {sum(seq)} exceeds the search "
            f"budget {ORACLE_BUDGET} and the candidate-set bound exceeds "
            f"{ORACLE_WORK_CAP}"
        )

    def search(k: int, prev: frozenset) -> bool:
        if k == len(seq):
            return True
        need = seq[k]
        avail = [m for m in _monomials(v, k) if all(d in prev for d in _divisors(m))]
        if need > len(avail):
            return False
        for chosen in combinations(avail, need):
            if search(k + 1, frozenset(chosen)):
                return True
        return False

    return search(1, frozenset(_monomials(v, 0)))

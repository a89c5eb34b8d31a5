"""Stability of a point configuration, decided from its Gram matrix alone.

The zero pattern of the Gram matrix tells the whole story:

* semistable  <=>  some permutation sigma has  prod_i a_{sigma(i), i} != 0
  (a perfect matching in the bipartite support graph);
* unstable    <=>  some nonempty I subset-of J has a zero block a_ij = 0
  for all i in I, j in J with |I| + |J| >= m + 1;
* strictly semistable  <=>  the best such block reaches exactly m.

Every verdict carries machine-checkable witnesses, including the
one-parameter-subgroup weight vector built from the zero block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .config import DEFAULT_CAPS, CapExceeded
from .graphs import maximum_bipartite_matching
from .linalg import Matrix, PointConfiguration, SymmetricMatrix, gram_matrix

STABLE = "stable"
STRICTLY_SEMISTABLE = "strictly_semistable"
UNSTABLE = "unstable"

Subsets = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class StabilityVerdict:
    """Status plus the witnesses that certify it (all indices 0-based).

    ``permutation`` sigma satisfies  prod_i M[sigma[i], i] != 0  and exists
    exactly for the semistable statuses.  ``subsets`` is the maximizing
    zero-block pair (I, J); it is the defining certificate for the
    non-stable statuses.  ``one_ps`` is an integer weight vector r with
    sum(r) = 0, r != 0 and r_i + r_j >= 0 (> 0 when unstable) whenever
    M[i, j] != 0; it is None for stable verdicts, and also for the
    degenerate 1x1 zero matrix, which has no nontrivial weight vector.
    """

    status: str
    m_prime: int
    permutation: tuple[int, ...] | None
    subsets: Subsets | None
    one_ps: tuple[int, ...] | None

    def to_json(self) -> dict:
        if self.status == STABLE:
            witness: dict = {
                "type": "permutation",
                "sigma": [s + 1 for s in self.permutation],
            }
        else:
            i_set, j_set = self.subsets
            witness = {
                "type": "subsets",
                "I": [i + 1 for i in i_set],
                "J": [j + 1 for j in j_set],
            }
            if self.one_ps is not None:
                witness["one_ps"] = list(self.one_ps)
            if self.permutation is not None:
                witness["sigma"] = [s + 1 for s in self.permutation]
        return {"status": self.status, "m_prime": self.m_prime, "witness": witness}


def semistable_witness(matrix: Matrix) -> tuple[int, ...] | None:
    """A permutation sigma with  prod_i matrix[sigma[i], i] != 0, or None.

    Found as a perfect matching of columns to rows inside the nonzero
    support; None means no determinantal term survives.
    """
    m = matrix.size
    adjacency = [
        [i for i in range(m) if matrix[i, j] != 0] for j in range(m)
    ]  # column j -> candidate rows
    match = maximum_bipartite_matching(adjacency, m)
    if any(r == -1 for r in match):
        return None
    return tuple(match)


def max_zero_block(
    matrix: Matrix, *, max_vertices: int | None = None
) -> tuple[int, Subsets | None]:
    """Maximum of |I| + |J| over nonempty I ⊆ J with a zero block I x J.

    Scans the nonempty subsets I of the zero-diagonal support; the best J
    for a given I is simply every column orthogonal to all of I.  Returns
    (0, None) when no nonempty I qualifies.  Among maximizers the
    lexicographically smallest (I, J) is returned, so output is stable.
    """
    cap = DEFAULT_CAPS.zero_block_vertices if max_vertices is None else max_vertices
    m = matrix.size
    if m > cap:
        raise CapExceeded("zero-block search capped at m <= %d" % cap)
    diag_zero = [i for i in range(m) if matrix[i, i] == 0]
    best = 0
    best_pair: Subsets | None = None
    for mask in range(1, 1 << len(diag_zero)):
        i_set = [diag_zero[t] for t in range(len(diag_zero)) if mask >> t & 1]
        if any(matrix[a, b] != 0 for a in i_set for b in i_set):
            continue
        j_set = [j for j in range(m) if all(matrix[a, j] == 0 for a in i_set)]
        value = len(i_set) + len(j_set)
        pair = (tuple(i_set), tuple(j_set))
        if value > best or (value == best and best_pair is not None and pair < best_pair):
            best = value
            best_pair = pair
    return best, best_pair


def _trim_to(pair: Subsets, target: int) -> Subsets:
    """Shrink a zero-block witness until |I| + |J| == target, keeping validity."""
    i_set, j_set = list(pair[0]), list(pair[1])
    while len(i_set) + len(j_set) > target:
        extra = [j for j in j_set if j not in i_set]
        if extra:
            j_set.remove(max(extra))
        else:
            i_set.remove(max(i_set))
    return tuple(i_set), tuple(j_set)


def _one_ps_weights(m: int, pair: Subsets, strict: bool) -> tuple[int, ...] | None:
    """Destabilizing weights from a zero-block witness.

    For |I| + |J| = m the proof's -1/0/+1 pattern works: -1 on I, +1 off J.
    For |I| + |J| = m + 1 the complement of J is one short, so the blocks
    get weights -(|J| - 1), +1 and +|J| to keep every constraint strict.
    """
    i_set, j_set = (set(pair[0]), set(pair[1]))
    if strict and m == 1:
        return None  # a 1x1 torus has no nontrivial one-parameter subgroup
    r = [0] * m
    if not strict:
        for i in i_set:
            r[i] = -1
        for j in range(m):
            if j not in j_set:
                r[j] = 1
    else:
        j0 = len(j_set)
        for i in i_set:
            r[i] = -(j0 - 1)
        for j in j_set - i_set:
            r[j] = 1
        for j in range(m):
            if j not in j_set:
                r[j] = j0
    assert sum(r) == 0 and any(r)
    return tuple(r)


def classify(matrix: Matrix, *, max_vertices: int | None = None) -> StabilityVerdict:
    """Full three-way verdict for a symmetric matrix.

    unstable when the best zero block exceeds m, strictly semistable when
    it reaches exactly m, stable otherwise.  Internal witnesses are
    cross-checked; an inconsistency raises (it would mean a bug, the two
    criteria are equivalent theorems).
    """
    if not matrix.is_symmetric():
        raise ValueError("stability is defined for symmetric matrices")
    m = matrix.size
    m_prime, pair = max_zero_block(matrix, max_vertices=max_vertices)
    sigma = semistable_witness(matrix)
    if m_prime >= m + 1:
        if sigma is not None:
            raise RuntimeError("witness inconsistency: zero block plus matching")
        trimmed = _trim_to(pair, m + 1)
        return StabilityVerdict(
            UNSTABLE, m_prime, None, pair, _one_ps_weights(m, trimmed, strict=True)
        )
    if sigma is None:
        raise RuntimeError("witness inconsistency: no matching yet no large zero block")
    if m_prime == m:
        return StabilityVerdict(
            STRICTLY_SEMISTABLE, m_prime, sigma, pair, _one_ps_weights(m, pair, strict=False)
        )
    return StabilityVerdict(STABLE, m_prime, sigma, None, None)


def classify_configuration(
    config: PointConfiguration, *, max_vertices: int | None = None
) -> StabilityVerdict:
    """Convenience composition: classify the Gram matrix of a configuration."""
    return classify(gram_matrix(config), max_vertices=max_vertices)


@lru_cache(maxsize=None)
def _weight_vectors(m: int, bound: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        r
        for r in product(range(-bound, bound + 1), repeat=m)
        if sum(r) == 0 and any(r)
    )


def one_ps_oracle(
    matrix: Matrix,
    weight_bound: int | None = None,
    *,
    max_vertices: int | None = None,
    max_weight: int | None = None,
) -> tuple[str, tuple[int, ...] | None]:
    """Brute-force status from integer weight vectors in a box.

    Scans every r with |r_i| <= weight_bound, sum zero, r nonzero:
    unstable if some r keeps r_i + r_j > 0 on the whole nonzero support,
    otherwise strictly semistable if some r keeps it >= 0, else stable.
    Returns the status with the first certificate found.  Only a
    validation oracle: the box bound makes it desk-scale, not a theorem.
    """
    cap_m = DEFAULT_CAPS.oracle_vertices if max_vertices is None else max_vertices
    cap_w = DEFAULT_CAPS.oracle_weight if max_weight is None else max_weight
    bound = cap_w if weight_bound is None else weight_bound
    m = matrix.size
    if m > cap_m or bound > cap_w:
        raise CapExceeded("oracle capped at m <= %d, weight <= %d" % (cap_m, cap_w))
    if not matrix.is_symmetric():
        raise ValueError("stability is defined for symmetric matrices")
    support = [
        (i, j) for i in range(m) for j in range(i, m) if matrix[i, j] != 0
    ]
    weak: tuple[int, ...] | None = None
    for r in _weight_vectors(m, bound):
        lowest = min((r[i] + r[j] for i, j in support), default=1)
        if lowest > 0:
            return UNSTABLE, r
        if lowest >= 0 and weak is None:
            weak = r
    if weak is not None:
        return STRICTLY_SEMISTABLE, weak
    return STABLE, None

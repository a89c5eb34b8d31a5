"""Graph-monomial polynomials evaluated on symmetric matrices.

A monomial is a :class:`Multigraph`; a polynomial is a combination of
monomials on a shared vertex count.  This is enough to express the
determinant in class coordinates, the entry-times-cofactor relations,
and randomized membership tests against the low-rank locus — without any
general-purpose computer algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .graphs import Multigraph, enumerate_determinantal_classes
from .linalg import (
    Matrix,
    PointConfiguration,
    SymmetricMatrix,
    parse_scalar,
    scalar_to_str,
    to_scalar,
)


def eval_monomial(g: Multigraph, matrix: Matrix) -> Fraction:
    """Product of matrix entries over the edge multiset of ``g``."""
    if matrix.nrows != g.vertex_count or matrix.ncols != g.vertex_count:
        raise ValueError("matrix size does not match the monomial's vertex count")
    value = Fraction(1)
    for a, b in g.edges:
        value *= matrix[a, b]
    return value


def multidegree(g: Multigraph) -> tuple[int, ...]:
    """Degree vector under the torus scaling X_ij -> z_i z_j X_ij.

    Component i is the degree of vertex i (loops count twice); the monomial
    is torus-invariant of level d exactly when all components equal 2d.
    """
    return g.degree_vector()


@dataclass(frozen=True)
class GraphPolynomial:
    """Linear combination of graph monomials on a fixed vertex count."""

    vertex_count: int
    terms: tuple[tuple[Fraction, Multigraph], ...]

    def __post_init__(self):
        seen = set()
        for coeff, g in self.terms:
            if g.vertex_count != self.vertex_count:
                raise ValueError("all monomials must share the vertex count")
            if coeff == 0:
                raise ValueError("zero coefficients must be dropped on construction")
            if g in seen:
                raise ValueError("duplicate monomials must be combined on construction")
            seen.add(g)

    @classmethod
    def of(cls, vertex_count: int, terms: Iterable[tuple] ) -> "GraphPolynomial":
        acc: dict[Multigraph, Fraction] = {}
        for coeff, g in terms:
            acc[g] = acc.get(g, Fraction(0)) + to_scalar(coeff)
        kept = tuple(
            (c, g) for g, c in sorted(acc.items(), key=lambda kv: kv[0].edges) if c != 0
        )
        return cls(vertex_count, kept)

    def evaluate(self, matrix: Matrix) -> Fraction:
        return sum(
            (c * eval_monomial(g, matrix) for c, g in self.terms), start=Fraction(0)
        )

    def is_zero(self) -> bool:
        return not self.terms

    def scaled_by_monomial(self, g: Multigraph) -> "GraphPolynomial":
        return GraphPolynomial.of(
            self.vertex_count, ((c, mono.union(g)) for c, mono in self.terms)
        )

    def __add__(self, other: "GraphPolynomial") -> "GraphPolynomial":
        if self.vertex_count != other.vertex_count:
            raise ValueError("vertex counts differ")
        return GraphPolynomial.of(self.vertex_count, self.terms + other.terms)

    def to_json(self) -> dict:
        return {
            "m": self.vertex_count,
            "terms": [
                {"coeff": scalar_to_str(c), "edges": g.to_json()["edges"]}
                for c, g in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data) -> "GraphPolynomial":
        m = data["m"]
        return cls.of(
            m,
            (
                (parse_scalar(t["coeff"]), Multigraph.from_json({"m": m, "edges": t["edges"]}))
                for t in data["terms"]
            ),
        )


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def minor_polynomial(m: int, rows: Sequence[int], cols: Sequence[int]) -> GraphPolynomial:
    """det of the (rows x cols) submatrix of a symmetric m x m of unknowns,
    expanded into graph monomials on m vertices."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column index lists must have equal length")
    k = len(rows)
    terms = []
    for perm in permutations(range(k)):
        g = Multigraph.of(m, [(rows[perm[b]], cols[b]) for b in range(k)])
        terms.append((_permutation_sign(perm), g))
    return GraphPolynomial.of(m, terms)


def determinant_polynomial(m: int, *, max_vertices: int | None = None) -> GraphPolynomial:
    """det(X) of a symmetric matrix of unknowns, in class coordinates.

    Each 2-regular class contributes sign * 2**(number of long cycles)
    times its monomial.
    """
    classes = enumerate_determinantal_classes(m, max_vertices=max_vertices)
    return GraphPolynomial.of(
        m, ((cls.sign * cls.permutation_count, cls.graph) for cls in classes)
    )


def entry_cofactor_relations(m: int = 4) -> list[GraphPolynomial]:
    """The polynomials X_ij * det(complementary minor), one per unordered (i, j).

    For a symmetric matrix the complementary minors of (i, j) and (j, i)
    coincide, giving m(m+1)/2 polynomials.  Each vanishes identically on
    symmetric matrices of rank <= m - 2.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    out = []
    for i in range(m):
        for j in range(i, m):
            rows = [r for r in range(m) if r != i]
            cols = [c for c in range(m) if c != j]
            minor = minor_polynomial(m, rows, cols)
            out.append(minor.scaled_by_monomial(Multigraph.of(m, [(i, j)])))
    return out


def counterexample_matrix() -> SymmetricMatrix:
    """Rank-4 5x5 fixture whose entry-times-cofactor products all vanish."""
    return SymmetricMatrix(
        [
            [0, 0, 1, 1, 1],
            [0, 0, 1, 1, 1],
            [1, 1, 1, 0, 0],
            [1, 1, 0, 1, 0],
            [1, 1, 0, 0, 1],
        ]
    )


def counterexample_relation() -> GraphPolynomial:
    """Degree-4 invariant vanishing on rank <= 3 yet nonzero on the fixture:
    X_13^2 X_14^2 X_25^2 times the principal minor on {2,3,4,5} (1-based)."""
    prefix = Multigraph.of(5, [(0, 2), (0, 2), (0, 3), (0, 3), (1, 4), (1, 4)])
    minor = minor_polynomial(5, [1, 2, 3, 4], [1, 2, 3, 4])
    return minor.scaled_by_monomial(prefix)


@dataclass(frozen=True)
class LowRankTest:
    """Outcome of a randomized vanishing test on the low-rank locus.

    ``vanishes=False`` comes with an exact witness matrix and is a proof;
    ``vanishes=True`` is high-confidence only (exact evaluation at
    ``trials`` pseudo-random rank-bounded Gram matrices).
    """

    vanishes: bool
    trials: int
    seed: int
    witness: SymmetricMatrix | None = None


def vanishes_on_low_rank(
    poly: GraphPolynomial, rank_bound: int, trials: int = 20, seed: int = 0
) -> LowRankTest:
    """Does ``poly`` vanish on all symmetric matrices of rank <= rank_bound?

    Samples B^T B for integer matrices B with ``rank_bound`` rows; the
    image is dense in the low-rank locus, and evaluation is exact, so a
    nonzero value is a certificate of non-vanishing.  Trial t draws from
    ``random.Random(seed + t)`` so trials are reproducible and splittable.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if rank_bound < 1:
        raise ValueError("rank bound must be positive")
    m = poly.vertex_count
    for t in range(trials):
        rng = random.Random(seed + t)
        b = Matrix(
            [[rng.randint(-50, 50) for _ in range(m)] for _ in range(rank_bound)]
        )
        gram = (b.transpose() @ b).as_symmetric()
        if poly.evaluate(gram) != 0:
            return LowRankTest(False, t + 1, seed, gram)
    return LowRankTest(True, trials, seed, None)


def plucker_bracket(config: PointConfiguration, indices: Sequence[int]) -> Fraction:
    """Determinant of the matrix whose columns are the chosen vectors.

    Needs exactly n+1 indices (0-based) so the matrix is square; the
    volume form is the standard determinant.
    """
    indices = list(indices)
    if len(indices) != config.n + 1:
        raise ValueError("need exactly n+1 indices")
    if any(not 0 <= i < config.m for i in indices):
        raise ValueError("index out of range")
    cols = [config.vectors[i] for i in indices]
    return Matrix(zip(*cols)).det()


def plucker_syzygy(config: PointConfiguration, indices: Sequence[int], k: int) -> Fraction:
    """Alternating contraction of brackets over an (n+2)-subset; always zero.

    Any n+2 vectors in an (n+1)-dimensional space are dependent, so
    sum_j (-1)^j [indices minus j-th] <v_j, v_k> vanishes identically.
    The value is returned so callers can assert the zero exactly.
    """
    indices = list(indices)
    if len(indices) != config.n + 2:
        raise ValueError("need exactly n+2 indices")
    total = Fraction(0)
    for t, i_t in enumerate(indices):
        rest = indices[:t] + indices[t + 1 :]
        sign = -1 if t % 2 == 0 else 1  # (-1)^j with j = t+1
        total += sign * plucker_bracket(config, rest) * config.pairing(i_t, k)
    return total

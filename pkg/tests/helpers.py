"""Independent oracles and generators shared by the test modules.

These deliberately avoid the package's own elimination kernels: the
determinant oracle is naive Laplace expansion, the rank oracle is plain
Gaussian elimination over Fraction.  Keep them that way — several tests
exist precisely to cross-check two independent routes.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from orthogram import Matrix, SymmetricMatrix


def cofactor_det(rows) -> Fraction:
    """Naive Laplace expansion along the first row; fine up to size ~6."""
    rows = [list(map(Fraction, r)) for r in rows]
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(sub)
        total += term if j % 2 == 0 else -term
    return total


def gauss_rank(rows) -> int:
    """Rank by straightforward rational Gaussian elimination."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][c]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / pv
                for cc in range(ncols):
                    rows[r][cc] -= f * rows[rank][cc]
        rank += 1
    return rank


def random_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_matrix(rng: random.Random, nrows: int, ncols: int, span: int = 9) -> Matrix:
    return Matrix(
        [[random_fraction(rng, span) for _ in range(ncols)] for _ in range(nrows)]
    )


def random_symmetric(rng: random.Random, n: int, span: int = 9) -> SymmetricMatrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = random_fraction(rng, span)
            rows[i][j] = rows[j][i] = v
    return SymmetricMatrix(rows)


def random_skew(rng: random.Random, n: int, span: int = 5) -> Matrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = random_fraction(rng, span)
            rows[i][j] = v
            rows[j][i] = -v
    return Matrix(rows)


def random_positive_definite(rng: random.Random, n: int, span: int = 3) -> SymmetricMatrix:
    """L^T L + identity for a random integer L: positive definite, exact."""
    l = Matrix([[rng.randint(-span, span) for _ in range(n)] for _ in range(n)])
    product_matrix = l.transpose() @ l
    rows = [list(r) for r in product_matrix.rows]
    for i in range(n):
        rows[i][i] += 1
    return SymmetricMatrix(rows)


def random_independent_vectors(rng: random.Random, dim: int, count: int, span: int = 6):
    """Integer vectors, rejection-sampled until they are independent."""
    while True:
        vecs = [
            tuple(Fraction(rng.randint(-span, span)) for _ in range(dim))
            for _ in range(count)
        ]
        if gauss_rank(vecs) == count:
            return vecs


def count_regular_by_matrix_scan(m: int, valency: int) -> int:
    """Brute-force oracle: symmetric nonnegative integer matrices whose rows
    sum to the valency, loops (diagonal) counting twice."""
    cells = [(i, j) for i in range(m) for j in range(i, m)]
    count = 0
    for values in product(range(valency + 1), repeat=len(cells)):
        deg = [0] * m
        for (i, j), v in zip(cells, values):
            if i == j:
                deg[i] += 2 * v
            else:
                deg[i] += v
                deg[j] += v
        if deg == [valency] * m:
            count += 1
    return count

"""Exact rational linear algebra over arbitrary-precision fractions.

All scalars are :class:`fractions.Fraction`; nothing here ever rounds.
Matrices are immutable value types.  Determinants and ranks go through
fraction-free (Bareiss) elimination on integer-scaled rows so coefficient
growth stays polynomial; cofactor expansion exists only in the test suite
as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]


def to_scalar(x) -> Fraction:
    """Coerce ints, "p/q" strings and Fractions; floats are refused."""
    if isinstance(x, float):
        raise TypeError("refusing to coerce a float to an exact scalar: %r" % (x,))
    return Fraction(x)


def scalar_to_str(x: Fraction) -> str:
    """Serialize as "p/q", or just "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_scalar(s) -> Fraction:
    """Inverse of :func:`scalar_to_str`; also accepts plain ints."""
    if isinstance(s, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(s, (int, str, Fraction)):
        return to_scalar(s)
    raise TypeError("cannot parse scalar from %r" % (s,))


def vector(entries: Iterable) -> Vector:
    return tuple(to_scalar(x) for x in entries)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vector) -> Vector:
    c = to_scalar(c)
    return tuple(c * a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable exact matrix.  ``M[i, j]`` indexes entries, 0-based."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: tuple[Vector, ...] = tuple(vector(r) for r in rows)
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        width = len(self.rows[0])
        if width == 0 or any(len(r) != width for r in self.rows):
            raise ValueError("rows must be nonempty and of equal length")

    # -- basic structure ---------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def size(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("size is only defined for square matrices")
        return self.nrows

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(scalar_to_str(x) for x in r) for r in self.rows)
        return "%s([%s])" % (type(self).__name__, body)

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def as_symmetric(self) -> "SymmetricMatrix":
        return SymmetricMatrix(self.rows)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(vec_add(a, b) for a, b in zip(self.rows, other.rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(vec_sub(a, b) for a, b in zip(self.rows, other.rows))

    def __neg__(self) -> "Matrix":
        return Matrix(vec_scale(-1, r) for r in self.rows)

    def scale(self, c) -> "Matrix":
        return Matrix(vec_scale(c, r) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.transpose().rows
        return Matrix(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        v = vector(v)
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def _same_shape(self, other: "Matrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    # -- exact elimination kernels ------------------------------------------

    def _integer_rows(self) -> tuple[list[list[int]], Fraction]:
        """Scale each row to integers; return rows and the total row scaling."""
        out = []
        total = Fraction(1)
        for r in self.rows:
            mult = 1
            for x in r:
                mult = mult * x.denominator // gcd(mult, x.denominator)
            total *= mult
            out.append([int(x * mult) for x in r])
        return out, total

    def det(self) -> Fraction:
        """Exact determinant via fraction-free Bareiss elimination."""
        n = self.size
        a, scaling = self._integer_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for r in range(k + 1, n):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            pivot = a[k][k]
            for i in range(k + 1, n):
                row_i = a[i]
                row_k = a[k]
                head = row_i[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
                row_i[k] = 0
            prev = pivot
        return Fraction(sign * a[n - 1][n - 1]) / scaling

    def rank(self) -> int:
        """Exact rank via fraction-free elimination with column skipping."""
        a, _ = self._integer_rows()
        nrows, ncols = len(a), len(a[0])
        r = 0
        prev = 1
        for c in range(ncols):
            pivot_row = None
            for i in range(r, nrows):
                if a[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            a[r], a[pivot_row] = a[pivot_row], a[r]
            pivot = a[r][c]
            for i in range(r + 1, nrows):
                head = a[i][c]
                for j in range(c, ncols):
                    a[i][j] = (a[i][j] * pivot - head * a[r][j]) // prev
            prev = pivot
            r += 1
            if r == nrows:
                break
        return r

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(tuple(self.rows[i][j] for j in cols) for i in rows)

    def minor_det(self, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
        """Determinant of the submatrix picked by 0-based index lists.

        Both lists must have the same length, be strictly increasing and
        stay in range.
        """
        rows, cols = list(rows), list(cols)
        if len(rows) != len(cols):
            raise ValueError("row and column index lists must have equal length")
        for idx, bound in ((rows, self.nrows), (cols, self.ncols)):
            if any(not 0 <= i < bound for i in idx):
                raise ValueError("minor index out of range")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError("minor indices must be strictly increasing")
        if not rows:
            return Fraction(1)
        return self.submatrix(rows, cols).det()

    def adjugate(self) -> "Matrix":
        """adj(M) with M @ adj(M) == det(M) * identity, exactly."""
        n = self.size
        if n == 1:
            return type(self)([[Fraction(1)]])
        idx = list(range(n))
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                # adj[i][j] is the (j, i) cofactor
                sub_rows = [r for r in idx if r != j]
                sub_cols = [c for c in idx if c != i]
                cof = self.submatrix(sub_rows, sub_cols).det()
                row.append(cof if (i + j) % 2 == 0 else -cof)
            rows.append(row)
        return type(self)(rows)

    def inverse(self) -> "Matrix":
        d = self.det()
        if d == 0:
            raise ValueError("matrix is singular")
        return Matrix(self.adjugate().rows).scale(Fraction(1) / d)

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> list[list[str]]:
        return [[scalar_to_str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "Matrix":
        return cls([[parse_scalar(x) for x in r] for r in data])


class SymmetricMatrix(Matrix):
    """Square matrix constrained to be symmetric on construction."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Iterable]):
        super().__init__(rows)
        if self.nrows != self.ncols:
            raise ValueError("symmetric matrix must be square")
        if not self.is_symmetric():
            raise ValueError("matrix is not symmetric")

    def transpose(self) -> "SymmetricMatrix":
        return self

    @classmethod
    def from_upper(cls, size: int, upper: dict) -> "SymmetricMatrix":
        """Build from a {(i, j): value} map over the upper triangle."""
        rows = [[Fraction(0)] * size for _ in range(size)]
        for (i, j), v in upper.items():
            v = to_scalar(v)
            rows[i][j] = v
            rows[j][i] = v
        return cls(rows)


def identity(n: int) -> SymmetricMatrix:
    return SymmetricMatrix(
        [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    )


def zero_matrix(nrows: int, ncols: int | None = None) -> Matrix:
    ncols = nrows if ncols is None else ncols
    return Matrix([[Fraction(0)] * ncols for _ in range(nrows)])


def bilinear(form: Matrix, u: Sequence, v: Sequence) -> Fraction:
    """The pairing u^T * form * v."""
    fv = form.apply(v)
    u = vector(u)
    if len(u) != len(fv):
        raise ValueError("vector length does not match the form")
    return sum(a * b for a, b in zip(u, fv))


@dataclass(frozen=True)
class PointConfiguration:
    """m nonzero vectors in an (n+1)-dimensional quadratic space.

    ``form`` is the (n+1) x (n+1) matrix of a nondegenerate symmetric
    bilinear pairing; ``vectors`` are the configuration points.  The
    ambient projective dimension is ``n = form.size - 1``.
    """

    form: SymmetricMatrix
    vectors: tuple[Vector, ...]

    def __post_init__(self):
        if self.form.det() == 0:
            raise ValueError("the bilinear form must be nondegenerate")
        d = self.form.size
        for v in self.vectors:
            if len(v) != d:
                raise ValueError("vector length does not match the form size")
            if is_zero_vector(v):
                raise ValueError("configuration vectors must be nonzero")

    @classmethod
    def of(cls, form, vectors) -> "PointConfiguration":
        form = form if isinstance(form, SymmetricMatrix) else SymmetricMatrix(form)
        return cls(form, tuple(vector(v) for v in vectors))

    @property
    def n(self) -> int:
        return self.form.size - 1

    @property
    def m(self) -> int:
        return len(self.vectors)

    def pairing(self, i: int, j: int) -> Fraction:
        return bilinear(self.form, self.vectors[i], self.vectors[j])

    def transformed(self, g: Matrix) -> "PointConfiguration":
        return PointConfiguration(self.form, tuple(g.apply(v) for v in self.vectors))

    def to_json(self) -> dict:
        return {
            "form": self.form.to_json(),
            "vectors": [[scalar_to_str(x) for x in v] for v in self.vectors],
        }

    @classmethod
    def from_json(cls, data) -> "PointConfiguration":
        return cls.of(
            [[parse_scalar(x) for x in r] for r in data["form"]],
            [[parse_scalar(x) for x in v] for v in data["vectors"]],
        )


def gram_matrix(config: PointConfiguration) -> SymmetricMatrix:
    """The m x m matrix of pairings of the configuration vectors."""
    m = config.m
    images = [config.form.apply(v) for v in config.vectors]
    rows = [
        [sum(a * b for a, b in zip(config.vectors[i], images[j])) for j in range(m)]
        for i in range(m)
    ]
    return SymmetricMatrix(rows)


def euclidean_configuration(vectors) -> PointConfiguration:
    """Configuration under the standard dot product."""
    vecs = [vector(v) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    return PointConfiguration.of(identity(len(vecs[0])), vecs)


def cayley_orthogonal(skew: Matrix, form: Matrix | None = None) -> Matrix:
    """Rational orthogonal matrix (I - S)(I + S)^-1 from a skew-symmetric seed.

    With no form this is orthogonal for the dot product.  Given a
    positive-definite ``form`` F the seed K is turned into the F-skew map
    S = F^-1 K, and the result Q satisfies Q^T F Q = F exactly.
    """
    n = skew.size
    if skew.transpose() != -skew:
        raise ValueError("seed matrix must be skew-symmetric")
    s = skew if form is None else form.inverse() @ skew
    eye = Matrix(identity(n).rows)
    return (eye - s) @ (eye + s).inverse()

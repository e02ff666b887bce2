"""Exact scalar, vector and matrix arithmetic for the two tropical semirings.

The max-plus semiring is the real numbers with addition ``a (+) b = max(a, b)``
and multiplication ``a (*) b = a + b``; the min-plus semiring replaces max by
min.  All values are exact rationals (``fractions.Fraction``), so every
identity tested elsewhere in the package (idempotency, greatest lower bounds,
projections) is decidable by plain equality.  Neither semiring carries an
infinite element here: every entry is a finite rational, and no operation may
assume an additive identity matrix exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Scalar = Fraction

ScalarLike = Union[Fraction, int, str]


class DimensionError(ValueError):
    """Operands have incompatible lengths or shapes."""


class FlavorError(ValueError):
    """An operation received a polytope or matrix of the wrong flavor."""


class PreconditionError(ValueError):
    """A documented operation precondition does not hold."""


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce to an exact rational.

    Accepts ``Fraction``, ``int`` and strings such as ``"-3"`` or ``"1/2"``.
    Floats are rejected: binary floats would smuggle rounding into a library
    whose point is exactness.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction, int or 'p/q' string")
    return Fraction(value)


class Flavor(Enum):
    """Selects one of the two semirings: max-plus or min-plus."""

    MAX_PLUS = "max-plus"
    MIN_PLUS = "min-plus"

    @property
    def dual(self) -> "Flavor":
        return Flavor.MIN_PLUS if self is Flavor.MAX_PLUS else Flavor.MAX_PLUS

    @property
    def reducer(self):
        """The scalar addition of this semiring: ``max`` or ``min``."""
        return max if self is Flavor.MAX_PLUS else min


@dataclass(frozen=True)
class TropVector:
    """A dense point of R^n with exact rational coordinates, n >= 1."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise DimensionError("vector must have at least one entry")
        for e in self.entries:
            if not isinstance(e, Fraction):
                raise TypeError(f"vector entry {e!r} is not a Fraction")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __neg__(self) -> "TropVector":
        return TropVector(tuple(-e for e in self.entries))

    def __repr__(self) -> str:
        return "vec(%s)" % ", ".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class TropMatrix:
    """A dense n x m array of exact rationals, stored row-major.

    Matrices double as generator lists: a polytope's generators are the
    columns of its matrix.
    """

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1 or len(self.entries[0]) < 1:
            raise DimensionError("matrix must be at least 1x1")
        width = len(self.entries[0])
        for r in self.entries:
            if len(r) != width:
                raise DimensionError("matrix rows have unequal lengths")
            for e in r:
                if not isinstance(e, Fraction):
                    raise TypeError(f"matrix entry {e!r} is not a Fraction")

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def row(self, i: int) -> TropVector:
        return TropVector(self.entries[i])

    def col(self, j: int) -> TropVector:
        return TropVector(tuple(r[j] for r in self.entries))

    def columns(self) -> Iterator[TropVector]:
        for j in range(self.n_cols):
            yield self.col(j)

    def __repr__(self) -> str:
        body = "; ".join(",".join(str(e) for e in r) for r in self.entries)
        return f"mat[{body}]"


def vec(*entries: ScalarLike) -> TropVector:
    """Build a TropVector from ints, Fractions or 'p/q' strings."""
    return TropVector(tuple(as_scalar(e) for e in entries))


def mat(rows: Sequence[Sequence[ScalarLike]]) -> TropMatrix:
    """Build a TropMatrix from a sequence of rows."""
    return TropMatrix(tuple(tuple(as_scalar(e) for e in r) for r in rows))


def mat_from_columns(columns: Sequence[TropVector]) -> TropMatrix:
    """Assemble a matrix whose j-th column is ``columns[j]``."""
    if not columns:
        raise DimensionError("need at least one column")
    n = len(columns[0])
    for c in columns:
        if len(c) != n:
            raise DimensionError("columns have unequal lengths")
    return TropMatrix(tuple(tuple(c[i] for c in columns) for i in range(n)))


def _check_same_length(x: TropVector, y: TropVector) -> None:
    if len(x) != len(y):
        raise DimensionError(f"vector lengths differ: {len(x)} vs {len(y)}")


def trop_add(f: Flavor, x: TropVector, y: TropVector) -> TropVector:
    """Componentwise max (max-plus) or min (min-plus) of two vectors.

    This is the least upper bound, respectively greatest lower bound, of
    ``{x, y}`` in the componentwise partial order.
    """
    _check_same_length(x, y)
    pick = f.reducer
    return TropVector(tuple(pick(a, b) for a, b in zip(x, y)))


def trop_sum(f: Flavor, vectors: Iterable[TropVector]) -> TropVector:
    """Fold ``trop_add`` over a non-empty iterable of vectors."""
    it = iter(vectors)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("trop_sum needs at least one vector") from None
    for v in it:
        acc = trop_add(f, acc, v)
    return acc


def scale(lam: ScalarLike, x: TropVector) -> TropVector:
    """Tropical scaling: add ``lam`` to every coordinate."""
    lam = as_scalar(lam)
    return TropVector(tuple(e + lam for e in x))


def leq(x: TropVector, y: TropVector) -> bool:
    """Componentwise partial order: true iff ``x_i <= y_i`` for every i."""
    _check_same_length(x, y)
    return all(a <= b for a, b in zip(x, y))


def trop_mat_mul(f: Flavor, a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Tropical matrix product: entry (i,j) is max_k (min_k) of ``a[i,k] + b[k,j]``."""
    if a.n_cols != b.n_rows:
        raise DimensionError(f"cannot multiply {a.n_rows}x{a.n_cols} by {b.n_rows}x{b.n_cols}")
    pick = f.reducer
    inner = range(a.n_cols)
    rows = []
    for i in range(a.n_rows):
        arow = a.entries[i]
        rows.append(tuple(pick(arow[k] + b.entries[k][j] for k in inner) for j in range(b.n_cols)))
    return TropMatrix(tuple(rows))


def negate_transpose(a: TropMatrix) -> TropMatrix:
    """Entrywise negation followed by transposition.

    Negation is an isomorphism between the two semirings, so this map
    exchanges their matrix products: ``-(A (x) B)^T = (-B^T) (min*) (-A^T)``.
    """
    return TropMatrix(tuple(tuple(-a.entries[i][j] for i in range(a.n_rows)) for j in range(a.n_cols)))

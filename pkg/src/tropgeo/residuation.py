"""Residuation bracket, domination, and membership in tropical spans.

The bracket ``<x|y> = max{lam : lam (*) x <= y} = min_i (y_i - x_i)`` is the
residuation operator of tropical scaling: it gives the largest scaling of x
that fits under y.  Everything else here is built on it.  ``x`` dominates
``y`` in position i when the minimum is attained at i; membership of y in a
finitely generated span reduces to checking that the principal projection
(the best approximation of y from below, or above for min-plus) reproduces y
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .core import (
    DimensionError,
    Flavor,
    Scalar,
    TropMatrix,
    TropVector,
    _check_same_length,
    scale,
    trop_sum,
)


@dataclass(frozen=True)
class Polytope:
    """A finitely generated tropical convex set.

    ``generators`` holds one generator per column; the polytope is the set of
    all tropical combinations (max-plus or min-plus sums of scaled generators,
    per ``flavor``) of the columns.  Two polytopes are the same set iff each
    generator of one is a member of the other's span, regardless of how many
    redundant generators either presentation carries.
    """

    flavor: Flavor
    generators: TropMatrix

    @property
    def ambient_dim(self) -> int:
        return self.generators.n_rows

    @property
    def n_generators(self) -> int:
        return self.generators.n_cols

    def generator(self, k: int) -> TropVector:
        return self.generators.col(k)

    def __iter__(self) -> Iterator[TropVector]:
        return self.generators.columns()


@dataclass(frozen=True)
class DominationWitness:
    """Records that ``dominator_point`` dominates some y in ``position``.

    ``bracket_value`` is ``<dominator_point|y> = y_i - x_i`` for the
    witnessed y.
    """

    dominator_point: TropVector
    position: int
    bracket_value: Scalar


def bracket(x: TropVector, y: TropVector) -> Fraction:
    """The residuation bracket ``min_i (y_i - x_i)``.

    Equivalently the largest ``lam`` with ``scale(lam, x) <= y``.
    """
    _check_same_length(x, y)
    return min(b - a for a, b in zip(x, y))


def dominates_at(x: TropVector, y: TropVector, i: int) -> bool:
    """True iff the bracket ``<x|y>`` is attained at coordinate i."""
    _check_same_length(x, y)
    if not 0 <= i < len(x):
        raise IndexError(f"position {i} out of range for dimension {len(x)}")
    return bracket(x, y) == y[i] - x[i]


def domination_witness(x: TropVector, y: TropVector, i: int) -> Optional[DominationWitness]:
    """A checked witness that x dominates y in position i, or None."""
    if not dominates_at(x, y, i):
        return None
    return DominationWitness(dominator_point=x, position=i, bracket_value=y[i] - x[i])


def dominates_polytope_at(x: TropVector, p: Polytope, i: int) -> bool:
    """True iff x dominates every point of the span of p in position i.

    Domination of a span is equivalent to domination of its generators
    (the dominated set at a fixed position is closed under both tropical
    sums and scaling), so only the generators are checked.
    """
    if len(x) != p.ambient_dim:
        raise DimensionError(f"vector length {len(x)} != ambient dimension {p.ambient_dim}")
    return all(dominates_at(x, g, i) for g in p)


def _max_plus_projection(generators: list[TropVector], y: TropVector) -> TropVector:
    return trop_sum(Flavor.MAX_PLUS, (scale(bracket(g, y), g) for g in generators))


def principal_projection(p: Polytope, y: TropVector) -> TropVector:
    """Best approximation of y inside the span of p.

    Max-plus: the largest element of the span that is <= y, namely the
    max-plus sum of each generator scaled by its bracket against y.  Min-plus
    is computed by order duality: negate the generators and the query, apply
    the max-plus formula, negate the result.  That yields the smallest span
    element >= y, the min-plus sum of generators scaled by
    ``max_i (y_i - g_i)``.
    """
    if len(y) != p.ambient_dim:
        raise DimensionError(f"vector length {len(y)} != ambient dimension {p.ambient_dim}")
    gens = list(p)
    if p.flavor is Flavor.MAX_PLUS:
        return _max_plus_projection(gens, y)
    return -_max_plus_projection([-g for g in gens], -y)


def member(p: Polytope, y: TropVector) -> bool:
    """True iff y lies in the span of p (exact rational equality)."""
    return principal_projection(p, y) == y

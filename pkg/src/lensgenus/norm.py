"""Thurston norm of graph manifolds built from Seifert fibered pieces.

A class is evaluated piece by piece: each piece contributes
|pairing with the regular fiber| * |orbifold Euler characteristic| when
that characteristic is negative.  Pieces with nonnegative characteristic
and zero pairing carry vertical annuli and tori, which cost nothing; a
piece with nonzero pairing but positive characteristic has no fiber
surface at all, so the formula refuses it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class PeripheralClass:
    """Integer class x*[mu] + y*[lambda] on a torus boundary."""

    mu_coeff: int
    lambda_coeff: int


@dataclass(frozen=True)
class SeifertPiece:
    """Base-orbifold data: compact base surface and cone-point orders.

    ``base_euler`` is the Euler characteristic of the base surface with its
    boundary, e.g. disk = 1, annulus = 0.  Order-1 cone points are allowed
    and contribute nothing.
    """

    base_euler: int
    cone_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        for a in self.cone_orders:
            if a < 1:
                raise ValueError(f"cone order {a} < 1")


@dataclass(frozen=True)
class NormSummand:
    """One Seifert piece together with the class-fiber pairing on it."""

    piece: SeifertPiece
    fiber_pairing: int


def orbifold_euler_char(piece: SeifertPiece) -> Fraction:
    """chi(base) - sum(1 - 1/a) over the cone orders a."""
    chi = Fraction(piece.base_euler)
    for a in piece.cone_orders:
        chi -= 1 - Fraction(1, a)
    return chi


def torus_pairing(x: PeripheralClass, y: PeripheralClass) -> int:
    """Intersection pairing on the torus; alternating, so x vs x is 0."""
    return x.mu_coeff * y.lambda_coeff - x.lambda_coeff * y.mu_coeff


def graph_norm(summands: Sequence[NormSummand] | Iterable[NormSummand]) -> tuple[Fraction, bool]:
    """Norm of a class on a graph manifold, plus whether the class fibers.

    Returns sum over pieces of |pairing| * max(0, -chi_orb) and
    ``fibered=True`` iff every pairing is nonzero.  chi_orb = 0 pieces are
    zero-extended (annulus/torus fibers); chi_orb > 0 with nonzero pairing
    raises, since the piecewise formula has no fiber surface there.
    """
    total = Fraction(0)
    fibered = True
    for s in summands:
        chi = orbifold_euler_char(s.piece)
        if s.fiber_pairing == 0:
            fibered = False
            continue
        if chi > 0:
            raise ValueError(
                "norm formula inapplicable: piece with positive orbifold "
                f"Euler characteristic {chi} has nonzero fiber pairing"
            )
        total += abs(s.fiber_pairing) * (-chi)
    return total, fibered


def clamped_graph_norm(
    summands: Sequence[NormSummand],
) -> tuple[Fraction, bool, int]:
    """graph_norm after discarding solid-torus pieces.

    A piece with chi_orb > 0 arises here only from an order-1 cone point
    (disk base with at most one genuine singular fiber), i.e. a solid
    torus, whose disk fibers have zero complexity.  Such pieces are dropped
    from the sum; the count of dropped pieces is returned so callers can
    warn about the degenerate geometry.
    """
    kept = [s for s in summands if orbifold_euler_char(s.piece) <= 0]
    dropped = len(summands) - len(kept)
    fibered = all(s.fiber_pairing != 0 for s in summands)
    total, _ = graph_norm(kept)
    return total, fibered, dropped

"""Norms and minimizer verdicts for cabled torus knots in lens spaces.

The (1,n)-cable of the (1,m)-torus knot lies in homology class mn.  Its
complement splits into a cable space and the torus-knot complement, so the
class norm can be computed two ways: in one piece through the (1,mn)-torus
knot, or piecewise through the cable decomposition.  When p/q clears the
threshold m^2 n the two values agree, certifying the cable as a genus
minimizer; when additionally q != m the cable is provably not the simple
knot in its class.

Iterated cables follow the same pattern with one cable piece per cabling
level.  The summand data below is the source of truth; the closed forms in
docstrings are documentation, and reduction tests pin the two together.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .complement import torus_fiber_summand, torus_knot_theta
from .errors import ConsistencyError
from .lens import LensSpace
from .norm import NormSummand, SeifertPiece, clamped_graph_norm


@dataclass(frozen=True)
class CableParams:
    """The (1,n)-cable of the (1,m)-torus knot in the given lens space."""

    ambient: LensSpace
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 2 or self.n < 2:
            raise ValueError("cable parameters require m, n >= 2")


@dataclass(frozen=True)
class IteratedCableParams:
    """Iterated cable C(1,m_k) o ... o C(1,m_2) o T(1,m_1)."""

    ambient: LensSpace
    ms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.ms:
            raise ValueError("need at least one cabling parameter")
        if any(m < 2 for m in self.ms):
            raise ValueError("all cabling parameters must be >= 2")
        if self.total_winding >= self.ambient.p:
            raise ValueError(
                f"total winding {self.total_winding} must stay below p = {self.ambient.p}"
            )

    @property
    def total_winding(self) -> int:
        return prod(self.ms)


@dataclass(frozen=True)
class CableVerdict:
    params: CableParams
    norm_torus_side: Fraction
    norm_cable_side: Fraction
    threshold_met: bool
    norms_equal: bool
    certified_minimizer: bool
    certified_nonsimple: bool
    homology_class: int
    theta: Fraction
    warnings: tuple[str, ...]


@dataclass(frozen=True)
class IteratedVerdict:
    params: IteratedCableParams
    norm_iterated: Fraction
    norm_torus_side: Fraction
    threshold_met: bool
    norms_equal: bool
    certified_minimizer: bool
    homology_class: int
    theta: Fraction
    warnings: tuple[str, ...]


@dataclass(frozen=True)
class SurfaceCheck:
    """Consistency record for the explicit cable surface at p = m^2 n, q = 1."""

    m: int
    n: int
    ambient: LensSpace
    theta_inner: Fraction
    theta_inner_expected: Fraction
    theta_class: Fraction
    theta_class_expected: int
    surface_genus: int
    surface_boundaries: int
    surface_identity_holds: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.theta_inner == self.theta_inner_expected
            and self.theta_class == self.theta_class_expected
            and self.surface_identity_holds
        )


def _solid_torus_warnings(dropped: int) -> tuple[str, ...]:
    if dropped == 0:
        return ()
    return (
        "degenerate cone order 1: a decomposition piece is a solid torus "
        "and contributes zero",
    )


def cable_side_summands(c: CableParams) -> list[NormSummand]:
    """The two pieces seen by the cable decomposition.

    Cable space: annulus base with one cone of order n, fiber class
    (n, 1) against the boundary class ((mn)^2 q, p).  Torus-knot piece:
    disk base with cones m and p - qm, fiber (m, 1) against the restricted
    class (m^2 n q, p n).
    """
    p, q, m, n = c.ambient.p, c.ambient.q, c.m, c.n
    if p - q * m < 1:
        raise ValueError(f"piece undefined: cone order p - qm = {p - q * m} < 1")
    mn = m * n
    cable_piece = NormSummand(
        piece=SeifertPiece(base_euler=0, cone_orders=(n,)),
        fiber_pairing=mn * mn * q - p * n,
    )
    torus_piece = NormSummand(
        piece=SeifertPiece(base_euler=1, cone_orders=(m, p - q * m)),
        fiber_pairing=m * m * n * q - p * n * m,
    )
    return [cable_piece, torus_piece]


def torus_side_norm(c: CableParams) -> Fraction:
    """Class norm measured in the (1,mn)-torus-knot complement.

    Closed form |pmn - q(mn)^2| (1 - 1/(mn) - 1/(p - qmn)), clamped at
    zero through the solid-torus extension.
    """
    p, q = c.ambient.p, c.ambient.q
    if p - q * c.m * c.n < 1:
        raise ValueError(
            f"piece undefined: cone order p - qmn = {p - q * c.m * c.n} < 1"
        )
    total, _, _ = clamped_graph_norm([torus_fiber_summand(c.ambient, c.m * c.n)])
    return total


def cable_side_norm(c: CableParams) -> Fraction:
    """Class norm measured through the cable decomposition.

    Closed form |pn - q(mn)^2| (1 - 1/n) + |pmn - qm^2 n| (1 - 1/m - 1/(p-qm)).
    """
    total, _, _ = clamped_graph_norm(cable_side_summands(c))
    return total


def cable_verdict(c: CableParams) -> CableVerdict:
    """Evaluate both norms and certify minimizer / non-simplicity claims.

    Certification requires p >= q m^2 n; above that threshold the two
    norms must agree, and a disagreement is an internal error.  For q = m
    non-simplicity is left uncertified (not refuted).
    """
    p, q, m, n = c.ambient.p, c.ambient.q, c.m, c.n
    n21, _, dropped_torus = clamped_graph_norm([torus_fiber_summand(c.ambient, m * n)])
    n22, _, dropped_cable = clamped_graph_norm(cable_side_summands(c))
    threshold = p >= q * m * m * n
    equal = n21 == n22
    if threshold and not equal:
        raise ConsistencyError(
            f"norms disagree above threshold for {c}: {n21} != {n22}"
        )
    return CableVerdict(
        params=c,
        norm_torus_side=n21,
        norm_cable_side=n22,
        threshold_met=threshold,
        norms_equal=equal,
        certified_minimizer=threshold,
        certified_nonsimple=threshold and q != m,
        homology_class=(m * n) % p,
        theta=n21 / p,
        warnings=_solid_torus_warnings(dropped_cable + dropped_torus),
    )


def iterated_summands(ic: IteratedCableParams) -> list[NormSummand]:
    """Pieces of the iterated-cable decomposition.

    With partial windings w_j = m_1 ... m_j and W = w_k, the innermost
    torus-knot piece (disk, cones m_1 and p - q m_1) pairs as
    W (q w_1 - p); the j-th cable piece (annulus, cone m_j) pairs as
    (W / w_j)(q w_j^2 - p m_j).  Validated against the one- and two-level
    reductions before use.
    """
    p, q = ic.ambient.p, ic.ambient.q
    ms = ic.ms
    if p - q * ms[0] < 1:
        raise ValueError(f"piece undefined: cone order p - q m_1 = {p - q * ms[0]} < 1")
    big_w = ic.total_winding
    summands = [
        NormSummand(
            piece=SeifertPiece(base_euler=1, cone_orders=(ms[0], p - q * ms[0])),
            fiber_pairing=big_w * (q * ms[0] - p),
        )
    ]
    w = ms[0]
    for m in ms[1:]:
        w *= m
        summands.append(
            NormSummand(
                piece=SeifertPiece(base_euler=0, cone_orders=(m,)),
                fiber_pairing=(big_w // w) * (q * w * w - p * m),
            )
        )
    return summands


def iterated_cable_norm(ic: IteratedCableParams) -> Fraction:
    """Class norm of the iterated cable, assembled from its pieces."""
    total, _, _ = clamped_graph_norm(iterated_summands(ic))
    return total


def iterated_verdict(ic: IteratedCableParams) -> IteratedVerdict:
    """Compare the iterated-cable norm with the torus-knot norm of class W.

    Certification threshold: p >= q m_1^2 ... m_{k-1}^2 m_k.  Above it the
    norms must agree exactly.
    """
    p, q = ic.ambient.p, ic.ambient.q
    ms = ic.ms
    summands = iterated_summands(ic)
    norm_it, _, dropped = clamped_graph_norm(summands)
    torus_report = torus_knot_theta(ic.ambient, ic.total_winding)
    bound = q * prod(m * m for m in ms[:-1]) * ms[-1]
    threshold = p >= bound
    equal = norm_it == torus_report.chi_minus
    if threshold and not equal:
        raise ConsistencyError(
            f"iterated norm {norm_it} != torus-side norm {torus_report.chi_minus} "
            f"above threshold for {ic}"
        )
    return IteratedVerdict(
        params=ic,
        norm_iterated=norm_it,
        norm_torus_side=torus_report.chi_minus,
        threshold_met=threshold,
        norms_equal=equal,
        certified_minimizer=threshold and equal,
        homology_class=ic.total_winding % p,
        theta=norm_it / p,
        warnings=_solid_torus_warnings(dropped),
    )


def explicit_surface_check(m: int, n: int) -> SurfaceCheck:
    """Cross-check the explicit minimal surface at p = m^2 n, q = 1.

    Verifies theta of the inner torus knot equals (mn - n - 1)/n, theta of
    class mn equals mn - n - 1, and that a surface of genus
    (mn - 2)(m - 1)/2 with m boundary components has exactly that
    normalized complexity: m (mn - n - 1) = 2g - 2 + b.
    """
    if m < 2 or n < 2:
        raise ValueError("surface check requires m, n >= 2")
    space = LensSpace(p=m * m * n, q=1)
    theta_inner = torus_knot_theta(space, m).theta
    theta_class = torus_knot_theta(space, m * n).theta
    genus = (m * n - 2) * (m - 1) // 2
    boundaries = m
    identity = m * (m * n - n - 1) == 2 * genus - 2 + boundaries
    return SurfaceCheck(
        m=m,
        n=n,
        ambient=space,
        theta_inner=theta_inner,
        theta_inner_expected=Fraction(m * n - n - 1, n),
        theta_class=theta_class,
        theta_class_expected=m * n - n - 1,
        surface_genus=genus,
        surface_boundaries=boundaries,
        surface_identity_holds=identity,
    )

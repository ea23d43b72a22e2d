"""Annulus-twist families of homologous knots, as framed surgery data.

The family K(a,b,n) lives in L(2k,1), k = a + b + 2: a nonorientable
spanning surface made of a disk with k positively half-twisted bands, a
curve gamma through every band, and a co-orientable curve alpha through
two bands, whose push-offs are resurgered to twist gamma.  The deliverable
here is the six-component framed link of that construction, exact first
homology of its fillings, the class of the unfilled component, and an
export line for external geometry software.

The linking numbers are not all forced by the text; the free ones were
derived from the band picture and are locked by the homology grid: every
(a, b, n) must give H1 = Z/2k with gamma in the order-2 class k, the
gamma complement must match the winding-number presentation, and swapping
a and b must change nothing.  Any edit that fails that grid is wrong.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .exactarith import AbelianGroup, IntMatrix, cokernel_invariants, smith_normal_form

#: Marker for a component left unfilled (a cusp of the exported manifold).
UNFILLED = None


@dataclass(frozen=True)
class LinkComponent:
    label: str
    framing: Fraction | None


@dataclass(frozen=True)
class FramedLink:
    """Framed link with a symmetric linking matrix, zero on the diagonal.

    Framings carry the self-linking data, so the diagonal is unused.
    """

    components: tuple[LinkComponent, ...]
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.components)
        if len(self.linking) != n or any(len(r) != n for r in self.linking):
            raise ValueError("linking matrix size must match component count")
        for i in range(n):
            if self.linking[i][i] != 0:
                raise ValueError("linking diagonal must be zero")
            for j in range(i + 1, n):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        labels = [c.label for c in self.components]
        if len(set(labels)) != len(labels):
            raise ValueError("component labels must be unique")

    def index_of(self, label: str) -> int:
        for i, c in enumerate(self.components):
            if c.label == label:
                return i
        raise ValueError(f"no component labelled {label!r}")

    def filled_indices(self) -> list[int]:
        return [i for i, c in enumerate(self.components) if c.framing is not None]


@dataclass(frozen=True)
class TwistParams:
    """Band counts a, b >= 1 and twist count n != 0; k = a + b + 2."""

    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise ValueError("band counts a, b must be >= 1")
        if self.n == 0:
            raise ValueError("twist count n must be nonzero")

    @property
    def k(self) -> int:
        return self.a + self.b + 2


@dataclass(frozen=True)
class FillingSpec:
    """Filling slopes per cusp; None marks an unfilled cusp."""

    fillings: tuple[tuple[int, int] | None, ...]

    def __post_init__(self) -> None:
        for f in self.fillings:
            if f is not None and gcd(f[0], f[1]) != 1:
                raise ValueError(f"filling pair {f} is not coprime")

    def as_text(self) -> str:
        parts = [
            "inf" if f is None else f"({f[0]},{f[1]})" for f in self.fillings
        ]
        return "M(" + ",".join(parts) + ")"


def twist_framings(n: int) -> tuple[Fraction, Fraction]:
    """Surgery coefficients (1 - 1/n, 1 + 1/n) for the two alpha push-offs.

    The annulus framing differs from the Seifert framing by one, which
    turns the twist framings into these rational coefficients.  The pair
    is returned in the order (alpha0, alpha1) = (1 - 1/n, 1 + 1/n); the
    homology of the construction is insensitive to swapping the two.
    """
    if n == 0:
        raise ValueError("twist count n must be nonzero")
    return Fraction(n - 1, n), Fraction(n + 1, n)


def build_twist_diagram(t: TwistParams) -> FramedLink:
    """Six-component framed link presenting K(a,b,n) in L(2k,1).

    Components: the surface boundary dF framed k+2 (the 2k surface framing
    minus the a+b twists absorbed into the encircling curves), the two
    encircling curves framed -1/a and -1/b, the two alpha push-offs framed
    per ``twist_framings``, and the unfilled gamma.

    Linking data, locked by the homology grid: each encircling curve links
    dF and gamma once; gamma runs through two bands not absorbed into the
    twist regions, linking dF twice; alpha crosses two such bands as well
    (linking dF twice) and its push-offs link each other once through the
    annulus and gamma once each (their two surface crossings with gamma
    cancel through the annulus).
    """
    k = t.k
    f0, f1 = twist_framings(t.n)
    components = (
        LinkComponent("dF", Fraction(k + 2)),
        LinkComponent("Acircle", Fraction(-1, t.a)),
        LinkComponent("Bcircle", Fraction(-1, t.b)),
        LinkComponent("alpha0", f0),
        LinkComponent("alpha1", f1),
        LinkComponent("gamma", UNFILLED),
    )
    linking = (
        #       dF  A  B a0 a1  g
        (0, 1, 1, 2, 2, 2),  # dF
        (1, 0, 0, 0, 0, 1),  # Acircle
        (1, 0, 0, 0, 0, 1),  # Bcircle
        (2, 0, 0, 0, 1, 1),  # alpha0
        (2, 0, 0, 1, 0, 1),  # alpha1
        (2, 1, 1, 1, 1, 0),  # gamma
    )
    return FramedLink(components=components, linking=linking)


def _relation_matrix(fl: FramedLink, generators: Sequence[int]) -> IntMatrix:
    """Surgery relations over the meridians listed in ``generators``.

    Filling component i by p/q imposes p*mu_i + q * sum lk(i,j) mu_j = 0.
    Only filled components among ``generators`` contribute a relation,
    but the relation sees every generator.
    """
    rows = []
    for i in generators:
        fr = fl.components[i].framing
        if fr is None:
            continue
        row = [
            fr.numerator if j == i else fr.denominator * fl.linking[i][j]
            for j in generators
        ]
        rows.append(row)
    if not rows:
        return IntMatrix.zero_rows(len(generators))
    return IntMatrix.from_rows(rows)


def h1_of_filling(fl: FramedLink) -> AbelianGroup:
    """First homology of the closed manifold given by the filled components.

    Unfilled components are ignored entirely; use ``unfilled_class`` to
    track where such a component lands.
    """
    return cokernel_invariants(_relation_matrix(fl, fl.filled_indices()))


def h1_of_complement(fl: FramedLink) -> AbelianGroup:
    """First homology of the filled manifold minus the unfilled components."""
    return cokernel_invariants(_relation_matrix(fl, range(len(fl.components))))


def unfilled_class(fl: FramedLink, label: str) -> int:
    """Homology class of an unfilled component in the filled manifold.

    The component is homologous to the sum of its linking numbers times
    the meridians of the filled components.  The filled manifold's first
    homology must be cyclic; the class is returned as a nonnegative
    residue (an integer when the group is infinite cyclic).
    """
    idx = fl.index_of(label)
    if fl.components[idx].framing is not None:
        raise ValueError(f"component {label!r} is filled")
    filled = fl.filled_indices()
    rel = _relation_matrix(fl, filled)
    group = cokernel_invariants(rel)
    if not group.is_cyclic():
        raise ValueError(f"first homology {group} is not cyclic")
    vec = tuple(fl.linking[idx][j] for j in filled)
    if group.order() == 1:
        return 0
    snf = smith_normal_form(rel)
    # The lone diagonal entry not equal to 1 carries the cyclic coordinate.
    for j in range(rel.cols):
        dj = snf.D.at(j, j) if j < snf.D.rows else 0
        if dj != 1:
            coord = sum(vec[i] * snf.V.at(i, j) for i in range(rel.cols))
            return coord % dj if dj else coord
    raise AssertionError("cyclic group with no non-unit diagonal entry")


def filling_spec_export(t: TwistParams) -> tuple[FillingSpec, str]:
    """Cusp-filling spec for the six-component link and its canonical line.

    The cusps are ordered so the filled manifold reads
    M((-1,a),(-1,b),(k+2,1),(n-1,n),(n+1,n),inf); the last cusp is the
    knot K(a,b,n) itself.
    """
    spec = FillingSpec(
        fillings=(
            (-1, t.a),
            (-1, t.b),
            (t.k + 2, 1),
            (t.n - 1, t.n),
            (t.n + 1, t.n),
            None,
        )
    )
    return spec, spec.as_text()


def export_filling_specs(
    params: Iterable[TwistParams],
    path: str,
    sidecar_path: str | None = None,
) -> int:
    """Write one canonical spec line per parameter triple; returns the count.

    The optional JSON sidecar records, per triple, the parameters, the
    order of the filled manifold's first homology, the class of the
    unfilled component, and the spec line.
    """
    lines = []
    records = []
    for t in params:
        spec, text = filling_spec_export(t)
        lines.append(text)
        if sidecar_path is not None:
            fl = build_twist_diagram(t)
            order = h1_of_filling(fl).order()
            records.append(
                {
                    "a": t.a,
                    "b": t.b,
                    "n": t.n,
                    "k": t.k,
                    "h1_order": order,
                    "gamma_class": unfilled_class(fl, "gamma"),
                    "spec": text,
                }
            )
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + ("\n" if lines else ""))
    if sidecar_path is not None:
        with open(sidecar_path, "w", encoding="ascii") as fh:
            json.dump(records, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return len(lines)

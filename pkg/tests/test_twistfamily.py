import json
from fractions import Fraction

import pytest

from lensgenus.complement import WindingData, presentation_matrix
from lensgenus.exactarith import AbelianGroup, cokernel_invariants
from lensgenus.lens import LensSpace
from lensgenus.twistfamily import (
    UNFILLED,
    FillingSpec,
    FramedLink,
    LinkComponent,
    TwistParams,
    build_twist_diagram,
    export_filling_specs,
    filling_spec_export,
    h1_of_complement,
    h1_of_filling,
    twist_framings,
    unfilled_class,
)

TWIST_GRID = [
    (a, b, n)
    for a in range(1, 6)
    for b in range(1, 6)
    for n in [-5, -3, -1, 1, 2, 4, 5]
]


class TestTwistFramings:
    @pytest.mark.parametrize(
        "n, expected",
        [
            (1, (Fraction(0), Fraction(2))),
            (-1, (Fraction(2), Fraction(0))),
            (5, (Fraction(4, 5), Fraction(6, 5))),
        ],
    )
    def test_examples(self, n, expected):
        assert twist_framings(n) == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            twist_framings(0)


class TestDiagram:
    def test_structure(self):
        fl = build_twist_diagram(TwistParams(2, 3, 4))
        assert len(fl.components) == 6
        unfilled = [c for c in fl.components if c.framing is UNFILLED]
        assert [c.label for c in unfilled] == ["gamma"]

    def test_frozen_framings(self):
        fl = build_twist_diagram(TwistParams(1, 3, 2))
        values = [c.framing for c in fl.components[:5]]
        assert values == [
            Fraction(8),
            Fraction(-1),
            Fraction(-1, 3),
            Fraction(1, 2),
            Fraction(3, 2),
        ]

    def test_first_example_framings(self):
        fl = build_twist_diagram(TwistParams(1, 1, 1))
        assert fl.components[0].framing == 6
        assert fl.components[3].framing == 0
        assert fl.components[4].framing == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            TwistParams(0, 1, 1)
        with pytest.raises(ValueError):
            TwistParams(1, 1, 0)


class TestFramedLink:
    def test_symmetry_enforced(self):
        with pytest.raises(ValueError, match="symmetric"):
            FramedLink(
                components=(
                    LinkComponent("x", Fraction(1)),
                    LinkComponent("y", Fraction(1)),
                ),
                linking=((0, 1), (2, 0)),
            )

    def test_diagonal_enforced(self):
        with pytest.raises(ValueError, match="diagonal"):
            FramedLink(
                components=(LinkComponent("x", Fraction(1)),),
                linking=((3,),),
            )


class TestFillingHomology:
    def test_single_unknot(self):
        fl = FramedLink(
            components=(LinkComponent("u", Fraction(8)),),
            linking=((0,),),
        )
        assert h1_of_filling(fl) == AbelianGroup(0, (8,))

    def test_hopf_link_surgery_description(self):
        # p/q on one component, the other unfilled: the filled manifold is
        # the lens space, its homology Z/p.
        for p, q in [(8, 1), (5, 2), (13, 5)]:
            fl = FramedLink(
                components=(
                    LinkComponent("L2", Fraction(p, q)),
                    LinkComponent("L1", UNFILLED),
                ),
                linking=((0, 1), (1, 0)),
            )
            assert h1_of_filling(fl) == AbelianGroup(0, (p,))
            assert unfilled_class(fl, "L1") == 1 % p

    def test_twist_diagram_gives_order_two_k(self):
        fl = build_twist_diagram(TwistParams(1, 1, 1))
        assert h1_of_filling(fl) == AbelianGroup(0, (8,))

    def test_grid(self):
        for a, b, n in TWIST_GRID:
            t = TwistParams(a, b, n)
            fl = build_twist_diagram(t)
            assert h1_of_filling(fl) == AbelianGroup(0, (2 * t.k,)), (a, b, n)

    def test_complement_matches_winding_presentation(self):
        # The knot has winding number k in the Heegaard solid torus, so the
        # complement homology must match the winding-number presentation.
        for a, b, n in [(1, 1, 1), (1, 3, 2), (2, 2, 5), (3, 5, -4)]:
            t = TwistParams(a, b, n)
            fl = build_twist_diagram(t)
            data = WindingData(LensSpace(2 * t.k, 1), t.k)
            assert h1_of_complement(fl) == cokernel_invariants(
                presentation_matrix(data)
            )


class TestUnfilledClass:
    def test_first_example(self):
        fl = build_twist_diagram(TwistParams(1, 1, 1))
        assert unfilled_class(fl, "gamma") == 4

    def test_independent_of_n(self):
        for a, b in [(1, 3), (2, 2), (4, 5)]:
            values = {
                unfilled_class(build_twist_diagram(TwistParams(a, b, n)), "gamma")
                for n in [-5, -2, -1, 1, 2, 3, 5]
            }
            assert len(values) == 1
            k = a + b + 2
            assert values.pop() % (2 * k) in (k, (-k) % (2 * k))

    def test_specific_values(self):
        assert unfilled_class(build_twist_diagram(TwistParams(1, 3, 2)), "gamma") == 6
        assert unfilled_class(build_twist_diagram(TwistParams(2, 2, 5)), "gamma") == 6

    def test_swap_symmetry(self):
        for a, b, n in [(1, 3, 2), (2, 5, -4), (4, 1, 3)]:
            one = build_twist_diagram(TwistParams(a, b, n))
            two = build_twist_diagram(TwistParams(b, a, n))
            assert h1_of_filling(one) == h1_of_filling(two)
            assert unfilled_class(one, "gamma") == unfilled_class(two, "gamma")

    def test_filled_component_rejected(self):
        fl = build_twist_diagram(TwistParams(1, 1, 1))
        with pytest.raises(ValueError, match="filled"):
            unfilled_class(fl, "dF")


class TestExport:
    def test_canonical_lines(self):
        _, line = filling_spec_export(TwistParams(1, 1, 1))
        assert line == "M((-1,1),(-1,1),(6,1),(0,1),(2,1),inf)"
        _, line = filling_spec_export(TwistParams(1, 3, 2))
        assert line == "M((-1,1),(-1,3),(8,1),(1,2),(3,2),inf)"

    def test_n_one_gives_zero_filling(self):
        spec, _ = filling_spec_export(TwistParams(2, 3, 1))
        assert spec.fillings[3] == (0, 1)

    def test_pairs_coprime(self):
        from math import gcd

        for a, b, n in TWIST_GRID:
            spec, _ = filling_spec_export(TwistParams(a, b, n))
            for f in spec.fillings:
                assert f is None or gcd(f[0], f[1]) == 1
        with pytest.raises(ValueError, match="coprime"):
            FillingSpec(fillings=((2, 4),))

    def test_byte_stable(self):
        lines = {filling_spec_export(TwistParams(2, 3, -5))[1] for _ in range(5)}
        assert len(lines) == 1

    def test_export_files(self, tmp_path):
        out = tmp_path / "specs.txt"
        sidecar = tmp_path / "specs.json"
        count = export_filling_specs(
            [TwistParams(1, 1, 1), TwistParams(1, 3, 2)],
            str(out),
            str(sidecar),
        )
        assert count == 2
        assert out.read_text() == (
            "M((-1,1),(-1,1),(6,1),(0,1),(2,1),inf)\n"
            "M((-1,1),(-1,3),(8,1),(1,2),(3,2),inf)\n"
        )
        records = json.loads(sidecar.read_text())
        assert records[0] == {
            "a": 1,
            "b": 1,
            "n": 1,
            "k": 4,
            "h1_order": 8,
            "gamma_class": 4,
            "spec": "M((-1,1),(-1,1),(6,1),(0,1),(2,1),inf)",
        }

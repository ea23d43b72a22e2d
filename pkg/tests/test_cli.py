import json

from lensgenus.cli import canonical_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), out


class TestExitCodes:
    def test_certified_cable(self, capsys):
        code, out, _ = run(capsys, "cable", "--p", "8", "--q", "1", "--m", "2", "--n", "2")
        assert code == 0
        assert "CERTIFIED" in out

    def test_below_threshold_cable(self, capsys):
        code, out, _ = run(capsys, "cable", "--p", "7", "--q", "1", "--m", "2", "--n", "2")
        assert code == 2

    def test_invalid_input(self, capsys):
        code, _, err = run(capsys, "cable", "--p", "4", "--q", "2", "--m", "2", "--n", "2")
        assert code == 1
        assert "coprime" in err

    def test_unknot_theta(self, capsys):
        code, out, _ = run(capsys, "theta", "--p", "8", "--q", "1", "--class", "0")
        assert code == 0
        assert "EXACT" in out

    def test_exact_label_whenever_computable(self, capsys):
        # p - qc >= 1 forces qc <= p - 1 < p + q, so every class the
        # torus-knot route can evaluate satisfies the torus criterion and
        # is labelled EXACT; classes beyond the route error out instead.
        code, out, _ = run(capsys, "theta", "--p", "23", "--q", "3", "--class", "7")
        assert code == 0
        assert "EXACT" in out


class TestJsonOutput:
    def test_round_trip_byte_identical(self, capsys):
        code, payload, raw = run_json(
            capsys, "cable", "--p", "8", "--q", "1", "--m", "2", "--n", "2"
        )
        assert code == 0
        assert canonical_json(payload) == raw

    def test_rationals_are_exact_pairs(self, capsys):
        _, payload, raw = run_json(
            capsys, "stab", "--p", "10", "--q", "1", "--k", "1"
        )
        assert payload["results"]["theta"] == {"num": 3, "den": 2}
        assert "e-" not in raw and "0." not in raw

    def test_no_floats_anywhere(self, capsys):
        _, payload, _ = run_json(
            capsys, "cable", "--p", "17", "--q", "2", "--m", "2", "--n", "2"
        )

        def no_floats(obj):
            if isinstance(obj, float):
                return False
            if isinstance(obj, dict):
                return all(no_floats(v) for v in obj.values())
            if isinstance(obj, list):
                return all(no_floats(v) for v in obj)
            return True

        assert no_floats(payload)


class TestSubcommands:
    def test_simple_knot(self, capsys):
        code, payload, _ = run_json(
            capsys, "simple-knot", "--p", "8", "--q", "1", "--class", "4"
        )
        assert code == 0
        assert payload["results"]["parameter_a"] == 4

    def test_theta_values(self, capsys):
        _, payload, _ = run_json(capsys, "theta", "--p", "8", "--q", "1", "--class", "4")
        assert payload["results"]["theta"] == {"num": 1, "den": 1}
        assert payload["results"]["label"] == "EXACT"

    def test_iterated(self, capsys):
        code, payload, _ = run_json(
            capsys, "iterated", "--p", "32", "--q", "1", "--ms", "2,2,2"
        )
        assert code == 0
        assert payload["results"]["norm_iterated"] == {"num": 160, "den": 1}

    def test_order2(self, capsys):
        code, payload, _ = run_json(capsys, "order2", "--k", "3")
        assert code == 0
        assert payload["results"]["nonorientable_genus"] == 3
        code, payload, _ = run_json(capsys, "order2", "--k", "4")
        assert code == 2
        assert not payload["certifications"]["unique_minimizer"]["holds"]

    def test_twist_with_export(self, capsys, tmp_path):
        out = tmp_path / "specs.txt"
        sidecar = tmp_path / "specs.json"
        code, payload, _ = run_json(
            capsys,
            "twist",
            "--a", "1", "--b", "1", "--n", "1",
            "--export", str(out),
            "--sidecar", str(sidecar),
        )
        assert code == 0
        assert payload["results"]["gamma_class"] == 4
        assert out.read_text() == "M((-1,1),(-1,1),(6,1),(0,1),(2,1),inf)\n"
        assert json.loads(sidecar.read_text())[0]["h1_order"] == 8

    def test_boundary_kernel_oracle(self, capsys):
        code, payload, _ = run_json(
            capsys, "boundary-kernel", "--p", "8", "--q", "1", "--w", "4", "--oracle"
        )
        assert code == 0
        assert payload["certifications"]["oracle_agreement"]["holds"]
        assert payload["results"]["mu_coeff"] == 4
        assert payload["results"]["oracle_mu_coeff"] == 4

    def test_oracle_flag_does_not_change_results(self, capsys):
        _, plain, _ = run_json(capsys, "boundary-kernel", "--p", "15", "--q", "4", "--w", "6")
        _, oracled, _ = run_json(
            capsys, "boundary-kernel", "--p", "15", "--q", "4", "--w", "6", "--oracle"
        )
        for key in ("mu_coeff", "lambda_coeff"):
            assert plain["results"][key] == oracled["results"][key]


class TestSweep:
    def test_cable_sweep(self, capsys):
        code, payload, _ = run_json(
            capsys,
            "sweep", "cable",
            "--p", "8:60", "--q", "1:2", "--m", "2:3", "--n", "2:3",
        )
        assert code == 0
        res = payload["results"]
        assert res["points"] > 0
        assert res["norms_equal_above_threshold"] == res["threshold_met"]
        assert res["mismatches_above_threshold"] == []

    def test_parallel_matches_serial(self, capsys):
        args = ["sweep", "boundary-kernel", "--p", "2:20", "--q", "1:19", "--w", "0:10"]
        code1, p1, raw1 = run_json(capsys, *args)
        code2, p2, raw2 = run_json(capsys, *args, "--jobs", "2")
        assert (code1, p1["results"]) == (code2, p2["results"])
        assert raw1 == raw2

    def test_twist_sweep_negative_range(self, capsys):
        code, payload, _ = run_json(
            capsys, "sweep", "twist", "--a", "1:2", "--b", "1:2", "--n=-2:2"
        )
        assert code == 0
        assert payload["results"]["points"] == 16  # n = 0 skipped
        assert payload["results"]["mismatches"] == []

    def test_stab_sweep(self, capsys):
        code, payload, _ = run_json(
            capsys, "sweep", "stab", "--p", "10:40", "--q", "1:2", "--k", "1:3"
        )
        assert code == 0
        assert payload["results"]["certified"] == payload["results"]["points"]

    def test_iterated_sweep(self, capsys):
        code, payload, _ = run_json(
            capsys, "sweep", "iterated", "--p", "32:80", "--q", "1:1", "--ms", "2,2,2"
        )
        assert code == 0
        assert payload["results"]["mismatches_above_threshold"] == []


class TestThetaEdgeCases:
    def test_class_beyond_torus_route(self, capsys):
        # L(5,2), class 3: cone order 5 - 6 < 1, no formula applies.
        code, _, err = run(capsys, "theta", "--p", "5", "--q", "2", "--class", "3")
        assert code == 1
        assert "no torus-knot route" in err


class TestArgumentValidation:
    def test_missing_sweep_range(self, capsys):
        code, _, err = run(capsys, "sweep", "cable", "--p", "8:20")
        assert code == 1
        assert "--q" in err

    def test_missing_sweep_ms(self, capsys):
        code, _, err = run(capsys, "sweep", "iterated", "--p", "32:40", "--q", "1:1")
        assert code == 1
        assert "--ms" in err

    def test_sidecar_requires_export(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "twist", "--a", "1", "--b", "1", "--n", "1",
            "--sidecar", str(tmp_path / "s.json"),
        )
        assert code == 1
        assert "requires --export" in err

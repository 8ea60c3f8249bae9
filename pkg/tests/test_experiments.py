import json
import math

import numpy as np
import pytest

from gaugedist import (
    Cone,
    Disc,
    GeneratorSpec,
    PBall,
    diamond,
    distance_set,
    erdos_bound,
    run_lemma_checks,
    run_moser,
    run_sweep,
    square,
    taxicab_count,
    write_jsonl,
    write_moser_csv,
    write_sweep_csv,
)
from gaugedist.cli import main


LATTICE = GeneratorSpec(kind="lattice", R=5.0)


class TestSweep:
    def test_polygon_bodies_keep_unit_gap(self):
        for body in (square(), diamond()):
            rows = run_sweep(body, LATTICE, [5, 10, 20], exact=True)
            assert all(r.min_gap == 1 for r in rows)
            assert all(r.n_points == (2 * int(r.R) + 1) ** 2 for r in rows)
            assert abs(rows[0].alpha_hat - 2.0) < 0.15

    def test_disc_gap_decays(self):
        rows = run_sweep(Disc(1.0), LATTICE, [5, 10, 20], exact=True)
        gaps = [r.min_gap for r in rows]
        assert gaps[0] > gaps[1] > gaps[2]

    def test_row_counts_match_direct_distance_set(self):
        from gaugedist import generate

        rows = run_sweep(diamond(), LATTICE, [3], exact=True)
        ps = generate(GeneratorSpec(kind="lattice", R=3.0))
        ds = distance_set(diamond(), ps, exact=True)
        assert rows[0].n_distances == len(ds)

    def test_fewer_than_three_radii_leaves_alpha_empty(self):
        rows = run_sweep(square(), LATTICE, [5, 10], exact=True)
        assert all(r.alpha_hat is None for r in rows)

    def test_float_mode_perturbed_set(self):
        spec = GeneratorSpec(kind="perturbed_lattice", R=5.0, jitter=0.3, seed=2)
        rows = run_sweep(Disc(1.0), spec, [3, 5], tol=1e-9)
        assert all(r.n_distances > r.n_points for r in rows)  # generic positions


class TestTaxicab:
    def test_square_n50(self):
        rep = taxicab_count(50, "square")
        assert rep["n_distances"] == 51
        assert rep["ratio_to_sqrt_n_points"] == 1.0

    def test_diamond_n50(self):
        assert taxicab_count(50, "diamond")["n_distances"] == 101

    def test_n1(self):
        assert taxicab_count(1, "square")["n_distances"] == 2

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            taxicab_count(0)
        with pytest.raises(ValueError):
            taxicab_count(5, "pentagon")


class TestErdosBound:
    def test_lattice_witness_counts(self):
        # distinct counts for the 20x20 lattice, all comfortably >= sqrt(N)/... never flagged
        for body, expected in [(square(), 20), (diamond(), 39), (Disc(1.0), 180)]:
            rep = erdos_bound(body, 400, seed=5)
            assert rep["witnesses"]["lattice"]["n_distances"] == expected
            assert not rep["flagged"]

    def test_random_points_are_generic(self):
        rep = erdos_bound(Disc(1.0), 30, seed=11)
        assert rep["witnesses"]["random"]["n_distances"] == 30 * 29 // 2 + 1

    def test_collinear_four_points_square_body(self):
        ds = distance_set(square(), np.array([[0.0, 0], [1, 0], [2, 0], [3, 0]]), exact=True)
        assert ds.values == (0, 1, 2, 3)

    def test_needs_four_points(self):
        with pytest.raises(ValueError):
            erdos_bound(square(), 3)

    def test_pball_body_supported(self):
        rep = erdos_bound(PBall(1.5, 1.0), 25, seed=1)
        assert rep["witnesses"]["lattice"]["n_distances"] >= 5


class TestLemmaBatches:
    def test_unknown_which(self):
        with pytest.raises(ValueError):
            run_lemma_checks("15", 10, 0)
        with pytest.raises(ValueError):
            run_lemma_checks("13", 0, 0)

    def test_batch_reruns_identically(self):
        a = run_lemma_checks("14", 40, seed=9)
        b = run_lemma_checks("14", 40, seed=9)
        assert a.rows == b.rows

    def test_alpha_one_subsuite_present(self):
        batch = run_lemma_checks("14", 40, seed=9)
        assert any(r["alpha"] == 1.0 for r in batch.rows)
        assert any(r["alpha"] != 1.0 for r in batch.rows)

    def test_row_schema(self):
        batch = run_lemma_checks("13", 8, seed=2)
        for row in batch.rows:
            assert set(row) == {"trial", "alpha", "u", "classes", "max_concurrence_error", "flags"}
        strict = run_lemma_checks("strict", 3, seed=2)
        for row in strict.rows:
            assert set(row) == {"trial", "alpha", "u", "count", "flags"}


class TestWriters:
    def test_sweep_csv_timestamp_toggle(self, tmp_path):
        rows = run_sweep(square(), LATTICE, [3], exact=True)
        with_ts = tmp_path / "a.csv"
        without = tmp_path / "b.csv"
        write_sweep_csv(rows, with_ts, timestamp=True)
        write_sweep_csv(rows, without, timestamp=False)
        assert with_ts.read_text().startswith("# generated ")
        assert without.read_text().startswith("R,n_points,")

    def test_jsonl_roundtrip(self, tmp_path):
        batch = run_lemma_checks("13", 10, seed=4)
        path = tmp_path / "rows.jsonl"
        write_jsonl(batch.rows, path, timestamp=False)
        back = [json.loads(line) for line in path.read_text().splitlines()]
        assert back == [json.loads(json.dumps(r)) for r in batch.rows]

    def test_moser_csv(self, tmp_path):
        rows = run_moser(square(), Cone(0, math.pi / 2), Cone(math.pi / 8, 3 * math.pi / 8), [1, 2])
        path = tmp_path / "m.csv"
        write_moser_csv(rows, path, timestamp=False)
        lines = path.read_text().splitlines()
        assert lines[0] == "N,count,bound,met,truncated"
        assert lines[1].startswith("1,") and lines[1].endswith("true,false")


class TestCli:
    def test_sweep_roundtrip(self, tmp_path):
        out = tmp_path / "sweep.csv"
        rc = main([
            "sweep", "--body", "square", "--set", "lattice", "--R", "5,10",
            "--exact", "--out", str(out), "--no-timestamp",
        ])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "R,n_points,n_distances,min_gap,alpha_hat"
        assert lines[1] == "5.0,121,11,1.0,"

    def test_sweep_rerun_byte_identical(self, tmp_path):
        args = lambda p: [
            "sweep", "--body", "disc", "--set", "lattice", "--R", "5,10",
            "--exact", "--out", str(p), "--no-timestamp",
        ]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(args(a)) == 0 and main(args(b)) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_taxicab(self, tmp_path, capsys):
        rc = main(["taxicab-count", "--n", "10", "--out", str(tmp_path / "t.json")])
        assert rc == 0
        report = json.loads((tmp_path / "t.json").read_text())
        assert report["n_distances"] == 11

    def test_erdos_exit_code(self, capsys):
        assert main(["erdos-bound", "--body", "disc", "--N", "36", "--seed", "2"]) == 0
        capsys.readouterr()

    def test_lemma_checks_and_determinism(self, tmp_path, capsys):
        out1, out2 = tmp_path / "l1.jsonl", tmp_path / "l2.jsonl"
        for out in (out1, out2):
            rc = main([
                "lemma-checks", "--which", "14", "--trials", "25", "--seed", "7",
                "--out", str(out), "--no-timestamp",
            ])
            assert rc == 0
        capsys.readouterr()
        assert out1.read_bytes() == out2.read_bytes()

    def test_moser_exit_code(self, tmp_path, capsys):
        rc = main([
            "moser", "--body", "square",
            "--cone", "0,1.5707963267948966",
            "--cone-inner", "0.39269908169872414,1.1780972450961724",
            "--N-range", "1..3",
            "--out", str(tmp_path / "m.csv"), "--no-timestamp",
        ])
        assert rc == 0
        capsys.readouterr()

    def test_usage_error_is_exit_2(self):
        assert main(["sweep", "--set", "nonsense", "--R", "5"]) == 2
        assert main(["no-such-command"]) == 2

    def test_missing_file_is_exit_2(self, capsys):
        rc = main(["sweep", "--body", "missing.json", "--set", "lattice", "--R", "5"])
        assert rc == 2
        capsys.readouterr()

    def test_file_set_requires_radius(self, tmp_path, capsys):
        path = tmp_path / "p.csv"
        path.write_text("x,y\n0.0,0.0\n1.0,0.0\n")
        rc = main(["sweep", "--body", "square", "--set", f"file:{path}"])
        assert rc == 2
        capsys.readouterr()

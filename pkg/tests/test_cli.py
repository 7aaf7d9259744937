"""Command-line interface: exit codes, file outputs, reproducibility."""

import json
import subprocess
import sys

from mnlab.cli import main


def run(argv, capsys):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


class TestGroupMake:
    def test_dihedral_file(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        rc, stdout, _ = run(["group", "make", "--kind", "dihedral", "--m", "3",
                             "--out", str(out)], capsys)
        assert rc == 0
        data = json.loads(out.read_text())
        assert data["degree"] == 3 and len(data["generators"]) == 2
        assert json.loads(stdout)["order"] == 6

    def test_regular_flag(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        rc, stdout, _ = run(["group", "make", "--kind", "dihedral", "--m", "3",
                             "--regular", "--out", str(out)], capsys)
        assert rc == 0
        assert json.loads(stdout)["degree"] == 6

    def test_product(self, capsys):
        rc, stdout, _ = run(["group", "make", "--kind", "product",
                             "--left", "cyclic:2", "--right", "cyclic:3"], capsys)
        assert rc == 0 and json.loads(stdout)["order"] == 6

    def test_missing_parameter_is_usage_error(self, capsys):
        rc, _, err = run(["group", "make", "--kind", "dihedral"], capsys)
        assert rc == 2 and "--m" in err

    def test_unknown_flag_is_an_error(self, capsys):
        rc, _, _ = run(["group", "make", "--kind", "dihedral", "--m", "3",
                        "--frobnicate"], capsys)
        assert rc == 2


class TestWitnessAndCon:
    def test_witness_then_con_with_oracle(self, tmp_path, capsys):
        algebra = tmp_path / "w.algebra"
        rc, stdout, _ = run(["witness", "--p", "3", "--out", str(algebra)], capsys)
        assert rc == 0
        head = json.loads(stdout)
        assert head["size"] == 6 and head["lattice"]["shape"] == "M_n"

        dot = tmp_path / "w.dot"
        report = tmp_path / "con.json"
        rc, stdout, _ = run(["con", str(algebra), "--oracle",
                             "--dot", str(dot), "--out", str(report)], capsys)
        assert rc == 0
        data = json.loads(report.read_text())
        assert data["lattice"] == {"size": 6, "height": 2, "atoms": 4,
                                   "shape": "M_n", "n": 4}
        assert data["oracle"] == {"checked": True, "match": True}
        assert len(data["congruences"]) == 6
        assert dot.read_text().count("->") == 8

    def test_witness_rejects_non_prime(self, capsys):
        rc, _, err = run(["witness", "--p", "4"], capsys)
        assert rc == 2 and "prime" in err

    def test_con_missing_file(self, tmp_path, capsys):
        rc, _, err = run(["con", str(tmp_path / "nope.algebra")], capsys)
        assert rc == 2

    def test_con_oracle_size_cap(self, tmp_path, capsys):
        algebra = tmp_path / "big.algebra"
        rot12 = [(i + 1) % 12 for i in range(12)]
        algebra.write_text(json.dumps(
            {"format": 1, "size": 12, "ops": [rot12]}))
        rc, _, err = run(["con", str(algebra), "--oracle"], capsys)
        assert rc == 2 and "oracle" in err
        # without the oracle flag the same file is fine
        rc, stdout, _ = run(["con", str(algebra)], capsys)
        assert rc == 0 and len(json.loads(stdout)["congruences"]) == 6


class TestInterval:
    def test_interval_report(self, tmp_path, capsys):
        g, h = tmp_path / "g.json", tmp_path / "h.json"
        assert run(["group", "make", "--kind", "symmetric", "--n", "3",
                    "--out", str(g)], capsys)[0] == 0
        h.write_text(json.dumps({"format": 1, "degree": 3,
                                 "generators": []}))
        rc, stdout, _ = run(["interval", str(g), str(h)], capsys)
        assert rc == 0
        data = json.loads(stdout)
        assert data["lattice"]["shape"] == "M_n" and data["lattice"]["n"] == 4
        assert data["interval"]["index"] == 6

    def test_not_a_subgroup_names_input(self, tmp_path, capsys):
        g, h = tmp_path / "g.json", tmp_path / "h.json"
        g.write_text(json.dumps({"format": 1, "degree": 3,
                                 "generators": [[1, 0, 2]]}))
        h.write_text(json.dumps({"format": 1, "degree": 3,
                                 "generators": [[1, 2, 0]]}))
        rc, _, err = run(["interval", str(g), str(h)], capsys)
        assert rc == 2 and "not a subgroup" in err and str(h) in err


class TestVerify:
    def test_lemma_small_passes(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        rc, stdout, _ = run(["verify", "lemma", "--max-order", "6",
                             "--out", str(report)], capsys)
        assert rc == 0
        data = json.loads(report.read_text())
        assert data["status"] == "PASS" and data["sweep"] == "lemma"

    def test_lemma_trivial_catalog_is_vacuous(self, capsys):
        rc, stdout, _ = run(["verify", "lemma", "--max-order", "1"], capsys)
        data = json.loads(stdout)
        # no M_n intervals at all, so no hypothesis hits and no failures
        assert data["counts"]["hypothesis_hits"] == 0
        assert data["counterexamples"] == []

    def test_theorem1_p3_requires_slow(self, capsys):
        rc, _, err = run(["verify", "theorem1", "--p", "3"], capsys)
        assert rc == 2 and "--slow" in err

    def test_theorem2_small(self, capsys):
        rc, stdout, _ = run(["verify", "theorem2", "--p", "3",
                             "--max-size", "4"], capsys)
        assert rc == 0
        data = json.loads(stdout)
        assert data["status"] == "PASS"

    def test_theorem2_rejects_p5(self, capsys):
        rc, _, err = run(["verify", "theorem2", "--p", "5",
                          "--max-size", "4"], capsys)
        assert rc == 2 and "p = 3" in err

    def test_threads_validated(self, capsys):
        rc, _, err = run(["verify", "lemma", "--max-order", "4",
                          "--threads", "0"], capsys)
        assert rc == 2 and "threads" in err
        rc, _, _ = run(["verify", "lemma", "--max-order", "4",
                        "--threads", "2"], capsys)
        assert rc == 0

    def test_identical_argv_identical_report_modulo_timing(self, tmp_path, capsys):
        r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
        run(["verify", "lemma", "--max-order", "8", "--out", str(r1)], capsys)
        run(["verify", "lemma", "--max-order", "8", "--out", str(r2)], capsys)
        d1, d2 = json.loads(r1.read_text()), json.loads(r2.read_text())
        d1.pop("timing_ms"), d2.pop("timing_ms")
        assert d1 == d2


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "mnlab.cli", "witness", "--p", "2"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["size"] == 4

    def test_no_command_is_usage_error(self, capsys):
        assert run([], capsys)[0] == 2

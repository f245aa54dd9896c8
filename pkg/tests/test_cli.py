import csv
import io
import json

import pytest

from antimagic import EdgeLabeling, make_complete, make_cycle_zigzag
from antimagic.cli import main
from antimagic.sweep import SweepConfig, SweepConfigError, rows_to_csv, run_sweep


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


class TestGenerate:
    @pytest.mark.parametrize(
        "argv,counts",
        [
            (["--family", "barbell", "--n", "4"], (8, 13)),
            (["--family", "cycle-corona", "--m", "4", "--n", "4"], (20, 52)),
            (["--family", "bistar", "--x", "2", "--n", "3"], (7, 6)),
            (["--family", "bistar-corona", "--x", "2", "--n", "3", "--h", "cycle:4"], (31, 78)),
        ],
    )
    def test_counts(self, capsys, argv, counts):
        code, out, _ = run(capsys, "generate", *argv)
        d = json.loads(out)
        assert code == 0
        assert (d["vertex_count"], len(d["edges"])) == counts

    def test_deterministic(self, capsys):
        _, a, _ = run(capsys, "generate", "--family", "cycle-corona", "--m", "3", "--n", "5")
        _, b, _ = run(capsys, "generate", "--family", "cycle-corona", "--m", "3", "--n", "5")
        assert a == b

    def test_spec_file(self, capsys, tmp_path):
        spec = write_json(tmp_path / "s.json", {"kind": "barbell", "params": {"n": 3}})
        code, out, _ = run(capsys, "generate", "--spec", spec)
        assert code == 0 and json.loads(out)["vertex_count"] == 6

    @pytest.mark.parametrize(
        "argv",
        [["--family", "barbell", "--n", "2"], ["--family", "bogus", "--n", "3"], [],
         ["--family", "bistar-corona", "--x", "2", "--n", "2", "--h", "star:3"]],
    )
    def test_bad_input(self, capsys, argv):
        code, _, err = run(capsys, "generate", *argv)
        assert code == 2 and err.startswith("error:")


class TestLabel:
    def test_barbell_csv(self, capsys):
        code, out, _ = run(capsys, "label", "--family", "barbell", "--n", "4", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        by_group = {r["group"]: r for r in rows}
        assert code == 0
        assert (by_group["u"]["vertex"], by_group["u"]["weight"]) == ("u_4", "37")
        assert (by_group["v"]["vertex"], by_group["v"]["weight"]) == ("v_4", "46")
        assert [r["weight"] for r in rows if r["group"] == "a"] == ["10", "12", "14"]

    def test_cycle_corona_json(self, capsys):
        code, out, _ = run(capsys, "label", "--family", "cycle-corona", "--m", "4", "--n", "4")
        d = json.loads(out)
        names = d["graph"]["vertex_names"]
        assert code == 0 and d["verified"] is True
        assert d["weights"][names.index("v_4")] == 459

    def test_bistar_swap(self, capsys):
        code, out, _ = run(capsys, "label", "--family", "bistar-corona", "--x", "3", "--n", "2", "--h", "cycle:4")
        d = json.loads(out)
        assert code == 0 and d["notes"]["swapped"] is True
        assert d["weights"][d["graph"]["vertex_names"].index("u")] == 831

    def test_dot(self, capsys):
        code, out, _ = run(capsys, "label", "--family", "barbell", "--n", "4", "--format", "dot")
        assert code == 0
        assert 'xlabel="37"' in out and 'label="13"' in out

    def test_unsupported_family(self, capsys):
        code, _, err = run(capsys, "label", "--family", "star", "--n", "3")
        assert code == 2 and "no labeler" in err


class TestVerifyAndOracle:
    def test_round_trip(self, capsys, tmp_path):
        for argv in (["--family", "barbell", "--n", "5"],
                     ["--family", "cycle-corona", "--m", "4", "--n", "4"],
                     ["--family", "bistar-corona", "--x", "2", "--n", "3", "--h", "complete:4"]):
            _, gjson, _ = run(capsys, "generate", *argv)
            _, cjson, _ = run(capsys, "label", *argv)
            gp = tmp_path / "g.json"
            cp = tmp_path / "c.json"
            gp.write_text(gjson)
            cp.write_text(cjson)
            code, out, _ = run(capsys, "verify", str(gp), str(cp))
            report = json.loads(out)
            assert code == 0 and report["antimagic"] is True
            assert report["weights"] == json.loads(cjson)["weights"]

    def test_k2_not_antimagic(self, capsys, tmp_path):
        g = write_json(tmp_path / "g.json", make_complete(2).to_json())
        lab = write_json(tmp_path / "l.json", {"labels": [1]})
        code, out, _ = run(capsys, "verify", g, lab)
        assert code == 1 and json.loads(out)["distinct"] is False

    def test_corrupted(self, capsys, tmp_path):
        g = write_json(tmp_path / "g.json", make_cycle_zigzag(4).to_json())
        lab = write_json(tmp_path / "l.json", EdgeLabeling((1, 4, 3, 2)).to_json())
        assert run(capsys, "verify", g, lab)[0] == 1

    def test_mismatch(self, capsys, tmp_path):
        g = write_json(tmp_path / "g.json", make_cycle_zigzag(4).to_json())
        lab = write_json(tmp_path / "l.json", {"labels": [1, 2]})
        assert run(capsys, "verify", g, lab)[0] == 2

    def test_parse_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run(capsys, "verify", str(bad), str(bad))[0] == 2

    def test_oracle_codes(self, capsys, tmp_path):
        k2 = write_json(tmp_path / "k2.json", make_complete(2).to_json())
        c3 = write_json(tmp_path / "c3.json", make_cycle_zigzag(3).to_json())
        hard = write_json(tmp_path / "h.json", {"vertex_count": 7, "edges": [list(e) for e in make_cycle_zigzag(5).edges] + [[5, 6]]})
        code, out, _ = run(capsys, "oracle", k2)
        assert code == 1 and json.loads(out)["exists"] is False
        code, out, _ = run(capsys, "oracle", c3)
        assert code == 0 and json.loads(out)["witness"] == [1, 2, 3]
        code, out, _ = run(capsys, "oracle", hard, "--budget", "10")
        assert code == 3 and json.loads(out)["inconclusive"] is True


class TestSweep:
    def test_barbell_rows(self, capsys, tmp_path):
        cfg = write_json(tmp_path / "c.json", {"family": "barbell", "ranges": {"n": [3, 12]}, "checks": ["verify", "chain", "oracle"]})
        code, out, err = run(capsys, "sweep", cfg)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0 and "10 instances, 0 failed" in err
        assert out.splitlines()[0] == "family,params,q,verified,chain,millis"
        assert [r["params"] for r in rows] == [f"n={n}" for n in range(3, 13)]
        assert all(r["verified"] == "true" and r["chain"] == "true" for r in rows)

    def test_output_file_and_jobs(self, capsys, tmp_path):
        out_path = tmp_path / "out.csv"
        cfg = write_json(tmp_path / "c.json", {"family": "cycle-corona", "ranges": {"m": [3, 5], "n": [3, 4]}, "output": str(out_path)})
        code, _, _ = run(capsys, "sweep", cfg, "--jobs", "2")
        rows = list(csv.DictReader(io.StringIO(out_path.read_text())))
        assert code == 0
        assert [r["params"] for r in rows] == ["m=3;n=3", "m=3;n=4", "m=4;n=3", "m=4;n=4", "m=5;n=3", "m=5;n=4"]

    def test_bistar_instances(self):
        cfg = SweepConfig.from_json({"family": "bistar_corona", "ranges": {"x": [2, 4], "n": [2, 4]}, "h": ["cycle:4", "complete:2"]})
        inst = cfg.instances()
        assert len(inst) == 6 * 2
        assert all(p["x"] <= p["n"] for p, _ in inst)
        rows = run_sweep(cfg)
        assert all(r.verified and r.chain for r in rows)
        assert rows_to_csv(rows).count("\n") == 13

    @pytest.mark.parametrize(
        "data",
        [
            {"family": "barbell", "ranges": {"n": [5, 3]}},
            {"family": "barbell", "ranges": {"n": [2, 5]}},
            {"family": "star", "ranges": {"n": [2, 5]}},
            {"family": "bistar_corona", "ranges": {"x": [2, 3], "n": [2, 3]}},
            {"family": "barbell", "ranges": {"m": [3, 4]}},
            {"family": "barbell", "ranges": {"n": [3, 4]}, "checks": ["magic"]},
            {"family": "barbell"},
        ],
    )
    def test_bad_config(self, data):
        with pytest.raises((SweepConfigError, ValueError)):
            SweepConfig.from_json(data)

    def test_bad_config_exit_code(self, capsys, tmp_path):
        cfg = write_json(tmp_path / "c.json", {"family": "barbell", "ranges": {"n": [2, 5]}})
        assert run(capsys, "sweep", cfg)[0] == 2

import json

import pytest

from p7cover.cli import main
from p7cover.graph import from_graph6, mask_of
from p7cover.paths import is_induced_path

C4_EDGES = "0 1\n1 2\n2 3\n0 3\n"


@pytest.fixture
def c4_path(tmp_path):
    p = tmp_path / "c4.edges"
    p.write_text(C4_EDGES)
    return str(p)


def run_json(capsys, argv):
    code = main(["--format", "json"] + argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestPtfree:
    def test_p8_free_family(self, capsys):
        code, rep = run_json(capsys, ["ptfree", "--t", "8", "family:1:5"])
        assert code == 0
        assert rep["free"] is True and rep["witness"] is None

    def test_p7_witness_family(self, capsys):
        code, rep = run_json(capsys, ["ptfree", "--t", "7", "family:1:3"])
        assert code == 1
        assert rep["witness"] == [0, 3, 4, 1, 7, 8, 2]

    def test_text_format(self, capsys):
        code = main(["ptfree", "--t", "8", "family:1:2"])
        out = capsys.readouterr().out
        assert code == 0
        assert "free: yes" in out


class TestSepCommands:
    def test_enum_path(self, capsys, tmp_path):
        p = tmp_path / "p4.edges"
        p.write_text("0 1\n1 2\n2 3\n")
        code, rep = run_json(capsys, ["sep", "enum", str(p)])
        assert code == 0
        assert [e["s"] for e in rep["separators"]] == [[1], [2]]
        assert rep["separators"][0]["full_components"] == [[0], [2, 3]]

    def test_cover_family_example(self, capsys):
        code, rep = run_json(
            capsys, ["sep", "cover", "--t", "7", "--sep", "0,1,2,3,4", "family:2:5"]
        )
        assert code == 0
        entry = rep["results"][0]
        assert entry["size"] == 10
        assert entry["bound"] == 22
        assert entry["breakdown"]["R_a"] == [5, 6, 10, 11]
        assert entry["breakdown"]["R_cc"] == [2, 3, 7, 8, 12, 13]

    def test_cover_all_separators_exit_one_on_witness(self, capsys):
        code, rep = run_json(capsys, ["sep", "cover", "--t", "7", "family:1:6"])
        assert code == 1
        assert rep["all_covered"] is False

    def test_cover_t5(self, capsys, tmp_path):
        p = tmp_path / "p4.edges"
        p.write_text("0 1\n1 2\n2 3\n")
        code, rep = run_json(capsys, ["sep", "cover", "--t", "5", str(p)])
        assert code == 0
        assert rep["results"][0]["cover"] == [0, 2]

    def test_cover_t6(self, capsys):
        code, rep = run_json(capsys, ["sep", "cover", "--t", "6", "--sep", "0,1", "family:1:2"])
        assert code == 0
        assert rep["results"][0]["a_prime"] == [2]
        assert rep["results"][0]["b_prime"] == [5]

    def test_cover_t6_witness(self, capsys):
        code, rep = run_json(
            capsys,
            ["sep", "cover", "--t", "6", "--sep", "0,1,2,3,4,5,6", "family:1:7"],
        )
        assert code == 1
        entry = rep["results"][0]
        assert entry["a_prime"] is None
        g = from_graph6(rep["graph6"])
        assert is_induced_path(g, tuple(entry["witness"]))

    def test_non_separator_rejected(self, capsys, c4_path):
        assert main(["sep", "cover", "--sep", "0,1", c4_path]) == 2


class TestPmcCommands:
    def test_enum(self, capsys, c4_path):
        code, rep = run_json(capsys, ["pmc", "enum", c4_path])
        assert code == 0
        assert rep["pmcs"] == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]

    def test_check_positive(self, capsys, c4_path):
        code, rep = run_json(capsys, ["pmc", "check", "--omega", "0,1,2", c4_path])
        assert code == 0
        assert rep["is_pmc"] is True
        assert rep["nonedge_cover"] == {"0,2": [3]}

    def test_check_negative(self, capsys, c4_path):
        code, rep = run_json(capsys, ["pmc", "check", "--omega", "0,2", c4_path])
        assert code == 1
        assert rep["is_pmc"] is False and rep["failure"]

    def test_cover_single_omega(self, capsys, c4_path):
        code, rep = run_json(capsys, ["pmc", "cover", "--omega", "0,1,2", c4_path])
        assert code == 0
        entry = rep["results"][0]
        assert entry["cover"] == [0, 1]
        assert entry["size"] == 2
        assert entry["bound"] == 68

    def test_cover_all(self, capsys, c4_path):
        code, rep = run_json(capsys, ["pmc", "cover", c4_path])
        assert code == 0
        assert rep["count"] == 4 and rep["all_covered"] is True

    def test_cover_rejects_non_pmc_omega(self, c4_path):
        assert main(["pmc", "cover", "--omega", "0,2", c4_path]) == 2


class TestFamilyCommand:
    def test_report(self, capsys):
        code, rep = run_json(capsys, ["family", "--variant", "2", "--n", "3"])
        assert code == 0
        assert rep["s"] == [0, 1, 2]
        assert rep["a1"] == [3, 4, 5]
        assert rep["labels"]["3"] == "a_1^1"
        g = from_graph6(rep["graph6"])
        assert sorted(tuple(e) for e in g.edges()) == [tuple(e) for e in rep["edges"]]

    def test_emit_writes_sidecar(self, capsys, tmp_path):
        prefix = str(tmp_path / "fam")
        code, rep = run_json(capsys, ["family", "--variant", "1", "--n", "2", "--emit", prefix])
        assert code == 0
        edges = (tmp_path / "fam.edges").read_text()
        sidecar = json.loads((tmp_path / "fam.json").read_text())
        assert sidecar["graph6"] == rep["graph6"]
        assert sidecar["s"] == [0, 1]
        assert edges.count("\n") == len(rep["edges"])


class TestVerifyCommand:
    def test_small_clean_run(self, capsys, monkeypatch):
        monkeypatch.setenv("P7COVER_EXHAUSTIVE_MAX_N", "3")
        code, rep = run_json(
            capsys, ["verify", "--samples", "4", "--n-min", "7", "--n-max", "8", "--seed", "5"]
        )
        assert code == 0
        assert rep["report"]["ok"] is True
        assert rep["report"]["graphs"] == 6 + 4

    def test_byte_identical_reports(self, capsys, monkeypatch):
        monkeypatch.setenv("P7COVER_EXHAUSTIVE_MAX_N", "2")
        argv = ["--format", "json", "verify", "--samples", "3", "--n-min", "7",
                "--n-max", "8", "--seed", "9"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second


class TestRoundTrip:
    def test_sep_cover_json_revalidates(self, capsys):
        code, rep = run_json(capsys, ["sep", "cover", "--t", "7", "family:2:4"])
        assert code == 0
        g = from_graph6(rep["graph6"])
        for entry in rep["results"]:
            assert entry["witness"] is None
            cm = mask_of(entry["cover"])
            for s in entry["s"]:
                assert cm >> s & 1 or g.adj[s] & cm
            for target, dom in entry["dominators"].items():
                t = int(target)
                assert dom == t or g.adj[t] >> dom & 1

    def test_witness_json_revalidates(self, capsys):
        code, rep = run_json(capsys, ["sep", "cover", "--t", "7", "family:1:6"])
        assert code == 1
        g = from_graph6(rep["graph6"])
        seen = 0
        for entry in rep["results"]:
            if entry["witness"] is not None:
                seen += 1
                assert is_induced_path(g, tuple(entry["witness"]))
        assert seen > 0


class TestErrorPaths:
    def test_missing_file(self, capsys):
        assert main(["ptfree", "missing.edges"]) == 2

    def test_bad_family_argument(self, capsys):
        assert main(["ptfree", "family:9"]) == 2
        assert main(["ptfree", "family:1:x"]) == 2
        assert main(["ptfree", "family:3:2"]) == 2

    def test_bad_vertex_list(self, c4_path):
        assert main(["pmc", "check", "--omega", "0,x", c4_path]) == 2

    def test_no_arguments(self, capsys):
        assert main([]) == 2

    def test_unknown_subcommand(self, capsys):
        assert main(["sep", "bogus"]) == 2

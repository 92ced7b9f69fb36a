import json

import pytest

from ekcells import format_ideal
from ekcells.cli import main
from ekcells.suite import named_ideal


@pytest.fixture
def deg2_file(tmp_path):
    path = tmp_path / "deg2.ideal"
    path.write_text(format_ideal(named_ideal("deg2")), encoding="utf-8")
    return str(path)


@pytest.fixture
def bad_file(tmp_path):
    path = tmp_path / "bad.ideal"
    path.write_text("2 1\nx2^2\n", encoding="utf-8")
    return str(path)


class TestResolve:
    def test_ranks_output(self, deg2_file, capsys):
        assert main(["resolve", "--ideal", deg2_file, "--kind", "ek"]) == 0
        out = capsys.readouterr().out
        assert "ranks [6, 8, 3]" in out

    def test_json_export(self, deg2_file, tmp_path, capsys):
        code = main(
            ["resolve", "--ideal", deg2_file, "--kind", "modified",
             "--export", "json", "--out", str(tmp_path / "o")]
        )
        assert code == 0
        data = json.loads((tmp_path / "o" / "modified.complex.json").read_text())
        assert data["ranks"] == [6, 8, 3]

    def test_non_stable_input(self, bad_file, capsys):
        assert main(["resolve", "--ideal", bad_file, "--kind", "ek"]) == 2
        assert "not stable" in capsys.readouterr().err

    def test_deterministic_bytes(self, deg2_file, tmp_path):
        paths = []
        for tag in ("a", "b"):
            out = tmp_path / tag
            main(["resolve", "--ideal", deg2_file, "--kind", "both",
                  "--export", "json", "--out", str(out)])
            paths.append(out)
        for name in ("ek.complex.json", "modified.complex.json"):
            assert (paths[0] / name).read_bytes() == (paths[1] / name).read_bytes()


class TestVerify:
    def test_all_checks_pass(self, deg2_file, capsys):
        code = main(["verify", "--ideal", deg2_file, "--check", "all"])
        assert code == 0
        bundle = json.loads(capsys.readouterr().out)
        for kind in ("ek", "modified"):
            checks = bundle["kinds"][kind]
            assert checks["d2"] and checks["strands"]["ok"] and checks["cw"]
            assert checks["ball"]["verdict"] == "ball-certified"
            assert checks["el"]["failures"] == 0

    def test_expected_refutation(self, tmp_path, capsys):
        path = tmp_path / "tritri.ideal"
        path.write_text(format_ideal(named_ideal("tri-tri")), encoding="utf-8")
        code = main(
            ["verify", "--ideal", str(path), "--kind", "modified",
             "--check", "ball", "--expect-ball", "refuted"]
        )
        assert code == 0
        bundle = json.loads(capsys.readouterr().out)
        assert bundle["kinds"]["modified"]["ball"]["verdict"] == "refuted"

    def test_expectation_mismatch_fails(self, deg2_file, capsys):
        code = main(
            ["verify", "--ideal", deg2_file, "--kind", "ek",
             "--check", "ball", "--expect-ball", "refuted"]
        )
        assert code == 1

    def test_compare_posets_flag(self, tmp_path, capsys):
        path = tmp_path / "deg4.ideal"
        path.write_text(format_ideal(named_ideal("deg4")), encoding="utf-8")
        code = main(
            ["verify", "--ideal", str(path), "--check", "el", "--compare-posets"]
        )
        assert code == 0
        bundle = json.loads(capsys.readouterr().out)
        assert bundle["posets_isomorphic"] is False


class TestPolarize:
    def test_intro_outputs(self, tmp_path, capsys):
        path = tmp_path / "intro.ideal"
        path.write_text(format_ideal(named_ideal("intro")), encoding="utf-8")
        assert main(["polarize", "--ideal", str(path)]) == 0
        out = capsys.readouterr().out
        assert "x[1,1]*x[1,2]" in out
        assert "x2*x3*x4" in out

    def test_diagram(self, tmp_path, capsys):
        path = tmp_path / "intro.ideal"
        path.write_text(format_ideal(named_ideal("intro")), encoding="utf-8")
        assert main(["polarize", "--ideal", str(path), "--diagram"]) == 0
        out = capsys.readouterr().out
        assert "■" in out and "□" in out

    def test_rejects_non_borel(self, tmp_path, capsys):
        path = tmp_path / "nb.ideal"
        path.write_text("3 4\nx1^2\nx1*x2\nx2^2\nx2*x3\n", encoding="utf-8")
        assert main(["polarize", "--ideal", str(path)]) == 2
        assert "Borel" in capsys.readouterr().err


class TestPosetAndCompare:
    def test_dot_output(self, deg2_file, capsys):
        assert main(["poset", "--ideal", deg2_file, "--kind", "ek"]) == 0
        out = capsys.readouterr().out
        assert "digraph ek" in out and "rank=same" in out

    def test_compare_expectations(self, deg2_file, tmp_path, capsys):
        assert main(["compare", "--ideal", deg2_file, "--expect", "isomorphic"]) == 0
        path = tmp_path / "deg4.ideal"
        path.write_text(format_ideal(named_ideal("deg4")), encoding="utf-8")
        assert main(["compare", "--ideal", str(path), "--expect", "different"]) == 0
        assert main(["compare", "--ideal", str(path), "--expect", "isomorphic"]) == 1

    def test_random_source(self, capsys):
        assert main(["poset", "--random-borel", "--seed", "5", "--kind", "modified"]) == 0


class TestPaperSuite:
    def test_reduced_counts(self, capsys):
        code = main(["paper-suite", "--random-count", "5", "--cm-count", "2"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 7
        assert "all criteria passed" in out

import io
import json

import pytest

from vlink.cli import main

KISHINO = "O1-U2+U1-O2+O3-U4+U3-O4+"


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


class TestCompute:
    def test_json_report(self, capsys):
        status, out, _ = run(capsys, "compute", "-c", "O1+O2+U1+U2+")
        assert status == 0
        report = json.loads(out)
        assert report["input"] == "O1+O2+U1+U2+"
        assert report["W"] == [[-1, 1], [1, 1]]
        assert report["P"] == [[-1, 1], [0, -2], [1, 1]]
        assert report["nonclassical"] is True

    def test_text_report(self, capsys):
        status, out, _ = run(capsys, "compute", "-c", "O1+O2+U1+U2+", "--format", "text")
        assert status == 0
        lines = out.splitlines()
        assert "W: t^-1 + t" in lines
        assert "P: t^-1 - 2 + t" in lines
        assert "f: 1 + t^2" in lines

    def test_link_text_report(self, capsys):
        _, out, _ = run(capsys, "compute", "-c", "O1-U2+O3+U4-U1-U3+;O2+O4-", "--format", "text")
        assert "W: -t + t^2" in out.splitlines()
        assert "P:" not in out

    def test_file_with_comments(self, capsys, tmp_path):
        path = tmp_path / "knot.gauss"
        path.write_text("# a comment\n" + KISHINO + "\n")
        status, out, _ = run(capsys, "compute", str(path))
        assert status == 0
        assert json.loads(out)["real_crossing_lower_bound"] == 4

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("O1+U1+\n"))
        status, out, _ = run(capsys, "compute", "-")
        assert status == 0
        assert json.loads(out)["writhe"] == 1

    def test_missing_file(self, capsys, tmp_path):
        status, _, err = run(capsys, "compute", str(tmp_path / "absent.gauss"))
        assert status == 1
        assert err.startswith("error:")

    def test_malformed_code(self, capsys):
        status, out, err = run(capsys, "compute", "-c", "O1+U1-")
        assert status == 1
        assert out == ""
        assert "position 3" in err


class TestVerify:
    def test_passes(self, capsys):
        status, out, _ = run(capsys, "verify", "-c", KISHINO, "--steps", "20", "--seed", "1")
        assert status == 0
        assert out.splitlines() == ["W: pass", "Wbar: pass", "Lts: pass", "B: pass", "Bbar: pass", "span: pass"]

    def test_json_output(self, capsys):
        status, out, _ = run(capsys, "verify", "-c", "O1+O2+U1+U2+", "--steps", "15", "--format", "json",
                             "--invariants", "W,P,f")
        assert status == 0
        result = json.loads(out)
        assert result["verdicts"] == {"W": True, "P": True, "f": True}
        assert len(result["trace"]["templates"]) == 15

    def test_corrupted_run_fails(self, capsys):
        status, out, _ = run(capsys, "verify", "-c", KISHINO, "--steps", "10", "--invariants", "W",
                             "--corrupt-step", "2")
        assert status == 1
        assert out.splitlines()[0] == "W: FAIL"
        assert '"initial"' in out

    def test_unknown_invariant(self, capsys):
        status, _, err = run(capsys, "verify", "-c", KISHINO, "--invariants", "W,Jones")
        assert status == 1
        assert "Jones" in err


class TestSmoothAndTransform:
    def test_smooth(self, capsys):
        status, out, _ = run(capsys, "smooth", "-c", KISHINO, "--chord", "1")
        assert status == 0
        assert out.strip() == "U1+;O1+O2-U3+U2-O3+"

    def test_smooth_unknown_chord(self, capsys):
        status, _, err = run(capsys, "smooth", "-c", KISHINO, "--chord", "9")
        assert status == 1
        assert err.startswith("error:")

    @pytest.mark.parametrize("op", ["mirror", "crossing-change:1"])
    def test_transform_kink(self, capsys, op):
        status, out, _ = run(capsys, "transform", "-c", "O1+U1+", "--op", op)
        assert status == 0
        assert out.strip() == "U1-O1-"

    def test_bad_op(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["transform", "-c", "O1+U1+", "--op", "flip"])
        assert excinfo.value.code == 2


class TestCorpus:
    def test_list(self, capsys):
        status, out, _ = run(capsys, "corpus", "list")
        assert status == 0
        rows = dict(line.split("\t") for line in out.splitlines())
        assert rows["kishino"] == KISHINO
        assert "virtual-trefoil" in rows

    def test_show(self, capsys):
        status, out, _ = run(capsys, "corpus", "show", "virtual-trefoil")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].startswith("# Virtual trefoil")
        assert lines[-1] == "O1+O2+U1+U2+"

    def test_show_unknown(self, capsys):
        status, _, err = run(capsys, "corpus", "show", "unknot-42")
        assert status == 1
        assert "unknot-42" in err


class TestUsage:
    def test_source_required(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["compute"])
        assert excinfo.value.code == 2

    def test_code_and_file_exclusive(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["compute", "-c", "O1+U1+", "knot.gauss"])
        assert excinfo.value.code == 2

    def test_invalid_setting(self, capsys, monkeypatch):
        monkeypatch.setenv("VLINK_CONVENTION", "z")
        status, _, err = run(capsys, "corpus", "list")
        assert status == 1
        assert "VLINK_" in err

    def test_convention_flag(self, capsys):
        status, out, _ = run(capsys, "compute", "-c", "O1+O2+U1+U2+", "--convention", "b")
        assert status == 0
        assert json.loads(out)["W"] == [[-1, 1], [1, 1]]

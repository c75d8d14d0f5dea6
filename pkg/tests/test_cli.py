from __future__ import annotations

import pytest

from fuzzyimpl.cli import EXIT_CAPACITY, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


SIGMA = "logic lukasiewicz\nscale 2\nhedge identity\nattributes p q\n{p} => {p, q}\n{} => {0.5/q}\n"
GAMMA4 = (
    "logic goedel\nscale 2\nhedge identity\nattributes p q r\n"
    "{0.5/p} => {0.5/p, 0.5/q, r}\n{p} => {p, q, r}\n"
)
CTX = "logic lukasiewicz\nscale 1\nhedge globalization\nattributes p q\nobject x1: 1 1\n"


class TestTheoryCommands:
    def test_close(self, files, capsys):
        assert main(["close", files("s.txt", SIGMA), "{p}"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "{p, q}"

    def test_entail(self, files, capsys):
        assert main(["entail", files("s.txt", SIGMA), "{} => {q}"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "0.5"

    def test_equiv(self, files, capsys):
        a = files("a.txt", "scale 1\nattributes p q r\n{p} => {q}\n{p} => {r}\n")
        b = files("b.txt", "scale 1\nattributes p q r\n{p} => {q, r}\n")
        assert main(["equiv", a, b]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "equivalent"

    def test_transform_not_equivalent(self, files, capsys):
        assert main(["transform", files("g.txt", GAMMA4)]) == EXIT_VERIFY
        out = capsys.readouterr().out
        assert "{0.5/p, 0.5/q, 0.5/r} => {0.5/p, 0.5/q, r}" in out
        assert "# equivalent: no" in out

    def test_witness(self, files, capsys):
        assert main(["witness", files("s.txt", SIGMA)]) == EXIT_VERIFY
        assert capsys.readouterr().out.startswith("witnessed: no")


class TestContextCommands:
    def test_base(self, files, capsys):
        assert main(["base", files("c.txt", CTX)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "{} => {p, q}" in out and "# base size: 1" in out

    def test_graph_base(self, files, capsys):
        assert main(["graph-base", files("c.txt", CTX), "--dump-graph"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "vertex 0 {}" in out and "# systems: 1" in out and "{} => {p, q}" in out

    def test_capacity_exit(self, files, capsys):
        assert main(["graph-base", files("c.txt", CTX), "--cap", "2"]) == EXIT_CAPACITY
        assert "exceeds cap" in capsys.readouterr().err

    def test_bad_file(self, files, capsys):
        assert main(["base", files("c.txt", "attributes p\n")]) == EXIT_INPUT


class TestValidateAlgebra:
    def test_valid(self, capsys):
        assert main(["validate-algebra", "--scale", "10", "--hedge", "globalization"]) == EXIT_OK
        assert "valid" in capsys.readouterr().out

    def test_invalid_table(self, capsys):
        code = main(["validate-algebra", "--scale", "2", "--hedge", "table", "--table", "0,1,1"])
        assert code == EXIT_VERIFY
        assert "violation: a*≤a at a=0.5" in capsys.readouterr().out

    def test_bl(self, capsys):
        assert main(["validate-algebra", "--scale", "4", "--logic", "bl", "--idempotents", "0,0.5,1"]) == EXIT_OK


class TestExperiment:
    def test_success_ratio_to_file(self, tmp_path):
        out = tmp_path / "fig1.csv"
        args = ["experiment", "fig1", "--instances", "3", "--idempotents", "2,11", "--out", str(out)]
        assert main(args) == EXIT_OK
        lines = [line for line in out.read_text().splitlines() if not line.startswith("#")]
        assert lines[0] == "idempotents,instances,successes,success_ratio,spot_checked"
        assert lines[1].startswith("2,3,3,100.0000")

    def test_size_by_density_stdout(self, capsys):
        args = ["experiment", "fig34", "--instances", "2", "--densities", "26,51", "--repeats", "1", "--spot-check", "1"]
        assert main(args) == EXIT_OK
        out = capsys.readouterr().out
        assert "density,instances,capacity_excluded,mean_base_size,mean_time,median_time" in out

    def test_timing_comparison_counts_capacity(self, capsys):
        args = ["experiment", "fig2", "--instances", "2", "--densities", "26", "--cap", "10", "--repeats", "1"]
        assert main(args) == EXIT_OK
        row = capsys.readouterr().out.strip().splitlines()[-1].split(",")
        assert row[:3] == ["26", "0", "2"]

from pathlib import Path

import pytest

from kdnf.cli import main
from kdnf.monotone import star_order, total_order
from kdnf.oracle import oracle_is_monotone

DATA = Path(__file__).parent / "data"
EXAMPLE = str(DATA / "star_example.kfn")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReduce:
    def test_star_example(self, capsys):
        code, out, _ = run(capsys, "reduce", EXAMPLE)
        assert code == 0
        assert "J{1}(x2)*J{1}(x3)->1\n" in out
        assert "J{1}(x1)*J{2}(x2)*J{1,2}(x3)->1\n" in out

    def test_partial_file(self, capsys, tmp_path):
        path = tmp_path / "p.kfn"
        path.write_text("k=3 n=1 mode=partial\n0 -> 0\n2 -> 1\n")
        code, out, _ = run(capsys, "reduce", str(path))
        assert code == 0
        assert out == "J{1,2}(x1)->1\n"

    def test_deterministic(self, capsys):
        first = run(capsys, "reduce", EXAMPLE)
        second = run(capsys, "reduce", EXAMPLE)
        assert first == second


class TestMinimize:
    def test_objective_two(self, capsys):
        code, out, _ = run(capsys, "minimize",EXAMPLE, "--metric", "terms")
        assert code == 0
        assert out.endswith("objective: 2\n")
        assert out.count("->1\n") == 2

    def test_rank_metric(self, capsys):
        code, out, _ = run(capsys, "minimize", EXAMPLE, "--metric", "rank")
        assert code == 0
        assert out.endswith("objective: 9\n")

    def test_partial_file_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "p.kfn"
        path.write_text("k=2 n=1 mode=partial\n0 -> 0\n")
        code, _, err = run(capsys, "minimize", str(path))
        assert code == 1 and "total" in err


class TestDeadend:
    def test_star_example(self, capsys):
        code, out, _ = run(capsys, "deadend", EXAMPLE)
        assert code == 0
        assert out.startswith("# dead-end dnfs: 1\n# 1\n")
        assert "J{1}(x2)*J{1}(x3)->1\n" in out

    def test_limit(self, capsys):
        code, out, _ = run(capsys, "deadend", EXAMPLE, "--limit", "0")
        assert code == 0
        assert out == "# dead-end dnfs: 1\n"

    def test_negative_limit_is_usage_error(self, capsys):
        code, _, err = run(capsys, "deadend", EXAMPLE, "--limit", "-3")
        assert code == 1 and "--limit" in err


class TestAbsorb:
    def test_yes(self, capsys, tmp_path):
        path = tmp_path / "d.dnf"
        path.write_text("k=3 n=3\nJ{1}(x2)*J{1}(x3)->1\nJ{1}(x1)*J{2}(x2)*J{1,2}(x3)->1\n")
        code, out, _ = run(capsys, "absorb", str(path), "J{1}(x1)*J{1,2}(x2)*J{1}(x3)->1")
        assert code == 0 and out == "yes\n"

    def test_no_with_witness(self, capsys, tmp_path):
        path = tmp_path / "d.dnf"
        path.write_text("k=3 n=3\nJ{1}(x2)*J{1}(x3)->1\n")
        code, out, _ = run(capsys, "absorb", str(path), "J{1}(x1)*J{2}(x2)*J{1,2}(x3)->1")
        assert code == 0
        assert out.splitlines()[0] == "no"
        assert out.splitlines()[1] in ("witness: 1 2 1", "witness: 1 2 2")


class TestMonotone:
    def test_star_order_verdict_matches_oracle(self, capsys, star_example):
        code, out, _ = run(capsys, "monotone", EXAMPLE, "--order", "star")
        assert code == 0
        expected = oracle_is_monotone(star_example, star_order(3))
        assert out.splitlines()[0] == f"monotone: {'yes' if expected else 'no'}"

    def test_total_order_verdict_matches_oracle(self, capsys, star_example):
        code, out, _ = run(capsys, "monotone", EXAMPLE)
        assert code == 0
        expected = oracle_is_monotone(star_example, total_order(3))
        verdict = out.splitlines()[0]
        assert verdict == f"monotone: {'yes' if expected else 'no'}"
        if not expected:
            assert out.splitlines()[1].startswith("below: ")
            assert out.splitlines()[2].startswith("above: ")


class TestCountEstimate:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "count", "-k", "2", "-n", "2")
        assert code == 0 and out == "count: 6\n"

    def test_count_star(self, capsys):
        code, out, _ = run(capsys, "count", "-k", "3", "-n", "1", "--order", "star")
        assert code == 0 and out == "count: 11\n"

    def test_count_capacity(self, capsys):
        code, _, err = run(capsys, "count", "-k", "3", "-n", "3")
        assert code == 3 and "capacity" in err

    def test_estimate(self, capsys):
        code, out, _ = run(capsys, "estimate", "-k", "3", "-n", "1")
        assert code == 0
        assert out.splitlines()[0] == "log2(psi) ≈ 2.53885 (d=2, D=0.222222)"


class TestExitCodes:
    def test_usage_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 1

    def test_usage_bad_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["minimize", EXAMPLE, "--metric", "letters"])
        assert exc.value.code == 1

    def test_usage_missing_file(self, capsys):
        code, _, err = run(capsys, "reduce", "/nonexistent/path.kfn")
        assert code == 1 and "cannot read" in err

    def test_parse_error(self, capsys, tmp_path):
        path = tmp_path / "bad.kfn"
        path.write_text("k=3 n=2 mode=total\n9 9 -> 1\n")
        code, _, err = run(capsys, "reduce", str(path))
        assert code == 2 and "parse error" in err

    def test_success_code(self, capsys):
        code, _, _ = run(capsys, "estimate", "-k", "2", "-n", "1")
        assert code == 0

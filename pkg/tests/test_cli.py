import pytest

from cdispersion import SolveParams, exact_solve, greedy_solve, io
from cdispersion.cli import build_parser, main
from cdispersion.instances import gen_euclidean
from cdispersion.reduction import Graph


@pytest.fixture
def line_file(tmp_path, line4):
    path = tmp_path / "line.txt"
    io.write_instance(line4, path)
    return str(path)


@pytest.fixture
def p3_image(tmp_path):
    graph = tmp_path / "p3.txt"
    io.write_graph(Graph.path(3), graph)
    out = tmp_path / "p3i.txt"
    assert main(["reduce", str(graph), "--out", str(out)]) == 0
    return str(out)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_line(capsys, line_file, line4):
    code, out, _ = run(capsys, "solve", line_file, "--c", "1", "--k", "3")
    assert code == 0
    assert "cost 3\n" in out
    sol, _ = greedy_solve(line4, SolveParams(1, 3))
    assert out == io.format_solution(sol)


def test_solve_writes_trace_file(capsys, tmp_path, line_file, line4):
    out_path = tmp_path / "sol.txt"
    code, out, _ = run(capsys, "solve", line_file, "--c", "1", "--k", "3", "--trace", "--out", str(out_path))
    assert code == 0
    sol, trace = greedy_solve(line4, SolveParams(1, 3))
    assert out_path.read_text() == io.format_solution(sol, trace) == out


def test_solve_k_equals_c_plus_1_matches_exact(capsys, line_file):
    _, greedy_out, _ = run(capsys, "solve", line_file, "--c", "2", "--k", "3")
    _, exact_out, _ = run(capsys, "exact", line_file, "--c", "2", "--k", "3")
    cost = [ln for ln in greedy_out.splitlines() if ln.startswith("cost")]
    assert cost and cost[0] in exact_out.splitlines()


def test_solve_k_too_large(capsys, line_file):
    assert run(capsys, "solve", line_file, "--c", "1", "--k", "5")[0] == 2


def test_solve_seed_budget(capsys, line_file, monkeypatch):
    assert run(capsys, "solve", line_file, "--c", "1", "--k", "3", "--budget", "2")[0] == 3
    monkeypatch.setenv("DISPERSION_BUDGET", "2")
    assert run(capsys, "solve", line_file, "--c", "1", "--k", "3")[0] == 3


def test_exact_p3(capsys, p3_image, tmp_path):
    balls = tmp_path / "balls.txt"
    code, out, _ = run(capsys, "exact", p3_image, "--c", "1", "--k", "2", "--balls", str(balls))
    assert code == 0
    assert "cost 2\n" in out and "violations 0\n" in out
    assert balls.read_text() == "point 0 in_count 1 cover_count 1\npoint 1 in_count 0 cover_count 0\npoint 2 in_count 1 cover_count 1\n"


def test_exact_over_budget(capsys, line_file):
    assert run(capsys, "exact", line_file, "--c", "1", "--k", "2", "--budget", "5")[0] == 3


def test_exact_ball_report_clean_on_random(capsys, tmp_path):
    path = tmp_path / "e.txt"
    io.write_instance(gen_euclidean(10, 3), path)
    code, out, _ = run(capsys, "exact", str(path), "--c", "2", "--k", "5")
    assert code == 0 and "violations 0\n" in out
    sol = exact_solve(gen_euclidean(10, 3), SolveParams(2, 5))
    assert out.startswith(io.format_solution(sol))


def test_reduce_complete_graph(capsys, tmp_path):
    graph = tmp_path / "k3.txt"
    graph.write_text("p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n")
    code, out, _ = run(capsys, "reduce", str(graph))
    assert code == 0
    assert out == "dispersion-instance v1 matrix 3\n0 1 1\n1 0 1\n1 1 0\n"


def test_decide(capsys, p3_image):
    code, out, _ = run(capsys, "decide", p3_image, "--c", "1", "--k", "2")
    assert code == 0 and out == "decision true bound 2\n"
    assert run(capsys, "decide", p3_image, "--c", "1", "--k", "3")[0] == 1


def test_decide_general_bound(capsys, line_file):
    assert run(capsys, "decide", line_file, "--c", "1", "--k", "3")[0] == 1  # not a reduction image
    assert run(capsys, "decide", line_file, "--c", "1", "--k", "3", "--bound", "3")[0] == 0
    assert run(capsys, "decide", line_file, "--c", "1", "--k", "3", "--bound", "3.5")[0] == 1


def test_gen_and_check(capsys, tmp_path):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", "--kind", "random_metric", "--n", "8", "--seed", "3", "--out", str(out))[0] == 0
    code, text, _ = run(capsys, "check", str(out), "--tol", "0")
    assert code == 0 and text.startswith("metric: OK\n")
    code, text, _ = run(capsys, "gen", "--kind", "euclidean_uniform", "--n", "4", "--seed", "3")
    assert text == io.format_instance(gen_euclidean(4, 3))


def test_check_reduction_image(capsys, p3_image):
    code, out, _ = run(capsys, "check", p3_image)
    assert code == 0 and out.splitlines()[0] == "metric: OK"


def test_check_failure(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("dispersion-instance v1 matrix 3\n0 1 10\n1 0 1\n10 1 0\n")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    assert "violation 0 1 2 8\n" in out


def test_malformed_instance_is_validation_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("dispersion-instance v1 matrix 2\n0 1\n2 0\n")
    assert run(capsys, "solve", str(path), "--c", "1", "--k", "2")[0] == 1


def test_missing_file_is_usage_error(capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "nope.txt"))[0] == 2


def test_bench_timing(capsys):
    code, out, _ = run(capsys, "bench", "--timing", "--n", "30", "--c", "2", "--k", "6")
    assert code == 0
    fields = dict(line.split(" ", 1) for line in out.splitlines())
    assert {"seed_ms", "extend_ms", "naive_extend_ms", "seed_share"} <= fields.keys()


def test_bench_suite(capsys, tmp_path):
    out = tmp_path / "r.tsv"
    code, text, _ = run(capsys, "bench", "--count", "6", "--out", str(out))
    assert code == 0 and "records 6" in text
    assert len(out.read_text().splitlines()) == 7


def test_unknown_flag_and_help(capsys):
    assert run(capsys, "solve", "x", "--c", "1", "--k", "2", "--bogus")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "solve", "x", "--c", "1", "--k", "2", "--threads", "0")[0] == 2


def test_help_lists_every_flag():
    parser = build_parser()
    subs = parser._subparsers._group_actions[0].choices
    assert set(subs) == {"solve", "exact", "reduce", "decide", "gen", "check", "bench"}
    for name, sub in subs.items():
        text = sub.format_help()
        for action in sub._actions:
            for opt in action.option_strings:
                assert opt in text, (name, opt)

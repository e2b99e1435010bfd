from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from graphsat.cli import SpecError, main, parse_graph_spec
from graphsat.constructions import caterpillar_p5, double_star, fig4_gadget
from graphsat.oracle import canonical_form
from graphsat.graph import clique, cycle, emit_graph6, parse_graph6, path, star, to_edge_list_text


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestGraphSpec:
    @pytest.mark.parametrize("spec,expect", [
        ("double_star(4,5)", double_star(4, 5)),
        ("p5(1)", caterpillar_p5(1)),
        ("star(5)", star(5)),
        ("path(4)", path(4)),
        ("cycle(5)", cycle(5)),
        ("clique(4)", clique(4)),
        ("fig4", fig4_gadget()),
        ("A_", clique(2)),
        (" double_star( 2 , 3 ) ", double_star(2, 3)),
    ])
    def test_names(self, spec, expect):
        assert parse_graph_spec(spec) == expect

    @pytest.mark.parametrize("name,order,size", [
        ("fig1a", 12, 20), ("fig1b", 20, 34), ("fig2a", 9, 8), ("fig2b", 18, 30),
        ("fig3a", 8, 7), ("fig3b", 19, 23), ("fig4", 10, 12), ("paw", 4, 4),
    ])
    def test_figures(self, name, order, size):
        g = parse_graph_spec(name)
        assert (g.order, g.size) == (order, size)

    def test_files_and_stdin(self, tmp_path):
        f = tmp_path / "g.txt"
        f.write_text(to_edge_list_text(path(4)))
        assert parse_graph_spec(str(f)) == path(4)
        f6 = tmp_path / "g.g6"
        f6.write_bytes(emit_graph6(cycle(5)) + b"\n")
        assert parse_graph_spec(str(f6)) == cycle(5)
        assert parse_graph_spec("-", stdin=io.StringIO("A_\n")) == clique(2)

    def test_errors(self):
        with pytest.raises(SpecError):
            parse_graph_spec("nope(3)")
        with pytest.raises(SpecError):
            parse_graph_spec("double_star(3)")
        with pytest.raises(SpecError):
            parse_graph_spec("zz")


class TestCommands:
    def test_weights_json(self):
        code, out = run("weights", "double_star(4,5)", "--json")
        assert code == 0
        d = json.loads(out)
        assert (d["k0"], d["k1"], d["k0p"], d["k1p"]) == (3, 1, 4, 5)

    def test_weights_text(self):
        code, out = run("weights", "p5(1)")
        assert code == 0 and "k0=2" in out

    def test_construct_fig2b(self):
        code, out = run("construct", "saturated-double-star", "--s", "4", "--t", "5", "--n", "18", "--out", "g6")
        assert code == 0
        g = parse_graph6(out.strip())
        assert (g.order, g.size) == (18, 30)

    def test_construct_dot_labels(self):
        code, out = run("construct", "saturated-shorty", "--s", "2", "--n", "19", "--out", "dot")
        assert code == 0
        assert 'label="L:c0:p1"' in out and 'label="B"' in out
        code, out = run("construct", "fig4", "--out", "dot")
        assert "label=\"z'\"" in out

    def test_construct_json(self):
        code, out = run("construct", "kdelta-star", "--delta", "3", "--k", "5", "--ell", "2", "--json", "--out", "edges")
        d = json.loads(out)
        assert d["size"] == 20 and d["graph"].startswith("12 20")

    def test_construct_missing_param(self):
        code, _ = run("construct", "saturated-shorty", "--s", "2")
        assert code == 2

    def test_construct_domain_error(self, capsys):
        code, _ = run("construct", "saturated-shorty", "--s", "1", "--n", "13")
        assert code == 1
        assert "threshold" in capsys.readouterr().err

    def test_sat(self):
        code, out = run("sat", "--pattern", "clique(3)", "--n", "5", "--threads", "1")
        assert code == 0
        d = json.loads(out)
        assert d["sat_value"] == 4
        assert [canonical_form(parse_graph6(w)) for w in d["witnesses"]] == [canonical_form(star(4))]

    def test_sat_audit_and_cap(self):
        code, out = run("sat", "--pattern", "cycle(4)", "--n", "6", "--audit", "--threads", "1")
        assert json.loads(out)["sat_value"] == 6 and json.loads(out)["start_m"] == 0
        code, _ = run("sat", "--pattern", "cycle(4)", "--n", "6", "--audit", "--max-edges", "2", "--threads", "1")
        assert code == 1

    def test_verify(self):
        code, out = run("verify", "--host", "fig4", "--pattern", "p5(1)", "--explain", "--threads", "1")
        assert code == 0
        assert "saturated: False" in out and "adding 0-7" in out
        code, out = run("verify", "--host", "fig3b", "--pattern", "p5(1)", "--json", "--threads", "1")
        assert json.loads(out)["is_saturated"] is True

    @pytest.mark.parametrize("which,names", [
        ("general", ["general-b"]),
        ("triangle-free", ["triangle-free-1", "triangle-free-2", "triangle-free-cor"]),
        ("double-star", ["double-star-lower", "double-star-upper", "double-star-exact"]),
        ("best", ["triangle-free-1"]),
        ("cp", ["cp"]),
    ])
    def test_bound(self, which, names):
        code, out = run("bound", "double_star(4,5)", "--n", "18", "--which", which, "--json")
        assert code == 0
        assert [r["name"] for r in json.loads(out)] == names

    def test_bound_shorty(self):
        code, out = run("bound", "p5(1)", "--n", "19", "--which", "shorty", "--json")
        reps = json.loads(out)
        assert reps[1]["value"] == "101/4"

    def test_bound_text_and_error(self):
        code, out = run("bound", "fig2a", "--n", "18")
        assert code == 0 and "value=28" in out
        code, _ = run("bound", "path(4)", "--n", "20", "--which", "double-star")
        assert code == 1

    def test_convert(self):
        code, out = run("convert", "path(3)", "--out", "edges")
        assert out == "3 2\n0 1\n1 2\n"
        code, out = run("convert", "path(3)")
        assert out.strip() == emit_graph6(path(3)).decode()

    def test_json_is_deterministic(self):
        a = run("weights", "fig3a", "--json")[1]
        b = run("weights", "fig3a", "--json")[1]
        assert a == b

    def test_usage_errors(self):
        assert run("frobnicate")[0] == 2
        assert run("weights")[0] == 2
        assert run("weights", "not-a-graph(")[0] == 2

    def test_isolated_edge_domain_error(self):
        assert run("weights", "path(2)")[0] == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphsat.cli", "weights", "star(3)", "--json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["k0"] == 2


def test_threads_env(monkeypatch):
    from graphsat.cli import _default_threads
    monkeypatch.setenv("GRAPHSAT_THREADS", "3")
    assert _default_threads() == 3

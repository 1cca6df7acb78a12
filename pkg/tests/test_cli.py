import json
import os
import subprocess
import sys

import pytest

from polarcog import graph as gr
from polarcog.catalog import CATALOG_ENV, default_catalog_path, family_member
from polarcog.certify import Certificate, certify, check_certificate
from polarcog.cli import main
from polarcog.cograph import cograph_code
from polarcog.formats import from_graph6, to_edge_list, to_graph6
from polarcog.polarity import PolarPartition


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestCertify:
    def test_c4_is_polar(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["certify"], to_graph6(gr.cycle(4)))
        assert code == 0
        assert json.loads(out) == {"outcome": "polar", "partition": {"a_parts": [[0, 2], [1, 3]], "b_cliques": []}}

    def test_f1_is_obstruction(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["certify"], to_graph6(family_member(1, 2)))
        assert code == 1
        assert json.loads(out) == {"outcome": "obstruction", "id": "F1", "vertices": list(range(7))}

    def test_p4_is_not_cograph(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["certify"], to_graph6(gr.path(4)))
        assert code == 2
        assert json.loads(out) == {"outcome": "not_cograph", "p4": [0, 1, 2, 3]}

    def test_edge_list_file(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "g.el"
        path.write_text(to_edge_list(gr.disjoint_union(family_member(1, 2), gr.complete(3))))
        code, out, _ = run(capsys, monkeypatch, ["certify", "--format", "el", str(path)])
        cert = json.loads(out)
        assert code == 1 and cert["id"] == "F1" and len(cert["vertices"]) == 7

    def test_other_caps_have_no_id(self, capsys, monkeypatch):
        two_k2 = gr.disjoint_union(gr.complete(2), gr.complete(2))
        code, out, _ = run(capsys, monkeypatch, ["certify", "--s", "1", "--k", "1"], to_graph6(two_k2))
        assert code == 1 and json.loads(out) == {"outcome": "obstruction", "id": None, "vertices": [0, 1, 2, 3]}

    def test_unbounded_caps(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["certify", "--s", "inf", "--k", "inf"],
                           to_graph6(family_member(1, 2)))
        assert code == 0 and json.loads(out)["outcome"] == "polar"

    @pytest.mark.parametrize("argv,stdin,code", [
        (["certify"], "!!\n", 3),
        (["certify"], "", 3),
        (["certify", "/no/such/file"], None, 4),
    ])
    def test_errors(self, capsys, monkeypatch, argv, stdin, code):
        assert run(capsys, monkeypatch, argv, stdin)[0] == code

    def test_usage_errors_exit_three(self):
        for argv in (["certify", "--s", "-1"], ["certify", "--format", "xml"], ["bogus"]):
            with pytest.raises(SystemExit) as info:
                main(argv)
            assert info.value.code == 3

    def test_corrupt_catalog_is_an_error(self, capsys, monkeypatch, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text(default_catalog_path().read_text().replace("\tFGC?G\t", "\tFGC??\t"))
        monkeypatch.setenv(CATALOG_ENV, str(bad))
        code, _, err = run(capsys, monkeypatch, ["certify"], "Bw\n")
        assert code == 3 and "minimal" in err

    def test_round_trip_from_enumerate(self, capsys, monkeypatch):
        _, listing, _ = run(capsys, monkeypatch, ["enumerate", "8"])
        code, out, _ = run(capsys, monkeypatch, ["certify"], listing)
        outcomes = [json.loads(ln)["outcome"] for ln in out.splitlines()]
        assert len(outcomes) == 522 and "not_cograph" not in outcomes
        assert code == 1

    def test_deterministic(self, capsys, monkeypatch):
        _, listing, _ = run(capsys, monkeypatch, ["enumerate", "7"])
        first = run(capsys, monkeypatch, ["certify"], listing)
        second = run(capsys, monkeypatch, ["certify"], listing)
        assert first == second


class TestCertificateValidation:
    def test_tampered_certificates_fail(self, catalog):
        g = gr.cycle(4)
        assert not check_certificate(g, Certificate("polar", partition=PolarPartition(((0, 1),), ())), catalog=catalog)
        assert not check_certificate(gr.path(4), Certificate("not_cograph", p4=(0, 2, 1, 3)))
        f1 = family_member(1, 2)
        assert not check_certificate(f1, Certificate("obstruction", id="F2", vertices=tuple(range(7))), catalog=catalog)
        assert not check_certificate(f1, Certificate("obstruction", id="F1", vertices=(0, 0, 1)), catalog=catalog)
        assert not check_certificate(f1, Certificate("obstruction", id="F1", vertices=tuple(range(7))))

    def test_genuine_certificates_pass(self, catalog):
        for g in (gr.cycle(4), family_member(13, 2), gr.path(5)):
            cert = certify(g, catalog=catalog)
            assert check_certificate(g, cert, catalog=catalog)

    def test_empty_graph(self):
        cert = certify(gr.Graph.empty(0))
        assert cert.to_json() == {"outcome": "polar", "partition": {"a_parts": [], "b_cliques": []}}


class TestCatalogCommand:
    def test_full_listing(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["catalog"])
        rows = [ln.split("\t") for ln in out.splitlines()]
        assert len(rows) == 50
        assert rows[0][:5] == ["F1", "K_1 + (k+1)K_2", "FGC?G", "7", "F1"]

    def test_family_entries_only(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["catalog", "--families-only"])
        assert len(out.splitlines()) == 48
        _, out, _ = run(capsys, monkeypatch, ["catalog", "--families-only", "--disconnected"])
        sizes = [int(ln.split("\t")[3]) for ln in out.splitlines()]
        assert len(sizes) == 24 and sizes.count(7) == 5 and sizes.count(8) == 15 and sizes.count(9) == 4

    def test_k3_is_flagged_incomplete(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["catalog", "--k", "3"])
        lines = out.splitlines()
        assert len(lines) == 24 and all(ln.endswith("incomplete list") for ln in lines)

    def test_json(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["catalog", "--json"])
        data = json.loads(out)
        assert data["complete"] and len(data["entries"]) == 50

    def test_k_below_two(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["catalog", "--k", "1"])[0] == 3


class TestEnumerateCommand:
    @pytest.mark.parametrize("argv,lines", [
        (["enumerate", "4"], 10),
        (["enumerate", "7", "--filter-obstructions"], 10),
        (["enumerate", "6", "--filter-obstructions"], 0),
        (["enumerate", "6", "--filter-obstructions", "--s", "2", "--k", "1"], 8),
    ])
    def test_counts(self, capsys, monkeypatch, argv, lines):
        code, out, _ = run(capsys, monkeypatch, argv)
        assert code == 0 and len(out.splitlines()) == lines

    def test_out_of_range(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["enumerate", "14"])[0] == 3


class TestClosureCommand:
    def test_generators(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["closure", "F1,F6,F13,F21"])
        assert out.splitlines()[-1] == "total: 50 members in 4 classes"
        headers = [ln for ln in out.splitlines() if ln.startswith("class ")]
        assert headers == ["class F1: 10 members", "class F6: 14 members",
                           "class F13: 18 members", "class F21: 8 members"]

    def test_single_seed(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["closure", "F1"])
        assert out.splitlines()[-1] == "total: 10 members in 1 classes"

    def test_graph6_seed(self, capsys, monkeypatch):
        two_k2 = to_graph6(gr.disjoint_union(gr.complete(2), gr.complete(2)))
        _, out, _ = run(capsys, monkeypatch, ["closure", "--json", two_k2])
        members = {cograph_code(from_graph6(m["graph6"])) for m in json.loads(out)["classes"][0]["members"]}
        assert cograph_code(gr.cycle(4)) in members and cograph_code(from_graph6(two_k2)) in members

    def test_unknown_seed(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["closure", "F99"])[0] == 3
        assert run(capsys, monkeypatch, ["closure", to_graph6(gr.path(4))])[0] == 3


class TestVerifyCommand:
    def test_selected_checks(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["verify", "--only", "A5,A6"])
        assert code == 0 and "A5       PASS" in out and out.splitlines()[-1] == "3/3 passed"

    def test_corrupted_catalog_names_invariant(self, capsys, monkeypatch, tmp_path):
        bad = tmp_path / "bad.txt"
        text = default_catalog_path().read_text()
        bad.write_text("\n".join(ln for ln in text.splitlines() if not ln.startswith("F1c\t")) + "\n")
        monkeypatch.setenv(CATALOG_ENV, str(bad))
        code, out, _ = run(capsys, monkeypatch, ["verify", "--only", "A4", "--json"])
        data = {r["name"]: r for r in json.loads(out)}
        assert code == 1
        assert not data["catalog"]["passed"] and "complement-closed" in data["catalog"]["detail"]
        assert not data["A4"]["passed"]

    def test_unknown_check(self, capsys, monkeypatch):
        assert run(capsys, monkeypatch, ["verify", "--only", "A99"])[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polarcog", "certify"], input=to_graph6(gr.cycle(4)),
                          capture_output=True, text=True, env=dict(os.environ))
    assert proc.returncode == 0 and json.loads(proc.stdout)["outcome"] == "polar"

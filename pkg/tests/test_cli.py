import json

from ssbchoice.cli import main

from conftest import FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAggregate:
    def test_delegate_matrix(self, capsys):
        code, out, _ = run(capsys, "aggregate", FIXTURES / "table1.ballots")
        assert code == 0
        assert "100 agents" in out
        assert "40" in out and "-80" in out

    def test_json_margins(self, capsys):
        code, out, _ = run(capsys, "aggregate", FIXTURES / "table1.ballots", "--json")
        payload = json.loads(out)
        assert payload["alternatives"] == ["A", "B", "C", "D"]
        assert payload["matrix"][0][1] == ["40", "1"]
        assert payload["matrix"][0][2] == ["-10", "1"]

    def test_zero_matrix_for_indifference(self, capsys):
        code, out, _ = run(
            capsys, "aggregate", FIXTURES / "empty-indifference.ballots", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert all(cell == ["0", "1"] for row in payload["matrix"] for cell in row)


class TestMaximalLottery:
    def test_condorcet_json(self, capsys):
        code, out, _ = run(
            capsys, "maximal-lottery", FIXTURES / "condorcet.ballots", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["lottery"] == {"a": ["1", "3"], "b": ["1", "3"], "c": ["1", "3"]}
        assert payload["unique"] is True

    def test_human_output_mentions_uniqueness(self, capsys):
        code, out, _ = run(capsys, "maximal-lottery", FIXTURES / "table1.ballots")
        assert code == 0
        assert "unique maximal lottery" in out
        assert "C: 2/3" in out


class TestBudget:
    def test_delegate_allocation(self, capsys):
        code, out, _ = run(
            capsys, "budget", FIXTURES / "table1.ballots", FIXTURES / "table1.proposals"
        )
        assert code == 0
        for needle in ("Education: 1/4 (25.0%)", "Transportation: 4/15 (26.7%)",
                       "Health: 3/10 (30.0%)", "Military: 11/60 (18.3%)"):
            assert needle in out

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys, "budget", FIXTURES / "table1.ballots",
            FIXTURES / "table1.proposals", "--json",
        )
        payload = json.loads(out)
        assert payload["allocation"]["Military"] == ["11", "60"]
        assert payload["allocation_percent"]["Transportation"] == "26.7"
        assert payload["lottery"]["C"] == ["2", "3"]


class TestCheckAxioms:
    def test_pairwise_utilitarian_passes(self, capsys):
        code, out, _ = run(
            capsys, "check-axioms", "--alternatives", 3, "--samples", 25
        )
        assert code == 0
        assert "FAIL" not in out
        assert "IIA" in out and "anonymity" in out and "Pareto" in out

    def test_relative_utilitarian_fails(self, capsys):
        code, out, _ = run(capsys, "check-axioms", "--swf", "relative-utilitarian")
        assert code == 1
        assert "FAIL" in out

    def test_dictatorial_fails_anonymity(self, capsys):
        code, out, _ = run(
            capsys, "check-axioms", "--swf", "dictatorial", "--samples", 20
        )
        assert code == 1
        assert "anonymity" in out

    def test_constant_fails_pareto(self, capsys):
        code, out, _ = run(
            capsys, "check-axioms", "--swf", "constant", "--samples", 20
        )
        assert code == 1

    def test_approval_passes_small(self, capsys):
        code, out, _ = run(
            capsys, "check-axioms", "--swf", "approval",
            "--alternatives", 3, "--samples", 10,
        )
        assert code == 0

    def test_json_report(self, capsys):
        code, out, _ = run(
            capsys, "check-axioms", "--alternatives", 3, "--samples", 10, "--json"
        )
        payload = json.loads(out)
        assert payload["swf"] == "pairwise-utilitarian"
        assert all(check["passed"] for check in payload["checks"])


class TestAuditDomain:
    def test_pc_domain_passes(self, capsys):
        code, out, _ = run(capsys, "audit-domain", "--alternatives", 3)
        assert code == 0
        for tag in ("R1", "R2", "R3", "R4"):
            assert f"PASS {tag}" in out

    def test_dichotomous_includes_r5(self, capsys):
        code, out, _ = run(
            capsys, "audit-domain", "--domain", "dichotomous", "--alternatives", 4
        )
        assert code == 0
        assert "PASS R5" in out

    def test_condition_subset(self, capsys):
        code, out, _ = run(
            capsys, "audit-domain", "--alternatives", 3, "--conditions", "R2,R3"
        )
        assert code == 0
        assert "R1" not in out

    def test_domain_file_failing_r2(self, capsys, tmp_path):
        from ssbchoice import pc_extension, render_matrix, weak_order, Universe

        u = Universe(("a", "b"))
        member = pc_extension(weak_order(u, ["a", "b"]))
        path = tmp_path / "domain.matrices"
        path.write_text(render_matrix(member), encoding="utf-8")
        code, out, _ = run(capsys, "audit-domain", "--file", path,
                           "--conditions", "R2")
        assert code == 1
        assert "FAIL R2" in out

    def test_json_records_seed_and_modes(self, capsys):
        code, out, _ = run(
            capsys, "audit-domain", "--alternatives", 4,
            "--member-limit", 100, "--seed", 9, "--json",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["seed"] == 9
        assert all("sampled(100" in c["mode"] for c in payload["conditions"])
        assert payload["pc_inclusion"]["all_pc"] is True


class TestCycleWitness:
    def test_chain4_finds_cycle(self, capsys):
        code, out, _ = run(capsys, "cycle-witness", FIXTURES / "chain4.ballots")
        assert code == 0
        assert "Cycle found" in out

    def test_chain3_reports_none(self, capsys):
        code, out, _ = run(capsys, "cycle-witness", FIXTURES / "chain3.ballots")
        assert code == 0
        assert "none found on grid" in out

    def test_json_cycle_values_positive(self, capsys):
        code, out, _ = run(
            capsys, "cycle-witness", FIXTURES / "chain4.ballots", "--json"
        )
        payload = json.loads(out)
        assert payload["found"] is True
        assert all(int(num) > 0 for num, _ in payload["values"])


class TestErrorHandling:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "aggregate", "/nonexistent.ballots")
        assert code == 2
        assert "error:" in err

    def test_malformed_ballots(self, capsys, tmp_path):
        path = tmp_path / "bad.ballots"
        path.write_text("universe: a, b\n1: a > zz\n", encoding="utf-8")
        code, _, err = run(capsys, "aggregate", path)
        assert code == 2
        assert "unknown alternative" in err

    def test_mismatched_proposals(self, capsys, tmp_path):
        path = tmp_path / "bad.proposals"
        path.write_text("alternatives: X, Y\nrow: 50% 50%\nrow2: 50% 50%\n",
                        encoding="utf-8")
        code, _, err = run(
            capsys, "budget", FIXTURES / "table1.ballots", path
        )
        assert code == 2

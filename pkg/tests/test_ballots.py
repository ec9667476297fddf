from fractions import Fraction

import pytest

from ssbchoice import (
    BaseRelation,
    Lottery,
    ParseError,
    Profile,
    Universe,
    UtilityVector,
    budget_allocation,
    format_fraction,
    format_percent,
    fraction_pair,
    mix,
    parse_ballots,
    parse_matrices,
    parse_proposals,
    render_matrix,
    render_profile,
)


class TestParseBallots:
    def test_delegate_profile(self, table1_profile, table1_margins):
        assert table1_profile.n == 100
        assert table1_margins["A", "B"] == 40

    def test_indifference_line(self):
        profile = parse_ballots("universe: a, b, c\n1: a = b = c\n")
        assert profile.n == 1
        assert profile.agents[0].strict == frozenset()

    def test_approval_line(self):
        profile = parse_ballots("universe: a, b, c\n2: approve {a, b}\n")
        assert profile.n == 2
        agent = profile.agents[0]
        assert agent.tiers() == (("a", "b"), ("c",))

    def test_approve_everything_or_nothing(self):
        profile = parse_ballots(
            "universe: a, b\n1: approve {}\n1: approve {a, b}\n"
        )
        assert all(a.strict == frozenset() for a in profile.agents)

    def test_util_line_exact(self):
        profile = parse_ballots(
            "universe: a, b, c\n1: util a=1, b=1/3, c=0\n"
        )
        agent = profile.agents[0]
        assert isinstance(agent, UtilityVector)
        assert agent.values == (1, Fraction(1, 3), 0)

    def test_util_defaults_to_zero(self):
        profile = parse_ballots("universe: a, b, c\n1: util b=0.4\n")
        assert profile.agents[0].values == (0, Fraction(2, 5), 0)

    def test_edges_allow_cycles(self):
        profile = parse_ballots(
            "universe: a, b, c\n1: edges a>b, b>c, c>a\n"
        )
        agent = profile.agents[0]
        assert isinstance(agent, BaseRelation)
        assert agent.prefers("c", "a") and agent.tiers() is None

    def test_partial_weak_order_bottoms_out(self):
        profile = parse_ballots("universe: a, b, c, d\n1: b > a\n")
        assert profile.agents[0].tiers() == (("b",), ("a",), ("c", "d"))

    def test_comments_and_blanks(self):
        text = "# heading\n\nuniverse: a, b  # trailing\n1: a > b\n"
        assert parse_ballots(text).n == 1


class TestParseErrors:
    def test_unknown_alternative_with_location(self):
        with pytest.raises(ParseError) as err:
            parse_ballots("universe: a, b\n1: a > z\n")
        assert err.value.line == 2
        assert err.value.column == 8
        assert "z" in str(err.value)

    def test_zero_count(self):
        with pytest.raises(ParseError, match="positive"):
            parse_ballots("universe: a, b\n0: a > b\n")

    def test_malformed_count(self):
        with pytest.raises(ParseError, match="count"):
            parse_ballots("universe: a, b\nmany: a > b\n")

    def test_duplicate_in_weak_order(self):
        with pytest.raises(ParseError, match="twice"):
            parse_ballots("universe: a, b\n1: a > a\n")

    def test_conflicting_edges(self):
        with pytest.raises(ParseError, match="orientation"):
            parse_ballots("universe: a, b\n1: edges a>b, b>a\n")

    def test_missing_universe(self):
        with pytest.raises(ParseError, match="universe"):
            parse_ballots("1: a > b\n")

    def test_no_ballots(self):
        with pytest.raises(ParseError, match="ballot"):
            parse_ballots("universe: a, b\n")

    def test_duplicate_universe_name(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_ballots("universe: a, a\n1: a > a\n")


class TestRoundTrip:
    CASES = [
        "universe: A, B, C, D\n25: A > B > C > D\n20: B > A > C > D\n",
        "universe: a, b, c\n3: a = b = c\n",
        "universe: a, b, c\n2: approve {a, b}\n1: approve {}\n",
        "universe: a, b, c\n1: util a=1, b=1/3, c=0\n2: util a=0, b=7/2, c=-1\n",
        "universe: a, b, c\n1: edges a>b, b>c, c>a\n1: a > b > c\n",
    ]

    @pytest.mark.parametrize("text", CASES)
    def test_render_reparses_identically(self, text):
        profile = parse_ballots(text)
        rendered = render_profile(profile)
        assert parse_ballots(rendered) == profile
        # canonical form is a fixed point
        assert render_profile(parse_ballots(rendered)) == rendered

    def test_table1_round_trip(self, table1_profile):
        assert parse_ballots(render_profile(table1_profile)) == table1_profile

    def test_matrix_agents_unrepresentable(self, table1_margins):
        profile = Profile(table1_margins.universe, (table1_margins,))
        with pytest.raises(TypeError):
            render_profile(profile)


class TestFormatting:
    def test_fraction_lowest_terms(self):
        assert format_fraction(Fraction(40, 80)) == "1/2"
        assert format_fraction(Fraction(-6, 4)) == "-3/2"
        assert format_fraction(Fraction(80, 1)) == "80"
        assert fraction_pair(Fraction(2, 4)) == ["1", "2"]

    def test_percent_one_decimal(self):
        assert format_percent(Fraction(1, 4)) == "25.0"
        assert format_percent(Fraction(4, 15)) == "26.7"
        assert format_percent(Fraction(3, 10)) == "30.0"
        assert format_percent(Fraction(11, 60)) == "18.3"

    def test_percent_rounds_half_up(self):
        assert format_percent(Fraction(1, 400)) == "0.3"   # 0.25 rounds up
        assert format_percent(Fraction(3, 2000)) == "0.2"  # 0.15 rounds up
        assert format_percent(Fraction(0)) == "0.0"
        assert format_percent(Fraction(1)) == "100.0"


class TestProposals:
    def test_parse_delegate_proposals(self, table1_proposals):
        assert table1_proposals.departments == (
            "Education", "Transportation", "Health", "Military",
        )
        assert table1_proposals.column(0) == (
            Fraction(2, 5), Fraction(3, 10), Fraction(1, 5), Fraction(1, 10),
        )

    def test_column_sum_enforced(self):
        bad = "alternatives: A, B\nx: 50% 50%\ny: 40% 50%\n"
        with pytest.raises(ParseError, match="sums to"):
            parse_proposals(bad)

    def test_share_formats(self):
        text = "alternatives: A, B\nrow1: 2/5 0.5\nrow2: 60% 1/2\n"
        proposals = parse_proposals(text)
        assert proposals.shares[0] == (Fraction(2, 5), Fraction(1, 2))
        assert proposals.shares[1] == (Fraction(3, 5), Fraction(1, 2))


class TestBudgetAllocation:
    def test_delegate_solution(self, table1_proposals, table1_margins):
        lottery = Lottery(
            table1_margins.universe,
            (Fraction(1, 6), Fraction(1, 6), Fraction(2, 3), 0),
        )
        allocation = budget_allocation(table1_proposals, lottery)
        assert allocation == (
            Fraction(1, 4), Fraction(4, 15), Fraction(3, 10), Fraction(11, 60),
        )
        assert [format_percent(x) for x in allocation] == [
            "25.0", "26.7", "30.0", "18.3",
        ]

    def test_pure_proposal_returns_column(self, table1_proposals, table1_margins):
        u = table1_margins.universe
        assert budget_allocation(table1_proposals, u.pure("A")) \
            == table1_proposals.column(0)

    def test_half_half_mixture(self, table1_proposals, table1_margins):
        u = table1_margins.universe
        blend = mix(u.pure("A"), u.pure("B"), Fraction(1, 2))
        assert budget_allocation(table1_proposals, blend) == (
            Fraction(35, 100), Fraction(20, 100),
            Fraction(30, 100), Fraction(15, 100),
        )

    def test_shape_mismatch(self, table1_proposals):
        abc = Universe(("A", "B", "C"))
        with pytest.raises(ValueError):
            budget_allocation(table1_proposals, abc.pure("A"))

    def test_sums_to_one(self, table1_proposals, table1_margins):
        import random

        from ssbchoice.axioms import random_lottery

        rng = random.Random(3)
        for _ in range(100):
            lottery = random_lottery(rng, table1_margins.universe)
            assert sum(budget_allocation(table1_proposals, lottery)) == 1


class TestMatrixText:
    def test_render_parse_round_trip(self, table1_margins, condorcet_matrix):
        for matrix in (table1_margins, condorcet_matrix):
            [back] = parse_matrices(render_matrix(matrix))
            assert back == matrix

    def test_multiple_blocks(self, condorcet_matrix, chain3_matrix):
        text = render_matrix(condorcet_matrix) + "\n" + "\n".join(
            render_matrix(chain3_matrix).splitlines()[1:]
        )
        parsed = parse_matrices(text)
        assert parsed == [condorcet_matrix, chain3_matrix]

    def test_rejects_non_skew(self):
        with pytest.raises(ParseError):
            parse_matrices("alternatives: a, b\n0 1\n1 0\n")

    def test_rejects_truncated(self):
        with pytest.raises(ParseError, match="incomplete"):
            parse_matrices("alternatives: a, b\n0 1\n")

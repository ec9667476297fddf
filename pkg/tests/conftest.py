from pathlib import Path

import pytest

from ssbchoice import (
    Universe,
    majority_margins,
    parse_ballots,
    parse_proposals,
    pc_extension,
    weak_order,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def table1_profile():
    return parse_ballots(read_fixture("table1.ballots"))


@pytest.fixture(scope="session")
def table1_margins(table1_profile):
    return majority_margins(table1_profile)


@pytest.fixture(scope="session")
def table1_proposals():
    return parse_proposals(read_fixture("table1.proposals"))


@pytest.fixture(scope="session")
def condorcet_profile():
    return parse_ballots(read_fixture("condorcet.ballots"))


@pytest.fixture(scope="session")
def condorcet_matrix(condorcet_profile):
    return majority_margins(condorcet_profile)


@pytest.fixture(scope="session")
def chain3_matrix():
    universe = Universe(("a", "b", "c"))
    return pc_extension(weak_order(universe, ["a", "b", "c"]))


@pytest.fixture(scope="session")
def chain4_matrix():
    universe = Universe(("a", "b", "c", "d"))
    return pc_extension(weak_order(universe, ["a", "b", "c", "d"]))

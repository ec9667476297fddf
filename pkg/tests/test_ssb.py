import random
from fractions import Fraction

import pytest

from ssbchoice import (
    BaseRelation,
    Comparison,
    Lottery,
    SSBMatrix,
    Universe,
    UtilityVector,
    compare,
    cycle_witness,
    evaluate,
    is_dichotomous,
    is_pc,
    is_vnm_separable,
    lottery_grid,
    mix,
    normalize,
    pc_extension,
    restrict,
    same_relation,
    separable,
    weak_order,
)
from ssbchoice.axioms import random_lottery, random_relation, random_ssb_matrix

ABC = Universe(("a", "b", "c"))
ABCD = Universe(("a", "b", "c", "d"))


def test_skew_symmetry_enforced():
    with pytest.raises(ValueError):
        SSBMatrix.from_rows(ABC, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])
    with pytest.raises(ValueError):
        SSBMatrix.from_rows(ABC, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])


class TestEvaluate:
    def test_chain4_mixed_outcomes(self, chain4_matrix):
        p = ABCD.pure("c")
        q = Lottery.of(ABCD, {"a": Fraction(2, 5), "d": Fraction(3, 5)})
        r = Lottery.of(ABCD, {"b": Fraction(3, 5), "d": Fraction(2, 5)})
        assert evaluate(chain4_matrix, p, q) == Fraction(1, 5)
        assert evaluate(chain4_matrix, q, r) == Fraction(1, 25)
        assert evaluate(chain4_matrix, r, p) == Fraction(1, 5)

    def test_margin_matrix_mixture(self, table1_margins):
        u = table1_margins.universe
        p = mix(u.pure("A"), u.pure("C"), Fraction(1, 2))
        assert evaluate(table1_margins, p, u.pure("B")) == 15

    def test_self_evaluation_zero(self):
        rng = random.Random(11)
        for _ in range(100):
            phi = random_ssb_matrix(rng, ABCD)
            p = random_lottery(rng, ABCD)
            assert evaluate(phi, p, p) == 0


class TestCompare:
    def test_pure_margin(self, table1_margins):
        u = table1_margins.universe
        assert table1_margins["A", "B"] == 40
        assert compare(table1_margins, u.pure("A"), u.pure("B")) is Comparison.PREFERRED

    def test_self_indifferent(self, table1_margins):
        p = table1_margins.universe.pure("D")
        assert compare(table1_margins, p, p) is Comparison.INDIFFERENT

    def test_mixture_against_pure(self, table1_margins):
        u = table1_margins.universe
        q = mix(u.pure("A"), u.pure("D"), Fraction(1, 2))
        assert compare(table1_margins, u.pure("C"), q) is Comparison.PREFERRED


class TestPCExtension:
    def test_chain3(self, chain3_matrix):
        assert chain3_matrix.entries == SSBMatrix.from_rows(
            ABC, [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]
        ).entries

    def test_complete_indifference(self):
        assert pc_extension(weak_order(ABC, [ABC.names])).is_zero()

    def test_chain4_upper_triangular(self, chain4_matrix):
        for i in range(4):
            for j in range(4):
                expected = 0 if i == j else (1 if i < j else -1)
                assert chain4_matrix.entries[i][j] == expected

    def test_matches_direct_double_sum(self):
        rng = random.Random(23)
        for _ in range(200):
            relation = random_relation(rng, ABCD)
            phi = pc_extension(relation)
            p = random_lottery(rng, ABCD)
            q = random_lottery(rng, ABCD)
            direct = sum(
                (p.probs[a] * q.probs[b] - q.probs[a] * p.probs[b]
                 for a, b in relation.strict),
                Fraction(0),
            )
            assert evaluate(phi, p, q) == direct


class TestNormalize:
    def test_margin_matrix_scales_by_max(self, table1_margins):
        n = normalize(table1_margins)
        assert n["A", "D"] == 1  # the 80 entry
        assert n["A", "B"] == Fraction(40, 80)

    def test_pc_matrix_fixed(self, chain3_matrix):
        assert normalize(chain3_matrix) == chain3_matrix

    def test_zero_fixed(self):
        z = SSBMatrix.zero(ABC)
        assert normalize(z) == z

    def test_compare_invariant(self, table1_margins):
        rng = random.Random(5)
        u = table1_margins.universe
        n = normalize(table1_margins)
        for _ in range(100):
            p = random_lottery(rng, u)
            q = random_lottery(rng, u)
            assert compare(n, p, q) is compare(table1_margins, p, q)


class TestRestrict:
    def test_margin_pair(self, table1_margins):
        sub = restrict(table1_margins, ["A", "B"])
        assert sub.entries == ((0, 40), (-40, 0))

    def test_full_is_identity(self, table1_margins):
        assert restrict(table1_margins, table1_margins.universe.names) == table1_margins

    def test_chain4_restricts_to_chain3(self, chain4_matrix, chain3_matrix):
        assert restrict(chain4_matrix, ["a", "b", "c"]).entries == chain3_matrix.entries

    def test_agrees_with_parent_on_sublotteries(self, table1_margins):
        rng = random.Random(9)
        sub = restrict(table1_margins, ["A", "B", "C"])
        for _ in range(50):
            p_small = random_lottery(rng, sub.universe)
            q_small = random_lottery(rng, sub.universe)
            lift = lambda s: Lottery.of(
                table1_margins.universe,
                dict(zip(sub.universe.names, s.probs)),
            )
            assert evaluate(sub, p_small, q_small) == evaluate(
                table1_margins, lift(p_small), lift(q_small)
            )

    def test_empty_rejected(self, table1_margins):
        with pytest.raises(ValueError):
            restrict(table1_margins, [])


class TestPredicates:
    def test_chain3_pc_but_not_separable(self, chain3_matrix):
        assert is_pc(chain3_matrix)
        assert is_vnm_separable(chain3_matrix) is None

    def test_two_tier_separable(self):
        phi = pc_extension(weak_order(ABC, [["a", "b"], ["c"]]))
        u = is_vnm_separable(phi)
        assert u is not None
        # anchored at u(a) = 0; only differences matter
        assert u.values == (0, 0, -1)
        diffs = [u.values[i] - u.values[2] for i in range(3)]
        assert diffs == [1, 1, 0]

    def test_zero_matrix_satisfies_everything(self):
        zero = SSBMatrix.zero(ABC)
        assert is_pc(zero)
        assert is_dichotomous(weak_order(ABC, [ABC.names]))
        u = is_vnm_separable(zero)
        assert u is not None and set(u.values) == {0}

    def test_dichotomous_is_two_tiers(self):
        assert is_dichotomous(weak_order(ABC, [["a", "b"], ["c"]]))
        assert not is_dichotomous(weak_order(ABC, ["a", "b", "c"]))
        cyclic = BaseRelation(ABC, frozenset({(0, 1), (1, 2), (2, 0)}))
        assert not is_dichotomous(cyclic)

    def test_separable_evaluates_by_expectation(self):
        rng = random.Random(31)
        for _ in range(150):
            u = UtilityVector(
                ABCD, tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                            for _ in range(4))
            )
            phi = separable(u)
            got = is_vnm_separable(phi)
            assert got is not None
            p = random_lottery(rng, ABCD)
            q = random_lottery(rng, ABCD)
            assert evaluate(phi, p, q) == u.expected(p) - u.expected(q)
            assert got.expected(p) - got.expected(q) == evaluate(phi, p, q)


class TestCycleWitness:
    def test_chain4_has_cycle(self, chain4_matrix):
        witness = cycle_witness(chain4_matrix)
        assert witness is not None
        p, q, r = witness
        assert evaluate(chain4_matrix, p, q) > 0
        assert evaluate(chain4_matrix, q, r) > 0
        assert evaluate(chain4_matrix, r, p) > 0

    def test_grid_contains_reference_cycle(self, chain4_matrix):
        grid = {lot.probs for lot in lottery_grid(ABCD)}
        p = ABCD.pure("c")
        q = Lottery.of(ABCD, {"a": Fraction(2, 5), "d": Fraction(3, 5)})
        r = Lottery.of(ABCD, {"b": Fraction(3, 5), "d": Fraction(2, 5)})
        assert {p.probs, q.probs, r.probs} <= grid

    def test_chain3_has_none(self, chain3_matrix):
        assert cycle_witness(chain3_matrix) is None

    def test_zero_has_none(self):
        assert cycle_witness(SSBMatrix.zero(ABCD)) is None


class TestSymmetrySpotCheck:
    def test_consequent_holds_exactly(self):
        # construct instances satisfying both antecedent indifferences:
        # q ~ (p+r)/2 and lam*p + (1-lam)*r ~ (p+q)/2, then verify
        # lam*r + (1-lam)*p ~ (r+q)/2.
        rng = random.Random(17)
        confirmed = 0
        trials = 0
        while confirmed < 300 and trials < 20000:
            trials += 1
            phi = random_ssb_matrix(rng, ABCD)
            p = random_lottery(rng, ABCD)
            r = random_lottery(rng, ABCD)
            mid = mix(p, r, Fraction(1, 2))
            s = random_lottery(rng, ABCD)
            t = random_lottery(rng, ABCD)
            vs, vt = evaluate(phi, s, mid), evaluate(phi, t, mid)
            if vs == 0:
                q = s
            elif vt == 0 or (vs > 0) == (vt > 0):
                continue
            else:
                q = mix(s, t, vt / (vt - vs))
            assert evaluate(phi, q, mid) == 0
            half_pq = mix(p, q, Fraction(1, 2))
            fp = evaluate(phi, p, half_pq)
            fr = evaluate(phi, r, half_pq)
            if fp == fr:
                continue
            lam = fr / (fr - fp)
            if not 0 <= lam <= 1:
                continue
            assert evaluate(phi, mix(p, r, lam), half_pq) == 0
            consequent = evaluate(phi, mix(r, p, lam), mix(r, q, Fraction(1, 2)))
            assert consequent == 0
            confirmed += 1
        assert confirmed >= 300


def test_same_relation_is_scale_free(table1_margins):
    assert same_relation(table1_margins, table1_margins.scaled(Fraction(7, 3)))
    assert not same_relation(table1_margins, -table1_margins)

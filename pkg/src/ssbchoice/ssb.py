"""Skew-symmetric bilinear utility matrices and the pairwise-comparison extension.

An SSBMatrix holds one exact rational value per ordered pair of
alternatives; a lottery p is strictly preferred to q exactly when the
bilinear form p' M q is positive.  Preferences over pure outcomes extend
to lotteries through `pc_extension`: the resulting matrix has entries in
{-1, 0, 1} and prefers the lottery that is more likely to return the
better alternative in an independent draw.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .model import (
    BaseRelation,
    Lottery,
    Rational,
    Universe,
    UtilityVector,
    frac,
    same_universe,
)


_ZERO = Fraction(0)
_ONE = Fraction(1)
_MINUS_ONE = Fraction(-1)


class Comparison(enum.Enum):
    PREFERRED = "preferred"
    INDIFFERENT = "indifferent"
    DISPREFERRED = "dispreferred"

    def flipped(self) -> "Comparison":
        if self is Comparison.PREFERRED:
            return Comparison.DISPREFERRED
        if self is Comparison.DISPREFERRED:
            return Comparison.PREFERRED
        return Comparison.INDIFFERENT


@dataclass(frozen=True)
class SSBMatrix:
    """A skew-symmetric exact-rational matrix indexed by a universe."""

    universe: Universe
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = len(self.universe)
        rows = tuple(tuple(frac(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != m or any(len(r) != m for r in rows):
            raise ValueError(f"matrix shape is not {m}x{m}")
        for i in range(m):
            for j in range(i, m):
                a, b = rows[i][j], rows[j][i]
                if a.numerator != -b.numerator or a.denominator != b.denominator:
                    raise ValueError(
                        f"not skew-symmetric at ({i},{j}): {a} vs {b}"
                    )

    @classmethod
    def zero(cls, universe: Universe) -> "SSBMatrix":
        z = tuple(tuple(Fraction(0) for _ in universe) for _ in universe)
        return cls(universe, z)

    @classmethod
    def from_rows(
        cls, universe: Universe, rows: Iterable[Iterable[Rational]]
    ) -> "SSBMatrix":
        return cls(universe, tuple(tuple(frac(x) for x in row) for row in rows))

    @classmethod
    def from_upper(
        cls, universe: Universe, upper: dict[tuple[str, str], Rational]
    ) -> "SSBMatrix":
        """Build from values for ordered pairs; the mirror image is implied."""
        m = len(universe)
        grid = [[Fraction(0)] * m for _ in range(m)]
        for (a, b), value in upper.items():
            i, j = universe.index(a), universe.index(b)
            grid[i][j] = frac(value)
            grid[j][i] = -frac(value)
        return cls(universe, tuple(tuple(row) for row in grid))

    def __getitem__(self, key: tuple[str | int, str | int]) -> Fraction:
        a, b = key
        if isinstance(a, str):
            a = self.universe.index(a)
        if isinstance(b, str):
            b = self.universe.index(b)
        return self.entries[a][b]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def max_entry(self) -> Fraction:
        return max(x for row in self.entries for x in row)

    def scaled(self, factor: Rational) -> "SSBMatrix":
        f = frac(factor)
        return SSBMatrix(
            self.universe, tuple(tuple(f * x for x in row) for row in self.entries)
        )

    def __neg__(self) -> "SSBMatrix":
        return self.scaled(-1)

    def __add__(self, other: "SSBMatrix") -> "SSBMatrix":
        same_universe(self, other)
        return SSBMatrix(
            self.universe,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def relabel(self, mapping: dict[str, str]) -> "SSBMatrix":
        """Permute alternatives: entry (pi(a), pi(b)) of the result is entry (a, b)."""
        perm = {
            self.universe.index(k): self.universe.index(v) for k, v in mapping.items()
        }
        m = len(self.universe)
        if sorted(perm) != list(range(m)) or sorted(perm.values()) != list(range(m)):
            raise ValueError("mapping is not a permutation of the universe")
        grid = [[Fraction(0)] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                grid[perm[a]][perm[b]] = self.entries[a][b]
        return SSBMatrix(self.universe, tuple(tuple(row) for row in grid))


def evaluate(phi: SSBMatrix, p: Lottery, q: Lottery) -> Fraction:
    """The exact bilinear form p' phi q; positive sign means p beats q."""
    same_universe(phi, p, q)
    total = Fraction(0)
    for a in p.support_indices():
        row = phi.entries[a]
        pa = p.probs[a]
        for b in q.support_indices():
            total += pa * q.probs[b] * row[b]
    return total


def compare(phi: SSBMatrix, p: Lottery, q: Lottery) -> Comparison:
    value = evaluate(phi, p, q)
    if value > 0:
        return Comparison.PREFERRED
    if value < 0:
        return Comparison.DISPREFERRED
    return Comparison.INDIFFERENT


def pc_extension(relation: BaseRelation) -> SSBMatrix:
    """The pairwise-comparison matrix: +1 where a beats b, -1 mirrored, 0 on ties."""
    m = len(relation.universe)
    grid = [[_ZERO] * m for _ in range(m)]
    for a, b in relation.strict:
        grid[a][b] = _ONE
        grid[b][a] = _MINUS_ONE
    return SSBMatrix(relation.universe, tuple(tuple(row) for row in grid))


def separable(u: UtilityVector) -> SSBMatrix:
    """The SSB matrix of a vNM agent: entry (a, b) is u(a) - u(b)."""
    vals = u.values
    return SSBMatrix(
        u.universe, tuple(tuple(ua - ub for ub in vals) for ua in vals)
    )


def to_matrix(agent) -> SSBMatrix:
    """The SSB matrix representing one profile entry of any supported kind."""
    if isinstance(agent, SSBMatrix):
        return agent
    if isinstance(agent, BaseRelation):
        return pc_extension(agent)
    if isinstance(agent, UtilityVector):
        return separable(agent)
    raise TypeError(f"cannot interpret {type(agent).__name__} as preferences")


def normalize(phi: SSBMatrix) -> SSBMatrix:
    """Scale so the largest entry is exactly 1; the zero matrix stays fixed.

    Two matrices represent the same preference relation iff they are
    positive multiples of one another, so this is a canonical form:
    `normalize(a) == normalize(b)` decides relation equality.
    """
    if phi.is_zero():
        return phi
    top = phi.max_entry()
    if top == 1:
        return phi
    return phi.scaled(1 / top)


def same_relation(a: SSBMatrix, b: SSBMatrix) -> bool:
    """Whether two matrices represent identical preferences (equal up to scale)."""
    same_universe(a, b)
    return normalize(a).entries == normalize(b).entries


def restrict(phi: SSBMatrix, names: Iterable[str]) -> SSBMatrix:
    """The submatrix over a subset of alternatives, in universe order.

    Entry values are preserved absolutely, not re-normalized: for
    pairwise-comparison preferences the restriction pins the matrix
    itself, not just its ray, which is what makes summing matrices
    commute with restriction.
    """
    chosen = phi.universe.subset(names)
    sub = Universe(chosen)
    idx = [phi.universe.index(n) for n in chosen]
    rows = tuple(tuple(phi.entries[a][b] for b in idx) for a in idx)
    return SSBMatrix(sub, rows)


def is_pc(phi: SSBMatrix) -> bool:
    """Whether every entry lies in {-1, 0, 1}."""
    ok = (Fraction(-1), Fraction(0), Fraction(1))
    return all(x in ok for row in phi.entries for x in row)


def is_dichotomous(relation: BaseRelation) -> bool:
    """Whether the relation is a two-tier weak order (or complete indifference)."""
    tiers = relation.tiers()
    return tiers is not None and len(tiers) <= 2


def approved_set(relation: BaseRelation) -> frozenset[str]:
    """Top tier of a dichotomous relation; empty for complete indifference."""
    tiers = relation.tiers()
    if tiers is None or len(tiers) > 2:
        raise ValueError("relation is not dichotomous")
    if len(tiers) <= 1:
        return frozenset()
    return frozenset(tiers[0])


def is_vnm_separable(phi: SSBMatrix) -> UtilityVector | None:
    """The utility vector inducing phi, if one exists; anchored at u(first) = 0.

    phi is separable iff entries are additive along triples:
    phi(a, c) = phi(a, b) + phi(b, c).  Checking all triples against the
    candidate u(x) = phi(x, first) is equivalent and m^2 instead of m^3.
    """
    m = len(phi.universe)
    u = tuple(phi.entries[x][0] for x in range(m))
    for a in range(m):
        for b in range(m):
            if phi.entries[a][b] != u[a] - u[b]:
                return None
    return UtilityVector(phi.universe, u)


def lottery_grid(universe: Universe, max_denominator: int = 5) -> list[Lottery]:
    """Pure outcomes plus all two-support lotteries with small denominators.

    Deterministic order: pure outcomes in universe order, then index pairs
    (i < j) lexicographically with the weight on i ascending.
    """
    weights = sorted(
        {
            Fraction(k, d)
            for d in range(2, max_denominator + 1)
            for k in range(1, d)
        }
    )
    grid = [universe.pure(n) for n in universe.names]
    m = len(universe)
    for i in range(m):
        for j in range(i + 1, m):
            for t in weights:
                probs = [Fraction(0)] * m
                probs[i] = t
                probs[j] = 1 - t
                grid.append(Lottery(universe, tuple(probs)))
    return grid


def cycle_witness(
    phi: SSBMatrix, max_denominator: int = 5
) -> tuple[Lottery, Lottery, Lottery] | None:
    """A strict preference cycle p > q > r > p among grid lotteries, if any.

    Searches ordered triples over `lottery_grid` (pure outcomes plus
    two-support lotteries with denominators up to `max_denominator`) and
    returns the first cycle in enumeration order.  A returned witness
    always verifies exactly; None means no cycle exists on this grid.
    """
    grid = lottery_grid(phi.universe, max_denominator)
    k = len(grid)
    beats = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            value = evaluate(phi, grid[i], grid[j])
            if value > 0:
                beats[i][j] = True
            elif value < 0:
                beats[j][i] = True
    for i in range(k):
        row_i = beats[i]
        for j in range(k):
            if not row_i[j]:
                continue
            row_j = beats[j]
            for l in range(k):
                if row_j[l] and beats[l][i]:
                    return grid[i], grid[j], grid[l]
    return None

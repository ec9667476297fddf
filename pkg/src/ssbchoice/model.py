"""Exact-rational domain types: alternatives, lotteries, relations, profiles.

Every probability and utility in this package is a `fractions.Fraction`;
no value ever passes through a float.  All types are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, str, Fraction]


def frac(value: Rational) -> Fraction:
    """Coerce an int, Fraction, or string like "2/5" or "0.4" to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class UniverseMismatchError(ValueError):
    """Two values that must share a universe of alternatives do not."""


def same_universe(*objects) -> None:
    first = objects[0].universe
    for other in objects[1:]:
        if other.universe != first:
            raise UniverseMismatchError(
                f"universe mismatch: {first.names} vs {other.universe.names}"
            )


@dataclass(frozen=True)
class Universe:
    """An ordered finite set of named alternatives."""

    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("universe must contain at least one alternative")
        if any(not isinstance(n, str) or not n for n in names):
            raise ValueError("alternative names must be non-empty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate alternative names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown alternative {name!r}") from None

    def indices(self, names: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.index(n) for n in names)

    def pure(self, name: str) -> "Lottery":
        """The one-point lottery on `name`."""
        i = self.index(name)
        probs = tuple(
            Fraction(1) if j == i else Fraction(0) for j in range(len(self.names))
        )
        return Lottery(self, probs)

    def subset(self, names: Iterable[str] | None) -> tuple[str, ...]:
        """Validate a subset of alternatives, preserving universe order."""
        if names is None:
            return self.names
        chosen = set(names)
        unknown = chosen - set(self.names)
        if unknown:
            raise KeyError(f"unknown alternatives {sorted(unknown)}")
        if not chosen:
            raise ValueError("subset of alternatives must be non-empty")
        return tuple(n for n in self.names if n in chosen)


@dataclass(frozen=True)
class Lottery:
    """An exact probability vector over a universe of alternatives."""

    universe: Universe
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(frac(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) != len(self.universe):
            raise ValueError(
                f"lottery has {len(probs)} entries for {len(self.universe)} alternatives"
            )
        if any(p < 0 for p in probs):
            raise ValueError(f"negative probability in {probs}")
        if sum(probs) != 1:
            raise ValueError(f"probabilities sum to {sum(probs)}, not 1")

    @classmethod
    def of(cls, universe: Universe, assignment: dict[str, Rational]) -> "Lottery":
        """Build a lottery from a name -> probability mapping; omitted names get 0."""
        unknown = set(assignment) - set(universe.names)
        if unknown:
            raise KeyError(f"unknown alternatives {sorted(unknown)}")
        probs = tuple(frac(assignment.get(n, 0)) for n in universe.names)
        return cls(universe, probs)

    def __getitem__(self, key: str | int) -> Fraction:
        if isinstance(key, str):
            key = self.universe.index(key)
        return self.probs[key]

    def support(self) -> tuple[str, ...]:
        return tuple(n for n, p in zip(self.universe.names, self.probs) if p > 0)

    def support_indices(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0)


def mix(p: Lottery, q: Lottery, lam: Rational) -> Lottery:
    """The convex combination lam*p + (1-lam)*q, computed exactly."""
    same_universe(p, q)
    lam = frac(lam)
    if not 0 <= lam <= 1:
        raise ValueError(f"mixing weight {lam} outside [0, 1]")
    probs = tuple(lam * a + (1 - lam) * b for a, b in zip(p.probs, q.probs))
    return Lottery(p.universe, probs)


@dataclass(frozen=True)
class BaseRelation:
    """An asymmetric strict-preference relation over pure outcomes.

    `strict` holds ordered index pairs (a, b) meaning "a is strictly
    preferred to b".  Indifference is the absence of both orientations.
    Transitivity is not required; arbitrary tournaments with ties are legal.
    """

    universe: Universe
    strict: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "strict", frozenset(self.strict))
        m = len(self.universe)
        for a, b in self.strict:
            if not (0 <= a < m and 0 <= b < m):
                raise ValueError(f"pair ({a}, {b}) outside universe of size {m}")
            if a == b:
                raise ValueError(f"reflexive pair ({a}, {a}) in strict relation")
            if (b, a) in self.strict:
                raise ValueError(
                    f"asymmetry violated: both ({a},{b}) and ({b},{a}) present"
                )

    def _pair(self, a: str | int, b: str | int) -> tuple[int, int]:
        if isinstance(a, str):
            a = self.universe.index(a)
        if isinstance(b, str):
            b = self.universe.index(b)
        return a, b

    def prefers(self, a: str | int, b: str | int) -> bool:
        return self._pair(a, b) in self.strict

    def indifferent(self, a: str | int, b: str | int) -> bool:
        a, b = self._pair(a, b)
        return (a, b) not in self.strict and (b, a) not in self.strict

    def inverse(self) -> "BaseRelation":
        return BaseRelation(self.universe, frozenset((b, a) for a, b in self.strict))

    def relabel(self, mapping: dict[str, str]) -> "BaseRelation":
        """Rename alternatives by a permutation of the universe."""
        perm = {self.universe.index(k): self.universe.index(v) for k, v in mapping.items()}
        if sorted(perm) != list(range(len(self.universe))) or sorted(
            perm.values()
        ) != list(range(len(self.universe))):
            raise ValueError("mapping is not a permutation of the universe")
        return BaseRelation(
            self.universe, frozenset((perm[a], perm[b]) for a, b in self.strict)
        )

    def tiers(self) -> tuple[tuple[str, ...], ...] | None:
        """Indifference tiers if this relation is a weak order, else None.

        A weak order is recovered by grouping alternatives on their
        dominated count and checking that the grouping reproduces `strict`.
        """
        m = len(self.universe)
        dominated = [0] * m
        for a, b in self.strict:
            dominated[a] += 1
        order = sorted(range(m), key=lambda i: (-dominated[i], i))
        tiers: list[list[int]] = []
        for i in order:
            if tiers and dominated[tiers[-1][0]] == dominated[i]:
                tiers[-1].append(i)
            else:
                tiers.append([i])
        rebuilt = set()
        for hi, tier in enumerate(tiers):
            for low_tier in tiers[hi + 1 :]:
                rebuilt.update((a, b) for a in tier for b in low_tier)
        if rebuilt != set(self.strict):
            return None
        return tuple(
            tuple(self.universe.names[i] for i in sorted(tier)) for tier in tiers
        )


def weak_order(
    universe: Universe, tiers: Sequence[Sequence[str] | str]
) -> BaseRelation:
    """Build the weak order with the given indifference tiers, best first.

    A tier may be a single name or a sequence of names.  Alternatives not
    listed in any tier form a shared bottom indifference tier, so partial
    ballots stay total.
    """
    norm: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for tier in tiers:
        names = [tier] if isinstance(tier, str) else list(tier)
        idx = tuple(universe.index(n) for n in names)
        for i in idx:
            if i in seen:
                raise ValueError(
                    f"alternative {universe.names[i]!r} appears in two tiers"
                )
            seen.add(i)
        if idx:
            norm.append(idx)
    rest = tuple(i for i in range(len(universe)) if i not in seen)
    if rest:
        norm.append(rest)
    strict = set()
    for hi, tier in enumerate(norm):
        for low_tier in norm[hi + 1 :]:
            strict.update((a, b) for a in tier for b in low_tier)
    return BaseRelation(universe, frozenset(strict))


@dataclass(frozen=True)
class UtilityVector:
    """An exact vNM utility assignment; one value per alternative."""

    universe: Universe
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(frac(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != len(self.universe):
            raise ValueError(
                f"{len(values)} utilities for {len(self.universe)} alternatives"
            )

    @classmethod
    def of(cls, universe: Universe, assignment: dict[str, Rational]) -> "UtilityVector":
        unknown = set(assignment) - set(universe.names)
        if unknown:
            raise KeyError(f"unknown alternatives {sorted(unknown)}")
        return cls(universe, tuple(frac(assignment.get(n, 0)) for n in universe.names))

    def __getitem__(self, key: str | int) -> Fraction:
        if isinstance(key, str):
            key = self.universe.index(key)
        return self.values[key]

    def is_dichotomous(self) -> bool:
        return len(set(self.values)) <= 2

    def is_constant(self) -> bool:
        return len(set(self.values)) == 1

    def expected(self, p: Lottery) -> Fraction:
        same_universe(self, p)
        return sum((u * w for u, w in zip(self.values, p.probs)), Fraction(0))


#: Anything that can stand for one agent's preferences in a profile:
#: a BaseRelation (PC agent), a UtilityVector (vNM agent), or an SSBMatrix.
Agent = object


@dataclass(frozen=True)
class Profile:
    """An ordered list of agents' preferences over a shared universe."""

    universe: Universe
    agents: tuple

    def __post_init__(self):
        object.__setattr__(self, "agents", tuple(self.agents))
        if not self.agents:
            raise ValueError("profile needs at least one agent")
        for agent in self.agents:
            if getattr(agent, "universe", None) != self.universe:
                raise UniverseMismatchError(
                    "agent universe differs from profile universe"
                )

    @property
    def n(self) -> int:
        return len(self.agents)

    def permuted(self, permutation: Sequence[int]) -> "Profile":
        """The profile with agents renamed by the permutation (R composed with pi)."""
        if sorted(permutation) != list(range(self.n)):
            raise ValueError("not a permutation of the agent set")
        return Profile(self.universe, tuple(self.agents[i] for i in permutation))


@dataclass(frozen=True)
class FeasiblePolytope:
    """The convex hull of finitely many vertex lotteries."""

    universe: Universe
    vertices: tuple[Lottery, ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if not vertices:
            raise ValueError("feasible set needs at least one vertex")
        for v in vertices:
            if v.universe != self.universe:
                raise UniverseMismatchError("vertex universe differs from polytope")
        # canonicalize: drop exact duplicates, keeping first occurrences
        seen: set = set()
        unique = []
        for v in vertices:
            if v.probs not in seen:
                seen.add(v.probs)
                unique.append(v)
        object.__setattr__(self, "vertices", tuple(unique))

    @classmethod
    def delta(cls, universe: Universe, names: Iterable[str] | None = None):
        """The sub-simplex of lotteries supported on the given alternatives."""
        chosen = universe.subset(names)
        return cls(universe, tuple(universe.pure(n) for n in chosen))

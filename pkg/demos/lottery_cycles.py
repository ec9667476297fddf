"""Transitive rankings can still cycle over mixtures.

Under the pairwise-comparison extension, an agent prefers one lottery to
another iff it is more likely to deliver the better alternative when both
are sampled independently.  With four strictly ranked alternatives this
produces strict cycles among mixed outcomes, found here by grid search
and verified exactly.
"""

from fractions import Fraction

from ssbchoice import (
    Lottery,
    Universe,
    cycle_witness,
    evaluate,
    format_fraction,
    pc_extension,
    render_matrix,
    weak_order,
)


def describe(lottery):
    return " + ".join(
        f"{format_fraction(p)} {n}"
        for n, p in zip(lottery.universe.names, lottery.probs) if p
    )


def main():
    universe = Universe(("a", "b", "c", "d"))
    ranking = weak_order(universe, ["a", "b", "c", "d"])
    phi = pc_extension(ranking)
    print("One agent ranks a > b > c > d; the comparison matrix is:")
    print(render_matrix(phi))

    p = universe.pure("c")
    q = Lottery.of(universe, {"a": Fraction(2, 5), "d": Fraction(3, 5)})
    r = Lottery.of(universe, {"b": Fraction(3, 5), "d": Fraction(2, 5)})
    print("A hand-picked triple of outcomes:")
    for label, lot in zip("pqr", (p, q, r)):
        print(f"  {label} = {describe(lot)}")
    print("cycles strictly:")
    print(f"  value(p, q) = {format_fraction(evaluate(phi, p, q))} > 0")
    print(f"  value(q, r) = {format_fraction(evaluate(phi, q, r))} > 0")
    print(f"  value(r, p) = {format_fraction(evaluate(phi, r, p))} > 0")

    print("\nGrid search over pure outcomes and two-support lotteries with "
          "denominators up to 5 finds a cycle on its own:")
    witness = cycle_witness(phi)
    wp, wq, wr = witness
    for label, lot in zip("pqr", witness):
        print(f"  {label} = {describe(lot)}")
    print("  values: "
          f"{format_fraction(evaluate(phi, wp, wq))}, "
          f"{format_fraction(evaluate(phi, wq, wr))}, "
          f"{format_fraction(evaluate(phi, wr, wp))}")

    chain3 = pc_extension(weak_order(Universe(("a", "b", "c")), ["a", "b", "c"]))
    print("\nWith only three strictly ranked alternatives no cycle exists; "
          f"the same search returns: {cycle_witness(chain3)}")


if __name__ == "__main__":
    main()

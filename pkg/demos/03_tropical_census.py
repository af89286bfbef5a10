#!/usr/bin/env python3
"""Max-plus belt over exact rationals: periods, colored mutation counts.

The tropical recursion replaces products with sums and the sum of the two
exchange monomials with their max.  Over one full period the mutations
split into h*r red (Gamma side wins) and 2r blue (Delta side wins).
"""

from fractions import Fraction

import zamobelt as z
import zamobelt.tropical as tr


def main():
    print("A2 at lambda = (-1, -1): the whole tropical orbit")
    g = z.catalog("A2")
    lam = tr.constant_labeling(2, -1)
    events = []
    states = tr.run_states(g, lam, 10, events)
    for c, state in enumerate(states):
        print("  t=%-2d  %s" % (c, tuple(str(x) for x in state)))
    print("minimal period:", z.tropical_period(g, lam, 10))

    print()
    print("every mutation colored by which side attains the max:")
    for e in events:
        print(
            "  t=%-2d vertex %d  gamma %6s  delta %6s  -> %s"
            % (e.t, e.k + 1, e.gamma_sum, e.delta_sum, e.color)
        )

    print()
    print("census across the single Dynkin entries (expect h*r red, 2r blue):")
    print("  name  red blue ties   blue event times")
    for name in ("A2", "A3", "A4", "B2", "D4", "G2"):
        g = z.catalog(name)
        census = z.colored_census(g, tr.constant_labeling(g.n, -1))
        print(
            "  %-4s %4d %4d %4d   %s"
            % (name, census.red, census.blue, census.ties, census.blue_times)
        )

    print()
    print("random labelings keep 2N as a period (minimal may be N when sigma = id):")
    rng = tr.make_rng(0)
    for name in ("A3", "D4", "fig2-F4xA2"):
        g = z.catalog(name)
        periods = set()
        for _ in range(50):
            periods.add(z.tropical_period(g, tr.random_labeling(rng, g.n), 2 * g.half_period))
        print("  %-14s minimal periods over 50 draws: %s" % (name, sorted(periods)))


if __name__ == "__main__":
    main()

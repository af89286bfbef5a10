#!/usr/bin/env python3
"""Framed mutation and maximal green sequences on the bipartite belt.

Shows c-vectors evolving under a hand-sized mutation walk, then certifies
both belt-induced maximal green sequences for several catalog entries and
cross-checks the frozen isomorphism against the symbolic half-period.
"""

import zamobelt as z
import zamobelt.bigraph as bg
import zamobelt.green as green


def show_state(state, note: str):
    statuses = "".join(
        "G" if green.vertex_status(state, k) == "green" else "R"
        for k in range(state.n)
    )
    print("  %-12s C = %s   [%s]" % (note, state.c_matrix(), statuses))


def main():
    print("framed A2, mutating black then white then black")
    state = green.framed(bg.catalog("A2").base)
    show_state(state, "start")
    for k in (1, 0, 1):
        state = green.mutate_framed(state, k)
        show_state(state, "mu_%d" % (k + 1))
    print("  final -C is the permutation matrix of (1 2)")

    print()
    print("both belt sequences are maximal green:")
    for name in ("A2", "B2", "A2xA3", "fig1-A5starD4", "fig2-F4xA2"):
        g = bg.catalog(name)
        cert_gamma, cert_delta = z.verify_bipartite_belt_mgs(g)
        print(
            "  %-14s lengths %2d and %2d, factors %2d and %d, ends at -P_%s and -P_%s"
            % (
                name,
                len(cert_gamma.sequence),
                len(cert_delta.sequence),
                cert_gamma.factors,
                cert_delta.factors,
                cert_gamma.permutation.cycles(),
                cert_delta.permutation.cycles(),
            )
        )

    print()
    print("frozen isomorphism agrees with the symbolic half-period:")
    for name in ("A2", "A5", "fig1-A5starD4"):
        symbolic = z.half_period(bg.catalog(name)).sigma
        frozen = z.frozen_isomorphism_check(bg.catalog(name), symbolic)
        print("  %-14s sigma = %s (both routes)" % (name, frozen.cycles()))


if __name__ == "__main__":
    main()

"""Symbolic T-system along the bipartite belt.

Time bookkeeping follows the split convention: vertex k carries values
only at times t with t = eta_k (mod 2).  A BeltState at time c stores,
for every vertex, the value at c when the parities agree and the value
at c+1 otherwise, so one state always holds a full cluster spanning the
two times {c, c+1}.  Stepping from c to c+1 produces T_k(c+2) for the
vertices k with eta_k = c (mod 2); whites are the first movers.
"""

from collections import Counter
from dataclasses import dataclass

from . import dynkin
from .bigraph import Automorphism, classify_color_behavior
from .errors import (
    ClaimViolation,
    InputError,
    LaurentPhenomenonViolation,
    NoPermutationMatch,
    NotDivisible,
)
from .laurent import Laurent


@dataclass(frozen=True)
class BeltState:
    g: object
    t: int
    values: tuple

    def cluster(self):
        return self.values


def initial_state(g):
    n = g.n
    return BeltState(g=g, t=0, values=tuple(Laurent.variable(k, n) for k in range(n)))


def step(state):
    """Advance one time unit, mutating the vertices whose parity matches."""
    g = state.g
    c = state.t
    values = list(state.values)
    for k in range(g.n):
        if g.eta(k) % 2 != c % 2:
            continue
        gamma_prod = Laurent.one(g.n)
        delta_prod = Laurent.one(g.n)
        for i in range(g.n):
            e = g.gamma[i][k]
            if e:
                gamma_prod = gamma_prod * state.values[i] ** e
            e = g.delta[i][k]
            if e:
                delta_prod = delta_prod * state.values[i] ** e
        numerator = gamma_prod + delta_prod
        try:
            values[k] = numerator.divexact(state.values[k])
        except NotDivisible as exc:
            raise LaurentPhenomenonViolation(
                "vertex %d at time %d: %s" % (k + 1, c + 2, exc)
            ) from exc
    return BeltState(g=g, t=c + 1, values=tuple(values))


def run_belt(g, steps):
    """Trajectory of steps+1 states starting from the initial cluster."""
    if steps < 0:
        raise InputError("steps must be nonnegative")
    out = [initial_state(g)]
    for _ in range(steps):
        out.append(step(out[-1]))
    return out


def detect_period(g, max_steps):
    """Smallest even p <= max_steps with an exact cluster recurrence."""
    first = initial_state(g)
    state = first
    for p in range(1, max_steps + 1):
        state = step(state)
        if p % 2 == 0 and state.values == first.values:
            return p
    return None


@dataclass(frozen=True)
class HalfPeriodReport:
    N: int
    sigma: Automorphism
    color_behavior: str
    order: int
    identity: bool


def sigma_from_cluster(values):
    """Permutation sigma with values[i] == x_{sigma(i)}, or raise.

    Entries that are not plain variables, scalar multiples included,
    mean the cluster is not a relabeling of the initial one.
    """
    n = len(values)
    perm = []
    for i, value in enumerate(values):
        j = value.as_variable()
        if j is None:
            raise NoPermutationMatch(
                "entry %d is %s, not an initial variable" % (i + 1, value)
            )
        perm.append(j)
    if sorted(perm) != list(range(n)):
        raise NoPermutationMatch("variable indices repeat: %s" % (perm,))
    return tuple(perm)


def half_period(g):
    """Run to t = h_Gamma + h_Delta and classify the relabeling found there."""
    n_steps = g.half_period
    state = initial_state(g)
    for _ in range(n_steps):
        state = step(state)
    perm = sigma_from_cluster(state.values)
    for i in range(g.n):
        for j in range(g.n):
            if (
                g.gamma[perm[i]][perm[j]] != g.gamma[i][j]
                or g.delta[perm[i]][perm[j]] != g.delta[i][j]
            ):
                raise ClaimViolation(
                    "half-period permutation does not preserve (Gamma, Delta)"
                )
    square = tuple(perm[perm[i]] for i in range(g.n))
    if square != tuple(range(g.n)):
        raise ClaimViolation("half-period permutation has order above two")
    behavior = classify_color_behavior(g, perm)
    expected = "preserving" if n_steps % 2 == 0 else "reversing"
    identity = perm == tuple(range(g.n))
    if behavior != expected:
        raise ClaimViolation(
            "color behavior %s does not match parity of N=%d" % (behavior, n_steps)
        )
    sigma = Automorphism(
        perm=perm, kind="bicolored" if behavior == "preserving" else "colorReversing"
    )
    return HalfPeriodReport(
        N=n_steps,
        sigma=sigma,
        color_behavior=behavior,
        order=1 if identity else 2,
        identity=identity,
    )


def _require_tensor_with_point(g, what):
    if any(any(row) for row in g.delta):
        raise InputError("%s needs an empty Delta (a plain Dynkin entry)" % what)


def cluster_variable_census(g):
    """Multiset of the values produced over one full period 2N."""
    _require_tensor_with_point(g, "census")
    two_n = 2 * g.half_period
    state = initial_state(g)
    seen = Counter(state.values)
    for c in range(two_n - 2):
        new_state = step(state)
        for k in range(g.n):
            if g.eta(k) % 2 == c % 2:
                seen[new_state.values[k]] += 1
        state = new_state
    return seen


def denominator_bijection_check(g):
    """Compare half-period d-vectors with almost positive roots.

    The root side comes from the brute-force enumerator on the Cartan
    companion of Gamma, so the two sides are computed independently.
    """
    _require_tensor_with_point(g, "denominator bijection")
    n = g.n
    state = initial_state(g)
    collected = Counter(v.denominator_vector() for v in state.values)
    for c in range(g.half_period - 2):
        state = step(state)
        for k in range(n):
            if g.eta(k) % 2 == c % 2:
                collected[state.values[k].denominator_vector()] += 1
    cartan = tuple(
        tuple(2 if i == j else -g.gamma[i][j] for j in range(n)) for i in range(n)
    )
    expected = Counter(dynkin.positive_roots(cartan))
    for i in range(n):
        expected[tuple(-1 if j == i else 0 for j in range(n))] += 1
    return collected == expected

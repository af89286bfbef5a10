"""Framed matrices, c-vectors, and maximal green sequence certification.

Everything here runs two bookkeeping tracks at once.  The primary track
is plain matrix mutation of the n x 2n extension; the c-vectors are its
frozen columns.  The second track iterates the coefficient mutation
rule in the tropical semifield, where a coefficient is an integer
exponent vector and semifield addition takes componentwise minima.
The two tracks must agree row for row after every single mutation; that
agreement is asserted, not assumed.
"""

from dataclasses import dataclass

from .bigraph import Automorphism, classify_color_behavior
from .errors import (
    CoefficientMismatch,
    FrozenVertex,
    InvalidPartition,
    MismatchWithSymbolicSigma,
    NoIsomorphism,
    NotComponentPreserving,
    NotGreenAtStep,
    NotMaximal,
    NotPermutation,
    SignCoherenceViolation,
)

GREEN = "green"
RED = "red"


@dataclass(frozen=True)
class FramedState:
    n: int
    ext: tuple
    history: tuple

    def c_vector(self, i):
        return self.ext[i][self.n:]

    def c_matrix(self):
        return tuple(row[self.n:] for row in self.ext)

    def mutable_block(self):
        return tuple(row[: self.n] for row in self.ext)


def framed(m):
    n = m.n
    ext = tuple(
        tuple(m.b[i]) + tuple(1 if j == i else 0 for j in range(n))
        for i in range(n)
    )
    return FramedState(n=n, ext=ext, history=())


def coframed(m):
    n = m.n
    ext = tuple(
        tuple(m.b[i]) + tuple(-1 if j == i else 0 for j in range(n))
        for i in range(n)
    )
    return FramedState(n=n, ext=ext, history=())


def _assert_sign_coherent(state):
    for i in range(state.n):
        c = state.c_vector(i)
        if any(x > 0 for x in c) and any(x < 0 for x in c):
            raise SignCoherenceViolation(
                "c-vector %d is %s after %s" % (i + 1, c, state.history)
            )


def mutate_framed(state, k):
    """Standard mutation at mutable k over all 2n columns."""
    n = state.n
    if not 0 <= k < n:
        raise FrozenVertex("vertex %d is not mutable" % (k + 1))
    b = state.ext
    out = []
    for i in range(n):
        row = []
        for j in range(2 * n):
            if i == k or j == k:
                row.append(-b[i][j])
            elif b[i][k] > 0 and b[k][j] > 0:
                row.append(b[i][j] + b[i][k] * b[k][j])
            elif b[i][k] < 0 and b[k][j] < 0:
                row.append(b[i][j] - b[i][k] * b[k][j])
            else:
                row.append(b[i][j])
        out.append(tuple(row))
    new = FramedState(n=n, ext=tuple(out), history=state.history + (k,))
    _assert_sign_coherent(new)
    return new


def vertex_status(state, k):
    if not 0 <= k < state.n:
        raise FrozenVertex("vertex %d is not mutable" % (k + 1))
    return GREEN if all(x >= 0 for x in state.c_vector(k)) else RED


def _normalize_partition(state, partition):
    parts = [tuple(sorted(part)) for part in partition]
    covered = sorted(v for part in parts for v in part)
    if covered != list(range(state.n)):
        raise InvalidPartition(
            "partition covers %s, expected 0..%d once each" % (covered, state.n - 1)
        )
    return parts


def is_component_preserving(state, partition, k):
    """Green k may only point negatively inside its own part; red k may
    only point positively inside its own part.  Frozen columns satisfy
    this automatically through sign-coherence."""
    parts = _normalize_partition(state, partition)
    own = next(part for part in parts if k in part)
    green = vertex_status(state, k) == GREEN
    row = state.ext[k]
    for j in range(2 * state.n):
        if green and row[j] < 0:
            bad = j
        elif not green and row[j] > 0:
            bad = j
        else:
            continue
        if bad < state.n and bad not in own:
            return False
        if bad >= state.n:
            # a frozen violation would contradict the green/red status
            raise SignCoherenceViolation(
                "frozen column %d contradicts status of %d" % (bad + 1, k + 1)
            )
    return True


def _restrict(ext, n, part):
    """Square-free restriction: rows of part, columns of part then frozen."""
    cols = list(part) + list(range(n, 2 * n))
    return tuple(tuple(ext[i][j] for j in cols) for i in part)


def _mutate_restricted(ext_r, nrows, k_local):
    ncols = len(ext_r[0])
    out = []
    for i in range(nrows):
        row = []
        for j in range(ncols):
            if i == k_local or j == k_local:
                row.append(-ext_r[i][j])
            elif ext_r[i][k_local] > 0 and ext_r[k_local][j] > 0:
                row.append(ext_r[i][j] + ext_r[i][k_local] * ext_r[k_local][j])
            elif ext_r[i][k_local] < 0 and ext_r[k_local][j] < 0:
                row.append(ext_r[i][j] - ext_r[i][k_local] * ext_r[k_local][j])
            else:
                row.append(ext_r[i][j])
        out.append(tuple(row))
    return tuple(out)


def _check_restriction_commutes(before, after, parts, k):
    """Mutation at k must act on the part containing k exactly as local
    mutation of the restricted matrix and must leave other parts alone."""
    n = before.n
    for part in parts:
        restricted_after = _restrict(after.ext, n, part)
        if k in part:
            local = _mutate_restricted(
                _restrict(before.ext, n, part), len(part), part.index(k)
            )
            if local != restricted_after:
                raise NotComponentPreserving(
                    "mutation at %d does not commute with restriction" % (k + 1)
                )
        elif _restrict(before.ext, n, part) != restricted_after:
            raise NotComponentPreserving(
                "mutation at %d leaked into part %s" % (k + 1, part)
            )


def _min0(vec):
    return tuple(min(0, x) for x in vec)


def initial_y(n, sign=1):
    return tuple(
        tuple(sign if j == i else 0 for j in range(n)) for i in range(n)
    )


def mutate_y(y, ext, k):
    """Coefficient mutation in the tropical semifield, on exponent rows.

    Uses the pre-mutation exchange entries b_ik; semifield addition
    turns (y^a + 1) into the componentwise min(a, 0) exponent.
    """
    n = len(y)
    floor_k = _min0(y[k])
    out = []
    for i in range(n):
        if i == k:
            out.append(tuple(-x for x in y[k]))
            continue
        b_ik = ext[i][k]
        plus = max(b_ik, 0)
        out.append(
            tuple(
                a + plus * ak - b_ik * fk
                for a, ak, fk in zip(y[i], y[k], floor_k)
            )
        )
    return tuple(out)


def _assert_y_matches_c(state, y):
    for i in range(state.n):
        if tuple(state.c_vector(i)) != y[i]:
            raise CoefficientMismatch(
                "row %d: c-vector %s vs coefficient %s after %s"
                % (i + 1, state.c_vector(i), y[i], state.history)
            )


@dataclass(frozen=True)
class GreenCertificate:
    sequence: tuple
    factors: int
    final_c: tuple
    permutation: object


def _extract_minus_permutation(c_rows):
    """sigma with -C == P_sigma (row i has its -1 in column sigma(i))."""
    n = len(c_rows)
    perm = []
    for row in c_rows:
        negatives = [j for j, x in enumerate(row) if x == -1]
        if len(negatives) != 1 or any(x not in (0, -1) for x in row):
            return None
        perm.append(negatives[0])
    if sorted(perm) != list(range(n)):
        return None
    return tuple(perm)


def _alternating_factors(first, second, count):
    return [list(first) if f % 2 == 0 else list(second) for f in range(count)]


def _certify(g, first, second, factors, partition):
    state = framed(g.base)
    y = initial_y(g.n)
    parts = _normalize_partition(state, partition)
    sequence = []
    for factor in _alternating_factors(first, second, factors):
        for k in factor:
            if vertex_status(state, k) != GREEN:
                raise NotGreenAtStep(len(sequence) + 1, k)
            if not is_component_preserving(state, parts, k):
                raise NotComponentPreserving(
                    "vertex %d at position %d" % (k + 1, len(sequence) + 1)
                )
            after = mutate_framed(state, k)
            _check_restriction_commutes(state, after, parts, k)
            y = mutate_y(y, state.ext, k)
            _assert_y_matches_c(after, y)
            state = after
            sequence.append(k)
    still_green = [k for k in range(g.n) if vertex_status(state, k) == GREEN]
    if still_green:
        raise NotMaximal("vertices %s still green" % [k + 1 for k in still_green])
    perm = _extract_minus_permutation(state.c_matrix())
    if perm is None:
        raise NotPermutation("final C is %s" % (state.c_matrix(),))
    return GreenCertificate(
        sequence=tuple(sequence),
        factors=factors,
        final_c=state.c_matrix(),
        permutation=Automorphism(perm=perm, kind="general"),
    )


def verify_bipartite_belt_mgs(g):
    """Certify both alternating belt sequences on the framed matrix.

    The sink-first sequence (h_Gamma factors, Gamma-sinks open) is
    checked against the Gamma-component partition; the other sequence
    (h_Delta factors, Delta-sinks open) against the Delta-component
    partition.  Whites are Gamma-sources under the sign convention, so
    Gamma-sinks are the black vertices.
    """
    partition_gamma = tuple(comp.vertices for comp in g.gamma_components)
    partition_delta = tuple(comp.vertices for comp in g.delta_components)
    cert_gamma = _certify(g, g.blacks, g.whites, g.h_gamma, partition_gamma)
    cert_delta = _certify(g, g.whites, g.blacks, g.h_delta, partition_delta)
    return cert_gamma, cert_delta


def frozen_isomorphism_check(g, symbolic_sigma=None):
    """Run the belt on the coframed matrix for N composite factors.

    The result must be the coframed matrix with mutable labels permuted
    and frozen labels fixed; the permutation is returned and, when a
    symbolic half-period permutation is supplied, must equal it.
    """
    state = coframed(g.base)
    y = initial_y(g.n, sign=-1)
    for factor in _alternating_factors(g.whites, g.blacks, g.half_period):
        for k in factor:
            y = mutate_y(y, state.ext, k)
            state = mutate_framed(state, k)
            _assert_y_matches_c(state, y)
    frozen_rows = state.c_matrix()
    perm_cols = [None] * g.n
    for r, row in enumerate(frozen_rows):
        negatives = [j for j, x in enumerate(row) if x == -1]
        if len(negatives) != 1 or any(x not in (0, -1) for x in row):
            raise NoIsomorphism("frozen block is %s" % (frozen_rows,))
        perm_cols[negatives[0]] = r
    if any(v is None for v in perm_cols):
        raise NoIsomorphism("frozen block is %s" % (frozen_rows,))
    perm = tuple(perm_cols)
    mutable = state.mutable_block()
    b = g.base.b
    for i in range(g.n):
        for j in range(g.n):
            if mutable[perm[i]][perm[j]] != b[i][j]:
                raise NoIsomorphism(
                    "mutable block is not a relabeling of the original"
                )
    if symbolic_sigma is not None:
        expected = (
            symbolic_sigma.perm
            if hasattr(symbolic_sigma, "perm")
            else tuple(symbolic_sigma)
        )
        if perm != expected:
            raise MismatchWithSymbolicSigma(
                "frozen %s vs symbolic %s" % (perm, expected)
            )
    behavior = classify_color_behavior(g, perm)
    kind = {"preserving": "bicolored", "reversing": "colorReversing"}.get(
        behavior, "general"
    )
    return Automorphism(perm=perm, kind=kind)

"""Exchange matrices with bipartite structure.

A bigraph is a skew-symmetrizable integer matrix together with a
two-coloring of its vertices and the induced split of its edge set into
an unsigned red part Gamma and blue part Delta.  The sign convention is
fixed once and for all: on a Gamma edge the entry from the white vertex
to the black one is positive, on a Delta edge it is negative.  All the
dynamics modules read (Gamma, Delta, epsilon) through this module and
never re-derive signs themselves.
"""

import hashlib
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from . import dynkin
from .errors import (
    InvalidRank,
    NotAdmissible,
    NotAdmissibleBigraph,
    NotBipartite,
    NotSkewSymmetrizable,
    OrbitAdjacency,
    SearchBoundExceeded,
    UnknownName,
)

WHITE = "w"
BLACK = "b"


def _freeze(rows):
    return tuple(tuple(int(x) for x in row) for row in rows)


def symmetrizer(b):
    """Positive rationals c with c_i b_ij = -c_j b_ji, min normalized to 1."""
    n = len(b)
    for i in range(n):
        if b[i][i] != 0:
            raise NotSkewSymmetrizable("nonzero diagonal at %d" % (i + 1))
        for j in range(n):
            if (b[i][j] == 0) != (b[j][i] == 0):
                raise NotSkewSymmetrizable(
                    "entry (%d,%d) nonzero but its mirror is zero" % (i + 1, j + 1)
                )
            if b[i][j] * b[j][i] > 0:
                raise NotSkewSymmetrizable(
                    "entries (%d,%d) and (%d,%d) have the same sign"
                    % (i + 1, j + 1, j + 1, i + 1)
                )
    c = [None] * n
    for root in range(n):
        if c[root] is not None:
            continue
        c[root] = Fraction(1)
        queue = [root]
        while queue:
            i = queue.pop()
            for j in range(n):
                if b[i][j] == 0:
                    continue
                ratio = c[i] * abs(b[i][j]) / abs(b[j][i])
                if c[j] is None:
                    c[j] = ratio
                    queue.append(j)
                elif c[j] != ratio:
                    raise NotSkewSymmetrizable(
                        "inconsistent ratio cycle through %d-%d" % (i + 1, j + 1)
                    )
    scale = math.lcm(*(x.denominator for x in c))
    whole = [x * scale for x in c]
    shrink = math.gcd(*(int(x) for x in whole))
    return tuple(int(x) // shrink for x in whole)


@dataclass(frozen=True)
class ExchangeMatrix:
    n: int
    b: tuple
    c: tuple

    def row(self, i):
        return self.b[i]


def exchange_matrix(rows):
    b = _freeze(rows)
    return ExchangeMatrix(n=len(b), b=b, c=symmetrizer(b))


def mutate(m, k):
    """Matrix mutation at vertex k (zero-based); symmetrizer is untouched."""
    if not 0 <= k < m.n:
        raise IndexError("vertex %d out of range" % k)
    b = m.b
    out = []
    for i in range(m.n):
        row = []
        for j in range(m.n):
            if i == k or j == k:
                row.append(-b[i][j])
            elif b[i][k] > 0 and b[k][j] > 0:
                row.append(b[i][j] + b[i][k] * b[k][j])
            elif b[i][k] < 0 and b[k][j] < 0:
                row.append(b[i][j] - b[i][k] * b[k][j])
            else:
                row.append(b[i][j])
        out.append(row)
    return ExchangeMatrix(n=m.n, b=_freeze(out), c=m.c)


def composite_mutation(m, vertices):
    """Mutate at each vertex in turn; callers pass pairwise non-adjacent sets."""
    for k in vertices:
        m = mutate(m, k)
    return m


def detect_epsilon(b):
    """Two-color each connected component, lowest vertex white."""
    n = len(b)
    eps = [None] * n
    for root in range(n):
        if eps[root] is not None:
            continue
        eps[root] = WHITE
        queue = [root]
        while queue:
            i = queue.pop()
            want = BLACK if eps[i] == WHITE else WHITE
            for j in range(n):
                if b[i][j] == 0 and b[j][i] == 0:
                    continue
                if eps[j] is None:
                    eps[j] = want
                    queue.append(j)
                elif eps[j] != want:
                    raise NotBipartite("odd cycle through vertex %d" % (j + 1))
    return tuple(eps)


def _validate_epsilon(b, eps):
    n = len(b)
    if len(eps) != n:
        raise NotBipartite("coloring has wrong length")
    for i in range(n):
        for j in range(n):
            if b[i][j] != 0 and eps[i] == eps[j]:
                raise NotBipartite(
                    "edge %d-%d joins two %s vertices" % (i + 1, j + 1, eps[i])
                )


@dataclass(frozen=True)
class Component:
    vertices: tuple
    family: str
    rank: int
    coxeter: int

    @property
    def name(self):
        if self.family is None:
            return "unknown"
        return "%s%d" % (self.family, self.rank)


@dataclass(frozen=True)
class Bigraph:
    base: ExchangeMatrix
    epsilon: tuple
    gamma: tuple
    delta: tuple
    gamma_components: tuple
    delta_components: tuple

    @property
    def n(self):
        return self.base.n

    @property
    def whites(self):
        return [i for i, e in enumerate(self.epsilon) if e == WHITE]

    @property
    def blacks(self):
        return [i for i, e in enumerate(self.epsilon) if e == BLACK]

    def eta(self, k):
        return 0 if self.epsilon[k] == WHITE else 1

    def _shared_coxeter(self, components, label):
        values = {comp.coxeter for comp in components}
        if None in values or len(values) != 1:
            raise NotAdmissibleBigraph(
                "%s components have Coxeter numbers %s"
                % (label, sorted("?" if v is None else v for v in values))
            )
        return values.pop()

    @property
    def h_gamma(self):
        return self._shared_coxeter(self.gamma_components, "Gamma")

    @property
    def h_delta(self):
        return self._shared_coxeter(self.delta_components, "Delta")

    @property
    def half_period(self):
        return self.h_gamma + self.h_delta


def _connected_components(weights):
    n = len(weights)
    seen = [False] * n
    comps = []
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        comp = [root]
        while queue:
            i = queue.pop()
            for j in range(n):
                if not seen[j] and (weights[i][j] or weights[j][i]):
                    seen[j] = True
                    comp.append(j)
                    queue.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _component_data(weights):
    comps = []
    for vertices in _connected_components(weights):
        k = len(vertices)
        cartan = tuple(
            tuple(
                2 if a == b else -weights[vertices[a]][vertices[b]]
                for b in range(k)
            )
            for a in range(k)
        )
        hit = dynkin.recognize(cartan)
        if hit is None:
            comps.append(Component(vertices, None, k, None))
        else:
            family, rank = hit
            comps.append(
                Component(vertices, family, rank, dynkin.coxeter_number(family, rank))
            )
    return tuple(comps)


def decompose(m, epsilon=None):
    """Split m into the unsigned (Gamma, Delta) pair under a two-coloring."""
    b = m.b
    if epsilon is None:
        epsilon = detect_epsilon(b)
    else:
        epsilon = tuple(epsilon)
        _validate_epsilon(b, epsilon)
    n = m.n
    gamma = [[0] * n for _ in range(n)]
    delta = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if b[i][j] == 0:
                continue
            white_to_black = b[i][j] if epsilon[i] == WHITE else b[j][i]
            target = gamma if white_to_black > 0 else delta
            target[i][j] = abs(b[i][j])
    gamma = _freeze(gamma)
    delta = _freeze(delta)
    return Bigraph(
        base=m,
        epsilon=epsilon,
        gamma=gamma,
        delta=delta,
        gamma_components=_component_data(gamma),
        delta_components=_component_data(delta),
    )


def signed_gamma(g):
    """Gamma with the belt signs restored: white rows positive."""
    return _freeze(
        [
            [
                g.gamma[i][j] if g.epsilon[i] == WHITE else -g.gamma[i][j]
                for j in range(g.n)
            ]
            for i in range(g.n)
        ]
    )


def signed_delta(g):
    """Delta with the belt signs restored: white rows negative."""
    return _freeze(
        [
            [
                -g.delta[i][j] if g.epsilon[i] == WHITE else g.delta[i][j]
                for j in range(g.n)
            ]
            for i in range(g.n)
        ]
    )


def is_recurrent(g):
    """True iff mutating all whites, or all blacks, negates the matrix.

    The composite around a full period is the identity exactly when both
    one-color composites negate, so both are checked; one alone is not
    enough in general.
    """
    minus = _freeze([[-x for x in row] for row in g.base.b])
    for color_set in (g.whites, g.blacks):
        if composite_mutation(g.base, color_set).b != minus:
            return False
    return True


def _two_coloring(cartan):
    n = len(cartan)
    color = [None] * n
    for root in range(n):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and color[j] is None:
                    color[j] = 1 - color[i]
                    queue.append(j)
    return color


def tensor_product(family_l, rank_l, family_r, rank_r):
    """Bigraph on the vertex product: Gamma copies the left diagram down
    each column, Delta copies the right diagram along each row."""
    cl = dynkin.cartan_matrix(family_l, rank_l)
    cr = dynkin.cartan_matrix(family_r, rank_r)
    col_l = _two_coloring(cl)
    col_r = _two_coloring(cr)
    n = rank_l * rank_r

    def flat(i, j):
        return j * rank_l + i

    eps = [None] * n
    for i in range(rank_l):
        for j in range(rank_r):
            eps[flat(i, j)] = WHITE if (col_l[i] + col_r[j]) % 2 == 0 else BLACK
    b = [[0] * n for _ in range(n)]
    for j in range(rank_r):
        for i1 in range(rank_l):
            for i2 in range(rank_l):
                if i1 != i2 and cl[i1][i2]:
                    u, v = flat(i1, j), flat(i2, j)
                    weight = -cl[i1][i2]
                    b[u][v] = weight if eps[u] == WHITE else -weight
    for i in range(rank_l):
        for j1 in range(rank_r):
            for j2 in range(rank_r):
                if j1 != j2 and cr[j1][j2]:
                    u, v = flat(i, j1), flat(i, j2)
                    weight = -cr[j1][j2]
                    b[u][v] = -weight if eps[u] == WHITE else weight
    g = decompose(exchange_matrix(b), eps)
    if not is_recurrent(g):
        raise AssertionError("tensor product came out non-recurrent")
    return g


def langlands_dual(m):
    """-B transposed, with the symmetrizer recomputed from scratch."""
    return exchange_matrix(
        [[-m.b[j][i] for j in range(m.n)] for i in range(m.n)]
    )


def dual_bigraph(g):
    """Langlands dual with the same coloring; Gamma/Delta transpose."""
    return decompose(langlands_dual(g.base), g.epsilon)


@dataclass(frozen=True)
class Automorphism:
    perm: tuple
    kind: str

    def __call__(self, i):
        return self.perm[i]

    @property
    def order(self):
        order = 1
        current = self.perm
        identity = tuple(range(len(self.perm)))
        while current != identity:
            current = tuple(self.perm[i] for i in current)
            order += 1
        return order

    @property
    def is_identity(self):
        return self.perm == tuple(range(len(self.perm)))

    def cycles(self):
        """Cycle notation over one-based labels; identity renders as 'id'."""
        n = len(self.perm)
        seen = [False] * n
        out = []
        for start in range(n):
            if seen[start] or self.perm[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.perm[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.perm[nxt]
            out.append("(" + " ".join(str(v + 1) for v in cycle) + ")")
        return "".join(out) if out else "id"


def classify_color_behavior(g, perm):
    flips = [g.epsilon[perm[i]] != g.epsilon[i] for i in range(g.n)]
    if not any(flips):
        return "preserving"
    if all(flips):
        return "reversing"
    return "mixed"


def find_automorphisms(g, kind="all", bound=16):
    """All permutations fixing both unsigned matrices, filtered by kind.

    kind: "all", "colorPreserving", or "colorReversing".  Backtracking
    keeps the search sound for every n, but n is capped to keep runtime
    at desk scale.
    """
    if g.n > bound:
        raise SearchBoundExceeded(
            "automorphism search on %d vertices exceeds bound %d" % (g.n, bound)
        )
    n = g.n
    gamma, delta = g.gamma, g.delta

    def signature(i):
        return (
            sorted((gamma[i][j], gamma[j][i]) for j in range(n)),
            sorted((delta[i][j], delta[j][i]) for j in range(n)),
        )

    sigs = [signature(i) for i in range(n)]
    found = []
    perm = [None] * n
    used = [False] * n

    def place(i):
        if i == n:
            found.append(tuple(perm))
            return
        for t in range(n):
            if used[t] or sigs[i] != sigs[t]:
                continue
            ok = True
            for j in range(i):
                pj = perm[j]
                if (
                    gamma[i][j] != gamma[t][pj]
                    or gamma[j][i] != gamma[pj][t]
                    or delta[i][j] != delta[t][pj]
                    or delta[j][i] != delta[pj][t]
                ):
                    ok = False
                    break
            if ok:
                perm[i] = t
                used[t] = True
                place(i + 1)
                used[t] = False
                perm[i] = None

    place(0)
    out = []
    for p in found:
        behavior = classify_color_behavior(g, p)
        if kind == "colorPreserving" and behavior != "preserving":
            continue
        if kind == "colorReversing" and behavior != "reversing":
            continue
        label = {"preserving": "bicolored", "reversing": "colorReversing"}.get(
            behavior, "general"
        )
        out.append(Automorphism(perm=p, kind=label))
    return out


def orbits_of(perm):
    n = len(perm)
    seen = [False] * n
    orbits = []
    for start in range(n):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            orbit.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        orbits.append(tuple(sorted(orbit)))
    return sorted(orbits)


def check_bicolored(g, perm):
    """Raise NotAdmissible unless perm is a bicolored automorphism of g."""
    b = g.base.b
    n = g.n
    for i in range(n):
        if g.epsilon[perm[i]] != g.epsilon[i]:
            raise NotAdmissible("i", "vertex %d changes color" % (i + 1))
    for i in range(n):
        for j in range(n):
            if b[perm[i]][perm[j]] != b[i][j]:
                raise NotAdmissible(
                    "iii", "entry (%d,%d) not preserved" % (i + 1, j + 1)
                )
    orbits = orbits_of(perm)
    for orbit in orbits:
        for i in orbit:
            for j in orbit:
                if i != j and b[i][j] != 0:
                    raise OrbitAdjacency(
                        "vertices %d and %d share an orbit" % (i + 1, j + 1)
                    )
    for orbit in orbits:
        for j in range(n):
            signs = {b[i][j] for i in orbit if b[i][j]}
            if len({x > 0 for x in signs}) > 1:
                raise NotAdmissible(
                    "ii", "orbit %s hits vertex %d with mixed signs"
                    % (tuple(v + 1 for v in orbit), j + 1)
                )
    return orbits


def fold(g, auto):
    """Quotient by a bicolored automorphism; orbits become vertices."""
    perm = auto.perm if isinstance(auto, Automorphism) else tuple(auto)
    orbits = check_bicolored(g, perm)
    b = g.base.b
    folded = []
    for orbit_i in orbits:
        row = []
        for orbit_j in orbits:
            if orbit_i == orbit_j:
                row.append(0)
                continue
            values = {sum(b[i][j] for i in orbit_i) for j in orbit_j}
            if len(values) != 1:
                raise NotAdmissible(
                    "iii", "folded entry not independent of the column choice"
                )
            row.append(values.pop())
        folded.append(row)
    eps = tuple(g.epsilon[orbit[0]] for orbit in orbits)
    return decompose(exchange_matrix(folded), eps)


# -- catalog ----------------------------------------------------------------

_FIG1_GAMMA_EDGES = ((1, 2), (2, 3), (3, 4), (4, 5), (6, 7), (7, 8), (7, 9))
_FIG1_DELTA_EDGES = ((1, 6), (5, 6), (2, 7), (4, 7), (3, 8), (3, 9))
_FIG1_EPSILON = (BLACK, WHITE, BLACK, WHITE, BLACK, WHITE, BLACK, WHITE, WHITE)

_FIG2_EPSILON = (BLACK, WHITE, BLACK, WHITE, WHITE, BLACK, WHITE, BLACK)


def _figure_one():
    n = 9
    b = [[0] * n for _ in range(n)]
    eps = _FIG1_EPSILON
    for edges, is_gamma in ((_FIG1_GAMMA_EDGES, True), (_FIG1_DELTA_EDGES, False)):
        for u1, v1 in edges:
            u, v = u1 - 1, v1 - 1
            if eps[u] != WHITE:
                u, v = v, u
            sign = 1 if is_gamma else -1
            b[u][v] = sign
            b[v][u] = -sign
    return decompose(exchange_matrix(b), eps)


def _figure_two():
    n = 8
    eps = _FIG2_EPSILON
    f4 = dynkin.cartan_matrix("F", 4)
    b = [[0] * n for _ in range(n)]
    for col in (0, 4):
        for i in range(4):
            for j in range(4):
                if i != j and f4[i][j]:
                    u, v = col + i, col + j
                    weight = -f4[i][j]
                    b[u][v] = weight if eps[u] == WHITE else -weight
    for i in range(4):
        u, v = i, i + 4
        first = -1 if eps[u] == WHITE else 1
        b[u][v] = first
        b[v][u] = -first
    return decompose(exchange_matrix(b), eps)


_NAME_RE = re.compile(r"^([A-G])(\d+)$")
_TENSOR_RE = re.compile(r"^([A-G])(\d+)x([A-G])(\d+)$")


def catalog(name):
    """Bigraph for a catalog name.

    Single Dynkin names are the tensor with a point, so Delta is empty
    and every vertex is its own A1 Delta component.
    """
    if name == "fig1-A5starD4":
        return _figure_one()
    if name == "fig2-F4xA2":
        return _figure_two()
    hit = _TENSOR_RE.match(name)
    if hit:
        fl, rl, fr, rr = hit.groups()
        try:
            return tensor_product(fl, int(rl), fr, int(rr))
        except InvalidRank as exc:
            raise UnknownName("%s: %s" % (name, exc)) from exc
    hit = _NAME_RE.match(name)
    if hit:
        family, rank = hit.groups()
        try:
            return tensor_product(family, int(rank), "A", 1)
        except InvalidRank as exc:
            raise UnknownName("%s: %s" % (name, exc)) from exc
    raise UnknownName(
        "%r is not a catalog name; try one of %s or a tensor like A2xA3"
        % (name, ", ".join(catalog_names()))
    )


def catalog_names():
    """The names exercised by the test sweeps; catalog() accepts more."""
    return [
        "A1", "A2", "A3", "A4", "A5",
        "B2", "B3", "C2", "C3", "D4", "G2",
        "A2xA2", "A2xA3", "B2xB2", "G2xG2",
        "fig1-A5starD4", "fig2-F4xA2",
    ]


def catalog_version():
    """Short hash pinning the figure entries and the Coxeter table."""
    payload = {
        "fig1": {
            "gamma": _FIG1_GAMMA_EDGES,
            "delta": _FIG1_DELTA_EDGES,
            "epsilon": _FIG1_EPSILON,
        },
        "fig2": {
            "b": _figure_two().base.b,
            "epsilon": _FIG2_EPSILON,
        },
        "coxeter": {
            "A": "n+1", "B": "2n", "C": "2n", "D": "2n-2",
            "E6": 12, "E7": 18, "E8": 30, "F4": 12, "G2": 6,
        },
    }
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def from_json(doc):
    """Bigraph from {"n": int, "b": rows, "epsilon": optional colors}."""
    if not isinstance(doc, dict) or "n" not in doc or "b" not in doc:
        raise NotBipartite("input document needs keys 'n' and 'b'")
    n = doc["n"]
    b = doc["b"]
    if len(b) != n or any(len(row) != n for row in b):
        raise NotBipartite("matrix shape does not match n=%s" % n)
    eps = doc.get("epsilon")
    if eps is not None:
        if any(x not in (WHITE, BLACK) for x in eps):
            raise NotBipartite("epsilon entries must be 'w' or 'b'")
        eps = tuple(eps)
    return decompose(exchange_matrix(b), eps)


def load_bigraph(path):
    with open(path) as handle:
        return from_json(json.load(handle))

"""Cartan data for the six affine families with level-1 wall models.

Families are named by compact tags: A1 = A_n^(1), A2odd = A_{2n-1}^(2),
D1 = D_n^(1), A2even = A_{2n}^(2), D2 = D_{n+1}^(2), B1 = B_n^(1).
The index set is always I = {0, ..., n}. Everything here is static
bookkeeping: generalized Cartan matrices, symmetrizers s_i (so that
q_i = q^{s_i}), null root coefficients d_i, per-column block counts
a_i, the volume of one delta-column, and the ladder step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

FAMILIES = ("A1", "A2odd", "D1", "A2even", "D2", "B1")

_RANK_MIN = {"A1": 1, "A2odd": 3, "D1": 4, "A2even": 1, "D2": 2, "B1": 3}


@dataclass(frozen=True)
class AlgebraTag:
    """One of the six families together with its rank parameter n."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))
        if self.n < _RANK_MIN[self.family]:
            raise ValueError(
                "family %s needs n >= %d, got %d"
                % (self.family, _RANK_MIN[self.family], self.n)
            )

    def __str__(self):
        return "%s:%d" % (self.family, self.n)

    @classmethod
    def parse(cls, text):
        """Parse 'B1:3' style tags (the CLI format)."""
        try:
            family, _, rank = text.partition(":")
            return cls(family, int(rank))
        except ValueError as exc:
            raise ValueError("bad algebra tag %r (want e.g. B1:3)" % (text,)) from exc


@dataclass(frozen=True)
class CartanData:
    """Static data attached to one AlgebraTag.

    cartan_matrix rows are indexed by I, as are s (symmetrizers),
    d (null root: delta = sum d_i alpha_i) and a (number of i-blocks
    in one delta-column; equals d except for D2 where it doubles).
    delta_volume is the block volume of one delta-column and
    ladder_step the level offset between adjacent columns of a ladder.
    """

    tag: AlgebraTag
    cartan_matrix: tuple
    s: tuple
    d: tuple
    a: tuple
    delta_volume: int
    ladder_step: int
    supported_weights: tuple = field(default=())

    @property
    def index_set(self):
        return range(self.tag.n + 1)

    def validate(self):
        """Check the structural axioms; used by tests, cheap but thorough."""
        A, n = self.cartan_matrix, self.tag.n
        assert len(A) == n + 1 and all(len(row) == n + 1 for row in A)
        for i in self.index_set:
            assert A[i][i] == 2
            for j in self.index_set:
                if i != j:
                    assert A[i][j] <= 0
                    assert (A[i][j] == 0) == (A[j][i] == 0)
                assert self.s[i] * A[i][j] == self.s[j] * A[j][i]
            # d spans the kernel of the transposed action: sum_j A_ij d_j = 0
            assert sum(A[i][j] * self.d[j] for j in self.index_set) == 0
        factor = 2 if self.tag.family == "D2" else 1
        assert self.a == tuple(factor * di for di in self.d)
        if self.tag.family == "A1":
            assert self.ladder_step == self.delta_volume - 1
        else:
            assert self.ladder_step == self.delta_volume
        return True


def _chain_matrix(n, special=None):
    """GCM of a path 0-1-...-n, then apply {(i, j): value} overrides."""
    A = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n + 1)]
         for i in range(n + 1)]
    for (i, j), v in (special or {}).items():
        A[i][j] = v
    return tuple(tuple(row) for row in A)


def _fork_matrix(n, special=None):
    """GCM with 0 and 1 both attached to 2, then a path 2-3-...-n."""
    A = [[2 if i == j else 0 for j in range(n + 1)] for i in range(n + 1)]
    A[0][2] = A[2][0] = A[1][2] = A[2][1] = -1
    for i in range(2, n):
        A[i][i + 1] = A[i + 1][i] = -1
    for (i, j), v in (special or {}).items():
        A[i][j] = v
    return tuple(tuple(row) for row in A)


def cartan_data(tag):
    """Populate CartanData for the given tag.

    Rank bounds are enforced by AlgebraTag itself; strings are accepted
    for convenience and parsed first.
    """
    if isinstance(tag, str):
        tag = AlgebraTag.parse(tag)
    n = tag.n
    fam = tag.family

    if fam == "A1":
        if n == 1:
            A = ((2, -2), (-2, 2))
            s = d = (1, 1)
            delta, step = 1, 0
        else:
            A = tuple(
                tuple(
                    2 if i == j else (-1 if (i - j) % (n + 1) in (1, n) else 0)
                    for j in range(n + 1)
                )
                for i in range(n + 1)
            )
            s = d = (1,) * (n + 1)
            delta, step = n + 1, n
        a = d
        weights = tuple(range(n + 1))

    elif fam == "A2odd":
        A = _fork_matrix(n, {(n - 1, n): -2})
        s = (1,) * n + (2,)
        d = a = (1, 1) + (2,) * (n - 2) + (1,)
        delta = step = 2 * n - 2
        weights = (0, 1)

    elif fam == "D1":
        A = _fork_matrix(n, {(n - 2, n): -1, (n, n - 2): -1,
                             (n - 1, n): 0, (n, n - 1): 0})
        s = (1,) * (n + 1)
        d = a = (1, 1) + (2,) * (n - 3) + (1, 1)
        delta = step = 2 * n - 4
        weights = (0, 1, n - 1, n)

    elif fam == "A2even":
        if n == 1:
            A = ((2, -4), (-1, 2))
            s = (1, 4)
        else:
            A = _chain_matrix(n, {(0, 1): -2, (n - 1, n): -2})
            s = (1,) + (2,) * (n - 1) + (4,)
        d = a = (2,) * n + (1,)
        delta = step = 2 * n
        weights = (0,)

    elif fam == "D2":
        A = _chain_matrix(n, {(0, 1): -2, (n, n - 1): -2})
        s = (1,) + (2,) * (n - 1) + (1,)
        d = (1,) * (n + 1)
        a = (2,) * (n + 1)
        delta = step = 2 * n
        weights = (0, n)

    else:  # B1
        A = _fork_matrix(n, {(n, n - 1): -2})
        s = (2,) * n + (1,)
        d = a = (1, 1) + (2,) * (n - 2) + (2,)
        delta = step = 2 * n - 2
        weights = (0, 1, n)

    return CartanData(tag, A, tuple(s), tuple(d), tuple(a), delta, step, weights)


@dataclass(frozen=True)
class Weight:
    """A weight Lambda - sum_i k_i alpha_i of the level-1 module."""

    lambda_index: int
    k: tuple

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(self.k))


def pairing(w, i, data):
    """Evaluate <h_i, wt> = delta_{i,Lambda} - sum_j k_j a_ij."""
    A = data.cartan_matrix
    base = 1 if i == w.lambda_index else 0
    return base - sum(A[i][j] * kj for j, kj in enumerate(w.k))


def delta_multiple(w, data):
    """Return m when the weight equals Lambda - m*delta, else None."""
    d = data.d
    if all(kj == 0 for kj in w.k):
        return 0
    m, rem = divmod(w.k[0], d[0])
    if rem:
        return None
    if all(w.k[j] == m * d[j] for j in data.index_set):
        return m
    return None

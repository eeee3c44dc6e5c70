"""Linear codes, linear maps between them, and their weight statistics.

A linear map phi : V -> W is described by a generator matrix B of V (rows
v_1..v_k) and the matrix C whose i-th row is phi(v_i).  The projective
point x in PG(k-1, q) stands for the codeword x^T B, so the weight change
at x is w(x^T B) - w(x^T C).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .errors import LengthMismatch, RankDeficient
from .gf import FieldSpec
from .projgeom import DEFAULT_POINT_CAP, build_incidence, canonicalize, field_products

Matrix = Tuple[Tuple[int, ...], ...]


def _as_matrix(f: FieldSpec, rows: Sequence[Sequence[int]]) -> Matrix:
    out = tuple(tuple(int(a) for a in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise LengthMismatch("matrix rows have different lengths")
    for r in out:
        for a in r:
            f.check(a)
    return out


def _columns(rows: Matrix) -> List[Tuple[int, ...]]:
    if not rows:
        return []
    return list(zip(*rows))


def hamming_weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a)


def rank(f: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    """Rank over F_q by Gaussian elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        s = f.inv(work[r][c])
        work[r] = [f.mul(s, a) for a in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                t = work[i][c]
                work[i] = [f.sub(a, f.mul(t, b)) for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


@dataclass(frozen=True)
class GeneratorMatrix:
    """Basis rows of a k-dimensional code in F_q^n."""

    field: FieldSpec
    rows: Matrix

    def __post_init__(self):
        object.__setattr__(self, "rows", _as_matrix(self.field, self.rows))
        if not self.rows:
            raise RankDeficient("a generator matrix needs at least one row")
        r = rank(self.field, self.rows)
        if r != len(self.rows):
            raise RankDeficient(f"rank {r} < {len(self.rows)} rows")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])


@dataclass(frozen=True)
class LinearMapSpec:
    """phi given on a basis: row i of ``image`` is phi(domain.rows[i])."""

    domain: GeneratorMatrix
    image: Matrix

    def __post_init__(self):
        img = _as_matrix(self.domain.field, self.image)
        if len(img) != self.domain.k:
            raise LengthMismatch(f"image has {len(img)} rows, domain has {self.domain.k}")
        object.__setattr__(self, "image", img)

    @property
    def field(self) -> FieldSpec:
        return self.domain.field

    @property
    def k(self) -> int:
        return self.domain.k


@dataclass(frozen=True)
class MultiplicityVector:
    counts: Tuple[int, ...]
    zero_cols: int = 0

    @property
    def n_columns(self) -> int:
        return sum(self.counts) + self.zero_cols


def multiplicities(f: FieldSpec, rows: Sequence[Sequence[int]], cap: int = DEFAULT_POINT_CAP) -> MultiplicityVector:
    """Count the columns of a k-row matrix in each projective class."""
    rows = _as_matrix(f, rows)
    system = build_incidence(f, len(rows), cap)
    counts = [0] * system.n_points
    zero = 0
    for col in _columns(rows):
        p = canonicalize(f, col)
        if p is None:
            zero += 1
        else:
            counts[system.index[p]] += 1
    return MultiplicityVector(tuple(counts), zero)


def codeword_weights(f: FieldSpec, rows: Matrix, cap: int = DEFAULT_POINT_CAP) -> np.ndarray:
    """w(x^T A) for every projective point x, in point order (no use of M)."""
    k = len(rows)
    system = build_incidence(f, k, cap)
    pts = np.array(system.points, dtype=np.int64).reshape(system.n_points, k)
    if not rows or not rows[0]:
        return np.zeros(system.n_points, dtype=np.int64)
    words = field_products(f, pts, np.array(rows, dtype=np.int64))
    return (words != 0).sum(axis=1).astype(np.int64)


def projective_weights(g: GeneratorMatrix) -> Tuple[int, ...]:
    """Point-indexed projective weight distribution of the code spanned by g."""
    return tuple(int(w) for w in codeword_weights(g.field, g.rows))


def weight_change_vector(phi: LinearMapSpec) -> Tuple[int, ...]:
    """w(x^T B) - w(x^T C) for each projective point x, in point order."""
    before = codeword_weights(phi.field, phi.domain.rows)
    after = codeword_weights(phi.field, phi.image)
    return tuple(int(d) for d in before - after)


def weight_changes(phi: LinearMapSpec) -> Tuple[int, ...]:
    """The projective multiset of weight changes, sorted ascending."""
    return tuple(sorted(weight_change_vector(phi)))


def is_projection(phi: LinearMapSpec) -> bool:
    """No projective class gains columns under phi (Q <= R)."""
    r = multiplicities(phi.field, phi.domain.rows).counts
    qv = multiplicities(phi.field, phi.image).counts
    return all(b <= a for a, b in zip(r, qv))


def _scalar_multiple(f: FieldSpec, c: Sequence[int], b: Sequence[int]) -> bool:
    """True when c = alpha * b for some nonzero alpha."""
    return any(all(f.mul(alpha, y) == x for x, y in zip(c, b)) for alpha in range(1, f.q))


def is_projection_by_matching(phi: LinearMapSpec) -> bool:
    """Shape check: every nonzero image column is a nonzero multiple of a
    distinct domain column.

    Scalar-multiple classes are disjoint, so greedy matching is exact.
    """
    f = phi.field
    free = list(_columns(phi.domain.rows))
    for c in _columns(phi.image):
        if not any(c):
            continue
        for i, b in enumerate(free):
            if b is not None and _scalar_multiple(f, c, b):
                free[i] = None
                break
        else:
            return False
    return True


def is_monomial(f: FieldSpec, a: Sequence[Sequence[int]]) -> bool:
    """Square matrix with exactly one nonzero entry in every row and column."""
    a = [list(r) for r in a]
    n = len(a)
    if any(len(r) != n for r in a):
        return False
    return all(hamming_weight(r) == 1 for r in a) and all(hamming_weight(c) == 1 for c in zip(*a))


def matmul(f: FieldSpec, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    """Matrix product over F_q."""
    if not a:
        return ()
    res = field_products(f, np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
    return tuple(tuple(int(x) for x in row) for row in res)

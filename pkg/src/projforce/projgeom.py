"""Points of PG(k-1, q), the simplex code, and the incidence matrix M_{k,q}.

Points are canonical representatives (first nonzero coordinate equal to 1)
listed in lexicographic order of their integer-encoded coordinates.  That
single ordering indexes both rows and columns of ``M`` everywhere in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import LengthMismatch, Overflow
from .gf import FieldSpec

DEFAULT_POINT_CAP = 10_000

Point = Tuple[int, ...]


def num_points(q: int, k: int) -> int:
    """(q^k - 1) / (q - 1)."""
    return (q**k - 1) // (q - 1)


def canonicalize(f: FieldSpec, v: Sequence[int]) -> Optional[Point]:
    """Scale v so its first nonzero entry is 1; None for the zero vector."""
    for a in v:
        if a:
            s = f.inv(a)
            return tuple(f.mul(s, x) for x in v)
    return None


def enumerate_points(f: FieldSpec, k: int, cap: int = DEFAULT_POINT_CAP) -> List[Point]:
    if k < 1:
        raise ValueError("k must be >= 1")
    n = num_points(f.q, k)
    if n > cap:
        raise Overflow(f"PG({k - 1},{f.q}) has {n} points, cap is {cap}")
    return [v for v in product(range(f.q), repeat=k) if _is_canonical(v)]


def _is_canonical(v: Point) -> bool:
    for a in v:
        if a:
            return a == 1
    return False


def field_products(f: FieldSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """All pairwise dot products of the rows of x with the columns of y over F_q.

    ``x`` is (a, k), ``y`` is (k, b); result is (a, b) of encoded elements.
    """
    addt = np.asarray(f.add_table, dtype=np.int64)
    mult = np.asarray(f.mul_table, dtype=np.int64)
    out = np.zeros((x.shape[0], y.shape[1]), dtype=np.int64)
    for t in range(x.shape[1]):
        out = addt[out, mult[x[:, t][:, None], y[t, :][None, :]]]
    return out


def simplex_codewords(f: FieldSpec, k: int, cap: int = DEFAULT_POINT_CAP) -> List[Tuple[int, ...]]:
    """One codeword of the simplex code per projective point, in point order.

    Codeword for point p is (p . x_j)_j over all points x_j, i.e. p^T G_{k,q}.
    """
    pts = np.array(enumerate_points(f, k, cap), dtype=np.int64)
    return [tuple(int(a) for a in row) for row in field_products(f, pts, pts.T)]


def generator_matrix(f: FieldSpec, k: int, cap: int = DEFAULT_POINT_CAP) -> List[Tuple[int, ...]]:
    """G_{k,q}: k rows, one column per projective point."""
    pts = enumerate_points(f, k, cap)
    return [tuple(p[i] for p in pts) for i in range(k)]


@dataclass(frozen=True)
class IncidenceSystem:
    """M_{k,q} together with the data needed to apply its inverse exactly.

    ``m[i, j]`` is 0 when point i is orthogonal to point j and 1 otherwise.
    """

    field: FieldSpec
    k: int
    points: Tuple[Point, ...]
    m: np.ndarray

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def row_weight(self) -> int:
        return self.field.q ** (self.k - 1)

    @property
    def denominator(self) -> int:
        return self.field.q ** (self.k - 1)

    @cached_property
    def index(self) -> Dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def row_supports(self) -> Tuple[Tuple[int, ...], ...]:
        """For each row j, the columns i with m[j, i] = 1."""
        return tuple(tuple(int(i) for i in np.flatnonzero(row)) for row in self.m)

    @cached_property
    def col_supports(self) -> Tuple[Tuple[int, ...], ...]:
        """For each column i, the rows j with m[j, i] = 1."""
        return tuple(tuple(int(j) for j in np.flatnonzero(col)) for col in self.m.T)

    def inverse_numerators(self) -> np.ndarray:
        """The integer matrix q M^T - (q-1) J; divide by ``denominator`` for M^{-1}."""
        q = self.field.q
        return q * self.m.T.astype(np.int64) - (q - 1)

    def apply(self, v: Sequence[int]) -> np.ndarray:
        """M v."""
        v = self._vector(v)
        return self.m.astype(np.int64) @ v

    def apply_inverse(self, v: Sequence[int]) -> Tuple[np.ndarray, int]:
        return apply_inverse(self, v)

    def _vector(self, v: Sequence[int]) -> np.ndarray:
        arr = np.asarray(v, dtype=np.int64)
        if arr.shape != (self.n_points,):
            raise LengthMismatch(f"expected a vector of length {self.n_points}, got shape {arr.shape}")
        return arr


@lru_cache(maxsize=64)
def build_incidence(f: FieldSpec, k: int, cap: int = DEFAULT_POINT_CAP) -> IncidenceSystem:
    pts = enumerate_points(f, k, cap)
    arr = np.array(pts, dtype=np.int64).reshape(len(pts), k)
    m = (field_products(f, arr, arr.T) != 0).astype(np.int8)
    m.setflags(write=False)
    return IncidenceSystem(f, k, tuple(pts), m)


def apply_inverse(system: IncidenceSystem, v: Sequence[int]) -> Tuple[np.ndarray, int]:
    """Exact M^{-1} v as (integer numerators, common denominator q^{k-1}).

    Uses the closed form M^{-1} = (q M^T - (q-1) J) / q^{k-1}.
    """
    v = system._vector(v)
    q = system.q
    numerators = q * (v @ system.m.astype(np.int64)) - (q - 1) * int(v.sum())
    return numerators, system.denominator

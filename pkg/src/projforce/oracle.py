"""Reference checks that share no search code with ``forcing.decide``.

* ``decide_bruteforce`` walks every distinct permutation of S, inverting M
  by exact rational Gauss-Jordan elimination instead of the closed form.
* ``ab_characterization`` / ``abc_characterization`` are the closed-form
  answers for binary multisets that are constant up to one or two values.
* ``exhaustive_map_check`` enumerates small linear maps directly and reads
  off their weight changes from Hamming weights.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from itertools import permutations, product
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .codes import GeneratorMatrix, LinearMapSpec, codeword_weights, is_projection, rank
from .errors import TooLarge
from .forcing import (
    DifferenceVector,
    ForcingVerdict,
    Reason,
    Status,
    Witness,
    check_size,
    make_witness,
    split_difference,
    split_threshold,
)
from .gf import FieldSpec, field_new
from .projgeom import build_incidence

BRUTEFORCE_MAX_POINTS = 7


def _gauss_jordan_inverse(m: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[pivot] = a[pivot], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                t = a[r][c]
                a[r] = [x - t * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@lru_cache(maxsize=None)
def scaled_inverse_by_elimination(q: int, k: int) -> Tuple[np.ndarray, int]:
    """(L * M^{-1}, L) with L the least common denominator, via elimination."""
    m = build_incidence(field_new(q), k).m.tolist()
    inv = _gauss_jordan_inverse(m)
    den = reduce(lcm, (x.denominator for row in inv for x in row), 1)
    scaled = np.array([[int(x * den) for x in row] for row in inv], dtype=np.int64)
    return scaled, den


def decide_bruteforce(f: FieldSpec, k: int, s: Sequence[int]) -> ForcingVerdict:
    """Theorem-style decision by literal enumeration of every arrangement."""
    s = check_size(f, k, s)
    if len(s) > BRUTEFORCE_MAX_POINTS:
        raise TooLarge(f"brute force is limited to {BRUTEFORCE_MAX_POINTS} points")
    inv, den = scaled_inverse_by_elimination(f.q, k)
    arrangements = np.array(sorted(set(permutations(s))), dtype=np.int64)
    nums = arrangements @ inv.T
    integral = (nums % den == 0).all(axis=1)
    negative = (nums < 0).any(axis=1)
    delta, threshold = split_difference(f, k, s), split_threshold(f, k)
    hits = np.flatnonzero(integral & negative)
    if hits.size:
        pi = tuple(int(x) for x in arrangements[hits[0]])
        return ForcingVerdict(Status.NOT_FORCING, Reason.EXHAUSTIVE_SEARCH, delta, threshold,
                              make_witness(f, k, pi))
    if integral.any():
        return ForcingVerdict(Status.FORCING, Reason.EXHAUSTIVE_SEARCH, delta, threshold)
    return ForcingVerdict(Status.FORCING_VACUOUS, Reason.NOT_REALIZABLE, delta, threshold)


def ab_characterization(k: int, a: int, b: int) -> Tuple[bool, Optional[bool]]:
    """2^k - 2 copies of a and one b over F_2: (realizable, forcing or None)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    ok = a % 2 ** (k - 2) == 0 and b % 2 ** (k - 1) == 0
    if not ok:
        return False, None
    return True, b <= 2 * a


def abc_characterization(k: int, a: int, b: int, c: int) -> Tuple[bool, Optional[bool]]:
    """2^k - 3 copies of a and one each of b, c over F_2.

    The forcing answer is only defined for k >= 3 (None otherwise).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    half, full = 2 ** (k - 2), 2 ** (k - 1)
    if any(x % half for x in (a, b, c)):
        return False, None
    if sum(1 for x in (a, b, c) if x % full == 0) not in (1, 3):
        return False, None
    if k < 3:
        return True, None
    triangle = a <= b + c and b <= a + c and c <= a + b
    return True, triangle and 3 * a - b - c >= 0


def ab_multiset(k: int, a: int, b: int) -> Tuple[int, ...]:
    return tuple(sorted([a] * (2**k - 2) + [b]))


def abc_multiset(k: int, a: int, b: int, c: int) -> Tuple[int, ...]:
    return tuple(sorted([a] * (2**k - 3) + [b, c]))


def _compositions(n_parts: int, total_max: int):
    for combo in product(range(total_max + 1), repeat=n_parts):
        if sum(combo) <= total_max:
            yield combo


def _matrix_from_counts(points, counts, k: int) -> Tuple[Tuple[int, ...], ...]:
    cols = [p for p, c in zip(points, counts) for _ in range(c)]
    if not cols:
        return tuple(() for _ in range(k))
    return tuple(zip(*cols))


@lru_cache(maxsize=None)
def _map_table(q: int, k: int, max_cols: int) -> Dict[Tuple[int, ...], Tuple[tuple, Optional[tuple]]]:
    """sorted weight changes -> (some realizing (R, Q), some non-projection (R, Q) or None)."""
    f = field_new(q)
    system = build_incidence(f, k)
    points = system.points
    all_counts = list(_compositions(system.n_points, max_cols))
    weights = {}
    for counts in all_counts:
        rows = _matrix_from_counts(points, counts, k)
        weights[counts] = codeword_weights(f, rows)
    domains = []
    for r in all_counts:
        rows = _matrix_from_counts(points, r, k)
        if rows[0] and _spans(f, rows):
            domains.append(r)
    table: Dict[Tuple[int, ...], Tuple[tuple, Optional[tuple]]] = {}
    for r in domains:
        for qv in all_counts:
            changes = tuple(sorted(int(x) for x in weights[r] - weights[qv]))
            projection = all(b <= a for a, b in zip(r, qv))
            first, bad = table.get(changes, ((r, qv), None))
            if bad is None and not projection:
                bad = (r, qv)
            table[changes] = (first, bad)
    return table


def _spans(f: FieldSpec, rows) -> bool:
    return rank(f, rows) == len(rows)


def exhaustive_map_check(f: FieldSpec, k: int, s: Sequence[int], max_cols: int = 8) -> ForcingVerdict:
    """Search all maps with at most ``max_cols`` domain and image columns.

    Returns NotForcing with a witness as soon as a non-projection realizing
    S exists within the bound; otherwise Forcing if some map realizes S,
    ForcingVacuous if none within the bound does.
    """
    if f.q != 2 or k != 2 or max_cols > 8:
        raise TooLarge("exhaustive map check supports q=2, k=2, max_cols <= 8")
    s = check_size(f, k, s)
    delta, threshold = split_difference(f, k, s), split_threshold(f, k)
    entry = _map_table(f.q, k, max_cols).get(s)
    if entry is None:
        return ForcingVerdict(Status.FORCING_VACUOUS, Reason.NOT_REALIZABLE, delta, threshold)
    _, bad = entry
    if bad is None:
        return ForcingVerdict(Status.FORCING, Reason.EXHAUSTIVE_SEARCH, delta, threshold)
    r, qv = bad
    system = build_incidence(f, k)
    phi = LinearMapSpec(GeneratorMatrix(f, _matrix_from_counts(system.points, r, k)),
                        _matrix_from_counts(system.points, qv, k))
    assert not is_projection(phi)
    d = tuple(a - b for a, b in zip(r, qv))
    dv = DifferenceVector(f.q, k, d, tuple(int(x) for x in system.apply(d)))
    witness = Witness(phi, s, dv)
    assert witness.verify()
    return ForcingVerdict(Status.NOT_FORCING, Reason.EXHAUSTIVE_SEARCH, delta, threshold, witness)

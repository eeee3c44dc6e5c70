"""Deciding whether a multiset of weight changes is projection-forcing.

For an arrangement pi of S over the projective points, M^{-1} pi is the
vector of multiplicity differences R - Q of some linear map exactly when
it is integral.  S fails to be projection-forcing iff some arrangement
gives an integral vector with a negative entry.  The search below walks
distinct arrangements depth-first, assigning positions in point order and
values in ascending order, and works on numerators scaled by q^{k-1}.

Pruning:
  * a coordinate of M^{-1} pi is fixed once every position in its column
    support is assigned; a non-integral fixed coordinate kills the branch;
  * once some integral arrangement is known (S is realizable), branches
    where no coordinate can still become negative are dropped;
  * PG(k-1, q) has a point-transitive collineation group preserving M, so
    position 0 always receives the minimum of S.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .codes import (
    GeneratorMatrix,
    LinearMapSpec,
    is_projection,
    is_projection_by_matching,
    weight_change_vector,
)
from .errors import BudgetExhausted, NonIntegral, SizeMismatch
from .gf import FieldSpec, field_new
from .projgeom import IncidenceSystem, apply_inverse, build_incidence, num_points

DEFAULT_MAX_NODES = 10**9


class Status(str, enum.Enum):
    FORCING = "Forcing"
    NOT_FORCING = "NotForcing"
    FORCING_VACUOUS = "ForcingVacuous"


class Reason(str, enum.Enum):
    SPLIT_DIFFERENCE = "SplitDifference"
    EXHAUSTIVE_SEARCH = "ExhaustiveSearch"
    NOT_REALIZABLE = "NotRealizable"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    pruned_integrality: int = 0
    pruned_bound: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.pruned_integrality += other.pruned_integrality
        self.pruned_bound += other.pruned_bound

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DifferenceVector:
    """D = R - Q with M D equal to the arrangement ``pi``."""

    q: int
    k: int
    d: Tuple[int, ...]
    pi: Tuple[int, ...]

    def __post_init__(self):
        system = build_incidence(field_new(self.q), self.k)
        if tuple(int(x) for x in system.apply(self.d)) != tuple(self.pi):
            raise ValueError("M d does not reproduce the arrangement")


@dataclass(frozen=True)
class Witness:
    """A non-projection realizing S, recomputed rather than trusted."""

    map: LinearMapSpec
    claimed_changes: Tuple[int, ...]
    d: DifferenceVector

    def verify(self) -> bool:
        changes = tuple(sorted(weight_change_vector(self.map)))
        return (
            changes == self.claimed_changes
            and not is_projection(self.map)
            and not is_projection_by_matching(self.map)
        )

    def to_dict(self) -> dict:
        return {
            "arrangement": list(self.d.pi),
            "changes": list(self.claimed_changes),
            "d": list(self.d.d),
            "domain": [list(r) for r in self.map.domain.rows],
            "image": [list(r) for r in self.map.image],
        }


@dataclass
class ForcingVerdict:
    status: Status
    reason: Reason
    delta: int
    delta_threshold: int
    witness: Optional[Witness] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def is_forcing(self) -> bool:
        return self.status is not Status.NOT_FORCING

    def to_dict(self) -> dict:
        out = {
            "delta": self.delta,
            "delta_threshold": self.delta_threshold,
            "reason": self.reason.value,
            "stats": self.stats.to_dict(),
            "status": self.status.value,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def check_size(f: FieldSpec, k: int, s: Sequence[int]) -> Tuple[int, ...]:
    """Validate |S| = (q^k - 1)/(q - 1) and return S sorted."""
    n = num_points(f.q, k)
    if len(s) != n:
        raise SizeMismatch(f"multiset has {len(s)} elements, q={f.q}, k={k} needs {n}")
    return tuple(sorted(int(x) for x in s))


def split_difference(f: FieldSpec, k: int, s: Sequence[int]) -> int:
    s = check_size(f, k, s)
    h = f.q ** (k - 1)
    return sum(s[:h]) - (f.q - 1) * sum(s[h:])


def split_threshold(f: FieldSpec, k: int) -> int:
    """Split differences strictly above this value certify forcing."""
    return -(f.q ** (k - 1))


def split_difference_forcing(f: FieldSpec, k: int, s: Sequence[int]) -> bool:
    return split_difference(f, k, s) > split_threshold(f, k)


def min_entry_bound(f: FieldSpec, k: int, s: Sequence[int]) -> Tuple[int, int]:
    """Smallest entry of M^{-1} pi over all arrangements pi, as (num, den)."""
    return split_difference(f, k, s), f.q ** (k - 1)


class _Search:
    """Depth-first walk over the distinct arrangements of a multiset.

    ``run`` yields (arrangement, numerators) for every integral leaf that
    survives pruning.  The caller may flip ``require_negative`` at any time
    to enable the negativity bound.
    """

    def __init__(self, system: IncidenceSystem, values: Sequence[int], budget: SearchBudget,
                 symmetry: bool = True, first_choice: Optional[int] = None):
        self.system = system
        self.budget = budget
        self.symmetry = symmetry
        self.first_choice = first_choice
        self.require_negative = False
        self.stats = SearchStats()

        n = system.n_points
        vals = sorted(values)
        self.distinct = sorted(set(vals))
        self.counts = [vals.count(v) for v in self.distinct]
        self.q = system.q
        self.den = system.denominator
        self.offset = (self.q - 1) * sum(vals)
        self.row_supports = system.row_supports
        cols = system.col_supports
        self.closes: List[List[int]] = [[] for _ in range(n)]
        for i, sup in enumerate(cols):
            self.closes[max(sup)].append(i)
        self._open_count = None
        self.n = n

    @property
    def open_count(self) -> np.ndarray:
        # open_count[depth, i]: positions >= depth in the support of column i
        if self._open_count is None:
            m = self.system.m.astype(np.int64)
            tail = np.cumsum(m[::-1], axis=0)[::-1]
            self._open_count = np.vstack([tail, np.zeros((1, self.n), dtype=np.int64)])
        return self._open_count

    def _can_go_negative(self, depth: int, partial: List[int]) -> bool:
        remaining = []
        for v, c in zip(self.distinct, self.counts):
            remaining.extend([v] * c)
        prefix = np.concatenate(([0], np.cumsum(remaining, dtype=np.int64)))
        low = np.asarray(partial, dtype=np.int64) + prefix[self.open_count[depth]]
        return bool((self.q * low - self.offset < 0).any())

    def run(self) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        n = self.n
        q, den, offset = self.q, self.den, self.offset
        distinct, counts = self.distinct, self.counts
        partial = [0] * n
        choice = [-1] * n
        max_nodes = self.budget.max_nodes
        stats = self.stats
        depth = 0
        while depth >= 0:
            vi = choice[depth]
            if vi >= 0:
                counts[vi] += 1
                v = distinct[vi]
                for i in self.row_supports[depth]:
                    partial[i] -= v
            # next value index to try at this depth
            if depth == 0 and self.symmetry:
                nxt = 0 if vi < 0 else len(distinct)
            elif depth == 1 and self.first_choice is not None:
                nxt = self.first_choice if vi < 0 else len(distinct)
                if nxt < len(distinct) and counts[nxt] == 0:
                    nxt = len(distinct)
            else:
                nxt = vi + 1
                while nxt < len(distinct) and counts[nxt] == 0:
                    nxt += 1
            if nxt >= len(distinct):
                choice[depth] = -1
                depth -= 1
                continue
            choice[depth] = nxt
            counts[nxt] -= 1
            v = distinct[nxt]
            for i in self.row_supports[depth]:
                partial[i] += v
            stats.nodes += 1
            if stats.nodes > max_nodes:
                raise BudgetExhausted(f"search exceeded {max_nodes} nodes", stats)
            if any((q * partial[i] - offset) % den for i in self.closes[depth]):
                stats.pruned_integrality += 1
                continue
            if self.require_negative and not self._can_go_negative(depth + 1, partial):
                stats.pruned_bound += 1
                continue
            if depth == n - 1:
                stats.leaves += 1
                arrangement = tuple(distinct[c] for c in choice)
                numerators = tuple(q * t - offset for t in partial)
                yield arrangement, numerators
                continue
            depth += 1


def _search_negative(system: IncidenceSystem, s: Sequence[int], budget: SearchBudget,
                     first_choice: Optional[int] = None):
    """Returns (realizable, first negative arrangement or None, stats)."""
    search = _Search(system, s, budget, first_choice=first_choice)
    realizable = False
    found = None
    for arrangement, numerators in search.run():
        realizable = True
        if any(x < 0 for x in numerators):
            found = arrangement
            break
        search.require_negative = True
    return realizable, found, search.stats


def _branch_worker(args):
    q, k, s, max_nodes, first_choice = args
    system = build_incidence(field_new(q), k)
    return _search_negative(system, s, SearchBudget(max_nodes), first_choice)


def construct_map(f: FieldSpec, k: int, d: Sequence[int]) -> LinearMapSpec:
    """A linear map whose multiplicity differences are d.

    Every point gets R_p = max(d_p, 0) + 1 domain columns (so B spans
    F_q^k) and Q_p = R_p - d_p image columns.
    """
    system = build_incidence(f, k)
    d = [int(x) for x in d]
    if len(d) != system.n_points:
        raise SizeMismatch(f"difference vector has {len(d)} entries, expected {system.n_points}")
    r = [max(x, 0) + 1 for x in d]
    qv = [a - x for a, x in zip(r, d)]
    dom_cols = [p for p, c in zip(system.points, r) for _ in range(c)]
    img_cols = [p for p, c in zip(system.points, qv) for _ in range(c)]
    if not img_cols:
        img_cols = [(0,) * k]
    domain = GeneratorMatrix(f, tuple(zip(*dom_cols)))
    return LinearMapSpec(domain, tuple(zip(*img_cols)))


def difference_from_arrangement(f: FieldSpec, k: int, pi: Sequence[int]) -> DifferenceVector:
    system = build_incidence(f, k)
    nums, den = apply_inverse(system, pi)
    if any(int(x) % den for x in nums):
        raise NonIntegral("M^{-1} pi has a non-integer entry")
    return DifferenceVector(f.q, k, tuple(int(x) // den for x in nums), tuple(int(x) for x in pi))


def make_witness(f: FieldSpec, k: int, pi: Sequence[int]) -> Witness:
    dv = difference_from_arrangement(f, k, pi)
    w = Witness(construct_map(f, k, dv.d), tuple(sorted(dv.pi)), dv)
    if not w.verify():
        raise AssertionError(f"witness for arrangement {tuple(pi)} failed verification")
    return w


def decide(f: FieldSpec, k: int, s: Sequence[int], budget: Optional[SearchBudget] = None, *,
           use_split_difference: bool = True, threads: int = 1) -> ForcingVerdict:
    """Decide whether S is projection-forcing over F_q for k-dimensional domains.

    With ``use_split_difference`` the split-difference certificate is tried
    first and, when it applies, the verdict is Forcing without any search
    (realizability is then not examined).
    """
    s = check_size(f, k, s)
    budget = budget or SearchBudget()
    delta = split_difference(f, k, s)
    threshold = split_threshold(f, k)
    if use_split_difference and delta > threshold:
        return ForcingVerdict(Status.FORCING, Reason.SPLIT_DIFFERENCE, delta, threshold)

    system = build_incidence(f, k)
    distinct = sorted(set(s))
    if threads > 1 and system.n_points > 1 and len(distinct) > 1:
        stats = SearchStats()
        jobs = [(f.q, k, s, budget.max_nodes, vi) for vi in range(len(distinct))]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_branch_worker, jobs))
        realizable, found = False, None
        for r, arr, st in results:
            stats.merge(st)
            realizable = realizable or r
            if found is None and arr is not None:
                found = arr
        if stats.nodes > budget.max_nodes:
            raise BudgetExhausted(f"search exceeded {budget.max_nodes} nodes", stats)
    else:
        realizable, found, stats = _search_negative(system, s, budget)

    if found is not None:
        return ForcingVerdict(Status.NOT_FORCING, Reason.EXHAUSTIVE_SEARCH, delta, threshold,
                              make_witness(f, k, found), stats)
    if realizable:
        return ForcingVerdict(Status.FORCING, Reason.EXHAUSTIVE_SEARCH, delta, threshold, None, stats)
    return ForcingVerdict(Status.FORCING_VACUOUS, Reason.NOT_REALIZABLE, delta, threshold, None, stats)


def realizable(f: FieldSpec, k: int, s: Sequence[int], budget: Optional[SearchBudget] = None
               ) -> Tuple[bool, Optional[LinearMapSpec]]:
    """Whether some linear map realizes S, with such a map when it does."""
    s = check_size(f, k, s)
    system = build_incidence(f, k)
    search = _Search(system, s, budget or SearchBudget())
    for arrangement, _ in search.run():
        dv = difference_from_arrangement(f, k, arrangement)
        return True, construct_map(f, k, dv.d)
    return False, None


def integral_differences(f: FieldSpec, k: int, s: Sequence[int], budget: Optional[SearchBudget] = None
                         ) -> Iterator[DifferenceVector]:
    """Every integral M^{-1} pi over all distinct arrangements pi of S (no symmetry reduction)."""
    s = check_size(f, k, s)
    system = build_incidence(f, k)
    search = _Search(system, s, budget or SearchBudget(), symmetry=False)
    for arrangement, numerators in search.run():
        yield DifferenceVector(f.q, k, tuple(x // system.denominator for x in numerators), arrangement)


def budget_from_env(default: int = DEFAULT_MAX_NODES) -> SearchBudget:
    raw = os.environ.get("PROJFORCE_BUDGET")
    return SearchBudget(int(raw) if raw else default)

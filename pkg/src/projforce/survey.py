"""Surveys: classify every multiset of a given size with bounded entries.

Each multiset lands in exactly one class:

    not_realizable            no linear map has these weight changes
    forcing_split_difference  realizable, certified by the split difference
    forcing_search            realizable, forcing, needs the full search
    not_forcing               a non-projection realizes it (witness attached)

With ``realizable_only`` (the default) non-realizable multisets are left
out of the forcing list; otherwise they count as (vacuously) forcing.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement, islice
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import BudgetExhausted
from .forcing import (
    ForcingVerdict,
    Reason,
    SearchBudget,
    Status,
    decide,
    realizable,
    split_threshold,
)
from .gf import field_new
from .projgeom import num_points

CLASSES = ("not_realizable", "forcing_split_difference", "forcing_search", "not_forcing")
CHECKPOINT_EVERY = 500


@dataclass(frozen=True)
class SurveySpec:
    q: int
    k: int
    min_entry: int = 1
    max_entry: int = 7
    realizable_only: bool = True

    def __post_init__(self):
        if self.min_entry > self.max_entry:
            raise ValueError("min_entry must not exceed max_entry")
        field_new(self.q)
        if self.k < 1:
            raise ValueError("k must be >= 1")

    @property
    def size(self) -> int:
        return num_points(self.q, self.k)


@dataclass
class SurveyRecord:
    multiset: Tuple[int, ...]
    classification: str
    delta: int
    witness: Optional[dict] = None


@dataclass
class SurveyReport:
    spec: SurveySpec
    total_enumerated: int = 0
    counts: Dict[str, int] = field(default_factory=lambda: dict.fromkeys(CLASSES, 0))
    forcing: List[Tuple[int, ...]] = field(default_factory=list)
    forcing_beyond_split: List[Tuple[int, ...]] = field(default_factory=list)
    witnesses: List[dict] = field(default_factory=list)
    records: List[SurveyRecord] = field(default_factory=list)
    complete: bool = True

    def to_dict(self) -> dict:
        return {
            "complete": self.complete,
            "counts": dict(sorted(self.counts.items())),
            "forcing": [list(s) for s in self.forcing],
            "forcing_beyond_split": [list(s) for s in self.forcing_beyond_split],
            "n_forcing": len(self.forcing),
            "n_forcing_beyond_split": len(self.forcing_beyond_split),
            "spec": asdict(self.spec),
            "total_enumerated": self.total_enumerated,
            "witnesses": self.witnesses,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["multiset", "status", "reason", "delta"])
        for rec in self.records:
            status, reason = _STATUS_OF[rec.classification]
            w.writerow([" ".join(map(str, rec.multiset)), status, reason, rec.delta])
        return buf.getvalue()


_STATUS_OF = {
    "not_realizable": (Status.FORCING_VACUOUS.value, Reason.NOT_REALIZABLE.value),
    "forcing_split_difference": (Status.FORCING.value, Reason.SPLIT_DIFFERENCE.value),
    "forcing_search": (Status.FORCING.value, Reason.EXHAUSTIVE_SEARCH.value),
    "not_forcing": (Status.NOT_FORCING.value, Reason.EXHAUSTIVE_SEARCH.value),
}


def enumerate_multisets(spec: SurveySpec) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing sequences of length N in lexicographic order."""
    return combinations_with_replacement(range(spec.min_entry, spec.max_entry + 1), spec.size)


def classify(q: int, k: int, s: Tuple[int, ...], budget: SearchBudget) -> SurveyRecord:
    f = field_new(q)
    verdict: ForcingVerdict = decide(f, k, s, budget)
    if verdict.reason is Reason.SPLIT_DIFFERENCE:
        ok, _ = realizable(f, k, s, budget)
        cls = "forcing_split_difference" if ok else "not_realizable"
    elif verdict.status is Status.NOT_FORCING:
        cls = "not_forcing"
    elif verdict.status is Status.FORCING_VACUOUS:
        cls = "not_realizable"
    else:
        cls = "forcing_search"
    wit = verdict.witness.to_dict() if verdict.witness is not None else None
    return SurveyRecord(tuple(s), cls, verdict.delta, wit)


def _classify_job(args):
    q, k, s, max_nodes = args
    return classify(q, k, s, SearchBudget(max_nodes))


def _add(report: SurveyReport, rec: SurveyRecord, witness_sample: int) -> None:
    spec = report.spec
    report.total_enumerated += 1
    report.counts[rec.classification] += 1
    report.records.append(rec)
    forcing = rec.classification in ("forcing_split_difference", "forcing_search") or (
        rec.classification == "not_realizable" and not spec.realizable_only
    )
    if forcing:
        report.forcing.append(rec.multiset)
        if rec.delta <= split_threshold(field_new(spec.q), spec.k):
            report.forcing_beyond_split.append(rec.multiset)
    if rec.witness is not None and len(report.witnesses) < witness_sample:
        report.witnesses.append({"multiset": list(rec.multiset), **rec.witness})


def _save_checkpoint(path: str, report: SurveyReport) -> None:
    state = {
        "spec": asdict(report.spec),
        "records": [[list(r.multiset), r.classification, r.delta, r.witness] for r in report.records],
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh, sort_keys=True)
    os.replace(tmp, path)


def _load_checkpoint(path: str, spec: SurveySpec) -> List[SurveyRecord]:
    with open(path) as fh:
        state = json.load(fh)
    if SurveySpec(**state["spec"]) != spec:
        raise ValueError(f"checkpoint {path} was written for a different survey")
    return [SurveyRecord(tuple(m), c, d, w) for m, c, d, w in state["records"]]


def survey(spec: SurveySpec, budget: Optional[SearchBudget] = None, *, checkpoint: Optional[str] = None,
           resume: bool = False, workers: int = 1, witness_sample: int = 10,
           checkpoint_every: int = CHECKPOINT_EVERY) -> SurveyReport:
    """Classify every multiset admitted by ``spec``.

    On BudgetExhausted the partial report is attached to the exception as
    ``exc.report`` with ``complete=False``.
    """
    budget = budget or SearchBudget()
    report = SurveyReport(spec)
    done = 0
    if resume and checkpoint and os.path.exists(checkpoint):
        for rec in _load_checkpoint(checkpoint, spec):
            _add(report, rec, witness_sample)
        done = report.total_enumerated
    pending = islice(enumerate_multisets(spec), done, None)

    def batches():
        while True:
            chunk = list(islice(pending, checkpoint_every))
            if not chunk:
                return
            yield chunk

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for chunk in batches():
            jobs = [(spec.q, spec.k, s, budget.max_nodes) for s in chunk]
            try:
                recs = list(pool.map(_classify_job, jobs)) if pool else [_classify_job(j) for j in jobs]
            except BudgetExhausted as exc:
                report.complete = False
                exc.report = report
                raise
            for rec in recs:
                _add(report, rec, witness_sample)
            if checkpoint:
                _save_checkpoint(checkpoint, report)
    finally:
        if pool:
            pool.shutdown()
    return report

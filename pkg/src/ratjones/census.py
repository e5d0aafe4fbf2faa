"""Census of rational knots by Jones polynomial.

Work is sharded by determinant: each shard evaluates every class with one
value of ``p`` and returns plain tuples, so shards can run in worker
processes.  Merging is a sort, so results do not depend on the shard count.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd
from multiprocessing import get_context
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np

from .classify import ClassificationResult, SearchBudget, classify_pair
from .jones import jones_knot, jones_span
from .rationals import KnotClass, schubert_canonical
from .ring import LaurentT


@dataclass(frozen=True)
class CensusEntry:
    knot: KnotClass
    jones: LaurentT
    span: int
    det: int


@dataclass(frozen=True)
class PairClassification:
    pair: tuple[int, int]
    result: ClassificationResult


@dataclass(frozen=True)
class CoincidenceGroup:
    det: int
    members: tuple[KnotClass, ...]
    jones: LaurentT
    classification: tuple[PairClassification, ...] = field(default=())

    @property
    def amphicheiral_members(self) -> tuple[bool, ...]:
        return tuple(k.amphicheiral for k in self.members)

    @property
    def starred(self) -> bool:
        return any(self.amphicheiral_members)

    @property
    def span(self) -> int:
        return jones_span(self.jones)

    def to_record(self) -> dict:
        return {
            "det": self.det,
            "members": [{"p": k.p, "q": k.q} for k in self.members],
            "jones": self.jones.to_json(),
            "span": self.span,
            "amphicheiral": list(self.amphicheiral_members),
            "classification": [
                {"pair": list(c.pair), "kind": c.result.kind, "witness": c.result.witness_dict()}
                for c in self.classification
            ],
        }


def classes_with_det(p: int) -> list[KnotClass]:
    """Schubert classes with determinant ``p``, ordered by smallest ``q``."""
    out = []
    for q in range(1, p):
        if gcd(p, q) == 1 and q <= pow(q, -1, p):
            out.append(schubert_canonical(p, q))
    return out


def enumerate_classes(max_det: int) -> Iterator[KnotClass]:
    """Every class with odd ``3 <= p < max_det``; mirror images are distinct."""
    for p in range(3, max_det, 2):
        yield from classes_with_det(p)


def _shard(p: int) -> list[tuple[int, tuple[int, ...], tuple]]:
    return [(k.p, k.qset, jones_knot(k.p, k.q).key()) for k in classes_with_det(p)]


def default_jobs() -> int:
    env = os.environ.get("JONES_JOBS")
    if env:
        return max(1, int(env))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return os.cpu_count() or 1


def _entry(p: int, qset: tuple[int, ...], key: tuple) -> CensusEntry:
    lo, *coefs = key
    v = LaurentT._raw(lo, np.array(coefs, dtype=np.int64))
    knot = schubert_canonical(p, qset[0])
    return CensusEntry(knot, v, jones_span(v), p)


def census(max_det: int, jobs: int | None = None) -> list[CensusEntry]:
    """Jones polynomial of every class below ``max_det``, in enumeration order."""
    ps = list(range(3, max_det, 2))
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(ps) < 2:
        shards = [_shard(p) for p in ps]
    else:
        # largest determinants first for better balance; order restored below
        with get_context("spawn").Pool(jobs) as pool:
            done = dict(zip(ps[::-1], pool.map(_shard, ps[::-1], chunksize=4)))
        shards = [done[p] for p in ps]
    return [_entry(*row) for shard in shards for row in shard]


def group_entries(entries: Iterable[CensusEntry]) -> list[CoincidenceGroup]:
    """Exact-polynomial groups of size >= 2, one per mirror orbit."""
    by_poly: dict[LaurentT, list[CensusEntry]] = defaultdict(list)
    for e in entries:
        by_poly[e.jones].append(e)
    groups = []
    for v, members in by_poly.items():
        if len(members) < 2:
            continue
        text, mirror_text = str(v), str(v.bar())
        if mirror_text < text:
            continue  # the mirror group is kept instead
        knots = tuple(sorted(e.knot for e in members))
        groups.append((members[0].det, text, CoincidenceGroup(members[0].det, knots, v)))
    groups.sort(key=lambda g: (g[0], g[1]))
    return [g for _, _, g in groups]


def classify_group(group: CoincidenceGroup, budget: SearchBudget | None = None) -> CoincidenceGroup:
    budget = SearchBudget() if budget is None else budget
    results = []
    n = len(group.members)
    for i in range(n):
        for j in range(i + 1, n):
            res = classify_pair(group.members[i], group.members[j], budget)
            results.append(PairClassification((i, j), res))
    return CoincidenceGroup(group.det, group.members, group.jones, tuple(results))


def find_coincidences(
    max_det: int,
    jobs: int | None = None,
    classify: bool = False,
    budget: SearchBudget | None = None,
    entries: Sequence[CensusEntry] | None = None,
) -> list[CoincidenceGroup]:
    """Jones rational coincidences with determinant below ``max_det``.

    ``entries`` may pass a precomputed :func:`census` to skip evaluation.
    """
    if max_det < 3:
        raise ValueError("max_det must be at least 3")
    if entries is None:
        entries = census(max_det, jobs)
    else:
        entries = [e for e in entries if e.det < max_det]
    groups = group_entries(entries)
    if classify:
        groups = [classify_group(g, budget) for g in groups]
    return groups


CSV_HEADER = ["det", "members", "jones", "span", "amphicheiral", "classification"]


def emit_report(groups: Sequence[CoincidenceGroup], fmt: str, sink: TextIO) -> None:
    """Write ``groups`` as JSON (one array) or CSV (one row per group)."""
    if fmt == "json":
        records = [g.to_record() for g in groups]
        sink.write(json.dumps(records, indent=1 if records else None, sort_keys=False))
        sink.write("\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for g in groups:
            w.writerow(
                [
                    g.det,
                    ";".join(str(k) for k in g.members),
                    str(g.jones),
                    g.span,
                    ";".join("true" if a else "false" for a in g.amphicheiral_members),
                    ";".join(f"{c.pair[0]}-{c.pair[1]}:{c.result.kind}" for c in g.classification),
                ]
            )
        sink.write(buf.getvalue())
    else:
        raise ValueError(f"unknown report format {fmt!r}")

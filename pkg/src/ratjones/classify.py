"""Bounded search for a template instance explaining a Jones coincidence.

Candidates are screened with numpy over whole families of base sequences
at once, using the integer transfer matrices ``P_n = [[n, -1], [1, 0]]``.
For a split ``A = L . P_d . R`` the numerator of ``A`` is ``x*d + y`` with
``x, y`` read off ``L`` and ``R``, so the last free twist parameter is solved
for rather than enumerated.  Every survivor is regenerated and its classes
checked exactly before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .rationals import KnotClass, class_of, eval_cf
from .templates import TemplateInstance, pivot_check

MOD = 1_000_000_007
_PIVOT_POINTS = (12345, 67891)


@dataclass(frozen=True)
class SearchBudget:
    """Bounds on template parameters.

    ``max_len``/``max_entry`` bound the base sequences, ``max_param`` the
    ``d`` and ``m`` values.  ``max_k`` applies to Template I; Template II
    and the pivot template have their own (smaller) block-count bounds.
    """

    max_len: int = 4
    max_entry: int = 6
    max_k: int = 3
    max_param: int = 6
    max_k_two: int = 1
    max_k_pivot: int = 1

    @classmethod
    def zero(cls) -> "SearchBudget":
        return cls(0, 0, 0, 0, -1, 0)


@dataclass(frozen=True)
class ClassificationResult:
    kind: str  # "TemplateI", "TemplateII", "Pivot" or "Unexplained"
    witness: TemplateInstance | None = None

    def witness_dict(self) -> dict:
        return self.witness.to_dict() if self.witness else {}

    def __str__(self) -> str:
        if self.witness is None:
            return self.kind
        return f"{self.kind} {self.witness.to_dict()}"


UNEXPLAINED = ClassificationResult("Unexplained")
_KIND_NAMES = {"I": "TemplateI", "II": "TemplateII", "Pivot": "Pivot"}


# ---------------------------------------------------------------------------
# base sequences and their exact transfer matrices


@dataclass(frozen=True)
class _Bases:
    seqs: tuple[tuple[int, ...], ...]
    mats: np.ndarray  # shape (N, 4): a, b, c, d of [[a, b], [c, d]]
    rev: np.ndarray  # index of the reversed sequence
    neg: np.ndarray  # index of the negated sequence
    star: np.ndarray  # index of -reversed
    bound: int  # largest absolute matrix entry


@lru_cache(maxsize=8)
def _bases(max_len: int, max_entry: int) -> _Bases:
    entries = range(-max_entry, max_entry + 1)
    seqs: list[tuple[int, ...]] = []
    rows = []
    level = [((), (1, 0, 0, 1))]
    for _ in range(max_len):
        nxt = []
        for s, (a, b, c, d) in level:
            for n in entries:
                nxt.append((s + (n,), (a * n + b, -a, c * n + d, -c)))
        seqs.extend(s for s, _ in nxt)
        rows.extend(m for _, m in nxt)
        level = nxt
    index = {s: i for i, s in enumerate(seqs)}
    mats = np.array(rows, dtype=np.int64).reshape(-1, 4)
    rev = np.array([index[s[::-1]] for s in seqs], dtype=np.int64)
    neg = np.array([index[tuple(-x for x in s)] for s in seqs], dtype=np.int64)
    bound = int(np.abs(mats).max()) if len(seqs) else 1
    return _Bases(tuple(seqs), mats, rev, neg, neg[rev], bound)


_INT64_SAFE = 1 << 62


def _widen(arr: np.ndarray, bound: int) -> np.ndarray:
    return arr.astype(object) if bound >= _INT64_SAFE else arr


def _row_twist(r0, r1, d: int):
    """``(r0, r1) . [[d, -1], [1, 0]]``."""
    return r0 * d + r1, -r0


def _row_mat(r0, r1, m):
    return r0 * m[:, 0] + r1 * m[:, 2], r0 * m[:, 1] + r1 * m[:, 3]


def _mat_mat(x, y):
    return np.stack(
        [
            x[:, 0] * y[:, 0] + x[:, 1] * y[:, 2],
            x[:, 0] * y[:, 1] + x[:, 1] * y[:, 3],
            x[:, 2] * y[:, 0] + x[:, 3] * y[:, 2],
            x[:, 2] * y[:, 1] + x[:, 3] * y[:, 3],
        ],
        axis=1,
    )


def _mat_twist(m, d: int):
    return np.stack([m[:, 0] * d + m[:, 1], -m[:, 0], m[:, 2] * d + m[:, 3], -m[:, 2]], axis=1)


def _solve_last(row, right, p: int, span: int) -> list[tuple[int, int]]:
    """``(index, d)`` with numerator of ``row . P_d . right`` equal to ``+-p``."""
    return [(i[0], d) for i, d in _solve(row[0], row[1], right[:, 0], right[:, 2], p, span)]


def _solve(r0, r1, ra, rc, p: int, span: int) -> list[tuple[tuple[int, ...], int]]:
    """Solve ``x*d + y = +-p`` elementwise, ``x = r0*ra``, ``y = r1*ra - r0*rc``.

    The arguments broadcast; hits are returned as sorted ``(index, d)``.
    """
    x = r0 * ra
    y = r1 * ra - r0 * rc
    safe_x = np.where(x == 0, 1, x)
    hits = set()
    for target in (p, -p):
        num = target - y
        d = num // safe_x
        ok = (x != 0) & (num % safe_x == 0) & (np.abs(d) <= span)
        hits.update((tuple(int(v) for v in i), int(d[tuple(i)])) for i in np.argwhere(ok))
        for i in np.argwhere((x == 0) & (y == target)):
            hits.update((tuple(int(v) for v in i), dd) for dd in range(-span, span + 1))
    return sorted(hits)


def _matches(inst: TemplateInstance, want: frozenset[KnotClass]) -> bool:
    a, b = inst.generate(check=False)
    ra, rb = eval_cf(a), eval_cf(b)
    if ra.p % 2 == 0 or rb.p % 2 == 0 or abs(ra.p) != abs(rb.p):
        return False
    if {class_of(ra), class_of(rb)} != set(want) or class_of(ra) == class_of(rb):
        return False
    if inst.kind == "Pivot":
        return pivot_check(*inst.base)
    return True


# ---------------------------------------------------------------------------
# template searches


def _chain_bound(block: int, blocks: int, span: int) -> int:
    """Bound on ``x``/``y`` for ``blocks`` blocks of entry size ``block`` joined by twists."""
    return 2 * block * block * (2 * block * (span + 1)) ** max(blocks - 2, 0) * (span + 1)


def _search_one(p: int, want, budget: SearchBudget, bases: _Bases) -> TemplateInstance | None:
    span = budget.max_param
    params = range(-span, span + 1)
    for k in range(1, budget.max_k + 1):
        mats = _widen(bases.mats, _chain_bound(bases.bound, k + 1, span))
        variants = {"1": mats, "*": mats[bases.star]}
        for eps in product("1*", repeat=k + 1):
            blocks = [variants[e] for e in eps]
            for inner in product(params, repeat=k - 1):
                row = (blocks[0][:, 0], blocks[0][:, 1])
                for d, blk in zip(inner, blocks[1:-1]):
                    row = _row_mat(*_row_twist(*row, d), blk)
                for i, d in _solve_last(row, blocks[-1], p, span):
                    inst = TemplateInstance("I", bases.seqs[i], tuple(inner) + (d,), tuple(eps))
                    if _matches(inst, want):
                        return inst
    return None


def _search_two(p: int, want, budget: SearchBudget, bases: _Bases) -> TemplateInstance | None:
    span = budget.max_param
    params = range(-span, span + 1)
    block_bound = 2 * bases.bound * bases.bound * (span + 1)
    for k in range(0, budget.max_k_two + 1):
        if k == 0:
            mats = _widen(bases.mats, _chain_bound(bases.bound, 2, span))
        else:
            mats = _widen(bases.mats, _chain_bound(block_bound, k + 1, span))
        arrows = {">": mats, "<": mats[bases.rev]}
        negs = {">": mats[bases.neg], "<": mats[bases.neg[bases.rev]]}
        for flags in product(product("><", repeat=2), repeat=k + 1):
            eps = tuple(e for e, _ in flags)
            phis = tuple(f for _, f in flags)
            sides = [(arrows[e], negs[f]) for e, f in flags]
            if k == 0:
                left, right = sides[0]
                for i, m in _solve_last((left[:, 0], left[:, 1]), right, p, span):
                    inst = TemplateInstance("II", bases.seqs[i], (), eps, (m,), phis)
                    if _matches(inst, want):
                        return inst
                continue
            for ms in product(params, repeat=k + 1):
                blocks = [_mat_mat(_mat_twist(l, m), r) for (l, r), m in zip(sides, ms)]
                for inner in product(params, repeat=k - 1):
                    row = (blocks[0][:, 0], blocks[0][:, 1])
                    for d, blk in zip(inner, blocks[1:-1]):
                        row = _row_mat(*_row_twist(*row, d), blk)
                    for i, d in _solve_last(row, blocks[-1], p, span):
                        inst = TemplateInstance("II", bases.seqs[i], tuple(inner) + (d,), eps, ms, phis)
                        if _matches(inst, want):
                            return inst
    return None


def _qnumber_mod(n: int, x: int) -> int:
    xi = pow(x, -1, MOD)
    num = (pow(x, n, MOD) - pow(xi, n, MOD)) if n >= 0 else (pow(xi, -n, MOD) - pow(x, -n, MOD))
    return num * pow(x - xi, -1, MOD) % MOD


def _alpha_values(bases: _Bases, x: int) -> list[int]:
    """``alpha(x)`` mod MOD for every base, via ``[[[n], x^-n], [-x^n, 0]]``."""
    out = []
    cache: dict[tuple[int, ...], tuple[int, int, int, int]] = {(): (1, 0, 0, 1)}
    for s in bases.seqs:
        a, b, c, d = cache[s[:-1]]
        n = s[-1]
        q, up, dn = _qnumber_mod(n, x), pow(x, n, MOD), pow(x, -n, MOD)
        m = ((a * q - b * up) % MOD, a * dn % MOD, (c * q - d * up) % MOD, c * dn % MOD)
        cache[s] = m
        out.append(m[0])
    return out


@lru_cache(maxsize=8)
def _pivot_groups(max_len: int, max_entry: int) -> tuple[np.ndarray, ...]:
    """Bases grouped by ``alpha(x)/alpha(1/x)`` at sample points.

    Equal ratios are necessary for pivoting; candidates are confirmed
    exactly later.  Bases whose alpha vanishes at a sample point are left out.
    """
    bases = _bases(max_len, max_entry)
    keys = []
    for x in _PIVOT_POINTS:
        a, a_bar = _alpha_values(bases, x), _alpha_values(bases, pow(x, -1, MOD))
        keys.append([u * pow(v, -1, MOD) % MOD if v else None for u, v in zip(a, a_bar)])
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, key in enumerate(zip(*keys)):
        if None not in key:
            groups.setdefault(key, []).append(i)
    return tuple(np.array(g, dtype=np.int64) for g in groups.values() if len(g) > 1)


def _search_pivot(p: int, want, budget: SearchBudget, bases: _Bases) -> TemplateInstance | None:
    if budget.max_k_pivot < 1:
        return None
    span = budget.max_param
    mats = _widen(bases.mats, _chain_bound(bases.bound, 2, span))
    for g in _pivot_groups(budget.max_len, budget.max_entry):
        for eps in product("1*", repeat=2):
            first = g if eps[0] == "1" else bases.star[g]
            second = g if eps[1] == "1" else bases.star[g]
            left, right = mats[first], mats[second]
            col = (slice(None), None)
            row = (None, slice(None))
            hits = _solve(left[:, 0][col], left[:, 1][col], right[:, 0][row], right[:, 2][row], p, span)
            for (i, j), d in hits:
                if i == j:
                    continue
                inst = TemplateInstance("Pivot", (bases.seqs[g[i]], bases.seqs[g[j]]), (d,), tuple(eps))
                if _matches(inst, want):
                    return inst
    return None


def classify_pair(a: KnotClass, b: KnotClass, budget: SearchBudget | None = None) -> ClassificationResult:
    """First template witness (I, then II, then pivot) regenerating ``{a, b}``."""
    budget = SearchBudget() if budget is None else budget
    if a.p != b.p or a == b or budget.max_len < 1:
        return UNEXPLAINED
    bases = _bases(budget.max_len, budget.max_entry)
    want = frozenset((a, b))
    for search in (_search_one, _search_two, _search_pivot):
        inst = search(a.p, want, budget, bases)
        if inst is not None:
            return ClassificationResult(_KIND_NAMES[inst.kind], inst)
    return UNEXPLAINED

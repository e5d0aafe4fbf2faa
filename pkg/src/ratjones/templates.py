"""Moves on integer sequences that preserve the Jones polynomial.

Every template returns a pair of display-order sequences ``(A, B)`` whose
numerator closures share a Jones polynomial whenever they are knots.
Templates are total: they do not check that the closures are knots.

Flags: a star flag is ``"1"`` (identity) or ``"*"`` (``n -> -reversed(n)``);
an arrow flag is ``">"`` (identity) or ``"<"`` (reversal).  When both act on
the same block the star is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import NotPivotEquivalent
from .ring import D_U, LaurentU
from .tangles import Mat2U, alpha_of, b_matrix

IntSeq = tuple[int, ...]

STAR_FLAGS = ("1", "*")
ARROW_FLAGS = (">", "<")
_ARROW_ALIASES = {">": ">", "->": ">", "→": ">", "<": "<", "<-": "<", "←": "<"}


def seq_star(n: Sequence[int]) -> IntSeq:
    return tuple(-x for x in reversed(n))


def apply_star(n: Sequence[int], flag: str) -> IntSeq:
    if flag == "1":
        return tuple(n)
    if flag == "*":
        return seq_star(n)
    raise ValueError(f"star flag must be '1' or '*', got {flag!r}")


def apply_arrow(n: Sequence[int], flag: str) -> IntSeq:
    try:
        flag = _ARROW_ALIASES[flag]
    except KeyError:
        raise ValueError(f"arrow flag must be '>' or '<', got {flag!r}") from None
    return tuple(n) if flag == ">" else tuple(reversed(n))


def _join(blocks: Sequence[IntSeq], ds: Sequence[int]) -> IntSeq:
    out = list(blocks[0])
    for d, block in zip(ds, blocks[1:]):
        out.append(d)
        out.extend(block)
    return tuple(out)


def _check_lengths(ds, *lists) -> None:
    for lst in lists:
        if len(lst) != len(ds) + 1:
            raise ValueError(f"expected {len(ds) + 1} entries, got {len(lst)}")


def template_one(n: Sequence[int], ds: Sequence[int], eps: Sequence[str]) -> tuple[IntSeq, IntSeq]:
    """``(n^e0, d1, n^e1, ..., dk, n^ek)`` versus its block reversal."""
    _check_lengths(ds, eps)
    blocks = [apply_star(n, e) for e in eps]
    return _join(blocks, ds), _join(blocks[::-1], ds[::-1])


def _template_two_side(n: IntSeq, ms, ds, eps, phis) -> IntSeq:
    blocks = [apply_arrow(n, e) + (m,) + tuple(-x for x in apply_arrow(n, f)) for m, e, f in zip(ms, eps, phis)]
    return _join(blocks, ds)


def template_two(
    n: Sequence[int], ms: Sequence[int], ds: Sequence[int], eps: Sequence[str], phis: Sequence[str]
) -> tuple[IntSeq, IntSeq]:
    """Blocks ``(n^eps_j, m_j, -n^phi_j)`` joined by ``d_j``, versus the same with ``n*``."""
    _check_lengths(ds, ms, eps, phis)
    n = tuple(n)
    return _template_two_side(n, ms, ds, eps, phis), _template_two_side(seq_star(n), ms, ds, eps, phis)


def pivot_check(n1: Sequence[int], n2: Sequence[int]) -> bool:
    """``alpha_1' alpha_2 == alpha_1 alpha_2'`` where ``'`` is ``u -> 1/u``."""
    a1, a2 = alpha_of(n1), alpha_of(n2)
    return a1.bar_u() * a2 == a1 * a2.bar_u()


def pivot_generate(n: Sequence[int], m: int) -> IntSeq:
    """A pivot partner of ``n``: the sequence of ``C B_m C``."""
    return tuple(n) + (m,) + tuple(n)


def template_pivot(
    seqs: Sequence[Sequence[int]], ds: Sequence[int], eps: Sequence[str], check: bool = True
) -> tuple[IntSeq, IntSeq]:
    """Template I with pairwise pivot-equivalent blocks ``n_0, ..., n_k``.

    ``check=False`` skips the pivot condition (the caller has verified it).
    """
    _check_lengths(ds, seqs, eps)
    seqs = [tuple(s) for s in seqs]
    for s1, s2 in combinations(seqs, 2):
        if check and s1 != s2 and not pivot_check(s1, s2):
            raise NotPivotEquivalent(f"{s1} and {s2} are not a pivoting pair")
    blocks = [apply_star(s, e) for s, e in zip(seqs, eps)]
    return _join(blocks, ds), _join(blocks[::-1], ds[::-1])


@dataclass(frozen=True)
class TemplateInstance:
    """Parameters of one template application."""

    kind: str  # "I", "II" or "Pivot"
    base: tuple  # IntSeq for I/II, tuple of IntSeq for Pivot
    ds: IntSeq = ()
    eps: tuple[str, ...] = ()
    ms: IntSeq = ()
    phis: tuple[str, ...] = ()

    def generate(self, check: bool = True) -> tuple[IntSeq, IntSeq]:
        if self.kind == "I":
            return template_one(self.base, self.ds, self.eps)
        if self.kind == "II":
            return template_two(self.base, self.ms, self.ds, self.eps, self.phis)
        if self.kind == "Pivot":
            return template_pivot(self.base, self.ds, self.eps, check)
        raise ValueError(f"unknown template kind {self.kind!r}")

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "Pivot":
            out["seqs"] = [list(s) for s in self.base]
        else:
            out["n"] = list(self.base)
        out["ds"] = list(self.ds)
        if self.kind == "II":
            out["ms"] = list(self.ms)
            out["eps"] = list(self.eps)
            out["phis"] = list(self.phis)
        else:
            out["eps"] = list(self.eps)
        return out


# ---------------------------------------------------------------------------
# block-exchange harness

_ONE = LaurentU({0: 1})
_ZERO = LaurentU()
ROW_D = (_ONE, D_U)
ROW_0 = (_ONE, _ZERO)
COL_0 = (_ONE, _ZERO)
COL_MD = (_ONE, -D_U)


def sandwich(row, m: Mat2U, col) -> LaurentU:
    """Scalar ``row . m . col``."""
    x, y = m.apply(col)
    return row[0] * x + row[1] * y


@dataclass
class KeyLemmaReport:
    first_condition: bool
    second_condition: bool
    conclusion: bool
    details: list = field(default_factory=list)


def key_lemma(us: Sequence[Mat2U], vs: Sequence[Mat2U], ns: Sequence[int], variant: int) -> KeyLemmaReport:
    """Evaluate hypotheses and conclusion of the block-exchange lemma.

    ``us``/``vs`` hold ``k+1`` products of B-matrices, ``ns`` the ``k``
    connecting twist numbers.  ``variant`` 1 keeps the block order on the
    right-hand side, variant 2 reverses it.
    """
    if len(us) != len(vs) or len(us) != len(ns) + 1:
        raise ValueError("need k+1 blocks and k connectors")
    first = all(sandwich(ROW_D, u, COL_0) == sandwich(ROW_D, v, COL_0) for u, v in zip(us, vs))
    second = True
    idx = range(len(us))
    for j in idx:
        for l in idx:
            if j == l:
                continue
            if variant == 1:
                lhs = sandwich(ROW_D, us[j], COL_MD) * sandwich(ROW_0, us[l], COL_0)
            else:
                lhs = sandwich(ROW_D, us[l], COL_MD) * sandwich(ROW_0, us[j], COL_0)
            rhs = sandwich(ROW_D, vs[j], COL_MD) * sandwich(ROW_0, vs[l], COL_0)
            second = second and lhs == rhs
    left = us[0]
    for n, u in zip(ns, us[1:]):
        left = left @ b_matrix(n) @ u
    if variant == 1:
        right = vs[0]
        for n, v in zip(ns, vs[1:]):
            right = right @ b_matrix(n) @ v
    else:
        right = vs[-1]
        for n, v in zip(reversed(ns), reversed(vs[:-1])):
            right = right @ b_matrix(n) @ v
    conclusion = sandwich(ROW_D, left, COL_0) == sandwich(ROW_D, right, COL_0)
    return KeyLemmaReport(first, second, conclusion)

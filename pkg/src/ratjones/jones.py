"""Jones polynomials of rational knots.

Three evaluators are provided and are expected to agree exactly:

* :func:`jones_general` -- any integer sequence, normalised by the writhe;
* :func:`jones_even` -- even entries and even length, no writhe needed;
* :func:`jones_subsets` -- the subset-sum formula over halved entries.

All results are :class:`~ratjones.ring.LaurentT` values; polynomials in
``u`` stay inside this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import BadParity, IntegralityViolation, InvariantViolation, NotAKnot, NotDivisible, NoWitness
from .rationals import even_cf, eval_cf, make_q_even, schubert_canonical
from .ring import LaurentT, LaurentU, NonReal, OddPower, qnumber, u_to_t
from .tangles import alpha_of, b_column, closure_row, writhe_vector

W_T = LaurentT({-1: 1, 0: 2, 1: 1})  # t + 2 + 1/t
Q_T = LaurentT({-1: 1, 0: 1, 1: 1})  # t + 1 + 1/t


def _to_t(x: LaurentU) -> LaurentT:
    try:
        return u_to_t(x)
    except (OddPower, NonReal) as exc:
        raise IntegralityViolation(f"result is not a polynomial in t: {x}") from exc


def jones_general(seq: Sequence[int]) -> LaurentT:
    """Jones polynomial of ``R(seq)^N`` for an arbitrary integer sequence."""
    seq = tuple(seq)
    r = eval_cf(seq)
    if r.p % 2 == 0:
        raise NotAKnot(f"{r}: numerator closure of {seq} is a link")
    wN = writhe_vector(seq).wN
    total, k = sum(seq), len(seq)
    sign_exp = Fraction(wN, 4) + Fraction(total, 4) - Fraction(k, 2)
    u_exp = Fraction(-3 * wN - total, 2)
    if sign_exp.denominator != 1 or u_exp.denominator != 1:
        raise IntegralityViolation(f"non-integral normalisation for {seq}: (-1)^{sign_exp} u^{u_exp}")
    bracket = closure_row(b_column(seq)).shift(int(u_exp))
    if sign_exp % 2:
        bracket = -bracket
    return _to_t(bracket)


def _check_even(seq: Sequence[int]) -> None:
    if len(seq) % 2 or any(n % 2 for n in seq):
        raise BadParity(f"{tuple(seq)} must have even length and even entries")


def jones_even(seq: Sequence[int]) -> LaurentT:
    """Jones polynomial from an even-length sequence of even integers."""
    seq = tuple(seq)
    _check_even(seq)
    bracket = closure_row(b_column(seq)).shift(sum(seq))
    if len(seq) % 4:
        bracket = -bracket
    return _to_t(bracket)


_T_PLUS_1 = LaurentT({0: 1, 1: 1})
_T = LaurentT({1: 1})


def jones_subsets(m: Sequence[int]) -> LaurentT:
    """Jones polynomial of ``R(2m_{2k}, ..., 2m_1)^N`` by the subset formula.

    ``m`` is in display order; position ``r`` (1-based) refers to ``m_r``,
    i.e. ``m[-r]``.  Summands are over subsets with odd minimum and even
    maximum.  Writing ``t^{-2m}-1 = (t+1) g`` and ``t+2+1/t = (t+1)^2/t``,
    the summand for ``T`` with ``p`` parity blocks is
    ``t^{p/2} (t+1)^{|T|-p} prod g``: each element contributes ``g``, times
    ``t+1`` when it extends a block, times ``t`` when it opens an even block.
    Subsets are then summed by the parity of their largest element, one
    position at a time.
    """
    m = tuple(m)
    if len(m) % 2:
        raise BadParity(f"{m} must have even length")
    one = LaurentT({0: 1})
    ends = {1: LaurentT(), 0: LaurentT()}  # parity of largest element -> sum
    for r in range(1, len(m) + 1):
        f = LaurentT({-2 * m[-r]: 1}) - one
        if f.is_zero():
            continue
        try:
            g = f.exact_div(_T_PLUS_1)
        except NotDivisible as exc:
            raise InvariantViolation(f"t+1 does not divide {f}") from exc
        par = r % 2
        same, other = ends[par], ends[1 - par]
        grown = same * _T_PLUS_1 + (other * _T if par == 0 else other)
        if par:
            grown = grown + one  # r starts a subset
        ends[par] = same + grown * g
    return one - Q_T * ends[0]


def _admissible_subsets(k: int):
    """Subsets of [k] with size parity of k and alternating parities, odd first."""
    if k < 0:
        return
    for size in range(k % 2, k + 1, 2):
        for s in combinations(range(1, k + 1), size):
            if all((x - i) % 2 == 1 for i, x in enumerate(s)):
                yield s


def _paired_complement(s: Sequence[int], k: int) -> list[tuple[int, int]]:
    rest = [x for x in range(1, k + 1) if x not in s]
    pairs = list(zip(rest[0::2], rest[1::2]))
    assert all(b == a + 1 for a, b in pairs), (s, k)
    return pairs


def subset_expansion(seq: Sequence[int]) -> tuple[LaurentU, LaurentU]:
    """``B_{n_k}...B_{n_1}(1,0)^T`` expanded as sums over admissible subsets.

    Independent of the matrix multiplication in :mod:`ratjones.tangles`.
    """
    seq = tuple(seq)
    k = len(seq)
    n = {r: seq[-r] for r in range(1, k + 1)}

    def entry(kk: int, extra: int) -> LaurentU:
        acc = LaurentU()
        for s in _admissible_subsets(kk):
            expo = extra + sum(n[a] - n[b] for a, b in _paired_complement(s, kk))
            ipow = (k - len(s)) % 4
            term = LaurentU({expo: (1, 1j, -1, -1j)[ipow]})
            for r in s:
                term = term * qnumber(n[r])
            acc = acc + term
        return acc

    upper = entry(k, 0)
    lower = entry(k - 1, n[k]) if k else LaurentU()
    return upper, lower


# ---------------------------------------------------------------------------
# knots given by fractions


def _check_knot(p: int, q: int) -> None:
    if p <= 0 or p % 2 == 0:
        raise NotAKnot(f"{p}/{q}: numerator must be odd and positive")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not reduced")


def knot_sequence(p: int, q: int) -> tuple[int, ...]:
    """Even continued fraction used to evaluate ``K_{p/q}``."""
    _check_knot(p, q)
    return even_cf(make_q_even(p, q))


@lru_cache(maxsize=1 << 16)
def jones_knot(p: int, q: int) -> LaurentT:
    """Jones polynomial of the rational knot ``K_{p/q}`` (``p`` odd, positive)."""
    return jones_even(knot_sequence(p, q))


def det_of(p: int, q: int) -> int:
    return abs(jones_knot(p, q).eval_int(-1))


def jones_span(v: LaurentT) -> int:
    if v.is_zero():
        raise ValueError("span of the zero polynomial")
    return v.max_exp - v.min_exp


def equal_up_to_unit(v1: LaurentT, v2: LaurentT) -> tuple[int, int] | None:
    """``(s, n)`` with ``v2 == s * t**n * v1``, or None."""
    if v1.is_zero() or v2.is_zero():
        return (1, 0) if v1.is_zero() and v2.is_zero() else None
    n = v2.min_exp - v1.min_exp
    s = 1 if int(v2.c[0]) == int(v1.c[0]) else -1
    if abs(int(v2.c[0])) != abs(int(v1.c[0])):
        return None
    cand = v1.shift(n)
    if s < 0:
        cand = -cand
    return (s, n) if cand == v2 else None


# ---------------------------------------------------------------------------
# V(t)V(1/t) = (2 + t + 1/t) - (1 + t + 1/t) a(t) a(1/t)

WITNESS_SHIFT_BOUND = 64


def product_identity_holds(v: LaurentT, a: LaurentT) -> bool:
    return v * v.bar() == W_T - Q_T * a * a.bar()


def product_identity_witness(p: int, q: int) -> LaurentT:
    """A polynomial ``a(t)`` satisfying the product identity for ``K_{p/q}``.

    The candidate is the top-left entry of the even-sequence B-product,
    rewritten in ``t``.  Units ``+-t^k`` leave ``a(t)a(1/t)`` unchanged, so
    the unit search only fixes a normal form: ``a(1) == 1`` and exponents
    centred (lowest + highest in {0, 1}).
    """
    v = jones_knot(p, q)
    a0 = _to_t(alpha_of(knot_sequence(p, q)))
    for k in sorted(range(-WITNESS_SHIFT_BOUND, WITNESS_SHIFT_BOUND + 1), key=abs):
        for s in (1, -1):
            cand = a0.shift(k)
            if s < 0:
                cand = -cand
            if cand.eval_int(1) != 1 or cand.min_exp + cand.max_exp not in (0, 1):
                continue
            if product_identity_holds(v, cand):
                return cand
    raise NoWitness(f"no unit multiple of {a0} satisfies the product identity for {p}/{q}")


def canonical_jones(p: int, q: int) -> LaurentT:
    """Jones polynomial of the canonical representative of the class of ``p/q``."""
    k = schubert_canonical(p, q)
    return jones_knot(k.p, k.q)


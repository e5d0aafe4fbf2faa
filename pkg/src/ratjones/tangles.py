"""Tangle types, writhe vectors and the B-matrix transfer calculus.

``B_n = [[[n], i*u**-n], [i*u**n, 0]]`` encodes "rotate, then add an
n-twist box" on Kauffman bracket vectors in the basis ``(T_0, T_inf)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import NotC0
from .rationals import Rat
from .ring import D_U, LaurentU, UnitFactor, qnumber

# ---------------------------------------------------------------------------
# tangle type and writhe


class TangleType(enum.Enum):
    ZERO = "0"
    ONE = "1"
    INF = "inf"

    def __add__(self, other: "TangleType") -> "TangleType":
        if TangleType.INF in (self, other):
            return TangleType.INF
        return TangleType.ONE if (self is TangleType.ONE) != (other is TangleType.ONE) else TangleType.ZERO

    def rotate(self) -> "TangleType":
        return {TangleType.ZERO: TangleType.INF, TangleType.INF: TangleType.ZERO}.get(self, self)


def tangle_type_of(r: Rat) -> TangleType:
    if r.p % 2 == 0:
        return TangleType.ZERO
    if r.q % 2 == 0:
        return TangleType.INF
    return TangleType.ONE


class WritheVec(NamedTuple):
    wN: int
    wD: int

    def swap(self) -> "WritheVec":
        return WritheVec(self.wD, self.wN)


def writhe_vector(seq: Sequence[int]) -> WritheVec:
    """Writhes of the numerator and denominator closures of ``R(seq)``."""
    if not seq:
        return WritheVec(0, 0)
    steps = list(reversed(seq))
    n1 = steps[0]
    w = WritheVec(n1, -n1)
    a, b = n1, 1  # fraction of the tangle built so far
    for n in steps[1:]:
        # rotate: r -> -1/r swaps the writhe entries and the 0/inf types
        w = w.swap()
        rotated = tangle_type_of(Rat(-b, a))
        box = WritheVec(n, -n)
        if rotated is not TangleType.INF:
            w = WritheVec(w.wN + box.wN, w.wD + box.wD)
        else:
            if n % 2:  # twist box of type 1
                w = w.swap()
            w = WritheVec(w.wN + box.wD, w.wD + box.wD)
        a, b = n * a - b, a
    return w


# ---------------------------------------------------------------------------
# 2x2 matrices over LaurentU


@dataclass(frozen=True)
class Mat2U:
    a11: LaurentU
    a12: LaurentU
    a21: LaurentU
    a22: LaurentU

    def __matmul__(self, o: "Mat2U") -> "Mat2U":
        return Mat2U(
            self.a11 * o.a11 + self.a12 * o.a21,
            self.a11 * o.a12 + self.a12 * o.a22,
            self.a21 * o.a11 + self.a22 * o.a21,
            self.a21 * o.a12 + self.a22 * o.a22,
        )

    def __neg__(self) -> "Mat2U":
        return Mat2U(-self.a11, -self.a12, -self.a21, -self.a22)

    def scale(self, c) -> "Mat2U":
        return Mat2U(self.a11 * c, self.a12 * c, self.a21 * c, self.a22 * c)

    def apply(self, v: tuple[LaurentU, LaurentU]) -> tuple[LaurentU, LaurentU]:
        x, y = v
        return (self.a11 * x + self.a12 * y, self.a21 * x + self.a22 * y)

    def det(self) -> LaurentU:
        return self.a11 * self.a22 - self.a12 * self.a21

    def transpose(self) -> "Mat2U":
        return Mat2U(self.a11, self.a21, self.a12, self.a22)

    def conj_transpose(self) -> "Mat2U":
        """The ``*`` operation: transpose and ``i -> -i``."""
        return Mat2U(self.a11.conj_i(), self.a21.conj_i(), self.a12.conj_i(), self.a22.conj_i())

    def bar_u(self) -> "Mat2U":
        return Mat2U(self.a11.bar_u(), self.a12.bar_u(), self.a21.bar_u(), self.a22.bar_u())

    def entries(self) -> tuple[LaurentU, LaurentU, LaurentU, LaurentU]:
        return (self.a11, self.a12, self.a21, self.a22)

    def __str__(self) -> str:
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"


IDENTITY = Mat2U(LaurentU({0: 1}), LaurentU(), LaurentU(), LaurentU({0: 1}))


@lru_cache(maxsize=4096)
def b_matrix(n: int) -> Mat2U:
    return Mat2U(qnumber(n), LaurentU({-n: 1j}), LaurentU({n: 1j}), LaurentU())


def b_product(seq: Sequence[int]) -> Mat2U:
    """``B_{n_k} ... B_{n_1}`` for a display-order sequence."""
    m = IDENTITY
    for n in seq:
        m = m @ b_matrix(n)
    return m


def b_column(seq: Sequence[int]) -> tuple[LaurentU, LaurentU]:
    """``B_{n_k} ... B_{n_1} (1, 0)^T``, evaluated right to left."""
    x, y = LaurentU({0: 1}), LaurentU()
    for n in reversed(seq):
        x, y = qnumber(n) * x + y.times_i_upow(-n), x.times_i_upow(n)
    return x, y


def bracket_vector(seq: Sequence[int]) -> tuple[tuple[LaurentU, LaurentU], UnitFactor]:
    """Kauffman bracket vector of ``R(seq)`` as (vector over u, unit prefactor).

    The bracket is ``unit * vector`` with ``unit = (i A^-1)^{sum n} (-i)^k``.
    """
    x, y = b_column(seq)
    total = sum(seq)
    unit = UnitFactor((total + 3 * len(seq)) % 4, -total)
    return (y, x), unit


def closure_row(v: tuple[LaurentU, LaurentU]) -> LaurentU:
    """``(1, d) . v``: bracket of the numerator closure."""
    return v[0] + D_U * v[1]


# ---------------------------------------------------------------------------
# structure of B-products


def _real_part_of_i_multiple(x: LaurentU) -> LaurentU | None:
    """Return ``y`` real with ``x == i*y``, or None."""
    y = x * (-1j)
    return y if y.is_real() else None


_U_MINUS_UINV = LaurentU({1: 1, -1: -1})


class CForm(NamedTuple):
    alpha: LaurentU
    beta: LaurentU

    def matrix(self) -> Mat2U:
        a, b = self.alpha, self.beta
        ab, bb = a.bar_u(), b.bar_u()
        gamma = bb + (ab - a).exact_div(_U_MINUS_UINV)
        delta = ab + (b - bb).exact_div(_U_MINUS_UINV)
        return Mat2U(a, b * 1j, gamma * 1j, delta)

    def relation(self) -> LaurentU:
        """``alpha alpha' + beta beta' + (alpha' beta - alpha beta')/(u - 1/u)``."""
        a, b = self.alpha, self.beta
        ab, bb = a.bar_u(), b.bar_u()
        return a * ab + b * bb + (ab * b - a * bb).exact_div(_U_MINUS_UINV)


def c_form(m: Mat2U) -> CForm | None:
    """First-row data ``(alpha, beta)`` if ``m`` has the required shape."""
    beta = _real_part_of_i_multiple(m.a12)
    if not m.a11.is_real() or beta is None:
        return None
    return CForm(m.a11, beta)


def c_form_verify(m: Mat2U) -> bool:
    """Check the necessary C-form condition satisfied by every B-product."""
    cf = c_form(m)
    if cf is None:
        return False
    try:
        return cf.matrix() == m and cf.relation() == LaurentU({0: 1})
    except ArithmeticError:
        return False


def c0_recognize(m: Mat2U) -> tuple[int, int]:
    """Return ``(sign, n)`` with ``m == sign * (-B_0 B_n B_0)``."""
    cf = c_form(m)
    if cf is None or not cf.alpha.is_zero():
        raise NotC0("alpha is not zero")
    terms = cf.beta.items()
    if len(terms) != 1 or terms[0][1].im != 0 or abs(terms[0][1].re) != 1:
        raise NotC0(f"beta = {cf.beta} is not a signed power of u")
    n, c = terms[0]
    sign = c.re
    expected = (-(b_matrix(0) @ b_matrix(n) @ b_matrix(0))).scale(sign)
    if expected != m:
        raise NotC0("matrix is not of the form +-B_0 B_n B_0")
    return sign, n


def alpha_of(seq: Sequence[int]) -> LaurentU:
    """Top-left entry of ``b_product(seq)``."""
    return b_column(seq)[0]

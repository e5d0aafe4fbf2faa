"""B-matrix identities shared by the tangle tests and the acceptance suite.

Each law takes integers or a sequence and returns the pair of sides that
should agree, so a failing assertion shows both.
"""

from ratjones.ring import D_U, LaurentU
from ratjones.tangles import IDENTITY, Mat2U, b_matrix, b_product
from ratjones.templates import COL_0, COL_MD, ROW_0, ROW_D, sandwich

ONE = LaurentU({0: 1})
ZERO = LaurentU()


def outer(col, row) -> Mat2U:
    return Mat2U(col[0] * row[0], col[0] * row[1], col[1] * row[0], col[1] * row[1])


def law_conj(n):
    return b_matrix(n).conj_transpose(), -b_matrix(-n)


def law_b0(n, m):
    return b_matrix(n) @ b_matrix(0) @ b_matrix(m), -b_matrix(n + m)


def law_split(n):
    lhs = b_matrix(n).scale(D_U * 1j)
    up, down = LaurentU({n: 1}), LaurentU({-n: 1})
    a = outer((ONE, -D_U), (ONE, ZERO))
    b = outer((ONE, ZERO), (ONE, D_U))
    rhs = Mat2U(
        up * a.a11 - down * b.a11,
        up * a.a12 - down * b.a12,
        up * a.a21 - down * b.a21,
        up * a.a22 - down * b.a22,
    )
    return lhs, rhs


def law_reverse(seq):
    return sandwich(ROW_D, b_product(seq), COL_0), sandwich(ROW_D, b_product(seq[::-1]), COL_0)


def law_reverse_md(seq):
    lhs = sandwich(ROW_D, b_product(seq), COL_MD)
    rhs = (ONE - D_U * D_U) * sandwich(ROW_0, b_product(seq[::-1]), COL_0)
    return lhs, rhs


def law_bar(seq):
    c = b_product(seq)
    return sandwich(ROW_D, c, COL_0).bar_u(), sandwich(ROW_0, c, COL_MD)


def law_bar_star(seq):
    c = b_product(seq)
    return sandwich(ROW_D, c, COL_0).bar_u(), sandwich(ROW_D, c.conj_transpose(), COL_0)


def law_inverse(seq):
    c = b_product(seq)
    b0 = b_matrix(0)
    return c @ -(b0 @ c.conj_transpose() @ b0), IDENTITY


SEQUENCE_LAWS = {
    "v": law_reverse,
    "vi": law_reverse_md,
    "vii": law_bar,
    "vii-star": law_bar_star,
    "ii-inverse": law_inverse,
}

"""
Transfer matrices for rational tangles
======================================

Every twist box ``n`` acts on bracket vectors by a 2x2 matrix ``B_n`` over
Laurent polynomials in ``u``.  This demo checks a few of the identities
those matrices satisfy and shows the pivoting condition in action.
"""

from ratjones import b_matrix, b_product, jones_general, pivot_check, template_pivot
from ratjones.tangles import alpha_of, c_form_verify

print(b_matrix(3))
print("det B_3 =", b_matrix(3).det())

###############################################################################
# Products of B-matrices
# ----------------------
# Products stay unimodular and keep the "alpha, i beta / i gamma, delta"
# shape, where the second row is determined by the first.

m = b_product((5, -2, -4, -4))
print("det =", m.det(), " c-form:", c_form_verify(m))

# B_n B_0 B_m collapses to -B_{n+m}
print(b_matrix(2) @ b_matrix(0) @ b_matrix(3) == -b_matrix(5))

###############################################################################
# Pivoting pairs
# --------------
# Two sequences pivot when ``alpha_1(1/u) alpha_2(u) = alpha_1(u) alpha_2(1/u)``.
# For this pair the alphas share a large factor and differ only by
# bar-invariant pieces.

n1, n2 = (5, -3, -6, -4), (5, -2, -4, -4)
a1, a2 = alpha_of(n1), alpha_of(n2)
print(a1)
print(a2)
print("pivot:", pivot_check(n1, n2))

###############################################################################
# Any pivoting family can replace the single base of the block-reversal move.

A, B = template_pivot([n2, n1], (0,), ("1", "*"))
print(A, "vs", B)
print(jones_general(A) == jones_general(B))

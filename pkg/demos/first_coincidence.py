"""
The smallest Jones coincidence
==============================

Two rational knots with determinant 49 share a Jones polynomial.  Here we
compute both, rebuild the pair from a block-reversal move and ask the
classifier to find that move on its own.
"""

from ratjones import (
    classify_pair,
    eval_cf,
    jones_knot,
    jones_span,
    knot_sequence,
    schubert_canonical,
    template_one,
)

a, b = schubert_canonical(49, 22), schubert_canonical(49, 36)
va, vb = jones_knot(a.p, a.q), jones_knot(b.p, b.q)
print(a, "->", va)
print(b, "->", vb)
print("equal:", va == vb, " span:", jones_span(va))

###############################################################################
# Even continued fractions
# ------------------------
# Each class is evaluated through an even continued fraction (all entries
# even, even length).  The two sequences look nothing alike.

print(knot_sequence(a.p, a.q))
print(knot_sequence(b.p, b.q))

###############################################################################
# The move
# --------
# Starring a block negates and reverses it.  Joining ``n`` and ``n*`` with a
# single twist, then swapping the blocks, produces both knots.

A, B = template_one((2, 4), (1,), ("1", "*"))
print(A, eval_cf(A))
print(B, eval_cf(B))

###############################################################################
# Classification
# --------------
# The bounded search finds a witness of the same shape (possibly a different
# representative) and checks that it regenerates exactly these two classes.

print(classify_pair(a, b))

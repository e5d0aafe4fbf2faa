"""
A small coincidence census
==========================

Enumerate every rational knot class up to a determinant bound, group the
classes by exact Jones polynomial and look at what collides.  The full run
to 900 takes a few minutes; 300 is quick.
"""

import io

import numpy as np

from ratjones import census, emit_report, find_coincidences

BOUND = 300
entries = census(BOUND, jobs=1)
print(len(entries), "classes below", BOUND)

###############################################################################
# Distribution of spans
# ---------------------
# For alternating knots the span of the Jones polynomial is the crossing
# number.

spans = np.array([e.span for e in entries])
counts = np.bincount(spans)
for s in np.flatnonzero(counts):
    print(f"{s:3d} {'#' * int(np.ceil(counts[s] / 40))}")

###############################################################################
# Coincidences
# ------------
# Mirror pairs of groups are reported once.

groups = find_coincidences(BOUND, entries=entries)
print(len(groups), "groups;", sum(len(g.members) == 3 for g in groups), "triples")
for g in groups[:6]:
    print(g.det, ", ".join(map(str, g.members)), "span", g.span)

###############################################################################
# Reports are deterministic CSV or JSON.

buf = io.StringIO()
emit_report(groups[:3], "csv", buf)
print(buf.getvalue())

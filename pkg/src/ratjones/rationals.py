"""Projective rationals, continued fractions and two-bridge knot classes.

Integer sequences are always in display order ``(n_k, ..., n_1)``: the
first entry is the last twist box added.  The fraction of a sequence is
``n_k - 1/(n_{k-1} - 1/(... - 1/n_1))``, built from ``T_inf`` by repeatedly
rotating (``r -> -1/r``) and adding a twist box.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import BadParity, NotAKnot

IntSeq = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Rat:
    """A point of Q u {inf} in lowest terms, ``inf == Rat(1, 0)``.

    Sign convention: ``q >= 0``, and ``p > 0`` when ``q == 0``.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a point of the projective line")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "Rat":
        num, _, den = text.strip().partition("/")
        return cls(int(num), int(den) if den else 1)

    def is_inf(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


INF = Rat(1, 0)


def parse_seq(text: str) -> IntSeq:
    """Parse ``"2,3,-1"`` into a sequence; an empty string is the empty sequence."""
    text = text.strip().strip("()")
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


def format_seq(seq: Iterable[int]) -> str:
    return ",".join(str(n) for n in seq)


def cf_vector(seq: Sequence[int]) -> tuple[int, int]:
    """Unreduced (numerator, denominator) of the sequence, starting from 1/0.

    This is the first column of the product of ``[[n, -1], [1, 0]]``
    matrices, i.e. the transfer matrices at ``u = 1`` up to units.
    """
    a, b = 1, 0
    for n in reversed(seq):
        a, b = n * a - b, a
    return a, b


def eval_cf(seq: Sequence[int]) -> Rat:
    """Fraction of the rational tangle ``R(n_k, ..., n_1)``."""
    return Rat(*cf_vector(seq))


def even_cf(r: Rat) -> IntSeq:
    """The unique even-length, even-entry expansion with nonzero interior entries.

    ``r`` must have odd numerator and even denominator (``inf`` gives ``()``).
    """
    if r.p % 2 == 0 or r.q % 2:
        raise BadParity(f"{r} needs odd numerator and even denominator")
    out: list[int] = []
    a, b = r.p, r.q  # x = a/b, b > 0 when finite
    while b != 0:
        # nearest even integer to a/b; a tie would need an odd integer value
        n = 2 * ((a + b) // (2 * b))
        assert 2 * abs(n * b - a) != 2 * b, "nearest-even tie"
        out.append(n)
        a, b = b, n * b - a  # x <- 1/(n - x)
        if b < 0:
            a, b = -a, -b
    return tuple(out)


def make_q_even(p: int, q: int) -> Rat:
    """Replace ``q`` by a representative of ``q mod p`` that is even."""
    if p % 2 == 0:
        raise NotAKnot(f"numerator {p} is even")
    return Rat(p, q if q % 2 == 0 else q - p)


# ---------------------------------------------------------------------------
# knot classes


@dataclass(frozen=True, order=True)
class KnotClass:
    """Two-bridge knot ``K_{p/q}`` up to Schubert equivalence.

    ``qset`` is the sorted orbit ``{q mod p, q^-1 mod p}``; the unknot has
    ``p == 1`` and ``qset == (0,)``.
    """

    p: int
    qset: tuple[int, ...]
    amphicheiral: bool = False

    @property
    def q(self) -> int:
        return self.qset[0]

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def __contains__(self, q: int) -> bool:
        return q % self.p in self.qset if self.p > 1 else True


def _orbit(p: int, q: int) -> tuple[int, ...]:
    if p == 1:
        return (0,)
    q %= p
    return tuple(sorted({q, pow(q, -1, p)}))


def schubert_canonical(p: int, q: int) -> KnotClass:
    """Canonical class of ``K_{p/q}``; a negative ``p`` is folded into ``q``."""
    if p < 0:
        p, q = -p, -q
    if p == 0 or p % 2 == 0:
        raise NotAKnot(f"numerator {p} is even: the closure is a link")
    if gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not reduced")
    orbit = _orbit(p, q)
    amph = p == 1 or (p - orbit[0]) % p in orbit
    return KnotClass(p, orbit, amph)


def class_of(r: Rat) -> KnotClass:
    return schubert_canonical(r.p, r.q)


def mirror_class(k: KnotClass) -> KnotClass:
    """Class of the mirror image ``K_{p/-q}``."""
    if k.p == 1:
        return k
    return KnotClass(k.p, tuple(sorted((k.p - q) % k.p for q in k.qset)), k.amphicheiral)

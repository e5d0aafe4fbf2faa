"""Exact Laurent polynomials.

Two rings are used throughout:

* :class:`LaurentU` -- Laurent polynomials in ``u`` with Gaussian-integer
  coefficients, where the transfer matrices live.
* :class:`LaurentT` -- Laurent polynomials in ``t`` with integer
  coefficients, where Jones polynomials live.

They are linked by ``t = -u**-2``.  The skein variable ``A`` never appears
in a polynomial: it is identified through ``A**2 = i*u`` (equivalently
``u = -i*A**2``) and only enters via :class:`UnitFactor`.

Coefficients are stored as dense arrays between the lowest and highest
nonzero exponent.  Arrays are ``int64`` while every result provably fits in
62 bits and fall back to ``dtype=object`` (Python integers) otherwise, so
arithmetic is always exact.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .errors import NonReal, NotDivisible, OddPower

_LIMIT = 1 << 62
_EMPTY = np.zeros(0, dtype=np.int64)


# ---------------------------------------------------------------------------
# dense-array helpers


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(a.max(), -a.min()))


def _as_array(values) -> np.ndarray:
    vals = [int(v) for v in values]
    if vals and max(abs(v) for v in vals) >= _LIMIT:
        return np.array(vals, dtype=object)
    return np.array(vals, dtype=np.int64)


def _widen(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def _conv(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size == 0 or b.size == 0:
        return _EMPTY
    if a.dtype == object or b.dtype == object:
        return np.convolve(_widen(a), _widen(b))
    if _absmax(a) * _absmax(b) * min(a.size, b.size) < _LIMIT:
        return np.convolve(a, b)
    return np.convolve(_widen(a), _widen(b))


def _place(lo: int, hi: int, parts) -> np.ndarray:
    """Sum arrays given as (offset, array) pairs onto the window [lo, hi]."""
    wide = any(a.dtype == object for _, a in parts)
    if not wide and sum(_absmax(a) for _, a in parts) >= _LIMIT:
        wide = True
    out = np.zeros(hi - lo + 1, dtype=object if wide else np.int64)
    if wide:
        out[:] = 0
    for off, a in parts:
        if a.size:
            out[off - lo:off - lo + a.size] += a
    return out


def _trim(lo: int, *arrs: np.ndarray):
    a0 = arrs[0]
    if len(arrs) == 1 and a0.size and a0[0] != 0 and a0[-1] != 0:
        if a0.dtype == object and _absmax(a0) < _LIMIT:
            a0 = a0.astype(np.int64)
        return lo, a0
    nz = arrs[0] != 0
    for a in arrs[1:]:
        nz = nz | (a != 0)
    idx = np.flatnonzero(nz)
    if idx.size == 0:
        return (0,) + tuple(_EMPTY for _ in arrs)
    i, j = int(idx[0]), int(idx[-1]) + 1
    out = []
    for a in arrs:
        a = a[i:j]
        if a.dtype == object and _absmax(a) < _LIMIT:
            a = a.astype(np.int64)
        out.append(a)
    return (lo + i,) + tuple(out)


def _divide_exact(lo_a: int, a: np.ndarray, lo_b: int, b: np.ndarray):
    """Exact quotient of Laurent polynomials given as trimmed dense arrays.

    Returns ``(lo_q, q)`` or ``None`` when ``b`` does not divide ``a``.
    """
    if b.size == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.size == 0:
        return 0, _EMPTY
    if a.size < b.size:
        return None
    rem = [int(x) for x in a]
    div = [int(x) for x in b]
    lead = div[0]
    nq = len(rem) - len(div) + 1
    quot = [0] * nq
    # low-to-high division; both arrays start at a nonzero coefficient
    for i in range(nq):
        c = rem[i]
        if c == 0:
            continue
        qi, r = divmod(c, lead)
        if r:
            return None
        quot[i] = qi
        for j, dj in enumerate(div):
            rem[i + j] -= qi * dj
    if any(rem[nq:]):
        return None
    return lo_a - lo_b, _as_array(quot)


# ---------------------------------------------------------------------------
# polynomial text


def _format_terms(pairs, var: str, coef_fmt) -> str:
    if not pairs:
        return "0"
    chunks = []
    for e, c in pairs:
        sign, body = coef_fmt(c)
        if e == 0:
            mono = ""
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if mono and body == "1":
            term = mono
        elif mono:
            term = f"{body}*{mono}"
        else:
            term = body
        chunks.append((sign, term))
    first_sign, first = chunks[0]
    out = ("-" if first_sign < 0 else "") + first
    for sign, term in chunks[1:]:
        out += (" - " if sign < 0 else " + ") + term
    return out


def _int_coef(c: int):
    return (-1 if c < 0 else 1), str(abs(c))


# ---------------------------------------------------------------------------
# Gaussian integers


class GaussInt(NamedTuple):
    re: int
    im: int = 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        return f"({self.re}{self.im:+d}i)"


def _gauss_coef(c: GaussInt):
    if c.im == 0:
        return _int_coef(c.re)
    if c.re == 0:
        s = "i" if abs(c.im) == 1 else f"{abs(c.im)}i"
        return (-1 if c.im < 0 else 1), s
    return 1, str(c)


# ---------------------------------------------------------------------------
# LaurentT


class LaurentT:
    """Laurent polynomial in ``t`` with integer coefficients (immutable)."""

    __slots__ = ("lo", "c")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if not terms:
            self.lo, self.c = 0, _EMPTY
            return
        lo, hi = min(terms), max(terms)
        vals = [0] * (hi - lo + 1)
        for e, v in terms.items():
            vals[e - lo] += int(v)
        self.lo, self.c = _trim(lo, _as_array(vals))

    @classmethod
    def _raw(cls, lo: int, c: np.ndarray) -> "LaurentT":
        obj = cls.__new__(cls)
        obj.lo, obj.c = _trim(lo, c)
        return obj

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentT":
        return cls({exp: coef})

    @classmethod
    def from_json(cls, text_or_pairs) -> "LaurentT":
        pairs = json.loads(text_or_pairs) if isinstance(text_or_pairs, str) else text_or_pairs
        return cls({int(e): int(c) for e, c in pairs})

    # -- inspection
    @property
    def terms(self) -> dict[int, int]:
        return {self.lo + i: int(v) for i, v in enumerate(self.c) if v}

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return self.c.size == 0

    @property
    def min_exp(self) -> int:
        return self.lo

    @property
    def max_exp(self) -> int:
        return self.lo + self.c.size - 1

    def key(self) -> tuple:
        """Canonical hashable form; equal polynomials have equal keys."""
        return (self.lo,) + tuple(int(v) for v in self.c) if self.c.size else ()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentT({0: other})
        if not isinstance(other, LaurentT):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"LaurentT({self})"

    def __str__(self) -> str:
        return _format_terms(self.items(), "t", _int_coef)

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.items()]

    # -- arithmetic
    def _coerce(self, other) -> "LaurentT":
        if isinstance(other, LaurentT):
            return other
        if isinstance(other, (int, np.integer)):
            return LaurentT({0: int(other)})
        raise TypeError(f"cannot combine LaurentT with {type(other).__name__}")

    def __add__(self, other) -> "LaurentT":
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.max_exp, other.max_exp)
        return LaurentT._raw(lo, _place(lo, hi, [(self.lo, self.c), (other.lo, other.c)]))

    __radd__ = __add__

    def __neg__(self) -> "LaurentT":
        obj = LaurentT.__new__(LaurentT)
        obj.lo, obj.c = self.lo, -self.c
        return obj

    def __sub__(self, other) -> "LaurentT":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentT":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentT":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return LaurentT()
        return LaurentT._raw(self.lo + other.lo, _conv(self.c, other.c))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentT":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out, base = LaurentT({0: 1}), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, n: int) -> "LaurentT":
        """Multiply by ``t**n``."""
        obj = LaurentT.__new__(LaurentT)
        obj.lo, obj.c = (self.lo + n if self.c.size else 0), self.c
        return obj

    def bar(self) -> "LaurentT":
        """Substitute ``t -> 1/t``."""
        if self.is_zero():
            return self
        return LaurentT._raw(-self.max_exp, self.c[::-1].copy())

    def exact_div(self, other: "LaurentT") -> "LaurentT":
        """Exact quotient ``q`` with ``q * other == self``."""
        other = self._coerce(other)
        res = _divide_exact(self.lo, self.c, other.lo, other.c)
        if res is None:
            raise NotDivisible(f"{other} does not divide {self}")
        return LaurentT._raw(*res)

    def eval_int(self, t0: int) -> int:
        """Exact value at ``t = t0`` for ``t0`` in {1, -1}."""
        if t0 == 1:
            return sum(int(v) for v in self.c)
        if t0 == -1:
            return sum(int(v) * (-1 if (self.lo + i) % 2 else 1) for i, v in enumerate(self.c))
        raise ValueError("eval_int supports t0 = 1 or -1 only")


# ---------------------------------------------------------------------------
# LaurentU


class LaurentU:
    """Laurent polynomial in ``u`` with Gaussian-integer coefficients (immutable)."""

    __slots__ = ("lo", "re", "im")

    def __init__(self, terms: Mapping[int, object] | None = None):
        if not terms:
            self.lo, self.re, self.im = 0, _EMPTY, _EMPTY
            return
        lo, hi = min(terms), max(terms)
        re = [0] * (hi - lo + 1)
        im = [0] * (hi - lo + 1)
        for e, v in terms.items():
            g = _to_gauss(v)
            re[e - lo] += g.re
            im[e - lo] += g.im
        self.lo, self.re, self.im = _trim(lo, _as_array(re), _as_array(im))

    @classmethod
    def _raw(cls, lo: int, re: np.ndarray, im: np.ndarray) -> "LaurentU":
        obj = cls.__new__(cls)
        obj.lo, obj.re, obj.im = _trim(lo, re, im)
        return obj

    @classmethod
    def monomial(cls, exp: int, coef=1) -> "LaurentU":
        return cls({exp: coef})

    # -- inspection
    @property
    def terms(self) -> dict[int, GaussInt]:
        return {
            self.lo + k: GaussInt(int(r), int(i))
            for k, (r, i) in enumerate(zip(self.re, self.im))
            if r or i
        }

    def items(self) -> list[tuple[int, GaussInt]]:
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return self.re.size == 0

    def is_real(self) -> bool:
        return not self.im.any()

    @property
    def min_exp(self) -> int:
        return self.lo

    @property
    def max_exp(self) -> int:
        return self.lo + self.re.size - 1

    def key(self) -> tuple:
        if self.is_zero():
            return ()
        return (self.lo, tuple(int(v) for v in self.re), tuple(int(v) for v in self.im))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, complex, GaussInt)):
            other = LaurentU({0: other})
        if not isinstance(other, LaurentU):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"LaurentU({self})"

    def __str__(self) -> str:
        return _format_terms(self.items(), "u", _gauss_coef)

    def to_json(self) -> list:
        return [[e, [c.re, c.im]] for e, c in self.items()]

    # -- arithmetic
    def _coerce(self, other) -> "LaurentU":
        if isinstance(other, LaurentU):
            return other
        if isinstance(other, (int, np.integer, complex, GaussInt)):
            return LaurentU({0: other})
        raise TypeError(f"cannot combine LaurentU with {type(other).__name__}")

    def __add__(self, other) -> "LaurentU":
        other = self._coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.max_exp, other.max_exp)
        re = _place(lo, hi, [(self.lo, self.re), (other.lo, other.re)])
        im = _place(lo, hi, [(self.lo, self.im), (other.lo, other.im)])
        return LaurentU._raw(lo, re, im)

    __radd__ = __add__

    def __neg__(self) -> "LaurentU":
        obj = LaurentU.__new__(LaurentU)
        obj.lo, obj.re, obj.im = self.lo, -self.re, -self.im
        return obj

    def __sub__(self, other) -> "LaurentU":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentU":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentU":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return LaurentU()
        if other.re.size == 1:
            return self._scale(other.lo, int(other.re[0]), int(other.im[0]))
        if self.re.size == 1:
            return other._scale(self.lo, int(self.re[0]), int(self.im[0]))
        a_real, b_real = self.is_real(), other.is_real()
        re = _conv(self.re, other.re)
        if a_real and b_real:
            im = np.zeros_like(re)
        elif a_real:
            im = _conv(self.re, other.im)
        elif b_real:
            im = _conv(self.im, other.re)
        else:
            n = re.size
            im = _place(0, n - 1, [(0, _conv(self.re, other.im)), (0, _conv(self.im, other.re))])
            re = _place(0, n - 1, [(0, re), (0, -_conv(self.im, other.im))])
        return LaurentU._raw(self.lo + other.lo, re, im)

    __rmul__ = __mul__

    def times_i_upow(self, n: int) -> "LaurentU":
        """Multiply by ``i * u**n``."""
        return self._scale(n, 0, 1)

    def _scale(self, shift: int, cr: int, ci: int) -> "LaurentU":
        """Multiply by the monomial ``(cr + ci*i) * u**shift``."""
        if (cr, ci) == (1, 0):
            re, im = self.re, self.im
        elif (cr, ci) == (-1, 0):
            re, im = -self.re, -self.im
        elif (cr, ci) == (0, 1):
            re, im = -self.im, self.re
        elif (cr, ci) == (0, -1):
            re, im = self.im, -self.re
        else:
            n = self.re.size - 1
            r, i = np.array([cr], dtype=np.int64), np.array([ci], dtype=np.int64)
            re = _place(0, n, [(0, _conv(self.re, r)), (0, -_conv(self.im, i))])
            im = _place(0, n, [(0, _conv(self.re, i)), (0, _conv(self.im, r))])
        return LaurentU._raw(self.lo + shift, re, im)

    def __pow__(self, n: int) -> "LaurentU":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out, base = LaurentU({0: 1}), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, n: int) -> "LaurentU":
        """Multiply by ``u**n``."""
        obj = LaurentU.__new__(LaurentU)
        obj.lo, obj.re, obj.im = (self.lo + n if self.re.size else 0), self.re, self.im
        return obj

    def bar_u(self) -> "LaurentU":
        """Substitute ``u -> 1/u`` keeping ``i``."""
        if self.is_zero():
            return self
        return LaurentU._raw(-self.max_exp, self.re[::-1].copy(), self.im[::-1].copy())

    def conj_i(self) -> "LaurentU":
        """Substitute ``i -> -i`` keeping ``u``."""
        obj = LaurentU.__new__(LaurentU)
        obj.lo, obj.re, obj.im = self.lo, self.re, -self.im
        return obj

    def exact_div(self, other: "LaurentU") -> "LaurentU":
        """Exact quotient by a divisor with real coefficients."""
        other = self._coerce(other)
        if not other.is_real():
            raise NotImplementedError("exact division is implemented for real divisors only")
        div = LaurentT._raw(other.lo, other.re)
        qr = LaurentT._raw(self.lo, self.re).exact_div(div)
        qi = LaurentT._raw(self.lo, self.im).exact_div(div)
        terms = {e: GaussInt(c, 0) for e, c in qr.terms.items()}
        for e, c in qi.terms.items():
            terms[e] = GaussInt(terms.get(e, GaussInt(0, 0)).re, c)
        return LaurentU(terms)

    def to_t(self) -> LaurentT:
        return u_to_t(self)


def _to_gauss(v) -> GaussInt:
    if isinstance(v, GaussInt):
        return v
    if isinstance(v, tuple):
        return GaussInt(int(v[0]), int(v[1]))
    if isinstance(v, complex):
        if v.real != int(v.real) or v.imag != int(v.imag):
            raise ValueError(f"non-integral coefficient {v}")
        return GaussInt(int(v.real), int(v.imag))
    return GaussInt(int(v), 0)


# ---------------------------------------------------------------------------
# ring constants and bridges

ONE_U = LaurentU({0: 1})
I_U = LaurentU({0: 1j})
U = LaurentU({1: 1})
U_INV = LaurentU({-1: 1})
# d = -A^2 - A^-2 = i(u^-1 - u)
D_U = LaurentU({-1: 1j, 1: -1j})
ONE_T = LaurentT({0: 1})
T = LaurentT({1: 1})


@lru_cache(maxsize=4096)
def qnumber(n: int) -> LaurentU:
    """The quantum integer ``[n] = (u**n - u**-n) / (u - u**-1)``."""
    if n == 0:
        return LaurentU()
    sign = 1 if n > 0 else -1
    m = abs(n)
    return LaurentU({e: sign for e in range(-(m - 1), m, 2)})


def u_to_t(a: LaurentU) -> LaurentT:
    """Rewrite a real polynomial in even powers of ``u`` via ``t = -u**-2``."""
    if not a.is_real():
        raise NonReal(f"imaginary coefficients in {a}")
    terms = {}
    for e, c in a.items():
        if e % 2:
            raise OddPower(f"odd power u^{e} in {a}")
        k = -e // 2
        terms[k] = c.re * (-1 if k % 2 else 1)
    return LaurentT(terms)


def t_to_u(a: LaurentT) -> LaurentU:
    """Inverse of :func:`u_to_t`."""
    return LaurentU({-2 * k: c * (-1 if k % 2 else 1) for k, c in a.items()})


class UnitFactor(NamedTuple):
    """The unit ``i**ipow * A**apow`` with ``A**2 = i*u``."""

    ipow: int = 0
    apow: int = 0

    def __mul__(self, other: "UnitFactor") -> "UnitFactor":
        return UnitFactor((self.ipow + other.ipow) % 4, self.apow + other.apow)

    def normalized(self) -> "UnitFactor":
        return UnitFactor(self.ipow % 4, self.apow)


_I_POW = [GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1)]


def _gmul(a: GaussInt, b: GaussInt) -> GaussInt:
    return GaussInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


def resolve_in_a(poly: LaurentU, unit: UnitFactor = UnitFactor()) -> dict[int, GaussInt]:
    """Express ``unit * poly`` as a Laurent polynomial in ``A`` (exponent -> coefficient).

    Uses ``u = -i*A**2``, so ``u**e = (-i)**e * A**(2e)``.
    """
    out: dict[int, GaussInt] = {}
    for e, c in poly.items():
        coef = _gmul(c, _I_POW[(unit.ipow + 3 * e) % 4])
        k = 2 * e + unit.apow
        prev = out.get(k, GaussInt(0, 0))
        s = GaussInt(prev.re + coef.re, prev.im + coef.im)
        if s == (0, 0):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def poly_arith(a, b, op: str):
    """Functional form of the ring operations: ``op`` in add|sub|mul|neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def exact_div(a: LaurentT, b: LaurentT) -> LaurentT:
    return a.exact_div(b)


def eval_int(a: LaurentT, t0: int) -> int:
    return a.eval_int(t0)


def bar_u(a: LaurentU) -> LaurentU:
    return a.bar_u()


def conj_i(a: LaurentU) -> LaurentU:
    return a.conj_i()


def laurent_t(pairs: Iterable[tuple[int, int]]) -> LaurentT:
    """Build a :class:`LaurentT` from (exponent, coefficient) pairs."""
    out: dict[int, int] = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
    return LaurentT(out)

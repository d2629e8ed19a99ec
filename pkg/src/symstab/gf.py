"""Arithmetic for F_q = F_{p^r} with the trace map and additive character.

Elements are encoded as integers in [0, q): the element with power-basis
coordinates (c_0, ..., c_{r-1}) over F_p is stored as sum_i c_i * p^i.
The encoding gives a total order and direct array indexing, which the
state-vector code relies on.

Phases live in the exponent group Z_p: the additive character of x is
omega^char_exp(x) with omega = exp(2*pi*i/p).  All group identities are
checked on integer exponents; complex numbers appear only when a dense
operator or state vector is materialised.
"""

from __future__ import annotations

import cmath
from functools import lru_cache

from .errors import (
    InvalidInputError,
    MissingModulusError,
    NonPrimeError,
    ReducibleModulusError,
)

# q*q multiplication/addition tables get built eagerly; past this size the
# memory cost stops being negligible and the package's enumeration methods
# would not finish anyway.
_MAX_Q = 4096


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m, coefficients in F_p."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead == 0:
            a.pop()
            continue
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(tuple(a))


def _check_irreducible(modulus: tuple[int, ...], p: int, r: int) -> None:
    """Reject reducible moduli by exhaustive trial division.

    Divisors of degree up to r//2 are enumerated directly (p^(r//2)
    candidates -- small by the q <= 4096 cap), which subsumes the root
    check as the degree-1 case.
    """
    for deg in range(1, r // 2 + 1):
        for idx in range(p**deg):
            cand = [0] * deg + [1]
            t = idx
            for i in range(deg):
                cand[i] = t % p
                t //= p
            if not _poly_mod(modulus, tuple(cand), p):
                raise ReducibleModulusError(
                    f"modulus {list(modulus)} has factor {cand} over F_{p}"
                )


class FieldCtx:
    """Immutable arithmetic context for F_q, q = p^r.

    Construct via :func:`make_field`.  All operations are pure table
    lookups after construction, so a context is safe to share between
    worker processes and threads.
    """

    __slots__ = ("p", "r", "q", "modulus", "_add", "_mul", "_neg", "_inv", "_trace")

    def __init__(self, p: int, r: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, r, q = self.p, self.r, self.q
        digits = [tuple((x // p**i) % p for i in range(r)) for x in range(q)]

        def enc(c: tuple[int, ...]) -> int:
            v = 0
            for i in range(len(c)):
                v += c[i] * p**i
            return v

        self._add = [
            [enc(tuple((a + b) % p for a, b in zip(digits[x], digits[y]))) for y in range(q)]
            for x in range(q)
        ]
        self._neg = [enc(tuple((-a) % p for a in digits[x])) for x in range(q)]

        mod = self.modulus
        mul = []
        for x in range(q):
            row = []
            dx = _poly_trim(digits[x])
            for y in range(q):
                prod = _poly_mul(dx, _poly_trim(digits[y]), p)
                if mod is not None:
                    prod = _poly_mod(prod, mod, p)
                row.append(enc(prod + (0,) * (r - len(prod))))
            mul.append(row)
        self._mul = mul

        self._inv = [0] * q
        for x in range(1, q):
            for y in range(1, q):
                if mul[x][y] == 1:
                    self._inv[x] = y
                    break
            else:
                raise ReducibleModulusError(
                    f"element {x} has no inverse; modulus is not irreducible"
                )

        # Tr(x) = x + x^p + ... + x^(p^(r-1)); lands in the prime subfield,
        # whose elements are encoded as the integers 0..p-1.
        trace = []
        for x in range(q):
            acc, frob = 0, x
            for _ in range(r):
                acc = self._add[acc][frob]
                frob = self._pow(frob, p)
            assert acc < p, "trace left the prime subfield"
            trace.append(acc)
        self._trace = trace

    def _pow(self, x: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._mul[acc][x]
            x = self._mul[x][x]
            e >>= 1
        return acc

    # -- element arithmetic -------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def neg(self, x: int) -> int:
        return self._neg[x]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._inv[x]

    def dot(self, xs, ys) -> int:
        """Inner product sum_i xs[i]*ys[i] in F_q."""
        if len(xs) != len(ys):
            raise InvalidInputError("dot: length mismatch")
        acc = 0
        for a, b in zip(xs, ys):
            acc = self._add[acc][self._mul[a][b]]
        return acc

    # -- character ----------------------------------------------------------

    def trace(self, x: int) -> int:
        """Field trace down to F_p, returned as an integer in [0, p)."""
        return self._trace[x]

    def char_exp(self, x: int) -> int:
        """Exponent e of the additive character value omega^e at x.

        The character is omega_tilde(x) = exp(2*pi*i*trace(x)/p), the
        canonical nontrivial additive character of F_q.
        """
        return self._trace[x]

    def phase(self, e: int) -> complex:
        """Complex value omega^e for a phase exponent e in Z_p."""
        return _phase_value(self.p, e % self.p)

    def elements(self) -> range:
        return range(self.q)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        if self.r == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, r={self.r}, modulus={list(self.modulus)})"


@lru_cache(maxsize=None)
def _phase_value(p: int, e: int) -> complex:
    return cmath.exp(2j * cmath.pi * e / p)


@lru_cache(maxsize=None)
def _cached_field(p: int, r: int, modulus: tuple[int, ...] | None) -> FieldCtx:
    return FieldCtx(p, r, modulus)


def make_field(p: int, r: int = 1, modulus=None) -> FieldCtx:
    """Create the field F_{p^r}.

    `modulus` is the coefficient list (c_0, ..., c_r) of a monic irreducible
    degree-r polynomial over F_p; it is required exactly when r > 1.
    Irreducibility is verified by exhaustive trial division.
    """
    if not _is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if r < 1:
        raise InvalidInputError(f"extension degree must be >= 1, got {r}")
    if p**r > _MAX_Q:
        raise InvalidInputError(f"field size {p}^{r} exceeds supported limit {_MAX_Q}")

    if r == 1:
        if modulus is not None:
            raise InvalidInputError("modulus must be omitted for prime fields")
        return _cached_field(p, 1, None)

    if modulus is None:
        raise MissingModulusError(f"degree-{r} extension of F_{p} needs a modulus")
    mt = tuple(int(c) % p for c in modulus)
    if len(mt) != r + 1 or mt[-1] != 1:
        raise ReducibleModulusError(
            f"modulus must be monic of degree {r}, got coefficients {list(modulus)}"
        )
    _check_irreducible(mt, p, r)
    return _cached_field(p, r, mt)

"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are represented on the power basis 1, z, ..., z^(phi(n)-1) where z is
a fixed primitive n-th root of unity and phi is Euler's function. Reduction is
modulo the n-th cyclotomic polynomial Phi_n, computed by exact division of
x^n - 1 by the Phi_d for proper divisors d. All coefficients are rational and
exact; internally a value is stored as an integer coefficient vector over a
single positive denominator in lowest terms.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import CapExceeded, ContextMismatch, InternalInconsistency, NotCoprime

CONDUCTOR_CAP = 10**6


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in _factorize(n).items():
        out *= (p - 1) * p ** (e - 1)
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Monic divisor, division known exact; remainder is checked anyway.
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in reversed(range(len(out))):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num):
        raise InternalInconsistency("cyclotomic polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n in ascending degree order."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CyclotomicContext:
    """Shared reduction data for one conductor n.

    Contexts are interned by `context(n)`; two values interoperate exactly when
    their contexts have the same n. The reduction rows give x^(phi+k) mod Phi_n
    for the exponents a product of two reduced elements can reach.
    """

    __slots__ = (
        "n",
        "phi",
        "modulus",
        "reduction_rows",
        "_monomials",
        "_galois_rows",
        "_np_reduction",
        "_np_galois",
        "zero",
        "one",
    )

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.phi = len(self.modulus) - 1
        phi = self.phi
        rows: list[tuple[int, ...]] = []
        cur = [-c for c in self.modulus[:phi]]
        rows.append(tuple(cur))
        for _ in range(1, max(phi - 1, 1)):
            top = cur[phi - 1]
            cur = [0] + cur[: phi - 1]
            if top:
                cur = [a + top * b for a, b in zip(cur, rows[0])]
            rows.append(tuple(cur))
        self.reduction_rows = tuple(rows)
        self._monomials: dict[int, tuple[int, ...]] = {}
        self._galois_rows: dict[int, tuple[tuple[int, ...], ...]] = {}
        self._np_reduction: np.ndarray | None = None
        self._np_galois: dict[int, np.ndarray] = {}
        self.zero = CycNum(self, (0,) * phi, 1)
        self.one = CycNum(self, (1,) + (0,) * (phi - 1), 1)

    def __repr__(self) -> str:
        return f"CyclotomicContext(n={self.n})"

    def _reduce(self, prod: list[int]) -> list[int]:
        phi = self.phi
        out = prod[:phi] + [0] * (phi - len(prod))
        for k in range(phi, len(prod)):
            c = prod[k]
            if c:
                row = self.reduction_rows[k - phi]
                for i in range(phi):
                    out[i] += c * row[i]
        return out

    def _mul_vectors(self, a, b) -> list[int]:
        prod = [0] * (2 * self.phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return self._reduce(prod)

    def monomial_coeffs(self, t: int) -> tuple[int, ...]:
        """x^t mod Phi_n as an integer vector (zeta_n^t on the power basis)."""
        t %= self.n
        if t < self.phi:
            row = [0] * self.phi
            row[t] = 1
            return tuple(row)
        hit = self._monomials.get(t)
        if hit is not None:
            return hit
        if t - self.phi < len(self.reduction_rows):
            row = self.reduction_rows[t - self.phi]
        else:
            half = self.monomial_coeffs(t // 2)
            row = self._mul_vectors(half, half)
            if t % 2:
                row = self._reduce([0] + list(row))
            row = tuple(row)
        self._monomials[t] = tuple(row)
        return self._monomials[t]

    def galois_rows(self, k: int) -> tuple[tuple[int, ...], ...]:
        """Row i is the image of the basis monomial z^i under z -> z^k."""
        k %= self.n
        if gcd(k, self.n) != 1:
            raise NotCoprime(f"galois exponent {k} not coprime to {self.n}")
        hit = self._galois_rows.get(k)
        if hit is None:
            hit = tuple(self.monomial_coeffs(i * k) for i in range(self.phi))
            self._galois_rows[k] = hit
        return hit

    def reduction_matrix(self) -> np.ndarray:
        """(2*phi-1, phi) int64 matrix sending raw product coefficients to reduced ones."""
        if self._np_reduction is None:
            phi = self.phi
            m = np.zeros((2 * phi - 1, phi), dtype=np.int64)
            for t in range(phi):
                m[t, t] = 1
            for k in range(phi, 2 * phi - 1):
                m[k, :] = self.reduction_rows[k - phi]
            self._np_reduction = m
        return self._np_reduction

    def galois_matrix(self, k: int) -> np.ndarray:
        k %= self.n
        hit = self._np_galois.get(k)
        if hit is None:
            hit = np.array(self.galois_rows(k), dtype=np.int64)
            self._np_galois[k] = hit
        return hit

    def root(self, k: int = 1) -> CycNum:
        """zeta_n^k as an exact value."""
        return CycNum(self, self.monomial_coeffs(k), 1)

    def from_rational(self, x) -> CycNum:
        x = Fraction(x)
        vec = (x.numerator,) + (0,) * (self.phi - 1)
        return CycNum(self, vec, x.denominator)

    def from_coeffs(self, coeffs) -> CycNum:
        """Build a value from phi(n) rational coefficients on the power basis."""
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != self.phi:
            raise ContextMismatch(
                f"expected {self.phi} coefficients for conductor {self.n}, got {len(fr)}"
            )
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = tuple(c.numerator * (den // c.denominator) for c in fr)
        return CycNum(self, nums, den)


_CONTEXTS: dict[int, CyclotomicContext] = {}


def context(n: int) -> CyclotomicContext:
    """Interned arithmetic context for Q(zeta_n)."""
    if not isinstance(n, int) or n < 1:
        raise ContextMismatch(f"conductor must be a positive integer, got {n!r}")
    if n > CONDUCTOR_CAP:
        raise CapExceeded(f"conductor {n} exceeds cap {CONDUCTOR_CAP}")
    ctx = _CONTEXTS.get(n)
    if ctx is None:
        ctx = CyclotomicContext(n)
        _CONTEXTS[n] = ctx
    return ctx


def root(ctx: CyclotomicContext, k: int = 1) -> CycNum:
    return ctx.root(k)


class CycNum:
    """An element of Q(zeta_n), exact.

    Canonical form: integer numerator vector of length phi(n) over a positive
    denominator with gcd(den, gcd(nums)) = 1. Equality and hashing are on the
    canonical form, so they are decidable and exact.
    """

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: CyclotomicContext, num, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("cyclotomic denominator is zero")
        num = tuple(int(c) for c in num)
        den = int(den)
        if den < 0:
            den = -den
            num = tuple(-c for c in num)
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = tuple(c // g for c in num)
        self.ctx = ctx
        self.num = num
        self.den = den

    # -- basic structure -------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction | None:
        """The value as a Fraction, or None if it is irrational."""
        if self.is_rational():
            return Fraction(self.num[0], self.den)
        return None

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def __bool__(self) -> bool:
        return any(self.num)

    def __eq__(self, other) -> bool:
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self.ctx.n == other.ctx.n
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self) -> int:
        return hash((self.ctx.n, self.den, self.num))

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        _check(self, other)
        da, db = self.den, other.den
        g = gcd(da, db)
        la, lb = db // g, da // g
        num = tuple(a * la + b * lb for a, b in zip(self.num, other.num))
        return CycNum(self.ctx, num, da * la)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.ctx, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(self.ctx, other)
        if other is NotImplemented:
            return NotImplemented
        _check(self, other)
        if other.is_rational():
            return CycNum(
                self.ctx,
                tuple(c * other.num[0] for c in self.num),
                self.den * other.den,
            )
        if self.is_rational():
            return CycNum(
                self.ctx,
                tuple(c * self.num[0] for c in other.num),
                self.den * other.den,
            )
        num = self.ctx._mul_vectors(self.num, other.num)
        return CycNum(self.ctx, num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = self.ctx.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- field automorphisms ---------------------------------------------

    def galois(self, k: int) -> CycNum:
        """Image under the automorphism zeta -> zeta^k, k coprime to n."""
        rows = self.ctx.galois_rows(k)
        acc = [0] * self.ctx.phi
        for i, c in enumerate(self.num):
            if c:
                row = rows[i]
                for j in range(self.ctx.phi):
                    acc[j] += c * row[j]
        return CycNum(self.ctx, acc, self.den)

    def conjugate(self) -> CycNum:
        if self.ctx.n <= 2:
            return self
        return self.galois(self.ctx.n - 1)

    def abs_squared(self) -> CycNum:
        """|z|^2 = z * conj(z), exact (real but not rational in general)."""
        return self * self.conjugate()

    # -- conversions -----------------------------------------------------

    def __complex__(self) -> complex:
        n = self.ctx.n
        acc = 0j
        for i, c in enumerate(self.num):
            if c:
                acc += c * cmath.exp(2j * cmath.pi * i / n)
        return acc / self.den

    def to_obj(self) -> dict:
        """JSON-ready form: conductor and power basis coefficients as strings."""
        return {"n": self.ctx.n, "coeffs": [str(c) for c in self.coeffs]}

    def to_string(self) -> str:
        """Human form using E(n) for zeta_n, e.g. '1/2+E(8)-E(8)^3'."""
        if not self:
            return "0"
        n = self.ctx.n
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                body = str(c)
            else:
                mono = f"E({n})" if i == 1 else f"E({n})^{i}"
                if c == 1:
                    body = mono
                elif c == -1:
                    body = "-" + mono
                else:
                    body = f"{c}*{mono}"
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Cyc({self.to_string()})"


def _coerce(ctx: CyclotomicContext, x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return ctx.from_rational(x)
    return NotImplemented


def _check(a: CycNum, b: CycNum) -> None:
    if a.ctx.n != b.ctx.n:
        raise ContextMismatch(f"mixed conductors {a.ctx.n} and {b.ctx.n}")


def cycnum_from_obj(obj: dict) -> CycNum:
    ctx = context(int(obj["n"]))
    return ctx.from_coeffs([Fraction(c) for c in obj["coeffs"]])


def embed(a: CycNum, target: CyclotomicContext) -> CycNum:
    """Rewrite a in Q(zeta_m) for a multiple m of its conductor."""
    n = a.ctx.n
    if target.n == n:
        return a
    if target.n % n != 0:
        raise ContextMismatch(f"cannot embed conductor {n} into {target.n}")
    step = target.n // n
    acc = [0] * target.phi
    for i, c in enumerate(a.num):
        if c:
            row = target.monomial_coeffs(i * step)
            for j in range(target.phi):
                acc[j] += c * row[j]
    return CycNum(target, acc, a.den)


def descend(a: CycNum, target: CyclotomicContext) -> CycNum:
    """Rewrite a in Q(zeta_m) for a divisor m of its conductor.

    Raises ValueError if the value does not actually lie in the subfield.
    """
    n = a.ctx.n
    if target.n == n:
        return a
    if n % target.n != 0:
        raise ContextMismatch(f"cannot descend conductor {n} to {target.n}")
    cols = []
    for i in range(target.phi):
        cols.append(embed(target.root(i), a.ctx).coeffs)
    sol = _solve_columns(cols, a.coeffs)
    if sol is None:
        raise ValueError(f"value is not in Q(zeta_{target.n})")
    return target.from_coeffs(sol)


def _solve_columns(cols, rhs):
    # Exact least-structure Gaussian elimination on [cols | rhs] over Q.
    rows = len(rhs)
    ncols = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(ncols)] + [Fraction(rhs[i])] for i in range(rows)]
    piv_cols: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, rows) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][ncols]
    return sol

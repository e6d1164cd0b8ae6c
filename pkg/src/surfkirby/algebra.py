"""Exact arithmetic in cyclotomic fields and exact inertia of symmetric matrices.

Elements of Q(zeta_N) are stored in the power basis 1, z, ..., z^(phi(N)-1)
reduced modulo the N-th cyclotomic polynomial, so equality is a tuple
comparison.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists are low-degree first; den must be monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        lead = num[-1]
        q[shift] = lead
        for i, c in enumerate(den):
            num[shift + i] -= lead * c
        while num and num[-1] == 0:
            num.pop()
    return q, num


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(_cyclotomic(d)))
            assert not any(rem)
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic polynomial needs n >= 1")
    return list(_cyclotomic(n))


def euler_phi(n: int) -> int:
    return len(_cyclotomic(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coefficient vectors of z^k for 0 <= k < 2*phi(n) and k < n."""
    phi = euler_phi(n)
    poly = _cyclotomic(n)
    rows = []
    cur = [Fraction(0)] * phi
    if phi:
        cur[0] = Fraction(1)
    for _ in range(max(n, 2 * phi)):
        rows.append(tuple(cur))
        # multiply by z and reduce using z^phi = -sum(poly[i] z^i)
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * poly[i]
    return tuple(rows)


class CycloNumber:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("modulus", "coeffs", "_hash")

    def __init__(self, modulus: int, coeffs: Iterable = ()) -> None:
        if modulus < 1:
            raise ValueError("modulus must be positive")
        phi = euler_phi(modulus)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            table = _power_table(modulus)
            red = [Fraction(0)] * phi
            for k, c in enumerate(cs):
                if c:
                    row = table[k] if k < len(table) else _reduce_power(modulus, k)
                    for i in range(phi):
                        red[i] += c * row[i]
            cs = red
        cs += [Fraction(0)] * (phi - len(cs))
        self.modulus = modulus
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _from_reduced(cls, modulus: int, coeffs: tuple[Fraction, ...]) -> CycloNumber:
        # trusted path: coeffs are Fractions already of length phi(modulus)
        obj = object.__new__(cls)
        obj.modulus = modulus
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def _from_product(cls, modulus: int, prod: list[Fraction]) -> CycloNumber:
        phi = euler_phi(modulus)
        table = _power_table(modulus)
        red = prod[:phi]
        for k in range(phi, len(prod)):
            c = prod[k]
            if c:
                row = table[k]
                for i in range(phi):
                    if row[i]:
                        red[i] += c * row[i]
        return cls._from_reduced(modulus, tuple(red))

    # constructors -----------------------------------------------------
    @classmethod
    def from_int(cls, modulus: int, value) -> CycloNumber:
        return cls(modulus, [value])

    @classmethod
    def zero(cls, modulus: int) -> CycloNumber:
        return cls(modulus)

    @classmethod
    def one(cls, modulus: int) -> CycloNumber:
        return cls(modulus, [1])

    @classmethod
    def from_powers(cls, modulus: int, powers: dict[int, object]) -> CycloNumber:
        """Sum of c * zeta^k over the given {k: c} mapping."""
        table = _power_table(modulus)
        phi = euler_phi(modulus)
        acc = [Fraction(0)] * phi
        for k, c in powers.items():
            if not c:
                continue
            row = table[k % modulus]
            c = Fraction(c)
            for i in range(phi):
                acc[i] += c * row[i]
        return cls(modulus, acc)

    # basic protocol ---------------------------------------------------
    def _coerce(self, other) -> CycloNumber:
        if isinstance(other, CycloNumber):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed cyclotomic moduli {self.modulus} and {other.modulus}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber(self.modulus, [other])
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs == CycloNumber(self.modulus, [other]).coeffs
        if not isinstance(other, CycloNumber):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.modulus, self.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNumber._from_reduced(self.modulus,
                                         tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber._from_reduced(self.modulus, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> CycloNumber:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> CycloNumber:
        return (-self) + other

    def __mul__(self, other) -> CycloNumber:
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloNumber._from_reduced(self.modulus, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        bs = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in bs:
                    prod[i + j] += a * b
        return CycloNumber._from_product(self.modulus, prod)

    __rmul__ = __mul__

    def __truediv__(self, other) -> CycloNumber:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of cyclotomic number by zero")
            return CycloNumber(self.modulus, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other) -> CycloNumber:
        return self.inv() * other

    def __pow__(self, k: int) -> CycloNumber:
        if k < 0:
            return self.inv() ** (-k)
        result = CycloNumber.one(self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> CycloNumber:
        """Image under zeta -> zeta^-1 (complex conjugation)."""
        n = self.modulus
        return CycloNumber.from_powers(n, {(-k) % n: c for k, c in enumerate(self.coeffs) if c})

    def inv(self) -> CycloNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        r0 = [Fraction(c) for c in _cyclotomic(self.modulus)]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        # Phi_N is irreducible, so the remainder chain ends at a nonzero constant
        while len(r1) > 1:
            q, r = _fdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fsub(s0, _fmul(q, s1))
        return CycloNumber(self.modulus, [c / r1[0] for c in s1])

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.modulus)
        return complex(sum(float(c) * z ** k for k, c in enumerate(self.coeffs)))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    # rendering --------------------------------------------------------
    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append(str(c) if not mono else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CycloNumber({self.modulus}, {self})"

    def float_str(self) -> str:
        return format_complex(self.to_complex())


def format_complex(z: complex) -> str:
    """``x+yi`` with 9 decimals; parts that round to zero print as ``0``."""
    def part(x: float, sign: bool) -> str:
        if abs(x) < 5e-10:
            return "+0" if sign else "0"
        return f"{x:+.9f}" if sign else f"{x:.9f}"
    return f"{part(z.real, False)}{part(z.imag, True)}i"


def _reduce_power(n: int, k: int) -> tuple[Fraction, ...]:
    return _power_table(n)[k % n]


def _trim(p: list[Fraction]) -> list[Fraction]:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def _fmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _fsub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _fdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _trim(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a = _trim(a)
    return _trim(q), a


@lru_cache(maxsize=None)
def _zeta_pow_cached(n: int, k: int) -> CycloNumber:
    return CycloNumber(n, _power_table(n)[k])


def zeta_pow(n: int, k: int) -> CycloNumber:
    """zeta_n ** k in canonical form."""
    return _zeta_pow_cached(n, k % n)


# inertia ------------------------------------------------------------------

@dataclass(frozen=True)
class InertiaTriple:
    b_plus: int
    b_minus: int
    b_zero: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.b_plus, self.b_minus, self.b_zero)


def inertia(matrix: Sequence[Sequence[int]]) -> InertiaTriple:
    """Signature counts of a symmetric rational matrix.

    Exact symmetric congruence diagonalization over Q; pivots on the
    largest diagonal entry, and when the active diagonal is zero folds a
    row/column with a nonzero off-diagonal entry into the pivot first.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inertia needs a square matrix")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("inertia needs a symmetric matrix")
    plus = minus = 0
    active = list(range(n))
    while active:
        piv = max(active, key=lambda i: abs(a[i][i]))
        if a[piv][piv] == 0:
            pair = next(((i, j) for i in active for j in active
                         if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes a[i][i] = 2 a[i][j] + a[j][j]
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            plus += 1
        else:
            minus += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / p
            if f:
                for k in active:
                    a[i][k] -= f * a[piv][k]
        for i in active:
            a[i][piv] = a[piv][i] = Fraction(0)
    return InertiaTriple(plus, minus, n - plus - minus)

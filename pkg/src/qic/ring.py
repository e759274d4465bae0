"""Amplitude backends for exact simulation.

The exact backend stores amplitudes as elements of the ring generated by
the primitive eighth root of unity w = exp(i*pi/4), with a power-of-sqrt(2)
denominator:

    (a + b*w + c*w^2 + d*w^3) / sqrt(2)^k,   a,b,c,d integers, k >= 0.

Every matrix entry of the non-parameterized gate set lives in this ring, so
Clifford+T circuits simulate with no rounding at all.  The approximate
backend is plain double-precision ``complex``.
"""
from __future__ import annotations

from dataclasses import dataclass

_INV_SQRT2 = 2.0 ** -0.5

# Approximate amplitudes are built-in complex numbers.
ApproxAmplitude = complex


def _canonical(a: int, b: int, c: int, d: int, k: int) -> tuple[int, int, int, int, int]:
    # Divide numerator by sqrt(2) = w - w^3 while possible; keeps k minimal.
    while k > 0 and (a + c) % 2 == 0 and (b + d) % 2 == 0:
        a, b, c, d = (b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2
        k -= 1
    return a, b, c, d, k


def _times_sqrt2(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    return b - d, a + c, b + d, c - a


class RingElement:
    """Immutable exact amplitude; always held in canonical form."""

    __slots__ = ("a", "b", "c", "d", "k")

    def __init__(self, a: int, b: int, c: int, d: int, k: int = 0):
        if k < 0:
            raise ValueError("denominator exponent must be nonnegative")
        a, b, c, d, k = _canonical(a, b, c, d, k)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    @classmethod
    def from_int(cls, x: int) -> RingElement:
        return cls(x, 0, 0, 0, 0)

    @property
    def coeffs(self) -> tuple[int, int, int, int, int]:
        return self.a, self.b, self.c, self.d, self.k

    def __repr__(self) -> str:
        return f"RingElement({self.a}, {self.b}, {self.c}, {self.d}, k={self.k})"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RingElement.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return (self.a, self.b, self.c, self.d) != (0, 0, 0, 0)

    def __add__(self, other) -> RingElement:
        if isinstance(other, int):
            other = RingElement.from_int(other)
        elif not isinstance(other, RingElement):
            return NotImplemented
        a, b, c, d, k = self.coeffs
        e, f, g, h, j = other.coeffs
        while k < j:
            a, b, c, d = _times_sqrt2(a, b, c, d)
            k += 1
        while j < k:
            e, f, g, h = _times_sqrt2(e, f, g, h)
            j += 1
        return RingElement(a + e, b + f, c + g, d + h, k)

    __radd__ = __add__

    def __neg__(self) -> RingElement:
        return RingElement(-self.a, -self.b, -self.c, -self.d, self.k)

    def __sub__(self, other) -> RingElement:
        if isinstance(other, int):
            other = RingElement.from_int(other)
        elif not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RingElement:
        return (-self) + other

    def __mul__(self, other) -> RingElement:
        if isinstance(other, int):
            other = RingElement.from_int(other)
        elif not isinstance(other, RingElement):
            return NotImplemented
        x = (self.a, self.b, self.c, self.d)
        y = (other.a, other.b, other.c, other.d)
        out = [0, 0, 0, 0]
        for i in range(4):
            xi = x[i]
            if xi == 0:
                continue
            for j in range(4):
                yj = y[j]
                if yj == 0:
                    continue
                p = i + j
                if p < 4:
                    out[p] += xi * yj
                else:
                    out[p - 4] -= xi * yj  # w^4 = -1
        return RingElement(out[0], out[1], out[2], out[3], self.k + other.k)

    __rmul__ = __mul__

    def conjugate(self) -> RingElement:
        # w -> w^-1 = -w^3, w^2 -> -w^2, w^3 -> -w
        return RingElement(self.a, -self.d, -self.c, -self.b, self.k)

    def abs_sq(self) -> RingElement:
        return self * self.conjugate()

    def to_complex(self) -> complex:
        re = self.a + (self.b - self.d) * _INV_SQRT2
        im = self.c + (self.b + self.d) * _INV_SQRT2
        return complex(re, im) * 2.0 ** (-0.5 * self.k)


RING_ZERO = RingElement(0, 0, 0, 0)
RING_ONE = RingElement(1, 0, 0, 0)
RING_I = RingElement(0, 0, 1, 0)
RING_OMEGA = RingElement(0, 1, 0, 0)
RING_OMEGA_INV = RingElement(0, 0, 0, -1)
RING_INV_SQRT2 = RingElement(1, 0, 0, 0, 1)
RING_SQRT2 = RingElement(0, 1, 0, -1)


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def ring_conj(x: RingElement) -> RingElement:
    return x.conjugate()


def ring_to_approx(x: RingElement) -> ApproxAmplitude:
    return x.to_complex()


@dataclass(frozen=True)
class Tolerance:
    """Numerical threshold for the float backend; the exact backend ignores it."""

    eps: float = 1e-9

    def __post_init__(self):
        if not (0.0 <= self.eps < 1.0):
            raise ValueError(f"tolerance must be in [0, 1), got {self.eps}")


def as_eps(tol: Tolerance | float) -> float:
    """Accept either a Tolerance or a bare float and return the epsilon."""
    if isinstance(tol, Tolerance):
        return tol.eps
    eps = float(tol)
    if not (0.0 <= eps < 1.0):
        raise ValueError(f"tolerance must be in [0, 1), got {eps}")
    return eps

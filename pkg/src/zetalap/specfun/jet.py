"""Truncated Taylor arithmetic in one complex variable.

A :class:`Jet` stores normalised Taylor coefficients ``c[k] = f^(k)(x0)/k!``
so that products are Cauchy products truncated at the jet order.  The public
accessors ``d0 .. d3`` and :meth:`derivatives` return plain derivatives.
"""

from __future__ import annotations

import cmath
from math import factorial
from typing import Iterable, Sequence

from ..errors import PoleError


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[complex]):
        self.c = tuple(complex(v) for v in coeffs)
        if not self.c:
            raise ValueError("a jet needs at least one coefficient")

    @classmethod
    def from_derivatives(cls, derivs: Sequence[complex]) -> "Jet":
        return cls(d / factorial(k) for k, d in enumerate(derivs))

    @classmethod
    def variable(cls, x0: complex, order: int = 3) -> "Jet":
        """The identity function seeded at ``x0``."""
        return cls([x0, 1.0] + [0.0] * (order - 1)) if order else cls([x0])

    @classmethod
    def constant(cls, value: complex, order: int = 3) -> "Jet":
        return cls([value] + [0.0] * order)

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def derivatives(self) -> tuple[complex, ...]:
        return tuple(v * factorial(k) for k, v in enumerate(self.c))

    def derivative(self, k: int) -> complex:
        return self.c[k] * factorial(k)

    d0 = property(lambda self: self.derivative(0))
    d1 = property(lambda self: self.derivative(1))
    d2 = property(lambda self: self.derivative(2))
    d3 = property(lambda self: self.derivative(3))

    def is_finite(self) -> bool:
        return all(cmath.isfinite(v) for v in self.c)

    # arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ValueError("jet orders differ")
            return other
        return Jet.constant(other, self.order)

    def __add__(self, other):
        o = self._coerce(other)
        return Jet(a + b for a, b in zip(self.c, o.c))

    __radd__ = __add__

    def __neg__(self):
        return Jet(-a for a in self.c)

    def __sub__(self, other):
        o = self._coerce(other)
        return Jet(a - b for a, b in zip(self.c, o.c))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            other = complex(other)
            return Jet(a * other for a in self.c)
        o = self._coerce(other)
        a, b = self.c, o.c
        return Jet(sum(a[j] * b[k - j] for j in range(k + 1)) for k in range(len(a)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Jet):
            other = complex(other)
            return Jet(a / other for a in self.c)
        o = self._coerce(other)
        b = o.c
        if b[0] == 0:
            raise PoleError("jet division by a vanishing value")
        h: list[complex] = []
        for k, fk in enumerate(self.c):
            acc = fk - sum(b[j] * h[k - j] for j in range(1, k + 1))
            h.append(acc / b[0])
        return Jet(h)

    def __rtruediv__(self, other):
        return Jet.constant(other, self.order) / self

    def log(self) -> "Jet":
        """Principal logarithm; higher coefficients do not depend on the branch."""
        f = self.c
        if f[0] == 0:
            raise PoleError("logarithm of a vanishing jet")
        h = [cmath.log(f[0])]
        for k in range(1, len(f)):
            acc = f[k] - sum(j * h[j] * f[k - j] for j in range(1, k)) / k
            h.append(acc / f[0])
        return Jet(h)

    def exp(self) -> "Jet":
        f = self.c
        h = [cmath.exp(f[0])]
        for k in range(1, len(f)):
            h.append(sum(j * f[j] * h[k - j] for j in range(1, k + 1)) / k)
        return Jet(h)

    def __repr__(self) -> str:
        return f"Jet(derivatives={self.derivatives()!r})"


def Jet3(d0: complex, d1: complex, d2: complex, d3: complex) -> Jet:
    """Order-3 jet built from a value and its first three derivatives."""
    return Jet.from_derivatives((d0, d1, d2, d3))

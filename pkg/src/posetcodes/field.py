"""Exact arithmetic in prime fields GF(q).

Field values are plain ints in ``[0, q)``; :class:`PrimeField` provides the
modular operations and :class:`FieldElement` wraps a value together with its
field for operator syntax with mixed-field protection.  Matrix code works on
raw ints for speed.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_MODULUS = 2**16


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for n <= 2^16."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """GF(q) for a prime modulus q, 2 <= q <= 2^16."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not 2 <= self.q <= MAX_MODULUS:
            raise ValueError(f"modulus must be an int in [2, {MAX_MODULUS}], got {self.q!r}")
        if not is_prime(self.q):
            raise ValueError(f"modulus {self.q} is not prime")

    def reduce(self, a: int) -> int:
        return a % self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return pow(a, -1, self.q)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.q, self)

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    """A value in [0, q) bound to its field; operators reject mixed fields."""

    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"value {self.value} outside [0, {self.field.q})")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(
                    f"cannot mix elements of GF({self.field.q}) and GF({other.field.q})"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(value % self.field.q, self.field)

    def __add__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value - v)

    def __rsub__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else self._wrap(v - self.value)

    def __mul__(self, other):
        v = self._other(other)
        return NotImplemented if v is NotImplemented else self._wrap(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inv(v))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.q})"

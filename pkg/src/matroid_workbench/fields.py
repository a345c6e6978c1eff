"""Exact scalar fields: the rationals and prime fields GF(p).

Elements are plain Python objects (Fraction for Q, int in range(p) for
GF(p)); the field object supplies the arithmetic so that linear-algebra code
can stay generic.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import InvalidField


class RationalField:
    name = "Q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, x):
        """Coerce an int, Fraction, or 'a/b' string to a field element."""
        if isinstance(x, bool) or isinstance(x, float):
            raise InvalidField(f"rational entries must be exact, got {x!r}")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            try:
                return Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise InvalidField(f"cannot parse rational {x!r}") from exc
        raise InvalidField(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    characteristic: int

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise InvalidField(f"GF({p!r}): modulus must be prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def of(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidField(f"GF({self.p}) entries must be integers, got {x!r}")
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def to_str(self, a):
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()

_GF_RE = re.compile(r"^GF\((\d+)\)$")


def field_from_name(name: str):
    """Parse 'Q' or 'GF(p)' into a field object."""
    if name == "Q":
        return QQ
    m = _GF_RE.match(name.strip()) if isinstance(name, str) else None
    if m:
        return PrimeField(int(m.group(1)))
    raise InvalidField(f"unknown field {name!r} (expected 'Q' or 'GF(p)')")

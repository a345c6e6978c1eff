"""Sparse exact polynomials with stable JSON encoding.

Coefficients are Python ints (arbitrary precision); JSON carries them as
decimal strings so nothing downstream has to trust 53-bit floats. Term
order in serialized form is lexicographic in the exponents, which makes
output byte-stable across runs.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput


def _coeff_from_str(s):
    if isinstance(s, int) and not isinstance(s, bool):
        return s
    if isinstance(s, str):
        try:
            return int(s, 10)
        except ValueError as exc:
            raise InvalidInput(f"bad coefficient string {s!r}") from exc
    raise InvalidInput(f"coefficient must be an int or decimal string, got {s!r}")


class BivariatePoly:
    """Z[x, y] with a dict {(i, j): c}, zero coefficients never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        for key, c in (terms or {}).items():
            if c:
                i, j = key
                if i < 0 or j < 0:
                    raise InvalidInput("exponents must be nonnegative")
                t[(int(i), int(j))] = int(c)
        self._terms = t

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    def terms(self):
        """Sorted ((i, j), c) pairs."""
        return sorted(self._terms.items())

    def coeff(self, i, j):
        return self._terms.get((i, j), 0)

    def is_zero(self):
        return not self._terms

    def total_degree(self):
        return max((i + j for i, j in self._terms), default=0)

    def degree_x(self):
        return max((i for i, _ in self._terms), default=0)

    def degree_y(self):
        return max((j for _, j in self._terms), default=0)

    def __add__(self, other):
        t = dict(self._terms)
        for k, c in other._terms.items():
            t[k] = t.get(k, 0) + c
        return BivariatePoly(t)

    def __sub__(self, other):
        t = dict(self._terms)
        for k, c in other._terms.items():
            t[k] = t.get(k, 0) - c
        return BivariatePoly(t)

    def __mul__(self, other):
        t = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + c1 * c2
        return BivariatePoly(t)

    def scale(self, c):
        return BivariatePoly({k: c * v for k, v in self._terms.items()})

    def shift(self, dx, dy):
        """Multiply by x^dx y^dy."""
        return BivariatePoly({(i + dx, j + dy): c for (i, j), c in self._terms.items()})

    def evaluate(self, x, y):
        x, y = Fraction(x), Fraction(y)
        acc = Fraction(0)
        for (i, j), c in self._terms.items():
            acc += c * x**i * y**j
        return acc

    def __eq__(self, other):
        return isinstance(other, BivariatePoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for (i, j), c in self.terms():
            part = str(c)
            if i:
                part += f"*x^{i}"
            if j:
                part += f"*y^{j}"
            bits.append(part)
        return " + ".join(bits)

    def to_json(self, xname="x", yname="y"):
        # leading terms first
        return {
            "terms": [
                {xname: i, yname: j, "c": str(c)}
                for (i, j), c in sorted(self._terms.items(), reverse=True)
            ]
        }

    @classmethod
    def from_json(cls, obj, xname="x", yname="y"):
        if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
            raise InvalidInput("polynomial JSON must be {'terms': [...]}")
        t = {}
        for entry in obj["terms"]:
            if not isinstance(entry, dict):
                raise InvalidInput("polynomial term must be an object")
            try:
                i, j = entry[xname], entry[yname]
            except KeyError as exc:
                raise InvalidInput(f"term missing exponent key {exc}") from exc
            if not isinstance(i, int) or not isinstance(j, int) or isinstance(i, bool) or isinstance(j, bool):
                raise InvalidInput("exponents must be integers")
            key = (i, j)
            if key in t:
                raise InvalidInput(f"duplicate term for exponents {key}")
            t[key] = _coeff_from_str(entry.get("c"))
        return cls(t)


class UnivariatePoly:
    """Z[u] with a dict {deg: c}, zero coefficients never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        t = {}
        for d, c in (terms or {}).items():
            if c:
                if d < 0:
                    raise InvalidInput("exponents must be nonnegative")
                t[int(d)] = int(c)
        self._terms = t

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, d, c=1):
        return cls({d: c})

    def terms(self):
        return sorted(self._terms.items())

    def coeff(self, d):
        return self._terms.get(d, 0)

    def degree(self):
        """Degree, with the convention that the zero polynomial has -1."""
        return max(self._terms, default=-1)

    def is_zero(self):
        return not self._terms

    def __add__(self, other):
        t = dict(self._terms)
        for d, c in other._terms.items():
            t[d] = t.get(d, 0) + c
        return UnivariatePoly(t)

    def __sub__(self, other):
        t = dict(self._terms)
        for d, c in other._terms.items():
            t[d] = t.get(d, 0) - c
        return UnivariatePoly(t)

    def __mul__(self, other):
        t = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                t[d1 + d2] = t.get(d1 + d2, 0) + c1 * c2
        return UnivariatePoly(t)

    def scale(self, c):
        return UnivariatePoly({d: c * v for d, v in self._terms.items()})

    def evaluate(self, u):
        u = Fraction(u)
        return sum((c * u**d for d, c in self._terms.items()), Fraction(0))

    def divmod_linear(self, root):
        """Quotient and remainder on division by (u - root), root an int.

        Synthetic division; remainder is the value at `root`.
        """
        deg = self.degree()
        q = {}
        b = 0
        for d in range(deg, 0, -1):
            b = self.coeff(d) + root * b
            q[d - 1] = b
        rem = self.coeff(0) + root * b
        return UnivariatePoly(q), rem

    def __eq__(self, other):
        return isinstance(other, UnivariatePoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for d, c in sorted(self._terms.items(), reverse=True):
            bits.append(f"{c}*u^{d}" if d else str(c))
        return " + ".join(bits)

    def to_json(self, name="u"):
        return {
            "terms": [
                {name: d, "c": str(c)}
                for d, c in sorted(self._terms.items(), reverse=True)
            ]
        }

    @classmethod
    def from_json(cls, obj, name="u"):
        if not isinstance(obj, dict) or not isinstance(obj.get("terms"), list):
            raise InvalidInput("polynomial JSON must be {'terms': [...]}")
        t = {}
        for entry in obj["terms"]:
            if not isinstance(entry, dict) or name not in entry:
                raise InvalidInput("polynomial term must be an object with exponent")
            d = entry[name]
            if not isinstance(d, int) or isinstance(d, bool):
                raise InvalidInput("exponents must be integers")
            if d in t:
                raise InvalidInput(f"duplicate term for exponent {d}")
            t[d] = _coeff_from_str(entry.get("c"))
        return cls(t)

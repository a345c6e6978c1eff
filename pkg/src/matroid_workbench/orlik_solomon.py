"""Orlik-Solomon algebras with no-broken-circuit monomial bases.

Degree-k piece: the span of k-fold wedges e_S modulo the ideal generated by
boundaries of dependent sets. Concretely the degree-k relation space is
spanned by

    (d e_S) ^ e_T   for S dependent, T disjoint from S, #S - 1 + #T = k
    e_W             for W dependent with #W = k

where d is the Koszul boundary d e_S = sum_i (-1)^i e_(S minus its
(i+1)-th largest element). The second family is forced: a dependent
monomial e_W is in the ideal (e_W = +-e_(W-C) ^ e_C for a circuit C in W,
and e_C appears in d e_(C + c) terms), but it is not a combination of the
first family alone once T is required to be disjoint.

Row reduction pivots on the lexicographically largest subset first; the
pivot monomials are then exactly the k-subsets containing a broken circuit,
so the surviving columns are the nbc monomials. That equality is asserted
at construction time rather than trusted.

Everything is computed over a field object from fields.py; dimensions are
the same for Q and for GF(p) (checked in tests), matching the fact that the
nbc count is determined by the matroid alone.
"""
from __future__ import annotations

import itertools
from math import comb

from . import linalg
from .errors import (
    InternalInvariantViolation,
    InvalidInput,
    LooplessRequired,
    TooLarge,
)
from .fields import QQ
from .matroids import Matroid

OS_DENSE_LIMIT = 1 << 20


def _merge_sign(a, b):
    """Merge two disjoint sorted tuples; (merged, sign) with the sign of the
    shuffle, or None when they intersect."""
    out = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining entries of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), sign


class ExteriorElement:
    """Homogeneous element of the exterior algebra on e_0..e_(n-1).

    Terms map sorted index tuples to nonzero field scalars. The degree is
    carried explicitly so the zero element of each degree is distinct.
    """

    __slots__ = ("field", "degree", "terms")

    def __init__(self, field, degree, terms=None):
        self.field = field
        self.degree = degree
        t = {}
        for key, c in (terms or {}).items():
            if len(key) != degree or tuple(sorted(key)) != tuple(key):
                raise InvalidInput(f"term {key} is not a sorted degree-{degree} tuple")
            if not field.is_zero(c):
                t[key] = c
        self.terms = t

    @classmethod
    def monomial(cls, field, subset, c=None):
        subset = tuple(sorted(subset))
        return cls(field, len(subset), {subset: field.one if c is None else field.of(c)})

    @classmethod
    def scalar(cls, field, c):
        return cls(field, 0, {(): field.of(c)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if self.degree != other.degree:
            raise InvalidInput("cannot add elements of different degrees")
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = self.field.add(t.get(k, self.field.zero), c)
            if self.field.is_zero(s):
                t.pop(k, None)
            else:
                t[k] = s
        return ExteriorElement(self.field, self.degree, t)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c):
        c = self.field.of(c)
        return ExteriorElement(
            self.field, self.degree, {k: self.field.mul(c, v) for k, v in self.terms.items()}
        )

    def wedge(self, other):
        f = self.field
        t = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                merged = _merge_sign(ka, kb)
                if merged is None:
                    continue
                key, sign = merged
                c = f.mul(ca, cb)
                if sign < 0:
                    c = f.neg(c)
                s = f.add(t.get(key, f.zero), c)
                if f.is_zero(s):
                    t.pop(key, None)
                else:
                    t[key] = s
        return ExteriorElement(f, self.degree + other.degree, t)

    def __eq__(self, other):
        return (
            isinstance(other, ExteriorElement)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return f"0_deg{self.degree}"
        bits = []
        for key in sorted(self.terms):
            mono = "^".join(f"e{i}" for i in key) if key else "1"
            bits.append(f"({self.field.to_str(self.terms[key])})*{mono}")
        return " + ".join(bits)


def koszul_boundary(subset, field=QQ):
    """d e_S = sum_{i>=0} (-1)^i e_(S minus its (i+1)-th largest element)."""
    s = tuple(sorted(subset))
    if len(set(s)) != len(s):
        raise InvalidInput("boundary of a tuple with repeats")
    k = len(s)
    terms = {}
    for i in range(k):
        dropped = k - 1 - i  # position of the (i+1)-th largest
        key = s[:dropped] + s[dropped + 1:]
        terms[key] = field.one if i % 2 == 0 else field.neg(field.one)
    return ExteriorElement(field, k - 1, terms)


def _require_loopless(M):
    if not M.is_loopless():
        raise LooplessRequired(f"loops present: {sorted(M.loops())}")


def broken_circuits(M: Matroid):
    """Each circuit minus its smallest element, deduplicated, sorted."""
    _require_loopless(M)
    return sorted({c[1:] for c in M.circuits()})


def nbc_sets(M: Matroid, k):
    """k-subsets of the ground set containing no broken circuit, lex order.

    Such sets are automatically independent: a dependent set contains a
    circuit, hence that circuit's broken circuit.
    """
    _require_loopless(M)
    if k < 0 or k > M.size:
        raise InvalidInput(f"degree {k} out of range 0..{M.size}")
    bcs = [frozenset(b) for b in broken_circuits(M)]
    out = []
    for s in itertools.combinations(M.elements, k):
        ss = frozenset(s)
        if not any(b <= ss for b in bcs):
            out.append(s)
    return out


class OSSpace:
    """Degree-k piece of the Orlik-Solomon algebra with reduction data.

    `nbc` lists the monomial basis; `reduce` rewrites any degree-k element
    as its normal form on that basis.
    """

    def __init__(self, matroid, k, field, nbc, rows, pivots, rpos, rcols):
        self.matroid = matroid
        self.degree = k
        self.field = field
        self.nbc = nbc
        self.ambient_dim = len(rcols)
        self.relation_rank = len(rows)
        self.dimension = self.ambient_dim - self.relation_rank
        self._rows = rows
        self._pivots = pivots
        self._rpos = rpos
        self._rcols = rcols

    def _dense(self, x: ExteriorElement):
        v = [self.field.zero] * self.ambient_dim
        for key, c in x.terms.items():
            pos = self._rpos.get(key)
            if pos is None:
                raise InvalidInput(f"term {key} is not a degree-{self.degree} subset")
            v[pos] = c
        return v

    def reduce(self, x: ExteriorElement) -> ExteriorElement:
        """Normal form of x on the nbc basis (a representative, not a coset)."""
        if x.degree != self.degree:
            raise InvalidInput(f"element degree {x.degree} != space degree {self.degree}")
        f = self.field
        v = self._dense(x)
        for row, piv in zip(self._rows, self._pivots):
            c = v[piv]
            if not f.is_zero(c):
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        terms = {self._rcols[i]: c for i, c in enumerate(v) if not f.is_zero(c)}
        return ExteriorElement(f, self.degree, terms)

    def coordinates(self, x: ExteriorElement):
        """Coefficients of reduce(x) on self.nbc, in basis order."""
        red = self.reduce(x)
        return [red.terms.get(s, self.field.zero) for s in self.nbc]


def _dependent_sets(M, size):
    if size > M.size:
        return []
    return [s for s in itertools.combinations(M.elements, size) if M.rank(s) < size]


def os_space(M: Matroid, k, field=QQ, circuits_only=False) -> OSSpace:
    """Build the degree-k Orlik-Solomon space over `field`.

    Dense reduction is capped at C(#E, k) <= 2^20 columns (TooLarge above).
    The nbc monomials must come out as exactly the non-pivot columns; any
    mismatch is an internal bug, not an input condition.

    circuits_only restricts the boundary generators to circuits (the
    dependent-monomial units e_W stay); the resulting space is the same
    and the nbc assertion would trip if it were not. Those runs bypass
    the per-matroid cache so both generator families actually execute.
    """
    _require_loopless(M)
    if k < 0 or k > M.size:
        raise InvalidInput(f"degree {k} out of range 0..{M.size}")
    cache = getattr(M, "_os_cache", None)
    if cache is None:
        cache = M._os_cache = {}
    ck = (k, field.name)
    if not circuits_only and ck in cache:
        return cache[ck]
    ncols = comb(M.size, k)
    if ncols > OS_DENSE_LIMIT:
        raise TooLarge(f"C({M.size},{k}) = {ncols} exceeds the dense budget")
    cols = list(itertools.combinations(M.elements, k))
    # pivot on the lexicographically largest subset first
    rcols = cols[::-1]
    rpos = {s: i for i, s in enumerate(rcols)}

    raw_rows = []

    def add_element_row(x: ExteriorElement):
        if x.is_zero():
            return
        v = [field.zero] * ncols
        for key, c in x.terms.items():
            v[rpos[key]] = c
        raw_rows.append(v)

    if circuits_only:
        boundary_sources = [c for c in M.circuits() if len(c) <= k + 1]
    else:
        boundary_sources = [
            dep for s in range(1, k + 2) for dep in _dependent_sets(M, s)
        ]
    for dep in boundary_sources:
        bd = koszul_boundary(dep, field)
        rest = [e for e in M.elements if e not in dep]
        for t in itertools.combinations(rest, k + 1 - len(dep)):
            add_element_row(bd.wedge(ExteriorElement.monomial(field, t)))
    for w in _dependent_sets(M, k):
        add_element_row(ExteriorElement.monomial(field, w))

    rows, pivots = linalg.rref(raw_rows, field) if raw_rows else ([], [])
    pivot_subsets = {rcols[p] for p in pivots}
    survivors = sorted(s for s in cols if s not in pivot_subsets)
    nbc = nbc_sets(M, k)
    if survivors != nbc:
        raise InternalInvariantViolation(
            f"degree {k}: non-pivot monomials {survivors} != nbc sets {nbc}"
        )
    space = OSSpace(M, k, field, nbc, rows, pivots, rpos, rcols)
    if not circuits_only:
        cache[ck] = space
    return space


def os_dimensions(M: Matroid, field=QQ):
    """[dim OS^k for k = 0..r]; pieces above the rank vanish (asserted)."""
    dims = [os_space(M, k, field).dimension for k in range(M.r + 1)]
    for k in range(M.r + 1, min(M.size, M.r + 2) + 1):
        if k <= M.size and os_space(M, k, field).dimension != 0:
            raise InternalInvariantViolation(f"OS^{k} nonzero above the rank")
    return dims


def normal_form(M: Matroid, x: ExteriorElement, field=None):
    """Coordinates of x on the degree-matching nbc basis.

    Idempotent in the sense that an nbc monomial maps to a unit vector.
    The reduced element itself is available as os_space(...).reduce(x).
    """
    f = field if field is not None else x.field
    return os_space(M, x.degree, f).coordinates(x)


def os_multiply(M: Matroid, a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    """Product in the Orlik-Solomon algebra, reduced to nbc normal form."""
    if a.field != b.field:
        raise InvalidInput("operands live over different fields")
    w = a.wedge(b)
    if w.degree > M.size:
        return ExteriorElement(a.field, w.degree, {})
    return os_space(M, w.degree, a.field).reduce(w)


# -- reduced (projective) variant ------------------------------------------


def reduced_nbc_index_sets(M: Matroid, k):
    """k-subsets S avoiding 0 with S + {0} an nbc set, lex order."""
    _require_loopless(M)
    if k < 0 or k + 1 > M.size:
        raise InvalidInput(f"reduced degree {k} out of range")
    if 0 not in M.elements:
        raise InvalidInput("reduced basis needs element 0 in the ground set")
    bcs = [frozenset(b) for b in broken_circuits(M)]
    out = []
    for s in itertools.combinations([e for e in M.elements if e != 0], k):
        ss = frozenset(s) | {0}
        if not any(b <= ss for b in bcs):
            out.append(s)
    return out


class ReducedOSBasis:
    def __init__(self, degree, field, index_sets, monomials):
        self.degree = degree
        self.field = field
        self.index_sets = index_sets
        self.monomials = monomials
        self.dimension = len(index_sets)


def reduced_nbc_basis(M: Matroid, k, field=QQ) -> ReducedOSBasis:
    """Monomials prod_{s in S} (e_s - e_0) for S in reduced_nbc_index_sets.

    Their normal-form coordinate matrix must have full row rank (they are a
    basis of the degree-k piece of the subalgebra they span); that rank is
    recomputed here rather than assumed.
    """
    idx = reduced_nbc_index_sets(M, k)
    space = os_space(M, k, field)
    monos = []
    for s in idx:
        acc = ExteriorElement.scalar(field, 1)
        for e in s:
            acc = acc.wedge(
                ExteriorElement.monomial(field, (e,))
                - ExteriorElement.monomial(field, (0,))
            )
        monos.append(acc)
    if monos:
        coords = [space.coordinates(m) for m in monos]
        red, _ = linalg.rref(coords, field)
        if len(red) != len(monos):
            raise InternalInvariantViolation(
                f"reduced degree-{k} monomials are dependent: "
                f"rank {len(red)} of {len(monos)}"
            )
    return ReducedOSBasis(k, field, idx, monos)


def reduced_os_dimensions(M: Matroid, field=QQ):
    """[dim of the reduced degree-k piece for k = 0..r-1]."""
    return [reduced_nbc_basis(M, k, field).dimension for k in range(max(M.r, 1))]

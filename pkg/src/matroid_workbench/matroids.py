"""Matroids with exact rank oracles over a fixed ordered ground set.

A Matroid wraps one of several backings:

  * LinearBacking   -- column matroid of a matrix over Q or GF(p)
  * UniformBacking  -- U_{r,n}
  * GraphicBacking  -- cycle matroid of a multigraph
  * BasesBacking    -- explicit basis list (validated against exchange)
  * DerivedBacking  -- rank function closure (generic minors / duals)

Ground elements are integers 0..n-1 in a fixed order; that order is part of
the matroid's identity (broken circuits, canonical keys, and fixed-point
flags all read it). Rank values are cached per frozenset; backings that can
do better expose an incremental push/pop rank oracle used by the subset
walks in tutte.py and localization.py.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import InvalidInput, TooLarge
from .fields import QQ, PrimeField, RationalField, field_from_name

# Caps keeping exhaustive walks at desk scale.
ENUMERATION_LIMIT = 20
BASIS_VALIDATION_LIMIT = 100_000
SUBSET_SUM_LIMIT = 24


def _clear_column(col):
    """Scale a rational column to coprime integers (kills denominators).

    Column scaling by a nonzero rational does not change the column matroid,
    so ranks can be computed fraction-free afterwards.
    """
    dens = [c.denominator for c in col]
    lcm = 1
    for d in dens:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(c * lcm) for c in col]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


class LinearBacking:
    kind = "linear"

    def __init__(self, field, columns):
        # columns: {label: tuple of ints}; over Q the ints are denominator-
        # cleared exact coordinates, over GF(p) they are reduced residues.
        self.field = field
        self.columns = columns
        self.nrows = len(next(iter(columns.values()))) if columns else 0

    def _echelon(self):
        if isinstance(self.field, RationalField):
            return linalg.IntEchelon()
        return linalg.ModEchelon(self.field.p)

    def rank(self, subset):
        ech = self._echelon()
        for e in sorted(subset):
            ech.push(self.columns[e])
        return ech.rank

    def incremental(self):
        ech = self._echelon()
        cols = self.columns

        class _Inc:
            push = staticmethod(lambda e: ech.push(cols[e]))
            pop = staticmethod(ech.pop)

        return _Inc()

    def _field_matrix(self, labels):
        """Rows of the submatrix on `labels`, entries as field scalars."""
        f = self.field
        rows = []
        for i in range(self.nrows):
            rows.append([f.of(self.columns[e][i]) for e in labels])
        return rows

    def minor(self, deleted, contracted, elements):
        """Native minor: row-reduce the contracted columns, project the rest.

        After RREF on [C | kept], rows pivoting inside the C block span the
        contracted subspace; the remaining rows give coordinates of the kept
        columns in the quotient.
        """
        kept = [e for e in elements if e not in deleted and e not in contracted]
        cset = sorted(contracted)
        labels = cset + kept
        if not labels:
            return LinearBacking(self.field, {}), []
        rows = self._field_matrix(labels)
        red, pivots = linalg.rref(rows, self.field)
        nc = len(cset)
        keep_rows = [i for i, pc in enumerate(pivots) if pc >= nc]
        columns = {}
        for pos, e in enumerate(kept):
            columns[e] = tuple(red[i][nc + pos] for i in keep_rows)
        return LinearBacking(self.field, _exactify_columns(self.field, columns, kept)), kept

    def dual(self, elements):
        """Column matroid of a kernel basis matrix (rows = kernel vectors)."""
        rows = self._field_matrix(list(elements))
        ker = linalg.kernel(rows, len(elements), self.field)
        columns = {e: tuple(v[i] for v in ker) for i, e in enumerate(elements)}
        return LinearBacking(self.field, _exactify_columns(self.field, columns, elements))


def _exactify_columns(field, columns, labels):
    """Re-store field-valued columns in the integer column convention."""
    out = {}
    for e in labels:
        col = columns[e]
        if isinstance(field, RationalField):
            out[e] = _clear_column([Fraction(x) for x in col])
        else:
            out[e] = tuple(int(x) % field.p for x in col)
    return out


class UniformBacking:
    kind = "uniform"

    def __init__(self, r):
        self.r = r

    def rank(self, subset):
        return min(len(subset), self.r)

    def incremental(self):
        backing = self

        class _Inc:
            count = 0

            def push(self, _e):
                self.count += 1
                return self.count <= backing.r

            def pop(self):
                self.count -= 1

        return _Inc()

    def minor(self, deleted, contracted, elements):
        kept = [e for e in elements if e not in deleted and e not in contracted]
        c = min(len(contracted), self.r)
        return UniformBacking(self.r - c), kept

    def dual(self, elements):
        return UniformBacking(len(elements) - self.r)


class GraphicBacking:
    kind = "graphic"

    def __init__(self, edges):
        # edges: {label: (u, v)}; vertices may be any hashables.
        self.edges = edges
        self.vertices = sorted({v for uv in edges.values() for v in uv}, key=repr)

    def rank(self, subset):
        uf = linalg.RollbackUnionFind(self.vertices)
        r = 0
        for e in sorted(subset):
            u, v = self.edges[e]
            if u != v and uf.union(u, v):
                r += 1
        return r

    def incremental(self):
        uf = linalg.RollbackUnionFind(self.vertices)
        edges = self.edges

        class _Inc:
            @staticmethod
            def push(e):
                u, v = edges[e]
                if u == v:
                    uf._hist.append(None)
                    return False
                return uf.union(u, v)

            pop = staticmethod(uf.pop)

        return _Inc()

    def minor(self, deleted, contracted, elements):
        kept = [e for e in elements if e not in deleted and e not in contracted]
        edges = {e: self.edges[e] for e in self.edges if e not in deleted}
        # Contract edges one at a time: merge endpoints into one vertex.
        for e in sorted(contracted):
            u, v = edges.pop(e)
            if u == v:
                continue
            edges = {k: (u if a == v else a, u if b == v else b) for k, (a, b) in edges.items()}
        return GraphicBacking({e: edges[e] for e in kept}), kept

    def dual(self, elements):
        return None  # not graphic in general; use the generic rank formula


class BasesBacking:
    kind = "bases"

    def __init__(self, bases):
        self.bases = bases  # list of frozensets, all the same size

    def rank(self, subset):
        return max(len(subset & b) for b in self.bases)

    def incremental(self):
        return None

    def minor(self, deleted, contracted, elements):
        return None

    def dual(self, elements):
        full = frozenset(elements)
        return BasesBacking(sorted({full - b for b in self.bases}, key=sorted))


class DerivedBacking:
    kind = "derived"

    def __init__(self, rank_fn):
        self._rank_fn = rank_fn

    def rank(self, subset):
        return self._rank_fn(subset)

    def incremental(self):
        return None

    def minor(self, deleted, contracted, elements):
        return None

    def dual(self, elements):
        return None


class Matroid:
    """Immutable matroid facade with a cached exact rank oracle."""

    def __init__(self, backing, elements):
        self._backing = backing
        self.elements = tuple(elements)
        self._eset = frozenset(self.elements)
        self._rank_cache = {}
        self._bases = None
        self._circuits = None
        self._key = None
        self.r = self.rank(self._eset)

    # -- rank oracle ----------------------------------------------------

    def rank(self, subset):
        s = frozenset(subset)
        if not s <= self._eset:
            raise InvalidInput(f"subset {sorted(s - self._eset)} outside ground set")
        got = self._rank_cache.get(s)
        if got is None:
            got = self._backing.rank(s)
            self._rank_cache[s] = got
        return got

    def incremental_rank(self):
        """Push/pop rank oracle, or None when the backing has no fast path."""
        return self._backing.incremental()

    @property
    def size(self):
        return len(self.elements)

    @property
    def corank(self):
        return self.size - self.r

    def loops(self):
        return frozenset(e for e in self.elements if self.rank({e}) == 0)

    def coloops(self):
        return frozenset(
            e for e in self.elements if self.rank(self._eset - {e}) == self.r - 1
        )

    def is_loopless(self):
        return not self.loops()

    # -- minors and duals -------------------------------------------------

    def minor(self, deleted=(), contracted=()):
        dset, cset = frozenset(deleted), frozenset(contracted)
        if not dset <= self._eset or not cset <= self._eset:
            raise InvalidInput("minor sets must lie in the ground set")
        if dset & cset:
            raise InvalidInput("delete and contract sets overlap")
        native = self._backing.minor(dset, cset, self.elements)
        if native is not None:
            backing, kept = native
            return Matroid(backing, kept)
        kept = [e for e in self.elements if e not in dset and e not in cset]
        parent, base = self, self.rank(cset)
        return Matroid(
            DerivedBacking(lambda a, _p=parent, _c=cset, _b=base: _p.rank(a | _c) - _b),
            kept,
        )

    def delete(self, deleted):
        return self.minor(deleted=deleted)

    def contract(self, contracted):
        return self.minor(contracted=contracted)

    def dual(self):
        native = self._backing.dual(self.elements)
        if native is not None:
            return Matroid(native, self.elements)
        parent, full, r = self, self._eset, self.r

        def corank_fn(a):
            return len(a) + parent.rank(full - a) - r

        return Matroid(DerivedBacking(corank_fn), self.elements)

    # -- enumeration ------------------------------------------------------

    def bases(self, limit=ENUMERATION_LIMIT):
        """All bases as sorted tuples, lexicographic. Guarded by `limit`
        on the ground set size (pass limit=0 to lift the cap)."""
        if limit and self.size > limit:
            raise TooLarge(f"basis enumeration over {self.size} > {limit} elements")
        if self._bases is None:
            self._bases = [
                b
                for b in itertools.combinations(self.elements, self.r)
                if self.rank(b) == self.r
            ]
        return self._bases

    def circuits(self, limit=ENUMERATION_LIMIT):
        """All circuits (minimal dependent sets) as sorted tuples."""
        if limit and self.size > limit:
            raise TooLarge(f"circuit enumeration over {self.size} > {limit} elements")
        if self._circuits is None:
            found = []
            for k in range(1, min(self.size, self.r + 1) + 1):
                for s in itertools.combinations(self.elements, k):
                    ss = frozenset(s)
                    if any(c <= ss for c in found):
                        continue
                    if self.rank(ss) < k:
                        found.append(ss)
            self._circuits = sorted(tuple(sorted(c)) for c in found)
        return self._circuits

    def canonical_key(self):
        """Bytes key determined by (ground order, basis list).

        Two matroids get equal keys iff they have the same labeled bases, so
        the key is safe for memoizing label-sensitive invariants.
        """
        if self._key is None:
            payload = (self.elements, tuple(self.bases(limit=0)))
            self._key = b"mw1:" + repr(payload).encode()
        return self._key

    def __repr__(self):
        return f"Matroid({self._backing.kind}, n={self.size}, r={self.r})"


# -- constructors ---------------------------------------------------------


def from_matrix(field, matrix):
    """Column matroid of `matrix` over `field` (a fields.py object or name).

    Elements are column indices 0..n-1.
    """
    if isinstance(field, str):
        field = field_from_name(field)
    if not matrix or not matrix[0]:
        raise InvalidInput("matrix must have at least one row and one column")
    width = len(matrix[0])
    if any(len(row) != width for row in matrix):
        raise InvalidInput("matrix rows must all have the same length")
    columns = {}
    for j in range(width):
        col = [field.of(row[j]) for row in matrix]
        if isinstance(field, RationalField):
            columns[j] = _clear_column(col)
        else:
            columns[j] = tuple(int(x) % field.p for x in col)
    return Matroid(LinearBacking(field, columns), range(width))


def uniform(r, n):
    if not (0 <= r <= n) or n < 1:
        raise InvalidInput(f"uniform matroid needs 0 <= r <= n, n >= 1; got r={r} n={n}")
    return Matroid(UniformBacking(r), range(n))


def from_graph(edges):
    """Cycle matroid; `edges` is a sequence of (u, v) pairs, elements are
    edge indices in the given order. Loops and parallel edges allowed."""
    edges = list(edges)
    if not edges:
        raise InvalidInput("graph needs at least one edge")
    emap = {}
    for i, uv in enumerate(edges):
        if len(tuple(uv)) != 2:
            raise InvalidInput(f"edge {i} is not a pair")
        u, v = uv
        emap[i] = (u, v)
    return Matroid(GraphicBacking(emap), range(len(edges)))


def from_bases(n, bases, validate=True):
    """Matroid on 0..n-1 from an explicit basis list.

    Validates the exchange axiom pairwise when the basis count is within
    BASIS_VALIDATION_LIMIT; larger lists raise TooLarge unless validate is
    False (in which case the caller vouches for the input).
    """
    if n < 1:
        raise InvalidInput("ground set must be nonempty")
    ground = frozenset(range(n))
    blist = []
    seen = set()
    for b in bases:
        fb = frozenset(b)
        if len(fb) != len(tuple(b)):
            raise InvalidInput(f"basis {sorted(b)} has repeated elements")
        if not fb <= ground:
            raise InvalidInput(f"basis {sorted(b)} outside ground set 0..{n - 1}")
        if fb not in seen:
            seen.add(fb)
            blist.append(fb)
    if not blist:
        raise InvalidInput("at least one basis is required")
    sizes = {len(b) for b in blist}
    if len(sizes) != 1:
        raise InvalidInput("bases must all have the same size")
    if validate:
        if len(blist) ** 2 > BASIS_VALIDATION_LIMIT:
            raise TooLarge(
                f"{len(blist)}^2 basis pairs exceed the validation budget; "
                "pass validate=False to skip"
            )
        bset = set(blist)
        for b1 in blist:
            for b2 in blist:
                for x in b1 - b2:
                    if not any((b1 - {x}) | {y} in bset for y in b2 - b1):
                        raise InvalidInput(
                            f"exchange axiom fails for bases {sorted(b1)}, "
                            f"{sorted(b2)} at element {x}"
                        )
    return Matroid(BasesBacking(sorted(blist, key=sorted)), range(n))


# -- JSON descriptors ------------------------------------------------------


def _parse_matrix_entry(x):
    if isinstance(x, bool):
        raise InvalidInput("matrix entries must be numbers or 'a/b' strings")
    if isinstance(x, (int, str)):
        return x
    raise InvalidInput(f"bad matrix entry {x!r}")


def from_descriptor(obj):
    """Build a matroid from a JSON-style descriptor dict."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise InvalidInput("descriptor must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "linear":
        if "field" not in obj or "matrix" not in obj:
            raise InvalidInput("linear descriptor needs 'field' and 'matrix'")
        matrix = obj["matrix"]
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise InvalidInput("'matrix' must be a list of rows")
        matrix = [[_parse_matrix_entry(x) for x in row] for row in matrix]
        return from_matrix(field_from_name(obj["field"]), matrix)
    if kind == "uniform":
        if not isinstance(obj.get("r"), int) or not isinstance(obj.get("n"), int):
            raise InvalidInput("uniform descriptor needs integer 'r' and 'n'")
        return uniform(obj["r"], obj["n"])
    if kind == "graphic":
        edges = obj.get("edges")
        if not isinstance(edges, list):
            raise InvalidInput("graphic descriptor needs an 'edges' list")
        return from_graph([tuple(e) for e in edges])
    if kind == "bases":
        if not isinstance(obj.get("n"), int) or not isinstance(obj.get("bases"), list):
            raise InvalidInput("bases descriptor needs integer 'n' and a 'bases' list")
        return from_bases(obj["n"], [tuple(b) for b in obj["bases"]])
    raise InvalidInput(f"unknown descriptor type {kind!r}")

"""Tutte, characteristic, and two-variable h polynomials.

Two independent routes to the Tutte polynomial are provided and cross-check
each other in tests: a corank-nullity subset sum (tutte_sum) and memoized
deletion-contraction (tutte_dc). The h polynomial

    h(u, v) = sum over subsets A of u^(r - rk(A)) * v^(#(E \\ A) - (r - rk(A)))

is computed both from that subset sum and by substituting into the Tutte
polynomial; the two must agree exactly or InternalInvariantViolation flies.

Counting route: the subset walk only needs, for each (corank, nullity)
pair, how many subsets hit it, so everything reduces to one depth-first
enumeration with an incremental rank oracle (one rank update per visited
subset) followed by small binomial expansions.
"""
from __future__ import annotations

from math import comb

from .errors import InternalInvariantViolation, TooLarge
from .matroids import SUBSET_SUM_LIMIT, Matroid
from .polynomials import BivariatePoly, UnivariatePoly


def rank_size_counts(M: Matroid):
    """{(corank, nullity): number of subsets A with r - rk(A) = corank,
    #A - rk(A) = nullity}; the full 2^#E walk, depth-first with one
    incremental rank update per subset."""
    if M.size > SUBSET_SUM_LIMIT:
        raise TooLarge(f"subset sum over {M.size} > {SUBSET_SUM_LIMIT} elements")
    elems = M.elements
    r = M.r
    counts = {}

    def record(size, rk):
        key = (r - rk, size - rk)
        counts[key] = counts.get(key, 0) + 1

    inc = M.incremental_rank()
    if inc is not None:
        def walk(start, size, rk):
            record(size, rk)
            for i in range(start, len(elems)):
                rk2 = rk + (1 if inc.push(elems[i]) else 0)
                walk(i + 1, size + 1, rk2)
                inc.pop()

        walk(0, 0, 0)
    else:
        # No fast oracle: rank each subset directly (still exact, just slower).
        def walk(start, sub):
            record(len(sub), M.rank(sub))
            for i in range(start, len(elems)):
                walk(i + 1, sub | {elems[i]})

        walk(0, frozenset())
    return counts


def tutte_sum(M: Matroid) -> BivariatePoly:
    """Tutte polynomial via the corank-nullity sum."""
    counts = rank_size_counts(M)
    t = {}
    for (c, nu), n in counts.items():
        # (x-1)^c (y-1)^nu expanded by binomials
        for i in range(c + 1):
            ci = comb(c, i) * (-1) ** (c - i)
            for j in range(nu + 1):
                coeff = n * ci * comb(nu, j) * (-1) ** (nu - j)
                if coeff:
                    t[(i, j)] = t.get((i, j), 0) + coeff
    return BivariatePoly(t)


class TutteCache:
    """In-memory memo table for tutte_dc keyed by canonical matroid keys.

    Subclasses may persist entries; see cli.FileTutteCache.
    """

    def __init__(self):
        self._mem = {}

    def get(self, key):
        return self._mem.get(key)

    def put(self, key, poly):
        self._mem[key] = poly


def tutte_dc(M: Matroid, cache: TutteCache | None = None) -> BivariatePoly:
    """Tutte polynomial by deletion-contraction.

    Branch element: the largest element that is neither a loop nor a coloop
    (fixed choice, so the recursion tree and any persisted cache entries are
    reproducible). Base case x^(#coloops) y^(#loops).
    """
    if cache is None:
        cache = TutteCache()
    return _tutte_dc(M, cache)


def _tutte_dc(M, cache):
    key = M.canonical_key()
    hit = cache.get(key)
    if hit is not None:
        return hit
    loops = M.loops()
    coloops = M.coloops()
    branch = max((e for e in M.elements if e not in loops and e not in coloops), default=None)
    if branch is None:
        poly = BivariatePoly.monomial(len(coloops), len(loops))
    else:
        poly = _tutte_dc(M.delete({branch}), cache) + _tutte_dc(M.contract({branch}), cache)
    cache.put(key, poly)
    return poly


def char_poly(M: Matroid, tutte: BivariatePoly | None = None) -> UnivariatePoly:
    """Characteristic polynomial chi(u) = (-1)^r T(1 - u, 0).

    Identically zero when M has a loop.
    """
    t = tutte if tutte is not None else tutte_sum(M)
    sign = (-1) ** M.r
    out = {}
    for (a, b), c in t.terms():
        if b != 0:
            continue  # y = 0 kills terms with y-degree > 0
        # (1-u)^a = sum_i C(a, i) (-u)^i
        for i in range(a + 1):
            coeff = sign * c * comb(a, i) * (-1) ** i
            out[i] = out.get(i, 0) + coeff
    return UnivariatePoly(out)


def reduced_char_poly(M: Matroid, tutte: BivariatePoly | None = None) -> UnivariatePoly:
    """chi(u) / (u - 1), which is exact because chi(1) = 0.

    A nonzero remainder would mean the division identity broke, which is a
    bug in this package, never a property of the input.
    """
    chi = char_poly(M, tutte)
    q, rem = chi.divmod_linear(1)
    if rem != 0:
        raise InternalInvariantViolation(
            f"characteristic polynomial has chi(1) = {rem} != 0"
        )
    return q


def h_from_counts(counts, size, r) -> BivariatePoly:
    t = {}
    m = size - r
    for (c, nu), n in counts.items():
        # u-exponent is the corank c; the v-exponent #E - #A - c collapses
        # to m - nu because #A = (r - c) + nu.
        key = (c, m - nu)
        t[key] = t.get(key, 0) + n
    return BivariatePoly(t)


def h_from_tutte(tutte: BivariatePoly, size, r) -> BivariatePoly:
    """h(u, v) = v^(#E - r) T(u + 1, 1/v + 1), expanded exactly.

    Each Tutte term x^a y^b contributes C(a,i) C(b,j) u^i v^(m - b + j)
    with m = #E - r; the exponent m - b is nonnegative because y-degree
    in the Tutte polynomial is at most the corank.
    """
    m = size - r
    t = {}
    for (a, b), c in tutte.terms():
        if b > m:
            raise InternalInvariantViolation(
                f"Tutte term y-degree {b} exceeds corank {m}"
            )
        for i in range(a + 1):
            ca = comb(a, i)
            for j in range(b + 1):
                key = (i, m - b + j)
                t[key] = t.get(key, 0) + c * ca * comb(b, j)
    return BivariatePoly(t)


def h_polynomial(M: Matroid) -> BivariatePoly:
    """The lattice-point h polynomial, computed two ways and cross-checked.

    All coefficients are nonnegative (each counts subsets of the ground
    set), h(u, 0) = (u + 1)^(#coloops) and h(0, v) counts spanning subsets
    by the size of their complement; those specializations are exercised in
    tests, the route agreement is enforced here.
    """
    counts = rank_size_counts(M)
    h1 = h_from_counts(counts, M.size, M.r)
    t = {}
    for (c, nu), n in counts.items():
        # reuse the same walk for the Tutte polynomial to feed route 2
        for i in range(c + 1):
            ci = comb(c, i) * (-1) ** (c - i)
            for j in range(nu + 1):
                coeff = n * ci * comb(nu, j) * (-1) ** (nu - j)
                if coeff:
                    t[(i, j)] = t.get((i, j), 0) + coeff
    h2 = h_from_tutte(BivariatePoly(t), M.size, M.r)
    if h1 != h2:
        raise InternalInvariantViolation(
            "h polynomial routes disagree: "
            f"subset sum {h1!r} vs Tutte substitution {h2!r}"
        )
    if any(c < 0 for _, c in h1.terms()):
        raise InternalInvariantViolation(f"negative h coefficient in {h1!r}")
    return h1


def h_matrix(M: Matroid, h: BivariatePoly | None = None):
    """h coefficients as a (r+1) x (#E-r+1) row-major table; rows index the
    u-exponent, columns the v-exponent."""
    if h is None:
        h = h_polynomial(M)
    return [
        [h.coeff(p, q) for q in range(M.size - M.r + 1)]
        for p in range(M.r + 1)
    ]

"""Shared brute-force reference computations used across the test suite.

Everything here recomputes invariants by direct subset enumeration, with no
shared code paths beyond the rank oracle itself, so the fast implementations
are checked against independent definitions.
"""

from itertools import chain, combinations

from matroid_workbench import BivariatePoly, UnivariatePoly


def powerset(elements):
    elems = list(elements)
    return chain.from_iterable(combinations(elems, k) for k in range(len(elems) + 1))


def brute_tutte(M):
    """Corank-nullity sum computed subset by subset with plain rank calls."""
    terms = {}
    r = M.r
    for A in powerset(M.elements):
        rk = M.rank(A)
        c, nu = r - rk, len(A) - rk
        # expand (x-1)^c (y-1)^nu directly
        part = BivariatePoly.monomial(0, 0, 1)
        for _ in range(c):
            part = part * BivariatePoly({(1, 0): 1, (0, 0): -1})
        for _ in range(nu):
            part = part * BivariatePoly({(0, 1): 1, (0, 0): -1})
        for key, val in part.terms():
            terms[key] = terms.get(key, 0) + val
    return BivariatePoly({k: v for k, v in terms.items() if v})


def brute_h(M):
    """h(u, v) = sum over subsets of u^(r - rk) v^(m - nullity)."""
    terms = {}
    r, m = M.r, M.size - M.r
    for A in powerset(M.elements):
        rk = M.rank(A)
        key = (r - rk, m - (len(A) - rk))
        terms[key] = terms.get(key, 0) + 1
    return BivariatePoly(terms)


def brute_dual_h(M):
    """h of the dual matroid, written as a sum over subsets of M itself:

    h_{M*}(u, v) = sum over A of u^(nullity_M(A)) v^(rank_M(A)).
    """
    terms = {}
    for A in powerset(M.elements):
        rk = M.rank(A)
        key = (len(A) - rk, rk)
        terms[key] = terms.get(key, 0) + 1
    return BivariatePoly(terms)


def spanning_poly(M):
    """sum over spanning subsets A of v^(#E - #A)."""
    terms = {}
    n, r = M.size, M.r
    for A in powerset(M.elements):
        if M.rank(A) == r:
            d = n - len(A)
            terms[(0, d)] = terms.get((0, d), 0) + 1
    return BivariatePoly(terms)


def swap_xy(p):
    return BivariatePoly({(j, i): c for (i, j), c in p.terms()})


def upoly(*coeffs_desc):
    """UnivariatePoly from coefficients listed highest degree first."""
    n = len(coeffs_desc)
    return UnivariatePoly({n - 1 - i: c for i, c in enumerate(coeffs_desc) if c})


def bin_power(a, b, n):
    """(a*x + b)^n as a UnivariatePoly in x."""
    out = UnivariatePoly({0: 1})
    for _ in range(n):
        out = out * UnivariatePoly({1: a, 0: b})
    return out


def abs_coeff_row(p: UnivariatePoly):
    """[|coeff of u^(d-k)|] for k = 0..d — Whitney-number reading order."""
    d = p.degree()
    return [abs(p.coeff(d - k)) for k in range(d + 1)]

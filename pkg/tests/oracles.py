"""Slow, independent reference implementations used to check the library.

Nothing here imports toricproj internals; inputs and outputs are plain lists.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd

import numpy as np
import sympy


def textbook_hnf(rows, ncols):
    """Row HNF by repeated min-abs-pivot Euclid steps, then upward reduction."""
    a = [list(r) for r in rows if any(r)]
    out = []
    col = 0
    while a and col < ncols:
        while True:
            live = [r for r in a if r[col] != 0]
            if not live:
                break
            piv = min(live, key=lambda r: abs(r[col]))
            rest = []
            for r in a:
                if r is piv:
                    continue
                q = r[col] // piv[col]
                rest.append([x - q * y for x, y in zip(r, piv)])
            if all(r[col] == 0 for r in rest):
                if piv[col] < 0:
                    piv = [-x for x in piv]
                out.append(piv)
                a = [r for r in rest if any(r)]
                break
            a = [piv] + rest
        col += 1
    # reduce entries above pivots into [0, pivot)
    for i in range(len(out)):
        pc = next(j for j, x in enumerate(out[i]) if x)
        for k in range(i):
            q = out[k][pc] // out[i][pc]
            out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def det(rows):
    """Determinant by Fraction Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(d)


def rank(rows, ncols):
    a = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    for c in range(ncols):
        p = next((r for r in range(rk, len(a)) if a[r][c] != 0), None)
        if p is None:
            continue
        a[rk], a[p] = a[p], a[rk]
        for r in range(len(a)):
            if r != rk and a[r][c] != 0:
                f = a[r][c] / a[rk][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk


def minors_gcd(rows, k):
    """gcd of all k x k minors."""
    if k == 0:
        return 1
    g = 0
    nr, nc = len(rows), len(rows[0]) if rows else 0
    for ri in combinations(range(nr), k):
        for ci in combinations(range(nc), k):
            g = gcd(g, det([[rows[r][c] for c in ci] for r in ri]))
    return g


def determinantal_divisors(rows):
    """Nonzero invariant factors d_k / d_(k-1) of the Smith form."""
    if not rows:
        return []
    r = rank(rows, len(rows[0]))
    ds = [minors_gcd(rows, k) for k in range(r + 1)]
    return [ds[k] // ds[k - 1] for k in range(1, r + 1)]


def is_saturated(basis, ncols):
    """A rank-r integer basis spans a saturated lattice iff its r-minors have gcd 1."""
    if not basis:
        return True
    return minors_gcd(basis, len(basis)) == 1


def small_kernel_vectors(rows, ncols, bound):
    """All nonzero u in [-bound, bound]^ncols with rows * u = 0."""
    grid = np.array(list(product(range(-bound, bound + 1), repeat=ncols)), dtype=np.int64)
    m = np.array(rows, dtype=np.int64).reshape(len(rows), ncols)
    hit = np.all(grid @ m.T == 0, axis=1) & np.any(grid != 0, axis=1)
    return [tuple(int(x) for x in v) for v in grid[hit]]


def in_lattice(basis, v):
    """Exact membership: v in span_Z(basis) iff adding v keeps the rank and the
    gcd of maximal minors (i.e. the lattice covolume inside its span)."""
    if not any(v):
        return True
    if not basis:
        return False
    ncols = len(v)
    r = rank(basis, ncols)
    ext = [list(b) for b in basis] + [list(v)]
    if rank(ext, ncols) != r:
        return False
    return minors_gcd(basis, r) == minors_gcd(ext, r)


def in_lattice_bruteforce(basis, v, coeff=10):
    for cs in product(range(-coeff, coeff + 1), repeat=len(basis)):
        if all(sum(c * b[j] for c, b in zip(cs, basis)) == v[j] for j in range(len(v))):
            return True
    return not basis and not any(v)


def p_saturation_bruteforce(lat, sub, p):
    """Least k with p^k * lat inside sub, or None; sub is assumed inside lat."""
    r = rank(lat, len(lat[0])) if lat else 0
    if r == 0:
        return 0
    if rank(sub, len(lat[0])) != r if sub else True:
        return None
    index = abs(minors_gcd(sub, r)) // abs(minors_gcd(lat, r))
    k, pk = 0, 1
    while pk <= index:
        if all(in_lattice(sub, [pk * x for x in b]) for b in lat):
            return k
        k += 1
        pk *= p
    return None


def minimal_zero_patterns(sides, forced, nvars):
    """sides: list of (plus_support, minus_support) as sets. Exhaustive search."""
    good = []
    others = [i for i in range(nvars) if i != forced]
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            z = {forced, *extra}
            if all(bool(p & z) == bool(m & z) for p, m in sides):
                good.append(frozenset(z))
    return {z for z in good if not any(o < z for o in good)}


def sympy_power_identity(binomial_plus, binomial_minus, d, poly_terms, columns):
    """Check (t^plus - t^minus)^d == phi(f) with sympy, phi(x_i) = t^columns[i]."""
    l = len(binomial_plus)
    ts = sympy.symbols(f"t1:{l + 1}")
    lhs = (sympy.Mul(*[t**k for t, k in zip(ts, binomial_plus)])
           - sympy.Mul(*[t**k for t, k in zip(ts, binomial_minus)])) ** d
    images = [sympy.Mul(*[t**k for t, k in zip(ts, col)]) for col in columns]
    rhs = sum(c * sympy.Mul(*[img**k for img, k in zip(images, e)]) for e, c in poly_terms)
    return sympy.expand(lhs - rhs) == 0

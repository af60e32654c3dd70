"""Certificate mutations: each should make verification fail."""

from dataclasses import replace

from toricproj.poly import Poly
from toricproj.stci import PowerIdentity


def bump_coefficient(cert, j, exps):
    """Add 1 to the coefficient of x^exps in delta j, in the delta and in its identity."""
    old = cert.deltas[j]
    new = old + Poly.monomial(exps)
    deltas = tuple(new if k == j else d for k, d in enumerate(cert.deltas))
    idents = tuple(PowerIdentity(i.binomial, i.power, new) if i.poly == old else i for i in cert.identities)
    return replace(cert, deltas=deltas, identities=idents)


def all_coefficient_bumps(cert):
    for j, d in enumerate(cert.deltas):
        for e in d.terms:
            yield (j, e), bump_coefficient(cert, j, e)

"""Subgroups of Z^k kept in canonical (HNF) form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError
from .linalg import IntMat, _hnf_rows, elementary_divisors, kernel_basis


@dataclass(frozen=True)
class Lattice:
    """A lattice L in Z^ambient, stored by its canonical HNF basis.

    Because the basis is canonical, ``==`` is lattice equality.
    """

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient: int) -> Lattice:
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise InputError(f"vector {v} does not live in Z^{ambient}")
        return cls(ambient, tuple(tuple(r) for r in _hnf_rows(vecs, ambient)))

    @classmethod
    def full(cls, ambient: int) -> Lattice:
        return cls.span(IntMat.identity(ambient).to_rows(), ambient)

    @classmethod
    def zero(cls, ambient: int) -> Lattice:
        return cls(ambient, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> IntMat:
        return IntMat.from_rows(self.basis, self.ambient)

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...] | None:
        """Integer coefficients of v in the basis, or None if v is not in L."""
        if len(v) != self.ambient:
            raise InputError(f"vector of length {len(v)} tested against a lattice in Z^{self.ambient}")
        v = list(v)
        coeffs = []
        for row in self.basis:
            j = next(i for i, x in enumerate(row) if x)
            if any(v[:j]):
                return None
            q, r = divmod(v[j], row[j])
            if r:
                return None
            coeffs.append(q)
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        if any(v):
            return None
        return tuple(coeffs)

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None

    def to_json(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "rank": str(self.rank),
            "basis": [[str(x) for x in r] for r in self.basis],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Lattice:
        try:
            ambient = int(obj["ambient"])
            vecs = [[int(x) for x in r] for r in obj["basis"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed lattice JSON: {exc}") from None
        return cls.span(vecs, ambient)


def contains(lat: Lattice, v: Sequence[int]) -> bool:
    return v in lat


def is_sublattice(l1: Lattice, l2: Lattice) -> bool:
    """True iff l1 is a subset of l2."""
    if l1.ambient != l2.ambient:
        raise InputError(f"lattices live in Z^{l1.ambient} and Z^{l2.ambient}")
    return all(b in l2 for b in l1.basis)


def image_lattice(n: IntMat, m: IntMat) -> Lattice:
    """The lattice n(ker_Z(m)) = {n u : m u = 0} inside Z^{n.rows}.

    Images of a kernel basis suffice to span it.
    """
    if n.cols != m.cols:
        raise InputError(f"column counts differ: n has {n.cols}, m has {m.cols}")
    return Lattice.span([n.apply(u) for u in kernel_basis(m).basis], n.rows)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def p_saturation_index(lat: Lattice, sub: Lattice, p: int) -> int | None:
    """Least k with p^k * lat inside sub, or None if no power of p works.

    ``sub`` must be a sublattice of ``lat``. The quotient lat/sub is read off
    from the Smith form of sub's basis written in lat's coordinates: some k
    exists iff the quotient is a finite p-group, and then k is the largest
    p-adic valuation among the elementary divisors.
    """
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if not is_sublattice(sub, lat):
        raise PreconditionError("p_saturation_index needs sub to be contained in lat")
    if lat.rank == 0:
        return 0
    coords = IntMat.from_rows([lat.coordinates(b) for b in sub.basis], lat.rank)
    divisors = elementary_divisors(coords)
    if len(divisors) < lat.rank:
        return None
    k = 0
    for d in divisors:
        v = 0
        while d % p == 0:
            d //= p
            v += 1
        if d != 1:
            return None
        k = max(k, v)
    return k

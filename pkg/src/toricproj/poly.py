"""Sparse (Laurent) polynomials with integer coefficients and monomial maps."""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .linalg import IntMat

Exps = tuple[int, ...]


def _grlex_key(e: Exps):
    return (sum(e), e)


class Poly:
    """Immutable sparse polynomial in ``nvars`` variables.

    Terms map exponent tuples to nonzero ints. Exponents may be negative,
    which is how Laurent images of a parametrization are represented.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | Iterable = ()):
        if nvars < 0:
            raise InputError("negative variable count")
        acc: dict[Exps, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise InputError(f"exponent {e} has length {len(e)}, expected {nvars}")
            acc[e] = acc.get(e, 0) + int(c)
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls(nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: int = 1) -> Poly:
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def var(cls, i: int, nvars: int) -> Poly:
        return cls.monomial([int(j == i) for j in range(nvars)])

    @property
    def terms(self) -> Mapping[Exps, int]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Terms in descending graded-lex order (for stable output only)."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: Poly):
        if other.nvars != self.nvars:
            raise InputError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        self._check(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Poly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.nvars, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        acc: dict[Exps, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Poly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return power(self, e)

    def as_binomial(self) -> Binomial | None:
        """Return x^u - x^v if this polynomial has that shape, else None."""
        if not self._terms:
            return Binomial.zero(self.nvars)
        if len(self._terms) != 2:
            return None
        (e1, c1), (e2, c2) = self._terms.items()
        if {c1, c2} != {1, -1} or min(e1 + e2) < 0:
            return None
        return Binomial(e1, e2) if c1 == 1 else Binomial(e2, e1)

    def evaluate(self, point: Sequence[int]) -> int:
        return sum(c * _mono_value(e, point) for e, c in self._terms.items())

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.nvars}, {format_poly(self)!r})"

    def to_json(self) -> dict:
        return {
            "vars": str(self.nvars),
            "terms": [{"c": str(c), "e": [str(x) for x in e]} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Poly:
        try:
            nvars = int(obj["vars"])
            return cls(nvars, [([int(x) for x in t["e"]], int(t["c"])) for t in obj["terms"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed polynomial JSON: {exc}") from None


def _mono_value(e: Exps, point: Sequence[int]) -> int:
    v = 1
    for x, k in zip(point, e):
        if k:
            v *= x ** k
    return v


def power(p: Poly, e: int) -> Poly:
    """p**e by square-and-multiply; e >= 0."""
    if e < 0:
        raise InputError("negative exponent")
    result = Poly.constant(1, p.nvars)
    base = p
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


@dataclass(frozen=True)
class Binomial:
    """t^plus - t^minus with non-negative exponent vectors.

    ``binomial_from_vector`` produces the reduced form (disjoint supports);
    images of binomials under a monomial map generally share a common factor,
    so disjointness is not enforced here.
    """

    plus: Exps
    minus: Exps

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(int(x) for x in self.plus))
        object.__setattr__(self, "minus", tuple(int(x) for x in self.minus))
        if len(self.plus) != len(self.minus):
            raise InputError("binomial sides have different lengths")
        if min(self.plus + self.minus, default=0) < 0:
            raise InputError("binomial exponents must be non-negative")

    @classmethod
    def zero(cls, nvars: int) -> Binomial:
        return cls((0,) * nvars, (0,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.plus)

    @property
    def vector(self) -> Exps:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    def is_zero(self) -> bool:
        return self.plus == self.minus

    def is_reduced(self) -> bool:
        return all(not (a and b) for a, b in zip(self.plus, self.minus))

    def to_poly(self) -> Poly:
        return Poly(self.nvars, [(self.plus, 1), (self.minus, -1)])

    def to_json(self) -> dict:
        return {"plus": [str(x) for x in self.plus], "minus": [str(x) for x in self.minus]}

    @classmethod
    def from_json(cls, obj: dict) -> Binomial:
        try:
            return cls([int(x) for x in obj["plus"]], [int(x) for x in obj["minus"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed binomial JSON: {exc}") from None


def binomial_from_vector(z: Sequence[int]) -> Binomial:
    """F(z) = t^{z+} - t^{z-}."""
    return Binomial([max(x, 0) for x in z], [max(-x, 0) for x in z])


@dataclass(frozen=True)
class MonomialMap:
    """x_i -> t^{columns[i]}.

    With ``laurent=False`` every column must be non-negative and nonzero, so
    the image lands in an honest polynomial ring.
    """

    columns: tuple[Exps, ...]
    target_vars: int
    laurent: bool = False

    def __post_init__(self):
        cols = tuple(tuple(int(x) for x in c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        for c in cols:
            if len(c) != self.target_vars:
                raise InputError("monomial map column has the wrong length")
            if not self.laurent and (min(c, default=0) < 0 or not any(c)):
                raise InputError(f"column {c} is not a nonzero non-negative vector")

    @classmethod
    def from_matrix(cls, m: IntMat, laurent: bool = False) -> MonomialMap:
        return cls(tuple(m.col(j) for j in range(m.cols)), m.rows, laurent)

    @property
    def source_vars(self) -> int:
        return len(self.columns)

    def image_exponent(self, e: Sequence[int]) -> Exps:
        out = [0] * self.target_vars
        for k, col in zip(e, self.columns):
            if k:
                for i, x in enumerate(col):
                    out[i] += k * x
        return tuple(out)

    def apply_binomial(self, b: Binomial) -> Binomial:
        if self.laurent:
            raise InputError("binomial images need a non-negative map")
        return Binomial(self.image_exponent(b.plus), self.image_exponent(b.minus))


def apply_map(m: MonomialMap, p: Poly) -> Poly:
    if p.nvars != m.source_vars:
        raise InputError(f"polynomial in {p.nvars} variables, map expects {m.source_vars}")
    return Poly(m.target_vars, [(m.image_exponent(e), c) for e, c in p.terms.items()])


def a_degree_check(a: IntMat, p: Poly) -> Exps | None:
    """The common A-degree of all terms of p, or None if terms disagree.

    The zero polynomial has no terms and also yields None.
    """
    if a.cols != p.nvars:
        raise InputError(f"grading matrix has {a.cols} columns, polynomial has {p.nvars} variables")
    degrees = {a.apply(e) for e in p.terms}
    if len(degrees) != 1:
        return None
    return degrees.pop()


_TERM = re.compile(r"([+-])?\s*(\d+)?\s*\*?\s*((?:x\d+(?:\^\d+)?\s*\*?\s*)*)")
_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_poly(text: str, nvars: int | None = None) -> Poly:
    """Parse text such as ``"x4^7 - 3 x1 x2 x4^4 x5^2 + 2"``.

    Variables are x1, x2, ... (1-based). ``nvars`` defaults to the largest
    index that appears.
    """
    s = text.strip()
    if not s:
        raise InputError("empty polynomial text")
    raw = []
    pos = 0
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos >= len(s):
            break
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos or not (mt.group(2) or mt.group(3).strip()):
            raise InputError(f"cannot parse polynomial near {s[pos:pos + 15]!r}")
        if raw and not mt.group(1):
            raise InputError(f"missing operator near {s[pos:pos + 15]!r}")
        sign = -1 if mt.group(1) == "-" else 1
        coef = int(mt.group(2)) if mt.group(2) else 1
        powers: dict[int, int] = {}
        for var, ex in _FACTOR.findall(mt.group(3)):
            i = int(var)
            if i < 1:
                raise InputError("variables are numbered from x1")
            powers[i] = powers.get(i, 0) + (int(ex) if ex else 1)
        raw.append((sign * coef, powers))
        pos = mt.end()
    top = max((i for _, pw in raw for i in pw), default=0)
    if nvars is None:
        nvars = top
    elif top > nvars:
        raise InputError(f"x{top} used in a polynomial with {nvars} variables")
    return Poly(nvars, [([pw.get(i + 1, 0) for i in range(nvars)], c) for c, pw in raw])


def format_poly(p: Poly) -> str:
    if not p:
        return "0"
    out = []
    for e, c in p.sorted_terms():
        mono = " ".join(f"x{i + 1}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(e) if k)
        mag = abs(c)
        body = mono if (mono and mag == 1) else (f"{mag} {mono}".strip())
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)

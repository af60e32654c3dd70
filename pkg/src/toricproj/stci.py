"""Set-theoretic complete intersection certificates.

A certificate packages a base toric ideal I_N, a projection I_M of it, the
equations of I_N, the extra polynomials f_1..f_s and the power identities
(F)^d = phi(f) that tie them to the image lattice. ``verify_certificate``
rechecks every claim from the raw data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb, gcd
from typing import Sequence

from .errors import InputError
from .lattice import Lattice, image_lattice
from .linalg import IntMat, gcd_maximal_minors, kernel_basis, solve_right_factor
from .poly import Binomial, MonomialMap, Poly, a_degree_check, apply_map, power
from .toric import block_shape_permutation, contains_polynomial, is_projection

FAMILIES = ("thm61", "thm62", "thm63", "ex46-D", "ex46-N", "ex55")


@dataclass(frozen=True)
class PowerIdentity:
    """Claim: binomial ** power == phi(poly)."""

    binomial: Binomial
    power: int
    poly: Poly

    def to_json(self) -> dict:
        return {"binomial": self.binomial.to_json(), "power": str(self.power), "poly": self.poly.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> PowerIdentity:
        return cls(Binomial.from_json(obj["binomial"]), int(obj["power"]), Poly.from_json(obj["poly"]))


@dataclass(frozen=True)
class FamilyParams:
    variant: str
    params: dict

    def __post_init__(self):
        if self.variant not in FAMILIES:
            raise InputError(f"unknown family {self.variant!r}; expected one of {FAMILIES}")


@dataclass(frozen=True)
class StciCertificate:
    family: FamilyParams
    base: IntMat
    target: IntMat
    base_gens: tuple[Poly, ...]
    deltas: tuple[Poly, ...]
    identities: tuple[PowerIdentity, ...]
    s: int
    lattice_vector: tuple[int, ...] | None = None
    trivial: str | None = None

    def to_json(self, transcript=None) -> dict:
        out = {
            "family": {"variant": self.family.variant,
                       "params": {k: _jsonable(v) for k, v in self.family.params.items()}},
            "base": self.base.to_json(),
            "target": self.target.to_json(),
            "base_gens": [p.to_json() for p in self.base_gens],
            "deltas": [p.to_json() for p in self.deltas],
            "identities": [i.to_json() for i in self.identities],
            "s": str(self.s),
            "lattice_vector": None if self.lattice_vector is None else [str(x) for x in self.lattice_vector],
            "trivial": self.trivial,
        }
        if transcript is not None:
            out["transcript"] = transcript.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> StciCertificate:
        try:
            fam = obj.get("family") or {"variant": "ex55", "params": {}}
            vec = obj.get("lattice_vector")
            return cls(
                family=FamilyParams(fam["variant"], {k: _from_jsonable(v) for k, v in fam.get("params", {}).items()}),
                base=IntMat.from_json(obj["base"]),
                target=IntMat.from_json(obj["target"]),
                base_gens=tuple(Poly.from_json(p) for p in obj.get("base_gens", [])),
                deltas=tuple(Poly.from_json(p) for p in obj["deltas"]),
                identities=tuple(PowerIdentity.from_json(i) for i in obj.get("identities", [])),
                s=int(obj["s"]),
                lattice_vector=None if vec is None else tuple(int(x) for x in vec),
                trivial=obj.get("trivial"),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed certificate JSON: missing or bad field {exc}") from None


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [str(x) for x in v]
    return str(v)


def _from_jsonable(v):
    if isinstance(v, list):
        return tuple(int(x) for x in v)
    return int(v)


def compute_w(n: IntMat, a: Sequence[int]) -> int:
    """w = |N| / |(N a^T)|, |.| being the gcd of maximal minors.

    For n of diagonal-block shape this is the unique positive w with
    n(ker_Z M) = <w a> whenever ker_Z(D) = <a> and M = D n.
    """
    if block_shape_permutation(n) is None:
        raise InputError("compute_w needs n of diagonal-block shape (positive diagonal block, "
                         "non-negative remaining columns, none of them zero)")
    if len(a) != n.rows:
        raise InputError(f"vector of length {len(a)} for a matrix with {n.rows} rows")
    num = gcd_maximal_minors(n)
    den = gcd_maximal_minors(n.with_column(a))
    if den == 0:
        raise InputError("augmented matrix has vanishing maximal minors")
    w, r = divmod(num, den)
    assert r == 0, "gcd of minors of a submatrix must divide that of the augmentation"
    return w


def primitive_lattice_vector(n: IntMat, m: IntMat) -> tuple[int, ...] | None:
    """Generator a of ker_Z(D) for the rational D with D n = m, when rank 1."""
    d = solve_right_factor(n, m)
    if d is None:
        return None
    rows = []
    for r in d.to_rows():
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in r])
    ker = kernel_basis(IntMat.from_rows(rows, n.rows))
    if ker.rank != 1:
        return None
    return ker.basis[0]


def _mono(nvars: int, powers: dict[int, int], coef: int = 1) -> Poly:
    """Monomial from 1-based variable indices."""
    e = [0] * nvars
    for i, k in powers.items():
        e[i - 1] += k
    return Poly.monomial(e, coef)


def _bin(nvars: int, plus: dict[int, int], minus: dict[int, int]) -> Binomial:
    p = [0] * nvars
    q = [0] * nvars
    for i, k in plus.items():
        p[i - 1] += k
    for i, k in minus.items():
        q[i - 1] += k
    return Binomial(p, q)


def power_family_certificate(m: int, d: int, c: Sequence[int],
                             base_gens: Sequence[Poly] = ()) -> StciCertificate:
    """Certificate for the m x (m+d) matrix with first row
    (c1, c1-c2, ..., c1-d*c2, 0..0) and rows (0, k*c_j.., c1 on the diagonal).

    Base is the (m+1) x (m+d) matrix N_d; the single extra equation is the
    alternating-binomial polynomial whose image is the d-th power of
    t2^c1 - t1^(c1-d c2) t3^(d c3) ... . Equations for I_{N_d} themselves are
    not generated here and may be supplied by the caller.
    """
    c = [int(x) for x in c]
    if m < 1:
        raise InputError("m must be at least 1")
    if len(c) != m + 1:
        raise InputError(f"need {m + 1} values c1..c{m + 1}, got {len(c)}")
    if d <= 1:
        raise InputError("d must exceed 1")
    c1, c2 = c[0], c[1]
    if c1 <= 0 or min(c[1:]) < 0:
        raise InputError("c1 must be positive and c2.. non-negative")
    if c1 < d * c2:
        raise InputError("need c1 >= d*c2")
    nv = m + d
    nd = [[0] * nv for _ in range(m + 1)]
    for j in range(d + 1):
        nd[0][j] = d - j
        nd[1][j] = j
    for k in range(2, m + 1):
        nd[k][d + k - 1] = d
    target = [[0] * nv for _ in range(m)]
    for j in range(d + 1):
        target[0][j] = c1 - j * c2
        for k in range(1, m):
            target[k][j] = j * c[k + 1]
    for k in range(1, m):
        target[k][d + k] = c1
    n_mat = IntMat.from_rows(nd, nv)
    m_mat = IntMat.from_rows(target, nv)
    if m_mat.zero_columns():
        raise InputError(f"parameters give a zero column {m_mat.zero_columns()[0] + 1} in the target matrix")

    g = 0
    for x in [c1, c1 - d * c2] + [d * ck for ck in c[2:]]:
        g = gcd(g, x)
    avec = tuple([(c1 - d * c2) // g, -c1 // g] + [d * ck // g for ck in c[2:]])

    f = Poly.zero(nv)
    for i in range(d + 1):
        powers = {d + 1 - i: c1 - d * c2}
        powers[d + 1] = powers.get(d + 1, 0) + (d - i) * c2
        for k in range(3, m + 2):
            powers[d + k - 1] = powers.get(d + k - 1, 0) + i * c[k - 1]
        f = f + _mono(nv, powers, (-1) ** i * comb(d, i))
    plus = {2: c1}
    minus = {1: c1 - d * c2}
    for k in range(3, m + 2):
        minus[k] = d * c[k - 1]
    ident = PowerIdentity(_bin(m + 1, plus, minus), d, f)
    return StciCertificate(FamilyParams("thm61", {"m": m, "d": d, "c": tuple(c)}),
                           n_mat, m_mat, tuple(base_gens), (f,), (ident,), 1, avec)


CURVE_AB_BASE = IntMat.from_rows([[5, 1, 4, 0], [0, 2, 3, 5]])


def curve_ab_certificate(a: int, b: int) -> StciCertificate:
    """Certificate for the monomial curve (t^a, t^(a+2b), t^(2a+3b), t^(2a+5b)).

    When a = 1 the curve ideal is generated by x_i - x_1^(a_i) and the
    certificate only carries a marker saying so.
    """
    if a < 1 or b < 1:
        raise InputError("a and b must be positive")
    target = IntMat.from_rows([[a, a + 2 * b, 2 * a + 3 * b, 2 * a + 5 * b]])
    base_gens = (
        _mono(4, {3: 2}) - _mono(4, {1: 1, 2: 3}),
        _mono(4, {2: 5}) - _mono(4, {2: 1, 3: 1, 4: 1}, 2) + _mono(4, {1: 1, 4: 2}),
    )
    h = gcd(a, 2 * a + 5 * b)
    avec = (-(2 * a + 5 * b) // h, a // h)
    fam = FamilyParams("thm62", {"a": a, "b": b})
    if a == 1:
        return StciCertificate(fam, CURVE_AB_BASE, target, base_gens, (), (), 1, avec,
                               trivial="a = 1: the curve ideal is the complete intersection of x_i - x_1^(a_i)")
    nu = a % 2
    mu = (a - 3 * nu) // 2
    f = (_mono(4, {1: 4 * mu + 6 * nu + 5 * b})
         - _mono(4, {1: 3 * mu + 4 * nu + 4 * b, 2: mu, 3: nu}, 5)
         + _mono(4, {1: 2 * mu + 2 * nu + 3 * b, 2: 2 * mu, 3: 2 * nu}, 10)
         - _mono(4, {1: mu + 2 * b, 2: 3 * mu, 3: 3 * nu}, 10)
         + _mono(4, {1: nu + b, 2: nu, 3: mu, 4: mu + 2 * nu}, 5)
         - _mono(4, {4: 2 * mu + 3 * nu}))
    ident = PowerIdentity(_bin(2, {1: 2 * a + 5 * b}, {2: a}), 5, f)
    fam = FamilyParams("thm62", {"a": a, "b": b, "mu": mu, "nu": nu})
    return StciCertificate(fam, CURVE_AB_BASE, target, base_gens, (f,), (ident,), 1, avec)


def curve_46_base(a: int) -> IntMat:
    return IntMat.from_rows([[2, 3, a + 1, 0], [2, 3, 0, a + 1]])


def curve_46_certificate(a: int) -> StciCertificate:
    """Certificate for the monomial curve (t^4, t^6, t^a, t^(a+2)), a odd >= 7."""
    if a % 2 == 0 or a < 7:
        raise InputError(
            f"a = {a} is outside the generated range (odd a >= 7); for even a the semigroup "
            "<4, 6, a, a+2> is symmetric, and that case is covered by the known results on symmetric "
            "semigroups, which supply no explicit equations to build a certificate from"
        )
    nu = 1
    mu = (a - 3) // 2
    target = IntMat.from_rows([[4, 6, a, a + 2]])
    base_gens = (
        _mono(4, {1: (a + 1) // 2}) - _mono(4, {3: 1, 4: 1}),
        _mono(4, {1: 3}) - _mono(4, {2: 2}),
    )
    f = Poly.zero(4)
    for i in range(a + 2):
        sign = (-1) ** i * comb(a + 1, i)
        if 2 * i <= a + 1:
            f = f + _mono(4, {1: i * mu, 2: i * nu, 3: a + 2 - 2 * i}, sign)
        else:
            j = a + 1 - i
            f = f + _mono(4, {1: j * (mu + 1), 2: nu * j, 4: 2 * i - a - 2}, sign)
    ident = PowerIdentity(_bin(2, {1: a + 2}, {2: a}), a + 1, f)
    return StciCertificate(FamilyParams("thm63", {"a": a, "mu": mu, "nu": nu}),
                           curve_46_base(a), target, base_gens, (f,), (ident,), 1, (a + 2, -a))


@dataclass
class Check:
    number: int
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"check": str(self.number), "name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Transcript:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, number, name, passed, detail=""):
        self.checks.append(Check(number, name, bool(passed), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks]}

    def __str__(self):
        lines = [f"[{'pass' if c.passed else 'FAIL'}] {c.number}. {c.name}" + (f": {c.detail}" if c.detail else "")
                 for c in self.checks]
        lines.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def verify_certificate(cert: StciCertificate) -> Transcript:
    """Recheck a certificate from scratch. Never raises on a false claim."""
    tr = Transcript()
    base, target = cert.base, cert.target

    if base.cols != target.cols:
        tr.add(1, "projection", False, f"base has {base.cols} columns, target {target.cols}")
        return tr
    proj = is_projection(base, target)
    tr.add(1, "projection", proj.holds and proj.consistent,
           f"ker_Z(base) inside ker_Z(target): {proj.sublattice_holds}; rational factor found: "
           f"{proj.witness is not None}")

    bad = []
    for label, mat, polys in (("base_gens", base, cert.base_gens), ("deltas", target, cert.deltas)):
        for j, p in enumerate(polys):
            if p.nvars != mat.cols or not contains_polynomial(mat, p):
                bad.append(f"{label}[{j}]")
    tr.add(2, "membership", not bad,
           "all base equations in I_N and all deltas in I_M" if not bad else "not in the ideal: " + ", ".join(bad))

    if base.zero_columns() or target.zero_columns():
        tr.add(3, "height difference", False, "zero column in a presentation matrix")
        return tr
    h_base = kernel_basis(base).rank
    h_target = kernel_basis(target).rank
    want = len(cert.deltas) if cert.trivial is None else cert.s
    ok3 = cert.s == h_target - h_base == want
    tr.add(3, "height difference", ok3,
           f"ht(I_M) = {h_target}, ht(I_N) = {h_base}, s = {cert.s}, deltas = {len(cert.deltas)}")

    image = image_lattice(base, target)
    if image.rank == 1:
        derived = primitive_lattice_vector(base, target)
        avec = cert.lattice_vector or derived
        try:
            w = compute_w(base, avec)
            expect = Lattice.span([[w * x for x in avec]], base.rows)
            same_line = derived is not None and Lattice.span([avec], base.rows) == Lattice.span([derived], base.rows)
            tr.add(4, "image lattice = <w a>", image == expect and same_line,
                   f"a = {list(avec)}, w = {w}, image basis = {[list(b) for b in image.basis]}")
        except InputError as exc:
            tr.add(4, "image lattice = <w a>", False, str(exc))
    else:
        tr.add(4, "image lattice = <w a>", True, f"not applicable: image lattice has rank {image.rank}; "
               f"basis = {[list(b) for b in image.basis]}")

    if cert.trivial is not None:
        tr.add(5, "power identities", True, "trivial case: " + cert.trivial)
    else:
        phi = MonomialMap.from_matrix(base)
        bad = []
        for j, ident in enumerate(cert.identities):
            if ident.binomial.nvars != base.rows or ident.poly.nvars != base.cols:
                bad.append(f"identity {j}: dimension mismatch")
                continue
            if power(ident.binomial.to_poly(), ident.power) != apply_map(phi, ident.poly):
                bad.append(f"identity {j}")
        unmatched = [j for j, p in enumerate(cert.deltas) if not any(i.poly == p for i in cert.identities)]
        if unmatched:
            bad.append("deltas without an identity: " + ", ".join(map(str, unmatched)))
        tr.add(5, "power identities", not bad and bool(cert.identities),
               f"{len(cert.identities)} identities expand exactly" if not bad and cert.identities
               else ("no identities" if not cert.identities else "failed: " + "; ".join(bad)))

    inhom = [j for j, p in enumerate(cert.deltas) if p.nvars != target.cols or a_degree_check(target, p) is None]
    tr.add(6, "A-homogeneity", not inhom,
           "every delta is homogeneous for the target grading" if not inhom
           else "not homogeneous: " + ", ".join(f"deltas[{j}]" for j in inhom))
    return tr


def certificate_from_text(text: str) -> StciCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not valid JSON: {exc}") from None
    return StciCertificate.from_json(obj)

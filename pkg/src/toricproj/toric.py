"""Toric presentations, projections and the binomial radical-generation test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InputError, PreconditionError
from .lattice import Lattice, image_lattice, is_prime, is_sublattice, p_saturation_index
from .linalg import IntMat, RatMat, kernel_basis, solve_right_factor
from .poly import Binomial, MonomialMap, Poly, apply_map

HOLDS = "HOLDS"
FAILS = "FAILS"
INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class ToricPresentation:
    matrix: IntMat
    kernel: Lattice
    height: int


def presentation(m: IntMat) -> ToricPresentation:
    zero = m.zero_columns()
    if zero:
        raise InputError(f"matrix column(s) {[j + 1 for j in zero]} are zero")
    ker = kernel_basis(m)
    return ToricPresentation(m, ker, ker.rank)


def contains_polynomial(pres: ToricPresentation | IntMat, f: Poly) -> bool:
    """f lies in the toric ideal iff x_i -> t^{a_i} sends it to zero."""
    m = pres.matrix if isinstance(pres, ToricPresentation) else pres
    if f.nvars != m.cols:
        raise InputError(f"polynomial in {f.nvars} variables, matrix has {m.cols} columns")
    return not apply_map(MonomialMap.from_matrix(m, laurent=True), f)


@dataclass(frozen=True)
class ProjectionReport:
    sublattice_holds: bool
    witness: RatMat | None

    @property
    def consistent(self) -> bool:
        # the lattice test and the rational factorisation are two routes to the same answer
        return self.sublattice_holds == (self.witness is not None)

    @property
    def holds(self) -> bool:
        return self.sublattice_holds

    def to_json(self) -> dict:
        return {
            "sublattice_holds": self.sublattice_holds,
            "witness": None if self.witness is None else self.witness.to_json(),
            "consistent": self.consistent,
        }


def is_projection(n: IntMat, m: IntMat) -> ProjectionReport:
    """Is I_M a projection of I_N, i.e. is I_N contained in I_M?"""
    if n.cols != m.cols:
        raise InputError(f"column counts differ: n has {n.cols}, m has {m.cols}")
    sub = is_sublattice(kernel_basis(n), kernel_basis(m))
    return ProjectionReport(sub, solve_right_factor(n, m))


def block_shape_permutation(n: IntMat) -> list[int] | None:
    """Column order putting n in the form (diag(b_1..b_l) | D), or None.

    Requires non-negative entries, l columns that are positive multiples of
    e_1..e_l, and every remaining column nonzero. Matrices of this shape
    satisfy Gamma(N) = V(I_N).
    """
    if not n.is_nonnegative() or n.zero_columns():
        return None
    diag: dict[int, int] = {}
    for j in range(n.cols):
        c = n.col(j)
        nz = [i for i, x in enumerate(c) if x]
        if len(nz) == 1 and nz[0] not in diag:
            diag[nz[0]] = j
    if len(diag) != n.rows:
        return None
    first = [diag[i] for i in range(n.rows)]
    return first + [j for j in range(n.cols) if j not in set(first)]


def zero_pattern_set(gens: Sequence[Binomial], forced: int, nvars: int | None = None) -> set[frozenset[int]]:
    """Inclusion-minimal sets Z of zeroed variables, containing ``forced``,
    on which every binomial has both monomials vanishing or neither.

    A monomial vanishes on Z iff its support meets Z. Search grows Z one
    variable at a time, only ever adding a variable that some violated
    binomial needs, so every minimal pattern is reached.
    """
    if nvars is None:
        if not gens:
            raise InputError("nvars is required when there are no generators")
        nvars = gens[0].nvars
    if not 0 <= forced < nvars:
        raise InputError(f"forced variable {forced} out of range")
    sides = []
    for g in gens:
        if g.nvars != nvars:
            raise InputError("binomials of different lengths")
        if g.is_zero():
            continue
        sides.append((frozenset(i for i, x in enumerate(g.plus) if x),
                      frozenset(i for i, x in enumerate(g.minus) if x)))

    found: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()
    stack = [frozenset([forced])]
    while stack:
        z = stack.pop()
        if z in seen:
            continue
        seen.add(z)
        if any(f <= z for f in found):
            continue
        for plus, minus in sides:
            vp, vm = bool(plus & z), bool(minus & z)
            if vp != vm:
                need = minus if vp else plus
                stack.extend(z | {v} for v in need)
                break
        else:
            found.add(z)
    return {z for z in found if not any(o < z for o in found)}


def pattern_is_consistent(gens: Sequence[Binomial], z: frozenset[int]) -> bool:
    for g in gens:
        if g.is_zero():
            continue
        vp = any(g.plus[i] for i in z)
        vm = any(g.minus[i] for i in z)
        if vp != vm:
            return False
    return True


class _ModEvaluator:
    """Vectorised evaluation of integer polynomials on batches of F_q points."""

    def __init__(self, polys: Sequence[Poly], q: int):
        self.q = q
        self._tables: dict[int, np.ndarray] = {}
        self.polys = []
        for p in polys:
            terms = []
            for e, c in p.terms.items():
                if min(e, default=0) < 0:
                    raise InputError("falsifier needs polynomials, not Laurent polynomials")
                terms.append((c % q, [(i, k) for i, k in enumerate(e) if k]))
            self.polys.append(terms)

    def _table(self, k: int) -> np.ndarray:
        t = self._tables.get(k)
        if t is None:
            t = np.array([pow(v, k, self.q) for v in range(self.q)], dtype=np.int64)
            self._tables[k] = t
        return t

    def all_vanish(self, pts: np.ndarray) -> np.ndarray:
        q = self.q
        ok = np.ones(len(pts), dtype=bool)
        for terms in self.polys:
            val = np.zeros(len(pts), dtype=np.int64)
            for c, factors in terms:
                t = np.full(len(pts), c, dtype=np.int64)
                for i, k in factors:
                    t = (t * self._table(k)[pts[:, i]]) % q
                val = (val + t) % q
            ok &= val == 0
        return ok


def finite_field_falsifier(gens_a: Sequence[Poly], gens_b: Sequence[Poly], q: int,
                           budget: int = 10**6, samples: int = 10**5, seed: int = 0,
                           chunk: int = 1 << 16) -> tuple[int, ...] | None:
    """Look for a point of F_q^l in the zero set of one system but not the other.

    All q^l points are tried (in lexicographic order) when q^l <= budget,
    otherwise ``samples`` uniform points drawn with ``seed``. A returned point
    proves the two zero sets differ over the algebraic closure of F_q; None
    proves nothing.
    """
    if not is_prime(q):
        raise InputError(f"{q} is not prime")
    polys = list(gens_a) + list(gens_b)
    if not polys:
        return None
    nv = polys[0].nvars
    if any(p.nvars != nv for p in polys):
        raise InputError("generators live in different numbers of variables")
    if q >= 1 << 31:
        raise InputError("field too large for the vectorised evaluator")
    ev_a, ev_b = _ModEvaluator(gens_a, q), _ModEvaluator(gens_b, q)

    def check(pts):
        bad = np.nonzero(ev_a.all_vanish(pts) != ev_b.all_vanish(pts))[0]
        return tuple(int(x) for x in pts[bad[0]]) if len(bad) else None

    total = q ** nv
    if total <= budget:
        weights = np.array([q ** (nv - 1 - j) for j in range(nv)], dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            pts = (idx[:, None] // weights[None, :]) % q
            hit = check(pts)
            if hit is not None:
                return hit
        return None
    rng = np.random.default_rng(seed)
    done = 0
    while done < samples:
        size = min(chunk, samples - done)
        hit = check(rng.integers(0, q, size=(size, nv), dtype=np.int64))
        if hit is not None:
            return hit
        done += size
    return None


@dataclass
class FalsifierConfig:
    primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)
    budget: int = 10**6
    samples: int = 10**5
    seed: int = 0


@dataclass
class CriterionReport:
    characteristic: int
    condition_a: dict
    condition_b: list[dict]
    overall: str
    assumptions: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "characteristic": str(self.characteristic),
            "condition_a": self.condition_a,
            "condition_b": self.condition_b,
            "overall": self.overall,
            "assumptions": list(self.assumptions),
        }


def _check_criterion_input(n, m, gens_im, fs, characteristic):
    problems = []
    if n.cols != m.cols:
        raise InputError(f"column counts differ: n has {n.cols}, m has {m.cols}")
    if characteristic != 0 and not is_prime(characteristic):
        raise InputError(f"characteristic must be 0 or a prime, got {characteristic}")
    if not n.is_nonnegative():
        problems.append("n has negative entries")
    if n.zero_columns():
        problems.append("n has a zero column")
    if m.zero_columns():
        problems.append("m has a zero column")
    if problems:
        raise PreconditionError(problems)
    if not is_projection(n, m).holds:
        problems.append("I_M is not a projection of I_N (ker n is not inside ker m)")
    for label, polys in (("gens_im", gens_im), ("fs", fs)):
        for j, f in enumerate(polys):
            if f.nvars != m.cols:
                problems.append(f"{label}[{j}] has {f.nvars} variables, expected {m.cols}")
                continue
            if f.as_binomial() is None:
                problems.append(f"{label}[{j}] = {f} is not a binomial")
            if not contains_polynomial(m, f):
                problems.append(f"{label}[{j}] = {f} is not in I_M")
    if not problems:
        spanned = Lattice.span([f.as_binomial().vector for f in gens_im], m.cols)
        if spanned != kernel_basis(m):
            problems.append("exponent vectors of gens_im do not span ker_Z(m)")
    if problems:
        raise PreconditionError(problems)


def _up_to_sign(polys: Sequence[Poly]) -> frozenset[Poly]:
    return frozenset(max(p, -p, key=lambda q: q.sorted_terms()[0][1]) for p in polys if p)


def compare_zero_sets(img_m: Sequence[Binomial], img_f: Sequence[Binomial], i: int, l: int,
                      characteristic: int = 0, config: FalsifierConfig | None = None) -> dict:
    """Condition (b) for one variable: do (img_m, t_i) and (img_f, t_i) have
    the same zero set? Returns a report entry with a verdict."""
    config = config or FalsifierConfig()
    entry = {"var": str(i + 1)}
    full = frozenset(range(l))
    pm = zero_pattern_set(img_m, i, l)
    pf = zero_pattern_set(img_f, i, l)
    if pm == pf and pm in ({full}, set()):
        entry["verdict"] = HOLDS
        entry["reason"] = "both zero sets are the origin" if pm else "both zero sets are empty"
        return entry
    ti = Poly.var(i, l)
    polys_m = [b.to_poly() for b in img_m] + [ti]
    polys_f = [b.to_poly() for b in img_f] + [ti]
    entry["verdict"] = INDETERMINATE
    entry["reason"] = "zero sets are not origin-only; no separating point found"
    for q in config.primes:
        pt = finite_field_falsifier(polys_m, polys_f, q, config.budget, config.samples, config.seed)
        if pt is None:
            continue
        # binomials take values in {-1, 0, 1} at 0/1 points, in every characteristic
        if all(x in (0, 1) for x in pt) or q == characteristic:
            entry["verdict"] = FAILS
            entry["witness"] = {"q": str(q), "point": [str(x) for x in pt]}
            entry["reason"] = "separating point found"
            break
        entry.setdefault("evidence", []).append({"q": str(q), "point": [str(x) for x in pt]})
    if "evidence" in entry and entry["verdict"] == INDETERMINATE:
        entry["reason"] = "zero sets differ over some F_q, which does not decide the question here"
    return entry


def radical_criterion(n: IntMat, m: IntMat, gens_im: Sequence[Poly], fs: Sequence[Poly],
                      characteristic: int = 0,
                      config: FalsifierConfig | None = None) -> CriterionReport:
    """Decide whether I_M = rad(I_N + (fs)) for binomials fs in I_M.

    ``gens_im`` must generate I_M; that is trusted, but each generator is
    checked to lie in I_M and their exponent vectors must span ker_Z(m).

    Condition (a) compares the lattice G spanned by the images n*f^ with the
    image lattice n(ker_Z m): equality in characteristic 0, a finite p-power
    index in characteristic p. Condition (b) compares, for each t_i, the zero
    sets of (phi(gens_im), t_i) and (phi(fs), t_i). It is settled exactly
    when both are the origin (or both empty); otherwise a finite-field
    search may exhibit a difference, else the verdict is INDETERMINATE.
    """
    config = config or FalsifierConfig()
    _check_criterion_input(n, m, gens_im, fs, characteristic)
    l = n.rows
    assumptions = []
    if block_shape_permutation(n) is None:
        assumptions.append("Gamma(N) = V(I_N) assumed, not verified (n is not of diagonal-block shape)")

    image = image_lattice(n, m)
    g = Lattice.span([n.apply(f.as_binomial().vector) for f in fs], l)
    cond_a = {"G": g.to_json(), "image": image.to_json()}
    if characteristic == 0:
        cond_a["verdict"] = HOLDS if g == image else FAILS
    else:
        k = p_saturation_index(image, g, characteristic)
        cond_a["verdict"] = HOLDS if k is not None else FAILS
        cond_a["k"] = None if k is None else str(k)

    phi = MonomialMap.from_matrix(n)
    img_m = [phi.apply_binomial(f.as_binomial()) for f in gens_im]
    img_f = [phi.apply_binomial(f.as_binomial()) for f in fs]
    same_system = _up_to_sign([b.to_poly() for b in img_m]) == _up_to_sign([b.to_poly() for b in img_f])
    cond_b = []
    for i in range(l):
        if same_system:
            cond_b.append({"var": str(i + 1), "verdict": HOLDS,
                           "reason": "both systems have the same nonzero generators"})
        else:
            cond_b.append(compare_zero_sets(img_m, img_f, i, l, characteristic, config))

    verdicts = [e["verdict"] for e in cond_b]
    if cond_a["verdict"] == FAILS or FAILS in verdicts:
        overall = FAILS
    elif all(v == HOLDS for v in verdicts):
        overall = HOLDS
    else:
        overall = INDETERMINATE
    return CriterionReport(characteristic, cond_a, cond_b, overall, assumptions)

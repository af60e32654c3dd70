"""Worked examples bundled as data: matrices, generator lists, certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import InputError
from .linalg import IntMat
from .poly import Binomial, Poly
from .stci import FamilyParams, PowerIdentity, StciCertificate


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    return json.loads(resources.files("toricproj").joinpath("data", name).read_text())


@dataclass(frozen=True)
class CriterionCase:
    """Inputs for one run of the radical criterion."""

    name: str
    n: IntMat
    m: IntMat
    gens_im: tuple[Poly, ...]
    fs: tuple[Poly, ...]


def curve_46_target(a: int) -> IntMat:
    return IntMat.from_rows([[4, 6, a, a + 2]])


def curve_46_D(a: int) -> IntMat:
    return IntMat.from_rows([[a - 2, a - 4, 2, 0], [0, 2, a - 4, a - 2]])


def curve_46_N(a: int) -> IntMat:
    return IntMat.from_rows([[2, 3, a + 1, 0], [2, 3, 0, a + 1]])


def curve_46_generators(a: int) -> tuple[Poly, ...]:
    table = _load("ex46_gens.json")
    if str(a) not in table:
        raise InputError(f"no stored generators of I_(4,6,{a},{a + 2}); available a: {sorted(map(int, table))}")
    return tuple(Poly.from_json(p) for p in table[str(a)])


def _xmono(powers: dict[int, int]) -> Poly:
    e = [0] * 4
    for i, k in powers.items():
        e[i - 1] = k
    return Poly.monomial(e)


def ex46_cases(a: int) -> tuple[CriterionCase, CriterionCase]:
    """Both projections of the curve (4, 6, a, a+2) with their binomial pairs."""
    if a % 2 == 0 or a < 7:
        raise InputError("the (4, 6, a, a+2) example needs odd a >= 7")
    m = curve_46_target(a)
    gens = curve_46_generators(a)
    fs_d = (_xmono({1: a + 2}) - _xmono({4: 4}), _xmono({4: 2}) - _xmono({1: 1, 3: 2}))
    fs_n = (_xmono({3: a + 2}) - _xmono({4: a}), _xmono({1: 1, 4: 1}) - _xmono({2: 1, 3: 1}))
    return (CriterionCase(f"ex46-D a={a}", curve_46_D(a), m, gens, fs_d),
            CriterionCase(f"ex46-N a={a}", curve_46_N(a), m, gens, fs_n))


def rem33_case() -> CriterionCase:
    """Negative control: the 6x6 matrix D (same toric ideal as the 3x6 N)."""
    d = _load("rem33.json")
    return CriterionCase(
        "rem33",
        IntMat.from_json(d["D"]),
        IntMat.from_json(d["M"]),
        tuple(Poly.from_json(p) for p in d["gens_im"]),
        tuple(Poly.from_json(p) for p in d["fs"]),
    )


def rem33_matrix_N() -> IntMat:
    return IntMat.from_json(_load("rem33.json")["N"])


def ex55_data() -> dict:
    return _load("ex55.json")


def ex55_certificate() -> StciCertificate:
    d = _load("ex55.json")
    deltas = tuple(Poly.from_json(p) for p in d["deltas"])
    idents = tuple(
        PowerIdentity(Binomial.from_json(i["binomial"]), int(i["power"]), deltas[int(i["delta"])])
        for i in d["identities"]
    )
    return StciCertificate(
        FamilyParams("ex55", {}),
        IntMat.from_json(d["N"]),
        IntMat.from_json(d["M"]),
        tuple(Poly.from_json(p) for p in d["base_gens"]),
        deltas,
        idents,
        2,
    )


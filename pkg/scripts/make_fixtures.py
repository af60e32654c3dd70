"""Regenerate the JSON preset fixtures in src/toricproj/data/.

Generators of the curve ideals I_(4,6,a,a+2) come from a lex Groebner basis
of the graph ideal (x_i - t^(a_i)) with t eliminated, computed by sympy. The
other presets are transcribed literal data. Run from the repository root:

    python scripts/make_fixtures.py
"""

import json
from pathlib import Path

import sympy

from toricproj.linalg import IntMat
from toricproj.poly import Poly, parse_poly
from toricproj.toric import contains_polynomial

DATA = Path(__file__).resolve().parents[1] / "src" / "toricproj" / "data"
CURVE_46_VALUES = (7, 9, 11, 13, 15)


def curve_generators(weights):
    t = sympy.Symbol("t")
    xs = sympy.symbols(f"x1:{len(weights) + 1}")
    gb = sympy.groebner([x - t**w for x, w in zip(xs, weights)], t, *xs, order="lex")
    out = []
    for g in gb.exprs:
        if g.has(t):
            continue
        poly = sympy.Poly(g, *xs)
        terms = [(list(e), int(c)) for e, c in poly.terms()]
        out.append(terms)
    return out


def poly_json(terms, nvars):
    return {"vars": str(nvars), "terms": [{"c": str(c), "e": [str(x) for x in e]} for e, c in terms]}


def text_poly_json(text, nvars):
    return parse_poly(text, nvars).to_json()


def main():
    DATA.mkdir(parents=True, exist_ok=True)

    ex46 = {}
    for a in CURVE_46_VALUES:
        gens = curve_generators((4, 6, a, a + 2))
        m = IntMat.from_rows([[4, 6, a, a + 2]])
        for g in gens:
            assert contains_polynomial(m, Poly(4, [(e, c) for e, c in g]))
        ex46[str(a)] = [poly_json(g, 4) for g in gens]
    (DATA / "ex46_gens.json").write_text(json.dumps(ex46, indent=1) + "\n")

    rem33_gens = [
        "x1^2 - x2 x3 x4", "x3^3 - x1 x2", "x4^3 - x5 x6", "x6^2 - x3 x4 x5",
        "x3^2 x5 - x2 x4^2", "x3 x5^2 - x4^2 x6", "x1 x3^2 - x2^2 x4", "x3^2 x4 - x2 x6",
        "x3^2 x5 - x1 x6", "x3 x4^2 - x1 x5", "x2 x5 - x3 x6", "x1 x4 - x3 x6",
    ]
    rem33 = {
        "N": IntMat.from_rows([[2, 1, 0, 0, 1, 2], [1, 2, 2, 1, 0, 0], [0, 0, 1, 2, 2, 1]]).to_json(),
        "M": IntMat.from_rows([[3, 3, 2, 1, 1, 2], [2, 1, 1, 2, 3, 3]]).to_json(),
        "D": IntMat.from_rows([
            [2, 1, 0, 0, 1, 2], [1, 2, 2, 1, 0, 0], [0, 0, 1, 2, 2, 1],
            [2, 2, 1, 0, 0, 1], [0, 1, 2, 2, 1, 0], [1, 0, 0, 1, 2, 2],
        ]).to_json(),
        "gens_im": [text_poly_json(t, 6) for t in rem33_gens],
        "fs": [text_poly_json(t, 6) for t in ("x3^3 - x1 x2", "x4^3 - x5 x6")],
    }
    (DATA / "rem33.json").write_text(json.dumps(rem33, indent=1) + "\n")

    ex55 = {
        "N": IntMat.from_rows([
            [3, 0, 0, 0, 1, 0, 0], [0, 3, 0, 0, 0, 0, 0], [0, 0, 5, 0, 0, 0, 1],
            [0, 0, 0, 3, 1, 0, 0], [0, 0, 0, 0, 0, 5, 2],
        ]).to_json(),
        "M": IntMat.from_rows([[7, 0, 0, 5, 4, 5, 2], [0, 7, 0, 3, 1, 0, 0], [0, 0, 7, 0, 0, 4, 3]]).to_json(),
        "kernel_N": [["1", "0", "0", "1", "-3", "0", "0"], ["0", "0", "1", "0", "0", "2", "-5"]],
        "kernel_M": [["1", "0", "0", "1", "-3", "0", "0"], ["0", "0", "1", "0", "0", "2", "-5"],
                     ["1", "0", "0", "0", "0", "-3", "4"], ["0", "-1", "0", "4", "-5", "0", "0"]],
        "image": [["3", "0", "4", "0", "-7"], ["-5", "-3", "0", "7", "0"]],
        "base_gens": [text_poly_json(t, 7) for t in ("x5^3 - x1 x4", "x7^5 - x3 x6^2")],
        "deltas": [
            text_poly_json("x4^7 - 3 x1 x2 x4^4 x5^2 + 3 x1^3 x2^2 x4^2 x5 - x1^5 x2^3", 7),
            text_poly_json("x6^7 - 5 x1 x6^4 x7^4 + 10 x1^2 x3 x6^3 x7^3 - 10 x1^3 x3^2 x6^2 x7^2"
                           " + 5 x1^4 x3^3 x6 x7 - x1^5 x3^4", 7),
        ],
        "identities": [
            {"binomial": {"plus": ["0", "0", "0", "7", "0"], "minus": ["5", "3", "0", "0", "0"]},
             "power": "3", "delta": "0"},
            {"binomial": {"plus": ["0", "0", "0", "0", "7"], "minus": ["3", "0", "4", "0", "0"]},
             "power": "5", "delta": "1"},
        ],
    }
    (DATA / "ex55.json").write_text(json.dumps(ex55, indent=1) + "\n")
    print("wrote", ", ".join(sorted(p.name for p in DATA.glob("*.json"))))


if __name__ == "__main__":
    main()

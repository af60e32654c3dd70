"""Recompute every bundled worked example and print a table of results.

    python scripts/reproduce_examples.py [--seed N]
"""

import argparse
import time

from toricproj.lattice import image_lattice
from toricproj.presets import ex46_cases, ex55_certificate, rem33_case
from toricproj.stci import (
    curve_46_certificate,
    curve_ab_certificate,
    power_family_certificate,
    verify_certificate,
)
from toricproj.toric import FalsifierConfig, radical_criterion


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def criterion_rows(cfg):
    cases = []
    for a in (7, 9, 11):
        cases.extend(ex46_cases(a))
    cases.append(rem33_case())
    for case in cases:
        rep, dt = timed(lambda: radical_criterion(case.n, case.m, case.gens_im, case.fs, 0, cfg))
        img = image_lattice(case.n, case.m)
        detail = f"image {[list(b) for b in img.basis]}"
        if rep.assumptions:
            detail += " (toric-set hypothesis assumed)"
        yield "criterion", case.name, rep.overall, detail, dt


def certificate_rows():
    builders = [("power m=1 d=2 c=(4,1)", lambda: power_family_certificate(1, 2, (4, 1))),
                ("power m=2 d=2 c=(4,1,1)", lambda: power_family_certificate(2, 2, (4, 1, 1))),
                ("power m=1 d=3 c=(6,1)", lambda: power_family_certificate(1, 3, (6, 1)))]
    builders += [(f"curve-ab a={a} b={b}", lambda a=a, b=b: curve_ab_certificate(a, b))
                 for a, b in ((1, 1), (4, 1), (5, 2), (7, 1))]
    builders += [(f"curve-46 a={a}", lambda a=a: curve_46_certificate(a)) for a in (7, 9, 11, 13)]
    builders.append(("two-delta 7-variable", ex55_certificate))
    for name, build in builders:
        (cert, tr), dt = timed(lambda: (lambda c: (c, verify_certificate(c)))(build()))
        target = [list(r) for r in cert.target.to_rows()]
        yield "certificate", name, "PASS" if tr.passed else "FAIL", f"target {target}", dt


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = FalsifierConfig(seed=args.seed)
    rows = list(criterion_rows(cfg)) + list(certificate_rows())
    w = max(len(r[1]) for r in rows)
    print(f"{'kind':<12} {'case':<{w}} {'result':<14} {'seconds':>8}  detail")
    for kind, name, verdict, detail, dt in rows:
        print(f"{kind:<12} {name:<{w}} {verdict:<14} {dt:>8.3f}  {detail}")


if __name__ == "__main__":
    main()

"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines live.
"""

import json
import math
import time
from fractions import Fraction

import numpy as np

from jacspec import (
    JacobiMatrix,
    Poly,
    amb3_candidates,
    brute_force_isospectral_search,
    charpoly_floquet,
    charpoly_jacobi,
    eigenvalue_derivative,
    eigenvalues_floquet,
    eigenvalues_jacobi,
    eigenvector,
    eliminate_spurious,
    interlace_check,
    leading_coefficients,
    make_floquet,
    make_free,
    make_schrodinger,
    recover_floquet_angle,
    spectra_match,
    PerturbationPath,
)
from jacspec.cli import config_from_dict, run, to_canonical_json
from jacspec.inverse import _free_charpoly, _two_site


def report(criterion: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {criterion}: {detail}"


def test_criterion_1_counterexample():
    target = Poly((2, -2, -2, 1))
    a = make_schrodinger(3, (2, 0, 0))
    exact_ok = charpoly_jacobi(a) == target
    r5 = math.sqrt(5.0)
    b = make_schrodinger(3, (-2.0 / (1.0 + r5), 1.0, (1.0 + r5) / 2.0))
    pb = charpoly_jacobi(b)
    coeff_err = max(abs(pb.coefficient(i) - float(target.coefficient(i))) for i in range(4))
    _, spec_err = spectra_match(
        eigenvalues_jacobi(a, 1e-12), eigenvalues_jacobi(b, 1e-12), math.inf
    )
    ok = exact_ok and coeff_err <= 1e-12 and spec_err <= 1e-10
    report(
        1,
        ok,
        f"counterexample: exact charpoly match {exact_ok}, partner coeff err "
        f"{coeff_err:.2e} <= 1e-12, spectra err {spec_err:.2e} <= 1e-10",
    )


def test_criterion_2_coefficient_identities():
    rng = np.random.default_rng(2024)
    failures = 0
    for _ in range(200):
        n = int(rng.integers(2, 11))
        b = [int(v) for v in rng.integers(-9, 10, n)]
        c1, c2 = leading_coefficients(charpoly_jacobi(make_schrodinger(n, b)))
        pair_sum = sum(b[i] * b[j] for i in range(n) for j in range(i + 1, n))
        if c1 != -sum(b) or c2 != pair_sum - (n - 1):
            failures += 1
    report(
        2,
        failures == 0,
        f"coefficient identities exact on 200 random integer diagonals "
        f"(n in 2..10), {failures} failures",
    )


def test_criterion_3_two_block_expansion():
    rng = np.random.default_rng(3033)
    failures = 0
    for trial in range(100):
        n = int(rng.integers(4, 13))
        b1 = Fraction(int(rng.integers(-90, 90)), int(rng.integers(1, 12)))
        b2 = Fraction(int(rng.integers(-90, 90)), int(rng.integers(1, 12)))
        lhs = charpoly_jacobi(_two_site(n, b1, b2))
        rhs = Poly((b1 * b2 - 1, -(b1 + b2), 1)) * _free_charpoly(n - 2) - Poly(
            (-b1, 1)
        ) * _free_charpoly(n - 3)
        if lhs != rhs:
            failures += 1
    report(
        3,
        failures == 0,
        f"two-block determinant expansion exact for 100 random rational pairs "
        f"(n in 4..12), {failures} failures",
    )


def test_criterion_4_spurious_elimination():
    t0 = time.time()
    checked = eliminated = 0
    min_residual = math.inf
    classification_ok = True
    for n in range(4, 13):
        for k in range(1, n):
            r = eliminate_spurious(n, k, tol=1e-9)
            checked += 1
            w = r.witness
            even_middle = n % 2 == 0 and k == n // 2
            odd_middle = n % 2 == 1 and k in ((n - 1) // 2, (n + 1) // 2)
            if even_middle:
                classification_ok &= w.get("degenerate") == "coincide"
            elif odd_middle:
                classification_ok &= w.get("degenerate") == "undefined"
            else:
                if not (r.confirmed and w["status"] == "eliminated"):
                    classification_ok = False
                    continue
                eliminated += 1
                min_residual = min(min_residual, w["max_residual"])
    elapsed = time.time() - t0
    ok = classification_ok and min_residual > 1e-6 and elapsed < 10.0
    report(
        4,
        ok,
        f"elimination over n in 4..12: {eliminated}/{checked} non-degenerate "
        f"cases decisive (min residual {min_residual:.3e} > 1e-6), degenerate "
        f"classification exact, {elapsed:.1f}s < 10s",
    )


def test_criterion_5_oracle_uniqueness():
    t0 = time.time()
    offenders = []
    total = 0
    for n in range(3, 7):
        sols = brute_force_isospectral_search(n, (-3.0, 3.0, 0.01), tol=1e-8)
        total += len(sols)
        for s in sols:
            if s.matches_consecutive and math.hypot(s.b1, s.b2) > 1e-6:
                offenders.append((n, s))
    elapsed = time.time() - t0
    ok = not offenders and elapsed < 300.0
    report(
        5,
        ok,
        f"grid+Newton oracle over n in 3..6, all k, step 0.01: {total} refined "
        f"solutions, {len(offenders)} nontrivial consecutive matches, "
        f"{elapsed:.1f}s < 300s",
    )


def test_criterion_6_floquet_constant_and_angle_recovery():
    rng = np.random.default_rng(606)
    worst_const = 0.0
    worst_drift = 0.0
    for _ in range(50):
        n = int(rng.integers(3, 13))
        b = tuple(rng.uniform(-3, 3, n))
        t1, t2 = (float(v) for v in rng.uniform(0, 1, 2))
        diff = charpoly_floquet(make_floquet(n, b, t1)) - charpoly_floquet(
            make_floquet(n, b, t2)
        )
        expected = 2 * math.cos(2 * math.pi * t2) - 2 * math.cos(2 * math.pi * t1)
        worst_const = max(worst_const, abs(diff.coefficient(0) - expected))
        worst_drift = max(
            worst_drift,
            max(
                (abs(diff.coefficient(i)) for i in range(1, max(diff.degree + 1, 1))),
                default=0.0,
            ),
        )
    worst_angle = 0.0
    for _ in range(50):
        n = int(rng.integers(3, 13))
        phi = float(rng.uniform(0, 1))
        s = eigenvalues_floquet(make_floquet(n, 0, phi))
        angles = recover_floquet_angle(s, n)
        err = min(min(abs(a - phi), abs(a - (1 - phi))) for a in angles)
        worst_angle = max(worst_angle, err)
    ok = worst_const <= 1e-12 and worst_drift <= 1e-12 and worst_angle <= 1e-9
    report(
        6,
        ok,
        f"angle-shift constant err {worst_const:.2e} <= 1e-12 (drift "
        f"{worst_drift:.2e}), angle recovery round-trip err {worst_angle:.2e} <= 1e-9",
    )


def test_criterion_7_eigenvalue_derivative():
    h = 1e-5
    worst = 0.0
    all_negative = True
    for n in range(2, 21):
        for t in (-0.5, 0.0, 0.5):
            plus = eigenvalues_jacobi(PerturbationPath(n, t + h).matrix())
            minus = eigenvalues_jacobi(PerturbationPath(n, t - h).matrix())
            path = PerturbationPath(n, t)
            m = path.matrix()
            spec = eigenvalues_jacobi(m)
            for k in range(1, n + 1):
                deriv = eigenvalue_derivative(path, k)
                fd = (plus[k - 1] - minus[k - 1]) / (2 * h)
                worst = max(worst, abs(deriv - fd))
                pair = eigenvector(m, spec[k - 1])
                if max(abs(pair.vector[0]), abs(pair.vector[1])) > 1e-8:
                    all_negative &= deriv < 0
    ok = worst <= 1e-6 and all_negative
    report(
        7,
        ok,
        f"eigenvalue derivative vs central differences: worst gap {worst:.2e} "
        f"<= 1e-6 over n in 2..20, t in {{-0.5, 0, 0.5}}; strictly negative: "
        f"{all_negative}",
    )


def test_criterion_8_spectral_basics():
    band_ok = True
    for n in range(1, 201):
        s = eigenvalues_jacobi(make_free(n), 1e-12)
        if s[0] < -2 - 1e-11 or s[-1] > 2 + 1e-11:
            band_ok = False
    min_gap = math.inf
    for n in range(2, 51):
        min_gap = min(min_gap, eigenvalues_jacobi(make_free(n), 1e-12).min_gap())
    rng = np.random.default_rng(808)
    interlace_ok = True
    for _ in range(100):
        n = int(rng.integers(2, 13))
        m = JacobiMatrix(
            n, tuple(rng.uniform(0.2, 2.0, n - 1)), tuple(rng.uniform(-3, 3, n))
        )
        sub = JacobiMatrix(n - 1, m.a[: n - 2], m.b[: n - 1])
        interlace_ok &= interlace_check(
            eigenvalues_jacobi(m), eigenvalues_jacobi(sub)
        )
    ok = band_ok and min_gap > 1e-10 and interlace_ok
    report(
        8,
        ok,
        f"free spectra inside [-2,2] for n <= 200: {band_ok}; min gap "
        f"{min_gap:.3e} > 1e-10 for n <= 50; interlacing on 100 random "
        f"instances: {interlace_ok}",
    )


def test_criterion_9_cli_determinism():
    configs = [
        {"command": "verify", "theorem": "amb1", "n": 6, "trials": 100, "seed": 7},
        {"command": "verify", "theorem": "amb2", "n": 5, "trials": 10, "seed": 11},
        {"command": "spectrum", "n": 9, "seed": 3},
        {"command": "solve-amb3", "n": 8, "k": 3},
        {"command": "counterexample"},
    ]
    identical = True
    for cfg in configs:
        _, first = run(config_from_dict(dict(cfg)))
        _, second = run(config_from_dict(dict(cfg)))
        identical &= to_canonical_json(first) == to_canonical_json(second)
        json.loads(to_canonical_json(first))
    report(
        9,
        identical,
        "identical config + seed gives byte-identical canonical JSON across "
        f"{len(configs)} commands",
    )

"""End-to-end acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line; the lines are repeated in the
terminal summary by ``conftest.py``.
"""

import json

import numpy as np

from spinbrach import (
    FieldSpec,
    HalfInt,
    TransferProblem,
    basis_eigenstate,
    distinct_manifold_count,
    evolution_speed,
    evolve,
    evolved_angles,
    field_hamiltonian,
    fidelity,
    fubini_study_distance,
    global_phase,
    manifold_radius,
    metric_tensor_closed,
    metric_tensor_numeric,
    optimal_transfer,
    projection_operator,
    rotate_eigenstate,
    spectral_exponential,
    speed_from_variance,
    sweep_tilt,
)
from spinbrach.cli import main
from spinbrach.halfint import projections

import oracles

PI = np.pi
GAMMAS = (1.0, np.sqrt(2), 2.0)
RESULTS = {}


def verdict(n, title, ok, detail):
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def wrap(x):
    return -((-x + PI) % (2 * PI) - PI)


def spin_one_grid():
    """(theta', phi', omega t) grid with 10 x 10 x 12 = 1200 points."""
    tps = np.linspace(0, PI, 10)
    pps = np.linspace(0, 2 * PI, 10, endpoint=False) + 0.1
    wts = np.linspace(0, 4 * PI, 12) + 0.05
    return [(tp, pp, wt) for tp in tps for pp in pps for wt in wts]


def random_axis(rng):
    n = rng.normal(size=3)
    return n / np.linalg.norm(n)


def test_criterion_01_radius_table():
    table = [
        ("1/2", "1/2", 0.5), ("1/2", "-1/2", 0.5),
        (1, 1, 1 / np.sqrt(2)), (1, -1, 1 / np.sqrt(2)), (1, 0, 1.0),
        ("3/2", "3/2", np.sqrt(3) / 2), ("3/2", "-3/2", np.sqrt(3) / 2),
        ("3/2", "1/2", np.sqrt(7) / 2), ("3/2", "-1/2", np.sqrt(7) / 2),
    ]
    worst = max(abs(manifold_radius(s, m, g) - g * r) for s, m, r in table for g in GAMMAS)
    verdict(1, "manifold radius table", worst <= 1e-12, f"max error {worst:.2e} (tol 1e-12)")


def test_criterion_02_metric_oracle_equivalence():
    rng = np.random.default_rng(1002)
    worst = worst_tp = 0.0
    count = 0
    for twice in range(1, 7):
        s = HalfInt(twice)
        for m in projections(s):
            for _ in range(20):
                theta, phi = rng.uniform(0.1, PI - 0.1), rng.uniform(0, 2 * PI)
                num = metric_tensor_numeric(s, m, theta, phi)
                worst = max(worst, num.max_abs_dev(metric_tensor_closed(s, m, theta)))
                worst_tp = max(worst_tp, abs(num.g_tp))
                count += 1
    ok = worst <= 1e-8 and worst_tp <= 1e-10
    verdict(2, "numeric metric = closed form", ok,
            f"{count} points, max component dev {worst:.2e} (tol 1e-8), max |g_tp| {worst_tp:.2e} (tol 1e-10)")


def test_criterion_03_spectral_exponential():
    rng = np.random.default_rng(1003)
    worst = 0.0
    for _ in range(200):
        s = HalfInt(int(rng.integers(1, 9)))
        a = projection_operator(s, random_axis(rng))
        chi = rng.uniform(-3 * PI, 3 * PI)
        u = spectral_exponential(a, projections(s), -1j * chi)
        worst = max(worst, np.max(np.abs(u - oracles.expm_eigh(a, -1j * chi))))
    worst_closed = 0.0
    for _ in range(200):
        a = projection_operator(1, random_axis(rng))
        chi = rng.uniform(-3 * PI, 3 * PI)
        closed = np.eye(3) - a @ a * 2 * np.sin(chi / 2) ** 2 - 1j * a * np.sin(chi)
        u = spectral_exponential(a, projections(HalfInt(2)), -1j * chi)
        worst_closed = max(worst_closed, np.max(np.abs(u - closed)))
    ok = worst <= 1e-10 and worst_closed <= 1e-12
    verdict(3, "spectral exponential", ok,
            f"vs eigh {worst:.2e} (tol 1e-10), spin-1 closed form {worst_closed:.2e} (tol 1e-12)")


def test_criterion_04_evolution_closed_forms():
    worst = {1: 0.0, 0: 0.0, -1: 0.0}
    grid = spin_one_grid()
    for tp, pp, wt in grid:
        field = FieldSpec(1.0, tp, pp)
        expected = oracles.spin_one_evolved(tp, pp, wt)
        for m, col in expected.items():
            got = evolve(basis_eigenstate(1, m), 1, field, wt)
            worst[m] = max(worst[m], np.max(np.abs(got - col)))
    ok = max(worst.values()) <= 1e-12
    detail = ", ".join(f"|{m}> {worst[m]:.2e}" for m in (1, 0, -1))
    verdict(4, "spin-1 evolution closed forms", ok, f"{len(grid)} grid points, {detail} (tol 1e-12)")


def test_criterion_05_residency_and_phase():
    min_fid = 1.0
    worst_beta = {1: 0.0, 0: 0.0, -1: 0.0}
    grid = spin_one_grid()
    for tp, pp, wt in grid:
        field = FieldSpec(1.0, tp, pp)
        theta, phi = evolved_angles(field, wt)
        beta = 2 * field.phi - phi + PI
        for m, sign in ((1, 1), (0, 0), (-1, -1)):
            psi = evolve(basis_eigenstate(1, m), 1, field, wt)
            min_fid = min(min_fid, fidelity(psi, rotate_eigenstate(1, m, theta, phi)))
            b = global_phase(psi, theta, phi, m)
            worst_beta[m] = max(worst_beta[m], abs(wrap(b - sign * beta)))
    ok = min_fid >= 1 - 1e-8 and max(worst_beta.values()) <= 1e-8
    verdict(5, "manifold residency and global phase", ok,
            f"min fidelity 1-{1 - min_fid:.1e} (tol 1e-8), phase error m=1 {worst_beta[1]:.1e}, "
            f"m=0 {worst_beta[0]:.1e}, m=-1 {worst_beta[-1]:.1e} (tol 1e-8)")


def test_criterion_06_transfer_times(capsys):
    cases = []
    for omega in (1.0, 2.5):
        for m, theta_f, expected in (("1", PI, PI / omega), ("-1", PI, PI / omega), ("0", PI / 2, PI / (2 * omega))):
            code = main(["--precision", "17", "brach", "--s", "1", f"--m={m}",
                         "--theta-f", repr(theta_f), "--omega", repr(omega)])
            out = capsys.readouterr().out
            got = json.loads(out)["time"] if code == 0 else float("nan")
            cases.append(abs(got - expected))
    worst = max(cases)
    verdict(6, "brach transfer times", worst <= 1e-10, f"{len(cases)} runs, max error {worst:.2e} (tol 1e-10)")


def test_criterion_07_optimality():
    rng = np.random.default_rng(1007)
    monotone = True
    worst_min = 0.0
    argmin_last = True
    for _ in range(10):
        twice = int(rng.integers(1, 7))
        s = HalfInt(twice)
        m = projections(s)[int(rng.integers(0, twice + 1))]
        problem = TransferProblem(s, m, rng.uniform(0.05, PI - 0.05), rng.uniform(0, 2 * PI), rng.uniform(0.2, 4))
        rows = sweep_tilt(problem, 101)
        sins = np.sin([r.theta_prime for r in rows])
        times = np.array([r.time for r in rows])
        order = np.argsort(sins)
        monotone &= bool(np.all(np.diff(sins[order]) > 0) and np.all(np.diff(times[order]) < 0))
        argmin_last &= int(np.argmin(times)) == 100 and rows[-1].theta_prime == PI / 2
        worst_min = max(worst_min, abs(times.min() - problem.theta_f / problem.omega))
    ok = monotone and argmin_last and worst_min <= 1e-10
    verdict(7, "time minimized by perpendicular field", ok,
            f"strictly decreasing in sin(theta'): {monotone}, minimum at pi/2: {argmin_last}, "
            f"|t_min - theta_f/omega| {worst_min:.2e} (tol 1e-10)")


def test_criterion_08_anandan_aharonov():
    rng = np.random.default_rng(1008)
    delta = 1e-6
    worst_fd = worst_closed = 0.0
    for _ in range(10):
        twice = int(rng.integers(1, 7))
        s = HalfInt(twice)
        m = projections(s)[int(rng.integers(0, twice + 1))]
        field = FieldSpec(rng.uniform(0.3, 3), rng.uniform(0.2, PI - 0.2), rng.uniform(0, 2 * PI))
        gamma = float(rng.choice(GAMMAS))
        h = field_hamiltonian(s, field)
        start = basis_eigenstate(s, m)
        closed = evolution_speed(s, m, field, gamma)
        for t in rng.uniform(0, 10, size=10):
            a = evolve(start, s, field, t)
            b = evolve(start, s, field, t + delta)
            v = speed_from_variance(a, h, gamma)
            fd = fubini_study_distance(a, b, gamma) / delta
            worst_fd = max(worst_fd, abs(fd - v) / v)
            worst_closed = max(worst_closed, abs(v - closed))
    ok = worst_fd <= 1e-4 and worst_closed <= 1e-10
    verdict(8, "Anandan-Aharonov speed", ok,
            f"finite difference rel error {worst_fd:.2e} (tol 1e-4), variance vs omega R sin(theta') "
            f"{worst_closed:.2e} (tol 1e-10)")


def test_criterion_09_end_to_end():
    rng = np.random.default_rng(1009)
    min_fid = 1.0
    worst_time = 0.0
    for _ in range(50):
        twice = int(rng.integers(1, 7))
        s = HalfInt(twice)
        m = projections(s)[int(rng.integers(0, twice + 1))]
        problem = TransferProblem(s, m, rng.uniform(0.01, PI), rng.uniform(0, 2 * PI),
                                  rng.uniform(0.1, 4), float(rng.choice(GAMMAS)))
        sol = optimal_transfer(problem)
        worst_time = max(worst_time, abs(sol.time - problem.theta_f / problem.omega))
        psi = evolve(basis_eigenstate(s, m), s, sol.field, sol.time)
        min_fid = min(min_fid, fidelity(psi, rotate_eigenstate(s, m, problem.theta_f, problem.phi_f)))
    ok = min_fid >= 1 - 1e-8 and worst_time <= 1e-12
    verdict(9, "optimal transfer reaches target", ok,
            f"50 problems, min fidelity 1-{1 - min_fid:.1e} (tol 1e-8), time error {worst_time:.1e}")


def test_criterion_10_manifold_counting():
    bad = []
    for twice in range(0, 13):
        s = HalfInt(twice)
        expected = twice // 2 + 1 if s.is_integer else (twice + 1) // 2
        radii = {round(manifold_radius(s, m), 12) for m in projections(s)}
        if distinct_manifold_count(s) != expected or len(radii) != expected:
            bad.append(str(s))
    verdict(10, "distinct manifold count", not bad, f"s = 0 .. 6, mismatches: {bad or 'none'}")

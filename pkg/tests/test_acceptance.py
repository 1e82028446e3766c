"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with `pytest -s tests/test_acceptance.py -v` to see the lines as they
print. Tolerances are pinned here: every comparison is exact integer or
exact rational equality, and the stated wall-clock budgets are asserted.
"""
import random
import time

from conftest import DEGREE3_INIT, DEGREE3_TERMS_35
from metafib.bfile import read_bfile
from metafib.cli import EXIT_OK, main
from metafib.closedform import (
    WeightSequence,
    check_piece_lower_bound,
    check_piece_pascal,
    closed_form_buffer,
    piece_polynomial,
    piece_value,
    q_identity_holds,
)
from metafib.detect import detect_quasipoly
from metafib.engine import HOFSTADTER_Q, UnderflowPolicy, compute
from metafib.harness import verify_construction, verify_golomb, wellposed_scan

import io


def _report(num, name, passed, detail=""):
    line = f"acceptance {num} [{name}]: {'PASS' if passed else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert passed, line


def test_acceptance_1_golden_reproduction(capsys):
    """35-term golden listing through the compute CLI, exactly, < 1 s."""
    start = time.perf_counter()
    init = ",".join(map(str, DEGREE3_INIT))
    code = main(["compute", "--shifts", "1,2", "--init", init, "-n", "35"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    terms = read_bfile(io.StringIO(out))
    with capsys.disabled():
        _report(
            1,
            "golden 35-term reproduction",
            code == EXIT_OK and terms == DEGREE3_TERMS_35 and elapsed < 1.0,
            f"{elapsed:.3f}s",
        )


def test_acceptance_2_golomb(capsys):
    """Engine equals the quasilinear pieces up to 1e5, onset 4, < 5 s."""
    start = time.perf_counter()
    report = verify_golomb(100_000)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(
            2,
            "golomb quasilinear solution",
            report.match and report.first_valid_index == 4 and elapsed < 5.0,
            f"{elapsed:.2f}s, first_valid_index={report.first_valid_index}",
        )


def test_acceptance_3_construction_sweep(capsys):
    """d = 1..25: engine equals closed form to 1e5 and the identity holds
    past the initial condition. < 2 min total."""
    start = time.perf_counter()
    failures = []
    for d in range(1, 26):
        report = verify_construction(d, 100_000)
        if not report.match or report.first_valid_index > 3 * d + 3:
            failures.append((d, report.first_mismatch, report.first_valid_index))
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(
            3,
            "construction sweep d=1..25",
            not failures and elapsed < 120.0,
            f"{elapsed:.1f}s" + (f", failures={failures}" if failures else ""),
        )


def test_acceptance_4_piece_recurrence_identity(capsys):
    """piece(d,k,n) = piece(d,k-1,n) + piece(d,k,n-1), zero tolerance."""
    bad = [
        d
        for d in range(1, 11)
        if not check_piece_pascal(d, k_max=8, n_max=200).holds
    ]
    with capsys.disabled():
        _report(4, "piece recurrence identity", not bad, "d<=10, k<=8, n<=200")


def test_acceptance_5_piece_lower_bound(capsys):
    """piece(d,k,n) >= 3dn + 3k + 2 with equality exactly at n=0 and (1,1)."""
    expected_witnesses = {(k, 0) for k in range(1, 9)} | {(1, 1)}
    ok = True
    for d in range(1, 11):
        report = check_piece_lower_bound(d, k_max=8, n_max=200)
        if not report.holds or set(report.equality_witnesses) != expected_witnesses:
            ok = False
            break
    with capsys.disabled():
        _report(5, "piece lower bound and equality set", ok, "d<=10, k<=8, n<=200")


def test_acceptance_6_generalized_weights(capsys):
    """100 admissible weight draws x d = 1..5: identity up to 5000, zero
    failures."""
    rng = random.Random(20260810)
    failures = 0
    draws = [
        WeightSequence(tuple(3 * i + 2 + rng.randint(0, 98) for i in range(1, 9)))
        for _ in range(100)
    ]
    for weights in draws:
        for d in range(1, 6):
            values = closed_form_buffer(d, 5000, weights).to_list()
            term = lambda m: values[m - 1]
            first_bad = next(
                (m for m in range(3 * d + 3, 5001) if not q_identity_holds(term, m)),
                None,
            )
            if first_bad is not None:
                failures += 1
    with capsys.disabled():
        _report(6, "generalized weights keep the identity", failures == 0,
                f"100 draws x d=1..5, failures={failures}")


def test_acceptance_7_detection_round_trip(capsys):
    """Detection recovers period 3d and the piece degrees for d in
    {1, 2, 3, 5}, with onset <= 3d + 3."""
    ok = True
    details = []
    for d in (1, 2, 3, 5):
        buf = closed_form_buffer(d, 3 * d * 60)
        fit = detect_quasipoly(buf, q_max=3 * d + 3, deg_max=d + 1)
        good = (
            fit is not None
            and fit.period == 3 * d
            and fit.onset <= 3 * d + 3
            and all(
                fit.residue_polys[r].degree == (r // 3 + 1 if r % 3 == 0 else 0)
                for r in range(3 * d)
            )
        )
        ok = ok and good
        details.append(f"d={d}:{'ok' if good else 'BAD'}")
    with capsys.disabled():
        _report(7, "detection round trip", ok, ", ".join(details))


def test_acceptance_8_chaotic_negative_control(capsys):
    """Hofstadter's Q yields NotFound, and no overshoot a(n) > n below 1e6."""
    buf = compute(HOFSTADTER_Q, [1, 1], 200, UnderflowPolicy.ZERO)
    fit = detect_quasipoly(buf, q_max=12, deg_max=3, min_confirm=20)
    overshoot = wellposed_scan([1, 1], 10**6)
    with capsys.disabled():
        _report(
            8,
            "chaotic negative control",
            fit is None and overshoot is None,
            f"detect={'NotFound' if fit is None else fit.period}, "
            f"overshoot={'absent' if overshoot is None else overshoot}",
        )


def test_acceptance_9_integrality(capsys):
    """1000 random (d, k, n): binomial-basis value is an integer and equals
    the interpolated monomial form."""
    rng = random.Random(1123581321)
    ok = True
    for _ in range(1000):
        d = rng.randint(1, 10)
        k = rng.randint(-1, 8)
        n = rng.randint(-10_000, 10_000)
        value = piece_value(d, k, n)
        poly = piece_polynomial(d, k)
        if not isinstance(value, int) or poly(n) != value:
            ok = False
            break
    with capsys.disabled():
        _report(9, "integrality of piece values", ok, "1000 samples, |n| <= 1e4")

"""Acceptance gate: every criterion at its stated scale and tolerance.

Run with ``pytest tests/test_acceptance.py -v`` for one pass/fail line
per criterion.  The 1e8 prime table is built once per module; each
criterion times its own scan work where a runtime budget applies.
"""

import math
import time

import numpy as np
import pytest

import primegaps as pg
from primegaps import selberg
from primegaps.cli import main
from primegaps.sieve import PrimeData

from .oracles import (
    li_quad,
    pair_product_table,
    s1_longdouble,
    s2_pair_loop,
    trial_division_primes,
)

LIMIT = 10**8

# Regression pins fixed by the first full-scale run (dual-path oracles
# where available); these are byte-stable under the fixed block size.
PIN_N0 = 5
PIN_CG_TAIL_MAX = 0.7394656868654549
PIN_CG_TAIL_AT = 20831323
PIN_SCHOENFELD_WINDOW_1E4_1E6 = 0.026721534427544946
PIN_SCHOENFELD_X_STAR = 4
PIN_BBOUND_MAX = 4.7212545819681
PIN_BBOUND_AT = 10
PIN_S1_104729 = 1102735.1698017446
PIN_S2_ORDERED_104729 = 830441.1954648667
PIN_S2_UNORDERED_104729 = 415947.9165022507
REFERENCE_S1_MINUS_S2 = 686787.25
MAX_KNOWN_GAP_RATIO = 0.9206386


@pytest.fixture(scope="module")
def data():
    return PrimeData.build(LIMIT, workers=2)


@pytest.fixture(scope="module")
def deriv(data):
    # one pass serves both derivative criteria
    return pg.deriv_scan(data, LIMIT, 1.0, workers=2)


def _announce(num, text):
    print(f"ACCEPTANCE {num:02d}: {text}")


def test_criterion_01_lemma_inequality_at_scale(data):
    t0 = time.perf_counter()
    prime_xs = data.primes[(data.primes >= 5) & (data.primes <= 10**6)]
    every_prime = pg.lemma_scan(data, prime_xs)
    log_xs = np.unique(np.rint(np.geomspace(100, LIMIT, 1000)).astype(np.int64))
    assert len(log_xs) == 1000
    log_spaced = pg.lemma_scan(data, log_xs)
    elapsed = time.perf_counter() - t0
    # x = 2, 3 hold trivially: the pair sum is empty there.
    assert selberg.s1(data, 2) > 0.0 and selberg.s1(data, 3) > 0.0
    assert every_prime.all_hold and every_prime.points == 78496
    assert log_spaced.all_hold and log_spaced.points == 1000
    assert elapsed <= 300.0
    _announce(1, f"PASS lemma holds at 78496 prime points and 1000 "
                 f"log-spaced points in {elapsed:.1f}s (budget 300s)")


def test_criterion_02_s1_s2_report_at_104729(data):
    v1 = selberg.s1(data, 104729)
    v2o = selberg.s2(data, 104729, "ordered")
    v2u = selberg.s2(data, 104729, "unordered")
    # dual-path pins: plain-loop long-double oracles agree with the
    # theta-table route
    assert v1 == pytest.approx(PIN_S1_104729, rel=1e-12)
    assert v1 == pytest.approx(s1_longdouble(data.primes, 104729), rel=1e-12)
    assert v2o == pytest.approx(PIN_S2_ORDERED_104729, rel=1e-12)
    assert v2o == pytest.approx(s2_pair_loop(data.primes, 104729, "ordered"), rel=1e-12)
    assert v2u == pytest.approx(PIN_S2_UNORDERED_104729, rel=1e-12)
    # The documented comparison: the quoted reference difference matches
    # the unordered convention, not the ordered one used by default.
    assert abs((v1 - v2u) - REFERENCE_S1_MINUS_S2) < 0.01
    assert abs((v1 - v2o) - REFERENCE_S1_MINUS_S2) > 10**5
    _announce(2, f"PASS s1-s2 = {v1 - v2o:.2f} (ordered) / {v1 - v2u:.2f} "
                 f"(unordered); reference 686787.25 matches the unordered convention")


def test_criterion_03_smooth_difference_identity():
    rng = np.random.default_rng(19)
    xs = np.exp(rng.uniform(math.log(4.0), math.log(1e10), size=20))
    for x in xs:
        x = float(x)
        expected = (1.0 + math.log(2.0)) * x - 2.0 * math.log(2.0) - 2.0
        assert pg.smooth_s1(x) - pg.smooth_s2(x) == pytest.approx(expected, rel=1e-9)
    _announce(3, "PASS smooth s1-s2 identity at 20 random points (rel 1e-9)")


def test_criterion_04_partial_sum_scan_to_1e8(data):
    result = pg.partial_sum_scan(data, len(data.primes) - 1)
    assert result.identity_exact  # gap_sum + 2 == p_{N+1} at every N
    assert result.n0 == PIN_N0
    assert result.n_max == 5761454
    _announce(4, f"PASS partial-sum inequality holds for all N >= {result.n0} "
                 f"up to N = {result.n_max}; telescoping identity exact")


def test_criterion_05_gap_ratio_scan_to_1e8(data):
    t0 = time.perf_counter()
    rep = pg.cg_scan(data, LIMIT, 1.0, workers=2)
    elapsed = time.perf_counter() - t0
    assert rep.violations == [1, 2, 4]
    assert rep.thresholds["max_ratio_from_n5"] == pytest.approx(
        PIN_CG_TAIL_MAX, rel=1e-12
    )
    assert rep.thresholds["max_ratio_from_n5_at"] == PIN_CG_TAIL_AT
    assert rep.thresholds["max_ratio_from_n5"] < MAX_KNOWN_GAP_RATIO
    assert elapsed <= 600.0
    _announce(5, f"PASS violations exactly {{1,2,4}}; max ratio beyond n=4 is "
                 f"{rep.thresholds['max_ratio_from_n5']:.7f} < 0.9206386 "
                 f"in {elapsed:.1f}s (budget 600s)")


def test_criterion_06_bprime_condition_to_1e8(deriv):
    bad = [pair for pair in deriv.b_violations if pair[1] > 5]
    assert bad == []
    assert deriv.b_pass()
    assert deriv.count == 5761454
    _announce(6, f"PASS b-derivative condition holds for all 5 < p <= 1e8 "
                 f"({deriv.count} records; small-p exceptions "
                 f"{deriv.b_violations})")


def test_criterion_07_kprime_condition_and_figure_data(data, deriv, tmp_path):
    bad = [pair for pair in deriv.k_violations if pair[1] > 3]
    assert bad == []
    assert deriv.k_pass()
    # regenerate the plotting data at desk scale and verify each row
    out = tmp_path / "fig.csv"
    code = main(["figure1", "--limit", "1000000", "--out", str(out)])
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "p,k_prime,rhs24"
    assert len(rows) - 1 == 78498 - 1  # pi(1e6) - 1 records
    for line in rows[1:]:
        p, k_prime, rhs = line.split(",")
        if int(p) > 3:
            assert float(k_prime) > float(rhs)
    _announce(7, f"PASS k-derivative condition holds for all 3 < p <= 1e8; "
                 f"figure data regenerated, every row passing")


def test_criterion_08_schoenfeld_ratio_to_1e8(data):
    res = pg.schoenfeld_scan(
        data, LIMIT, windows={"1e4_1e6": (10**4, 10**6)}, workers=2
    )
    k_rh = 1.0 / (8.0 * math.pi)
    assert res.max_after_cutoff <= k_rh
    assert res.x_star == PIN_SCHOENFELD_X_STAR
    assert res.window_max["1e4_1e6"] == pytest.approx(
        PIN_SCHOENFELD_WINDOW_1E4_1E6, rel=1e-10
    )
    # the enlarged bound fails at tiny x (ratio at 2 is above 1), which is
    # why a least onward-holding point is reported at all
    assert res.max_ratio > 1.0
    _announce(8, f"PASS |pi-Li|/(sqrt(x) log x) <= 1/(8 pi) for 2657 < x <= 1e8 "
                 f"(max {res.max_after_cutoff:.7f} at {res.max_after_cutoff_at}); "
                 f"K=1/3 holds from x* = {res.x_star}")


def test_criterion_09_b_bound_to_1e8(data):
    res = pg.bbound_scan(data, LIMIT, 5.0, workers=2)
    assert res.passed()
    assert res.max_abs_b == pytest.approx(PIN_BBOUND_MAX, rel=1e-12)
    assert res.max_abs_b_at == PIN_BBOUND_AT
    _announce(9, f"PASS |b(x)| < 5 on the whole grid (max {res.max_abs_b:.6f} "
                 f"at x = {res.max_abs_b_at})")


def test_criterion_10_dusart_bracketing_to_1e8(data):
    res = pg.dusart_scan(data, LIMIT, workers=2)
    assert res.violations == []
    assert res.checked == 11515985
    _announce(10, f"PASS pi(x) strictly inside the bracketing bounds at all "
                  f"{res.checked} grid points")


def test_criterion_11_monotonicity_threshold():
    assert pg.monotonicity_threshold(1.0, 5.0) == pytest.approx(16.31, abs=0.01)
    _announce(11, f"PASS threshold(1, 5) = "
                  f"{pg.monotonicity_threshold(1.0, 5.0):.4f} (16.31 +/- 0.01)")


def test_criterion_12_skewes_map():
    assert pg.skewes_log10(1.3) == pytest.approx(17.0, abs=0.1)
    assert pg.skewes_log10(1.5) == pytest.approx(38.4, abs=0.1)
    assert pg.skewes_log10(2.0) == pytest.approx(702.8, abs=0.5)
    _announce(12, "PASS crossover map: 17.0 / 38.4 / 702.8 at alpha = 1.3/1.5/2.0")


def test_criterion_13_fit_recovery_and_real_data(data):
    xs = np.geomspace(100, 1e9, 40)
    w = np.log(xs)
    us = np.log(np.log(w))
    binned = [(float(w[i]), float(-0.2 * (1.4 - us[i]))) for i in range(len(xs))]
    synth = pg.fit_skewes(binned)
    assert synth.A == pytest.approx(0.2, abs=1e-9)
    assert synth.alpha == pytest.approx(1.4, abs=1e-9)
    real = pg.fit_from_data(data, 10**4, LIMIT)
    assert 1.0 <= real.alpha <= 1.8
    assert real.A > 0
    _announce(13, f"PASS synthetic recovery exact to 1e-9; real-data fit gives "
                  f"alpha = {real.alpha:.4f} in [1.0, 1.8] "
                  f"(log10 Sk1 = {real.log10_sk1:.2f})")


def test_criterion_14_oracle_equivalences(data):
    # (a) theta-table pair sum vs direct pair loop, every x in [4, 1e4]
    prods, terms = pair_product_table(data.primes, 10**4)
    prefix = np.concatenate([[0.0], np.cumsum(terms)])
    worst = 0.0
    for x in range(4, 10**4 + 1):
        expected = prefix[np.searchsorted(prods, x, side="right")]
        worst = max(worst, abs(selberg.s2(data, x, "ordered") - expected))
    assert worst <= 1e-8
    # (b) segmented sieve vs trial division to 1e5
    td = trial_division_primes(10**5)
    assert np.array_equal(pg.primes_up_to(10**5), td)
    assert np.array_equal(data.primes[: len(td)], td)
    # (c) fast li branches vs adaptive quadrature at 100 random points
    rng = np.random.default_rng(42)
    xs = np.exp(rng.uniform(math.log(2.0), math.log(1e9), size=100))
    for x in xs:
        x = float(x)
        assert pg.li(x) == pytest.approx(li_quad(x), rel=1e-10)
    _announce(14, f"PASS oracle equivalences: pair-loop (worst {worst:.2e}), "
                  f"trial division, quadrature")


def test_criterion_15_determinism(tmp_path):
    # every scan kind: byte-identical CSV across worker counts 1, 2, 8
    for which in ("cg", "b", "k", "delta", "schoenfeld", "dusart", "bbound"):
        limit = "1000000" if which == "dusart" else "100000"
        ref = None
        for workers in (1, 2, 8):
            out = tmp_path / f"{which}_{workers}.csv"
            main(
                ["scan", "--which", which, "--limit", limit,
                 "--workers", str(workers), "--out", str(out)]
            )
            blob = out.read_bytes()
            if ref is None:
                ref = blob
            assert blob == ref, f"{which} differs at workers={workers}"
    # checkpoint/resume reproduces an uninterrupted CSV run byte for byte
    full = tmp_path / "full.csv"
    main(["figure1", "--limit", "1000000", "--out", str(full)])
    part = tmp_path / "part.csv"
    ck = tmp_path / "ck.json"
    main(["figure1", "--limit", "1000000", "--out", str(part),
          "--checkpoint", str(ck), "--stop-after-blocks", "1"])
    main(["figure1", "--limit", "1000000", "--out", str(part),
          "--checkpoint", str(ck), "--resume"])
    assert part.read_bytes() == full.read_bytes()
    # the aggregate report too, across a mid-scan resume
    ref_doc = tmp_path / "ref.json"
    main(["report", "--limit", "1000000", "--out", str(ref_doc)])
    resumed = tmp_path / "resumed.json"
    rck = tmp_path / "rck.json"
    main(["report", "--limit", "1000000", "--out", str(resumed),
          "--checkpoint", str(rck), "--stop-after-blocks", "2"])
    main(["report", "--limit", "1000000", "--out", str(resumed),
          "--checkpoint", str(rck), "--resume"])
    assert resumed.read_bytes() == ref_doc.read_bytes()
    _announce(15, "PASS all seven scans byte-identical across workers {1,2,8}; "
                  "checkpoint-resume reproduces CSV and report bytes")

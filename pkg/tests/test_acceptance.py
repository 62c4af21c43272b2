"""Exit criteria.  Each test records one PASS/FAIL line shown in the
terminal summary under "acceptance criteria"."""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from hypercover.cli import OutputSpec, cmd_table, format_number, main
from hypercover.covering import covering_density, limit_p_infinity
from hypercover.schlafli import H3_FAMILIES, build_gram, invert_gram
from hypercover.special import lob
from hypercover.volume import QuadratureConfig, VOL4_BASE_5333, vol3_orthoscheme, vol5_prism_orthoscheme
from tests.oracles import hyperball_factor, lob_quad
from tests.paper_tables import H3_TABLES, TABLE6, TABLE7, TABLE_OF_FAMILY

TOL = 1e-6
FIELDS = ("h", "vol_S", "vol_H", "delta_min")
GOLDEN = Path(__file__).parent / "golden"
PI = math.pi


def mismatches(label, res, expected, tol=TOL):
    return [
        f"{label} {field}: got {getattr(res, field):.9f}, paper {value}"
        for field, value in zip(FIELDS, expected)
        if not abs(getattr(res, field) - value) <= tol
    ]


def finite_rows(q, r):
    return {p: v for p, v in H3_TABLES[(q, r)].items() if math.isfinite(p)}


def test_criterion_1_table1(criterion):
    start = time.perf_counter()
    results = {p: covering_density([p, 3, 3]) for p in finite_rows(3, 3)}
    elapsed = time.perf_counter() - start
    bad = [m for p, v in finite_rows(3, 3).items() for m in mismatches(f"[{p},3,3]", results[p], v)]
    ok = not bad and elapsed < 1.0
    criterion("1 Table 1 rows within 1e-6, runtime < 1 s", ok, "; ".join([f"{elapsed:.3f} s"] + bad))
    assert not bad, bad
    assert elapsed < 1.0


def test_criterion_2_tables_2_to_5(criterion):
    bad = []
    for (q, r) in [(4, 3), (3, 4), (5, 3), (3, 5)]:
        for p, expected in finite_rows(q, r).items():
            label = f"Table {TABLE_OF_FAMILY[(q, r)]} [{p},{q},{r}]"
            bad += mismatches(label, covering_density([p, q, r]), expected)
    criterion("2 Tables 2-5 rows within 1e-6", not bad, "; ".join(bad))
    assert not bad, bad


def test_criterion_3_limit_rows(criterion):
    bad = []
    for (q, r), rows in H3_TABLES.items():
        bad += mismatches(f"[inf,{q},{r}]", limit_p_infinity(q, r), rows[math.inf])
    criterion("3 p -> inf rows of Tables 1-5 within 1e-6", not bad, "; ".join(bad))
    assert not bad, bad


def test_criterion_4_table6(criterion):
    bad = []
    for params, expected in TABLE6.items():
        res = covering_density(params)
        bad += mismatches(str(list(params)), res, expected)
        if abs(res.vol_S - expected[1]) > 1e-12:
            bad.append(f"{list(params)} Vol4(S) not the closed form")
    criterion("4 Table 6 within 1e-6, Vol4(S) closed forms to 1e-12", not bad, "; ".join(bad))
    assert not bad, bad


def test_criterion_5_table7(criterion):
    cfg = QuadratureConfig(abs_tol=1e-10)
    start = time.perf_counter()
    results = {params: covering_density(params, cfg) for params in TABLE7}
    elapsed = time.perf_counter() - start
    bad = [m for params, v in TABLE7.items() for m in mismatches(str(list(params)), results[params], v)]
    ok = not bad and elapsed < 5.0
    criterion("5 Table 7 within 1e-6 at quadrature tol 1e-10, runtime < 5 s", ok, "; ".join([f"{elapsed:.3f} s"] + bad))
    assert not bad, bad
    assert elapsed < 5.0


def test_criterion_6_oracle_consistency(criterion):
    bad = []
    # (a) base of the 5D hyperball pieces
    for params, (h, _, vol_h, _) in TABLE7.items():
        back = vol_h / hyperball_factor(5, h)
        if abs(back - PI ** 2 / 10800) >= 1e-7:
            bad.append(f"(a) {list(params)}: {back:.10f}")
    assert VOL4_BASE_5333 == PI ** 2 / 10800
    # (b) bases of the 4D hyperball pieces
    bases = {(3, 5, 3, 3): (PI / 3, PI / 5, PI / 3), (5, 3, 4, 3): (PI / 5, PI / 3, PI / 4)}
    for params, (h, _, vol_h, _) in TABLE6.items():
        back = vol_h / hyperball_factor(4, h)
        if abs(back - vol3_orthoscheme(*bases[params])) >= 1e-5:
            bad.append(f"(b) {list(params)}: {back:.8f}")
    # (c) series against the defining integral
    if abs(lob(PI / 6) - lob_quad(PI / 6)) >= 1e-10:
        bad.append("(c) L(pi/6)")
    criterion("6 oracle consistency (a) Vol4(A4) (b) Vol3(A3) (c) L(pi/6)", not bad, "; ".join(bad))
    assert not bad, bad


def test_criterion_7_property_suites(criterion):
    rng = np.random.default_rng(7)
    bad = []

    xs = rng.uniform(-10, 10, 200)
    if max(abs(lob(-x) + lob(x)) for x in xs) >= 1e-12:
        bad.append("oddness")
    if max(abs(lob(x + PI) - lob(x)) for x in xs) >= 1e-12:
        bad.append("periodicity")
    ts = rng.uniform(0, PI / 2, 200)
    if max(abs(lob(2 * t) - 2 * lob(t) + 2 * lob(PI / 2 - t)) for t in ts) >= 1e-12:
        bad.append("duplication")

    catalog = [(p, q, r) for (q, r), th in H3_FAMILIES.items() for p in range(th + 1, 101)]
    catalog += [(3, 5, 3, 3), (5, 3, 4, 3), (5, 3, 3, 3, 3), (5, 3, 3, 3, 4)]
    for params in catalog:
        g = build_gram(params)
        if np.max(np.abs(g @ invert_gram(g) - np.eye(len(g)))) >= 1e-10:
            bad.append(f"Gram inverse {params}")
        if covering_density(params).delta_min < 1:
            bad.append(f"delta < 1 for {params}")

    for (q, r), th in H3_FAMILIES.items():
        rows = [covering_density([p, q, r]) for p in range(th + 1, 101)]
        if not all(a.h > b.h and a.delta_min < b.delta_min for a, b in zip(rows, rows[1:])):
            bad.append(f"monotonicity [p,{q},{r}]")

    for params in TABLE7:
        drift = abs(
            vol5_prism_orthoscheme(params, QuadratureConfig(abs_tol=1e-10))
            - vol5_prism_orthoscheme(params, QuadratureConfig(abs_tol=5e-11))
        )
        if drift >= 1e-9:
            bad.append(f"quadrature drift {params}: {drift:.2e}")

    criterion("7 property suites (Lobachevsky, Gram inverse, delta >= 1, monotonicity, quadrature)", not bad,
              "; ".join(bad))
    assert not bad, bad


def _paper_row(label, values):
    return ",".join([label] + [format_number(v, 8) for v in values])


def test_criterion_8_cli_golden(criterion, tmp_path):
    bad = []
    for n in range(1, 8):
        dest = tmp_path / f"table{n}.csv"
        assert main(["--table", str(n), "--format", "csv", "--output", str(dest)]) == 0
        if dest.read_bytes() != (GOLDEN / f"table{n}.csv").read_bytes():
            bad.append(f"table {n} differs from golden file")

    spot = {
        1: _paper_row("7", H3_TABLES[(3, 3)][7]),
        2: _paper_row("5", H3_TABLES[(4, 3)][5]),
        4: _paper_row("4", H3_TABLES[(5, 3)][4]),
        6: _paper_row("[5,3,4,3]", TABLE6[(5, 3, 4, 3)]),
    }
    for n, row in spot.items():
        if row not in cmd_table(n, OutputSpec()).splitlines():
            bad.append(f"table {n} lacks paper row {row}")
    criterion("8 CLI golden files byte-identical, spot rows equal paper digits", not bad, "; ".join(bad))
    assert not bad, bad

"""The twelve acceptance criteria, at their stated tolerances."""
import random
import time
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from axcount import cli, conway, counting, golay, leech, spectrum, tables
from axcount._data import data_path
from axcount.orbit_engine import ActionGroup, orbits, order_via_chain

criterion = pytest.mark.criterion

M24 = 244823040
CO1 = 4157776806543360000
CO2 = 42305421312000
MONSTER = 808017424794512875886459904961710757005754368000000000
MONSTER_FACTORS = {2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1,
                   31: 1, 41: 1, 47: 1, 59: 1, 71: 1}
BABY = 4154781481226426191177580544000000
BABY_FACTORS = {2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1, 47: 1}
BABY_FACTORS_AS_PRINTED = {**BABY_FACTORS, 41: 1}

TABLE1 = {"2A": 196560, "2B": 11935123200, "4A": 1630347264000, "4B": 1466587938816000,
          "4C": 6599645724672000, "6A": 1896194506752000, "6C": 438020931059712000,
          "8B": 8601138282627072000, "6F": 1501786049347584000, "10A": 786389785840189440,
          "10B": 37845008443559116800, "12C": 48057153579122688000}
X_PLUS = 97239461142009186000
X_MINUS = 11707448673375


def timed(f, *args, **kw):
    t0 = time.perf_counter()
    out = f(*args, **kw)
    return out, time.perf_counter() - t0


@criterion(1, "Golay weight enumerator and cocode census, exhaustive, < 1 s")
def test_c01_golay():
    def run():
        code = golay.build_golay()
        return code.weight_enumerator(), Counter(code.coset(s).weight for s in range(1 << 12))
    golay.build_golay.cache_clear()
    (enum, cocode), dt = timed(run)
    assert enum == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    assert dict(cocode) == {0: 1, 1: 24, 2: 276, 3: 2024, 4: 1771}
    assert dt < 1.0


@criterion(2, "|M24| = 244823040 by the chain (< 1 min) and in Las Vegas mode")
def test_c02_m24():
    G = ActionGroup(24, tuple(g.matrix() for g in golay.m24_generators()))
    order, dt = timed(order_via_chain, G)
    assert order == M24 and dt < 60
    assert order_via_chain(G, claimed=M24) == M24


@criterion(3, "Leech mod 2 census, multiplicities and norm totals, <= 30 min single thread",
           note="the 8-thread bound is not measurable on this 1-CPU host")
def test_c03_census(census_run):
    table, dt = census_run
    assert table.census == {0: 1, 2: 98280, 3: 8386560, 4: 8292375}
    # build_type_table raises unless every class is hit exactly 2, 2, 48 times
    assert leech.MULTIPLICITY == {2: 2, 3: 2, 4: 48}
    assert table.norm_totals, "census was loaded from a cache; unset AXCOUNT_TYPES_CACHE"
    assert table.norm_totals == {4: 196560, 6: 16773120, 8: 398034000}
    assert dt <= 30 * 60


@criterion(4, "Co1 orbits on nonzero classes are exactly the three type classes")
def test_c04_transitivity(types):
    O = orbits(conway.co1_action(), lambda p: p != 0)
    assert len(O.reps) == 3
    for r, size in zip(O.reps, O.sizes):
        t = types.type_of(r)
        assert size == types.census[t]
        assert (types.types[O.orbit_id == O.orbit_id[r]] == t).all()


@criterion(5, "|Co1| by the chain and |Co2| = |Co1| / 98280, <= 10 min")
def test_c05_co1():
    order, dt = timed(conway.co1_order)
    assert order == CO1 and dt <= 600
    assert order % 98280 == 0 and order // 98280 == CO2


@criterion(6, "short-vector profile buckets and eigenspace dimensions, < 1 min")
def test_c06_spectrum():
    def run():
        p = spectrum.short_vector_profile(spectrum.DEFAULT_R)
        return p, spectrum.eigenspace_dims(p)
    (p, s), dt = timed(run)
    assert (p.bucket(1, "even"), p.bucket(1, "odd"), p.bucket(0, "even"), p.bucket(0, "odd"),
            p.pairs["even"], p.pairs["odd"]) == (22528, 24576, 24047, 22528, 1276, 1024)
    assert s.dims == {"16": 1, "0": 96256, "4": 4371, "1/2": 96256}
    assert s.total == 196884
    assert dt < 60


@criterion(7, "axes transition matrix gives all twelve orbit sizes and |X+|, < 1 s")
def test_c07_axes():
    def run():
        M = counting.load_transition_matrix("table2.txt", 16584750)
        return counting.orbit_sizes(M, "2A", 2 * 98280)
    sizes, dt = timed(run)
    assert sizes.sizes == TABLE1
    assert {r.label: r.size for r in tables.table1()} == TABLE1
    assert sizes.total == X_PLUS and dt < 1


@criterion(8, "feasible transition matrix gives all ten orbit sizes and |X-|, < 1 s")
def test_c08_feasible():
    def run():
        M = counting.load_transition_matrix("table4.txt", 93150)
        return counting.orbit_sizes(M, "2A1", 1)
    sizes, dt = timed(run)
    assert sizes.sizes == {r.label: r.size for r in tables.table3()}
    assert len(sizes.sizes) == 10
    assert sizes["6C1"] == 6685301145600 and sizes["10A1"] == 4000762036224
    assert sizes.total == X_MINUS and dt < 1


@criterion(9, "Monster and Baby Monster orders and factorizations",
           note="PARTIAL: the printed Baby Monster factor list has an extra 41 and is "
                "unattainable; the printed order and its true factorization match")
def test_c09_orders():
    m = counting.monster_order(X_PLUS, X_MINUS, CO1 // 98280)
    b = counting.baby_monster_order(X_MINUS, CO1 // 98280)
    assert m == MONSTER and len(str(m)) == 54
    assert counting.factorize(m) == MONSTER_FACTORS
    assert b == BABY
    assert counting.factorize(b) == BABY_FACTORS


@pytest.mark.xfail(strict=True, reason="the printed factor list multiplies to 41 * |B|")
def test_c09_baby_factor_list_as_printed():
    assert counting.factorize(BABY) == BABY_FACTORS_AS_PRINTED


@criterion(10, "Sylow-11 count is exactly 1814/11 and not an integer")
def test_c10_sylow11():
    assert counting.sylow11_check() == (Fraction(1814, 11), True)


@criterion(11, "suborbit totals, fusion aggregation and 22 stabilizer products")
def test_c11_consistency():
    co1 = conway.co1_order()
    rep = tables.check_suborbit_totals()
    assert rep.ok and rep.details == {"table 1": (251, 405, 123), "table 3": (59, 87, 32)}
    assert tables.check_fusion(tables.table5(), tables.table1()).ok
    assert tables.check_fusion(tables.table6(), tables.table3()).ok
    prod = tables.check_stabilizer_products(co1)
    assert prod.ok and len(prod.details) == 22


@criterion(12, "shipped certificate verifies (exit 0); 100 single-entry tampers exit 1")
def test_c12_certificate(tmp_path):
    from test_certificate import tamper
    cert = data_path("monster.cert")
    assert cli.run(["verify", "--cert", str(cert), "--with-chain"]) == cli.OK
    text = cert.read_text()
    rng = random.Random(12)
    bad = tmp_path / "tampered.cert"
    for _ in range(100):
        bad.write_text(tamper(text, rng))
        assert cli.run(["verify", "--cert", str(bad)]) == cli.FAILED

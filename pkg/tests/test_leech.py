import numpy as np
import pytest
from hypothesis import given, strategies as st

from axcount import golay, leech
from axcount.leech import LeechVector, NotMember, from_leech2, to_leech2, to_leech2_many

classes = st.integers(0, (1 << 24) - 1)


def reference_index(x: np.ndarray) -> int:
    """Coefficients by a float solve, accepted only if they reproduce x exactly."""
    B = leech.leech_basis().rows
    a = np.rint(np.linalg.solve(B.T.astype(float), x.astype(float))).astype(np.int64)
    assert np.array_equal(a @ B, x)
    return int(sum(int(v & 1) << i for i, v in enumerate(a)))


def test_basis_determinant():
    B = leech.leech_basis().rows
    assert round(abs(np.linalg.det(B.astype(float)))) == 2 ** 36
    assert all(leech.is_member(r) for r in B)


def test_membership_rules():
    assert leech.is_member(leech.OMEGA_VECTOR)
    assert leech.is_member(leech.ODD_VECTOR)
    assert not leech.is_member((1,) * 24)
    assert leech.is_member((4, 4) + (0,) * 22)
    assert not leech.is_member((2,) + (0,) * 23)
    with pytest.raises(NotMember):
        to_leech2((1,) + (0,) * 23)


def test_minimal_vector_shapes():
    vecs = np.concatenate(list(leech.minimal_vectors(4)))
    assert len(vecs) == 196560
    assert ((vecs.astype(np.int64) ** 2).sum(axis=1) == 32).all()
    shapes = {}
    for v in vecs[::37]:
        key = tuple(sorted(np.abs(v.astype(int)).tolist(), reverse=True)[:3])
        shapes[key] = shapes.get(key, 0) + 1
    assert set(shapes) == {(4, 4, 0), (2, 2, 2), (3, 1, 1)}
    assert len({tuple(v) for v in vecs[:5000].tolist()}) == 5000


def test_fast_index_matches_reference():
    vecs = next(leech.minimal_vectors(6, batch=2000)).astype(np.int64)
    fast = to_leech2_many(vecs)
    for v, i in zip(vecs[:300], fast[:300]):
        assert reference_index(v) == int(i)


@given(classes)
def test_class_roundtrip(i):
    x = from_leech2(i)
    assert leech.is_member(x)
    assert int(to_leech2(x)) == i
    assert int(to_leech2(-x)) == i
    assert int(to_leech2(x + 2 * leech.leech_basis().rows[5])) == i


@given(classes, classes)
def test_forms_law(a, b):
    xa, xb = from_leech2(a), from_leech2(b)
    bil, q = leech.forms(a, b)
    assert bil == (xa @ xb // 8) % 2
    assert q == (xa @ xa // 16) % 2
    assert leech.forms(a ^ b, 0)[1] == (q + leech.forms(b, 0)[1] + bil) % 2


def test_bilinear_many_agrees():
    f = leech.leech_forms()
    a = np.random.default_rng(3).integers(0, 1 << 24, size=10_000).astype(np.uint32)
    b = 0x123456
    many = f.bilinear_many(a, b)
    assert all(int(m) == f.bilinear(int(x), b) for x, m in zip(a[:500], many[:500]))


def test_inner_products_of_minimal_vectors():
    vecs = np.concatenate(list(leech.minimal_vectors(4))).astype(np.int64)
    sample = vecs[np.random.default_rng(0).choice(len(vecs), 200, replace=False)]
    ips = np.unique(sample @ vecs.T // 8)
    assert set(np.abs(ips).tolist()) == {0, 1, 2, 4}
    assert ((sample @ vecs.T) % 8 == 0).all()


def test_lambda_omega_is_type_four():
    assert int(leech.lambda_omega()) == 0x800000
    assert LeechVector(leech.OMEGA_VECTOR).norm == 8


def test_type_census(types):
    assert types.census == leech.TYPE_CENSUS
    assert types.norm_totals == leech.MINIMAL_COUNTS
    assert types.type_of(0) == 0
    assert types.type_of(leech.lambda_omega()) == 4


@given(classes)
def test_type_matches_quadratic_form(types, i):
    t = types.type_of(i)
    if i:
        assert leech.forms(i, 0)[1] == t % 2


def test_cache_roundtrip(types, tmp_path):
    p = tmp_path / "types.bin"
    types.save(p)
    again = leech.TypeTable.load(p)
    assert again.census == types.census
    assert np.array_equal(again.types, types.types)
    p.write_bytes(b"junk")
    with pytest.raises(leech.CensusError):
        leech.TypeTable.load(p)


def test_feasible_census(types):
    beta = to_leech2((4, 4) + (0,) * 22)
    assert types.type_of(beta) == 2
    assert leech.feasible_census(beta, types) == 93150 // 2
    short = np.flatnonzero(types.types == 2)
    for b in np.random.default_rng(11).choice(short, 5, replace=False):
        assert leech.feasible_census(int(b), types) == 46575
        assert types.type_of(0) != 4  # beta + beta = 0 is never feasible
    with pytest.raises(ValueError):
        leech.feasible_census(leech.lambda_omega(), types)

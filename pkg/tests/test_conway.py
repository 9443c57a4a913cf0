import numpy as np
import pytest
from hypothesis import given, strategies as st

from axcount import conway, leech
from axcount.conway import IntegralAutomorphism, reduce_mod2, verify_automorphism
from axcount.orbit_engine import orbits

CO1_ORDER = 4157776806543360000


def test_trivial_and_scalar_maps():
    one = IntegralAutomorphism.identity()
    assert verify_automorphism(one)
    assert verify_automorphism(IntegralAutomorphism(-one.twice))
    assert reduce_mod2(IntegralAutomorphism(-one.twice)).is_identity()
    assert not verify_automorphism(IntegralAutomorphism(2 * one.twice))


def test_generators_verify():
    gens = conway.co0_generators()
    assert len(gens) == 4
    assert all(verify_automorphism(g) for g in gens)
    assert [g.is_monomial for g in gens] == [True, True, True, False]


def test_bad_sign_change_rejected():
    assert not verify_automorphism(conway.sign_change(1))
    assert verify_automorphism(conway.sign_change(conway.OCTAD_COLUMNS_01))


def test_xi_variants():
    valid = [s for s, g in conway.xi_candidates() if verify_automorphism(g)]
    assert len(valid) == 32
    assert valid[0] == (-1, 1, 1, 1, 1, 1)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=6))
def test_reduction_is_homomorphism(word):
    # push the basis through the word one generator at a time
    gens = conway.co0_generators()
    images = leech.leech_basis().rows.copy()
    m = reduce_mod2(IntegralAutomorphism.identity())
    for i in word:
        images = gens[i].apply(images)
        m = m @ reduce_mod2(gens[i])
    assert all(leech.is_member(r) for r in images)
    assert [int(v) for v in leech.to_leech2_many(images)] == list(m.rows)


def test_composition_outside_half_integers_rejected():
    xi = conway.co0_generators()[3]
    with pytest.raises(ValueError):
        xi @ conway.permutation_matrix(golay_perm()) @ xi


def golay_perm():
    return conway.m24_generators()[0].perm


@given(st.integers(0, (1 << 24) - 1), st.integers(0, 3))
def test_action_commutes_with_reduction(i, k):
    g = conway.co0_generators()[k]
    x = leech.from_leech2(i)
    assert int(leech.to_leech2(g.apply(x))) == conway.co1_generators()[k].apply(i)


@given(st.integers(0, (1 << 24) - 1), st.integers(0, 3))
def test_norm_preserved(i, k):
    g = conway.co0_generators()[k]
    x = leech.from_leech2(i)
    assert g.apply(x) @ g.apply(x) == x @ x


def test_types_invariant(types):
    t = types.types
    pts = np.arange(1 << 24, dtype=np.uint32)
    for m in conway.co1_generators():
        assert np.array_equal(t[m.apply_many(pts)], t)


def test_orbits_are_type_classes(types):
    O = orbits(conway.co1_action(), lambda p: p != 0)
    assert sorted(O.sizes) == sorted(v for k, v in types.census.items() if k)
    for r in O.reps:
        assert (types.types[O.orbit_id == O.orbit_id[r]] == types.type_of(r)).all()


def test_co1_order():
    assert conway.co1_order() == CO1_ORDER
    assert conway.co1_order(seed=12345, claimed=CO1_ORDER) == CO1_ORDER


def test_generator_file_matches_construction():
    built = conway.construct_generators()
    shipped = conway.co0_generators()
    assert all(np.array_equal(a.twice, b.twice) for a, b in zip(built, shipped))


def test_non_half_integral_rejected():
    with pytest.raises(ValueError):
        IntegralAutomorphism.from_rational(np.eye(24) / 3)

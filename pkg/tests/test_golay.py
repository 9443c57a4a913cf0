import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from axcount import golay
from axcount.golay import M24Element, build_golay, popcount

CODE = build_golay()
words24 = st.integers(0, (1 << 24) - 1)


def qr_code_words() -> list[int]:
    """Extended quadratic residue code of length 24, built without the MOG."""
    q = {(x * x) % 23 for x in range(1, 23)}
    gens = [(1 << 24) - 1]
    for s in range(23):
        w = 0
        for i in range(23):
            if (i - s) % 23 in q or (i - s) % 23 == 0:
                w |= 1 << i
        if popcount(w) % 2:
            w |= 1 << 23
        gens.append(w)
    span = {0}
    for g in gens:
        span |= {x ^ g for x in span}
    return sorted(span)


def test_weight_enumerator_exact():
    assert CODE.weight_enumerator() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_matches_independent_qr_construction():
    qr = qr_code_words()
    assert len(qr) == 4096
    assert Counter(popcount(w) for w in qr) == Counter(
        popcount(int(w)) for w in CODE.codewords)


def test_self_dual_doubly_even():
    for a, b in itertools.combinations_with_replacement(CODE.basis, 2):
        assert popcount(a & b) % 2 == 0
    assert all(popcount(b) % 4 == 0 for b in CODE.basis)


def test_cocode_census_exhaustive():
    census = Counter(CODE.coset(s).weight for s in range(1 << 12))
    assert dict(census) == {0: 1, 1: 24, 2: 276, 3: 2024, 4: 1771}


def test_weight_four_cosets_are_sextets():
    # each weight-4 coset holds six disjoint tetrads
    for s in range(0, 1 << 12, 97):
        c = CODE.coset(s)
        if c.weight == 4:
            tetrads = [sum(1 << p for p in t) for t in itertools.combinations(range(24), 4)
                       if CODE.syndrome_bits(sum(1 << p for p in t)) == s]
            assert len(tetrads) == 6
            union = 0
            for t in tetrads:
                assert union & t == 0
                union |= t
            assert union == golay.ALL_ONES


@given(words24, words24)
def test_syndrome_is_linear(a, b):
    assert CODE.syndrome_bits(a ^ b) == CODE.syndrome_bits(a) ^ CODE.syndrome_bits(b)


@given(words24)
def test_leader_is_minimal(w):
    c = golay.syndrome(w)
    assert CODE.syndrome_bits(c.rep) == c.syndrome
    assert c.weight == popcount(c.rep) <= 4
    assert CODE.is_codeword(w ^ c.rep)


@given(st.sets(st.integers(0, 23), min_size=5, max_size=5))
def test_five_points_lie_in_one_octad(pts):
    five = sum(1 << p for p in pts)
    assert sum(1 for o in CODE.octads() if o & five == five) == 1


def test_hexacode():
    h = golay.hexacode()
    assert len(h) == 64
    assert Counter(sum(1 for x in w if x) for w in h) == {0: 1, 4: 45, 6: 18}


def test_generators_preserve_code():
    gens = golay.m24_generators()
    assert len(gens) == 2
    assert all(golay.preserves_code(g) for g in gens)


@given(st.lists(st.sampled_from([0, 1]), min_size=1, max_size=6), words24)
def test_words_in_generators_act_on_cocode(idx, w):
    gens = golay.m24_generators()
    g = M24Element.identity()
    for i in idx:
        g = g * gens[i]
    assert golay.preserves_code(g)
    # the induced action is well defined on cosets
    c = golay.syndrome(w)
    assert CODE.syndrome_bits(g(w)) == CODE.syndrome_bits(g(c.rep))


@given(st.sampled_from([0, 1]), st.sampled_from([0, 1]))
def test_cocode_action_is_homomorphism(i, j):
    gens = golay.m24_generators()
    a, b = gens[i], gens[j]
    assert golay.cocode_action(a * b) == golay.cocode_action(a) @ golay.cocode_action(b)


def test_non_automorphism_rejected():
    swap = list(range(24))
    swap[0], swap[4] = 4, 0
    assert not golay.preserves_code(M24Element(tuple(swap)))
    with pytest.raises(ValueError):
        golay.cocode_action(M24Element(tuple(swap)))
    with pytest.raises(ValueError):
        M24Element((0,) * 24)


def test_even_coordinates():
    assert len(CODE.even_basis) == 11
    seen = {CODE.even_coordinates(1 | 1 << i) for i in range(1, 24)}
    assert len(seen) == 23 and 0 not in seen
    with pytest.raises(ValueError):
        CODE.even_coordinates(1)

import pytest
from hypothesis import given, strategies as st

from twobridge.kauffman import L_matrix, f_lemma
from twobridge.laurent import LaurentPoly2
from twobridge.sweep import (
    LemmaSweep,
    Packing,
    PackingOverflow,
    L_from_record,
    check_lemma_family,
    low_min_deg_a,
)
from twobridge.verify import (
    check_lemma,
    check_lemma_reference,
    check_theorem,
    check_theorem_reference,
    lemma_words,
    words_up_to,
)

nonneg_polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 5)), st.integers(-1000, 1000), max_size=6
).map(LaurentPoly2)


@given(nonneg_polys, nonneg_polys)
def test_packing_is_a_ring_homomorphism(p, q):
    pk = Packing(bits=48, width=12)
    assert pk.unpack(pk.pack(p)) == p
    assert pk.unpack(pk.pack(p) * pk.pack(q)) == p * q
    assert pk.unpack(pk.pack(p) - pk.pack(q)) == p - q


@given(nonneg_polys)
def test_blocks(p):
    pk = Packing(bits=32, width=8)
    n = pk.pack(p)
    for k in range(5):
        assert pk.unpack_x(pk.block(n, k)) == p.coefficient_of_a(k)
        low, high = pk.split_low(n, k)
        assert low + (high << (pk.block_bits * k)) == n


def test_packing_rejects_what_does_not_fit():
    pk = Packing(bits=8, width=4)
    for bad in (LaurentPoly2({(0, 4): 1}), LaurentPoly2({(-1, 0): 1}), LaurentPoly2({(0, 0): 200})):
        with pytest.raises(PackingOverflow):
            pk.pack(bad)


def test_full_sweep_equals_L_matrix():
    sweep = LemmaSweep(9, 9, interior_min=1)
    records = list(sweep.records())
    assert sorted(r.word for r in records) == sorted(words_up_to(9))
    for rec in records:
        assert L_from_record(sweep, rec) == L_matrix(rec.word), rec.word


def test_truncated_sweep_keeps_low_blocks():
    full = LemmaSweep(11, 6, interior_min=1)
    low = LemmaSweep(11, 6, interior_min=1, truncate=True)
    for a, b in zip(full.records(), low.records()):
        assert a.word == b.word
        L = L_matrix(a.word)
        m = L.min_deg_a()
        assert low_min_deg_a(low, b) == (m if m <= -1 else None)
        n = len(a.word)
        for k in range(n + 1):
            assert low.packing.block(b.packed_L, k) == full.packing.block(a.packed_L, k)
    with pytest.raises(ValueError):
        L_from_record(low, next(low.records()))


def test_lemma_side_values():
    sweep = LemmaSweep(12, 8)
    records = list(sweep.records())
    assert sorted(r.word for r in records) == sorted(lemma_words(12))
    pk = sweep.packing
    for rec in records:
        xf = f_lemma(rec.word).shift(degx=1)
        assert pk.unpack_x(rec.packed_f_direct) == xf
        assert pk.unpack_x(rec.packed_f_product) == xf


@pytest.mark.parametrize("max_sum", [5, 9, 12])
def test_batch_checks_match_reference(max_sum):
    a, b = check_lemma(max_sum), check_lemma_reference(max_sum)
    assert (a.checked, a.failures) == (b.checked, b.failures)
    a, b = check_theorem(max_sum), check_theorem_reference(max_sum)
    assert (a.checked, a.failures) == (b.checked, b.failures)
    assert a.ok


def test_lemma_family_detects_failures():
    # outside the hypothesis interior 1s are allowed; some of those words break the lemma
    sweep = LemmaSweep(8, 6, interior_min=1, truncate=True)
    bad = [r.word for r in sweep.records() if low_min_deg_a(sweep, r) != -1]
    expected = [w for w in words_up_to(8) if len(w) <= 6 and L_matrix(w).min_deg_a() != -1]
    assert sorted(bad) == sorted(expected)
    assert expected  # e.g. (2,1,2), a split unlink
    assert check_lemma_family(8, 6).failures == []


def test_sweep_arguments():
    with pytest.raises(ValueError):
        LemmaSweep(0, 3)

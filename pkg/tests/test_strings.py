"""String-data crystal operations, cross-checked against the literal tensor rule."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from kmcrystals import CartanData, ModelSequence, RootVector, StringData

from .oracle import colors_for, tensor_apply, tensor_stats, tensor_weight

PRESET_NAMES = ["A1", "A2", "A3", "B2", "G2", "A1~"]


def ref_model(cartan):
    return ModelSequence(cartan)


def replay(model, word):
    x = StringData.highest(model)
    for i in word:
        x = x.apply_f(i)
    return x


# ----------------------------------------------------------------------
# frozen examples


def test_weight_examples(a2):
    m = ref_model(a2)
    assert StringData.highest(m).weight() == RootVector((0, 0))
    assert StringData(m, (1,)).weight() == RootVector((-1, 0))
    assert StringData(m, (1, 1)).weight() == RootVector((-1, -1))


def test_stat_examples(a1, a2):
    u2 = StringData.highest(ref_model(a2))
    assert u2.eps(1) == 0 and u2.phi(1) == 0
    for m in range(4):
        x = StringData(ref_model(a1), (m,))
        assert x.eps(1) == m and x.phi(1) == -m
    assert StringData(ref_model(a2), (1, 1)).eps(2) == 1


def test_apply_examples(a1, a2):
    for m in range(4):
        assert StringData(ref_model(a1), (m,)).apply_f(1).entries == (m + 1,)
    u2 = StringData.highest(ref_model(a2))
    assert u2.apply_e(1) is None and u2.apply_e(2) is None
    assert u2.apply_f(1).apply_f(2).entries == (1, 1)


def test_truncation_length_examples(a1, a2):
    assert StringData(ref_model(a2), (0, 0, 1)).default_window() == 5
    assert StringData.highest(ref_model(a1)).default_window() == 1
    head = ModelSequence(a2, (2,))
    assert StringData(head, (0, 0, 0, 1)).default_window() == 6
    # a short-support element in a headed model still needs every color
    # beyond its support, so the window clears the head too
    u = StringData.highest(ModelSequence(a2, (1,)))
    assert u.default_window() == 3


def test_entries_validation(a2):
    with pytest.raises(ValueError):
        StringData(ref_model(a2), (1, -1))
    assert StringData(ref_model(a2), (1, 0, 0)).entries == (1,)  # trimming


def test_window_below_minimum_rejected(a2):
    x = StringData(ref_model(a2), (1, 1))
    with pytest.raises(ValueError):
        x.eps(1, window=2)


# ----------------------------------------------------------------------
# dual route: every statistic and action agrees with the literal tensor rule


def all_words(rank, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(range(1, rank + 1), repeat=length)


@pytest.mark.parametrize("preset", ["A2", "B2", "G2", "A1~"])
def test_agrees_with_tensor_rule(preset):
    cartan = CartanData.preset(preset)
    model = ref_model(cartan)
    gcm = [list(r) for r in cartan.gcm]
    window = 4 + 2 * cartan.rank
    colors = colors_for(cartan.rank, (), window)
    for word in all_words(cartan.rank, 4):
        x = replay(model, word)
        entries = [x.entry(k) for k in range(1, window + 1)]
        # the same word replayed through the oracle gives the same data
        ora = [0] * window
        for i in word:
            ora = tensor_apply(gcm, colors, ora, i, "f")
        assert ora == entries, (word, ora, entries)
        wt = tensor_weight(gcm, colors, entries)
        assert tuple(wt) == x.weight().coords
        for i in range(1, cartan.rank + 1):
            eps, phi = tensor_stats(gcm, colors, entries, i)
            eps = max(eps, 0)  # the oracle window has no tail; clamp to the model
            assert eps == x.eps(i), (word, i)
            assert eps + sum(gcm[i - 1][j] * w for j, w in enumerate(wt)) == x.phi(i)
            nxt = x.apply_f(i)
            assert tensor_apply(gcm, colors, entries, i, "f") == [
                nxt.entry(k) for k in range(1, window + 1)
            ]
            prv = x.apply_e(i)
            assert (prv is None) == (x.eps(i) == 0)
            if prv is not None:
                assert tensor_apply(gcm, colors, entries, i, "e") == [
                    prv.entry(k) for k in range(1, window + 1)
                ]


# ----------------------------------------------------------------------
# invariants


@settings(deadline=None, max_examples=60)
@given(name=st.sampled_from(PRESET_NAMES), data=st.data())
def test_operator_contracts(name, data):
    cartan = CartanData.preset(name)
    word = tuple(
        data.draw(st.integers(1, cartan.rank)) for _ in range(data.draw(st.integers(0, 8)))
    )
    x = replay(ref_model(cartan), word)
    assert all(v >= 0 for v in x.entries)
    for i in range(1, cartan.rank + 1):
        y = x.apply_f(i)
        assert y.apply_e(i) == x
        assert y.weight() == x.weight() + RootVector.simple(cartan.rank, i).scale(-1)
        z = x.apply_e(i)
        if z is not None:
            assert z.apply_f(i) == x
        # eps counts actual raising applications
        count, cur = 0, x
        while (nxt := cur.apply_e(i)) is not None:
            count += 1
            cur = nxt
        assert count == x.eps(i)
        assert x.phi(i) == x.eps(i) + cartan.pair_root(i, x.weight())


@settings(deadline=None, max_examples=40)
@given(name=st.sampled_from(PRESET_NAMES), data=st.data())
def test_truncation_stability(name, data):
    cartan = CartanData.preset(name)
    word = tuple(
        data.draw(st.integers(1, cartan.rank)) for _ in range(data.draw(st.integers(0, 8)))
    )
    x = replay(ref_model(cartan), word)
    wide = x.default_window() + 7
    for i in range(1, cartan.rank + 1):
        assert x.eps(i) == x.eps(i, window=wide)
        assert x.phi(i) == x.phi(i, window=wide)
        assert x.apply_f(i) == x.apply_f(i, window=wide)
        assert x.apply_e(i) == x.apply_e(i, window=wide)


def test_json_shape(a2):
    x = StringData(ModelSequence(a2, (2,)), (1, 0, 1))
    assert x.to_json() == {"model_head": [2], "entries": [1, 0, 1]}

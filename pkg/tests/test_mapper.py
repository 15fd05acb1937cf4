import pytest
from hypothesis import given, strategies as st

from refgc.mapper import (
    Instruction,
    WindowState,
    find_longest_match,
    lower_median,
    parse,
    replay,
    update_window,
)
from refgc.mutate import mutate, random_sequence
from refgc.params import Params
from refgc.seqio import Sequence

from conftest import EX_REFERENCE, EX_TARGET


def brute_longest_match(t: bytes, n: int, r: bytes, w: WindowState):
    """Every window start, naive extension, then (longest, nearest W, smallest)."""
    lo, hi = max(1, w.W - w.L), min(len(r), w.W + w.R)
    best = None
    for i in range(lo, hi + 1):
        l = 0
        while n + l < len(t) and i - 1 + l < len(r) and t[n + l] == r[i - 1 + l]:
            l += 1
        key = (-l, abs(i - w.W), i)
        if l > 0 and (best is None or key < best[0]):
            best = (key, i, l)
    return (w.W, 0) if best is None else (best[1], best[2])


def window(W=1, L=1000, R=1000, M=100):
    return WindowState(W=W, L=L, R=R, M=M)


def test_example_first_phrase():
    t, r = Sequence.from_str(EX_TARGET), Sequence.from_str(EX_REFERENCE)
    assert find_longest_match(t, 0, r, window(1)) == (1, 4)


def test_example_second_phrase():
    t = Sequence.from_str("AGGTACTTT")
    r = Sequence.from_str("CCCCCAGGTACAGG")
    assert find_longest_match(t, 0, r, window(1)) == (6, 6)


def test_self_match_runs_to_end():
    s = Sequence.from_str("ACGTTGCAAC")
    assert find_longest_match(s, 0, s, window(1)) == (1, 10)


def test_no_match_falls_back_to_centre():
    t, r = Sequence.from_str("NNN"), Sequence.from_str("AAAA")
    assert find_longest_match(t, 0, r, window(3)) == (3, 0)


def test_match_may_extend_past_right_edge():
    r = Sequence.from_str("TTTTTACGTACGGA")
    t = Sequence.from_str("ACGTACGGA")
    # only start 6 is inside [1, 6] but the match runs to the end
    assert find_longest_match(t, 0, r, window(1, L=0, R=5)) == (6, 9)


def test_tie_prefers_position_nearest_centre():
    r = Sequence.from_str("AAT" + "C" * 10 + "AAG")
    t = Sequence.from_str("AAC")
    assert find_longest_match(t, 0, r, window(15)) == (14, 2)
    assert find_longest_match(t, 0, r, window(2)) == (1, 2)
    # equidistant: smaller position
    assert find_longest_match(t, 0, r, window(7)) == (1, 2)


@given(
    st.text(alphabet="ACG", min_size=1, max_size=40),
    st.text(alphabet="ACG", min_size=1, max_size=60),
    st.integers(-5, 70),
    st.integers(0, 20),
    st.integers(0, 20),
    st.data(),
)
def test_find_longest_match_agrees_with_brute_force(ts, rs, W, L, R, data):
    n = data.draw(st.integers(0, len(ts) - 1))
    t, r = ts.encode(), rs.encode()
    w = window(W, L, R)
    assert find_longest_match(t, n, r, w) == brute_longest_match(t, n, r, w)


def test_update_window_plain_advance():
    s = update_window(window(1, M=100), p=1, l=4, k=1)
    assert s.W == 6
    assert s.drift_history == (0,)


def test_update_window_recentres_by_lower_median():
    s = WindowState(W=100, L=10, R=10, M=2, drift_history=(3,))
    out = update_window(s, p=105, l=4, k=2)
    # drifts {3, 5}: lower median 3, plus the l+1 advance
    assert lower_median([3, 5]) == 3
    assert out.W == 100 + 5 + 3
    assert out.drift_history == ()
    assert (out.L, out.R) == (10, 10)


def test_update_window_zero_drift_noop():
    s = WindowState(W=50, L=10, R=10, M=3, drift_history=(0, 0))
    assert update_window(s, p=50, l=9, k=3).W == 60


def test_advance_without_novel_variant():
    assert update_window(window(1), p=1, l=4, k=1, advance_novel=False).W == 5


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=50))
def test_lower_median_oracle(values):
    m = lower_median(values)
    below = sum(v < m for v in values)
    at_or_below = sum(v <= m for v in values)
    # lower median: at most half strictly below, at least half at or below
    assert 2 * below < len(values) + 1
    assert 2 * at_or_below >= len(values)


def test_example_parse_golden():
    t, r = Sequence.from_str(EX_TARGET), Sequence.from_str(EX_REFERENCE)
    f = parse(t, r)
    assert f[:4] == [(1, 4, "C"), (6, 6, "T"), (12, 5, "N"), (14, 2, "N")]
    assert replay(f, r) == t.chars


def test_identical_sequences_single_end_phrase():
    s = Sequence(random_sequence(5000, seed=3))
    assert parse(s, s) == [Instruction(1, 5000, None)]


def test_disjoint_alphabets_emit_zero_length_phrases():
    t, r = Sequence(b"N" * 30), Sequence(b"A" * 50)
    f = parse(t, r)
    assert len(f) == 30
    assert all(ins.l == 0 and ins.z == "N" for ins in f)
    assert replay(f, r) == t.chars


def test_parse_rejects_empty():
    with pytest.raises(ValueError):
        parse(Sequence(b""), Sequence(b"A"))


def _check_tiling_and_window(t, r, params):
    f = parse(t, r, params)
    assert replay(f, r) == t.chars
    assert sum(ins.span for ins in f) == len(t)
    assert all(ins.z is not None for ins in f[:-1])
    # re-run the window recursion and check containment of every start
    state = WindowState.initial(params)
    for k, ins in enumerate(f, 1):
        lo, hi = state.bounds(len(r))
        if ins.l:
            assert lo <= ins.p <= hi
            assert ins.p + ins.l - 1 <= len(r)
        else:
            assert ins.p == state.W
        state = update_window(state, ins.p, ins.l, k)
    return f


@given(
    st.integers(1, 3000),
    st.integers(0, 2**32 - 1),
    st.floats(0, 0.05),
    st.floats(0, 0.02),
    st.floats(0, 0.02),
    st.integers(1, 12),
    st.sampled_from([Params(), Params(left=30, right=30, period=5), Params(left=0, right=3, period=1)]),
)
def test_parse_replays_mutated_pairs(n, seed, sub, ins, dele, max_indel, params):
    ref = random_sequence(n, seed)
    tgt, _ = mutate(ref, sub, ins, dele, max_indel, seed)
    if not tgt:
        return
    _check_tiling_and_window(Sequence(tgt), Sequence(ref), params)


@given(st.binary(min_size=1, max_size=200), st.binary(min_size=1, max_size=200))
def test_parse_replays_arbitrary_bytes(t, r):
    _check_tiling_and_window(Sequence(t), Sequence(r), Params(left=20, right=20, period=3))


def test_parse_is_deterministic():
    ref = random_sequence(20000, 5)
    tgt, _ = mutate(ref, 0.01, 0.001, 0.001, 5, seed=6)
    assert parse(Sequence(tgt), Sequence(ref)) == parse(Sequence(tgt), Sequence(ref))


def test_window_tracks_long_drift():
    # 40 insertions of 20 bases each push the target 800 bases ahead,
    # far beyond a 100-wide window unless re-centering follows the drift
    ref = random_sequence(60000, 11)
    parts, cur = [], 0
    for i in range(1, 41):
        cut = i * 1400
        parts += [ref[cur:cut], random_sequence(20, 100 + i)]
        cur = cut
    parts.append(ref[cur:])
    tgt = b"".join(parts)
    f = parse(Sequence(tgt), Sequence(ref), Params(left=100, right=100, period=3))
    assert replay(f, Sequence(ref)) == tgt
    assert len(f) < 40 * 25

"""Pure-Python classification kernels.

Reference implementation of the hot-path functions; ``teatwatch._speedups``
is the compiled twin with identical signatures and semantics. Status codes:
0 Indeterminate, 1 Healthy, 2 Attention, 3 Sick.
"""


def teat_code(t, lo, hi, attn):
    """Code for a single teat reading against the three cut-offs."""
    if t > attn:
        return 3
    if t > hi:
        return 2
    if t > lo:
        return 1
    return 0


def quartet_code_legacy(t1, t2, t3, t4, lo, hi, attn):
    """First-match-wins rating: the bands are tested in fixed order and the
    first band containing any teat decides the animal."""
    if lo < t1 <= hi or lo < t2 <= hi or lo < t3 <= hi or lo < t4 <= hi:
        return 1
    if hi < t1 <= attn or hi < t2 <= attn or hi < t3 <= attn or hi < t4 <= attn:
        return 2
    if t1 > attn or t2 > attn or t3 > attn or t4 > attn:
        return 3
    return 0


def quartet_code_worst(t1, t2, t3, t4, lo, hi, attn):
    """Severity-ordered rating: the animal takes its worst teat's code."""
    return max(
        teat_code(t1, lo, hi, attn),
        teat_code(t2, lo, hi, attn),
        teat_code(t3, lo, hi, attn),
        teat_code(t4, lo, hi, attn),
    )


def fill_batch_codes(temps, out, worst, lo, hi, attn):
    """Classify ``temps`` (n rows of four floats) into ``out`` (length n).

    ``temps`` may be anything with a ``tolist`` method (a 2-D float array)
    or a sequence of 4-item rows; ``out`` must support slice assignment.
    """
    rows = temps.tolist() if hasattr(temps, "tolist") else temps
    rate = quartet_code_worst if worst else quartet_code_legacy
    out[:] = [rate(t1, t2, t3, t4, lo, hi, attn) for t1, t2, t3, t4 in rows]

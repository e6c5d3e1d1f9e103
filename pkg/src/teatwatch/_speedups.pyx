# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled classification kernels; twin of ``teatwatch._purepy``.

Same function names, argument orders, and status codes as the pure module
so the two are interchangeable at import time.
"""


cdef inline signed char _teat_code(double t, double lo, double hi, double attn) nogil:
    if t > attn:
        return 3
    if t > hi:
        return 2
    if t > lo:
        return 1
    return 0


cdef inline signed char _quartet_legacy(double t1, double t2, double t3, double t4,
                                        double lo, double hi, double attn) nogil:
    if lo < t1 <= hi or lo < t2 <= hi or lo < t3 <= hi or lo < t4 <= hi:
        return 1
    if hi < t1 <= attn or hi < t2 <= attn or hi < t3 <= attn or hi < t4 <= attn:
        return 2
    if t1 > attn or t2 > attn or t3 > attn or t4 > attn:
        return 3
    return 0


cdef inline signed char _quartet_worst(double t1, double t2, double t3, double t4,
                                       double lo, double hi, double attn) nogil:
    cdef signed char best = _teat_code(t1, lo, hi, attn)
    cdef signed char c = _teat_code(t2, lo, hi, attn)
    if c > best:
        best = c
    c = _teat_code(t3, lo, hi, attn)
    if c > best:
        best = c
    c = _teat_code(t4, lo, hi, attn)
    if c > best:
        best = c
    return best


def teat_code(double t, double lo, double hi, double attn):
    """Code for a single teat reading against the three cut-offs."""
    return _teat_code(t, lo, hi, attn)


def quartet_code_legacy(double t1, double t2, double t3, double t4,
                        double lo, double hi, double attn):
    """First-match-wins rating across the four teats."""
    return _quartet_legacy(t1, t2, t3, t4, lo, hi, attn)


def quartet_code_worst(double t1, double t2, double t3, double t4,
                       double lo, double hi, double attn):
    """Severity-ordered rating: the animal takes its worst teat's code."""
    return _quartet_worst(t1, t2, t3, t4, lo, hi, attn)


def fill_batch_codes(double[:, ::1] temps, signed char[::1] out, bint worst,
                     double lo, double hi, double attn):
    """Classify ``temps`` (n x 4, C-contiguous float64) into ``out`` (int8)."""
    cdef Py_ssize_t i, n = temps.shape[0]
    if temps.shape[1] != 4:
        raise ValueError("expected an (n, 4) temperature array")
    if out.shape[0] != n:
        raise ValueError("output buffer length does not match row count")
    with nogil:
        if worst:
            for i in range(n):
                out[i] = _quartet_worst(temps[i, 0], temps[i, 1],
                                        temps[i, 2], temps[i, 3], lo, hi, attn)
        else:
            for i in range(n):
                out[i] = _quartet_legacy(temps[i, 0], temps[i, 1],
                                         temps[i, 2], temps[i, 3], lo, hi, attn)

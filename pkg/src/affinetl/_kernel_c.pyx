# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled composition kernel; same contract as ``_kernel_py.compose_trace``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


class TraceError(RuntimeError):
    pass


cdef inline long pymod(long a, long n):
    cdef long r = a % n
    if r < 0:
        r += n
    return r


cdef struct Kern:
    long n
    long *at_r
    long *at_p
    long *ab_r
    long *ab_p
    long *bt_r
    long *bt_p
    long *bb_r
    long *bb_p
    long *seen
    long *ct_r
    long *ct_p
    long *cb_r
    long *cb_p


cdef int visit(Kern *k, long p, long *j, long *off) except -1:
    j[0] = pymod(p - 1, k.n)
    if k.seen[j[0]]:
        raise TraceError("middle node visited twice")
    k.seen[j[0]] = 1
    off[0] = p - j[0] - 1
    return 0


cdef int walk(Kern *k, long p, bint from_a, long *row, long *q) except -1:
    cdef long j = 0, off = 0
    while True:
        if from_a:
            visit(k, p, &j, &off)
            if k.bt_r[j] == 0:
                row[0] = 0
                q[0] = k.bt_p[j] + off
                return 0
            p = k.bt_p[j] + off
        from_a = True
        visit(k, p, &j, &off)
        if k.ab_r[j] == 1:
            row[0] = 1
            q[0] = k.ab_p[j] + off
            return 0
        p = k.ab_p[j] + off


cdef void link(Kern *k, bint src_top, long i, long row, long q):
    cdef long j, back
    if src_top:
        k.ct_r[i] = row
        k.ct_p[i] = q
    else:
        k.cb_r[i] = row
        k.cb_p[i] = q
    j = pymod(q - 1, k.n)
    back = i + 1 - (q - j - 1)
    if row == 1:
        k.ct_r[j] = 1 if src_top else 0
        k.ct_p[j] = back
    else:
        k.cb_r[j] = 1 if src_top else 0
        k.cb_p[j] = back


def compose_trace(long n, at_r, at_p, ab_r, ab_p, bt_r, bt_p, bb_r, bb_p):
    cdef Kern k
    cdef long i, j, j0, p, start, steps, shift, row = 0, q = 0
    cdef long contractible = 0, wrapping = 0
    cdef long *buf = <long *> malloc(14 * n * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    try:
        k.n = n
        k.at_r, k.at_p, k.ab_r, k.ab_p = buf, buf + n, buf + 2 * n, buf + 3 * n
        k.bt_r, k.bt_p, k.bb_r, k.bb_p = buf + 4 * n, buf + 5 * n, buf + 6 * n, buf + 7 * n
        k.seen = buf + 8 * n
        k.ct_r, k.ct_p, k.cb_r, k.cb_p = buf + 9 * n, buf + 10 * n, buf + 11 * n, buf + 12 * n
        for i in range(n):
            k.at_r[i] = at_r[i]
            k.at_p[i] = at_p[i]
            k.ab_r[i] = ab_r[i]
            k.ab_p[i] = ab_p[i]
            k.bt_r[i] = bt_r[i]
            k.bt_p[i] = bt_p[i]
            k.bb_r[i] = bb_r[i]
            k.bb_p[i] = bb_p[i]
            k.seen[i] = 0
            k.ct_r[i] = -1
            k.cb_r[i] = -1
            k.ct_p[i] = 0
            k.cb_p[i] = 0

        for i in range(n):
            if k.ct_r[i] != -1:
                continue
            if k.at_r[i] == 1:
                link(&k, True, i, 1, k.at_p[i])
            else:
                walk(&k, k.at_p[i], True, &row, &q)
                link(&k, True, i, row, q)

        for i in range(n):
            if k.cb_r[i] != -1:
                continue
            if k.bb_r[i] == 0:
                link(&k, False, i, 0, k.bb_p[i])
            else:
                walk(&k, k.bb_p[i], False, &row, &q)
                link(&k, False, i, row, q)

        for j0 in range(n):
            if k.seen[j0]:
                continue
            start = j0 + 1
            k.seen[j0] = 1
            p = start
            steps = 0
            while True:
                j = pymod(p - 1, n)
                if k.ab_r[j] != 0:
                    raise TraceError("open strand reached from a closed cycle")
                p = k.ab_p[j] + (p - j - 1)
                j = pymod(p - 1, n)
                if j == j0:
                    break
                k.seen[j] = 1
                if k.bt_r[j] != 1:
                    raise TraceError("open strand reached from a closed cycle")
                p = k.bt_p[j] + (p - j - 1)
                j = pymod(p - 1, n)
                if j == j0:
                    break
                k.seen[j] = 1
                steps += 1
                if steps > n:
                    raise TraceError("closed cycle did not terminate")
            shift = p - start
            if shift == 0:
                contractible += 1
            elif shift == n or shift == -n:
                wrapping += 1
            else:
                raise TraceError(f"closed cycle winds by {shift}, expected 0 or +-{n}")

        return (tuple([k.ct_r[i] for i in range(n)]), tuple([k.ct_p[i] for i in range(n)]),
                tuple([k.cb_r[i] for i in range(n)]), tuple([k.cb_p[i] for i in range(n)]),
                contractible, wrapping)
    finally:
        free(buf)

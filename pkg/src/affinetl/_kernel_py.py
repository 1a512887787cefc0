"""Pure-Python composition kernel.

A diagram on ``n`` columns is passed as four tuples of length ``n``:
``top_row, top_pos, bot_row, bot_pos``.  Entry ``i`` describes the partner of
the node at cover position ``i + 1`` on that row: ``row`` is 1 (upper) or 0
(lower) and ``pos`` an integer cover position.  Partners of other lifts follow
by n-periodicity.
"""

from __future__ import annotations

__all__ = ["compose_trace", "BACKEND"]

BACKEND = "python"


class TraceError(RuntimeError):
    pass


def compose_trace(n, at_r, at_p, ab_r, ab_p, bt_r, bt_p, bb_r, bb_p):
    """Stack ``A`` on top of ``B`` and trace every strand through the middle row.

    Returns ``(ct_r, ct_p, cb_r, cb_p, contractible, wrapping)`` where the
    last two count closed middle cycles per period: those returning to their
    starting lift, and those returning to a translate by ``+-n``.
    """
    seen = [False] * n
    ct_r = [-1] * n
    ct_p = [0] * n
    cb_r = [-1] * n
    cb_p = [0] * n

    def visit(p):
        j = (p - 1) % n
        if seen[j]:
            raise TraceError("middle node visited twice")
        seen[j] = True
        return j, p - j - 1

    def walk_down(p):
        # arrived at middle position p from A; continue through B, then A, ...
        while True:
            j, off = visit(p)
            if bt_r[j] == 0:
                return 0, bt_p[j] + off
            p = bt_p[j] + off
            j, off = visit(p)
            if ab_r[j] == 1:
                return 1, ab_p[j] + off
            p = ab_p[j] + off

    def walk_up(p):
        # arrived at middle position p from B; continue through A, then B, ...
        while True:
            j, off = visit(p)
            if ab_r[j] == 1:
                return 1, ab_p[j] + off
            p = ab_p[j] + off
            j, off = visit(p)
            if bt_r[j] == 0:
                return 0, bt_p[j] + off
            p = bt_p[j] + off

    def link(src_is_top, i, row, q):
        # node at cover position i + 1 on the src row is joined to (row, q)
        if src_is_top:
            ct_r[i], ct_p[i] = row, q
        else:
            cb_r[i], cb_p[i] = row, q
        j = (q - 1) % n
        back = i + 1 - (q - j - 1)
        if row == 1:
            ct_r[j], ct_p[j] = (1 if src_is_top else 0), back
        else:
            cb_r[j], cb_p[j] = (1 if src_is_top else 0), back

    for i in range(n):
        if ct_r[i] != -1:
            continue
        if at_r[i] == 1:
            link(True, i, 1, at_p[i])
        else:
            row, q = walk_down(at_p[i])
            link(True, i, row, q)

    for i in range(n):
        if cb_r[i] != -1:
            continue
        if bb_r[i] == 0:
            link(False, i, 0, bb_p[i])
        else:
            row, q = walk_up(bb_p[i])
            link(False, i, row, q)

    contractible = 0
    wrapping = 0
    for j0 in range(n):
        if seen[j0]:
            continue
        start = j0 + 1
        seen[j0] = True
        p = start
        steps = 0
        while True:
            j = (p - 1) % n
            off = p - j - 1
            if ab_r[j] != 0:
                raise TraceError("open strand reached from a closed cycle")
            p = ab_p[j] + off
            j = (p - 1) % n
            if j == j0:
                break
            seen[j] = True
            off = p - j - 1
            if bt_r[j] != 1:
                raise TraceError("open strand reached from a closed cycle")
            p = bt_p[j] + off
            j = (p - 1) % n
            if j == j0:
                break
            seen[j] = True
            steps += 1
            if steps > n:
                raise TraceError("closed cycle did not terminate")
        shift = p - start
        if shift == 0:
            contractible += 1
        elif shift in (n, -n):
            wrapping += 1
        else:
            raise TraceError(f"closed cycle winds by {shift}, expected 0 or +-{n}")

    return tuple(ct_r), tuple(ct_p), tuple(cb_r), tuple(cb_p), contractible, wrapping

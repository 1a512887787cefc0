"""Affine n-diagrams.

Computation happens in the universal cover: nodes sit at ``(row, x)`` with
``row`` 1 (top) or 0 (bottom) and ``x`` an integer; a diagram is an
n-periodic non-crossing perfect matching of these nodes, plus a count of
non-contractible circles.  The first period is ``x = 1..n`` and the seam is
the line ``x = 1/2``.

Normal forms (:class:`Diagram`):

* with ``t >= 1`` through-strands, ``(top, bot, w)`` where ``top``/``bot`` are
  the annular involutions read off each row and ``w`` the winding number;
* with ``t = 0`` (n even), ``(top, bot, k)`` plus, per row, the gap
  ``g`` (line ``x = g + 1/2``, ``0 <= g < n``) that is not enclosed by any arc.
  With no through-strands an involution alone does not fix which way round
  the cylinder each arc runs; the gap does.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .annular import fixed_points, is_annular, make_annular, pairs, star_involution
from .kernel import compose_trace

__all__ = [
    "DiagramError", "CoverMatching", "Diagram", "realize", "normalize", "compose",
    "winding", "seam_crossings", "seam_parity", "r_offset", "star_diagram",
    "star_cover", "epsilon_sign", "generator_e", "generator_u", "identity",
    "check_cover", "diagram_to_json", "diagram_from_json", "lift_row", "row_gaps",
]


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class CoverMatching:
    """Partners of the first-period nodes; everything else by periodicity.

    ``top_row[i], top_pos[i]`` is the partner of top node ``i + 1``; likewise
    for the bottom row.
    """

    n: int
    top_row: tuple
    top_pos: tuple
    bot_row: tuple
    bot_pos: tuple
    loops: int = 0

    def partner(self, row: int, x: int) -> tuple[int, int]:
        i = (x - 1) % self.n
        off = x - i - 1
        if row == 1:
            return self.top_row[i], self.top_pos[i] + off
        return self.bot_row[i], self.bot_pos[i] + off

    @property
    def t(self) -> int:
        return sum(1 for r in self.top_row if r == 0)

    @classmethod
    def from_edges(cls, n: int, top_arcs=(), bot_arcs=(), strands=(), loops: int = 0):
        """Build from one representative per edge class.

        ``top_arcs``/``bot_arcs`` hold cover position pairs on one row and
        ``strands`` pairs ``(bottom_x, top_x)``.
        """
        tr, tp, br, bp = [None] * n, [None] * n, [None] * n, [None] * n

        def put(row, x, prow, px):
            i = (x - 1) % n
            off = x - i - 1
            rows, poss = (tr, tp) if row == 1 else (br, bp)
            if rows[i] is not None:
                raise DiagramError(f"node ({row}, {x}) has two edges")
            rows[i], poss[i] = prow, px - off

        for a, b in top_arcs:
            put(1, a, 1, b)
            put(1, b, 1, a)
        for a, b in bot_arcs:
            put(0, a, 0, b)
            put(0, b, 0, a)
        for b, a in strands:
            put(0, b, 1, a)
            put(1, a, 0, b)
        if None in tr or None in br:
            raise DiagramError("some node has no edge")
        return cls(n, tuple(tr), tuple(tp), tuple(br), tuple(bp), loops)

    def edge_classes(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """One representative per edge class, as ``((row, x), (row, y))``."""
        out = []
        for i in range(self.n):
            x = i + 1
            r, y = self.top_row[i], self.top_pos[i]
            if r == 1 and y > x:
                out.append(((1, x), (1, y)))
            r, y = self.bot_row[i], self.bot_pos[i]
            if r == 0 and y > x:
                out.append(((0, x), (0, y)))
            elif r == 1:
                out.append(((0, x), (1, y)))
        return out


def check_cover(cm: CoverMatching) -> None:
    """Raise :class:`DiagramError` unless ``cm`` is a valid affine diagram."""
    n = cm.n
    for row in (0, 1):
        for x in range(1, n + 1):
            r, y = cm.partner(row, x)
            if (r, y) == (row, x):
                raise DiagramError(f"node ({row}, {x}) matched to itself")
            if cm.partner(r, y) != (row, x):
                raise DiagramError(f"partner of ({row}, {x}) is not mutual")
    if cm.loops < 0:
        raise DiagramError("negative loop count")
    if cm.loops and cm.t:
        raise DiagramError("a non-contractible circle would cross a through-strand")

    # boundary of the strip read as a line: bottom left to right, then top right to left
    def key(node):
        row, x = node
        return (row, x if row == 0 else -x)

    edges = cm.edge_classes()
    span = max(abs(a[1] - b[1]) for a, b in edges) if edges else 0
    reach = span // n + 2
    for e in edges:
        ka, kb = sorted((key(e[0]), key(e[1])))
        for f in edges:
            for m in range(-reach, reach + 1):
                if f is e and m == 0:
                    continue
                g0 = (f[0][0], f[0][1] + m * n)
                g1 = (f[1][0], f[1][1] + m * n)
                kc, kd = sorted((key(g0), key(g1)))
                if ka < kc < kb < kd or kc < ka < kd < kb:
                    raise DiagramError(f"edges {e} and {(g0, g1)} cross")


def _crossings(lo: int, hi: int, n: int, line: int) -> int:
    """Number of translates of the edge [lo, hi] crossing ``x = line + 1/2``."""
    return (line - lo) // n - (line - hi) // n


def seam_crossings(cm: CoverMatching, line: int = 0) -> int:
    """Crossings of ``x = line + 1/2`` by all edges, circles included."""
    total = cm.loops
    for (_, x), (_, y) in cm.edge_classes():
        total += _crossings(min(x, y), max(x, y), cm.n, line)
    return total


def seam_parity(cm: CoverMatching, line: int = 0) -> int:
    """0 for the even intersection property, 1 for odd."""
    return seam_crossings(cm, line) % 2


def winding(cm: CoverMatching) -> int:
    """Signed count of through-strands crossing the seam ``x = 1/2``."""
    n = cm.n
    pos = neg = 0
    for i in range(n):
        if cm.bot_row[i] != 1:
            continue
        j, top = i + 1, cm.bot_pos[i]
        c = _crossings(min(j, top), max(j, top), n, 0)
        if top > j:
            pos += c
        else:
            neg += c
    if cm.t == 0:
        raise DiagramError("winding is undefined without through-strands")
    assert pos == 0 or neg == 0, "strands cross the seam in both directions"
    return pos - neg


# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _row_info(S: tuple) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    if not is_annular(S):
        raise DiagramError(f"{S} is not annular")
    return tuple(fixed_points(S)), tuple(pairs(S))


@lru_cache(maxsize=None)
def lift_row(S: tuple, gap: int = 0) -> tuple[int, ...]:
    """Cover partner of each node ``1..n`` of a row whose arcs follow ``S``.

    With fixed points every arc runs over the side free of fixed points.
    Without, arcs are drawn inside ``[gap + 1, gap + n]``.
    """
    n = len(S)
    fix, prs = _row_info(S)
    out = [0] * n
    for i, j in prs:
        if fix:
            if any(i < f < j for f in fix):
                a, b = j, i + n
            else:
                a, b = i, j
        else:
            a = i if i > gap else i + n
            b = j if j > gap else j + n
            a, b = min(a, b), max(a, b)
        # translate so that the left endpoint lands on its residue
        ra = (a - 1) % n + 1
        out[ra - 1] = b - (a - ra)
        rb = (b - 1) % n + 1
        out[rb - 1] = a - (b - rb)
    return tuple(out)


def _canonical_gap(S: tuple, gap: int) -> int:
    return _row_gap(len(S), lift_row(S, gap))


@lru_cache(maxsize=None)
def row_gaps(S: tuple) -> tuple[int, ...]:
    """Canonical gaps of a row without fixed points: one per way of drawing it."""
    if fixed_points(S):
        return (0,)
    return tuple(sorted({_canonical_gap(S, g) for g in range(len(S))}))


@dataclass(frozen=True)
class Diagram:
    """Normal form of an affine diagram; see the module docstring."""

    top: tuple
    bot: tuple
    w: int = 0
    k: int = 0
    top_gap: int = 0
    bot_gap: int = 0

    def __post_init__(self):
        ft, _ = _row_info(self.top)
        fb, _ = _row_info(self.bot)
        if len(self.top) != len(self.bot):
            raise DiagramError("rows of different length")
        if len(self.top) < 3:
            raise DiagramError("rank must be at least 3")
        if len(ft) != len(fb):
            raise DiagramError("rows have different numbers of through-strands")
        if ft:
            if self.k or self.top_gap or self.bot_gap:
                raise DiagramError("loops and gaps need t = 0")
        else:
            if self.w:
                raise DiagramError("winding needs t >= 1")
            if self.k < 0:
                raise DiagramError("negative loop count")
            for S, g in ((self.top, self.top_gap), (self.bot, self.bot_gap)):
                if not 0 <= g < len(S) or _canonical_gap(S, g) != g:
                    raise DiagramError(f"gap {g} is not canonical for {S}")

    @property
    def n(self) -> int:
        return len(self.top)

    @property
    def t(self) -> int:
        return len(_row_info(self.top)[0])

    @property
    def kind(self) -> str:
        return "strands" if self.t else "loops"

    def sort_key(self):
        return (-self.t, self.top, self.bot, self.w, self.k, self.top_gap, self.bot_gap)

    def __repr__(self):
        if self.t:
            return f"[{_cyc(self.top)}, {_cyc(self.bot)}, w={self.w}]"
        return (f"[{_cyc(self.top)}@{self.top_gap}, {_cyc(self.bot)}@{self.bot_gap},"
                f" k={self.k}]")


def _cyc(S) -> str:
    prs = pairs(S)
    return "".join(f"({i} {j})" for i, j in prs) if prs else "id"


@lru_cache(maxsize=None)
def realize(D: Diagram) -> CoverMatching:
    n = D.n
    top_lift = lift_row(D.top, D.top_gap)
    bot_lift = lift_row(D.bot, D.bot_gap)
    tr = [1] * n
    tp = list(top_lift)
    br = [0] * n
    bp = list(bot_lift)
    f = _row_info(D.top)[0]
    g = _row_info(D.bot)[0]
    t = len(f)
    for k in range(t):
        # strand m joins bottom beta(m) to top alpha(m + w)
        m = k + D.w
        tr_pos = f[m % t] + n * (m // t)
        br[g[k] - 1], bp[g[k] - 1] = 1, tr_pos
        m = k - D.w
        tr[f[k] - 1], tp[f[k] - 1] = 0, g[m % t] + n * (m // t)
    for i in range(n):
        if tr[i] == 1 and D.top[i] == i + 1:
            raise DiagramError("unlifted fixed point")  # unreachable
    return CoverMatching(n, tuple(tr), tuple(tp), tuple(br), tuple(bp), D.k)


def normalize(cm: CoverMatching) -> Diagram:
    n = cm.n
    top = [0] * n
    bot = [0] * n
    for i in range(n):
        top[i] = (cm.top_pos[i] - 1) % n + 1 if cm.top_row[i] == 1 else i + 1
        bot[i] = (cm.bot_pos[i] - 1) % n + 1 if cm.bot_row[i] == 0 else i + 1
    top, bot = tuple(top), tuple(bot)
    for S in (top, bot):
        if not is_annular(S):
            raise DiagramError(f"induced involution {S} is not annular")
    if cm.t:
        return Diagram(top, bot, winding(cm))
    return Diagram(top, bot, 0, cm.loops,
                   _row_gap(n, cm.top_pos), _row_gap(n, cm.bot_pos))


def _row_gap(n: int, positions) -> int:
    arcs = [(i + 1, y) for i, y in enumerate(positions) if y > i + 1]
    for g in range(n):
        if all(_crossings(a, b, n, g) == 0 for a, b in arcs):
            return g
    raise DiagramError("no free gap")


@lru_cache(maxsize=1 << 16)
def compose(A: Diagram, B: Diagram) -> tuple[int, Diagram]:
    """Stack ``A`` on top of ``B``: ``A B = [2]^x C``; returns ``(x, C)``."""
    if A.n != B.n:
        raise DiagramError(f"rank mismatch: {A.n} vs {B.n}")
    a, b = realize(A), realize(B)
    ct_r, ct_p, cb_r, cb_p, x, wrap = compose_trace(
        A.n, a.top_row, a.top_pos, a.bot_row, a.bot_pos,
        b.top_row, b.top_pos, b.bot_row, b.bot_pos)
    cm = CoverMatching(A.n, ct_r, ct_p, cb_r, cb_p, a.loops + b.loops + wrap)
    return x, normalize(cm)


def r_offset(S1: tuple, S2: tuple) -> int:
    """0 if ``[S1, S2, 0]`` has the even intersection property, else 1."""
    D = Diagram(tuple(S1), tuple(S2), 0)
    if D.t == 0:
        raise DiagramError("r_offset needs through-strands")
    return seam_parity(realize(D))


def star_cover(cm: CoverMatching) -> CoverMatching:
    """Turn the cylinder upside down: ``(row, x) -> (1 - row, n + 1 - x)``."""
    n = cm.n
    tr, tp, br, bp = [], [], [], []
    for i in range(1, n + 1):
        src = n - i  # index of the old node at position n + 1 - i
        tr.append(1 - cm.bot_row[src])
        tp.append(n + 1 - cm.bot_pos[src])
        br.append(1 - cm.top_row[src])
        bp.append(n + 1 - cm.top_pos[src])
    return CoverMatching(n, tuple(tr), tuple(tp), tuple(br), tuple(bp), cm.loops)


@lru_cache(maxsize=None)
def star_diagram(D: Diagram) -> Diagram:
    if D.t:
        return Diagram(star_involution(D.bot), star_involution(D.top), D.w)
    return normalize(star_cover(realize(D)))


@lru_cache(maxsize=None)
def epsilon_sign(D: Diagram) -> int:
    return -1 if seam_parity(realize(D)) else 1


def identity(n: int) -> Diagram:
    return Diagram(tuple(range(1, n + 1)), tuple(range(1, n + 1)), 0)


def generator_e(n: int, i: int) -> Diagram:
    """``E_i``: a minimal arc joining ``i`` and ``i + 1`` (mod n) on both rows."""
    if not 1 <= i <= n:
        raise DiagramError(f"E_{i} out of range for n={n}")
    j = i % n + 1
    S = list(range(1, n + 1))
    S[i - 1], S[j - 1] = j, i
    S = make_annular(S)
    return Diagram(S, S, 0)


def generator_u(n: int, m: int = 1) -> Diagram:
    """``u^m``: every bottom node ``j`` joined to top node ``j + m``."""
    ident = tuple(range(1, n + 1))
    return Diagram(ident, ident, m)


def diagram_to_json(D: Diagram) -> dict:
    out = {"n": D.n, "kind": D.kind, "top": list(D.top), "bot": list(D.bot)}
    if D.t:
        out["w"] = D.w
    else:
        out["k"] = D.k
        out["top_gap"] = D.top_gap
        out["bot_gap"] = D.bot_gap
    return out


def diagram_from_json(obj: dict) -> Diagram:
    top = make_annular(obj["top"])
    bot = make_annular(obj["bot"])
    if len(top) != obj["n"] or len(bot) != obj["n"]:
        raise DiagramError("row length does not match n")
    if obj["kind"] == "strands":
        D = Diagram(top, bot, int(obj["w"]))
    elif obj["kind"] == "loops":
        D = Diagram(top, bot, 0, int(obj["k"]), int(obj.get("top_gap", 0)),
                    int(obj.get("bot_gap", 0)))
    else:
        raise DiagramError(f"unknown kind {obj['kind']!r}")
    if D.kind != obj["kind"]:
        raise DiagramError("kind does not match the involutions")
    return D


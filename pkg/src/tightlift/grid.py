"""Grid diagrams and the classical invariants of their Legendrian fronts.

An ``n x n`` grid is given by two permutations: ``x[c]`` and ``o[c]`` are
the rows of the X and O markers in column ``c`` (row 0 on top, column 0
on the left).  Each column carries a vertical segment oriented X -> O and
each row a horizontal segment oriented O -> X; at every crossing the
vertical segment passes over.

Rotating the grid 45 degrees clockwise gives a Legendrian front.  The
NW and SE corners become cusps, the NE and SW corners smooth out.  A cusp
is *up* when the strand moves towards the NE through it.
"""
from dataclasses import dataclass
import itertools
from fractions import Fraction

from .errors import InvalidGrid, ParseError, SameComponent, UnknownComponent
from .framedlink import FramedLinkPresentation

__all__ = ["GridDiagram", "writhe", "cusp_counts", "classical_invariants",
           "linking_number", "to_presentation", "parse_grid", "format_grid"]


@dataclass(frozen=True)
class GridDiagram:
    x: tuple
    o: tuple
    legendrian: bool = True

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        o = tuple(int(v) for v in self.o)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "o", o)
        n = len(x)
        if n == 0:
            raise InvalidGrid("empty grid")
        if len(o) != n:
            raise InvalidGrid(f"X has {n} entries but O has {len(o)}")
        for name, perm in (("X", x), ("O", o)):
            if sorted(perm) != list(range(n)):
                raise InvalidGrid(f"{name} markers {perm} are not a permutation of 0..{n - 1}")
        clash = [c for c in range(n) if x[c] == o[c]]
        if clash:
            raise InvalidGrid(f"X and O share a cell in column {clash[0]}")

    @property
    def n(self):
        return len(self.x)

    def x_col(self, row):
        return self.x.index(row)

    def o_col(self, row):
        return self.o.index(row)

    def components(self):
        """Columns visited by each component, ordered by smallest column."""
        seen, comps = set(), []
        for start in range(self.n):
            if start in seen:
                continue
            cyc, c = [], start
            while c not in seen:
                seen.add(c)
                cyc.append(c)
                c = self.x_col(self.o[c])
            comps.append(tuple(cyc))
        return comps

    def component_of_column(self):
        out = {}
        for k, cols in enumerate(self.components()):
            for c in cols:
                out[c] = k
        return out

    def crossings(self):
        """List of ``(column, row, sign)``; the column's segment is on top."""
        out = []
        for c in range(self.n):
            lo, hi = sorted((self.x[c], self.o[c]))
            vy = 1 if self.o[c] < self.x[c] else -1   # +1 when moving north
            for r in range(lo + 1, hi):
                a, b = self.o_col(r), self.x_col(r)
                if min(a, b) < c < max(a, b):
                    hx = 1 if b > a else -1
                    # sign of (over x under) with over = (0, vy), under = (hx, 0)
                    out.append((c, r, -vy * hx))
        return out

    def cyclic_shift(self, dc=0, dr=0):
        """Move the last ``dc`` columns to the front and shift rows down by ``dr``."""
        n = self.n
        x = [(self.x[(c - dc) % n] + dr) % n for c in range(n)]
        o = [(self.o[(c - dc) % n] + dr) % n for c in range(n)]
        return GridDiagram(x, o, self.legendrian)

    def reversed(self):
        """Same link with every component's orientation reversed."""
        return GridDiagram(self.o, self.x, self.legendrian)


def _check_component(g, comp):
    k = len(g.components())
    if not 0 <= comp < k:
        raise UnknownComponent(f"component {comp} does not exist ({k} components)")


def writhe(g, comp=None):
    """Signed crossing count; self-crossings of ``comp`` only when given."""
    if comp is None:
        return sum(s for _, _, s in g.crossings())
    _check_component(g, comp)
    owner = g.component_of_column()
    return sum(s for c, r, s in g.crossings()
               if owner[c] == comp and owner[g.o_col(r)] == comp)


def cusp_counts(g, comp):
    """``(up, down)`` cusp counts of one component of the front."""
    if not g.legendrian:
        raise InvalidGrid("grid is not flagged as Legendrian")
    _check_component(g, comp)
    up = down = 0
    for c in g.components()[comp]:
        for row, is_x in ((g.x[c], True), (g.o[c], False)):
            other = g.o[c] if is_x else g.x[c]
            south = other > row
            partner = g.o_col(row) if is_x else g.x_col(row)
            east = partner > c
            if south and east:          # NW corner
                # X: arrive moving west, leave south; O: arrive moving north
                if is_x:
                    down += 1
                else:
                    up += 1
            elif not south and not east:  # SE corner
                # X: arrive moving east, leave north; O: arrive moving south
                if is_x:
                    up += 1
                else:
                    down += 1
    return up, down


def classical_invariants(g, comp):
    """``(tb, rot)`` of one component of the Legendrian front."""
    up, down = cusp_counts(g, comp)
    tb = Fraction(writhe(g, comp)) - Fraction(up + down, 2)
    rot = Fraction(down - up, 2)
    assert tb.denominator == 1 and rot.denominator == 1
    return int(tb), int(rot)


def linking_number(g, a, b):
    _check_component(g, a)
    _check_component(g, b)
    if a == b:
        raise SameComponent(f"linking number of component {a} with itself")
    owner = g.component_of_column()
    total = sum(s for c, r, s in g.crossings()
                if {owner[c], owner[g.o_col(r)]} == {a, b})
    assert total % 2 == 0
    return total // 2


def to_presentation(g, mode="legendrian", framings=None):
    """Surgery presentation of the link of ``g``.

    ``legendrian`` mode uses framing ``tb - 1`` and records rotation
    numbers; ``explicit`` mode takes the framings from ``framings``.
    """
    k = len(g.components())
    if mode == "legendrian":
        inv = [classical_invariants(g, i) for i in range(k)]
        diag = [tb - 1 for tb, _ in inv]
        rot = tuple(r for _, r in inv)
    elif mode == "explicit":
        if framings is None or len(framings) != k:
            raise InvalidGrid(f"explicit mode needs {k} framings")
        diag = [int(f) for f in framings]
        rot = None
    else:
        raise ValueError(f"unknown mode {mode!r}")
    L = [[diag[i] if i == j else linking_number(g, i, j) for j in range(k)] for i in range(k)]
    return FramedLinkPresentation(L, rot)


def parse_grid(text):
    """Parse the grid file format.

    Non-comment lines: the size, the X rows by column, the O rows by
    column, ``legendrian: true|false`` and optionally ``framings: ...``.
    Anything from the first ``[section]`` line on is left to the caller.
    """
    lines = []
    for ln in text.splitlines():
        ln = ln.split("#", 1)[0].strip()
        if ln.startswith("["):
            break
        if ln:
            lines.append(ln)
    if len(lines) < 4:
        raise ParseError("grid file needs size, X row, O row and legendrian flag")
    try:
        n = int(lines[0])
        x = [int(v) for v in lines[1].replace(",", " ").split()]
        o = [int(v) for v in lines[2].replace(",", " ").split()]
    except ValueError as exc:
        raise ParseError(f"bad grid file: {exc}") from exc
    if len(x) != n or len(o) != n:
        raise ParseError(f"size {n} does not match marker rows of length {len(x)}, {len(o)}")
    key, _, flag = lines[3].partition(":")
    flag = flag.strip().lower()
    if key.strip().lower() != "legendrian" or flag not in ("true", "false"):
        raise ParseError(f"expected 'legendrian: true|false', got {lines[3]!r}")
    framings = None
    for extra in lines[4:]:
        key, _, val = extra.partition(":")
        if key.strip().lower() != "framings":
            raise ParseError(f"unexpected line {extra!r}")
        try:
            framings = [int(v) for v in val.replace(",", " ").split()]
        except ValueError as exc:
            raise ParseError(f"bad framings: {exc}") from exc
    return GridDiagram(x, o, flag == "true"), framings


def format_grid(g, framings=None):
    out = [str(g.n), " ".join(map(str, g.x)), " ".join(map(str, g.o)),
           f"legendrian: {'true' if g.legendrian else 'false'}"]
    if framings is not None:
        out.append("framings: " + " ".join(map(str, framings)))
    return "\n".join(out) + "\n"


def all_grids(n):
    """Every ``n x n`` grid (used for exhaustive checks; ``n <= 5`` is cheap)."""
    for x in itertools.permutations(range(n)):
        for o in itertools.permutations(range(n)):
            if all(a != b for a, b in zip(x, o)):
                yield GridDiagram(x, o)

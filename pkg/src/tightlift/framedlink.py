"""Framed-link surgery presentations, Spin bits and Kirby moves.

A presentation is the linking matrix ``L`` of a framed link in S^3
(framings on the diagonal), optional rotation numbers of the components
when the link is Legendrian and the framings are ``tb - 1``, and component
labels.  A Spin structure on the boundary 3-manifold is a vector of Z/2
bits, one per 2-handle: bit ``i`` is 1 exactly when the Spin structure
fails to extend over handle ``i``.  The bit vectors that occur are the
solutions ``c`` of ``L c = diag(L) (mod 2)``.

Moves never change the boundary 3-manifold:

* ``blow_up``   -- add a (+-1)-framed unknot.  The new handle may link the
  old ones; matrix-wise this is an isolated blow-up followed by handle
  slides, so the old block becomes ``L + sign * l l^T``.
* ``handle_slide`` -- slide handle ``i`` over handle ``j``; the bit of
  ``j`` flips when the bit of ``i`` is 1, the bit of ``i`` is kept.
* ``blow_down_isolated`` -- delete an unlinked (+-1)-framed component.
* ``contract`` -- general blow-down at the matrix level; bits are lost.

Rotation numbers are dropped by every move.  All indices are 0-based in
the Python API; the text syntax (``slide(1,2,+1)`` etc.) is 1-based.
"""
from dataclasses import dataclass, field, replace
from fractions import Fraction
import itertools
import re

from .errors import (InvalidPresentation, MoveError, NotCharacteristic, NotIsolated,
                     NotUnitFramed, ParityViolation, ParseError)
from .rational import sym_matrix

__all__ = [
    "FramedLinkPresentation", "spin_bits", "is_characteristic", "enumerate_spin",
    "blow_up", "handle_slide", "blow_down_isolated", "contract", "apply_script",
    "BlowUp", "HandleSlide", "BlowDownIsolated", "Contract", "parse_move",
    "parse_script", "format_script",
]


@dataclass(frozen=True)
class FramedLinkPresentation:
    L: tuple
    rot: tuple = None
    labels: tuple = None
    fillable: bool = True

    def __post_init__(self):
        L = sym_matrix(self.L)
        object.__setattr__(self, "L", L)
        n = len(L)
        labels = self.labels
        if labels is None:
            labels = tuple(f"K{i + 1}" for i in range(n))
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise InvalidPresentation(f"{len(labels)} labels for {n} components")
        object.__setattr__(self, "labels", labels)
        rot = self.rot
        if rot is None and n == 0:
            rot = ()
        if rot is not None:
            rot = tuple(int(r) for r in rot)
            if len(rot) != n:
                raise InvalidPresentation(f"{len(rot)} rotation numbers for {n} components")
            for i, r in enumerate(rot):
                if (r - L[i][i]) % 2:
                    raise ParityViolation(
                        f"component {labels[i]}: rot {r} and framing {L[i][i]} "
                        "have different parity (tb + rot must be odd)")
        object.__setattr__(self, "rot", rot)

    @property
    def n(self):
        return len(self.L)

    def framings(self):
        return tuple(self.L[i][i] for i in range(self.n))

    def without_rot(self):
        if self.rot is None or self.n == 0:
            return self
        return replace(self, rot=None)


def spin_bits(bits):
    return tuple(int(b) % 2 for b in bits)


def is_characteristic(L, bits):
    """Check ``sum_j L_ij bits_j = L_ii (mod 2)`` for every row ``i``."""
    if len(bits) != len(L):
        return False
    return all((sum(x * b for x, b in zip(row, bits)) - row[i]) % 2 == 0
               for i, row in enumerate(L))


def _check_spin(p, spin):
    if spin is None:
        return None
    spin = spin_bits(spin)
    if not is_characteristic(p.L, spin):
        raise NotCharacteristic(f"bits {spin} are not characteristic for L = {p.L}")
    return spin


def enumerate_spin(p):
    """All characteristic bit vectors of ``p``, in lexicographic order.

    Solves ``L c = diag(L)`` over Z/2 by row reduction; the solution set
    is an affine space of dimension ``nullity(L mod 2)``.
    """
    L = p.L if isinstance(p, FramedLinkPresentation) else sym_matrix(p)
    n = len(L)
    rows = [[x % 2 for x in row] + [row[i] % 2] for i, row in enumerate(L)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i][c]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    # diag(L) always lies in the column space of a symmetric matrix mod 2
    assert all(not row[n] for row in rows[r:]), "no characteristic vector"
    free = [c for c in range(n) if c not in pivots]
    out = []
    for choice in itertools.product((0, 1), repeat=len(free)):
        c = [0] * n
        for f, v in zip(free, choice):
            c[f] = v
        for i, pc in enumerate(pivots):
            c[pc] = (rows[i][n] + sum(rows[i][f] * c[f] for f in free)) % 2
        out.append(tuple(c))
    out.sort()
    assert out and all(is_characteristic(L, c) for c in out)
    return out


def _fresh_label(labels, stem="E"):
    k = 1
    while f"{stem}{k}" in labels:
        k += 1
    return f"{stem}{k}"


def blow_up(p, spin, sign, linking=None, label=None):
    """Add a ``sign``-framed unknot linking component ``i`` ``linking[i]`` times.

    The old block becomes ``L + sign * l l^T`` so that the boundary is
    unchanged.  The new bit is ``1 + l . spin (mod 2)``, which is 1 when
    the new handle is unlinked from the handles carrying bit 1 (the
    isolated blow-up), old bits are unchanged.  A ``+1`` blow-up clears
    the ``fillable`` flag.
    """
    if sign not in (1, -1):
        raise NotUnitFramed(f"blow-up sign must be +1 or -1, got {sign}")
    n = p.n
    l = tuple(int(x) for x in (linking if linking is not None else (0,) * n))
    if len(l) != n:
        raise InvalidPresentation(f"linking vector has {len(l)} entries, need {n}")
    spin = _check_spin(p, spin)
    rows = [[p.L[i][j] + sign * l[i] * l[j] for j in range(n)] + [l[i]] for i in range(n)]
    rows.append(list(l) + [sign])
    label = label or _fresh_label(p.labels)
    q = FramedLinkPresentation(rows, None, p.labels + (label,), p.fillable and sign == -1)
    if spin is None:
        return q, None
    new = (1 + sum(a * b for a, b in zip(l, spin))) % 2
    out = spin + (new,)
    assert is_characteristic(q.L, out)
    return q, out


def handle_slide(p, spin, i, j, sign=1):
    """Slide handle ``i`` over handle ``j`` (``F_i <- F_i + sign F_j``)."""
    n = p.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"slide({i}, {j}) out of range for {n} components")
    if i == j:
        raise InvalidPresentation("cannot slide a handle over itself")
    if sign not in (1, -1):
        raise InvalidPresentation(f"slide sign must be +1 or -1, got {sign}")
    spin = _check_spin(p, spin)
    L = [list(row) for row in p.L]
    new_ii = L[i][i] + L[j][j] + 2 * sign * L[i][j]
    for k in range(n):
        if k != i:
            L[i][k] = L[k][i] = p.L[i][k] + sign * p.L[j][k]
    L[i][i] = new_ii
    q = FramedLinkPresentation(L, None, p.labels, p.fillable)
    if spin is None:
        return q, None
    out = list(spin)
    out[j] ^= out[i]
    out = tuple(out)
    assert is_characteristic(q.L, out)
    return q, out


def blow_down_isolated(p, spin, k):
    """Delete component ``k``, which must be unlinked and (+-1)-framed."""
    n = p.n
    if not 0 <= k < n:
        raise IndexError(f"component {k} out of range for {n} components")
    if p.L[k][k] not in (1, -1):
        raise NotUnitFramed(f"component {p.labels[k]} has framing {p.L[k][k]}")
    if any(p.L[k][j] for j in range(n) if j != k):
        raise NotIsolated(f"component {p.labels[k]} links other components")
    spin = _check_spin(p, spin)
    keep = [i for i in range(n) if i != k]
    q = FramedLinkPresentation([[p.L[a][b] for b in keep] for a in keep], None,
                               tuple(p.labels[a] for a in keep),
                               p.fillable and p.L[k][k] == -1)
    if spin is None:
        return q, None
    # an isolated unit-framed component always carries bit 1
    assert spin[k] == 1
    return q, tuple(spin[a] for a in keep)


def contract(p, k):
    """Matrix-level blow-down of a (+-1)-framed component.

    ``L'_ij = L_ij - L_ik L_jk / L_kk`` on the remaining indices.  Spin
    bits are not tracked.
    """
    n = p.n
    if not 0 <= k < n:
        raise IndexError(f"component {k} out of range for {n} components")
    u = p.L[k][k]
    if u not in (1, -1):
        raise NotUnitFramed(f"component {p.labels[k]} has framing {u}")
    keep = [i for i in range(n) if i != k]
    # u = +-1 so dividing by u is multiplying by u
    rows = [[p.L[a][b] - p.L[a][k] * p.L[b][k] * u for b in keep] for a in keep]
    return FramedLinkPresentation(rows, None, tuple(p.labels[a] for a in keep),
                                  p.fillable and u == -1)


@dataclass(frozen=True)
class BlowUp:
    sign: int
    linking: tuple = field(default=())

    def apply(self, p, spin):
        return blow_up(p, spin, self.sign, self.linking or (0,) * p.n)

    def __str__(self):
        return f"blowup({self.sign:+d}; {','.join(str(x) for x in self.linking)})"


@dataclass(frozen=True)
class HandleSlide:
    i: int
    j: int
    sign: int = 1

    def apply(self, p, spin):
        return handle_slide(p, spin, self.i, self.j, self.sign)

    def __str__(self):
        return f"slide({self.i + 1},{self.j + 1},{self.sign:+d})"


@dataclass(frozen=True)
class BlowDownIsolated:
    k: int

    def apply(self, p, spin):
        return blow_down_isolated(p, spin, self.k)

    def __str__(self):
        return f"blowdown({self.k + 1})"


@dataclass(frozen=True)
class Contract:
    k: int

    def apply(self, p, spin):
        return contract(p, self.k), None

    def __str__(self):
        return f"contract({self.k + 1})"


def apply_script(p, spin, script):
    """Apply moves left to right; failures are wrapped in :class:`MoveError`."""
    spin = _check_spin(p, spin)
    for pos, move in enumerate(script):
        try:
            p, spin = move.apply(p, spin)
        except (IndexError, InvalidPresentation, NotCharacteristic, NotIsolated,
                NotUnitFramed) as exc:
            raise MoveError(pos, exc) from exc
    return p, spin


_MOVE_RE = re.compile(r"^\s*(blowup|slide|blowdown|contract)\s*\((.*)\)\s*$", re.I)


def _ints(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in re.split(r"[,\s]+", text) if x]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {text!r}") from exc


def parse_move(text):
    """Parse one move in the 1-based text syntax."""
    m = _MOVE_RE.match(text)
    if not m:
        raise ParseError(f"unrecognised move {text!r}")
    name, args = m.group(1).lower(), m.group(2)
    if name == "blowup":
        head, _, tail = args.partition(";")
        sign = _ints(head)
        if len(sign) != 1:
            raise ParseError(f"blowup needs a sign: {text!r}")
        return BlowUp(sign[0], tuple(_ints(tail)))
    vals = _ints(args)
    if name == "slide":
        if len(vals) not in (2, 3):
            raise ParseError(f"slide needs (i, j[, sign]): {text!r}")
        return HandleSlide(vals[0] - 1, vals[1] - 1, vals[2] if len(vals) == 3 else 1)
    if len(vals) != 1:
        raise ParseError(f"{name} needs one index: {text!r}")
    return (BlowDownIsolated if name == "blowdown" else Contract)(vals[0] - 1)


def parse_script(lines):
    """Parse moves from an iterable of lines (``;`` also separates moves)."""
    moves = []
    for line in lines:
        for piece in re.split(r";(?![^()]*\))", line):
            if piece.strip():
                moves.append(parse_move(piece))
    return moves


def format_script(script):
    return [str(m) for m in script]


def c_dot(L, a, b):
    """Bilinear pairing ``a^T L b`` (integers or Fractions)."""
    return sum((Fraction(x) * L[i][j] * y for i, x in enumerate(a) for j, y in enumerate(b)),
               Fraction(0))

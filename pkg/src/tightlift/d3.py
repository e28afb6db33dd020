"""The d3 invariant of Legendrian surgery and Spin^C bookkeeping.

For a Legendrian surgery presentation with linking matrix ``L`` (n
components) and rotation vector ``r``::

    d3 = (r^T L^{-1} r - 2 (n + 1) - 3 sigma(L)) / 4

The first Chern class of the Stein structure evaluates to ``r_i`` on the
i-th generator ``F_i`` of H_2 of the trace, so ``c^2 = r^T L^{-1} r``.

Spin^C structures on the boundary are compared in H^2(Y) = Z^n / L Z^n.
A :class:`SpinCClass` records a characteristic bit vector ``base`` (a
Spin structure) and the integer evaluations ``delta`` of the difference
between the class and the Spin^C structure induced by ``base``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingRotation, NotCharacteristic, ParityViolation, SingularMatrix
from .framedlink import is_characteristic, spin_bits
from .rational import det, integer_coset_equal, quadratic_form, signature

__all__ = ["SpinCClass", "c_squared", "d3_legendrian", "spinc_difference",
           "spinc_equal", "contact_class_degree", "rebase_shift"]


@dataclass(frozen=True)
class SpinCClass:
    base: tuple
    delta: tuple

    def __post_init__(self):
        object.__setattr__(self, "base", spin_bits(self.base))
        object.__setattr__(self, "delta", tuple(int(d) for d in self.delta))
        if len(self.base) != len(self.delta):
            raise ValueError("base and delta have different lengths")


def c_squared(v, p):
    """Rational square ``v^T L^{-1} v`` of the class evaluating to ``v`` on the ``F_i``."""
    return quadratic_form(p.L, v)


def d3_legendrian(p):
    if p.rot is None:
        raise MissingRotation("presentation carries no rotation numbers")
    if det(p.L) == 0:
        raise SingularMatrix("boundary is not a rational homology sphere")
    for i, r in enumerate(p.rot):
        if (r - p.L[i][i]) % 2:
            raise ParityViolation(f"rot and framing of component {i} have different parity")
    n = p.n
    val = (c_squared(p.rot, p) - 2 * (n + 1) - 3 * signature(p.L)) / 4
    assert (4 * det(p.L)) % val.denominator == 0
    return val


def spinc_difference(p, spin):
    """Evaluations ``(r_i + sum_{j: bit_j = 1} L_ij) / 2`` of the difference class."""
    if p.rot is None:
        raise MissingRotation("presentation carries no rotation numbers")
    spin = spin_bits(spin)
    if not is_characteristic(p.L, spin):
        raise NotCharacteristic(f"bits {spin} are not characteristic")
    delta = []
    for i in range(p.n):
        twice = p.rot[i] + sum(p.L[i][j] for j in range(p.n) if spin[j])
        if twice % 2:
            raise ParityViolation(f"half-integral evaluation on component {i}")
        delta.append(twice // 2)
    return SpinCClass(spin, tuple(delta))


def rebase_shift(L, a_bits, b_bits):
    """``(1/2) sum_{j in a xor b} L_ij``: moves a delta from base ``b`` to base ``a``.

    The Spin^C structures induced by the two Spin structures differ by
    this vector modulo ``L Z^n``; the sign is immaterial there.
    """
    n = len(L)
    flip = [j for j in range(n) if a_bits[j] != b_bits[j]]
    out = []
    for i in range(n):
        s = sum(L[i][j] for j in flip)
        assert s % 2 == 0, "both bases must be characteristic"
        out.append(s // 2)
    return tuple(out)


def spinc_equal(p, a, b):
    """Whether two classes over ``p`` are the same Spin^C structure."""
    for c in (a, b):
        if not is_characteristic(p.L, c.base):
            raise NotCharacteristic(f"base {c.base} is not characteristic")
    shift = rebase_shift(p.L, a.base, b.base)
    moved = [d + s for d, s in zip(b.delta, shift)]
    return integer_coset_equal(p.L, a.delta, moved)


def contact_class_degree(d3):
    return Fraction(d3) + Fraction(1, 2)

"""Graded modules over H*(BZ/p; Z/p) and representation spheres.

For p = 2 the coefficient ring is (Z/2)[u] with |u| = 1; for odd p it is
(Z/p)[u, v]/(v^2) with |u| = 2 and |v| = 1.  Either way it is a copy of
Z/p in every non-negative degree, and inverting u makes it a copy of Z/p
in every integer degree.

The reduced equivariant cohomology of the one-point compactification of
a representation V is free of rank one on a Thom class in degree dim V.
The inclusion of the fixed sphere (V^G)^+ -> V^+ induces multiplication
by the Euler class of the free part, which is a unit multiple of a power
of u, so it becomes an isomorphism once u is inverted.
"""
from dataclasses import dataclass, replace
from math import isqrt

from .errors import InvalidRepresentation, InvalidRing

__all__ = ["CoefficientRing", "RepresentationDatum", "FreeGradedModule",
           "cohomology_of_rep_sphere", "restriction_rank_table", "localize",
           "euler_class", "euler_class_is_zero", "format_tables"]


def _is_prime(p):
    return p >= 2 and all(p % k for k in range(2, isqrt(p) + 1))


@dataclass(frozen=True)
class CoefficientRing:
    p: int

    def __post_init__(self):
        if not _is_prime(int(self.p)):
            raise InvalidRing(f"{self.p} is not prime")

    def monomial(self, d):
        """Name of the basis element in degree ``d`` of the u-localized ring."""
        if self.p == 2:
            return "1" if d == 0 else f"u^{d}" if d != 1 else "u"
        k, odd = divmod(d, 2)
        base = "1" if k == 0 else ("u" if k == 1 else f"u^{k}")
        if odd:
            return "v" if k == 0 else f"{base}v"
        return base


@dataclass(frozen=True)
class RepresentationDatum:
    total_dim: int
    fixed_dim: int

    def __post_init__(self):
        if not 0 <= self.fixed_dim <= self.total_dim:
            raise InvalidRepresentation("need 0 <= fixed_dim <= total_dim")

    @property
    def free_dim(self):
        return self.total_dim - self.fixed_dim

    def check(self, ring):
        if ring.p != 2 and self.free_dim % 2:
            raise InvalidRepresentation(
                "for odd p the non-trivial part is complex, so of even dimension")
        return self

    def __add__(self, other):
        return RepresentationDatum(self.total_dim + other.total_dim,
                                   self.fixed_dim + other.fixed_dim)


@dataclass(frozen=True)
class FreeGradedModule:
    ring: CoefficientRing
    generator_degrees: tuple
    localized: bool = False

    def rank(self, d):
        """Dimension over Z/p of the degree-``d`` part."""
        if self.localized:
            return len(self.generator_degrees)
        return sum(1 for g in self.generator_degrees if d >= g)

    def label(self, d):
        parts = []
        for g in self.generator_degrees:
            if self.localized or d >= g:
                parts.append(f"<{self.ring.monomial(d - g)}>")
        return " ".join(parts) or "0"


def cohomology_of_rep_sphere(ring, rep, use_fixed=False):
    rep.check(ring)
    return FreeGradedModule(ring, (rep.fixed_dim if use_fixed else rep.total_dim,))


def localize(module):
    return replace(module, localized=True)


def euler_class(ring, dim, weights=None):
    """Euler class of a fixed-point-free representation of dimension ``dim``.

    Returned as ``(coefficient mod p, power of u)``.  For odd p the
    representation splits into complex lines with characters ``weights``
    (all prime to p), each contributing ``k u``; for p = 2 each real sign
    line contributes ``u``.
    """
    p = ring.p
    if p == 2:
        return 1, dim
    if dim % 2:
        raise InvalidRepresentation(
            "for odd p a fixed-point-free representation has even dimension")
    weights = list(weights) if weights is not None else [1] * (dim // 2)
    if len(weights) != dim // 2 or any(k % p == 0 for k in weights):
        raise InvalidRepresentation("need dim/2 characters, each prime to p")
    coeff = 1
    for k in weights:
        coeff = coeff * k % p
    return coeff, dim // 2


def euler_class_is_zero(ring, dim, weights=None):
    coeff, _ = euler_class(ring, dim, weights)
    # u^k is non-zero in every degree of the ring
    return coeff % ring.p == 0


def restriction_rank_table(ring, rep, degrees, localized=False):
    """Kind of the restriction map in each degree.

    ``"iso"``: both groups non-zero; ``"0"``: zero map into a non-zero
    group; ``"onto"``: non-zero source, zero target; ``"none"``: both
    groups vanish.
    """
    src = cohomology_of_rep_sphere(ring, rep)
    dst = cohomology_of_rep_sphere(ring, rep, use_fixed=True)
    if localized:
        src, dst = localize(src), localize(dst)
    coeff, _ = euler_class(ring, rep.free_dim)
    table = []
    for d in degrees:
        a, b = src.rank(d), dst.rank(d)
        if a and b:
            # multiplication by a unit times a power of u
            kind = "iso" if coeff % ring.p else "0"
        elif b:
            kind = "0"
        elif a:
            kind = "onto"
        else:
            kind = "none"
        table.append((d, kind))
    return table


def format_tables(ring, rep, degrees):
    """Before/after localization diagrams as lines of text."""
    out = []
    for loc in (False, True):
        src = cohomology_of_rep_sphere(ring, rep)
        dst = cohomology_of_rep_sphere(ring, rep, use_fixed=True)
        if loc:
            src, dst = localize(src), localize(dst)
        table = dict(restriction_rank_table(ring, rep, degrees, loc))
        out.append("localized:" if loc else "before localization:")
        out.append("  degree  " + " ".join(f"{d:>8}" for d in degrees))
        out.append("  V+      " + " ".join(f"{src.label(d):>8}" for d in degrees))
        out.append("  map     " + " ".join(f"{table[d]:>8}" for d in degrees))
        out.append("  (V^G)+  " + " ".join(f"{dst.label(d):>8}" for d in degrees))
    return out

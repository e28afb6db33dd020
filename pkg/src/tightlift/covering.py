"""Cyclic branched covers of surgery presentations.

A scene pairs a downstairs presentation of the quotient 4-manifold with a
user-supplied upstairs presentation of its m-fold cyclic branched cover,
together with a correspondence between components: a *branch* component
(its co-core disk meets the branch surface) has one equivariant lift, a
*free* component has ``m`` lifts.

The d3 lift is the G-signature formula for a plane field that is the
pull-back of one with an almost complex filling::

    d3_up = m d3 + 3/4 m sigma_down - 3/4 sigma_up
            - 3/4 (S.S) sum_{k=1}^{m-1} csc^2(pi k / m)

and the trigonometric sum equals ``(m^2 - 1) / 3``.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import math

from .d3 import SpinCClass, contact_class_degree, spinc_equal
from .errors import InvalidScene, NotCharacteristicUpstairs, NotDivisible
from .framedlink import FramedLinkPresentation, is_characteristic, spin_bits
from .rational import det, signature

__all__ = ["CoveringScene", "Verdict", "Propagation", "TightnessVerdict",
           "lift_branch_framing", "cosecant_sum", "cosecant_sum_float", "d3_lift",
           "spin_lift", "verdict_elliptic", "verdict_minimal_L", "degree_propagation"]


def lift_branch_framing(n, m):
    """Framing of the equivariant lift of an ``n``-framed branch handle."""
    if m < 1:
        raise InvalidScene(f"multiplicity must be positive, got {m}")
    if n % m:
        raise NotDivisible(f"branch framing {n} is not divisible by m = {m}")
    return n // m


def cosecant_sum(m):
    """Exact value of ``sum_{k=1}^{m-1} csc^2(pi k / m)``."""
    if m < 1:
        raise ValueError("multiplicity must be positive")
    return Fraction(m * m - 1, 3)


def cosecant_sum_float(m):
    return math.fsum(1.0 / math.sin(math.pi * k / m) ** 2 for k in range(1, m))


@dataclass(frozen=True)
class CoveringScene:
    """A downstairs/upstairs pair of presentations.

    Parameters
    ----------
    m : int
        Covering multiplicity.
    downstairs, upstairs : FramedLinkPresentation
    branch : tuple of int
        Downstairs components meeting the branch surface (0-based).
    correspondence : dict
        Downstairs index -> tuple of upstairs indices.  Defaults to the
        identity when ``m == 1``.
    s_dot_s : int, optional
        Self-intersection of the branch surface.  Defaults to the sum of
        the upstairs linking matrix over the branch lifts.
    sigma_up, sigma_down : int, optional
        Signatures; computed from the matrices when omitted.
    h1_order_up : int, optional
        Expected ``|H_1|`` of the cover, checked against ``|det|``.
    """
    m: int
    downstairs: FramedLinkPresentation
    upstairs: FramedLinkPresentation
    branch: tuple = ()
    correspondence: dict = None
    s_dot_s: int = None
    sigma_up: int = None
    sigma_down: int = None
    h1_order_up: int = None

    def __post_init__(self):
        m = int(self.m)
        if m < 1:
            raise InvalidScene(f"multiplicity must be positive, got {m}")
        down, up = self.downstairs, self.upstairs
        branch = tuple(sorted(set(int(b) for b in self.branch)))
        for b in branch:
            if not 0 <= b < down.n:
                raise InvalidScene(f"branch component {b + 1} does not exist downstairs")
            lift_branch_framing(down.L[b][b], m)
        corr = self.correspondence
        if corr is None:
            if m != 1 or down.n != up.n:
                raise InvalidScene("a component correspondence is required")
            corr = {i: (i,) for i in range(down.n)}
        corr = {int(k): tuple(int(x) for x in v) for k, v in corr.items()}
        if sorted(corr) != list(range(down.n)):
            raise InvalidScene("correspondence must list every downstairs component")
        used = sorted(x for v in corr.values() for x in v)
        if used != list(range(up.n)):
            raise InvalidScene("correspondence must use every upstairs component exactly once")
        for i, lifts in corr.items():
            want = 1 if i in branch else m
            if len(lifts) != want:
                raise InvalidScene(f"component {i + 1} needs {want} lifts, got {len(lifts)}")
            if i in branch:
                j = lifts[0]
                expect = lift_branch_framing(down.L[i][i], m)
                if up.L[j][j] != expect:
                    raise InvalidScene(f"lift of branch component {i + 1} should be "
                                       f"{expect}-framed, found {up.L[j][j]}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "branch", branch)
        object.__setattr__(self, "correspondence", corr)
        if self.s_dot_s is None:
            lifts = [corr[b][0] for b in branch]
            object.__setattr__(self, "s_dot_s",
                               sum(up.L[a][b] for a in lifts for b in lifts))
        if self.sigma_up is None:
            object.__setattr__(self, "sigma_up", signature(up.L))
        if self.sigma_down is None:
            object.__setattr__(self, "sigma_down", signature(down.L))
        if self.h1_order_up is not None and abs(det(up.L)) != self.h1_order_up:
            raise InvalidScene(f"|det| of the upstairs matrix is {abs(det(up.L))}, "
                               f"expected {self.h1_order_up}")


def d3_lift(d3_down, scene):
    m = scene.m
    q = Fraction(3, 4)
    return (m * Fraction(d3_down) + q * m * scene.sigma_down - q * scene.sigma_up
            - q * scene.s_dot_s * cosecant_sum(m))


def spin_lift(scene, spin_down):
    """Lift downstairs Spin bits to the cover.

    Free components copy their bit to every lift.  A branch component
    with bit 1 lifts to bit 1; with bit 0 it lifts to 1 exactly when m is
    even.
    """
    spin_down = spin_bits(spin_down)
    if len(spin_down) != scene.downstairs.n:
        raise InvalidScene("spin vector does not match the downstairs presentation")
    out = [None] * scene.upstairs.n
    for i, lifts in scene.correspondence.items():
        bit = spin_down[i]
        if i in scene.branch:
            bit = 1 if bit else (1 if scene.m % 2 == 0 else 0)
        for j in lifts:
            out[j] = bit
    out = tuple(out)
    if not is_characteristic(scene.upstairs.L, out):
        raise NotCharacteristicUpstairs(
            f"lifted bits {out} are not characteristic for the upstairs matrix")
    return out


class Verdict(str, Enum):
    TIGHT = "Tight"
    OVERTWISTED = "Overtwisted"
    INCONCLUSIVE = "Inconclusive"


class Propagation(str, Enum):
    UP_NONVANISHING_FORCED = "UpNonvanishingForced"
    DOWNSTAIRS_VANISHES = "DownstairsVanishes"
    NO_CONCLUSION = "NoConclusion"


@dataclass(frozen=True)
class TightnessVerdict:
    verdict: Verdict
    matched: str = None
    reasons: list = field(default_factory=list)

    def __str__(self):
        if self.matched is not None:
            return f"{self.verdict.value} (matched: {self.matched})"
        return self.verdict.value


def verdict_elliptic(d3_up, spinc_up, known_tight, presentation=None, complete=True):
    """Compare against a list of ``(label, d3, SpinCClass)`` tight structures.

    On a manifold whose tight structures are classified by their
    homotopy class, a match in both d3 and Spin^C means tight; with a
    complete list, no match means overtwisted.
    """
    d3_up = Fraction(d3_up)
    for label, d3, spinc in known_tight:
        if Fraction(d3) != d3_up:
            continue
        if spinc_up is None or spinc is None:
            same = True
        elif presentation is None:
            same = spinc.base == spinc_up.base and spinc.delta == spinc_up.delta
        else:
            same = spinc_equal(presentation, spinc, spinc_up)
        if same:
            return TightnessVerdict(Verdict.TIGHT, label, [
                "homotopic to a known tight structure on a manifold where "
                "homotopy determines isotopy of tight structures"])
    if complete and known_tight:
        return TightnessVerdict(Verdict.OVERTWISTED, None, [
            "no tight structure on the list has the same d3 and Spin^C class"])
    return TightnessVerdict(Verdict.INCONCLUSIVE, None, ["classification list incomplete"])


def verdict_minimal_L(d3_up, d_invariant):
    """Tight iff the contact class sits at the bottom of the tower, ``d3 + 1/2 = d``."""
    deg = contact_class_degree(d3_up)
    if deg == Fraction(d_invariant):
        return TightnessVerdict(Verdict.TIGHT, None, [
            f"deg psi = {deg} equals the supplied d invariant"])
    return TightnessVerdict(Verdict.OVERTWISTED, None, [
        f"deg psi = {deg} differs from the supplied d invariant {Fraction(d_invariant)}"])


def degree_propagation(deg_up, minus_two_h):
    deg_up, bound = Fraction(deg_up), Fraction(minus_two_h)
    if deg_up == bound:
        return Propagation.UP_NONVANISHING_FORCED
    if deg_up < bound:
        return Propagation.DOWNSTAIRS_VANISHES
    return Propagation.NO_CONCLUSION

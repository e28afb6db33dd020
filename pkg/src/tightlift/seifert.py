"""Seifert invariants, torus-knot surgeries and lens-space recognition.

Seifert data are unnormalized: a genus and a list of pairs ``(alpha,
beta)``.  The Euler number is ``e = -sum beta/alpha``.  An integral pair
``(1, b)`` is the central weight of the star-shaped plumbing and a pair
``(alpha, beta)`` with ``alpha > 1`` is an arm given by the negative
continued fraction of ``-alpha/beta``.

Lens spaces follow the convention that ``L(p, q)`` is ``-p/q`` surgery on
the unknot, i.e. the boundary of the linear plumbing whose weights are
the negative continued fraction of ``-p/q``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .errors import (BadLocalDegree, CableCase, NegativeGenus, NotCoprime, NotQHS,
                     OutOfRange, TooManyFibers, ZeroEuler)
from .framedlink import FramedLinkPresentation, contract

__all__ = ["SeifertData", "LensSpace", "euler_number", "h1_order", "normalize",
           "moser_surgery", "horizontal_cyclic_cover", "neg_cont_frac", "eval_cont_frac",
           "lens_from_chain", "lens_from_two_fiber_seifert"]


@dataclass(frozen=True)
class SeifertData:
    genus: int
    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        if self.genus < 0:
            raise NegativeGenus(f"genus {self.genus}")
        for a, b in pairs:
            if a < 1:
                raise OutOfRange(f"multiplicity must be positive in {(a, b)}")
            if a > 1 and gcd(a, b) != 1:
                raise NotCoprime(f"pair {(a, b)} is not coprime")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "genus", int(self.genus))

    def __str__(self):
        base = "S2" if self.genus == 0 else f"F{self.genus}"
        return f"({base}; " + ", ".join(f"({a},{b})" for a, b in self.pairs) + ")"


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 1:
            raise OutOfRange(f"lens space order must be positive, got {p}")
        q %= p
        if gcd(p, q) != 1:
            raise NotCoprime(f"L({p}, {q}) needs coprime parameters")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def equivalent(self, other):
        """Orientation-preserving homeomorphism: ``q' = q^{+-1} mod p``."""
        if self.p != other.p:
            return False
        if self.p == 1:
            return True
        return other.q in (self.q, pow(self.q, -1, self.p))

    def mirror(self):
        return LensSpace(self.p, -self.q)

    def __str__(self):
        return f"L({self.p},{self.q})"


def euler_number(s):
    return -sum((Fraction(b, a) for a, b in s.pairs), Fraction(0))


def h1_order(s):
    if s.genus != 0:
        raise NotQHS("only genus-0 bases give rational homology spheres here")
    e = euler_number(s)
    if e == 0:
        raise ZeroEuler("Euler number vanishes")
    val = abs(e) * prod(a for a, _ in s.pairs)
    assert val.denominator == 1
    return int(val)


def normalize(s):
    """One pair ``(1, b)`` followed by ``0 < beta < alpha`` pairs, largest first."""
    b = 0
    rest = []
    for a, beta in s.pairs:
        q, r = divmod(beta, a)
        b += q
        if r:
            rest.append((a, r))
    rest.sort(reverse=True)
    out = SeifertData(s.genus, ((1, b),) + tuple(rest))
    assert euler_number(out) == euler_number(s)
    return out


def moser_surgery(r, s, p, q=1):
    """Seifert data of ``p/q`` surgery on the ``(r, s)`` torus knot.

    The exterior of T(r, s) is fibred with exceptional fibres of orders
    ``|r|`` and ``|s|``; the surgery slope meets the regular fibre
    ``|p - q r s|`` times, which becomes the third multiplicity.
    """
    r, s, p, q = int(r), int(s), int(p), int(q)
    if gcd(r, s) != 1:
        raise NotCoprime(f"torus knot parameters ({r}, {s}) are not coprime")
    if abs(r) < 2 or abs(s) < 2:
        raise OutOfRange("torus knot parameters must satisfy |r|, |s| >= 2")
    if q == 0 or gcd(p, q) != 1:
        raise NotCoprime(f"surgery slope {p}/{q} is not a reduced fraction")
    if q < 0:
        p, q = -p, -q
    e = p - q * r * s
    if e == 0:
        raise CableCase(f"slope {p}/{q} is the cabling slope rs = {r * s}")
    eps = 1 if r * s > 0 else -1
    a1, a2 = abs(r), abs(s)
    b1 = (-eps * pow(a2, -1, a1)) % a1
    b2 = (-eps * pow(a1, -1, a2)) % a2
    b0 = Fraction(-eps - b1 * a2 - b2 * a1, a1 * a2)
    assert b0.denominator == 1
    sg = 1 if e > 0 else -1
    out = normalize(SeifertData(0, ((1, int(b0)), (a1, b1), (a2, b2), (abs(e), -q * sg))))
    assert h1_order(out) == abs(p)
    return out


def horizontal_cyclic_cover(s, n, local_degrees):
    """n-fold cyclic cover that maps fibres to fibres.

    Above a fibre of multiplicity ``alpha`` with local branching degree
    ``d`` sit ``n/d`` fibres of multiplicity ``alpha/d`` with the same
    ``beta``; the Euler number is multiplied by ``n``.
    """
    if s.genus != 0:
        raise BadLocalDegree("only covers of genus-0 data are supported")
    n = int(n)
    if n < 1:
        raise BadLocalDegree(f"cover degree must be positive, got {n}")
    if len(local_degrees) != len(s.pairs):
        raise BadLocalDegree(f"{len(local_degrees)} local degrees for {len(s.pairs)} fibres")
    pairs = []
    ramification = 0
    for (a, b), d in zip(s.pairs, local_degrees):
        d = int(d)
        if d < 1 or gcd(n, a) % d:
            raise BadLocalDegree(f"local degree {d} does not divide gcd({n}, {a})")
        pairs.extend([(a // d, b)] * (n // d))
        ramification += (n // d) * (d - 1)
    chi = 2 * n - ramification
    if chi % 2 or chi > 2:
        raise NegativeGenus(f"Riemann-Hurwitz gives Euler characteristic {chi}")
    out = SeifertData((2 - chi) // 2, pairs)
    assert euler_number(out) == n * euler_number(s)
    return out


def neg_cont_frac(x):
    """``[a1, ..., ak]`` with ``a_i <= -2`` and ``a1 - 1/(a2 - 1/(...)) = x``."""
    x = Fraction(x)
    if x >= -1:
        raise OutOfRange(f"{x} is not below -1")
    out = []
    while True:
        a = x.numerator // x.denominator
        out.append(a)
        rem = x - a
        if rem == 0:
            return out
        x = -1 / rem


def eval_cont_frac(chain):
    """Value of ``a1 - 1/(a2 - ...)``; ``None`` stands for infinity."""
    num, den = 1, 0
    for a in reversed(chain):
        num, den = a * num - den, num
    if den == 0:
        return None
    return Fraction(num, den)


def _lens_from_value(x):
    # x/1 surgery on the unknot; L(p, q) is -p/q surgery
    if x is None:
        return LensSpace(1, 0)
    if x == 0:
        raise NotQHS("the chain describes S1 x S2")
    return LensSpace(abs(x.numerator), -x.denominator if x > 0 else x.denominator)


def lens_from_chain(framings):
    framings = [int(a) for a in framings]
    if not framings or any(a > -2 for a in framings):
        raise OutOfRange(f"chain {framings} has a weight above -2")
    x = eval_cont_frac(framings)
    return LensSpace(-x.numerator, x.denominator)


def _chain_matrix(chain):
    k = len(chain)
    return [[chain[i] if i == j else (1 if abs(i - j) == 1 else 0) for j in range(k)]
            for i in range(k)]


def _reduce_chain(chain):
    chain = list(chain)
    while True:
        zero = next((i for i, a in enumerate(chain) if a == 0), None)
        if zero is not None:
            if len(chain) == 1:
                raise NotQHS("the chain describes S1 x S2")
            if zero in (0, len(chain) - 1):
                # a 0-framed end cancels its neighbour
                chain = chain[2:] if zero == 0 else chain[:-2]
            else:
                chain = chain[:zero - 1] + [chain[zero - 1] + chain[zero + 1]] + chain[zero + 2:]
            continue
        unit = next((i for i, a in enumerate(chain) if a in (1, -1)), None)
        if unit is None:
            return chain
        p = contract(FramedLinkPresentation(_chain_matrix(chain)), unit)
        k = p.n
        assert all(p.L[i][j] == 0 for i in range(k) for j in range(k) if abs(i - j) > 1)
        chain = [p.L[i][i] for i in range(k)]


def lens_from_two_fiber_seifert(s):
    s = normalize(s)
    if s.genus != 0:
        raise TooManyFibers("base of positive genus")
    (_, b), arms = s.pairs[0], s.pairs[1:]
    if len(arms) > 2:
        raise TooManyFibers(f"{len(arms)} exceptional fibres")
    if euler_number(s) == 0:
        raise NotQHS("Euler number vanishes")
    left = neg_cont_frac(Fraction(-arms[0][0], arms[0][1])) if arms else []
    right = neg_cont_frac(Fraction(-arms[1][0], arms[1][1])) if len(arms) > 1 else []
    chain = left[::-1] + [b] + right
    direct = _lens_from_value(eval_cont_frac(chain))
    reduced = _reduce_chain(chain)
    if not reduced:
        out = LensSpace(1, 0)
    elif all(a <= -2 for a in reduced):
        out = lens_from_chain(reduced)
    elif all(a >= 2 for a in reduced):
        out = lens_from_chain([-a for a in reduced]).mirror()
    else:
        out = _lens_from_value(eval_cont_frac(reduced))
    assert out.equivalent(direct)
    (a1, b1), (a2, b2) = (list(arms) + [(1, 0), (1, 0)])[:2]
    assert out.p == abs(a1 * b2 + a2 * b1 + a1 * a2 * b)
    return out

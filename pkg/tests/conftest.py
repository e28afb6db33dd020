"""Shared fixtures, strategies and independent oracles."""
import itertools
import time
from pathlib import Path

import pytest
import sympy
from hypothesis import strategies as st

from tightlift.framedlink import FramedLinkPresentation
from tightlift.grid import parse_grid

DATA = Path(__file__).resolve().parents[1] / "src" / "tightlift" / "data"

CHAIN = ((-2, 1, 0), (1, -4, 1), (0, 1, -2))
UPSTAIRS = ((-4, 0, 0), (0, 1, -2), (0, -2, 1))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def left_trefoil():
    g, _ = parse_grid((DATA / "left_trefoil.grid").read_text())
    return g


def sympy_signature(m):
    """Signature from the characteristic polynomial by Descartes' rule.

    All roots are real, so sign changes of p(x) count positive roots and
    sign changes of p(-x) count negative roots.
    """
    n = len(m)
    if n == 0:
        return 0
    x = sympy.Symbol("x")
    poly = sympy.Matrix(m).charpoly(x)

    def changes(coeffs):
        signs = [c > 0 for c in coeffs if c != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    pos = changes(poly.all_coeffs())
    neg = changes(sympy.Poly(poly.as_expr().subs(x, -x), x).all_coeffs())
    return pos - neg


def brute_in_lattice(m, v, bound=12):
    """Whether ``v = m x`` for an integer ``x`` with entries in ``[-bound, bound]``."""
    n = len(m)
    for x in itertools.product(range(-bound, bound + 1), repeat=n):
        if all(sum(m[i][j] * x[j] for j in range(n)) == v[i] for i in range(n)):
            return True
    return False


def knot_determinant(g, det=None):
    """``|Delta(-1)|`` from the grid's winding-number matrix.

    ``det (t^{w(i,j)})`` over the lattice points equals
    ``+-t^a (1 - t)^{n-1} Delta(t)``, so at ``t = -1`` it is
    ``+-2^{n-1} Delta(-1)``.
    """
    n = g.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            w = 0
            for c in range(i, n):
                lo, hi = sorted((g.x[c], g.o[c]))
                if lo < j <= hi:
                    w += 1 if g.o[c] < g.x[c] else -1
            row.append((-1) ** (w % 2))
        rows.append(row)
    d = abs(det(rows) if det else sympy.Matrix(rows).det())
    assert d % 2 ** (n - 1) == 0
    return int(d // 2 ** (n - 1))


@st.composite
def sym_matrices(draw, max_n=5, bound=5, min_n=1):
    n = draw(st.integers(min_n, max_n))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(st.integers(-bound, bound))
    return tuple(map(tuple, m))


@st.composite
def presentations_with_spin(draw, max_n=5, bound=5):
    from tightlift.framedlink import enumerate_spin
    L = draw(sym_matrices(max_n=max_n, bound=bound))
    p = FramedLinkPresentation(L)
    spin = draw(st.sampled_from(enumerate_spin(p)))
    return p, spin


@st.composite
def legendrian_presentations(draw, max_n=4, bound=5):
    """Presentations with rotation numbers of the right parity."""
    L = draw(sym_matrices(max_n=max_n, bound=bound))
    rot = [2 * draw(st.integers(-2, 2)) + (L[i][i] % 2) for i in range(len(L))]
    return FramedLinkPresentation(L, rot)


_SUITE_LIMIT = 30.0


def pytest_sessionstart(session):
    session.config._tightlift_t0 = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - session.config._tightlift_t0
    session.config._tightlift_elapsed = elapsed
    if elapsed >= _SUITE_LIMIT and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = getattr(config, "_tightlift_elapsed", None)
    if elapsed is None:
        return
    verdict = "PASS" if elapsed < _SUITE_LIMIT else "FAIL"
    terminalreporter.write_line(
        f"{verdict} criterion 13: whole suite in {elapsed:.1f} s (limit {_SUITE_LIMIT:.0f} s)")

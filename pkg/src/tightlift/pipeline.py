"""Scene evaluation behind the command-line front-end.

Each ``*_report`` function returns an ordered dict of plain values
(ints, strings, Fractions, lists and dicts of those).  Errors raised
while a stage runs carry a ``stage`` attribute naming it.
"""
import re
from contextlib import contextmanager
from pathlib import Path

from . import grid as gridmod
from .covering import (CoveringScene, cosecant_sum, d3_lift, degree_propagation,
                       spin_lift, verdict_elliptic, verdict_minimal_L)
from .d3 import (SpinCClass, contact_class_degree, d3_legendrian, spinc_difference,
                 spinc_equal)
from .errors import InvalidScene, ParseError
from .framedlink import FramedLinkPresentation, apply_script, enumerate_spin, format_script
from .localization import (CoefficientRing, RepresentationDatum, format_tables,
                           restriction_rank_table)
from .rational import det, integer_coset_equal
from .seifert import (SeifertData, euler_number, h1_order, horizontal_cyclic_cover,
                      lens_from_two_fiber_seifert, moser_surgery, normalize)
from .textio import (parse_bool, parse_correspondence, parse_int_list, parse_rational,
                     parse_sections, presentation_from, script_from)

DATA_DIR = Path(__file__).parent / "data"


@contextmanager
def stage(name):
    try:
        yield
    except Exception as exc:
        if not hasattr(exc, "stage"):
            exc.stage = name
        raise


def resolve(path, base=None):
    """Find ``path`` as given, next to ``base``, or among the shipped data files."""
    p = Path(path)
    for cand in (p, (Path(base) / p) if base else None, DATA_DIR / p):
        if cand is not None and cand.is_file():
            return cand
    raise ParseError(f"file not found: {path}")


def read(path, base=None):
    p = resolve(path, base)
    return p.read_text(), p.parent


def _bits(bits):
    return "".join(str(b) for b in bits)


def _matrix(L):
    return [list(row) for row in L]


def _one_or_list(vals):
    return vals[0] if len(vals) == 1 else list(vals)


def expected_block(sections):
    return {k: e.text() for k, e in sections.get("expected", {}).items()}


# ----------------------------------------------------------------- grid
def grid_report(path):
    text, _ = read(path)
    # an optional [expected] block may follow the grid itself
    m = re.search(r"(?m)^\[expected\]\s*$", text)
    grid_text, tail = (text[:m.start()], text[m.start():]) if m else (text, "")
    g, framings = gridmod.parse_grid(grid_text)
    k = len(g.components())
    rep = {"size": g.n, "components": k,
           "writhe": [gridmod.writhe(g, i) for i in range(k)]}
    if g.legendrian:
        inv = [gridmod.classical_invariants(g, i) for i in range(k)]
        rep["cusps"] = [list(gridmod.cusp_counts(g, i)) for i in range(k)]
        rep["tb"] = _one_or_list([tb for tb, _ in inv])
        rep["rot"] = _one_or_list([r for _, r in inv])
        p = gridmod.to_presentation(g, "legendrian")
    else:
        p = gridmod.to_presentation(g, "explicit", framings)
    rep["L"] = _matrix(p.L)
    if p.rot is not None:
        rep["surgery_rot"] = list(p.rot)
    return rep, expected_block(parse_sections(tail))


# ------------------------------------------------------- presentations
def _presentation_file(path):
    text, _ = read(path)
    secs = parse_sections(text)
    top = secs[""]
    return presentation_from(top), top, secs


def d3_report(path):
    p, top, secs = _presentation_file(path)
    rep = {"L": _matrix(p.L)}
    d3 = d3_legendrian(p)
    rep["d3"] = d3
    rep["deg_psi"] = contact_class_degree(d3)
    spins = enumerate_spin(p)
    rep["spin_count"] = len(spins)
    if "spin" in top:
        chosen = [tuple(parse_int_list(top["spin"].text()))]
    else:
        chosen = spins
    rep["spinc_delta"] = {_bits(s): list(spinc_difference(p, s).delta) for s in chosen}
    return rep, expected_block(secs)


def spin_report(path):
    p, top, secs = _presentation_file(path)
    spins = enumerate_spin(p)
    rep = {"L": _matrix(p.L), "spin_count": len(spins),
           "spin_structures": [_bits(s) for s in spins]}
    script = script_from(top.get("script"))
    if script:
        rep["script"] = format_script(script)
        start = [tuple(parse_int_list(top["spin"].text()))] if "spin" in top else spins
        results = {}
        final = p
        for s in start:
            final, out = apply_script(p, s, script)
            results[_bits(s)] = _bits(out)
        rep["result_L"] = _matrix(final.L)
        rep["result_spin"] = results
    return rep, expected_block(secs)


# -------------------------------------------------------------- seifert
def seifert_report(path):
    text, _ = read(path)
    secs = parse_sections(text)
    top = secs[""]
    if "moser" in top:
        args = parse_int_list(top["moser"].text())
        if len(args) not in (3, 4):
            raise ParseError("moser needs r s p [q]")
        s = moser_surgery(*args)
    else:
        if "pairs" not in top:
            raise ParseError("seifert file needs 'pairs:' or 'moser:'")
        flat = parse_int_list(top["pairs"].text())
        if len(flat) % 2:
            raise ParseError("pairs need an even number of integers")
        genus = int(top["genus"].text()) if "genus" in top else 0
        s = SeifertData(genus, list(zip(flat[::2], flat[1::2])))
    rep = {"seifert": str(s), "normalized": str(normalize(s)), "euler": euler_number(s)}
    if s.genus == 0 and euler_number(s) != 0:
        rep["h1_order"] = h1_order(s)
    if s.genus == 0 and euler_number(s) != 0 and len(normalize(s).pairs) <= 3:
        rep["lens"] = str(lens_from_two_fiber_seifert(s))
    if "cover" in top:
        n = int(top["cover"].text())
        degrees = parse_int_list(top["degrees"].text()) if "degrees" in top else [1] * len(s.pairs)
        c = horizontal_cyclic_cover(s, n, degrees)
        rep["cover"] = str(c)
        rep["cover_normalized"] = str(normalize(c))
        rep["cover_euler"] = euler_number(c)
        if c.genus == 0 and euler_number(c) != 0:
            rep["cover_h1_order"] = h1_order(c)
        if c.genus == 0 and euler_number(c) != 0 and len(normalize(c).pairs) <= 3:
            rep["cover_lens"] = str(lens_from_two_fiber_seifert(c))
    return rep, expected_block(secs)


# ---------------------------------------------------------- localization
def localize_report(p, dim, fixed, lo=None, hi=None):
    ring = CoefficientRing(p)
    rep_ = RepresentationDatum(dim, fixed).check(ring)
    lo = -2 if lo is None else lo
    hi = dim + 2 if hi is None else hi
    degrees = list(range(lo, hi + 1))
    rep = {"p": p, "total_dim": dim, "fixed_dim": fixed,
           "before": {str(d): k for d, k in restriction_rank_table(ring, rep_, degrees)},
           "after": {str(d): k for d, k in restriction_rank_table(ring, rep_, degrees, True)}}
    return rep, format_tables(ring, rep_, degrees)


# ---------------------------------------------------------------- covers
def _known_from_file(entry):
    out = []
    for line in entry.lines():
        label, _, rest = line.partition(":")
        parts = [x.strip() for x in rest.split(";")]
        if not label.strip() or len(parts) not in (1, 3):
            raise ParseError(f"expected 'label: d3[; bits; delta]', got {line!r}")
        d3 = parse_rational(parts[0])
        spinc = None
        if len(parts) == 3:
            spinc = SpinCClass(parse_int_list(parts[1]), parse_int_list(parts[2]))
        out.append((label.strip(), d3, spinc))
    return out


def _cover_stage(secs, top, base, rep, down_filling, spin_filling, d3_down, delta_zero):
    """Shared tail of ``cover`` and ``pipeline``: lift, compare, decide."""
    with stage("cover"):
        if "upstairs" not in secs:
            raise ParseError("scene needs an [upstairs] section")
        up = presentation_from(secs["upstairs"])
        corr = parse_correspondence(top["correspondence"]) if "correspondence" in top else None
        branch = [b - 1 for b in parse_int_list(top["branch"].text())] if "branch" in top else []
        opt = {k: int(top[k].text()) for k in ("s_dot_s", "sigma_up", "sigma_down", "h1_order_up")
               if k in top}
        scene = CoveringScene(int(top["m"].text()) if "m" in top else 1, down_filling, up,
                              branch, corr, **opt)
        rep["m"] = scene.m
        rep["branch"] = [b + 1 for b in scene.branch]
        rep["upstairs_L"] = _matrix(up.L)
        rep["sigma_down"] = scene.sigma_down
        rep["sigma_up"] = scene.sigma_up
        rep["s_dot_s"] = scene.s_dot_s
        rep["cosecant_sum"] = cosecant_sum(scene.m)
        d3_up = d3_lift(d3_down, scene)
        rep["d3_up"] = d3_up
        rep["deg_psi_up"] = contact_class_degree(d3_up)

    spin_target = None
    target = up
    if spin_filling is not None:
        with stage("spin lift"):
            spin_up = spin_lift(scene, spin_filling)
            rep["spin_up"] = _bits(spin_up)
            script = script_from(secs["upstairs"].get("script"))
            target, spin_target = apply_script(up, spin_up, script)
            if script:
                rep["upstairs_script"] = format_script(script)
            rep["target_L"] = _matrix(target.L)
            rep["target_spin"] = _bits(spin_target)

    known = []
    spinc_up = None
    with stage("candidates"):
        if "target" in secs:
            tsec = secs["target"]
            tp = presentation_from(tsec)
            if tp.L != target.L:
                raise InvalidScene(f"upstairs script ends at {target.L}, target is {tp.L}")
            if spin_target is None:
                raise InvalidScene("a [target] section needs downstairs spin bits")
            cands = {}
            for line in tsec["candidates"].lines() if "candidates" in tsec else []:
                label, _, rot = line.partition(":")
                cand = FramedLinkPresentation(tp.L, parse_int_list(rot), tp.labels)
                d3c = d3_legendrian(cand)
                sc = spinc_difference(cand, spin_target)
                cands[label.strip()] = {"rot": list(cand.rot), "d3": d3c, "delta": list(sc.delta)}
                known.append((label.strip(), d3c, sc))
            rep["candidates"] = cands
            rep["d3_candidates"] = [c["d3"] for c in cands.values()]
        if "known_tight" in top:
            known.extend(_known_from_file(top["known_tight"]))
        if spin_target is not None:
            if delta_zero:
                spinc_up = SpinCClass(spin_target, (0,) * target.n)
            elif "delta_up" in top:
                spinc_up = SpinCClass(spin_target, parse_int_list(top["delta_up"].text()))
            else:
                raise InvalidScene("downstairs difference class is non-zero; supply delta_up")
            rep["spinc_up"] = {"base": _bits(spinc_up.base), "delta": list(spinc_up.delta)}

    with stage("verdict"):
        reasons = []
        verdict = None
        if known:
            complete = parse_bool(top["known_complete"].text()) if "known_complete" in top else True
            v = verdict_elliptic(d3_up, spinc_up, known, target if det(target.L) else None,
                                 complete)
            verdict = v
            if spinc_up is not None:
                rep["spinc_match"] = {
                    label: None if sc is None else spinc_equal(target, sc, spinc_up)
                    for label, _, sc in known}
        if "d_invariant" in top:
            d = parse_rational(top["d_invariant"].text())
            rep["d_invariant"] = d
            rep["degree_propagation"] = degree_propagation(contact_class_degree(d3_up), d).value
            if verdict is None:
                verdict = verdict_minimal_L(d3_up, d)
        if verdict is None:
            verdict = verdict_elliptic(d3_up, spinc_up, [], complete=False)
        reasons.extend(verdict.reasons)
        rep["verdict"] = verdict.verdict.value
        rep["matched"] = verdict.matched
        rep["reasons"] = reasons
    return rep


def cover_report(path):
    text, base = read(path)
    secs = parse_sections(text)
    top = secs[""]
    rep = {}
    with stage("downstairs"):
        if "downstairs" not in secs:
            raise ParseError("scene needs a [downstairs] section")
        down = presentation_from(secs["downstairs"])
        rep["downstairs_L"] = _matrix(down.L)
        if "d3_down" in top:
            d3_down = parse_rational(top["d3_down"].text())
        else:
            d3_down = d3_legendrian(down)
        rep["d3_down"] = d3_down
        spin = None
        if "spin" in secs["downstairs"]:
            spin = tuple(parse_int_list(secs["downstairs"]["spin"].text()))
            rep["spin_down"] = _bits(spin)
        delta_zero = True
        if "delta_down" in top:
            delta = parse_int_list(top["delta_down"].text())
            delta_zero = integer_coset_equal(down.L, delta, [0] * down.n)
    return _cover_stage(secs, top, base, rep, down, spin, d3_down, delta_zero), expected_block(secs)


def pipeline_report(path):
    text, base = read(path)
    secs = parse_sections(text)
    top = secs[""]
    rep = {}
    with stage("grid"):
        if "grid" not in top:
            raise ParseError("pipeline scene needs 'grid:'")
        gtext, _ = read(top["grid"].text(), base)
        g, _ = gridmod.parse_grid(gtext)
        k = len(g.components())
        inv = [gridmod.classical_invariants(g, i) for i in range(k)]
        rep["tb"] = _one_or_list([tb for tb, _ in inv])
        rep["rot"] = _one_or_list([r for _, r in inv])
        p0 = gridmod.to_presentation(g, "legendrian")
        rep["surgery_L"] = _matrix(p0.L)
    with stage("d3"):
        d3_down = d3_legendrian(p0)
        rep["d3_down"] = d3_down
        rep["deg_psi_down"] = contact_class_degree(d3_down)
    with stage("spin"):
        spins = enumerate_spin(p0)
        rep["spin_structures_down"] = [_bits(s) for s in spins]
        if "spin" not in top:
            raise ParseError("pipeline scene needs 'spin:' bits for the surgery presentation")
        spin0 = tuple(parse_int_list(top["spin"].text()))
        sc = spinc_difference(p0, spin0)
        rep["spin_down"] = _bits(sc.base)
        rep["delta_down"] = list(sc.delta)
        delta_zero = integer_coset_equal(p0.L, sc.delta, [0] * p0.n)
    with stage("filling"):
        script = script_from(top.get("downstairs_script"))
        filling, spin_f = apply_script(p0, spin0, script)
        rep["downstairs_script"] = format_script(script)
        rep["filling_L"] = _matrix(filling.L)
        rep["filling_spin"] = _bits(spin_f)
    return (_cover_stage(secs, top, base, rep, filling, spin_f, d3_down, delta_zero),
            expected_block(secs))

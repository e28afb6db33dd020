"""Line-oriented file formats.

Everything after ``#`` is a comment.  A file is a sequence of sections;
the unnamed top section comes first and ``[name]`` starts a new one.
Inside a section, ``key: value`` at column 0 starts an entry and
indented lines that follow are added to its block::

    m: 2
    correspondence:
      1 -> 1
      2 -> 2 3

    [upstairs]
    L: -4 0 0; 0 1 -2; 0 -2 1

Component indices in files are 1-based.
"""
from dataclasses import dataclass, field
from fractions import Fraction
import re

from .errors import ParseError
from .framedlink import FramedLinkPresentation, parse_script

__all__ = ["Entry", "parse_sections", "parse_int_list", "parse_rational",
           "parse_matrix", "presentation_from", "script_from", "parse_correspondence",
           "parse_bool"]


@dataclass
class Entry:
    inline: str = ""
    block: list = field(default_factory=list)

    def lines(self):
        out = [self.inline] if self.inline else []
        return out + self.block

    def text(self):
        return " ".join(self.lines())


_KEY_RE = re.compile(r"^([A-Za-z_][\w\-]*)\s*:(.*)$")
_SECTION_RE = re.compile(r"^\[([A-Za-z_][\w\-]*)\]\s*$")


def parse_sections(text):
    """Return ``{section: {key: Entry}}``; the top section is ``""``."""
    sections = {"": {}}
    cur, entry = sections[""], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line[0] in " \t":
            if entry is None:
                raise ParseError(f"line {lineno}: indented line outside an entry")
            entry.block.append(line.strip())
            continue
        m = _SECTION_RE.match(line)
        if m:
            name = m.group(1).lower()
            if name in sections:
                raise ParseError(f"line {lineno}: duplicate section [{name}]")
            cur = sections[name] = {}
            entry = None
            continue
        m = _KEY_RE.match(line)
        if not m:
            raise ParseError(f"line {lineno}: expected 'key: value', got {line.strip()!r}")
        key = m.group(1)
        if key == "l":
            key = "L"
        if key in cur:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        entry = cur[key] = Entry(m.group(2).strip())
    return sections


def _strip(text):
    return re.sub(r"[\[\](){},]", " ", text)


def parse_int_list(text):
    try:
        return [int(v) for v in _strip(text).split()]
    except ValueError as exc:
        raise ParseError(f"expected integers, got {text!r}") from exc


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"expected a rational number, got {text!r}") from exc


def parse_bool(text):
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise ParseError(f"expected true or false, got {text!r}")


def parse_matrix(entry):
    rows = []
    for line in entry.lines():
        for piece in re.split(r";|\]\s*,?\s*\[", line):
            if _strip(piece).strip():
                rows.append(parse_int_list(piece))
    return rows


def script_from(entry):
    if entry is None:
        return []
    return parse_script(entry.lines())


def presentation_from(sec):
    """Build a presentation from a section with keys ``L``, ``rot``, ``components``."""
    if "L" not in sec:
        raise ParseError("presentation needs an 'L:' entry")
    L = parse_matrix(sec["L"])
    labels = sec["components"].text().replace(",", " ").split() if "components" in sec else None
    rot = parse_int_list(sec["rot"].text()) if "rot" in sec else None
    if labels is not None and len(labels) != len(L):
        raise ParseError(f"{len(labels)} component labels for a {len(L)}x{len(L)} matrix")
    return FramedLinkPresentation(L, rot, labels)


def parse_correspondence(entry):
    """Lines ``i -> j1 j2 ...`` (1-based) into a 0-based dict."""
    out = {}
    for piece in entry.lines():
        for part in piece.split(";"):
            if not part.strip():
                continue
            if "->" not in part:
                raise ParseError(f"expected 'i -> j ...', got {part!r}")
            lhs, rhs = part.split("->", 1)
            src = parse_int_list(lhs)
            if len(src) != 1:
                raise ParseError(f"expected one source index in {part!r}")
            out[src[0] - 1] = tuple(j - 1 for j in parse_int_list(rhs))
    return out

"""Parsing and serialization for every file format the tools speak.

All output is canonically ordered (grade-major, then lexicographic) so
that identical inputs produce byte-identical files.  Formats:

  form      ``3/2*e[1,2] - e[2,1] + (1+2i)*e[3]``; ``0`` is the zero form
  relation  header ``n <count>``, then one ``i <= j`` line per pair
  manifold  ``vertices:`` line, then a ``relation:``, ``words:`` or
            ``ideal:`` block (one entry per line)
  ideal     optional ``vertices:`` line, then one generator word per line
            as comma-separated labels
  complex   optional ``vertices:`` line, then one simplex per line;
            missing faces are added (reported back to the caller)
  covering  ``covers:`` header line, then ``point: set1, set2`` lines

Lines starting with ``#`` and blank lines are ignored everywhere.
"""

from __future__ import annotations

import json
import re

from .complexes import SimplicialComplex
from .coarse import Covering
from .envelope import Form, Word, word_validate
from .errors import FinitaryError
from .ideals import BasicIdeal
from .manifolds import Manifold, Relation
from .scalars import GaussianRational
from .topology import FiniteSpace, HasseDiagram


class ParseError(FinitaryError):
    def __init__(self, source: str, line: int, message: str, col: int | None = None):
        self.source = source
        self.line = line
        self.col = col
        where = f"{source}:{line}" if col is None else f"{source}:{line}:{col}"
        super().__init__(f"{where}: {message}")


_LABEL = re.compile(r"^[A-Za-z0-9_.\-]+$")


class VertexTable:
    """Display labels for the vertex set, resolving labels to indices."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels):
        labels = tuple(labels)
        for lbl in labels:
            if not _LABEL.match(lbl):
                raise ValueError(f"bad vertex label {lbl!r}")
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be unique")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {lbl: i for i, lbl in enumerate(labels)})

    def __setattr__(self, name, value):
        raise AttributeError("VertexTable is immutable")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


# -- forms -----------------------------------------------------------------

def _split_terms(text: str):
    """Split on top-level +/-; yields (sign, term, start_column) triples."""
    terms = []
    depth = 0
    sign = 1
    start = 0
    for pos, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch in "+-" and depth == 0 and pos > start:
            terms.append((sign, text[start:pos].strip(), start + 1))
            sign = 1 if ch == "+" else -1
            start = pos + 1
        elif ch in "+-" and depth == 0 and pos == start:
            sign = sign * (1 if ch == "+" else -1)
            start = pos + 1
    terms.append((sign, text[start:].strip(), start + 1))
    return terms


_TERM = re.compile(r"^(?:(?P<coef>\([^()]*\)|[^*\[\]()]+)\*)?e\[(?P<letters>[^\]]*)\]$")


def parse_form(text: str, table: VertexTable, source: str = "<form>", line: int = 1) -> Form:
    body = text.strip()
    if not body:
        raise ParseError(source, line, "empty form expression")
    if body == "0":
        return Form()
    terms = []
    for sign, term, col in _split_terms(body):
        if not term:
            raise ParseError(source, line, "empty term in form expression", col)
        match = _TERM.match(term)
        if not match:
            raise ParseError(source, line, f"cannot parse term {term!r}", col)
        coef_tok = match.group("coef")
        if coef_tok is None:
            coeff = GaussianRational(1)
        else:
            tok = coef_tok.strip()
            if tok.startswith("(") and tok.endswith(")"):
                tok = tok[1:-1]
            try:
                coeff = GaussianRational.parse(tok)
            except (ValueError, ZeroDivisionError):
                raise ParseError(
                    source, line, f"bad coefficient {coef_tok!r}", col
                ) from None
        letter_toks = [t.strip() for t in match.group("letters").split(",")]
        if letter_toks == [""]:
            raise ParseError(source, line, "word with no letters", col)
        try:
            letters = [table.index(t) for t in letter_toks]
            word = word_validate(letters, table.n)
        except (ValueError, FinitaryError) as exc:
            raise ParseError(source, line, str(exc), col) from None
        terms.append((word, coeff * sign))
    return Form(terms)


def _coeff_prefix(c: GaussianRational) -> tuple[int, str]:
    """Sign and printable multiplier prefix ('' means coefficient 1)."""
    if not c.im:
        sign = -1 if c.re < 0 else 1
        mag = abs(c.re)
        return sign, "" if mag == 1 else f"{mag}*"
    if not c.re:
        sign = -1 if c.im < 0 else 1
        mag = abs(c.im)
        return sign, "i*" if mag == 1 else f"{mag}i*"
    return 1, f"({c})*"


def print_form(f: Form, table: VertexTable) -> str:
    if not f:
        return "0"
    parts = []
    for w, c in f.items():
        sign, prefix = _coeff_prefix(c)
        body = prefix + "e[" + ",".join(table.label(i) for i in w) + "]"
        if not parts:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append(("- " if sign < 0 else "+ ") + body)
    return " ".join(parts)


# -- relations ---------------------------------------------------------------

def parse_relation(text: str, source: str = "<relation>") -> Relation:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(source, 1, "empty relation file")
    lineno, header = lines[0]
    bits = header.split()
    if len(bits) != 2 or bits[0] != "n" or not bits[1].isdigit():
        raise ParseError(source, lineno, f"expected header 'n <count>', got {header!r}")
    n = int(bits[1])
    if n < 1:
        raise ParseError(source, lineno, "vertex count must be at least 1")
    table = VertexTable(str(i + 1) for i in range(n))
    pairs = []
    for lineno, line in lines[1:]:
        if "<=" not in line:
            raise ParseError(source, lineno, f"expected 'i <= j', got {line!r}")
        left, right = (s.strip() for s in line.split("<=", 1))
        try:
            pairs.append((table.index(left), table.index(right)))
        except ValueError as exc:
            raise ParseError(source, lineno, str(exc)) from None
    return Relation(n, pairs)


def print_relation(rel: Relation) -> str:
    table = VertexTable(str(i + 1) for i in range(rel.n))
    lines = [f"n {rel.n}"]
    lines += [
        f"{table.label(i)} <= {table.label(j)}" for i, j in rel.strict_pairs()
    ]
    return "\n".join(lines) + "\n"


# -- manifolds ---------------------------------------------------------------

def _parse_vertices_line(line: str, lineno: int, source: str) -> VertexTable:
    body = line.split(":", 1)[1].strip()
    toks = [t.strip() for t in body.split(",") if t.strip()]
    if not toks:
        raise ParseError(source, lineno, "vertices: line lists no labels")
    try:
        return VertexTable(toks)
    except ValueError as exc:
        raise ParseError(source, lineno, str(exc)) from None


def _parse_word_line(line: str, lineno: int, source: str, table: VertexTable) -> Word:
    toks = [t.strip() for t in line.split(",")]
    try:
        return word_validate([table.index(t) for t in toks], table.n)
    except (ValueError, FinitaryError) as exc:
        raise ParseError(source, lineno, str(exc)) from None


def parse_manifold(text: str, source: str = "<manifold>") -> Manifold:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(source, 1, "empty manifold file")
    lineno, first = lines[0]
    if not first.startswith("vertices:"):
        raise ParseError(source, lineno, "manifold file must start with 'vertices:'")
    table = _parse_vertices_line(first, lineno, source)
    if len(lines) < 2:
        raise ParseError(source, lineno, "missing 'relation:', 'words:' or 'ideal:' block")
    lineno, block = lines[1]
    if block not in ("relation:", "words:", "ideal:"):
        raise ParseError(
            source, lineno, f"expected 'relation:', 'words:' or 'ideal:', got {block!r}"
        )
    entries = lines[2:]
    if block == "relation:":
        pairs = []
        for lno, line in entries:
            if "<=" not in line:
                raise ParseError(source, lno, f"expected 'i <= j', got {line!r}")
            left, right = (s.strip() for s in line.split("<=", 1))
            try:
                pairs.append((table.index(left), table.index(right)))
            except ValueError as exc:
                raise ParseError(source, lno, str(exc)) from None
        rel = Relation(table.n, pairs)
        return Manifold.from_relation(rel, labels=table.labels)
    words = [_parse_word_line(line, lno, source, table) for lno, line in entries]
    if block == "words:":
        if not words:
            raise ParseError(source, lineno, "words: block lists no words")
        return Manifold(table.labels, words=words)
    try:
        ideal = BasicIdeal(table.n, words)
    except FinitaryError as exc:
        raise ParseError(source, lineno, str(exc)) from None
    return Manifold.from_ideal(ideal, labels=table.labels)


def print_manifold(m: Manifold) -> str:
    lines = ["vertices: " + ", ".join(m.labels)]
    if m.is_explicit:
        lines.append("words:")
        lines += [", ".join(m.labels[i] for i in w) for w in m.words()]
    else:
        lines.append("ideal:")
        lines += [", ".join(m.labels[i] for i in g) for g in m.ideal.generators]
    return "\n".join(lines) + "\n"


# -- ideals ------------------------------------------------------------------

def parse_ideal(
    text: str, source: str = "<ideal>"
) -> tuple[BasicIdeal, VertexTable, list[Word]]:
    """Returns the normalized ideal, the vertex table and the words as
    given (so callers can report dropped redundant generators)."""
    lines = list(_content_lines(text))
    table = None
    start = 0
    if lines and lines[0][1].startswith("vertices:"):
        table = _parse_vertices_line(lines[0][1], lines[0][0], source)
        start = 1
    entries = lines[start:]
    if table is None:
        seen: set[str] = set()
        for _, line in entries:
            seen.update(t.strip() for t in line.split(","))
        try:
            table = VertexTable(sorted(seen))
        except ValueError as exc:
            raise ParseError(source, 1, str(exc)) from None
    words = [_parse_word_line(line, lno, source, table) for lno, line in entries]
    try:
        ideal = BasicIdeal(table.n, words)
    except FinitaryError as exc:
        raise ParseError(source, entries[0][0] if entries else 1, str(exc)) from None
    return ideal, table, words


def print_ideal(ideal: BasicIdeal, table: VertexTable) -> str:
    lines = ["vertices: " + ", ".join(table.labels)]
    lines += [", ".join(table.label(i) for i in g) for g in ideal.generators]
    return "\n".join(lines) + "\n"


# -- complexes ---------------------------------------------------------------

def parse_complex(
    text: str, source: str = "<complex>"
) -> tuple[SimplicialComplex, list[str]]:
    """Returns the complex and human-readable notes about added faces."""
    lines = list(_content_lines(text))
    table = None
    start = 0
    if lines and lines[0][1].startswith("vertices:"):
        table = _parse_vertices_line(lines[0][1], lines[0][0], source)
        start = 1
    entries = lines[start:]
    if table is None:
        seen: set[str] = set()
        for _, line in entries:
            seen.update(t.strip() for t in line.split(","))
        if not seen:
            raise ParseError(source, 1, "empty complex file")
        try:
            table = VertexTable(sorted(seen))
        except ValueError as exc:
            raise ParseError(source, 1, str(exc)) from None
    simplices = []
    for lno, line in entries:
        toks = [t.strip() for t in line.split(",")]
        try:
            verts = [table.index(t) for t in toks]
        except ValueError as exc:
            raise ParseError(source, lno, str(exc)) from None
        if len(set(verts)) != len(verts):
            raise ParseError(source, lno, f"simplex {line!r} repeats a vertex")
        simplices.append(frozenset(verts))
    complex_, added = SimplicialComplex.closed(
        table.n, simplices, labels=table.labels
    )
    notes = [f"added missing face {complex_.simplex_label(s)}" for s in added]
    return complex_, notes


def print_complex(p: SimplicialComplex) -> str:
    lines = ["vertices: " + ", ".join(p.labels)]
    lines += [
        ", ".join(p.labels[v] for v in sorted(s)) for s in p.ordered()
    ]
    return "\n".join(lines) + "\n"


# -- coverings ---------------------------------------------------------------

def parse_covering(text: str, source: str = "<covering>") -> Covering:
    lines = list(_content_lines(text))
    if not lines or not lines[0][1].startswith("covers:"):
        raise ParseError(source, 1, "covering file must start with 'covers:'")
    lineno, header = lines[0]
    cover_labels = [t.strip() for t in header.split(":", 1)[1].split(",") if t.strip()]
    if not cover_labels:
        raise ParseError(source, lineno, "covers: line lists no cover sets")
    index = {lbl: i for i, lbl in enumerate(cover_labels)}
    if len(index) != len(cover_labels):
        raise ParseError(source, lineno, "duplicate cover set label")
    point_labels = []
    traces = []
    for lno, line in lines[1:]:
        if ":" not in line:
            raise ParseError(source, lno, f"expected 'point: set1, set2', got {line!r}")
        label, body = (s.strip() for s in line.split(":", 1))
        toks = [t.strip() for t in body.split(",") if t.strip()]
        try:
            trace = frozenset(index[t] for t in toks)
        except KeyError as exc:
            raise ParseError(source, lno, f"unknown cover set {exc.args[0]!r}") from None
        point_labels.append(label)
        traces.append(trace)
    try:
        return Covering(cover_labels, point_labels, traces)
    except (FinitaryError, ValueError) as exc:
        raise ParseError(source, 1, str(exc)) from None


def print_covering(c: Covering) -> str:
    lines = ["covers: " + ", ".join(c.cover_labels)]
    for label, trace in zip(c.point_labels, c.traces):
        names = ", ".join(c.cover_labels[i] for i in sorted(trace))
        lines.append(f"{label}: {names}")
    return "\n".join(lines) + "\n"


# -- finite spaces -----------------------------------------------------------

def space_json(s: FiniteSpace) -> str:
    payload = {
        "points": list(s.labels),
        "min_open": {
            s.labels[x]: [s.labels[y] for y in sorted(s.min_open[x])]
            for x in range(s.n)
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def _levels(h: HasseDiagram) -> list[int]:
    """Longest-chain height of each node in the diagram."""
    level = [0] * len(h.labels)
    # repeated relaxation; diagrams here are tiny
    changed = True
    while changed:
        changed = False
        for lo, up in h.edges:
            if level[up] < level[lo] + 1:
                level[up] = level[lo] + 1
                changed = True
    return level


def hasse_dot(h: HasseDiagram) -> str:
    level = _levels(h)
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for lvl in sorted(set(level)):
        members = [i for i in range(len(h.labels)) if level[i] == lvl]
        row = " ".join(f'"{h.labels[i]}";' for i in members)
        lines.append("  { rank=same; " + row + " }")
    for lo, up in h.edges:
        lines.append(f'  "{h.labels[lo]}" -> "{h.labels[up]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

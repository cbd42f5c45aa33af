"""Line-oriented text format for groups given by generator matrices.

A file declares a cyclotomic conductor and a degree, then one block per
generator.  Three generator styles exist:

    generator monomial        one nonzero entry per row
    map 2 1 3                 row r reads from input coordinate map[r] (1-based)
    scalars 1; -1; 1          entry placed in row r, cyclotomic syntax

    generator dense           full matrix, one `row` line per row
    row 0; 1
    row 1; 0

    generator perm            permutation matrix, row style as above
    map 2 3 1

Optionally a file carries an antisymmetric form and a lattice generator:

    form wedge 1:4 2:5 3:6    sum of dz_a ^ dz_b, 1-based coordinates
    form dense                or explicit rows like a dense generator
    lattice z^1               entries must lie in Z + wZ, w = z^k or 1

`#` starts a comment.  Blank lines separate nothing and are ignored.
Scalar syntax is the `a/b*z^k` sum form of :mod:`torusquot.cyclo` with z
the primitive conductor-th root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import Cyclotomic, EntryParseError, one, parse_entry
from .cyclo import format_entry
from .errors import GroupFileError
from .groups import Dense, Monomial
from .torusq import LatticeSpec, SymplecticForm


@dataclass
class GeneratorSpec:
    """One parsed generator block: the style keyword plus the element."""

    kind: str  # "monomial" | "dense" | "perm"
    element: object  # Monomial or Dense


@dataclass
class GroupFile:
    conductor: int
    degree: int
    generators: list = field(default_factory=list)
    form: SymplecticForm | None = None
    form_pairs: list | None = None  # kept when the form came from a wedge line
    lattice: LatticeSpec | None = None
    lattice_token: str | None = None

    def elements(self):
        return [g.element for g in self.generators]


# -- parsing


class _Lines:
    """Comment-stripped, non-blank lines with their original numbers."""

    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            if body.strip():
                self.items.append((no, body))
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def take(self):
        item = self.peek()
        if item is not None:
            self.pos += 1
        return item


def _keyword(line: str) -> str:
    return line.split(None, 1)[0]


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GroupFileError(f"{what} must be an integer, got {token!r}", lineno)
    return value


def _parse_index_list(rest: str, degree: int, lineno: int, what: str):
    tokens = rest.split()
    if len(tokens) != degree:
        raise GroupFileError(
            f"{what} lists {len(tokens)} coordinates, degree is {degree}", lineno)
    out = []
    for tok in tokens:
        k = _parse_int(tok, what, lineno)
        if not 1 <= k <= degree:
            raise GroupFileError(
                f"{what} index {k} outside 1..{degree}", lineno)
        out.append(k)
    return out


def _parse_entry_list(rest: str, rest_offset: int, conductor: int,
                      lineno: int, what: str):
    """Split on `;` and parse each chunk, reporting real column numbers."""
    entries = []
    chunks = rest.split(";")
    offset = rest_offset
    for chunk in chunks:
        try:
            entries.append(parse_entry(chunk, conductor))
        except EntryParseError as exc:
            col = offset + (exc.column - 1) + 1
            raise GroupFileError(f"bad {what} entry: {exc}", lineno, col)
        offset += len(chunk) + 1
    return entries


def _row_style_monomial(maps, scalars, degree: int, lineno: int) -> Monomial:
    """Build the element whose row r has scalars[r] in column maps[r]."""
    if sorted(maps) != list(range(1, degree + 1)):
        raise GroupFileError("map indices must form a permutation", lineno)
    perm = [0] * degree
    by_col = [one()] * degree
    for r, (t, s) in enumerate(zip(maps, scalars)):
        perm[t - 1] = r
        by_col[t - 1] = s
    try:
        return Monomial(perm, by_col)
    except Exception as exc:
        raise GroupFileError(str(exc), lineno)


def parse_group_text(text: str, source: str = "<string>") -> GroupFile:
    lines = _Lines(text)
    conductor = None
    degree = None

    # header: conductor and degree in either order, both before any block
    while True:
        item = lines.peek()
        if item is None:
            break
        lineno, body = item
        kw = _keyword(body)
        if kw not in ("conductor", "degree"):
            break
        lines.take()
        parts = body.split()
        if len(parts) != 2:
            raise GroupFileError(f"expected `{kw} N`", lineno)
        value = _parse_int(parts[1], kw, lineno)
        if value < 1:
            raise GroupFileError(f"{kw} must be positive", lineno)
        if kw == "conductor":
            if conductor is not None:
                raise GroupFileError("duplicate conductor line", lineno)
            conductor = value
        else:
            if degree is not None:
                raise GroupFileError("duplicate degree line", lineno)
            degree = value

    first = lines.peek()
    at = first[0] if first else None
    if conductor is None:
        raise GroupFileError(f"{source}: missing conductor line", at)
    if degree is None:
        raise GroupFileError(f"{source}: missing degree line", at)

    gf = GroupFile(conductor=conductor, degree=degree)

    while True:
        item = lines.take()
        if item is None:
            break
        lineno, body = item
        kw = _keyword(body)
        if kw == "generator":
            gf.generators.append(_parse_generator(lines, body, lineno, gf))
        elif kw == "form":
            if gf.form is not None:
                raise GroupFileError("duplicate form block", lineno)
            gf.form, gf.form_pairs = _parse_form(lines, body, lineno, gf)
        elif kw == "lattice":
            if gf.lattice is not None:
                raise GroupFileError("duplicate lattice block", lineno)
            gf.lattice, gf.lattice_token = _parse_lattice(body, lineno, gf)
        elif kw in ("conductor", "degree"):
            raise GroupFileError(f"{kw} must appear before all blocks", lineno)
        else:
            raise GroupFileError(f"unknown directive {kw!r}", lineno)

    if not gf.generators:
        raise GroupFileError(f"{source}: no generator blocks", None)
    return gf


def _block_lines(lines: _Lines, allowed):
    """Yield (lineno, keyword, rest, rest_offset) until the next directive."""
    while True:
        item = lines.peek()
        if item is None:
            return
        lineno, body = item
        kw = _keyword(body)
        if kw not in allowed:
            return
        lines.take()
        head, _, rest = body.partition(" ")
        offset = body.index(head) + len(head) + 1
        yield lineno, kw, rest, offset


def _parse_generator(lines: _Lines, header: str, lineno: int, gf: GroupFile) -> GeneratorSpec:
    parts = header.split()
    if len(parts) != 2 or parts[1] not in ("monomial", "dense", "perm"):
        raise GroupFileError("expected `generator monomial|dense|perm`", lineno)
    kind = parts[1]
    n = gf.degree

    if kind == "perm":
        got = list(_block_lines(lines, ("map",)))
        if len(got) != 1:
            raise GroupFileError("perm generator needs exactly one map line", lineno)
        mlineno, _, rest, _ = got[0]
        maps = _parse_index_list(rest, n, mlineno, "map")
        element = _row_style_monomial(maps, [one()] * n, n, mlineno)
        return GeneratorSpec("perm", element)

    if kind == "monomial":
        maps = None
        scalars = None
        for blineno, kw, rest, off in _block_lines(lines, ("map", "scalars")):
            if kw == "map":
                if maps is not None:
                    raise GroupFileError("duplicate map line", blineno)
                maps = _parse_index_list(rest, n, blineno, "map")
            else:
                if scalars is not None:
                    raise GroupFileError("duplicate scalars line", blineno)
                entries = _parse_entry_list(rest, off, gf.conductor,
                                            blineno, "scalar")
                if len(entries) != n:
                    raise GroupFileError(
                        f"scalars lists {len(entries)} entries, degree is {n}", blineno)
                scalars = entries
        if maps is None:
            raise GroupFileError("monomial generator is missing its map line", lineno)
        if scalars is None:
            raise GroupFileError("monomial generator is missing its scalars line", lineno)
        element = _row_style_monomial(maps, scalars, n, lineno)
        return GeneratorSpec("monomial", element)

    rows = []
    for blineno, _, rest, off in _block_lines(lines, ("row",)):
        entries = _parse_entry_list(rest, off, gf.conductor, blineno, "matrix")
        if len(entries) != n:
            raise GroupFileError(
                f"row has {len(entries)} entries, degree is {n}", blineno)
        rows.append(entries)
    if len(rows) != n:
        raise GroupFileError(
            f"dense generator has {len(rows)} rows, degree is {n}", lineno)
    return GeneratorSpec("dense", Dense(rows))


def _parse_form(lines: _Lines, header: str, lineno: int, gf: GroupFile):
    parts = header.split()
    if len(parts) >= 2 and parts[1] == "wedge":
        pairs = parse_wedge_pairs(" ".join(parts[2:]), gf.degree, lineno)
        return SymplecticForm.wedge_pairs(gf.degree, pairs), pairs
    if parts[1:] == ["dense"]:
        n = gf.degree
        rows = []
        for blineno, _, rest, off in _block_lines(lines, ("row",)):
            entries = _parse_entry_list(rest, off, gf.conductor, blineno, "form")
            if len(entries) != n:
                raise GroupFileError(
                    f"form row has {len(entries)} entries, degree is {n}", blineno)
            rows.append(entries)
        if len(rows) != n:
            raise GroupFileError(f"form has {len(rows)} rows, degree is {n}", lineno)
        try:
            return SymplecticForm(rows), None
        except Exception as exc:
            raise GroupFileError(str(exc), lineno)
    raise GroupFileError("expected `form wedge ...` or `form dense`", lineno)


def parse_wedge_pairs(text: str, degree: int, lineno: int | None = None):
    """`a:b` tokens, 1-based and pairwise disjoint, to 0-based pairs."""
    pairs = []
    seen = set()
    tokens = text.split()
    if not tokens:
        raise GroupFileError("wedge form lists no pairs", lineno)
    for tok in tokens:
        a, sep, b = tok.partition(":")
        if not sep:
            raise GroupFileError(f"wedge pair {tok!r} is not of the form a:b", lineno)
        ai = _parse_int(a, "wedge index", lineno)
        bi = _parse_int(b, "wedge index", lineno)
        for k in (ai, bi):
            if not 1 <= k <= degree:
                raise GroupFileError(f"wedge index {k} outside 1..{degree}", lineno)
            if k in seen:
                raise GroupFileError(f"coordinate {k} used twice in wedge form", lineno)
            seen.add(k)
        pairs.append((ai - 1, bi - 1))
    return pairs


def _parse_lattice(body: str, lineno: int, gf: GroupFile):
    parts = body.split()
    if len(parts) != 2:
        raise GroupFileError("expected `lattice z^k` or `lattice 1`", lineno)
    return parse_lattice_token(parts[1], gf.conductor, lineno)


def parse_lattice_token(token: str, conductor: int, lineno: int | None = None):
    """`z^k` or `1` into a LatticeSpec, plus the canonical token."""
    if token == "1":
        return LatticeSpec(1), "1"
    if token.startswith("z^"):
        k = _parse_int(token[2:], "lattice exponent", lineno)
        omega = Cyclotomic.zeta(conductor, k % conductor)
        try:
            return LatticeSpec(omega), token
        except Exception as exc:
            raise GroupFileError(str(exc), lineno)
    raise GroupFileError(
        f"lattice generator must be z^k or 1, got {token!r}", lineno)


def parse_form_file(path, conductor: int, degree: int) -> SymplecticForm:
    """A standalone form file: optional `conductor N`, then one form block."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc.strerror or exc}", None)
    lines = _Lines(text)
    item = lines.peek()
    if item is not None and _keyword(item[1]) == "conductor":
        lineno, body = lines.take()
        parts = body.split()
        if len(parts) != 2:
            raise GroupFileError("expected `conductor N`", lineno)
        conductor = _parse_int(parts[1], "conductor", lineno)
    item = lines.take()
    if item is None:
        raise GroupFileError(f"{path}: no form block", None)
    lineno, body = item
    if _keyword(body) != "form":
        raise GroupFileError("expected a form block", lineno)
    carrier = GroupFile(conductor=conductor, degree=degree)
    form, _ = _parse_form(lines, body, lineno, carrier)
    left = lines.peek()
    if left is not None:
        raise GroupFileError("unexpected content after form block", left[0])
    return form


def parse_group(path) -> GroupFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc.strerror or exc}", None)
    return parse_group_text(text, source=str(path))


# -- serialization


def _row_style_of(element):
    """Invert the constructor: per-row (1-based source column, scalar)."""
    n = element.degree
    maps = [0] * n
    scalars = [one()] * n
    for col, (row, s) in enumerate(zip(element.perm, element.scalars)):
        maps[row] = col + 1
        scalars[row] = s
    return maps, scalars


def serialize_group(gf: GroupFile) -> str:
    out = [f"conductor {gf.conductor}", f"degree {gf.degree}"]
    fmt = lambda x: format_entry(x, gf.conductor)
    for spec in gf.generators:
        out.append(f"generator {spec.kind}")
        if spec.kind in ("monomial", "perm"):
            maps, scalars = _row_style_of(spec.element)
            out.append("map " + " ".join(str(t) for t in maps))
            if spec.kind == "monomial":
                out.append("scalars " + "; ".join(fmt(s) for s in scalars))
        else:
            for row in spec.element.rows:
                out.append("row " + "; ".join(fmt(x) for x in row))
    if gf.form is not None:
        if gf.form_pairs is not None:
            pairs = " ".join(f"{a + 1}:{b + 1}" for a, b in gf.form_pairs)
            out.append(f"form wedge {pairs}")
        else:
            out.append("form dense")
            for row in gf.form.matrix:
                out.append("row " + "; ".join(fmt(x) for x in row))
    if gf.lattice is not None:
        out.append(f"lattice {gf.lattice_token}")
    return "\n".join(out) + "\n"

"""Line-oriented text formats for theories and contexts.

Both formats open with algebra header lines (``logic``, ``scale``,
``hedge``) and an ``attributes`` line.  A theory file then lists one
``<set> => <set>`` per line; a context file lists ``object <name>: d1 d2 ...``
rows with degrees in attribute order.  ``#`` starts a comment.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .algebra import Chain, parse_algebra
from .context import FormalContext
from .errors import ParseError
from .fuzzyset import Universe
from .implications import Theory, parse_implication

_HEADER_KEYS = ("logic", "scale", "hedge")


def _clean(lines: Iterable[str]) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _split_header(lines: Iterable[str]) -> tuple[Chain, Universe, list[tuple[int, str]]]:
    header, body = [], []
    attributes = None
    for number, line in _clean(lines):
        key = line.split(None, 1)[0]
        if key in _HEADER_KEYS:
            if body:
                raise ParseError(f"line {number}: header line after the body")
            header.append(line)
        elif key == "attributes":
            names = line.split()[1:]
            if not names:
                raise ParseError(f"line {number}: no attributes listed")
            try:
                attributes = Universe(names)
            except ValueError as exc:
                raise ParseError(f"line {number}: {exc}") from None
        else:
            body.append((number, line))
    if attributes is None:
        raise ParseError("missing 'attributes' line")
    return parse_algebra(header), attributes, body


def parse_theory(text: str) -> Theory:
    chain, attributes, body = _split_header(text.splitlines())
    imps = []
    for number, line in body:
        try:
            imps.append(parse_implication(line, attributes, chain))
        except ParseError as exc:
            raise ParseError(f"line {number}: {exc}") from None
    return Theory(imps, attributes, chain)


def format_theory(theory: Theory) -> str:
    lines = theory.chain.header_lines()
    lines.append("attributes " + " ".join(theory.universe.names))
    lines += [str(imp) for imp in theory]
    return "\n".join(lines) + "\n"


def parse_context(text: str) -> FormalContext:
    chain, attributes, body = _split_header(text.splitlines())
    objects, table = [], []
    for number, line in body:
        key, _, rest = line.partition(" ")
        name, colon, values = rest.partition(":")
        if key != "object" or not colon:
            raise ParseError(f"line {number}: expected 'object <name>: d1 d2 ...'")
        cells = values.split()
        if len(cells) != len(attributes):
            raise ParseError(f"line {number}: expected {len(attributes)} degrees, got {len(cells)}")
        try:
            table.append([chain.parse_degree(c).index for c in cells])
        except ParseError as exc:
            raise ParseError(f"line {number}: {exc}") from None
        objects.append(name.strip())
    if not objects:
        raise ParseError("a context needs at least one object")
    try:
        return FormalContext(objects, attributes, chain, table)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_context(context: FormalContext) -> str:
    chain = context.chain
    lines = chain.header_lines()
    lines.append("attributes " + " ".join(context.attributes.names))
    for name, row in zip(context.objects.names, context.table):
        lines.append(f"object {name}: " + " ".join(chain.format(d) for d in row))
    return "\n".join(lines) + "\n"


def read_theory(path: str | Path) -> Theory:
    return parse_theory(Path(path).read_text())


def read_context(path: str | Path) -> FormalContext:
    return parse_context(Path(path).read_text())

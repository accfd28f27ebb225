"""Line-delimited JSON format ``matroid/v1``.

A line carries ``n`` and exactly one of ``bases`` (lists of 1-based
elements) or ``cyclic_flats`` (``[[elements, rank], ...]``).
"""
from __future__ import annotations

import json
from typing import Iterable, Iterator, TextIO

from .cyclic import CyclicFlatList, from_cyclic_flats
from .errors import ParseError
from .matroid import Matroid, elements_of, from_bases

FORMAT = "matroid/v1"


def _element_list(value, n, where, pos):
    if not isinstance(value, list) or not all(isinstance(e, int) and not isinstance(e, bool)
                                              for e in value):
        raise ParseError(f"{where}: expected a list of integers", pos)
    for e in value:
        if not 1 <= e <= n:
            raise ParseError(f"{where}: element {e} outside 1..{n}", pos)
    return value


def parse_matroid(text: str) -> Matroid:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object", 0)
    if obj.get("format") != FORMAT:
        raise ParseError(f"format must be {FORMAT!r}, got {obj.get('format')!r}", 0)
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("'n' must be a positive integer", 0)
    has_b, has_c = "bases" in obj, "cyclic_flats" in obj
    if has_b == has_c:
        raise ParseError("exactly one of 'bases' and 'cyclic_flats' is required", 0)
    unknown = set(obj) - {"format", "n", "bases", "cyclic_flats"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", 0)
    if has_b:
        raw = obj["bases"]
        if not isinstance(raw, list):
            raise ParseError("'bases' must be a list", 0)
        bases = [_element_list(b, n, f"bases[{i}]", 0) for i, b in enumerate(raw)]
        return from_bases(n, bases)
    raw = obj["cyclic_flats"]
    if not isinstance(raw, list):
        raise ParseError("'cyclic_flats' must be a list", 0)
    pairs = []
    for i, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], int)):
            raise ParseError(f"cyclic_flats[{i}]: expected [elements, rank]", 0)
        pairs.append((_element_list(item[0], n, f"cyclic_flats[{i}]", 0), item[1]))
    return from_cyclic_flats(CyclicFlatList.from_pairs(n, pairs))


def serialize_matroid(M: Matroid) -> str:
    bases = sorted(list(elements_of(b)) for b in M.bases)
    return json.dumps({"format": FORMAT, "n": M.n, "bases": bases}, separators=(",", ":"))


def read_matroids(stream: TextIO | Iterable[str]) -> Iterator[Matroid]:
    """Parse every non-blank line; errors report the 1-based line number."""
    for lineno, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        try:
            yield parse_matroid(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.detail}", exc.position) from None

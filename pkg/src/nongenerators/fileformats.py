"""JSON file formats for posets, Moore families and Cayley tables.

Poset file::

    {"elements": ["0", "a", "b", "1"],
     "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}

Each cover ``[lower, upper]`` puts ``lower`` below ``upper``; the order is the
reflexive-transitive closure and the maximum is detected.  Duplicate elements,
self-covers and unknown names are rejected.  The Zorn gadget command reads the
same format without requiring a maximum.

Moore family file::

    {"ground": ["x", "y"], "closed_sets": [[], ["x"], ["x", "y"]]}

Cayley table file (``labels`` is optional)::

    {"order": 2, "identity": 0, "table": [[0, 1], [1, 0]], "labels": ["e", "g"]}
"""

from __future__ import annotations

import json
import re

from .closure import MooreFamily
from .errors import PosetError
from .groups import FiniteGroup
from .poset import Poset, build_poset, order_matrix


class InputError(PosetError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise InputError("top-level value must be an object", 1)
    return doc


def _line_of(text: str, *tokens) -> int | None:
    needles = [json.dumps(t) for t in tokens]
    for lineno, line in enumerate(text.splitlines(), 1):
        if all(n in line for n in needles):
            return lineno
    return None


def _field(doc: dict, text: str, key: str):
    if key not in doc:
        raise InputError(f"missing field {key!r}")
    return doc[key]


def _string_list(value, what: str, text: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise InputError(f"{what} must be a list of strings", _line_of(text, what.split()[0]))
    return value


def parse_order(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Elements and covers of a poset file, validated but with no maximum required."""
    doc = _load(text)
    elements = _string_list(_field(doc, text, "elements"), "elements", text)
    covers = _field(doc, text, "covers")
    if not isinstance(covers, list):
        raise InputError("covers must be a list of pairs", _line_of(text, "covers"))
    pairs = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise InputError(f"cover {c!r} is not a pair of strings", _line_of(text, "covers"))
        pairs.append((c[0], c[1]))
    try:
        order_matrix(elements, pairs)
    except PosetError as exc:
        raise InputError(str(exc), _offending_line(text, elements, pairs, exc)) from None
    return elements, pairs


def _line_of_pair(text: str, lo: str, hi: str) -> int | None:
    pattern = re.compile(r"\[\s*" + re.escape(json.dumps(lo)) + r"\s*,\s*" + re.escape(json.dumps(hi)))
    m = pattern.search(text)
    return None if m is None else text.count("\n", 0, m.start()) + 1


def _offending_line(text, elements, pairs, exc) -> int | None:
    msg = str(exc)
    for lo, hi in pairs:
        if repr(lo) in msg and repr(hi) in msg:
            return _line_of_pair(text, lo, hi)
    for e in elements:
        if repr(e) in msg:
            return _line_of(text, e)
    return None


def parse_poset(text: str) -> Poset:
    elements, covers = parse_order(text)
    try:
        return build_poset(elements, covers)
    except PosetError as exc:
        raise InputError(str(exc)) from None


def dump_poset(P: Poset) -> str:
    doc = {"elements": list(P.elements), "covers": [list(c) for c in P.cover_pairs()]}
    return json.dumps(doc, indent=2) + "\n"


def parse_moore(text: str, complete: bool = False) -> MooreFamily:
    doc = _load(text)
    ground = _string_list(_field(doc, text, "ground"), "ground", text)
    closed = _field(doc, text, "closed_sets")
    if not isinstance(closed, list) or not all(
        isinstance(s, list) and all(isinstance(x, str) for x in s) for s in closed
    ):
        raise InputError("closed_sets must be a list of string lists", _line_of(text, "closed_sets"))
    try:
        if complete:
            return MooreFamily.completed(ground, closed)
        return MooreFamily(ground, closed)
    except PosetError as exc:
        raise InputError(str(exc)) from None


def dump_moore(M: MooreFamily) -> str:
    closed = sorted((sorted(s) for s in M.closed_sets), key=lambda s: (len(s), s))
    return json.dumps({"ground": list(M.ground), "closed_sets": closed}, indent=2) + "\n"


def parse_group(text: str) -> FiniteGroup:
    doc = _load(text)
    order = _field(doc, text, "order")
    identity = _field(doc, text, "identity")
    table = _field(doc, text, "table")
    if not isinstance(order, int) or not isinstance(identity, int):
        raise InputError("order and identity must be integers")
    if not isinstance(table, list) or len(table) != order or not all(
        isinstance(r, list) and len(r) == order and all(isinstance(x, int) for x in r)
        for r in table
    ):
        raise InputError(f"table must be {order} rows of {order} integers", _line_of(text, "table"))
    labels = doc.get("labels")
    try:
        return FiniteGroup(table, identity, labels)
    except PosetError as exc:
        raise InputError(str(exc)) from None


def dump_group(G: FiniteGroup) -> str:
    doc = {
        "order": G.order,
        "identity": G.identity,
        "table": G.table.tolist(),
        "labels": list(G.labels),
    }
    return json.dumps(doc) + "\n"

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nongenerators.builders import random_poset
from nongenerators.fileformats import (
    InputError,
    dump_group,
    dump_moore,
    dump_poset,
    parse_group,
    parse_moore,
    parse_order,
    parse_poset,
)
from nongenerators.groups import catalog

M2 = """{
  "elements": ["0", "a", "b", "1"],
  "covers": [
    ["0", "a"],
    ["0", "b"],
    ["a", "1"],
    ["b", "1"]
  ]
}
"""


def test_parse_poset():
    P = parse_poset(M2)
    assert P.top == "1" and len(P) == 4


@pytest.mark.parametrize("text,line,match", [
    ('{"elements": ["a", "a", "1"],\n "covers": []}', 1, "twice"),
    ('{"elements": ["a", "1"],\n "covers": [\n ["a", "a"]]}', 3, "self-cover"),
    ('{"elements": ["a", "1"],\n "covers": [\n ["a", "z"]]}', 3, "unknown"),
    ('{"elements": ["a", "1"],\n "covers": [["a", "1"],]}', 2, None),
])
def test_rejections_report_lines(text, line, match):
    with pytest.raises(InputError, match=match) as exc:
        parse_poset(text)
    assert exc.value.line == line


@pytest.mark.parametrize("text", [
    '[]',
    '{"covers": []}',
    '{"elements": "ab", "covers": []}',
    '{"elements": ["a"], "covers": [["a"]]}',
    '{"elements": ["a", "b"], "covers": []}',
])
def test_malformed_documents(text):
    with pytest.raises(InputError):
        parse_poset(text)


def test_parse_order_needs_no_top():
    assert parse_order('{"elements": ["x", "y"], "covers": []}') == (["x", "y"], [])


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_poset_round_trip(n, density, seed):
    P = random_poset(n, density, seed)
    assert parse_poset(dump_poset(P)) == P


def test_moore_files():
    text = json.dumps({"ground": ["x", "y", "z"], "closed_sets": [["x", "y"], ["y", "z"]]})
    with pytest.raises(InputError):
        parse_moore(text)
    M = parse_moore(text, complete=True)
    assert parse_moore(dump_moore(M)).closed_sets == M.closed_sets


def test_group_files():
    for G in catalog().values():
        H = parse_group(dump_group(G))
        assert (H.table == G.table).all() and H.labels == G.labels
    with pytest.raises(InputError):
        parse_group('{"order": 2, "identity": 0, "table": [[0, 1]]}')
    with pytest.raises(InputError, match="Latin"):
        parse_group('{"order": 2, "identity": 0, "table": [[0, 1], [0, 1]]}')

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import trees
from treestatus.formats import (
    ParseError,
    format_edge_list,
    format_matrix,
    format_partition,
    format_sequence,
    parse_edge_list,
    parse_instance,
    parse_partition,
    parse_sequence,
    read_graph,
)
from treestatus.graph import Tree
from treestatus.oracle import canonical_form


def test_parse_sequence_separators_and_comments():
    assert parse_sequence("19 18,15\n# comment\n14, 13 11 10  # trailing\n") == [19, 18, 15, 14, 13, 11, 10]


def test_parse_sequence_error_position():
    with pytest.raises(ParseError) as exc:
        parse_sequence("1 2\n3 x4 5\n", "seq.txt")
    err = exc.value
    assert (err.line, err.column, err.source) == (2, 3, "seq.txt")
    assert str(err).startswith("seq.txt:2:3:")


def test_parse_sequence_empty():
    with pytest.raises(ParseError):
        parse_sequence("# nothing\n\n")


def test_parse_instance_positive():
    assert parse_instance("5 6 7") == [5, 6, 7]
    with pytest.raises(ParseError) as exc:
        parse_instance("5 0 7")
    assert exc.value.column == 3


def test_parse_edge_list():
    edges, iso = parse_edge_list("0 1\n# c\n1 2  # trailing\n")
    assert edges == [(0, 1), (1, 2)] and iso == []
    assert parse_edge_list("7\n") == ([], [7])
    with pytest.raises(ParseError) as exc:
        parse_edge_list("0 1\n1 2 3\n")
    assert (exc.value.line, exc.value.column) == (2, 5)
    with pytest.raises(ParseError):
        parse_edge_list("0 -1\n")
    with pytest.raises(ParseError):
        parse_edge_list("\n")


def test_read_graph_k1_roundtrip():
    g = read_graph("4\n", tree=True)
    assert isinstance(g, Tree) and g.n == 1
    assert format_edge_list(g) == "4\n"


def test_partition_and_writers():
    assert parse_partition("0 1 2\n\n3 4 5\n") == [[0, 1, 2], [3, 4, 5]]
    assert format_sequence([3, 5, 5]) == "3 5 5"
    assert format_partition([["a"], [1, 2]]) == "a\n1 2\n"
    assert format_matrix([[Fraction(1, 2), Fraction(3)]]) == "1/2 3\n"


@settings(max_examples=100, deadline=None)
@given(trees(max_n=15))
def test_edge_list_roundtrip(t):
    back = read_graph(format_edge_list(t), tree=True)
    assert canonical_form(back) == canonical_form(t)


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=30))
def test_sequence_roundtrip(values):
    assert parse_sequence(format_sequence(values)) == values

from __future__ import annotations

import pytest

from bidikit import MINUS, build_graph, kl_decomposition
from bidikit.dot import export_dot
from bidikit.errors import PartitionMismatchError

from conftest import make_fx2, make_fx4


def test_four_cycle_with_partition():
    g = make_fx2()
    dot = export_dot(g, kl_decomposition(g, MINUS))
    assert dot.startswith("graph G {")
    assert dot.count("style=solid") == 4
    assert dot.count("style=dashed") == 0
    # two classes -> exactly two fill colours
    colors = {
        line.split('fillcolor="')[1].split('"')[0]
        for line in dot.splitlines()
        if "fillcolor" in line
    }
    assert len(colors) == 2
    assert '"1" -- "2" [label="-/-", style=solid];' in dot


def test_single_arc_dashed_without_colors():
    dot = export_dot(make_fx4())
    assert dot.count("style=dashed") == 1
    assert "fillcolor" not in dot
    assert '"a" -- "b" [label="-/+", style=dashed];' in dot


def test_empty_graph():
    assert export_dot(build_graph([], [])) == "graph G {\n}\n"


def test_deterministic_output():
    g = make_fx2()
    partition = kl_decomposition(g, MINUS)
    assert export_dot(g, partition) == export_dot(g, kl_decomposition(g, MINUS))


def test_partition_mismatch():
    g = make_fx2()
    other = kl_decomposition(make_fx4(), MINUS)
    with pytest.raises(PartitionMismatchError):
        export_dot(g, other)


def test_quoting():
    g = build_graph(['he said "hi"'], [])
    dot = export_dot(g)
    assert '"he said \\"hi\\""' in dot

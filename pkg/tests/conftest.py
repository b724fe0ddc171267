from __future__ import annotations

import random
from pathlib import Path

import pytest

from bidikit import BidirectedGraph, DegreeSpec, build_graph, from_digraph

FIXTURE_DIR = Path(__file__).parent / "fixtures"


# -- named graphs used throughout the suite ---------------------------------

def make_d3() -> BidirectedGraph:
    """Directed 3-cycle a -> b -> c -> a."""
    return from_digraph(
        ["a", "b", "c"],
        [("a", "b"), ("b", "c"), ("c", "a")],
        ids=["e_ab", "e_bc", "e_ca"],
    )


def make_t_minus() -> BidirectedGraph:
    """Triangle with sign - at every edge end."""
    return build_graph(
        ["x", "y", "z"],
        [
            ("e_xy", "x", "y", "-", "-"),
            ("e_yz", "y", "z", "-", "-"),
            ("e_zx", "z", "x", "-", "-"),
        ],
    )


def make_fx2() -> BidirectedGraph:
    """Alternating 4-cycle: e12/e34 all-minus, e23/e41 all-plus."""
    return build_graph(
        ["1", "2", "3", "4"],
        [
            ("e12", "1", "2", "-", "-"),
            ("e23", "2", "3", "+", "+"),
            ("e34", "3", "4", "-", "-"),
            ("e41", "4", "1", "+", "+"),
        ],
    )


def make_fx4() -> BidirectedGraph:
    """Single arc a -> b."""
    return from_digraph(["a", "b"], [("a", "b")], ids=["e_ab"])


def make_c4() -> BidirectedGraph:
    """Plain 4-cycle (signs irrelevant to the factor layer)."""
    return build_graph(
        ["1", "2", "3", "4"],
        [
            ("e12", "1", "2", "+", "+"),
            ("e23", "2", "3", "+", "+"),
            ("e34", "3", "4", "+", "+"),
            ("e41", "4", "1", "+", "+"),
        ],
    )


def make_path_abc() -> tuple[BidirectedGraph, DegreeSpec]:
    g = build_graph(
        ["a", "b", "c"],
        [("e_ab", "a", "b", "+", "+"), ("e_bc", "b", "c", "+", "+")],
    )
    return g, DegreeSpec({"a": 1, "b": 2, "c": 1})


def make_c4_pendant() -> tuple[BidirectedGraph, DegreeSpec]:
    g = build_graph(
        ["1", "2", "3", "4", "5"],
        [
            ("e12", "1", "2", "+", "+"),
            ("e23", "2", "3", "+", "+"),
            ("e34", "3", "4", "+", "+"),
            ("e41", "4", "1", "+", "+"),
            ("e15", "1", "5", "+", "+"),
        ],
    )
    return g, DegreeSpec({"1": 1, "2": 1, "3": 1, "4": 1, "5": 0})


@pytest.fixture
def d3() -> BidirectedGraph:
    return make_d3()


@pytest.fixture
def t_minus() -> BidirectedGraph:
    return make_t_minus()


@pytest.fixture
def fx2() -> BidirectedGraph:
    return make_fx2()


@pytest.fixture
def fx4() -> BidirectedGraph:
    return make_fx4()


@pytest.fixture
def c4() -> BidirectedGraph:
    return make_c4()


# -- random corpora ----------------------------------------------------------

def random_bidirected_graph(
    rng: random.Random, max_vertices: int = 8, max_edges: int = 12
) -> BidirectedGraph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_edges)
    edges = []
    for k in range(m):
        u = rng.randrange(n)
        v = u if rng.random() < 0.08 else rng.randrange(n)
        edges.append(
            (f"e{k}", f"v{u}", f"v{v}", rng.choice("+-"), rng.choice("+-"))
        )
    return build_graph([f"v{i}" for i in range(n)], edges)


def random_digraph(
    rng: random.Random, max_vertices: int = 10, max_arcs: int = 20
) -> BidirectedGraph:
    n = rng.randint(1, max_vertices)
    m = rng.randint(0, max_arcs)
    arcs = [(f"v{rng.randrange(n)}", f"v{rng.randrange(n)}") for _ in range(m)]
    return from_digraph([f"v{i}" for i in range(n)], arcs)


def random_factorizable_instance(
    rng: random.Random,
    max_vertices: int = 7,
    max_edges: int = 10,
    max_b: int = 3,
) -> tuple[BidirectedGraph, DegreeSpec]:
    """Random plain multigraph plus a degree spec with a planted factor:
    b is the degree sequence of a random edge subset, so a factor always
    exists and every value stays <= max_b."""
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(0, max_edges)
        edges = []
        for k in range(m):
            u = rng.randrange(n)
            v = u if rng.random() < 0.08 else rng.randrange(n)
            edges.append((f"e{k}", f"v{u}", f"v{v}", "+", "+"))
        g = build_graph([f"v{i}" for i in range(n)], edges)
        planted = [e for e in g.edges if rng.random() < 0.5]
        degree = {vid: 0 for vid in g.vertices}
        for e in planted:
            degree[e.u] += 1
            degree[e.v] += 1
        if all(x <= max_b for x in degree.values()):
            return g, DegreeSpec(degree)


def bidirected_corpus(seed: int, count: int, **kwargs) -> list[BidirectedGraph]:
    rng = random.Random(seed)
    return [random_bidirected_graph(rng, **kwargs) for _ in range(count)]


def digraph_corpus(seed: int, count: int, **kwargs) -> list[BidirectedGraph]:
    rng = random.Random(seed)
    return [random_digraph(rng, **kwargs) for _ in range(count)]


def factor_corpus(
    seed: int, count: int, **kwargs
) -> list[tuple[BidirectedGraph, DegreeSpec]]:
    rng = random.Random(seed)
    return [random_factorizable_instance(rng, **kwargs) for _ in range(count)]


@pytest.fixture(scope="session")
def small_bidirected_corpus() -> list[BidirectedGraph]:
    return bidirected_corpus(seed=1107, count=60, max_vertices=6, max_edges=9)


@pytest.fixture(scope="session")
def small_digraph_corpus() -> list[BidirectedGraph]:
    return digraph_corpus(seed=1109, count=40, max_vertices=7, max_arcs=12)


@pytest.fixture(scope="session")
def small_factor_corpus() -> list[tuple[BidirectedGraph, DegreeSpec]]:
    return factor_corpus(seed=1111, count=40, max_vertices=6, max_edges=8)

"""
Graph sources for surveys and cross-checks: graph6 files, built-in
enumeration, free-tree census and seeded random corpora.
"""

import sys
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Optional, TextIO, Union

import networkx as nx
from faker import Faker

from app.errors import GraphFormatError
from app.functions.graph_core import Graph, enumerate_connected, from_edge_list, from_graph6, to_graph6

GRAPH6_HEADER = ">>graph6<<"


class CorpusItem(NamedTuple):
    line: Optional[int]
    graph6: str
    graph: Graph


def read_graph6_lines(lines: Iterable[str]) -> Iterator[CorpusItem]:
    """
    Parse graph6 lines, skipping blanks and the optional header.

    Raises:
        GraphFormatError carrying the 1-based line number
    """
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
        if not text:
            continue
        yield CorpusItem(number, text, from_graph6(text, line_number=number))


def read_graph6_file(source: Union[str, Path, TextIO]) -> Iterator[CorpusItem]:
    """'-' reads stdin"""
    if source == "-":
        yield from read_graph6_lines(sys.stdin)
        return
    if hasattr(source, "read"):
        yield from read_graph6_lines(source)
        return
    try:
        handle = open(source, "r", encoding="ascii", errors="strict")
    except OSError as e:
        raise GraphFormatError(f"cannot open {source}: {e}")
    with handle:
        try:
            yield from read_graph6_lines(handle)
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"non-ASCII input in {source}", offset=e.start)


def generated_connected(n: int) -> Iterator[CorpusItem]:
    for g in enumerate_connected(n):
        yield CorpusItem(None, to_graph6(g), g)


def free_trees(n: int) -> Iterator[Graph]:
    """All trees on n vertices up to isomorphism"""
    if n < 1:
        return
    if n == 1:
        yield from_edge_list(1, [])
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph.from_networkx(t)


def _faker(seed: int) -> Faker:
    fake = Faker()
    fake.seed_instance(seed)
    return fake


def random_graphs(count: int, min_n: int, max_n: int, edge_percent: int = 35, seed: int = 7,
                  connected: bool = False) -> Iterator[Graph]:
    """
    Erdos-Renyi style graphs drawn from a seeded Faker instance.

    Args:
        count: Number of graphs
        min_n / max_n: Vertex count range, inclusive
        edge_percent: Chance of each pair being an edge
        seed: Faker seed; the same seed gives the same corpus
        connected: Redraw until connected
    """
    fake = _faker(seed)
    produced = 0
    while produced < count:
        n = fake.random_int(min_n, max_n)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if fake.random_int(0, 99) < edge_percent]
        g = from_edge_list(n, edges)
        if connected and not nx.is_connected(g.to_networkx()):
            continue
        produced += 1
        yield g


def random_forests(count: int, min_n: int, max_n: int, drop_percent: int = 15, seed: int = 11) -> Iterator[Graph]:
    """Random labelled trees from Pruefer sequences, each edge then dropped with the given chance"""
    fake = _faker(seed)
    for _ in range(count):
        n = fake.random_int(max(min_n, 2), max_n)
        sequence = [fake.random_int(0, n - 1) for _ in range(n - 2)]
        tree = nx.from_prufer_sequence(sequence)
        edges = [e for e in tree.edges() if fake.random_int(0, 99) >= drop_percent]
        yield from_edge_list(n, edges)

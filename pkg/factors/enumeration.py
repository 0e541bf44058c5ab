"""
Graph streams for the validation harness.

Exhaustive modes enumerate labeled graphs (no isomorphism reduction) in a
fixed order; random modes are reproducible from their seed.
"""

from __future__ import annotations

import logging
import random
from enum import Enum
from fractions import Fraction
from typing import Iterator

from .conf import path_factor_setting
from .exceptions import GraphError
from .graphs import VERTEX_CAP, Graph, bit

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    ALL = 'all'
    CONNECTED = 'connected'
    RANDOM = 'random'
    RANDOM_CONNECTED = 'random_connected'


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _all_labeled(n: int) -> Iterator[Graph]:
    pairs = _pairs(n)
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for index, (i, j) in enumerate(pairs):
            if code >> index & 1:
                rows[i] |= bit(j)
                rows[j] |= bit(i)
        yield Graph(n, tuple(rows))


def _labeled_with_min_degree(n: int, min_degree: int) -> Iterator[Graph]:
    """Backtrack over vertex pairs, dropping branches where some vertex can no longer reach min_degree"""
    pairs = _pairs(n)
    rows = [0] * n
    degree = [0] * n
    undecided = [n - 1] * n

    def decide(index: int):
        if index == len(pairs):
            yield Graph(n, tuple(rows))
            return
        i, j = pairs[index]
        undecided[i] -= 1
        undecided[j] -= 1
        if degree[i] + undecided[i] >= min_degree and degree[j] + undecided[j] >= min_degree:
            yield from decide(index + 1)
        rows[i] |= bit(j)
        rows[j] |= bit(i)
        degree[i] += 1
        degree[j] += 1
        yield from decide(index + 1)
        rows[i] &= ~bit(j)
        rows[j] &= ~bit(i)
        degree[i] -= 1
        degree[j] -= 1
        undecided[i] += 1
        undecided[j] += 1

    if min_degree <= n - 1:
        yield from decide(0)


def _random_graph(n: int, edge_prob: Fraction, rng: random.Random) -> Graph:
    rows = [0] * n
    for i, j in _pairs(n):
        if rng.random() < edge_prob:
            rows[i] |= bit(j)
            rows[j] |= bit(i)
    return Graph(n, tuple(rows))


def enumerate_graphs(n: int, mode: Mode | str = Mode.ALL, *, count: int = 0,
                     edge_prob: Fraction = Fraction(1, 2), seed: int = 0,
                     min_degree: int = 0) -> Iterator[Graph]:
    """
    Stream graphs on n vertices.

    all / connected: every labeled graph (connected ones only), optionally
    restricted to minimum degree >= min_degree. random / random_connected:
    `count` graphs with independent edge probability edge_prob, drawn from
    random.Random(seed); min_degree and connectivity filter by rejection.
    """
    mode = Mode(mode)
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"Graph order must be a positive integer, got {n!r}")

    if mode in (Mode.ALL, Mode.CONNECTED):
        limit = int(path_factor_setting('EXHAUSTIVE_MAX_ORDER'))
        if n > limit:
            raise GraphError(f"Exhaustive enumeration supports n <= {limit}, got {n}")
        source = _all_labeled(n) if min_degree <= 0 else _labeled_with_min_degree(n, min_degree)
        for g in source:
            if mode == Mode.ALL or g.is_connected():
                yield g
        return

    if n > VERTEX_CAP:
        raise GraphError(f"Random graphs are limited to n <= {VERTEX_CAP}, got {n}")
    if not 0 <= edge_prob <= 1:
        raise GraphError(f"Edge probability {edge_prob} outside [0, 1]")
    rng = random.Random(seed)
    max_attempts = 1000 * max(count, 1)
    attempts = produced = 0
    while produced < count:
        attempts += 1
        if attempts > max_attempts:
            raise GraphError(f"Gave up after {max_attempts} draws: only {produced} of {count} "
                             f"graphs on {n} vertices met the filters at p={edge_prob}")
        g = _random_graph(n, edge_prob, rng)
        if mode == Mode.RANDOM_CONNECTED and not g.is_connected():
            continue
        if min_degree > 0 and min(g.degrees()) < min_degree:
            continue
        produced += 1
        yield g
    logger.debug(f"[ENUM] {produced} random graphs on {n} vertices after {attempts} draws (seed={seed})")

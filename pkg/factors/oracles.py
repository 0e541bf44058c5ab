"""
Definition-level brute-force deciders used to cross-check the fast engines.

These share no code with matching.py or suns.py beyond the Graph type.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .exceptions import GraphError
from .graphs import Graph, bit, iter_bits, lowest_bit, popcount


def brute_force_matching_size(g: Graph, within: int | None = None) -> int:
    """Maximum matching size of G[within] by exhaustive recursion"""

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if popcount(mask) < 2:
            return 0
        v = lowest_bit(mask)
        rest = mask & ~bit(v)
        result = best(rest)
        for u in iter_bits(g.adjacency[v] & rest):
            result = max(result, 1 + best(rest & ~bit(u)))
        return result

    return best(g.full_mask if within is None else within)


def brute_force_is_factor_critical(g: Graph, within: int) -> bool:
    order = popcount(within)
    if order == 0:
        return False
    return all(
        2 * brute_force_matching_size(g, within & ~bit(x)) == order - 1
        for x in iter_bits(within)
    )


def brute_force_is_sun(g: Graph) -> bool:
    """
    Try every candidate core of n/2 vertices: the other vertices must be
    degree-1 pendants on distinct core vertices, and the core factor-critical.
    """
    if not g.is_connected():
        raise GraphError(f"brute_force_is_sun expects a connected graph, got {g}")
    if g.n <= 2:
        return True
    if g.n % 2:
        return False

    for combo in combinations(range(g.n), g.n // 2):
        core = sum(bit(v) for v in combo)
        hooked = 0
        for x in iter_bits(g.full_mask & ~core):
            row = g.adjacency[x]
            if popcount(row) != 1 or not row & core or row & hooked:
                break
            hooked |= row
        else:
            if hooked == core and brute_force_is_factor_critical(g, core):
                return True
    return False

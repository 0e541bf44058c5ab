"""
Sun recognition, sun component counts and the epsilon correction term.

A sun is K1, K2, or a factor-critical core H with one pendant vertex hung
on every core vertex. Cores of big suns have at least three vertices and
minimum degree two, so the pendants of a big sun are exactly its degree-1
vertices; recognition reads the candidate core off the degree sequence
instead of enumerating subsets.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from .conf import strict_checks
from .exceptions import GraphError, InconsistencyError
from .graphs import Graph, VertexSet, bit, iter_bits, lowest_bit, popcount
from .matching import is_factor_critical_within

logger = logging.getLogger(__name__)


class SunKind(str, Enum):
    K1 = 'K1'
    K2 = 'K2'
    BIG_SUN = 'BigSun'
    NOT_SUN = 'NotSun'


@dataclass(frozen=True)
class SunVerdict:
    kind: SunKind
    core: VertexSet | None = None
    # (core vertex, pendant vertex), ascending by core vertex
    pendants: tuple[tuple[int, int], ...] = field(default=())

    @property
    def is_sun(self) -> bool:
        return self.kind != SunKind.NOT_SUN


def _revalidate_big_sun(g: Graph, mask: int, verdict: SunVerdict):
    order = popcount(mask)
    if order % 2 or order < 6:
        raise InconsistencyError(f"Big sun verdict on a component of order {order}")
    core = verdict.core.mask
    if popcount(core) * 2 != order or core & ~mask:
        raise InconsistencyError("Big sun core is not half of the component")
    pendant_mask = 0
    for y, x in verdict.pendants:
        if not (core >> y & 1) or g.adjacency[x] & mask != bit(y):
            raise InconsistencyError(f"Pendant pair ({y}, {x}) is not a degree-1 attachment")
        pendant_mask |= bit(x)
    if pendant_mask != mask & ~core or len(verdict.pendants) != popcount(core):
        raise InconsistencyError("Pendant pairs do not match core and complement")
    if not is_factor_critical_within(g, core):
        raise InconsistencyError("Big sun core is not factor-critical")


def classify_component(g: Graph, mask: int) -> SunVerdict:
    """
    Classify G[mask], which the caller guarantees to be connected.

    Labels in the verdict are those of g.
    """
    order = popcount(mask)
    if order == 1:
        return SunVerdict(SunKind.K1)
    if order == 2:
        return SunVerdict(SunKind.K2)
    if order % 2 or order < 6:
        return SunVerdict(SunKind.NOT_SUN)

    leaves = [v for v in iter_bits(mask) if g.degree_within(v, mask) == 1]
    if len(leaves) * 2 != order:
        return SunVerdict(SunKind.NOT_SUN)

    leaf_mask = sum(bit(v) for v in leaves)
    core = 0
    pairs = []
    for x in leaves:
        y = lowest_bit(g.adjacency[x] & mask)
        if leaf_mask >> y & 1 or core >> y & 1:
            return SunVerdict(SunKind.NOT_SUN)
        core |= bit(y)
        pairs.append((y, x))

    if not is_factor_critical_within(g, core):
        return SunVerdict(SunKind.NOT_SUN)

    verdict = SunVerdict(SunKind.BIG_SUN, VertexSet(g.n, core), tuple(sorted(pairs)))
    if strict_checks():
        _revalidate_big_sun(g, mask, verdict)
    return verdict


def is_sun(g: Graph) -> SunVerdict:
    """Classify a connected graph as K1, K2, a big sun, or not a sun"""
    if not g.is_connected():
        raise GraphError(f"is_sun expects a connected graph; {g} has "
                         f"{len(g.component_masks())} components")
    return classify_component(g, g.full_mask)


def sun_component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Masks of the sun components of G[within]"""
    return [
        mask for mask in g.component_masks(within)
        if classify_component(g, mask).is_sun
    ]


def count_suns_within(g: Graph, within: int) -> int:
    return len(sun_component_masks(g, within))


def sun_count(g: Graph) -> tuple[int, list[VertexSet]]:
    suns = [VertexSet(g.n, mask) for mask in sun_component_masks(g)]
    return len(suns), suns


def epsilon_mask(g: Graph, x: int) -> int:
    if not g.is_independent(x):
        return 2
    if x == 0:
        return 0
    rest = g.full_mask & ~x
    for component in g.component_masks(rest):
        if not classify_component(g, component).is_sun:
            return 1
    return 0


def epsilon(g: Graph, x: VertexSet) -> int:
    """
    The correction term of the covered-graph criterion:
    2 if X spans an edge, 1 if X is a nonempty independent set and G - X has
    a non-sun component, 0 otherwise.
    """
    if x.n != g.n:
        raise GraphError(f"Vertex set over {x.n} vertices used with a graph on {g.n}")
    return epsilon_mask(g, x.mask)

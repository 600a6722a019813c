"""Quivers of dessins, special cycles and the face decomposition.

Arrows are identified by their half-edge label. White vertices are identified
by the sorted support of their alpha-cycle, so a dessin and its duals share
one vertex set.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable, Mapping

from brauer_dessins.dessin import Dessin
from brauer_dessins.permutation import cycles

Vertex = tuple[int, ...]


@dataclass(frozen=True)
class Arrow:
    half_edge: int
    source: Vertex
    target: Vertex
    black_vertex: int
    position: int
    formal: bool

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, half_edge: int) -> Arrow:
        for a in self.arrows:
            if a.half_edge == half_edge:
                return a
        raise KeyError(half_edge)

    def arrow_map(self) -> dict[int, Arrow]:
        return {a.half_edge: a for a in self.arrows}

    def loops(self) -> list[Arrow]:
        return [a for a in self.arrows if a.is_loop]


@dataclass(frozen=True)
class SpecialCycle:
    black_vertex: int
    start_vertex: Vertex
    arrows: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arrows)


def white_vertex_map(d: Dessin) -> dict[int, Vertex]:
    """Half-edge label -> the white vertex (sorted alpha-cycle) containing it."""
    out = {}
    for c in cycles(d.alpha):
        v = tuple(sorted(c))
        for i in c:
            out[i] = v
    return out


def white_vertices(d: Dessin) -> tuple[Vertex, ...]:
    return tuple(sorted({tuple(sorted(c)) for c in cycles(d.alpha)}))


def black_vertices(d: Dessin) -> list[tuple[int, ...]]:
    """Sigma-cycles; the index in this list is the black-vertex id."""
    return cycles(d.sigma)


def full_quiver(d: Dessin) -> Quiver:
    white = white_vertex_map(d)
    arrows = []
    for b, cyc in enumerate(black_vertices(d)):
        for pos, i in enumerate(cyc):
            arrows.append(Arrow(i, white[i], white[d.sigma(i)], b, pos, len(cyc) == 1))
    arrows.sort(key=lambda a: a.half_edge)
    return Quiver(white_vertices(d), tuple(arrows))


def restricted_quiver(d: Dessin) -> Quiver:
    """The full quiver without formal loops (those of degree-1 black vertices)."""
    q = full_quiver(d)
    return Quiver(q.vertices, tuple(a for a in q.arrows if not a.formal))


def opposite(q: Quiver) -> Quiver:
    return Quiver(q.vertices, tuple(replace(a, source=a.target, target=a.source) for a in q.arrows))


def special_cycles(d: Dessin, include_formal: bool = False) -> list[SpecialCycle]:
    """Every rotation of every sigma-cycle, tagged with its starting white vertex."""
    white = white_vertex_map(d)
    out = []
    for b, cyc in enumerate(black_vertices(d)):
        if len(cyc) < 2 and not include_formal:
            continue
        for s in range(len(cyc)):
            rot = cyc[s:] + cyc[:s]
            out.append(SpecialCycle(b, white[rot[0]], rot))
    return out


def special_cycles_at(d: Dessin, vertex: Vertex, include_formal: bool = False) -> list[SpecialCycle]:
    return [c for c in special_cycles(d, include_formal) if c.start_vertex == vertex]


def face_cycle_decomposition(d: Dessin) -> list[tuple[int, ...]]:
    """One closed arrow walk of the full quiver per face.

    The arrow labelled ``i`` ends at the white vertex of the phi-predecessor
    of ``i``, so each walk follows ``phi^-1`` around its face.
    """
    phi_inv = d.phi.inverse()
    out = []
    for cyc in cycles(d.phi):
        walk = [cyc[0]]
        while len(walk) < len(cyc):
            walk.append(phi_inv(walk[-1]))
        out.append(tuple(walk))
    return out


def is_closed_walk(q: Quiver, walk: Iterable[int]) -> bool:
    arrows = q.arrow_map()
    walk = list(walk)
    for a, b in zip(walk, walk[1:] + walk[:1]):
        if arrows[a].target != arrows[b].source:
            return False
    return True


def check_face_decomposition(d: Dessin) -> bool:
    """Faces split the full quiver into disjoint closed walks of face-degree length."""
    q = full_quiver(d)
    walks = face_cycle_decomposition(d)
    labels = [i for w in walks for i in w]
    if sorted(labels) != [a.half_edge for a in q.arrows]:
        return False
    if Counter(len(w) for w in walks) != Counter(len(c) for c in cycles(d.phi)):
        return False
    return all(is_closed_walk(q, w) for w in walks)


def polygonal_face_paths(d: Dessin) -> list[tuple[int, ...]]:
    """Arrow cycles of the faces whose corners are all distinct.

    A face of degree at least 2 is polygonal when each of its black corners and
    each of its white corners belongs to a different vertex, and every such
    vertex has degree at least 2 (so it meets the face in two distinct
    half-edges). The returned walk is the face's arrow cycle.
    """
    black = {}
    for b, cyc in enumerate(black_vertices(d)):
        for i in cyc:
            black[i] = (b, len(cyc))
    white = white_vertex_map(d)
    out = []
    for walk in face_cycle_decomposition(d):
        if len(walk) < 2:
            continue
        bs = [black[i] for i in walk]
        ws = [white[i] for i in walk]
        if len({b for b, _ in bs}) != len(walk) or len(set(ws)) != len(walk):
            continue
        if any(deg < 2 for _, deg in bs) or any(len(w) < 2 for w in ws):
            continue
        out.append(walk)
    return out


def quiver_equal(q1: Quiver, q2: Quiver, up_to: str = "labelled", ignore_formal: bool = True) -> bool:
    """Compare quivers over the identity map on vertices.

    ``labelled``: every half-edge label has the same endpoints in both.
    ``unlabelled``: the multisets of (source, target) pairs agree, i.e. some
    endpoint-preserving bijection of arrows exists.
    """
    if q1.vertices != q2.vertices:
        return False
    if up_to == "labelled":
        def key(a):
            return (a.half_edge, a.source, a.target) + (() if ignore_formal else (a.formal,))

        return sorted(map(key, q1.arrows)) == sorted(map(key, q2.arrows))
    if up_to == "unlabelled":
        return Counter((a.source, a.target) for a in q1.arrows) == Counter(
            (a.source, a.target) for a in q2.arrows
        )
    raise ValueError(f"up_to must be 'labelled' or 'unlabelled', not {up_to!r}")


def arrows_correspond(q1: Quiver, q2: Quiver, bijection: Mapping[int, int]) -> bool:
    """True if arrow ``i`` of q1 and arrow ``bijection[i]`` of q2 share endpoints."""
    a1, a2 = q1.arrow_map(), q2.arrow_map()
    if sorted(bijection) != sorted(a1) or sorted(bijection.values()) != sorted(a2):
        return False
    return all(
        (a1[i].source, a1[i].target) == (a2[j].source, a2[j].target) for i, j in bijection.items()
    )

"""The Brauer configuration algebra of a dessin.

The algebra is ``K Q_D / I_D`` where ``Q_D`` is the restricted quiver and
``I_D`` is generated by three families of relations. Its basis consists of
the trivial paths, the proper subpaths of special cycles, and one socle
element per white vertex; products of basis elements are again basis
elements or zero, so the whole multiplication is a lookup table.

Paths are written left to right: ``ab`` means arrow ``a`` followed by ``b``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Optional, Union

import numpy as np

from brauer_dessins import _accel, linalg
from brauer_dessins.dessin import Dessin
from brauer_dessins.quiver import (
    Quiver,
    SpecialCycle,
    Vertex,
    black_vertices,
    restricted_quiver,
    special_cycles,
    white_vertex_map,
    white_vertices,
)

DEFAULT_MAX_DIM = 512


class DimensionBoundExceeded(ValueError):
    """The algebra is too large for the brute-force centre computation."""


@dataclass(frozen=True, order=True)
class Trivial:
    vertex: Vertex


@dataclass(frozen=True, order=True)
class ProperPath:
    """``length`` consecutive arrows of black vertex ``black`` from ``start``."""

    black: int
    start: int
    length: int


@dataclass(frozen=True, order=True)
class Socle:
    """The common class of all full special cycles at ``vertex``."""

    vertex: Vertex


BasisElement = Union[Trivial, ProperPath, Socle]
# linear combinations of basis elements
Element = dict


class RelationKind(Enum):
    TYPE_ONE = "type_one"
    TYPE_TWO = "type_two"
    TYPE_THREE = "type_three"


@dataclass(frozen=True)
class Relation:
    """A generator of ``I_D``.

    ``terms`` holds arrow-label paths: ``(C_j, C_k)`` for the binomial
    ``C_j - C_k``, ``(C a,)`` for type two and ``((a, b),)`` for type three.
    """

    kind: RelationKind
    terms: tuple[tuple[int, ...], ...]
    vertex: Vertex
    cycles: tuple[SpecialCycle, ...] = ()

    @property
    def path_lengths(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.terms)


@dataclass(frozen=True)
class CentreResult:
    dim: int
    basis: list[Element] = field(default_factory=list)


class AlgebraPresentation:
    """Quiver, relations, basis and multiplication table of one dessin."""

    def __init__(self, d: Dessin):
        self.dessin = d
        self.quiver: Quiver = restricted_quiver(d)
        self._white = white_vertex_map(d)
        self._cycles = black_vertices(d)
        self.vertices = white_vertices(d)
        socle_vertices = sorted({c.start_vertex for c in special_cycles(d, include_formal=True)})
        basis: list[BasisElement] = [Trivial(v) for v in self.vertices]
        for b, cyc in enumerate(self._cycles):
            ell = len(cyc)
            if ell < 2:
                continue
            for s in range(ell):
                basis.extend(ProperPath(b, s, k) for k in range(1, ell))
        basis.extend(Socle(v) for v in socle_vertices)
        self.basis: tuple[BasisElement, ...] = tuple(basis)
        self.index = {x: k for k, x in enumerate(self.basis)}
        self._arrow_pos = {}
        for b, cyc in enumerate(self._cycles):
            for s, i in enumerate(cyc):
                self._arrow_pos[i] = (b, s)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- endpoints -----------------------------------------------------------

    def source(self, x: BasisElement) -> Vertex:
        if isinstance(x, ProperPath):
            return self._white[self._cycles[x.black][x.start]]
        return x.vertex

    def target(self, x: BasisElement) -> Vertex:
        if isinstance(x, ProperPath):
            cyc = self._cycles[x.black]
            return self._white[cyc[(x.start + x.length) % len(cyc)]]
        return x.vertex

    def arrows(self, x: BasisElement) -> tuple[int, ...]:
        """A representative path; a socle is represented by its first special cycle."""
        if isinstance(x, Trivial):
            return ()
        if isinstance(x, ProperPath):
            cyc = self._cycles[x.black]
            return tuple(cyc[(x.start + t) % len(cyc)] for t in range(x.length))
        for c in special_cycles(self.dessin, include_formal=True):
            if c.start_vertex == x.vertex:
                return c.arrows
        raise AssertionError("socle without a special cycle")

    def arrow(self, label: int) -> ProperPath:
        b, s = self._arrow_pos[label]
        if len(self._cycles[b]) < 2:
            raise ValueError(f"arrow {label} is a formal loop and not in Q_D")
        return ProperPath(b, s, 1)

    def label(self, x: BasisElement) -> str:
        if isinstance(x, Trivial):
            return "e" + _vertex_name(x.vertex)
        if isinstance(x, Socle):
            return "soc" + _vertex_name(x.vertex)
        return "*".join(f"a{i}" for i in self.arrows(x))

    # -- multiplication ------------------------------------------------------

    def _product(self, x: BasisElement, y: BasisElement) -> Optional[BasisElement]:
        if isinstance(x, Trivial):
            return y if self.source(y) == x.vertex else None
        if isinstance(y, Trivial):
            return x if self.target(x) == y.vertex else None
        if isinstance(x, Socle) or isinstance(y, Socle):
            return None
        if x.black != y.black:
            return None
        ell = len(self._cycles[x.black])
        if y.start != (x.start + x.length) % ell:
            return None
        total = x.length + y.length
        if total < ell:
            return ProperPath(x.black, x.start, total)
        if total == ell:
            return Socle(self.source(x))
        return None

    def multiply(self, x: BasisElement, y: BasisElement) -> Optional[BasisElement]:
        """Product ``x * y`` as a basis element, or None for zero."""
        for z in (x, y):
            if z not in self.index:
                raise ValueError(f"{z!r} is not a basis element of this algebra")
        return self._product(x, y)

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``basis[i] * basis[j]``, or -1."""
        d = self.dim
        t = np.full((d, d), -1, dtype=np.int64)
        for i, x in enumerate(self.basis):
            for j, y in enumerate(self.basis):
                z = self._product(x, y)
                if z is not None:
                    t[i, j] = self.index[z]
        t.setflags(write=False)
        return t

    def evaluate_path(self, labels) -> Optional[BasisElement]:
        """Image in the algebra of the path through the given arrows."""
        labels = list(labels)
        if not labels:
            raise ValueError("empty path has no well-defined vertex")
        acc: Optional[BasisElement] = self.arrow(labels[0])
        for i in labels[1:]:
            if acc is None:
                return None
            acc = self._product(acc, self.arrow(i))
        return acc

    def multiply_elements(self, x: Element, y: Element) -> Element:
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                z = self._product(a, b)
                if z is not None:
                    out[z] = out.get(z, 0) + ca * cb
        return {k: v for k, v in out.items() if v}

    @cached_property
    def identity(self) -> Element:
        return {Trivial(v): 1 for v in self.vertices}

    def generators(self) -> list[BasisElement]:
        """Trivial paths and arrows of Q_D; they generate the algebra as an algebra."""
        gens: list[BasisElement] = [Trivial(v) for v in self.vertices]
        gens.extend(self.arrow(a.half_edge) for a in self.quiver.arrows)
        return gens

    def commutes_with_generators(self, x: Element) -> bool:
        for g in self.generators():
            if self.multiply_elements(x, {g: 1}) != self.multiply_elements({g: 1}, x):
                return False
        return True

    # -- relations -----------------------------------------------------------

    @cached_property
    def relations(self) -> tuple[Relation, ...]:
        return tuple(_relations(self))

    def relations_of(self, kind: RelationKind) -> list[Relation]:
        return [r for r in self.relations if r.kind is kind]


def _vertex_name(v: Vertex) -> str:
    return "{" + ",".join(map(str, v)) + "}"


def _relations(alg: AlgebraPresentation) -> list[Relation]:
    d = alg.dessin
    cyc_key = {}
    for c in special_cycles(d):
        cyc_key[c] = (c.start_vertex, c.black_vertex, alg._arrow_pos[c.arrows[0]][1])
    ordered = sorted(cyc_key, key=cyc_key.get)

    out: list[Relation] = []
    for v in alg.vertices:
        at_v = [c for c in ordered if c.start_vertex == v]
        for cj, ck in itertools.combinations(at_v, 2):
            out.append(Relation(RelationKind.TYPE_ONE, (cj.arrows, ck.arrows), v, (cj, ck)))
    for c in ordered:
        out.append(Relation(RelationKind.TYPE_TWO, (c.arrows + c.arrows[:1],), c.start_vertex, (c,)))

    arrows = sorted(alg.quiver.arrows, key=lambda a: (a.source, a.black_vertex, a.position))
    for a in arrows:
        for b in arrows:
            if a.target != b.source:
                continue
            if d.sigma(a.half_edge) == b.half_edge:
                continue  # consecutive inside a special cycle
            out.append(Relation(RelationKind.TYPE_THREE, ((a.half_edge, b.half_edge),), a.source))
    return out


@lru_cache(maxsize=4096)
def presentation(d: Dessin) -> AlgebraPresentation:
    return AlgebraPresentation(d)


def relations(d: Dessin) -> list[Relation]:
    return list(presentation(d).relations)


def basis(d: Dessin) -> list[BasisElement]:
    return list(presentation(d).basis)


def multiply(d: Dessin, x: BasisElement, y: BasisElement) -> Optional[BasisElement]:
    return presentation(d).multiply(x, y)


def dimension_formula(d: Dessin) -> int:
    """``2 |Q_0| + sum l (l - 1)`` over the black vertices (degree 1 adds 0)."""
    q0 = len(white_vertices(d))
    return 2 * q0 + sum(len(c) * (len(c) - 1) for c in black_vertices(d))


def non_formal_loops(d: Dessin) -> list[int]:
    """Half-edges whose arrow in Q_D is a loop."""
    return [a.half_edge for a in restricted_quiver(d).arrows if a.is_loop]


def centre_basis_formula(d: Dessin) -> list[Element]:
    """Identity, one socle per white vertex, and every loop of Q_D."""
    alg = presentation(d)
    out = [dict(alg.identity)]
    out.extend({x: 1} for x in alg.basis if isinstance(x, Socle))
    out.extend({alg.arrow(i): 1} for i in non_formal_loops(d))
    return out


def centre_dimension_formula(d: Dessin) -> int:
    return 1 + len(white_vertices(d)) + len(non_formal_loops(d))


def default_max_dim() -> int:
    raw = os.environ.get("DESSIN_MAX_DIM")
    return int(raw) if raw else DEFAULT_MAX_DIM


def centre_bruteforce(d: Dessin, max_dim: Optional[int] = None) -> CentreResult:
    """Centre of the algebra by exact linear algebra on the structure constants.

    Solves ``x g = g x`` for every generator ``g`` (trivial paths and arrows);
    since these generate the algebra, the solution space is the centre.
    """
    alg = presentation(d)
    bound = default_max_dim() if max_dim is None else max_dim
    dim = alg.dim
    if dim > bound:
        raise DimensionBoundExceeded(f"algebra has dimension {dim} > bound {bound}")
    table = alg.table
    rows = []
    for g in alg.generators():
        gi = alg.index[g]
        block = np.zeros((dim, dim), dtype=np.int64)
        right, left = table[:, gi], table[gi, :]
        cols = np.arange(dim)
        np.add.at(block, (right[right >= 0], cols[right >= 0]), 1)
        np.subtract.at(block, (left[left >= 0], cols[left >= 0]), 1)
        rows.extend(tuple(int(v) for v in r) for r in block if r.any())
    vecs = linalg.nullspace(sorted(set(rows)), dim)
    elements = [{alg.basis[k]: c for k, c in enumerate(v) if c} for v in vecs]
    return CentreResult(len(vecs), elements)


def zero_product_check(d: Dessin) -> bool:
    """Products of socle elements of the centre formula all vanish."""
    alg = presentation(d)
    socles = [x for x in alg.basis if isinstance(x, Socle)]
    return all(alg.multiply(x, y) is None for x in socles for y in socles)


def zero_product_loop_exceptions(d: Dessin) -> list[tuple[BasisElement, BasisElement]]:
    """Pairs of non-identity centre-formula elements, one a loop, with nonzero product."""
    alg = presentation(d)
    loops = [alg.arrow(i) for i in non_formal_loops(d)]
    others = [x for x in alg.basis if isinstance(x, Socle)] + loops
    bad = []
    for x in loops:
        for y in others:
            for p, q in ((x, y), (y, x)):
                if alg.multiply(p, q) is not None and (p, q) not in bad:
                    bad.append((p, q))
    return bad


def centres_isomorphic_by_formula(d1: Dessin, d2: Dessin) -> bool:
    """Centre isomorphism as derived from equal formula dimensions."""
    return centre_dimension_formula(d1) == centre_dimension_formula(d2)


def associativity_failures(d: Dessin, backend: Optional[str] = None) -> int:
    return _accel.associativity_failures(presentation(d).table, backend=backend)


def is_quadratic(d: Dessin) -> bool:
    """All type-one and type-three generators have path length 2."""
    return all(
        all(n == 2 for n in r.path_lengths)
        for r in presentation(d).relations
        if r.kind is not RelationKind.TYPE_TWO
    )

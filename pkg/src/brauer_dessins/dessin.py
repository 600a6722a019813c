"""Dessins d'enfants as transitive permutation triples."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from brauer_dessins import _accel
from brauer_dessins.permutation import DegreeMismatchError, Permutation, compose, cycles, orbits


class NotTransitiveError(ValueError):
    """``<sigma, alpha>`` has more than one orbit on the half-edges."""


class InvalidDessinError(ValueError):
    """The triple does not multiply to the identity."""


@dataclass(frozen=True)
class Passport:
    """Degree data of a dessin; multisets are stored as descending tuples."""

    black_degrees: tuple[int, ...]
    white_degrees: tuple[int, ...]
    face_degrees: tuple[int, ...]
    genus: int

    def as_dict(self) -> dict:
        return {
            "black_degrees": list(self.black_degrees),
            "white_degrees": list(self.white_degrees),
            "face_degrees": list(self.face_degrees),
            "genus": self.genus,
        }


@dataclass(frozen=True)
class Dessin:
    """A triple ``(sigma, alpha, phi)`` with ``sigma * alpha * phi == 1``.

    ``sigma`` cycles are black vertices, ``alpha`` cycles white vertices and
    ``phi`` cycles faces. Construction validates the product relation and
    transitivity; use :func:`new_dessin` to derive ``phi``.
    """

    sigma: Permutation
    alpha: Permutation
    phi: Permutation

    def __post_init__(self):
        n = self.sigma.n
        if self.alpha.n != n or self.phi.n != n:
            raise DegreeMismatchError(
                f"degrees differ: sigma {n}, alpha {self.alpha.n}, phi {self.phi.n}"
            )
        if not compose(compose(self.sigma, self.alpha), self.phi).is_identity():
            raise InvalidDessinError("sigma * alpha * phi is not the identity")
        if len(orbits(n, [self.sigma, self.alpha])) != 1:
            raise NotTransitiveError("<sigma, alpha> is not transitive")

    @property
    def n(self) -> int:
        return self.sigma.n

    def triple(self) -> tuple[Permutation, Permutation, Permutation]:
        return self.sigma, self.alpha, self.phi

    def relabel(self, g: Permutation) -> Dessin:
        """Simultaneous conjugation by ``g``."""
        return Dessin(self.sigma.conjugate(g), self.alpha.conjugate(g), self.phi.conjugate(g))

    def __repr__(self) -> str:
        return f"Dessin(n={self.n}, sigma={self.sigma.cycle_string()!r}, alpha={self.alpha.cycle_string()!r})"


def new_dessin(n: int, sigma: Permutation, alpha: Permutation) -> Dessin:
    """Dessin with ``phi = (sigma alpha)^-1``."""
    if sigma.n != n or alpha.n != n:
        raise DegreeMismatchError(f"expected degree {n}, got {sigma.n} and {alpha.n}")
    return Dessin(sigma, alpha, compose(sigma, alpha).inverse())


def from_cycles(n: int, sigma_cycles, alpha_cycles) -> Dessin:
    return new_dessin(n, Permutation.from_cycles(n, sigma_cycles), Permutation.from_cycles(n, alpha_cycles))


def passport(d: Dessin) -> Passport:
    def degs(p):
        return tuple(sorted((len(c) for c in cycles(p)), reverse=True))

    black, white, faces = degs(d.sigma), degs(d.alpha), degs(d.phi)
    euler = len(black) + len(white) - d.n + len(faces)
    if euler % 2:
        raise InvalidDessinError("odd Euler characteristic")
    return Passport(black, white, faces, (2 - euler) // 2)


def dual(d: Dessin) -> Dessin:
    """Swap black vertices and faces: ``(phi^-1, alpha^-1, sigma^-1)``."""
    return Dessin(d.phi.inverse(), d.alpha.inverse(), d.sigma.inverse())


def mirror(d: Dessin) -> Dessin:
    """Orientation reversal ``(sigma^-1, alpha^-1, alpha sigma)``."""
    return Dessin(d.sigma.inverse(), d.alpha.inverse(), compose(d.alpha, d.sigma))


def oriented_dual(d: Dessin) -> Dessin:
    """``mirror(dual(d))``, i.e. ``(phi, alpha, alpha^-1 phi^-1)``.

    Its full quiver is the opposite of the full quiver of ``d``.
    """
    return mirror(dual(d))


def _zero_based(p: Permutation) -> np.ndarray:
    return np.asarray(p.image, dtype=np.int64) - 1


def canonical_form(d: Dessin, backend: Optional[str] = None) -> Dessin:
    """Least ``(sigma.image, alpha.image)`` over all relabellings of ``d``.

    Brute force over S_n, so only practical for n <= 7 or so.
    """
    s, a = _accel.canonical_pair(_zero_based(d.sigma), _zero_based(d.alpha), backend=backend)
    return new_dessin(d.n, Permutation(tuple(int(x) + 1 for x in s)), Permutation(tuple(int(x) + 1 for x in a)))


def canonical_key(d: Dessin, backend: Optional[str] = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    c = canonical_form(d, backend=backend)
    return c.sigma.image, c.alpha.image


def is_isomorphic(d1: Dessin, d2: Dessin) -> bool:
    if d1.n != d2.n:
        return False
    if passport(d1) != passport(d2):
        return False
    return _conjugator(d1, d2) is not None


def _conjugator(d1: Dessin, d2: Dessin) -> Optional[Permutation]:
    """A ``g`` with ``d1.relabel(g) == d2``, or None.

    A relabelling of a transitive pair is fixed by the image of label 1, so
    it suffices to try the n possible images and propagate along sigma, alpha.
    """
    n = d1.n
    gens1 = (d1.sigma, d1.alpha)
    gens2 = (d2.sigma, d2.alpha)
    for target in range(1, n + 1):
        g = {1: target}
        stack = [1]
        ok = True
        while stack and ok:
            i = stack.pop()
            for p1, p2 in zip(gens1, gens2):
                j, gj = p1(i), p2(g[i])
                if j in g:
                    if g[j] != gj:
                        ok = False
                        break
                else:
                    g[j] = gj
                    stack.append(j)
        if ok and len(set(g.values())) == n:
            return Permutation(tuple(g[i] for i in range(1, n + 1)))
    return None


# ---------------------------------------------------------------------------
# named families


def trivial() -> Dessin:
    """The one-edge dessin of ``z`` on the sphere."""
    return new_dessin(1, Permutation.identity(1), Permutation.identity(1))


def nakayama(n: int) -> Dessin:
    """``z^n``: one black vertex of degree n, n white vertices of degree 1."""
    if n < 2:
        raise ValueError("nakayama(n) needs n >= 2")
    return from_cycles(n, [tuple(range(1, n + 1))], [])


def polygon(n: int) -> Dessin:
    """The bipartite 2n-gon on the sphere."""
    if n < 3:
        raise ValueError("polygon(n) needs n >= 3")
    m = 2 * n
    sigma = [(2 * k + 1, 2 * k + 2) for k in range(n)]
    alpha = [(2 * k + 2, (2 * k + 3 - 1) % m + 1) for k in range(n)]
    return from_cycles(m, sigma, alpha)


def star(n: int) -> Dessin:
    """One white vertex of degree n, n black leaves."""
    if n < 1:
        raise ValueError("star(n) needs n >= 1")
    return from_cycles(n, [], [tuple(range(1, n + 1))])


def example_fig1() -> Dessin:
    return from_cycles(
        11,
        [(1, 2, 3, 4, 5), (6, 7), (8, 9)],
        [(2, 10, 11), (3, 6, 9), (4, 5), (7, 8)],
    )


def example_3() -> Dessin:
    """The Fig. 1 dessin with an extra half-edge 12 at the white vertex of 1."""
    return from_cycles(
        12,
        [(1, 2, 3, 4, 5), (6, 7), (8, 9)],
        [(1, 12), (2, 10, 11), (3, 6, 9), (4, 5), (7, 8)],
    )

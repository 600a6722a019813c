"""Permutations of {1, ..., n} acting on the right.

Composition follows the right-action convention used throughout the
package: ``i^(pq) = (i^p)^q``, i.e. ``compose(p, q)`` applies ``p`` first.
With this convention a dessin triple satisfies ``sigma * alpha * phi == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DegreeMismatchError(ValueError):
    """Two permutations (or a permutation and a dessin) disagree on n."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``image[i - 1]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        n = len(image)
        if n < 1:
            raise ValueError("a permutation needs degree n >= 1")
        if sorted(image) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {image}")
        object.__setattr__(self, "image", image)

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from disjoint cycles; omitted labels are fixed points."""
        image = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError(f"label {x} out of range 1..{n}")
                if x in seen:
                    raise ValueError(f"label {x} repeated")
                seen.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                image[a - 1] = b
        return cls(tuple(image))

    @classmethod
    def parse(cls, n: int, text: str) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 5 4)"``; empty means identity."""
        from brauer_dessins.workbench import parse_cycles

        return cls.from_cycles(n, parse_cycles(text, n))

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.image, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.image, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in cycles(self)), reverse=True))

    def conjugate(self, g: Permutation) -> Permutation:
        """Return ``g^-1 * self * g``, the relabelling of self by ``g``."""
        if g.n != self.n:
            raise DegreeMismatchError(f"degrees {self.n} and {g.n} differ")
        image = [0] * self.n
        for i in range(1, self.n + 1):
            image[g(i) - 1] = g(self(i))
        return Permutation(tuple(image))

    def cycle_string(self) -> str:
        """Cycle notation with fixed points dropped; ``"()"`` for the identity."""
        parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(self) if len(c) > 1]
        return "".join(parts) if parts else "()"

    def __str__(self) -> str:
        return self.cycle_string()

    def __repr__(self) -> str:
        return f"Permutation({self.n}, {self.cycle_string()!r})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``: the result sends ``i`` to ``q(p(i))``."""
    if p.n != q.n:
        raise DegreeMismatchError(f"degrees {p.n} and {q.n} differ")
    return Permutation(tuple(q.image[x - 1] for x in p.image))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """All cycles of ``p`` including fixed points.

    Each cycle starts at its least label and cycles are ordered by that label.
    """
    seen = [False] * (p.n + 1)
    out = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p(i)
        out.append(tuple(cyc))
    return out


def orbits(n: int, gens: Sequence[Permutation]) -> list[frozenset[int]]:
    """Orbits of the group generated by ``gens`` on {1..n}."""
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for g in gens:
                j = g(i)
                if not seen[j]:
                    seen[j] = True
                    orbit.append(j)
                    stack.append(j)
        out.append(frozenset(orbit))
    return out

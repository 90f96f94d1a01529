"""The simplex category and the interval category as exact combinatorics.

A morphism ``[n] -> [m]`` is stored as its image sequence.  Composition is
pointwise, so equality of morphisms is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator

from .errors import (
    DegreeMismatch,
    IndexOutOfRange,
    NotMonotone,
    OutOfRange,
    WrongLength,
    check_limit,
)

FACE = "face"
DEGENERACY = "degeneracy"


@dataclass(frozen=True, order=True)
class OrdinalMap:
    """A weakly monotone map ``[src] -> [tgt]``.

    The constructor does not validate; use :func:`make_ordinal_map` for
    untrusted input.
    """

    src: int
    tgt: int
    images: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.images[i]

    @property
    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.images, self.images[1:]))

    @property
    def is_surjective(self) -> bool:
        return set(self.images) == set(range(self.tgt + 1))

    def to_json(self) -> dict:
        return {"cat": "delta", "src": self.src, "tgt": self.tgt, "images": list(self.images)}


@dataclass(frozen=True, order=True)
class EndpointMap:
    """A morphism of the interval category: monotone, preserving both endpoints."""

    src: int
    tgt: int
    images: tuple[int, ...]

    def to_json(self) -> dict:
        return {"cat": "nabla", "src": self.src, "tgt": self.tgt, "images": list(self.images)}


def _check_images(n: int, m: int, images) -> tuple[int, ...]:
    images = tuple(int(v) for v in images)
    if n < 0 or m < 0:
        raise OutOfRange(f"negative object [{min(n, m)}]")
    if len(images) != n + 1:
        raise WrongLength(f"expected {n + 1} images, got {len(images)}", index=min(len(images), n + 1))
    for i, v in enumerate(images):
        if not 0 <= v <= m:
            raise OutOfRange(f"image {v} at index {i} outside [0, {m}]", index=i)
    for i in range(1, len(images)):
        if images[i] < images[i - 1]:
            raise NotMonotone(f"images decrease at index {i}", index=i)
    return images


def make_ordinal_map(n: int, m: int, images) -> OrdinalMap:
    return OrdinalMap(n, m, _check_images(n, m, images))


def make_endpoint_map(n: int, m: int, images) -> EndpointMap:
    if n < 1 or m < 1:
        raise OutOfRange("interval category objects start at [1]")
    images = _check_images(n, m, images)
    if images[0] != 0:
        raise OutOfRange("first vertex must map to 0", index=0)
    if images[-1] != m:
        raise OutOfRange(f"last vertex must map to {m}", index=n)
    return EndpointMap(n, m, images)


def identity(n: int) -> OrdinalMap:
    return OrdinalMap(n, n, tuple(range(n + 1)))


def face(n: int, i: int) -> OrdinalMap:
    """``d_i : [n-1] -> [n]``, the injection skipping ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRange(f"face({n}, {i}) needs n >= 1 and 0 <= i <= n", index=i)
    return OrdinalMap(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy(n: int, i: int) -> OrdinalMap:
    """``s_i : [n+1] -> [n]``, hitting ``i`` twice."""
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRange(f"degeneracy({n}, {i}) needs 0 <= i <= n", index=i)
    return OrdinalMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))


def compose_ordinal(g: OrdinalMap, f: OrdinalMap) -> OrdinalMap:
    """Return ``g o f``."""
    if f.tgt != g.src:
        raise DegreeMismatch(f"cannot compose [{g.src}]->[{g.tgt}] after [{f.src}]->[{f.tgt}]")
    gi = g.images
    return OrdinalMap(f.src, g.tgt, tuple(gi[v] for v in f.images))


def generator(kind: str, n: int, i: int) -> OrdinalMap:
    if kind == FACE:
        return face(n, i)
    if kind == DEGENERACY:
        return degeneracy(n, i)
    raise ValueError(f"unknown generator kind {kind!r}")


def decompose_generators(f: OrdinalMap) -> list[tuple[str, int, int]]:
    """Factor ``f`` into generators, listed in order of application.

    Degeneracies come first with descending index, then faces with ascending
    index.  Each entry ``(kind, n, i)`` rebuilds via ``face(n, i)`` or
    ``degeneracy(n, i)``.
    """
    imgs = f.images
    repeats = [j for j in range(f.src) if imgs[j] == imgs[j + 1]]
    word: list[tuple[str, int, int]] = []
    dim = f.src
    for j in reversed(repeats):
        dim -= 1
        word.append((DEGENERACY, dim, j))
    missing = sorted(set(range(f.tgt + 1)) - set(imgs))
    for i in missing:
        dim += 1
        word.append((FACE, dim, i))
    return word


def recompose(word, n: int) -> OrdinalMap:
    """Compose a generator word (application order) starting from ``[n]``."""
    out = identity(n)
    for kind, k, i in word:
        out = compose_ordinal(generator(kind, k, i), out)
    return out


def count_monotone(n: int, m: int) -> int:
    return comb(n + m + 1, n + 1)


def iter_monotone(n: int, m: int) -> Iterator[OrdinalMap]:
    for images in combinations_with_replacement(range(m + 1), n + 1):
        yield OrdinalMap(n, m, images)


def enumerate_monotone(n: int, m: int, limit: int | None = None) -> list[OrdinalMap]:
    """All monotone maps ``[n] -> [m]`` in lexicographic order of images."""
    check_limit(count_monotone(n, m), limit, f"Mon([{n}],[{m}])")
    return list(iter_monotone(n, m))


def interval_dual(f: OrdinalMap) -> EndpointMap:
    """Interstice duality: ``[n]->[m]`` goes to ``[m+1]->[n+1]``.

    ``g(j)`` counts the vertices of ``[n]`` sent strictly below ``j``.
    """
    imgs = f.images
    return EndpointMap(f.tgt + 1, f.src + 1, tuple(sum(1 for v in imgs if v < j) for j in range(f.tgt + 2)))


def interval_dual_inv(g: EndpointMap) -> OrdinalMap:
    # f(i) is the number of interstices j >= 1 whose count does not exceed i
    n, m = g.tgt - 1, g.src - 1
    imgs = g.images
    return OrdinalMap(n, m, tuple(sum(1 for j in range(1, m + 2) if imgs[j] <= i) for i in range(n + 1)))


def compose_endpoint(g: EndpointMap, f: EndpointMap) -> EndpointMap:
    if f.tgt != g.src:
        raise DegreeMismatch(f"cannot compose [{g.src}]->[{g.tgt}] after [{f.src}]->[{f.tgt}]")
    return EndpointMap(f.src, g.tgt, tuple(g.images[v] for v in f.images))


def enumerate_endpoint(n: int, m: int) -> list[EndpointMap]:
    if n < 1 or m < 1:
        return []
    return [
        EndpointMap(n, m, (0,) + mid + (m,))
        for mid in combinations_with_replacement(range(m + 1), n - 1)
    ]


def check_simplicial_identities(N: int) -> list[str]:
    """Every failing cosimplicial identity among generators with target degree <= N."""
    bad = []
    c = compose_ordinal
    for n in range(1, N):
        # faces [n-1] -> [n+1]
        for j in range(n + 1):
            for i in range(j):
                if c(face(n + 1, j), face(n, i)) != c(face(n + 1, i), face(n, j - 1)):
                    bad.append(f"d{j} d{i} = d{i} d{j - 1} fails at n={n}")
    for n in range(N + 1):
        # degeneracies [n+2] -> [n]
        for j in range(n + 1):
            for i in range(j + 1):
                if c(degeneracy(n, j), degeneracy(n + 1, i)) != c(degeneracy(n, i), degeneracy(n + 1, j + 1)):
                    bad.append(f"s{j} s{i} = s{i} s{j + 1} fails at n={n}")
        # degeneracy after face: [n] -> [n+1] -> [n]
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = c(degeneracy(n, j), face(n + 1, i))
                if i < j:
                    rhs = c(face(n, i), degeneracy(n - 1, j - 1))
                elif i in (j, j + 1):
                    rhs = identity(n)
                else:
                    rhs = c(face(n, i - 1), degeneracy(n - 1, j))
                if lhs != rhs:
                    bad.append(f"s{j} d{i} identity fails at n={n}")
    return bad

"""Polygon triangulations and (2-)Segal conditions for finite presheaves.

"Equivalence" here means bijection of finite sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .delta import OrdinalMap
from .errors import InvalidTriangulation, ResourceLimit, TruncationExceeded, check_limit
from .presheaf import (
    FinCyclicSet,
    FinSimplicialSet,
    count_maps,
    evaluate_ordinal,
    representable_cyclic,
    spine,
    underlying_simplicial,
)

Triple = tuple[int, int, int]


@dataclass(frozen=True, order=True)
class Triangulation:
    """Triangles on the vertices ``0..n`` of a convex ``(n+1)``-gon."""

    n: int
    triangles: tuple[Triple, ...]

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.triangles]

    def edges(self) -> list[tuple[int, int]]:
        return sorted({e for a, b, c in self.triangles for e in ((a, b), (a, c), (b, c))})


def _crosses(e: tuple[int, int], f: tuple[int, int]) -> bool:
    (a, b), (c, d) = e, f
    return a < c < b < d or c < a < d < b


def make_triangulation(n: int, triangles: Iterable[Sequence[int]]) -> Triangulation:
    tris = []
    for tri in triangles:
        tri = tuple(int(v) for v in tri)
        if len(tri) != 3 or not 0 <= tri[0] < tri[1] < tri[2] <= n:
            raise InvalidTriangulation(f"{tri} is not an increasing triple in 0..{n}")
        tris.append(tri)
    tris = sorted(set(tris))
    if n < 2:
        raise InvalidTriangulation("a polygon needs n >= 2")
    if len(tris) != n - 1:
        raise InvalidTriangulation(f"expected {n - 1} distinct triangles, got {len(tris)}")
    edges = {e for a, b, c in tris for e in ((a, b), (a, c), (b, c))}
    for e, f in combinations(sorted(edges), 2):
        if _crosses(e, f):
            raise InvalidTriangulation(f"edges {e} and {f} cross")
    # interior-disjoint triangles of this count always tile the polygon
    return Triangulation(n, tuple(tris))


def as_triangulation(obj) -> Triangulation:
    if isinstance(obj, Triangulation):
        return make_triangulation(obj.n, obj.triangles)
    n, tris = obj
    return make_triangulation(n, tris)


def parse_triangles(text: str) -> list[Triple]:
    """Parse ``"a,b,c;d,e,f"``."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(tuple(int(v) for v in chunk.split(",")))
    return out


@lru_cache(maxsize=None)
def _tri_between(lo: int, hi: int) -> tuple[tuple[Triple, ...], ...]:
    if hi - lo < 2:
        return ((),)
    out = []
    for k in range(lo + 1, hi):
        for left in _tri_between(lo, k):
            for right in _tri_between(k, hi):
                out.append(tuple(sorted(left + right + ((lo, k, hi),))))
    return tuple(out)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def enumerate_triangulations(n: int, limit: int | None = None) -> list[Triangulation]:
    """All triangulations of the ``(n+1)``-gon, sorted."""
    if n < 2:
        raise InvalidTriangulation("a polygon needs n >= 2")
    check_limit(catalan(n - 1), limit, f"triangulations of the {n + 1}-gon")
    return sorted(Triangulation(n, tris) for tris in _tri_between(0, n))


def brute_force_triangulations(n: int) -> list[Triangulation]:
    """Independent oracle: all non-crossing ``(n-1)``-sets of triangles."""
    out = []
    for tris in combinations(combinations(range(n + 1), 3), n - 1):
        try:
            out.append(make_triangulation(n, tris))
        except InvalidTriangulation:
            pass
    return sorted(out)


def fan_triangulation(n: int, apex: int = 0) -> Triangulation:
    others = [(apex + k) % (n + 1) for k in range(1, n + 1)]
    return make_triangulation(n, [tuple(sorted((apex, a, b))) for a, b in zip(others, others[1:])])


# ---------------------------------------------------------------------------
# verdicts


BIJECTIVE = "bijective"
NOT_INJECTIVE = "not-injective"
NOT_SURJECTIVE = "not-surjective"


@dataclass
class Verdict:
    n: int
    verdict: str
    witness: object = None
    triangulation: Triangulation | None = None

    @property
    def ok(self) -> bool:
        return self.verdict == BIJECTIVE

    def to_json(self) -> dict:
        out = {"n": self.n}
        if self.triangulation is not None:
            out["triangulation"] = self.triangulation.to_json()
        out["verdict"] = self.verdict
        out["witness"] = _plain(self.witness)
        return out


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    return x


def _bijection_verdict(n: int, images: Sequence, codomain: list, T=None) -> Verdict:
    seen: dict = {}
    for x, y in enumerate(images):
        if y in seen:
            return Verdict(n, NOT_INJECTIVE, (seen[y], x), T)
        seen[y] = x
    for y in codomain:
        if y not in seen:
            return Verdict(n, NOT_SURJECTIVE, y, T)
    return Verdict(n, BIJECTIVE, None, T)


def _simplicial(X: FinSimplicialSet) -> FinSimplicialSet:
    return underlying_simplicial(X) if X.cyclic else X


def _edge_table(X, n, a, b):
    return evaluate_ordinal(X, OrdinalMap(1, n, (a, b)))


# ---------------------------------------------------------------------------
# Segal maps


def segal_map(X: FinSimplicialSet, n: int) -> list[tuple[int, ...]]:
    """``x -> (e_1, ..., e_n)`` with ``e_k`` the edge from vertex ``k-1`` to ``k``."""
    X = _simplicial(X)
    if n > X.N:
        raise TruncationExceeded(f"level {n} above truncation {X.N}")
    tabs = [_edge_table(X, n, k - 1, k) for k in range(1, n + 1)]
    return [tuple(t[x] for t in tabs) for x in range(X.card[n])]


def spine_fiber_product(X: FinSimplicialSet, n: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """Chains of ``n`` edges with matching endpoints, in lexicographic order."""
    X = _simplicial(X)
    d0, d1 = X.d[1][0], X.d[1][1]
    by_start: dict[int, list[int]] = {}
    for e in range(X.card[1]):
        by_start.setdefault(d1[e], []).append(e)
    chains = [(e,) for e in range(X.card[1])]
    for _ in range(n - 1):
        chains = [c + (e,) for c in chains for e in by_start.get(d0[c[-1]], [])]
        check_limit(len(chains), limit, "spine fiber product")
    return chains


def segal_check(X: FinSimplicialSet, n: int) -> Verdict:
    if n < 1:
        raise TruncationExceeded("Segal maps start at n = 1")
    return _bijection_verdict(n, segal_map(X, n), spine_fiber_product(X, n))


# ---------------------------------------------------------------------------
# 2-Segal maps


def triangulation_map(X: FinSimplicialSet, T: Triangulation) -> list[tuple[int, ...]]:
    """``x -> (x restricted to each triangle of T)``."""
    X = _simplicial(X)
    if T.n > X.N:
        raise TruncationExceeded(f"level {T.n} above truncation {X.N}")
    tabs = [evaluate_ordinal(X, OrdinalMap(2, T.n, tri)) for tri in T.triangles]
    return [tuple(t[x] for t in tabs) for x in range(X.card[T.n])]


def triangulation_limit(X: FinSimplicialSet, T: Triangulation, limit: int | None = None) -> list[tuple[int, ...]]:
    """Families of 2-simplices, one per triangle, agreeing on shared edges and vertices."""
    X = _simplicial(X)
    d2 = X.d[2]
    d1 = X.d[1]
    # faces of a 2-simplex on (a, b, c): d_2 -> ab, d_1 -> ac, d_0 -> bc
    out: list[tuple[int, ...]] = []
    tris = T.triangles
    edge_val: dict[tuple[int, int], int] = {}
    vert_val: dict[int, int] = {}

    def fits(tri, x, undo_e, undo_v) -> bool:
        a, b, c = tri
        for (u, v), face in (((a, b), 2), ((a, c), 1), ((b, c), 0)):
            e = d2[face][x]
            have = edge_val.get((u, v))
            if have is None:
                edge_val[u, v] = e
                undo_e.append((u, v))
            elif have != e:
                return False
            for w, vface in ((u, 1), (v, 0)):
                p = d1[vface][e]
                have = vert_val.get(w)
                if have is None:
                    vert_val[w] = p
                    undo_v.append(w)
                elif have != p:
                    return False
        return True

    def rec(i: int, acc: list[int]):
        if i == len(tris):
            out.append(tuple(acc))
            if limit is not None and len(out) > limit:
                raise ResourceLimit("too many families")
            return
        for x in range(X.card[2]):
            ue, uv = [], []
            if fits(tris[i], x, ue, uv):
                acc.append(x)
                rec(i + 1, acc)
                acc.pop()
            for key in ue:
                del edge_val[key]
            for key in uv:
                del vert_val[key]

    rec(0, [])
    return sorted(out)


def two_segal_check(X: FinSimplicialSet, T) -> Verdict:
    T = as_triangulation(T)
    return _bijection_verdict(T.n, triangulation_map(X, T), triangulation_limit(X, T), T)


@dataclass
class TwoSegalReport:
    max_n: int
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def to_json(self) -> dict:
        return {"max_n": self.max_n, "passed": self.ok, "checks": [v.to_json() for v in self.verdicts]}


def two_segal_report(X: FinSimplicialSet, N: int) -> TwoSegalReport:
    rep = TwoSegalReport(N)
    for n in range(3, N + 1):
        for T in enumerate_triangulations(n):
            rep.verdicts.append(two_segal_check(X, T))
    return rep


@dataclass
class SegalReport:
    max_n: int
    verdicts: list[Verdict] = field(default_factory=list)
    routes: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts) and all(r["agree"] for r in self.routes)

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "passed": self.ok,
            "checks": [v.to_json() for v in self.verdicts],
            "routes": self.routes,
        }


def segal_report(X: FinSimplicialSet, N: int) -> SegalReport:
    rep = SegalReport(N)
    for n in range(2, N + 1):
        rep.verdicts.append(segal_check(X, n))
    return rep


def cyclic_segal_check(X: FinCyclicSet, N: int) -> SegalReport:
    """Segal maps of the underlying simplicial set, cross-checked by counting maps.

    The second route counts maps out of ``Lambda[n]`` and ``Gamma(n)``; by
    Yoneda and the colimit description of ``Gamma(n)`` these must equal
    ``|X_n|`` and the size of the edge fiber product.
    """
    if N > X.N:
        raise TruncationExceeded(f"level {N} above truncation {X.N}")
    rep = segal_report(X, N)
    for n in range(2, N + 1):
        chains = len(spine_fiber_product(X, n))
        hom_rep = count_maps(representable_cyclic(n, X.N), X)
        hom_spine = count_maps(spine(n, X.N)[0], X)
        rep.routes.append({
            "n": n,
            "level": X.card[n],
            "chains": chains,
            "hom_representable": hom_rep,
            "hom_spine": hom_spine,
            "agree": hom_rep == X.card[n] and hom_spine == chains,
        })
    return rep

"""Doubly indexed presheaves: simplicial in ``j``, cyclic in ``k``.

Only what the generator maps need is provided: levelwise tables, identity
checks in each direction, commutation of the two actions, and inclusions.
"""

from __future__ import annotations

from itertools import product

from ..errors import IndexOutOfRange, TruncationTooLow
from .constructions import boundary_faces, cyclic_horn, representable_cyclic, representable_simplicial
from .core import FinCyclicSet, FinSimplicialSet, compose_tables


class FinBiPresheaf:
    """Levels ``Y[j][k]`` for ``j <= M`` and ``k <= N``.

    ``hor[k]`` is the simplicial set ``j -> Y[j][k]`` and ``ver[j]`` the
    cyclic set ``k -> Y[j][k]``; their level cardinalities must agree.
    """

    def __init__(self, hor: list[FinSimplicialSet], ver: list[FinCyclicSet]):
        self.hor = hor
        self.ver = ver
        self.M = len(ver) - 1
        self.N = len(hor) - 1
        self.card = [[ver[j].card[k] for k in range(self.N + 1)] for j in range(self.M + 1)]
        for k, row in enumerate(hor):
            if row.card != [self.card[j][k] for j in range(self.M + 1)]:
                raise IndexOutOfRange(f"row {k} has inconsistent level sizes")

    def validate(self) -> list[str]:
        bad = []
        for k, row in enumerate(self.hor):
            bad += [f"{p} (k={k})" for p in row.validate()]
        for j, col in enumerate(self.ver):
            bad += [f"{p} (j={j})" for p in col.validate()]
        # every simplicial operator commutes with every cyclic one
        for j, k in product(range(self.M + 1), range(self.N + 1)):
            for hkey, ha, hb, _ in self._hor_ops_at(j):
                for vkey, va, vb, _ in self._ver_ops_at(k):
                    lhs = compose_tables(self._h(hkey, vb), self._v(vkey, ha))
                    rhs = compose_tables(self._v(vkey, hb), self._h(hkey, va))
                    if lhs != rhs:
                        bad.append(f"{hkey} and {vkey} do not commute at ({j},{k})")
        return bad

    def _hor_ops_at(self, j):
        for key, a, b, tab in self.hor[0].operators():
            if a == j:
                yield key, a, b, tab

    def _ver_ops_at(self, k):
        for key, a, b, tab in self.ver[0].operators():
            if a == k:
                yield key, a, b, tab

    def _h(self, key, k):
        kind, n, i = key
        return self.hor[k].d[n][i] if kind == "d" else self.hor[k].s[n][i]

    def _v(self, key, j):
        kind, n, i = key
        col = self.ver[j]
        if kind == "d":
            return col.d[n][i]
        if kind == "s":
            return col.s[n][i]
        return col.t[n]


class BiPresheafMap:
    def __init__(self, source: FinBiPresheaf, target: FinBiPresheaf, levels):
        self.source = source
        self.target = target
        self.levels = [[tuple(t) for t in row] for row in levels]

    @property
    def is_injective(self) -> bool:
        return all(len(set(t)) == len(t) for row in self.levels for t in row)

    def problems(self) -> list[str]:
        bad = []
        S, T = self.source, self.target
        for k in range(S.N + 1):
            for key, a, b, tab in S.hor[k].operators():
                ttab = T._h(key, k)
                if compose_tables(self.levels[b][k], tab) != compose_tables(ttab, self.levels[a][k]):
                    bad.append(f"not natural for {key} at k={k}")
        for j in range(S.M + 1):
            for key, a, b, tab in S.ver[j].operators():
                ttab = T._v(key, j)
                if compose_tables(self.levels[j][b], tab) != compose_tables(ttab, self.levels[j][a]):
                    bad.append(f"not natural for {key} at j={j}")
        return bad


def _box(A: FinSimplicialSet, B: FinCyclicSet, copies: int) -> tuple[FinBiPresheaf, list]:
    """External product ``A x C x B`` with ``C`` a discrete set of ``copies`` points.

    Element ``(a, c, b)`` at level ``(j, k)`` has index ``(a * copies + c) * |B_k| + b``.
    """
    M, N = A.N, B.N

    def idx(j, k, a, c, b):
        return (a * copies + c) * B.card[k] + b

    hor = []
    for k in range(N + 1):
        card = [A.card[j] * copies * B.card[k] for j in range(M + 1)]
        elems = lambda j: product(range(A.card[j]), range(copies), range(B.card[k]))  # noqa: E731
        d = [[tuple(idx(j - 1, k, tab[a], c, b) for a, c, b in elems(j)) for tab in A.d[j]] for j in range(M + 1)]
        s = [[tuple(idx(j + 1, k, tab[a], c, b) for a, c, b in elems(j)) for tab in A.s[j]] for j in range(M + 1)]
        hor.append(FinSimplicialSet(card, d, s))
    ver = []
    for j in range(M + 1):
        card = [A.card[j] * copies * B.card[k] for k in range(N + 1)]
        elems = lambda k: product(range(A.card[j]), range(copies), range(B.card[k]))  # noqa: E731
        d = [[tuple(idx(j, k - 1, a, c, tab[b]) for a, c, b in elems(k)) for tab in B.d[k]] for k in range(N + 1)]
        s = [[tuple(idx(j, k + 1, a, c, tab[b]) for a, c, b in elems(k)) for tab in B.s[k]] for k in range(N + 1)]
        t = [tuple(idx(j, k, a, c, B.t[k][b]) for a, c, b in elems(k)) for k in range(N + 1)]
        ver.append(FinCyclicSet(card, d, s, t))
    return FinBiPresheaf(hor, ver), idx


def _sub(Y: FinBiPresheaf, keep: list[list[list[int]]]) -> tuple[FinBiPresheaf, BiPresheafMap]:
    from .constructions import restrict

    M, N = Y.M, Y.N
    hor = [restrict(Y.hor[k], [keep[j][k] for j in range(M + 1)])[0] for k in range(N + 1)]
    ver = [restrict(Y.ver[j], [keep[j][k] for k in range(N + 1)])[0] for j in range(M + 1)]
    S = FinBiPresheaf(hor, ver)
    return S, BiPresheafMap(S, Y, [[tuple(keep[j][k]) for k in range(N + 1)] for j in range(M + 1)])


def biproduct_generator(m: int, n: int, which: str = "reedy-cof", truncs: tuple[int, int] = (2, 2),
                        k: int | None = None) -> BiPresheafMap:
    """Pushout-product inclusion into ``Delta[m] x C_{n+1} x Lambda[n]``.

    ``reedy-cof`` uses the source ``dDelta[m] x C x Lambda[n]  u  Delta[m] x C x dLambda[n]``;
    ``reedy-acof`` replaces ``dDelta[m]`` by the horn omitting face ``k``.
    The group factor is a discrete set with trivial actions.
    """
    M, N = truncs
    if m < 0 or n < 0:
        raise IndexOutOfRange("m and n must be non-negative")
    if M < m or N < n:
        raise TruncationTooLow(f"truncations {truncs} below ({m}, {n})")
    if which == "reedy-cof":
        left = boundary_faces(m, M, flavor="simplicial")
    elif which == "reedy-acof":
        if k is None or m < 1 or not 0 <= k <= m:
            raise IndexOutOfRange(f"horn ({m}, {k}) needs m >= 1 and 0 <= k <= m", index=k)
        left = cyclic_horn(m, k, M, flavor="simplicial")
    else:
        raise ValueError(f"unknown generator family {which!r}")
    right = boundary_faces(n, N, flavor="cyclic")
    A = representable_simplicial(m, M)
    B = representable_cyclic(n, N)
    target, idx = _box(A, B, n + 1)
    in_left = [set(t) for t in left.levels]
    in_right = [set(t) for t in right.levels]
    keep = [[sorted(idx(j, kk, a, c, b)
                    for a in range(A.card[j]) for c in range(n + 1) for b in range(B.card[kk])
                    if a in in_left[j] or b in in_right[kk])
             for kk in range(N + 1)] for j in range(M + 1)]
    return _sub(target, keep)[1]
